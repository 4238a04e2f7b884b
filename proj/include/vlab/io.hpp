#pragma once

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace vlab::io {

/// Filesystem-level failure (cannot open/flush an output file).
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double value);

/// Writer for the project-wide table format: one '#'-prefixed JSON metadata
/// line, a CSV header, then rows. '\n' endings and round-trip float
/// formatting keep byte-identical output across runs with equal config.
class CsvWriter {
public:
    CsvWriter(const std::filesystem::path& path, const nlohmann::json& metadata,
              const std::vector<std::string>& columns);
    CsvWriter(std::ostream& out, const nlohmann::json& metadata,
              const std::vector<std::string>& columns);

    void row(std::span<const double> values);
    void row(std::initializer_list<double> values);
    void raw_row(const std::vector<std::string>& cells);

    /// Flushes and reports failures; also called by the destructor (which
    /// swallows errors, so call close() when the result matters).
    void close();

    ~CsvWriter();

    CsvWriter(const CsvWriter&) = delete;
    CsvWriter& operator=(const CsvWriter&) = delete;

private:
    void write_prelude(const nlohmann::json& metadata,
                       const std::vector<std::string>& columns);

    std::ofstream file_;
    std::ostream* out_;
    std::filesystem::path path_;
    std::size_t n_columns_;
    bool closed_{false};
};

/// First line of a snapshot/table stream parsed back to JSON; throws
/// IoError if the '#' metadata line is missing or malformed.
nlohmann::json read_metadata_line(std::istream& in);

} // namespace vlab::io
