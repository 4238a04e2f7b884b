#include "vlab/io.hpp"

#include <charconv>
#include <system_error>

namespace vlab::io {

std::string format_double(double value) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), value);
    if (res.ec != std::errc()) {
        throw IoError("failed to format floating-point value");
    }
    return std::string(buf, res.ptr);
}

CsvWriter::CsvWriter(const std::filesystem::path& path,
                     const nlohmann::json& metadata,
                     const std::vector<std::string>& columns)
    : path_(path), n_columns_(columns.size()) {
    file_.open(path, std::ios::binary | std::ios::trunc);
    if (!file_) {
        throw IoError("cannot open output file: " + path.string());
    }
    out_ = &file_;
    write_prelude(metadata, columns);
}

CsvWriter::CsvWriter(std::ostream& out, const nlohmann::json& metadata,
                     const std::vector<std::string>& columns)
    : out_(&out), n_columns_(columns.size()) {
    write_prelude(metadata, columns);
}

void CsvWriter::write_prelude(const nlohmann::json& metadata,
                              const std::vector<std::string>& columns) {
    *out_ << '#' << metadata.dump() << '\n';
    for (std::size_t i = 0; i < columns.size(); ++i) {
        *out_ << (i ? "," : "") << columns[i];
    }
    *out_ << '\n';
}

void CsvWriter::row(std::span<const double> values) {
    if (values.size() != n_columns_) {
        throw IoError("row width does not match column count");
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        *out_ << (i ? "," : "") << format_double(values[i]);
    }
    *out_ << '\n';
}

void CsvWriter::row(std::initializer_list<double> values) {
    row(std::span<const double>(values.begin(), values.size()));
}

void CsvWriter::raw_row(const std::vector<std::string>& cells) {
    if (cells.size() != n_columns_) {
        throw IoError("row width does not match column count");
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
        *out_ << (i ? "," : "") << cells[i];
    }
    *out_ << '\n';
}

void CsvWriter::close() {
    if (closed_) {
        return;
    }
    closed_ = true;
    out_->flush();
    if (!*out_) {
        throw IoError("write failed: " + path_.string());
    }
    if (file_.is_open()) {
        file_.close();
        if (!file_) {
            throw IoError("close failed: " + path_.string());
        }
    }
}

CsvWriter::~CsvWriter() {
    try {
        close();
    } catch (const IoError&) {
        // destructor must not throw; callers needing the error call close()
    }
}

nlohmann::json read_metadata_line(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line.empty() || line[0] != '#') {
        throw IoError("missing '#' metadata line");
    }
    auto parsed = nlohmann::json::parse(line.substr(1), nullptr, false);
    if (parsed.is_discarded()) {
        throw IoError("malformed JSON metadata line");
    }
    return parsed;
}

} // namespace vlab::io
