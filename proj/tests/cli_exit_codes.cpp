// Drives the installed binary through its exit-code contract:
// 0 success, 2 usage, 3 I/O, 4 numerical domain. Takes the binary path as
// argv[1] (wired up by CMake).

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

namespace {

int failures = 0;

int run(const std::string& command) {
    const int status = std::system(command.c_str());
    if (status < 0) {
        return -1;
    }
    return WEXITSTATUS(status);
}

void expect(const std::string& command, int expected) {
    const int got = run(command + " > /dev/null 2>&1");
    if (got == expected) {
        std::cout << "PASS  exit " << expected << "  <- " << command << '\n';
    } else {
        std::cout << "FAIL  expected exit " << expected << ", got " << got
                  << "  <- " << command << '\n';
        ++failures;
    }
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_exit_codes <path-to-vlab-binary>\n";
        return 2;
    }
    const std::string vlab = argv[1];
    const auto dir = std::filesystem::temp_directory_path() / "vlab_exit_codes";
    std::filesystem::create_directories(dir);
    const std::string out = (dir / "run").string();

    expect(vlab + " list", 0);
    expect(vlab + " check", 0);
    expect(vlab + " run slits --n-points 401 --out " + out, 0);
    expect(vlab + " run bogus", 2);
    expect(vlab + " run lattice --no-such-flag 1", 2);
    expect(vlab + " run lattice --n-sites nine", 2);
    expect(vlab + " run slits --out /nonexistent-dir/deeper/x", 3);
    expect(vlab + " run lattice --d -1 --out " + out, 4);
    expect(vlab + " run slits --L 0.005 --out " + out, 4); // near field
    expect(vlab + " run lattice --boundary sideways --out " + out, 2);

    std::error_code ec;
    std::filesystem::remove_all(dir, ec);
    return failures == 0 ? 0 : 1;
}
