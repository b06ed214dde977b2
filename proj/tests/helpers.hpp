#pragma once

#include "json.hpp"

#include <array>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

namespace testutil {

namespace fs = std::filesystem;

inline fs::path source_dir() { return fs::path(ZIPFSTAT_SOURCE_DIR); }
inline fs::path oracle_dir() { return source_dir() / "tests" / "oracle"; }
inline fs::path data_dir() { return source_dir() / "data"; }
inline std::string cli_path() { return ZIPFSTAT_CLI_PATH; }

inline nlohmann::json load_json(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("missing test fixture: " + path.string());
    return nlohmann::json::parse(in);
}

inline std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void spit(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) throw std::runtime_error("cannot write: " + path.string());
}

// Fresh directory under the system tmpdir; removed on destruction.
class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        static std::atomic<unsigned> counter{0};
        path_ = fs::temp_directory_path() /
                ("zipfstat_" + tag + "_" + std::to_string(::getpid()) + "_" +
                 std::to_string(counter++));
        fs::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    const fs::path& path() const { return path_; }
    fs::path file(const std::string& name) const { return path_ / name; }

private:
    fs::path path_;
};

struct CliResult {
    int exit_code;
    std::string out;
};

// Runs the CLI with stderr routed to /dev/null unless the caller wants it.
inline CliResult run_cli(const std::string& args, bool keep_stderr = false) {
    const std::string cmd =
        cli_path() + " " + args + (keep_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed: " + cmd);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = ::pclose(pipe);
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

} // namespace testutil
