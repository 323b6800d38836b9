#pragma once

// Runs the pbn binary and loads the golden command script. Shared by the CLI
// tests and the acceptance suite.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pbn_test {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

inline RunResult run_pbn(const std::string& args)
{
    std::string cmd = std::string(PBN_BINARY) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        throw std::runtime_error("popen failed for " + cmd);
    RunResult res;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        res.out.append(buf.data(), n);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

struct GoldenCase {
    std::string name;
    std::string args;
};

inline std::vector<GoldenCase> load_script()
{
    std::ifstream in(std::string(PBN_GOLDEN_DIR) + "/commands.txt");
    if (!in)
        throw std::runtime_error("cannot open golden command script");
    std::vector<GoldenCase> cases;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw std::runtime_error("malformed script line: " + line);
        cases.push_back({line.substr(0, tab), line.substr(tab + 1)});
    }
    return cases;
}

inline std::string golden_path(const GoldenCase& c)
{
    return std::string(PBN_GOLDEN_DIR) + "/" + c.name + ".json";
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace pbn_test
