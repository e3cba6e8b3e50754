#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "loewy/session.hpp"

int main(int argc, char** argv) {
    CLI::App app{"local ring invariants and inequality checks"};
    app.set_version_flag("--version", loewy::kToolVersion);

    std::string file;
    std::uint64_t seed = 0;
    int truncation = 0;
    std::string format = "json";
    int jobs = 0;
    app.add_option("file", file, "session script; reads stdin when omitted or '-'");
    app.add_option("--seed", seed, "seed for randomized sampling (default 0)");
    app.add_option("--truncation", truncation, "override the per-ring scan depth")
        ->check(CLI::Range(1, 1000));
    app.add_option("--format", format, "json or table")
        ->check(CLI::IsMember({"json", "table"}));
    app.add_option("--jobs", jobs, "fuzz worker threads, 0 means the OpenMP default")
        ->check(CLI::Range(0, 256));
    CLI11_PARSE(app, argc, argv);

    std::string text;
    if (file.empty() || file == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(file);
        if (!in) {
            std::cerr << "error: cannot open '" << file << "'\n";
            return 2;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }

    loewy::SessionOptions opt;
    opt.seed = seed;
    if (truncation > 0) opt.truncation = static_cast<unsigned>(truncation);
    opt.format = format;
    opt.jobs = jobs;

    loewy::SessionResult res = loewy::run_session(text, opt);
    for (const std::string& d : res.documents) std::cout << d;
    for (const std::string& w : res.warnings) std::cerr << w << "\n";
    return res.exit_code;
}
