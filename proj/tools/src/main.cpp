#include <cstdio>

#include "iwasawa/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const auto outcome = iwasawa::cli::run(args);
    if (!outcome.err.empty()) std::fputs(outcome.err.c_str(), stderr);
    std::fwrite(outcome.out.data(), 1, outcome.out.size(), stdout);
    std::fflush(stdout);
    return outcome.exit_code;
}
