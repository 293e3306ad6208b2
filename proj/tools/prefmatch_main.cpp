#include <cstdlib>
#include <fstream>
#include <iostream>

#include "prefmatch/cli.hpp"

int main(int argc, char** argv) {
    using namespace prefmatch::cli;

    std::optional<std::string> env_seed;
    if (const char* s = std::getenv("NETCTRL_SEED")) env_seed = s;

    int status = kExitOk;
    std::string message;
    auto config = parse_args(argc, argv, env_seed, status, message);
    if (!config) {
        (status == kExitOk ? std::cout : std::cerr) << message << '\n';
        return status;
    }

    auto report = run(*config);
    if (report.status != kExitOk) {
        std::cerr << kToolName << ": " << report.diagnostic << '\n';
        return report.status;
    }
    if (config->out) {
        std::ofstream out(*config->out, std::ios::binary);
        if (!(out << report.document)) {
            std::cerr << kToolName << ": cannot write '" << *config->out << "'\n";
            return kExitUnreadable;
        }
    } else {
        std::cout << report.document;
    }
    return kExitOk;
}
