#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include "mobius/acceptance.hpp"

// Usage: mobius-acceptance [--threads N] [--only i,j,...] [--json]
int main(int argc, char** argv) {
    mobius::AcceptanceOptions opt;
    bool json = false;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--threads" && i + 1 < argc) {
            opt.threads = std::atoi(argv[++i]);
        } else if (arg == "--only" && i + 1 < argc) {
            std::string list = argv[++i];
            for (std::size_t pos = 0; pos < list.size();) {
                const auto comma = list.find(',', pos);
                opt.only.insert(std::stoi(list.substr(pos, comma - pos)));
                pos = comma == std::string::npos ? list.size() : comma + 1;
            }
        } else if (arg == "--json") {
            json = true;
        } else {
            std::cerr << "unknown argument " << arg << "\n";
            return 2;
        }
    }
    if (!json)
        opt.on_result = [](const mobius::CriterionResult& r) {
            std::cout << mobius::manifest_text({r}) << std::flush;
        };
    const auto results = mobius::run_acceptance(opt);
    if (json) std::cout << mobius::manifest_json(results) << "\n";
    int failed = 0;
    for (const auto& r : results) failed += !r.passed;
    if (!json) std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
