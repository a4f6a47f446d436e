// Acceptance suite: one line per verified claim, nonzero exit on any failure.
#include <cstring>
#include <iostream>
#include <string>

#include "core/claims.hpp"

int main(int argc, char** argv) {
    std::string tier = "core";
    unsigned seed = 0;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--tier" && i + 1 < argc) {
            tier = argv[++i];
        } else if (arg == "--seed" && i + 1 < argc) {
            seed = static_cast<unsigned>(std::stoul(argv[++i]));
        } else {
            std::cerr << "usage: acceptance [--tier core|full] [--seed N]\n";
            return 2;
        }
    }
    dessin::VerifyReport report;
    try {
        report = dessin::run_verify(tier, seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    for (const auto& r : report.results) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << "  "
                  << r.description << "\n";
        if (!r.detail.empty()) std::cout << "       " << r.detail << "\n";
    }
    std::cout << (report.failures ? "FAILED" : "OK") << ": "
              << report.results.size() - report.failures << "/"
              << report.results.size() << " claims passed (tier " << tier
              << ")\n";
    return report.failures ? 1 : 0;
}
