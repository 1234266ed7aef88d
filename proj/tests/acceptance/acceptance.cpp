// Acceptance battery: one line per criterion, nonzero exit when any fails.
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#include "battery.hpp"

int main(int argc, char** argv)
{
    std::uint64_t seed = 20240611;
    std::string summary;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--seed" && i + 1 < argc)
            seed = std::stoull(argv[++i]);
        else if (arg == "--out" && i + 1 < argc)
            summary = argv[++i];
    }
    const auto results = umbral::acceptance::run_battery(seed, true);
    for (const auto& r : results)
        std::cout << umbral::acceptance::format_line(r) << '\n';
    if (!summary.empty())
        umbral::acceptance::write_summary(results, summary);
    return umbral::acceptance::all_pass(results) ? EXIT_SUCCESS : EXIT_FAILURE;
}
