// Standalone property runner:  klein_properties [--seed N]

#include "support/properties.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>

int main(int argc, char** argv)
{
    CLI::App app{"Property checks for the exact arithmetic and the oracles"};
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "Seed for the random generators")->capture_default_str();
    CLI11_PARSE(app, argc, argv);

    int failed = 0;
    for (auto& run : {klein::testing::hnf_canonicity_z, klein::testing::hnf_canonicity_znu,
                      klein::testing::gcd_box, klein::testing::pairing_symmetry,
                      klein::testing::sublattice_index_law, klein::testing::determinant_unimodular_invariance,
                      klein::testing::smoothness_linear_invariance, klein::testing::certificate_soundness}) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto r = run(seed);
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (r.ok() ? "PASS " : "FAIL ") << r.name << "  (" << r.cases << " cases, " << ms << " ms)\n";
        if (!r.ok()) {
            ++failed;
            std::cout << "     first failure: " << r.first_failure << '\n';
        }
    }
    const auto box = klein::testing::euclidean_division_box();
    std::cout << (box.ok() ? "PASS " : "FAIL ") << box.name << "  (" << box.cases << " cases)\n";
    if (!box.ok()) {
        ++failed;
        std::cout << "     first failure: " << box.first_failure << '\n';
    }
    return failed ? 1 : 0;
}
