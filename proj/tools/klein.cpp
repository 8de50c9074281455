// Command-line driver.
//
//   klein verify <suite> [--json] [--out FILE] [--seed N] [--samples N] [--prime P]
//   klein --suite <suite> ...
//   klein fibration --l "1,0,0,0,0" [--l2 "..."]
//   klein smooth --cubic "x1^2*x2=1;..."
//
// Exit status: 0 all checks passed, 1 some check failed, 2 usage error.

#include "klein/arith/scalar_text.hpp"
#include "klein/report/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr int kUsage = 2;

void print_text(const klein::VerificationReport& r)
{
    for (const auto& c : r.checks) {
        std::cout << (c.status == klein::CheckStatus::pass            ? "PASS     "
                      : c.status == klein::CheckStatus::evidence_only ? "EVIDENCE "
                                                                      : "FAIL     ")
                  << c.id << "  " << c.computed;
        if (c.status == klein::CheckStatus::fail) std::cout << "  (expected " << c.expected << ")";
        std::cout << '\n';
    }
    std::size_t failed = 0;
    for (const auto& c : r.checks) failed += c.status == klein::CheckStatus::fail;
    std::cout << r.checks.size() << " checks, " << failed << " failed\n";
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact verification of the Klein cubic threefold computations"};
    app.require_subcommand(0, 1);

    std::string suite;
    bool as_json = false;
    bool no_timing = false;
    std::string out_path;
    std::uint64_t seed = 0;
    int samples = 25;
    std::uint64_t prime = 10007;

    auto add_common = [&](CLI::App* a) {
        a->add_flag("--json", as_json, "Print the report as JSON");
        a->add_option("--out", out_path, "Also write the JSON report to this file");
        a->add_option("--seed", seed, "Seed for sampled checks")->capture_default_str();
        a->add_option("--samples", samples, "Members sampled per uncertified eigenspace")->capture_default_str();
        a->add_option("--prime", prime, "Prime for the modular smoothness pre-pass (0 disables)")->capture_default_str();
        a->add_flag("--no-timing", no_timing, "Write ms = 0 in every check");
    };
    add_common(&app);
    app.add_option("--suite", suite, "Suite to run: lattice, ns, order7, order11, group-order, all");

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite,--suite", suite, "lattice, ns, order7, order11, group-order or all");
    add_common(verify);

    std::string l1;
    std::optional<std::string> l2;
    auto* fibration = app.add_subcommand("fibration", "Normalize a fibration form and report its invariants");
    fibration->add_option("--l", l1, "Five comma-separated coordinates in Q(nu)")->required();
    fibration->add_option("--l2", l2, "Second form; its intersection with the first is reported");

    std::string cubic;
    auto* smooth = app.add_subcommand("smooth", "Decide smoothness of a cubic threefold");
    smooth->add_option("--cubic", cubic, "Terms like \"x1^2*x2=1;x3^3=-2\"")->required();
    smooth->add_option("--prime", prime, "Prime for the modular pre-pass (0 disables)")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (*fibration) {
            std::cout << klein::fibration_query(l1, l2).dump(2) << '\n';
            return 0;
        }
        if (*smooth) {
            std::cout << klein::smooth_query(cubic, prime).dump(2) << '\n';
            return 0;
        }
        if (suite.empty()) {
            std::cerr << "no suite given\n" << app.help();
            return kUsage;
        }
        klein::SuiteOptions opts;
        opts.seed = seed;
        opts.samples = samples;
        opts.prime = prime;
        opts.timing = !no_timing;
        const klein::VerificationReport report = klein::run_suite(suite, opts);
        const std::string text = klein::to_json(report).dump(2) + "\n";
        if (!out_path.empty()) {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) {
                std::cerr << "cannot write " << out_path << '\n';
                return kUsage;
            }
            out << text;
        }
        if (as_json)
            std::cout << text;
        else
            print_text(report);
        return klein::exit_code(report);
    } catch (const klein::ParseError& e) {
        std::cerr << "parse error " << e.what() << '\n';
        return kUsage;
    } catch (const klein::UsageError& e) {
        std::cerr << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
