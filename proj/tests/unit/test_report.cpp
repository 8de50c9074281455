#include "klein/arith/scalar_text.hpp"
#include "klein/report/report.hpp"

#include <doctest.h>

#include <map>

using namespace klein;

namespace {

SuiteOptions untimed()
{
    SuiteOptions o;
    o.timing = false;
    return o;
}

const VerificationReport& cached(const std::string& name)
{
    static std::map<std::string, VerificationReport> reports;
    auto it = reports.find(name);
    if (it == reports.end()) it = reports.emplace(name, run_suite(name, untimed())).first;
    return it->second;
}

}  // namespace

TEST_CASE("lattice suite")
{
    const VerificationReport& r = cached("lattice");
    const CheckResult* c = r.find("pfaffian-j2");
    REQUIRE(c);
    CHECK(c->expected == "1");
    CHECK(c->status == CheckStatus::pass);
    CHECK_FALSE(r.any_failed());
    REQUIRE(r.data.contains("lattice"));
    CHECK(r.data["lattice"].contains("pfaffian"));
    CHECK(r.data["lattice"].contains("gram_lambda2"));
}

TEST_CASE("ns suite")
{
    const VerificationReport& r = cached("ns");
    const CheckResult* c = r.find("gram25-det");
    REQUIRE(c);
    CHECK(c->expected == "103749698404");
    CHECK(c->computed == "103749698404");
    CHECK_FALSE(r.any_failed());
}

TEST_CASE("all is the concatenation of the suites")
{
    const VerificationReport& all = cached("all");
    std::size_t total = 0;
    std::vector<std::string> ids;
    for (const auto& name : suite_names()) {
        const VerificationReport& r = cached(name);
        total += r.checks.size();
        for (const auto& c : r.checks) ids.push_back(c.id);
    }
    REQUIRE(all.checks.size() == total);
    for (std::size_t i = 0; i < total; ++i) CHECK(all.checks[i].id == ids[i]);
    CHECK(exit_code(all) == 0);
}

TEST_CASE("reports are deterministic without timing")
{
    const std::string a = to_json(run_suite("order7", untimed())).dump();
    const std::string b = to_json(run_suite("order7", untimed())).dump();
    CHECK(a == b);
    SuiteOptions other = untimed();
    other.seed = 5;
    CHECK(to_json(run_suite("group-order", other))["seed"] == 5);
}

TEST_CASE("json schema")
{
    const auto j = to_json(cached("group-order"));
    for (const char* k : {"suite", "version", "seed", "checks"}) CHECK(j.contains(k));
    REQUIRE(!j["checks"].empty());
    for (const char* k : {"id", "status", "expected", "computed", "ms"}) CHECK(j["checks"][0].contains(k));
    CHECK(j["checks"][0]["ms"] == 0);
    CHECK(j["suite"] == "group-order");
}

TEST_CASE("exit codes")
{
    VerificationReport r;
    r.checks.push_back({"a", CheckStatus::pass, "1", "1", 0});
    r.checks.push_back({"b", CheckStatus::evidence_only, "singular", "singular", 0});
    CHECK(exit_code(r) == 0);
    r.checks.push_back({"c", CheckStatus::fail, "1", "2", 0});
    CHECK(exit_code(r) == 1);
    CHECK_THROWS_AS(run_suite("bogus", untimed()), UsageError);
}

TEST_CASE("fibration queries")
{
    const auto one = fibration_query("1,0,0,0,0", std::nullopt);
    CHECK(one["connected"] == true);
    CHECK(one["genus"] == "661");
    const auto scaled = fibration_query("1+2*nu,0,0,0,0", std::nullopt);
    CHECK(scaled["representative"] == "1,0,0,0,0");
    CHECK(scaled["factor"] == "1+2*nu");
    CHECK(fibration_query("1,0,0,0,0", std::string("1,0,0,0,0"))["intersection"] == "0");
    CHECK_THROWS_AS(fibration_query("1,0,0", std::nullopt), std::invalid_argument);
    CHECK_THROWS_AS(fibration_query("0,0,0,0,0", std::nullopt), std::invalid_argument);
    CHECK_THROWS_AS(fibration_query("1,0,0,nu*nu,0", std::nullopt), ParseError);
}

TEST_CASE("smoothness queries")
{
    CHECK(smooth_query("x1*x5^2=1;x5*x3^2=1;x3*x4^2=1;x4*x2^2=1;x2*x1^2=1", 10007)["smooth"] == true);
    const auto s = smooth_query("x1^3=1", 0);
    CHECK(s["smooth"] == false);
    CHECK(s["support_certificate"] == "coordinate-point");
}
