#include "doctest.h"

#include "cusp/gw222.hpp"
#include "cusp/report.hpp"

using namespace cusp;
using namespace cusp::cli;
using exactnum::CycloNumber;

namespace {

void check_round_trip(const Report& r)
{
    const nlohmann::json j = to_json(r);
    CHECK(j.at("schema") == kSchema);
    const Report back = report_from_json(nlohmann::json::parse(j.dump()));
    CHECK(back == r);
    CHECK(to_json(back).dump() == j.dump());
}

} // namespace

TEST_CASE("cli: classify")
{
    Report r = cmd_classify(checked_triple(2, 2, 2));
    CHECK(r.payload.at("type") == "D4");
    CHECK(r.payload.at("kappa") == 4);
    CHECK(r.payload.at("positive_count") == 12);
    CHECK(r.payload.at("N") == 4);
    CHECK(r.payload.at("chi") == "1/2");
    check_round_trip(r);

    r = cmd_classify(checked_triple(5, 3, 2));
    CHECK(r.triple == std::array<int, 3>{2, 3, 5});
    CHECK(r.payload.at("type") == "E8");
    CHECK(r.payload.at("kappa") == 60);

    try {
        checked_triple(3, 3, 3);
        FAIL("expected a usage error");
    } catch (const UsageError& e) {
        CHECK(std::string(e.what()) == "chi = 0 not Fano");
    }
    CHECK_THROWS_AS(checked_triple(0, 2, 2), UsageError);
}

TEST_CASE("cli: verify")
{
    Report r = cmd_verify(checked_triple(2, 2, 2), "hqe");
    CHECK(r.pass);
    bool found = false;
    for (const auto& s : r.payload.at("summary")) {
        found = found || s == "sum_a_alpha = 3/8";
    }
    CHECK(found);
    CHECK(cyclo_from_json(r.payload.at("sum_a_alpha")) == CycloNumber(exactnum::make_rational(3, 8)));
    check_round_trip(r);

    r = cmd_verify(checked_triple(2, 3, 4), "roots");
    CHECK(r.pass);
    CHECK(r.payload.at("root_count") == 126);

    r = cmd_verify(checked_triple(1, 1, 1), "all");
    CHECK_MESSAGE(r.pass, (r.witnesses.empty() ? std::string() : r.witnesses.front()));
    CHECK(exit_code(r) == ExitCode::Pass);
    CHECK_THROWS_AS(cmd_verify(checked_triple(2, 2, 2), "bogus"), UsageError);
}

TEST_CASE("cli: potential")
{
    Report r = cmd_potential(4, false, gw222::kSeedQuartic);
    CHECK(r.pass);
    CHECK(r.payload.at("degrees").size() == 5);
    CHECK(r.payload.at("four_point") == "1/4");
    check_round_trip(r);

    r = cmd_potential(8, true, gw222::kWdvvQuartic);
    CHECK(r.pass);
    for (int d = 5; d <= 8; ++d) {
        CHECK(r.payload.at("degrees").at(d).at("recursion") == "0");
    }

    r = cmd_potential(8, true, gw222::kSeedQuartic);
    CHECK_FALSE(r.pass);
    CHECK(exit_code(r) == ExitCode::Failure);
    CHECK(r.payload.at("wdvv").at("failing_degree") == 1);

    CHECK_THROWS_AS(cmd_potential(0, false, gw222::kSeedQuartic), UsageError);
}

TEST_CASE("cli: report")
{
    Report r = cmd_report(checked_triple(2, 2, 2));
    CHECK(r.pass);
    CHECK(r.payload.at("constant") == "3/8");
    CHECK(r.payload.at("exponent_lattice") == nlohmann::json{"2", "4", "6", "8", "10", "12"});
    check_round_trip(r);
    // deterministic output
    CHECK(to_json(cmd_report(checked_triple(2, 2, 2))).dump() == to_json(r).dump());

    r = cmd_report(checked_triple(1, 1, 1));
    CHECK(r.payload.at("roots").size() == 2);
}

TEST_CASE("cli: json helpers")
{
    const CycloNumber z = exactnum::cyclo(8, 3) + CycloNumber(exactnum::make_rational(-2, 7));
    CHECK(cyclo_from_json(cyclo_json(z)) == z);
    CHECK(rational_from_json(rational_json(exactnum::make_rational(-5, 12))) == exactnum::make_rational(-5, 12));
    CHECK_THROWS_AS(report_from_json(nlohmann::json{{"schema", "other/1"}}), std::invalid_argument);
    CHECK_THROWS_AS(report_from_json(nlohmann::json{{"schema", kSchema}}), std::invalid_argument);
}
