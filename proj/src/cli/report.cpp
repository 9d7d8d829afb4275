#include "cusp/report.hpp"

#include "cusp/cocycle.hpp"
#include "cusp/gw222.hpp"
#include "cusp/hqe.hpp"
#include "cusp/kgamma.hpp"
#include "cusp/periods.hpp"

#include <algorithm>
#include <sstream>

namespace cusp::cli {

using nlohmann::json;

json rational_json(const Rational& r)
{
    return exactnum::to_string(r);
}

Rational rational_from_json(const json& j)
{
    return exactnum::parse_rational(j.get<std::string>());
}

json cyclo_json(const CycloNumber& c)
{
    json coeffs = json::array();
    for (const auto& x : c.coeffs()) {
        coeffs.push_back(rational_json(x));
    }
    return {{"order", c.order()}, {"coeffs", coeffs}};
}

CycloNumber cyclo_from_json(const json& j)
{
    std::vector<Rational> coeffs;
    for (const auto& x : j.at("coeffs")) {
        coeffs.push_back(rational_from_json(x));
    }
    return CycloNumber::from_powers(j.at("order").get<int>(), coeffs);
}

json to_json(const Report& r)
{
    json j;
    j["schema"] = kSchema;
    j["command"] = r.command;
    j["triple"] = r.triple ? json(*r.triple) : json(nullptr);
    j["status"] = r.pass ? "pass" : "fail";
    j["payload"] = r.payload;
    j["witnesses"] = r.witnesses;
    return j;
}

Report report_from_json(const json& j)
{
    if (!j.is_object() || j.value("schema", "") != kSchema) {
        throw std::invalid_argument("not a cusp-hierarchy/1 report");
    }
    Report r;
    try {
        r.command = j.at("command").get<std::string>();
        if (!j.at("triple").is_null()) {
            r.triple = j.at("triple").get<std::array<int, 3>>();
        }
        const std::string status = j.at("status").get<std::string>();
        if (status != "pass" && status != "fail") {
            throw std::invalid_argument("status must be pass or fail");
        }
        r.pass = status == "pass";
        r.payload = j.at("payload");
        r.witnesses = j.at("witnesses").get<std::vector<std::string>>();
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed report: ") + e.what());
    }
    return r;
}

std::array<int, 3> checked_triple(int a1, int a2, int a3)
{
    std::array<int, 3> t{a1, a2, a3};
    std::sort(t.begin(), t.end());
    try {
        make_triple(t[0], t[1], t[2]);
    } catch (const TripleError& e) {
        throw UsageError(e.what());
    }
    return t;
}

namespace {

RootSystem system_of(const std::array<int, 3>& t)
{
    return RootSystem::build(Orbifold::build(t[0], t[1], t[2]));
}

json exponents_json(const Orbifold& orb, const std::vector<Rational>& m)
{
    json out = json::array();
    for (std::size_t i = 0; i < orb.size(); ++i) {
        out.push_back({{"index", orb.labels()[i].name()}, {"m", rational_json(m[i])}});
    }
    return out;
}

void add_checks(Report& r, const std::string& suite, const CheckList& checks)
{
    for (const auto& c : checks) {
        r.payload["checks"].push_back({{"suite", suite}, {"anchor", c.identity}, {"pass", c.pass}, {"witness", c.witness}});
        if (!c.pass) {
            r.pass = false;
            r.witnesses.push_back(suite + ": " + c.identity + ": " + c.witness);
        }
    }
}

} // namespace

Report cmd_classify(const std::array<int, 3>& t)
{
    const RootSystem rs = system_of(t);
    const Orbifold& orb = rs.orbifold();
    const int k = kappa(orb.triple());
    Report r;
    r.command = "classify";
    r.triple = t;
    r.payload = {{"type", rs.finite().type},
                 {"N", rs.rank()},
                 {"chi", rational_json(orb.chi())},
                 {"kappa", k},
                 {"sigma_order", rs.sigma_order()},
                 {"root_count", rs.finite().roots.size()},
                 {"positive_count", rs.finite().positive.size()},
                 {"kac_labels", rs.finite().kac_labels},
                 {"exponents", exponents_json(orb, coxeter_sigma(rs, k).exponents)}};
    return r;
}

Report cmd_verify(const std::array<int, 3>& t, const std::string& suite)
{
    if (std::find(kSuites.begin(), kSuites.end(), suite) == kSuites.end()) {
        throw UsageError("unknown suite '" + suite + "'");
    }
    const RootSystem rs = system_of(t);
    const int k = kappa(rs.orbifold().triple());
    field_order(rs.orbifold().triple());
    const bool all = suite == "all";
    Report r;
    r.command = "verify";
    r.triple = t;
    r.payload = {{"suite", suite}, {"checks", json::array()}, {"summary", json::array()}};
    if (all || suite == "roots") {
        add_checks(r, "roots", roots_suite(rs, k));
        r.payload["root_count"] = rs.finite().roots.size();
        r.payload["summary"].push_back(rs.finite().type + ", root_count " + std::to_string(rs.finite().roots.size()));
    }
    if (all || suite == "cocycle") {
        add_checks(r, "cocycle", cocycle_suite(rs));
    }
    if (all || suite == "periods") {
        add_checks(r, "periods", period_suite(rs));
    }
    if (all || suite == "hqe") {
        add_checks(r, "hqe", hqe_suite(rs));
        const HqeContext ctx(rs, k);
        const CycloNumber s = ctx.constant_term();
        r.payload["sum_a_alpha"] = cyclo_json(s);
        r.payload["summary"].push_back("sum_a_alpha = " + s.to_string());
    }
    if (all || suite == "gamma") {
        add_checks(r, "gamma", gamma_suite(rs));
    }
    return r;
}

Report cmd_potential(int max_degree, bool wdvv, const Rational& quartic)
{
    if (max_degree < 1) {
        throw UsageError("--max-degree must be at least 1 (degree 0 is the classical seed)");
    }
    const gw222::GradedPotential rec = gw222::solve_recursion(max_degree, quartic);
    const gw222::GradedPotential closed = gw222::closed_form_potential(quartic);
    Report r;
    r.command = "potential";
    r.payload["max_degree"] = max_degree;
    r.payload["quartic"] = rational_json(quartic);
    r.payload["degrees"] = json::array();
    for (int d = 0; d <= max_degree; ++d) {
        const bool match = rec.part(d) == closed.part(d);
        r.payload["degrees"].push_back({{"degree", d},
                                        {"recursion", rec.part(d).to_string()},
                                        {"closed_form", closed.part(d).to_string()},
                                        {"match", match}});
        if (!match) {
            r.pass = false;
            r.witnesses.push_back("degree " + std::to_string(d) + ": " + rec.part(d).to_string() + " vs "
                                  + closed.part(d).to_string());
        }
    }
    r.payload["four_point"] = rational_json(gw222::four_point_invariant(rec, 1));
    std::string why;
    const bool homog = gw222::weighted_homogeneous(rec, &why);
    r.payload["weighted_homogeneous"] = homog;
    if (!homog) {
        r.pass = false;
        r.witnesses.push_back("homogeneity: " + why);
    }
    if (wdvv) {
        const gw222::WdvvReport w = gw222::wdvv_check(rec, max_degree);
        r.payload["wdvv"] = {{"associative", w.associative},
                             {"commutative", w.commutative},
                             {"unit", w.unit},
                             {"failing_degree", w.failing_degree},
                             {"witness", w.witness}};
        if (!w.pass()) {
            r.pass = false;
            r.witnesses.push_back("wdvv: " + w.witness);
        }
    }
    return r;
}

Report cmd_report(const std::array<int, 3>& t)
{
    const RootSystem rs = system_of(t);
    const HqeReport h = hqe_report(rs);
    Report r;
    r.command = "report";
    r.triple = t;
    json roots = json::array();
    for (const auto& e : h.roots) {
        roots.push_back({{"alpha", e.alpha},
                         {"omega_b", e.omega_b},
                         {"a_magnitude", cyclo_json(e.a_magnitude)},
                         {"zeta_exponent", rational_json(e.zeta_exponent)},
                         {"phase", cyclo_json(e.phase)}});
    }
    json lattice = json::array();
    for (const auto& v : h.exponent_lattice) {
        lattice.push_back(rational_json(v));
    }
    r.payload = {{"kappa", h.kappa},
                 {"sigma_order", h.sigma_order},
                 {"constant", rational_json(h.constant)},
                 {"hodge_trace", rational_json(h.hodge)},
                 {"exponents", exponents_json(rs.orbifold(), h.exponents)},
                 {"exponent_lattice", lattice},
                 {"roots", roots}};
    if (h.constant != h.hodge) {
        r.pass = false;
        r.witnesses.push_back("constant " + exactnum::to_string(h.constant) + " vs hodge trace "
                              + exactnum::to_string(h.hodge));
    }
    return r;
}

ExitCode exit_code(const Report& r)
{
    return r.pass ? ExitCode::Pass : ExitCode::Failure;
}

std::string render_text(const Report& r)
{
    std::ostringstream os;
    os << r.command;
    if (r.triple) {
        os << " (" << (*r.triple)[0] << "," << (*r.triple)[1] << "," << (*r.triple)[2] << ")";
    }
    os << ": " << (r.pass ? "pass" : "FAIL") << "\n";
    const json& p = r.payload;
    if (r.command == "verify") {
        for (const auto& c : p.at("checks")) {
            os << "  " << (c.at("pass").get<bool>() ? "pass " : "FAIL ") << "[" << c.at("suite").get<std::string>()
               << "] " << c.at("anchor").get<std::string>() << "\n";
        }
        for (const auto& s : p.at("summary")) {
            os << "  " << s.get<std::string>() << "\n";
        }
    } else if (r.command == "potential") {
        for (const auto& d : p.at("degrees")) {
            os << "  d=" << d.at("degree").get<int>() << "  " << d.at("recursion").get<std::string>()
               << (d.at("match").get<bool>() ? "" : "   (closed form: " + d.at("closed_form").get<std::string>() + ")")
               << "\n";
        }
        os << "  four-point invariant " << p.at("four_point").get<std::string>() << "\n";
        if (p.contains("wdvv")) {
            os << "  WDVV " << (p.at("wdvv").at("associative").get<bool>() ? "pass" : "FAIL") << "\n";
        }
    } else {
        for (const auto& [key, value] : p.items()) {
            if (key == "roots") {
                os << "  roots: " << value.size() << "\n";
            } else if (key == "exponents") {
                os << "  exponents:";
                for (const auto& e : value) {
                    os << " " << e.at("index").get<std::string>() << "=" << e.at("m").get<std::string>();
                }
                os << "\n";
            } else {
                os << "  " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
            }
        }
    }
    for (const auto& w : r.witnesses) {
        os << "  witness: " << w << "\n";
    }
    return os.str();
}

} // namespace cusp::cli
