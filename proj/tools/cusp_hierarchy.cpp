#include "cusp/cocycle.hpp"
#include "cusp/gw222.hpp"
#include "cusp/report.hpp"

#include "CLI11.hpp"

#include <iostream>

namespace {

using cusp::cli::ExitCode;

int code(ExitCode c)
{
    return static_cast<int>(c);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact checks for affine cusp singularities and P^1 orbifold lines"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "print the JSON report on stdout");

    std::vector<int> triple;
    auto add_triple = [&triple](CLI::App* sub) {
        sub->add_option("a", triple, "orbifold orders a1 a2 a3")->expected(3)->required();
    };

    CLI::App* classify = app.add_subcommand("classify", "root system type, kappa and exponents");
    add_triple(classify);

    CLI::App* verify = app.add_subcommand("verify", "run identity suites");
    add_triple(verify);
    std::string suite = "all";
    verify->add_option("--suite", suite, "roots|cocycle|periods|hqe|gamma|all")
        ->check(CLI::IsMember(cusp::cli::kSuites));

    CLI::App* potential = app.add_subcommand("potential", "genus-0 potential of P^1_(2,2,2)");
    int max_degree = 4;
    bool wdvv = false;
    std::string quartic = cusp::exactnum::to_string(cusp::gw222::kSeedQuartic);
    potential->add_option("--max-degree", max_degree, "highest Novikov degree")->required();
    potential->add_flag("--wdvv", wdvv, "also check associativity");
    potential->add_option("--quartic", quartic, "coefficient of sum t_i^4 in the classical seed")
        ->capture_default_str();

    CLI::App* report = app.add_subcommand("report", "scalar HQE data as a structured record");
    add_triple(report);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return code(ExitCode::Usage);
    }

    try {
        cusp::cli::Report r;
        if (classify->parsed()) {
            r = cusp::cli::cmd_classify(cusp::cli::checked_triple(triple[0], triple[1], triple[2]));
        } else if (verify->parsed()) {
            r = cusp::cli::cmd_verify(cusp::cli::checked_triple(triple[0], triple[1], triple[2]), suite);
        } else if (potential->parsed()) {
            cusp::exactnum::Rational q;
            try {
                q = cusp::exactnum::parse_rational(quartic);
            } catch (const std::exception&) {
                throw cusp::cli::UsageError("--quartic: not a rational number: " + quartic);
            }
            r = cusp::cli::cmd_potential(max_degree, wdvv, q);
        } else {
            r = cusp::cli::cmd_report(cusp::cli::checked_triple(triple[0], triple[1], triple[2]));
        }
        if (as_json) {
            std::cout << cusp::cli::to_json(r).dump(2) << "\n";
        } else {
            std::cout << cusp::cli::render_text(r);
        }
        return code(cusp::cli::exit_code(r));
    } catch (const cusp::cli::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return code(ExitCode::Usage);
    } catch (const cusp::FieldOrderError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return code(ExitCode::Usage);
    }
}
