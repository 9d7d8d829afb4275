#pragma once

#include "cusp/check.hpp"
#include "cusp/exactnum/cyclo.hpp"

#include "json.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace cusp::cli {

inline constexpr const char* kSchema = "cusp-hierarchy/1";

enum class ExitCode { Pass = 0, Failure = 1, Usage = 2 };

struct Report {
    std::string command;
    std::optional<std::array<int, 3>> triple;
    bool pass = true;
    nlohmann::json payload = nlohmann::json::object();
    std::vector<std::string> witnesses;

    friend bool operator==(const Report&, const Report&) = default;
};

nlohmann::json to_json(const Report& r);
/// Throws std::invalid_argument on a schema mismatch or missing field.
Report report_from_json(const nlohmann::json& j);

nlohmann::json rational_json(const exactnum::Rational& r);
exactnum::Rational rational_from_json(const nlohmann::json& j);
nlohmann::json cyclo_json(const exactnum::CycloNumber& c);
exactnum::CycloNumber cyclo_from_json(const nlohmann::json& j);

/// Plain-text rendering for the terminal.
std::string render_text(const Report& r);

/// Bad command-line input (exit code 2).
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Sorted triple; throws UsageError for non-positive or non-Fano input.
std::array<int, 3> checked_triple(int a1, int a2, int a3);

Report cmd_classify(const std::array<int, 3>& t);

inline const std::vector<std::string> kSuites{"roots", "cocycle", "periods", "hqe", "gamma", "all"};
Report cmd_verify(const std::array<int, 3>& t, const std::string& suite);

/// Recursion output against the closed form; with `wdvv` the associativity
/// verdict for the chosen quartic coefficient is part of the status.
Report cmd_potential(int max_degree, bool wdvv, const exactnum::Rational& quartic);

Report cmd_report(const std::array<int, 3>& t);

ExitCode exit_code(const Report& r);

} // namespace cusp::cli
