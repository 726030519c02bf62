#pragma once

#include <besselcx/complex_bessel.hpp>
#include <besselcx/types.hpp>

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace besselcx {

using ojson = nlohmann::ordered_json;

inline constexpr const char* tool_version = "0.1.0";
inline constexpr const char* convention_header =
    "i dz^dzbar = 2 dx dy; e(x) = exp(2 pi i x); Tr(z) = z + conj(z)";

struct VerificationCase {
    std::string suite;
    std::string label;
    ojson inputs = ojson::object();
    std::optional<cplx> lhs;
    std::optional<cplx> rhs;
    double abs_diff = 0;
    /// abs_diff / |rhs|, or the residual relative to its scale; unset when rhs = 0.
    std::optional<double> rel_diff;
    double tolerance = 0;
    /// "relative" or "absolute": which difference the tolerance applies to.
    std::string tolerance_kind = "relative";
    /// pass, fail, error, or reported (computed but not asserted).
    std::string status = "pass";
    ojson detail = ojson::object();

    ojson to_json() const;
};

struct ReportSummary {
    int total = 0;
    int passed = 0;
    int failed = 0;
    int errors = 0;
    int reported = 0;
};

struct VerificationReport {
    std::string suite;
    std::vector<VerificationCase> cases;
    ojson metadata = ojson::object();

    ReportSummary summary() const;
    /// True when every asserted case passed and there was at least one.
    bool ok() const;
    ojson to_json() const;
    std::string to_csv() const;
    void append(const VerificationReport& other);
};

struct VerifyOptions {
    EvalConfig cfg;
    RegularizationSchedule schedule;
    /// Replaces the default tolerance of every asserted case.
    std::optional<double> tolerance;
    /// Restricts the suites to these orders; empty means the default grids.
    std::vector<OrderPair> orders;
    int k_max = 40;
    int l_max = 12;
    std::uint64_t seed = 20240611;
    bool timing = false;
    /// Adds the |Re mu| = 0.45 cases, reported but not asserted.
    bool edge_cases = true;

    ojson to_json() const;
};

/// Reads key = value lines; '#' starts a comment. Keys: series_tol, max_terms,
/// switch_radius_factor, oracle_precision_digits, epsilons, extrapolation_order,
/// tolerance, k_max, l_max, seed, edge_cases.
void apply_config_file(const std::string& path, VerifyOptions& opts);
/// Parses "0.2,0.1,0.05" into a decreasing list.
std::vector<double> parse_double_list(const std::string& text);

/// Fills in the status of a comparison case from lhs, rhs and the tolerance.
VerificationCase compare_case(std::string label, ojson inputs, cplx lhs, cplx rhs, double tolerance,
                              const std::string& kind = "relative");

VerificationReport verify_theorem2(const std::vector<OrderPair>& orders, const std::vector<cplx>& c_list,
                                   const VerifyOptions& opts = {});
VerificationReport verify_theorem1(const std::vector<OrderPair>& orders,
                                   const std::vector<std::pair<double, double>>& y_theta,
                                   const VerifyOptions& opts = {});
VerificationReport verify_weber(const std::vector<cplx>& nus, const std::vector<double>& ys,
                                const std::vector<int>& signs, const VerifyOptions& opts = {});
VerificationReport verify_corollary(const std::vector<OrderPair>& orders, double sigma,
                                    const VerifyOptions& opts = {});
VerificationReport verify_combinatorics(const VerifyOptions& opts = {});
/// The G limit trend at theta = 0 over y = 10, 20, 40 for g_orders, and the
/// fitted decay exponent of the asymptotic form of the kernel for orders.
VerificationReport verify_asymptotics(const std::vector<OrderPair>& g_orders, const std::vector<OrderPair>& orders,
                                      const VerifyOptions& opts = {});
VerificationReport verify_ode(const std::vector<OrderPair>& orders, const VerifyOptions& opts = {});

const std::vector<std::string>& suite_names();
/// Runs a named suite on its default grid (or opts.orders); "all" runs every suite.
VerificationReport run_suite(const std::string& name, const VerifyOptions& opts = {});

} // namespace besselcx
