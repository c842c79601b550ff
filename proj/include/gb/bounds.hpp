#pragma once

#include <optional>
#include <vector>

#include "gb/classify.hpp"
#include "gb/common.hpp"
#include "gb/sieve.hpp"

namespace gb {

// Printed constants of the source inequalities. f_first_coefficient and
// f_second_coefficient are the rounded literals; strict mode swaps in
// e^gamma and 2 * pi_coefficient instead.
struct AnalyticConstants {
    static constexpr double pi_coefficient = 1.25506;
    static constexpr double f_first_coefficient = 1.781;
    static constexpr double f_second_coefficient = 2.510;
    static constexpr double f_additive = 3.0;
    static constexpr double euler_gamma = 0.5772156649015329;
};

// Comparison against a threshold with the float-noise guard: `holds` is the
// raw comparison, `marginal` flags results within 1e-6 relative of the
// threshold, which should not be trusted either way.
struct ThresholdCheck {
    bool holds;
    bool marginal;
};

ThresholdCheck clears_threshold(double value, double threshold,
                                double relative_margin = 1e-6);

struct BoundReport {
    EvenTarget target;
    double f_value;
    i64 s_minus_h;
    bool eq1_holds;        // s - h > f(2N)
    bool eq1_marginal;     // |s - h - f| within float-noise margin
    i64 phi_minus_2_minus_2h;
};

struct FGridPoint {
    u64 two_n;
    double f;
    std::optional<bool> increased;  // empty for the first grid point
};

// f(2N) = 2N / (1.781 lnln 2N + 3 / lnln 2N) - 2 - 2.510 * 2N / ln 2N,
// natural logs, 64-bit floats. Requires 2N >= 16 so lnln 2N is safely positive.
double f_of(u64 two_n);

// Same shape with e^gamma and 2 * 1.25506 in place of the rounded literals.
double f_of_strict(u64 two_n);

// pi(x) < 1.25506 x / ln x  (valid for x > 1; a false return is a bug here).
bool check_pi_bound(const SieveTable& table, u64 x);

// phi(x) > x / (e^gamma lnln x + 3 / lnln x)  (valid for x >= 3).
bool check_phi_bound(const SpfTable& spf, u64 x);

// Same predicate with phi(x) supplied by the caller.
bool check_phi_bound_value(u64 x, u64 phi_value);

// Evaluates s - h > f(2N). Reported, not asserted: the inequality is a
// derived claim, meaningful only for large 2N.
BoundReport check_eq1(const CountSummary& counts, bool strict_constants = false);

// f along an ascending grid, flagging whether each point increased over the
// previous one.
std::vector<FGridPoint> scan_f_monotonic(const std::vector<u64>& grid,
                                         bool strict_constants = false);

}  // namespace gb
