#include "gb/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace gb {
namespace {

double f_shape(u64 two_n, double first_coefficient, double second_coefficient) {
    if (two_n < 16)
        throw std::domain_error("f: requires 2N >= 16 (lnln 2N must be positive)");
    const double x = static_cast<double>(two_n);
    const double ll = std::log(std::log(x));
    return x / (first_coefficient * ll + AnalyticConstants::f_additive / ll) - 2.0 -
           second_coefficient * x / std::log(x);
}

}  // namespace

ThresholdCheck clears_threshold(double value, double threshold, double relative_margin) {
    const double scale = std::max({std::abs(value), std::abs(threshold), 1.0});
    return ThresholdCheck{value > threshold,
                          std::abs(value - threshold) <= relative_margin * scale};
}

double f_of(u64 two_n) {
    return f_shape(two_n, AnalyticConstants::f_first_coefficient,
                   AnalyticConstants::f_second_coefficient);
}

double f_of_strict(u64 two_n) {
    return f_shape(two_n, std::exp(AnalyticConstants::euler_gamma),
                   2.0 * AnalyticConstants::pi_coefficient);
}

bool check_pi_bound(const SieveTable& table, u64 x) {
    if (x < 2) throw std::invalid_argument("check_pi_bound: requires x >= 2");
    const double bound =
        AnalyticConstants::pi_coefficient * static_cast<double>(x) / std::log(static_cast<double>(x));
    return static_cast<double>(table.pi(x)) < bound;
}

bool check_phi_bound_value(u64 x, u64 phi_value) {
    if (x < 3) throw std::invalid_argument("check_phi_bound: requires x >= 3");
    const double ll = std::log(std::log(static_cast<double>(x)));
    const double bound = static_cast<double>(x) /
                         (std::exp(AnalyticConstants::euler_gamma) * ll +
                          AnalyticConstants::f_additive / ll);
    return static_cast<double>(phi_value) > bound;
}

bool check_phi_bound(const SpfTable& spf, u64 x) {
    if (x < 3) throw std::invalid_argument("check_phi_bound: requires x >= 3");
    if (x > spf.limit()) throw std::out_of_range("check_phi_bound: x > spf limit");
    return check_phi_bound_value(x, totient(spf, x));
}

BoundReport check_eq1(const CountSummary& counts, bool strict_constants) {
    const double f = strict_constants ? f_of_strict(counts.target.value)
                                      : f_of(counts.target.value);
    const i64 s_minus_h = static_cast<i64>(counts.s) - static_cast<i64>(counts.h);
    const i64 bookkeeping = static_cast<i64>(counts.phi_2n) - 2 - 2 * static_cast<i64>(counts.h);
    const ThresholdCheck check = clears_threshold(static_cast<double>(s_minus_h), f);
    return BoundReport{counts.target, f, s_minus_h, check.holds, check.marginal, bookkeeping};
}

std::vector<FGridPoint> scan_f_monotonic(const std::vector<u64>& grid, bool strict_constants) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i] < 16)
            throw std::invalid_argument("scan_f_monotonic: grid values must be >= 16");
        if (i > 0 && grid[i] <= grid[i - 1])
            throw std::invalid_argument("scan_f_monotonic: grid must be strictly ascending");
    }

    std::vector<FGridPoint> out;
    out.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double f = strict_constants ? f_of_strict(grid[i]) : f_of(grid[i]);
        std::optional<bool> increased;
        if (i > 0) increased = f > out.back().f;
        out.push_back(FGridPoint{grid[i], f, increased});
    }
    return out;
}

}  // namespace gb
