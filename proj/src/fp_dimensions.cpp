#include "fusion/fp_dimensions.hpp"

#include "fusion/errors.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <limits>

namespace fusion {

namespace {

constexpr std::size_t kIterationCap = 1'000'000;

} // namespace

bool near_positive_integer(double x, double tolerance) noexcept {
    const double nearest = std::round(x);
    return nearest >= 1.0 && std::abs(x - nearest) <= tolerance;
}

double fp_dimension(const FusionRule &rule, Label i, double tolerance) {
    const auto n = rule.rank();
    const double threshold = tolerance * 1e-2;
    std::vector<double> v(n, 1.0), w(n);
    double width = std::numeric_limits<double>::infinity();
    for (std::size_t iter = 0; iter < kIterationCap; ++iter) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = 0.0;
        double norm = 0.0;
        for (Label j = 0; j < n; ++j) {
            double s = v[j];
            for (const auto &[k, m] : rule.fuse(i, j))
                s += m * v[k];
            w[j] = s;
            lo = std::min(lo, s / v[j]);
            hi = std::max(hi, s / v[j]);
            norm = std::max(norm, s);
        }
        width = hi - lo;
        if (width < threshold)
            return 0.5 * (lo + hi) - 1.0;
        for (Label j = 0; j < n; ++j)
            v[j] = w[j] / norm;
    }
    throw NumericalError(
        fmt::format("power iteration for label {} did not converge after {} steps "
                    "(bracket width {:.3e})",
                    i, kIterationCap, width),
        width);
}

FPDimData fp_dimensions(const FusionRule &rule, double tolerance) {
    if (!(tolerance > 0.0))
        throw PreconditionError("tolerance must be positive");
    const auto n = rule.rank();
    FPDimData data;
    data.tolerance = tolerance;
    data.dims.reserve(n);
    for (Label i = 0; i < n; ++i)
        data.dims.push_back(fp_dimension(rule, i, tolerance));

    const auto &d = data.dims;
    double worst = 0.0;
    Label worst_i = 0, worst_j = 0;
    for (Label i = 0; i < n; ++i)
        for (Label j = 0; j < n; ++j) {
            double s = 0.0;
            for (const auto &[k, m] : rule.fuse(i, j))
                s += m * d[k];
            const double residual = std::abs(d[i] * d[j] - s) / (1.0 + d[i] * d[j]);
            if (residual > worst) {
                worst = residual;
                worst_i = i;
                worst_j = j;
            }
        }
    if (worst > tolerance)
        throw NumericalError(
            fmt::format("dimensions are not multiplicative: relative residual {:.3e} "
                        "at labels ({}, {})",
                        worst, worst_i, worst_j),
            worst);

    for (double x : d)
        data.global += x * x;
    data.is_integral = std::all_of(d.begin(), d.end(), [&](double x) {
        return near_positive_integer(x, tolerance);
    });
    data.is_weakly_integral = near_positive_integer(data.global, tolerance);
    return data;
}

} // namespace fusion
