#pragma once

#include "fusion/fusion_rule.hpp"

#include <vector>

namespace fusion {

inline constexpr double kDefaultTolerance = 1e-6;

/// Frobenius-Perron dimension data of a fusion rule.
struct FPDimData {
    std::vector<double> dims;
    double global = 0.0;
    double tolerance = kDefaultTolerance;
    bool is_integral = false;
    bool is_weakly_integral = false;
};

/// d_i is the spectral radius of the fusion matrix (N_i)_{jk} = N_{ij}^k.
///
/// Each radius is found by power iteration on N_i + I from the all-ones vector.
/// The Collatz-Wielandt quotients min_j (Av)_j / v_j and max_j (Av)_j / v_j
/// bracket the radius; iteration stops once the bracket is narrower than
/// tolerance * 1e-2. Throws NumericalError if a bracket fails to close within
/// the iteration cap, or if the multiplicativity residual
/// |d_i d_j - sum_k N_{ij}^k d_k| exceeds tolerance * (1 + d_i d_j).
///
/// The rule is assumed valid.
FPDimData fp_dimensions(const FusionRule &rule, double tolerance = kDefaultTolerance);

/// Spectral radius of the fusion matrix of a single label.
double fp_dimension(const FusionRule &rule, Label i, double tolerance = kDefaultTolerance);

/// True if x is within tolerance of a positive integer.
bool near_positive_integer(double x, double tolerance) noexcept;

} // namespace fusion
