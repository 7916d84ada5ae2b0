#pragma once

#include "fusion/fusion_rule.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace fusion {

inline constexpr std::size_t kMaxEnumRank = 5;
inline constexpr Multiplicity kMaxEnumMultiplicity = 3;

struct EnumSpec {
    std::size_t rank = 2;
    /// Bound on every multiplicity that the axioms leave free.
    Multiplicity max_mult = 2;
    /// Only these dual maps (each a full involution on 0..rank-1) if set.
    std::optional<std::vector<std::vector<Label>>> dual_maps;
    /// Keep only the first `limit` rules of the ordered output.
    std::optional<std::size_t> limit;
    /// Drop the N_{ij}^0 = delta_{j, dual i} requirement and enumerate under
    /// associativity, unit, duality symmetry and N_{i, dual i}^0 = 1 only.
    bool strict_axioms = false;
};

/// Every fusion rule satisfying the axioms within the bounds, each once,
/// ordered lexicographically by raw tensor (then by dual map).
///
/// Counts are labelled: rules that differ only by a relabelling are distinct.
/// Throws CapacityError when the spec is outside rank 1..5, max_mult 0..3.
std::vector<FusionRule> enumerate(const EnumSpec &spec);

struct TheoremSurvey {
    std::size_t total = 0;
    std::size_t acyclic_count = 0;
    std::size_t nilpotent_count = 0;
    std::vector<FusionRule> disagreements;
    std::vector<FusionRule> weak_integrality_failures;
    std::map<std::size_t, std::size_t> class_histogram;
    /// Rules that also satisfy N_{ij}^0 = delta_{j, dual i}; equals `total`
    /// unless strict_axioms is set.
    std::size_t vacuum_channel_count = 0;
};

/// Runs the theorem cross-check and the FP-dimension integrality test on every
/// enumerated rule. A NumericalError is rethrown with the offending rule in the
/// message.
TheoremSurvey survey(const EnumSpec &spec, double tolerance = 1e-6);

/// Survey over an explicit list of rules.
TheoremSurvey survey(const std::vector<FusionRule> &rules, double tolerance = 1e-6);

/// All involutions of 0..rank-1 fixing 0, in lexicographic order.
std::vector<std::vector<Label>> vacuum_fixing_involutions(std::size_t rank);

} // namespace fusion
