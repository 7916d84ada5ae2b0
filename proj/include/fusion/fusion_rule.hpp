#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fusion {

using Label = std::size_t;
using Multiplicity = std::uint32_t;

/// The vacuum label. Every rule stores it at index 0.
inline constexpr Label kVacuum = 0;

/// One nonzero fusion channel x_i x_j -> m * x_k.
struct Channel {
    Label outcome;
    Multiplicity multiplicity;

    bool operator==(const Channel &) const = default;
};

/// A fusion rule on labels 0..rank-1: a dual map and the dense tensor
/// N[i][j][k] stored row-major. Immutable after construction.
///
/// The constructor only checks shape (tensor size, dual indices in range);
/// the fusion axioms are checked by validate().
class FusionRule {
public:
    FusionRule(std::vector<std::string> labels, std::vector<Label> dual,
               std::vector<Multiplicity> tensor);

    /// Labels default to "1", "x1", "x2", ...
    FusionRule(std::vector<Label> dual, std::vector<Multiplicity> tensor);

    std::size_t rank() const noexcept { return rank_; }

    Multiplicity operator()(Label i, Label j, Label k) const noexcept {
        return tensor_[(i * rank_ + j) * rank_ + k];
    }

    Label dual(Label i) const noexcept { return dual_[i]; }
    std::span<const Label> duals() const noexcept { return dual_; }

    const std::string &label(Label i) const noexcept { return labels_[i]; }
    std::span<const std::string> labels() const noexcept { return labels_; }

    std::span<const Multiplicity> tensor() const noexcept { return tensor_; }

    /// Nonzero channels of x_i x_j in increasing outcome order.
    std::span<const Channel> fuse(Label i, Label j) const noexcept {
        const auto cell = i * rank_ + j;
        return std::span<const Channel>(channels_).subspan(
            offsets_[cell], offsets_[cell + 1] - offsets_[cell]);
    }

    /// Sum of all multiplicities in x_i x_j.
    Multiplicity total_multiplicity(Label i, Label j) const noexcept;

    bool is_self_dual(Label i) const noexcept { return dual_[i] == i; }

    /// Index of the label with the given display name, or rank() if absent.
    Label find(std::string_view name) const noexcept;

    /// Equality is on the raw data (labels are display only and ignored).
    bool operator==(const FusionRule &other) const noexcept {
        return rank_ == other.rank_ && dual_ == other.dual_ &&
               tensor_ == other.tensor_;
    }

private:
    std::size_t rank_;
    std::vector<std::string> labels_;
    std::vector<Label> dual_;
    std::vector<Multiplicity> tensor_;
    std::vector<std::size_t> offsets_;
    std::vector<Channel> channels_;
};

std::vector<std::string> default_labels(std::size_t rank);

/// Rank-one rule consisting of the vacuum only.
FusionRule trivial_rule();

enum class Axiom {
    Involution,         // dual is an involution fixing the vacuum
    Unit,               // N_{0j}^k = N_{j0}^k = delta_{jk}
    Associativity,      // (x_i x_j) x_k = x_i (x_j x_k)
    DualSymmetry,       // N_{ij}^k = N_{dual j, dual i}^{dual k}
    VacuumMultiplicity, // N_{i, dual i}^0 = 1
    VacuumChannel,      // N_{ij}^0 = 0 whenever j != dual i
    AdjointSymmetry,    // N_{i, dual i}^j = N_{i, dual i}^{dual j}
};

std::string_view axiom_name(Axiom axiom) noexcept;

struct Violation {
    Axiom axiom;
    std::vector<Label> indices;
    std::string message;
};

struct ValidationReport {
    bool valid = true;
    std::vector<Violation> violations;

    /// True when every violation is a VacuumChannel one, i.e. the rule
    /// satisfies the weaker axiom set that leaves N_{ij}^0 free for j != dual i.
    bool valid_without_vacuum_channel() const noexcept;
};

/// Checks every axiom instance. Violations are ordered lexicographically by
/// index tuple, then by axiom.
ValidationReport validate(const FusionRule &rule);

/// Direct product. Label (i, p) has index i * b.rank() + p.
FusionRule product(const FusionRule &a, const FusionRule &b);

} // namespace fusion
