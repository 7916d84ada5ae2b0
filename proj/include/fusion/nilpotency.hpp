#pragma once

#include "fusion/fusion_rule.hpp"

#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace fusion {

/// Sorted set of labels forming a sub-fusion rule: contains the vacuum and is
/// closed under duals and fusion. Only closure() and the functions built on it
/// produce instances, so every LabelSet is closed by construction.
class LabelSet {
public:
    std::span<const Label> members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool contains(Label i) const noexcept;

    bool operator==(const LabelSet &) const = default;

private:
    friend LabelSet closure(const FusionRule &, std::span<const Label>);
    explicit LabelSet(std::vector<Label> members) : members_(std::move(members)) {}

    std::vector<Label> members_;
};

/// Smallest sub-fusion rule containing the seed (and the vacuum).
LabelSet closure(const FusionRule &rule, std::span<const Label> seed);
LabelSet closure(const FusionRule &rule, std::initializer_list<Label> seed);

/// Every label of the rule.
LabelSet all_labels(const FusionRule &rule);

/// True if the set contains the vacuum and is closed under duals and fusion.
bool is_closed(const FusionRule &rule, std::span<const Label> members);

/// The adjoint sub-rule of the sub-fusion rule on `support`: the closure of
/// every outcome of x_i x_{dual i} with i in support.
LabelSet adjoint_subrule(const FusionRule &rule, const LabelSet &support);

struct CentralSeries {
    std::vector<LabelSet> chain;
    bool nilpotent = false;
    /// Index of the first rank-one entry; empty when not nilpotent.
    std::optional<std::size_t> nilpotency_class;
};

/// Iterates adjoint_subrule from the full label set until it reaches rank one
/// or stops shrinking.
CentralSeries central_series(const FusionRule &rule);

/// Materializes the sub-fusion rule on `members` as a standalone rule, keeping
/// the relative label order. Throws PreconditionError if the set is not closed.
FusionRule restrict(const FusionRule &rule, std::span<const Label> members);
FusionRule restrict(const FusionRule &rule, const LabelSet &support);

} // namespace fusion
