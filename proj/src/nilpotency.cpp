#include "fusion/nilpotency.hpp"

#include "fusion/errors.hpp"

#include <algorithm>
#include <fmt/format.h>

namespace fusion {

bool LabelSet::contains(Label i) const noexcept {
    return std::binary_search(members_.begin(), members_.end(), i);
}

LabelSet closure(const FusionRule &rule, std::span<const Label> seed) {
    const auto n = rule.rank();
    std::vector<bool> in(n, false);
    std::vector<Label> members;
    std::vector<Label> pending;
    auto add = [&](Label i) {
        if (!in[i]) {
            in[i] = true;
            pending.push_back(i);
        }
    };
    add(kVacuum);
    for (auto i : seed) {
        if (i >= n)
            throw PreconditionError(fmt::format("label {} out of range", i));
        add(i);
    }

    // Pop the smallest pending label, combine it with everything accepted so far.
    while (!pending.empty()) {
        auto smallest = std::min_element(pending.begin(), pending.end());
        const Label x = *smallest;
        pending.erase(smallest);
        members.push_back(x);
        add(rule.dual(x));
        for (std::size_t idx = 0; idx < members.size(); ++idx) {
            const Label y = members[idx];
            for (const auto &c : rule.fuse(x, y))
                add(c.outcome);
            for (const auto &c : rule.fuse(y, x))
                add(c.outcome);
        }
    }
    std::sort(members.begin(), members.end());
    return LabelSet(std::move(members));
}

LabelSet closure(const FusionRule &rule, std::initializer_list<Label> seed) {
    return closure(rule, std::span<const Label>(seed.begin(), seed.size()));
}

LabelSet all_labels(const FusionRule &rule) {
    std::vector<Label> everything(rule.rank());
    for (Label i = 0; i < rule.rank(); ++i)
        everything[i] = i;
    return closure(rule, everything);
}

bool is_closed(const FusionRule &rule, std::span<const Label> members) {
    std::vector<bool> in(rule.rank(), false);
    for (auto i : members) {
        if (i >= rule.rank())
            return false;
        in[i] = true;
    }
    if (!in[kVacuum])
        return false;
    for (auto i : members) {
        if (!in[rule.dual(i)])
            return false;
        for (auto j : members)
            for (const auto &c : rule.fuse(i, j))
                if (!in[c.outcome])
                    return false;
    }
    return true;
}

LabelSet adjoint_subrule(const FusionRule &rule, const LabelSet &support) {
    if (!is_closed(rule, support.members()))
        throw PreconditionError("adjoint_subrule: support is not a sub-fusion rule");
    std::vector<Label> seed;
    for (auto i : support.members())
        for (const auto &c : rule.fuse(i, rule.dual(i)))
            seed.push_back(c.outcome);
    // Products of support members stay inside the support, so closing in the
    // ambient rule equals closing in the restricted one.
    return closure(rule, seed);
}

CentralSeries central_series(const FusionRule &rule) {
    CentralSeries series;
    series.chain.push_back(all_labels(rule));
    while (true) {
        const auto &current = series.chain.back();
        if (current.size() == 1) {
            series.nilpotent = true;
            series.nilpotency_class = series.chain.size() - 1;
            break;
        }
        auto next = adjoint_subrule(rule, current);
        const bool stable = next == current;
        series.chain.push_back(std::move(next));
        if (stable)
            break;
    }
    return series;
}

FusionRule restrict(const FusionRule &rule, std::span<const Label> members) {
    std::vector<Label> sorted(members.begin(), members.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (!is_closed(rule, sorted))
        throw PreconditionError("restrict: label set is not a sub-fusion rule");

    const auto n = rule.rank(), m = sorted.size();
    std::vector<Label> position(n, n);
    for (std::size_t a = 0; a < m; ++a)
        position[sorted[a]] = a;

    std::vector<std::string> labels;
    std::vector<Label> dual(m);
    std::vector<Multiplicity> tensor(m * m * m, 0);
    for (std::size_t a = 0; a < m; ++a) {
        labels.push_back(rule.label(sorted[a]));
        dual[a] = position[rule.dual(sorted[a])];
        for (std::size_t b = 0; b < m; ++b)
            for (const auto &[k, mult] : rule.fuse(sorted[a], sorted[b]))
                tensor[(a * m + b) * m + position[k]] = mult;
    }
    return FusionRule(std::move(labels), std::move(dual), std::move(tensor));
}

FusionRule restrict(const FusionRule &rule, const LabelSet &support) {
    return restrict(rule, support.members());
}

} // namespace fusion
