#include "fusion/fusion_rule.hpp"

#include "fusion/errors.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <tuple>

namespace fusion {

std::vector<std::string> default_labels(std::size_t rank) {
    std::vector<std::string> labels;
    labels.reserve(rank);
    for (std::size_t i = 0; i < rank; ++i)
        labels.push_back(i == 0 ? std::string("1") : fmt::format("x{}", i));
    return labels;
}

FusionRule::FusionRule(std::vector<std::string> labels, std::vector<Label> dual,
                       std::vector<Multiplicity> tensor)
    : rank_(dual.size()), labels_(std::move(labels)), dual_(std::move(dual)),
      tensor_(std::move(tensor)) {
    if (rank_ == 0)
        throw StructuralError("fusion rule must have rank at least 1");
    if (labels_.size() != rank_)
        throw StructuralError(fmt::format("expected {} labels, got {}", rank_,
                                          labels_.size()));
    if (tensor_.size() != rank_ * rank_ * rank_)
        throw StructuralError(fmt::format(
            "tensor has {} entries, expected rank^3 = {}", tensor_.size(),
            rank_ * rank_ * rank_));
    for (Label i = 0; i < rank_; ++i)
        if (dual_[i] >= rank_)
            throw StructuralError(fmt::format(
                "dual of label {} is {}, outside 0..{}", i, dual_[i], rank_ - 1));

    offsets_.reserve(rank_ * rank_ + 1);
    offsets_.push_back(0);
    for (std::size_t cell = 0; cell < rank_ * rank_; ++cell) {
        for (Label k = 0; k < rank_; ++k)
            if (auto m = tensor_[cell * rank_ + k]; m != 0)
                channels_.push_back({k, m});
        offsets_.push_back(channels_.size());
    }
}

// dual is copied, not moved: argument evaluation order is unspecified.
FusionRule::FusionRule(std::vector<Label> dual, std::vector<Multiplicity> tensor)
    : FusionRule(default_labels(dual.size()), dual, std::move(tensor)) {}

Multiplicity FusionRule::total_multiplicity(Label i, Label j) const noexcept {
    Multiplicity total = 0;
    for (const auto &c : fuse(i, j))
        total += c.multiplicity;
    return total;
}

Label FusionRule::find(std::string_view name) const noexcept {
    auto it = std::find(labels_.begin(), labels_.end(), name);
    return static_cast<Label>(it - labels_.begin());
}

FusionRule trivial_rule() { return FusionRule({0}, {1}); }

std::string_view axiom_name(Axiom axiom) noexcept {
    switch (axiom) {
    case Axiom::Involution: return "involution";
    case Axiom::Unit: return "unit";
    case Axiom::Associativity: return "associativity";
    case Axiom::DualSymmetry: return "dual_symmetry";
    case Axiom::VacuumMultiplicity: return "vacuum_multiplicity";
    case Axiom::VacuumChannel: return "vacuum_channel";
    case Axiom::AdjointSymmetry: return "adjoint_symmetry";
    }
    return "unknown";
}

bool ValidationReport::valid_without_vacuum_channel() const noexcept {
    return std::all_of(violations.begin(), violations.end(), [](const Violation &v) {
        return v.axiom == Axiom::VacuumChannel;
    });
}

namespace {

// Accumulates sparse products into a dense scratch row.
class SparseRow {
public:
    explicit SparseRow(std::size_t n) : values_(n, 0), seen_(n, false) {}

    void add(Label k, std::uint64_t v) {
        if (!seen_[k]) {
            seen_[k] = true;
            touched_.push_back(k);
        }
        values_[k] += v;
    }

    std::uint64_t operator[](Label k) const { return values_[k]; }
    const std::vector<Label> &touched() const { return touched_; }

    void clear() {
        for (auto k : touched_) {
            values_[k] = 0;
            seen_[k] = false;
        }
        touched_.clear();
    }

private:
    std::vector<std::uint64_t> values_;
    std::vector<bool> seen_;
    std::vector<Label> touched_;
};

void check_associativity(const FusionRule &rule, std::vector<Violation> &out) {
    const auto n = rule.rank();
    SparseRow lhs(n), rhs(n);
    std::vector<Label> outcomes;
    for (Label i = 0; i < n; ++i)
        for (Label j = 0; j < n; ++j)
            for (Label k = 0; k < n; ++k) {
                for (const auto &[m, a] : rule.fuse(i, j))
                    for (const auto &[l, b] : rule.fuse(m, k))
                        lhs.add(l, std::uint64_t{a} * b);
                for (const auto &[m, a] : rule.fuse(j, k))
                    for (const auto &[l, b] : rule.fuse(i, m))
                        rhs.add(l, std::uint64_t{a} * b);
                outcomes.assign(lhs.touched().begin(), lhs.touched().end());
                outcomes.insert(outcomes.end(), rhs.touched().begin(),
                                rhs.touched().end());
                std::sort(outcomes.begin(), outcomes.end());
                outcomes.erase(std::unique(outcomes.begin(), outcomes.end()),
                               outcomes.end());
                for (auto l : outcomes)
                    if (lhs[l] != rhs[l])
                        out.push_back({Axiom::Associativity,
                                       {i, j, k, l},
                                       fmt::format("((x{} x{}) x{}) has {} copies of x{}, "
                                                   "(x{} (x{} x{})) has {}",
                                                   i, j, k, lhs[l], l, i, j, k, rhs[l])});
                lhs.clear();
                rhs.clear();
            }
}

} // namespace

ValidationReport validate(const FusionRule &rule) {
    const auto n = rule.rank();
    const auto d = [&](Label i) { return rule.dual(i); };
    std::vector<Violation> out;

    if (d(kVacuum) != kVacuum)
        out.push_back({Axiom::Involution, {kVacuum},
                       fmt::format("dual of the vacuum is {}", d(kVacuum))});
    for (Label i = 0; i < n; ++i)
        if (d(d(i)) != i)
            out.push_back({Axiom::Involution, {i},
                           fmt::format("dual(dual({})) = {}", i, d(d(i)))});

    for (Label j = 0; j < n; ++j)
        for (Label k = 0; k < n; ++k) {
            const Multiplicity expected = j == k ? 1 : 0;
            if (rule(kVacuum, j, k) != expected)
                out.push_back({Axiom::Unit, {kVacuum, j, k},
                               fmt::format("N[0,{},{}] = {}, expected {}", j, k,
                                           rule(kVacuum, j, k), expected)});
            if (j != kVacuum && rule(j, kVacuum, k) != expected)
                out.push_back({Axiom::Unit, {j, kVacuum, k},
                               fmt::format("N[{},0,{}] = {}, expected {}", j, k,
                                           rule(j, kVacuum, k), expected)});
        }

    check_associativity(rule, out);

    for (Label i = 0; i < n; ++i)
        for (Label j = 0; j < n; ++j)
            for (Label k = 0; k < n; ++k)
                if (rule(i, j, k) != rule(d(j), d(i), d(k)))
                    out.push_back({Axiom::DualSymmetry, {i, j, k},
                                   fmt::format("N[{},{},{}] = {} but N[{},{},{}] = {}", i,
                                               j, k, rule(i, j, k), d(j), d(i), d(k),
                                               rule(d(j), d(i), d(k)))});

    for (Label i = 0; i < n; ++i) {
        if (rule(i, d(i), kVacuum) != 1)
            out.push_back({Axiom::VacuumMultiplicity, {i},
                           fmt::format("x{} x{} contains the vacuum {} times", i, d(i),
                                       rule(i, d(i), kVacuum))});
        for (Label j = 0; j < n; ++j) {
            if (j != d(i) && rule(i, j, kVacuum) != 0)
                out.push_back({Axiom::VacuumChannel, {i, j},
                               fmt::format("x{} x{} contains the vacuum {} times, "
                                           "but x{} is not dual to x{}",
                                           i, j, rule(i, j, kVacuum), j, i)});
            if (rule(i, d(i), j) != rule(i, d(i), d(j)))
                out.push_back({Axiom::AdjointSymmetry, {i, j},
                               fmt::format("N[{},{},{}] = {} but N[{},{},{}] = {}", i,
                                           d(i), j, rule(i, d(i), j), i, d(i), d(j),
                                           rule(i, d(i), d(j)))});
        }
    }

    std::stable_sort(out.begin(), out.end(), [](const Violation &a, const Violation &b) {
        return std::tie(a.indices, a.axiom) < std::tie(b.indices, b.axiom);
    });
    ValidationReport report;
    report.valid = out.empty();
    report.violations = std::move(out);
    return report;
}

FusionRule product(const FusionRule &a, const FusionRule &b) {
    const auto na = a.rank(), nb = b.rank(), n = na * nb;
    std::vector<std::string> labels;
    std::vector<Label> dual(n);
    labels.reserve(n);
    for (Label i = 0; i < na; ++i)
        for (Label p = 0; p < nb; ++p) {
            labels.push_back(fmt::format("({},{})", a.label(i), b.label(p)));
            dual[i * nb + p] = a.dual(i) * nb + b.dual(p);
        }
    std::vector<Multiplicity> tensor(n * n * n, 0);
    for (Label i = 0; i < na; ++i)
        for (Label j = 0; j < na; ++j)
            for (const auto &[k, mab] : a.fuse(i, j))
                for (Label p = 0; p < nb; ++p)
                    for (Label q = 0; q < nb; ++q)
                        for (const auto &[r, mpq] : b.fuse(p, q)) {
                            const auto x = i * nb + p, y = j * nb + q, z = k * nb + r;
                            tensor[(x * n + y) * n + z] = mab * mpq;
                        }
    return FusionRule(std::move(labels), std::move(dual), std::move(tensor));
}

} // namespace fusion
