#include "fusion/explorer.hpp"

#include "fusion/acyclicity.hpp"
#include "fusion/errors.hpp"
#include "fusion/fp_dimensions.hpp"
#include "fusion/nilpotency.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <numeric>
#include <stdexcept>

namespace fusion {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

struct Equation {
    Label i, j, k, l;
};

// Backtracking over one dual map. Cells N_{ij}^k are grouped into orbits of
// the symmetries every valid rule has:
//   N_{ij}^k = N_{dual j, dual i}^{dual k}
//   N_{ij}^k = N_{j, dual k}^{dual i}   (follows from associativity together
//                                       with N_{ij}^0 = delta_{j, dual i})
// Each orbit without a forced value is one search variable. Variables are
// assigned in order of their first cell, so the output within one dual map is
// already in lexicographic tensor order. An associativity equation is checked
// as soon as the last variable it mentions is assigned.
class DualMapSearch {
public:
    DualMapSearch(std::size_t n, std::vector<Label> dual, Multiplicity max_mult, bool strict)
        : n_(n), dual_(std::move(dual)), max_mult_(max_mult), strict_(strict),
          values_(n * n * n, 0), var_of_(n * n * n, kNone) {}

    void run(std::vector<FusionRule> &out) {
        if (!build_orbits())
            return;
        build_equations();
        for (const auto &eq : ready_[0])
            if (!holds(eq))
                return;
        search(0, out);
    }

private:
    std::size_t cell(Label i, Label j, Label k) const { return (i * n_ + j) * n_ + k; }

    // Forced value of a cell, or kNone if free.
    std::size_t forced(Label i, Label j, Label k) const {
        if (i == 0)
            return j == k ? 1 : 0;
        if (j == 0)
            return i == k ? 1 : 0;
        if (k == 0) {
            if (j == dual_[i])
                return 1;
            if (!strict_)
                return 0;
        }
        return kNone;
    }

    bool build_orbits() {
        const auto total = n_ * n_ * n_;
        std::vector<bool> seen(total, false);
        for (std::size_t start = 0; start < total; ++start) {
            if (seen[start])
                continue;
            std::vector<std::size_t> orbit{start};
            seen[start] = true;
            for (std::size_t idx = 0; idx < orbit.size(); ++idx) {
                const auto c = orbit[idx];
                const Label i = c / (n_ * n_), j = (c / n_) % n_, k = c % n_;
                std::vector<std::size_t> images{cell(dual_[j], dual_[i], dual_[k])};
                if (!strict_)
                    images.push_back(cell(j, dual_[k], dual_[i]));
                for (auto image : images)
                    if (!seen[image]) {
                        seen[image] = true;
                        orbit.push_back(image);
                    }
            }
            std::size_t value = kNone;
            for (auto c : orbit) {
                const auto f = forced(c / (n_ * n_), (c / n_) % n_, c % n_);
                if (f == kNone)
                    continue;
                if (value != kNone && value != f)
                    return false; // contradictory forced values: no rule has this dual map
                value = f;
            }
            if (value == kNone) {
                for (auto c : orbit)
                    var_of_[c] = orbits_.size();
                orbits_.push_back(std::move(orbit));
            } else {
                for (auto c : orbit)
                    values_[c] = static_cast<Multiplicity>(value);
            }
        }
        return true;
    }

    void build_equations() {
        // ready_[v + 1]: equations whose last variable is v; ready_[0]: no variables.
        ready_.assign(orbits_.size() + 1, {});
        for (Label i = 0; i < n_; ++i)
            for (Label j = 0; j < n_; ++j)
                for (Label k = 0; k < n_; ++k)
                    for (Label l = 0; l < n_; ++l) {
                        std::size_t last = 0;
                        auto note = [&](std::size_t c) {
                            if (var_of_[c] != kNone)
                                last = std::max(last, var_of_[c] + 1);
                        };
                        for (Label m = 0; m < n_; ++m) {
                            note(cell(i, j, m));
                            note(cell(m, k, l));
                            note(cell(j, k, m));
                            note(cell(i, m, l));
                        }
                        ready_[last].push_back({i, j, k, l});
                    }
    }

    bool holds(const Equation &e) const {
        std::uint64_t lhs = 0, rhs = 0;
        for (Label m = 0; m < n_; ++m) {
            lhs += std::uint64_t{values_[cell(e.i, e.j, m)]} * values_[cell(m, e.k, e.l)];
            rhs += std::uint64_t{values_[cell(e.j, e.k, m)]} * values_[cell(e.i, m, e.l)];
        }
        return lhs == rhs;
    }

    void search(std::size_t var, std::vector<FusionRule> &out) {
        if (var == orbits_.size()) {
            emit(out);
            return;
        }
        for (Multiplicity value = 0; value <= max_mult_; ++value) {
            for (auto c : orbits_[var])
                values_[c] = value;
            const auto &checks = ready_[var + 1];
            const bool ok = std::all_of(checks.begin(), checks.end(),
                                        [&](const Equation &e) { return holds(e); });
            if (ok)
                search(var + 1, out);
        }
        for (auto c : orbits_[var])
            values_[c] = 0;
    }

    void emit(std::vector<FusionRule> &out) const {
        FusionRule rule(dual_, values_);
        const auto report = validate(rule);
        const bool accepted = strict_ ? report.valid_without_vacuum_channel() : report.valid;
        if (!accepted)
            throw std::logic_error(fmt::format(
                "enumerator produced an invalid rule ({} violation(s), first: {})",
                report.violations.size(), report.violations.front().message));
        out.push_back(std::move(rule));
    }

    std::size_t n_;
    std::vector<Label> dual_;
    Multiplicity max_mult_;
    bool strict_;
    std::vector<Multiplicity> values_;
    std::vector<std::size_t> var_of_;
    std::vector<std::vector<std::size_t>> orbits_;
    std::vector<std::vector<Equation>> ready_;
};

bool is_vacuum_fixing_involution(const std::vector<Label> &d, std::size_t rank) {
    if (d.size() != rank || d.empty() || d[0] != 0)
        return false;
    for (Label i = 0; i < rank; ++i)
        if (d[i] >= rank || d[d[i]] != i)
            return false;
    return true;
}

} // namespace

std::vector<std::vector<Label>> vacuum_fixing_involutions(std::size_t rank) {
    std::vector<std::vector<Label>> result;
    if (rank == 0)
        return result;
    std::vector<Label> perm(rank);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (is_vacuum_fixing_involution(perm, rank))
            result.push_back(perm);
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return result;
}

std::vector<FusionRule> enumerate(const EnumSpec &spec) {
    if (spec.rank < 1 || spec.rank > kMaxEnumRank)
        throw CapacityError(fmt::format("enumerate: rank {} outside 1..{}", spec.rank, kMaxEnumRank));
    if (spec.max_mult > kMaxEnumMultiplicity)
        throw CapacityError(fmt::format("enumerate: max_mult {} outside 0..{}", spec.max_mult,
                                        kMaxEnumMultiplicity));
    auto duals = vacuum_fixing_involutions(spec.rank);
    if (spec.dual_maps) {
        for (const auto &d : *spec.dual_maps)
            if (!is_vacuum_fixing_involution(d, spec.rank))
                throw PreconditionError("enumerate: dual map is not an involution fixing 0");
        std::erase_if(duals, [&](const auto &d) {
            return std::find(spec.dual_maps->begin(), spec.dual_maps->end(), d) ==
                   spec.dual_maps->end();
        });
    }

    std::vector<FusionRule> rules;
    for (const auto &d : duals)
        DualMapSearch(spec.rank, d, spec.max_mult, spec.strict_axioms).run(rules);

    auto order = [](const FusionRule &a, const FusionRule &b) {
        const auto ta = a.tensor(), tb = b.tensor();
        if (!std::equal(ta.begin(), ta.end(), tb.begin(), tb.end()))
            return std::lexicographical_compare(ta.begin(), ta.end(), tb.begin(), tb.end());
        const auto da = a.duals(), db = b.duals();
        return std::lexicographical_compare(da.begin(), da.end(), db.begin(), db.end());
    };
    std::sort(rules.begin(), rules.end(), order);
    rules.erase(std::unique(rules.begin(), rules.end()), rules.end());
    if (spec.limit && rules.size() > *spec.limit)
        rules.erase(rules.begin() + static_cast<std::ptrdiff_t>(*spec.limit), rules.end());
    return rules;
}

namespace {

std::string describe(const FusionRule &rule) {
    std::string text = fmt::format("rank {} dual [", rule.rank());
    for (Label i = 0; i < rule.rank(); ++i)
        text += fmt::format("{}{}", i ? " " : "", rule.dual(i));
    text += "] channels";
    for (Label i = 0; i < rule.rank(); ++i)
        for (Label j = 0; j < rule.rank(); ++j)
            for (const auto &[k, m] : rule.fuse(i, j))
                text += fmt::format(" ({},{},{})x{}", i, j, k, m);
    return text;
}

} // namespace

TheoremSurvey survey(const std::vector<FusionRule> &rules, double tolerance) {
    TheoremSurvey result;
    for (const auto &rule : rules) {
        ++result.total;
        if (validate(rule).valid)
            ++result.vacuum_channel_count;
        const auto acyclic = is_acyclic(rule).acyclic;
        const auto series = central_series(rule);
        if (acyclic)
            ++result.acyclic_count;
        if (series.nilpotent) {
            ++result.nilpotent_count;
            ++result.class_histogram[*series.nilpotency_class];
        }
        if (acyclic != series.nilpotent)
            result.disagreements.push_back(rule);
        try {
            const auto fp = fp_dimensions(rule, tolerance);
            if (acyclic && !fp.is_weakly_integral)
                result.weak_integrality_failures.push_back(rule);
        } catch (const NumericalError &e) {
            throw NumericalError(fmt::format("{} (rule: {})", e.what(), describe(rule)), e.residual());
        }
    }
    return result;
}

TheoremSurvey survey(const EnumSpec &spec, double tolerance) {
    return survey(enumerate(spec), tolerance);
}

} // namespace fusion
