#include "fusion/errors.hpp"
#include "fusion/fp_dimensions.hpp"
#include "fusion/generators.hpp"

#include <array>
#include <cmath>
#include <fmt/format.h>
#include <initializer_list>

namespace fusion {

namespace {

using Triple = std::array<Label, 3>;

// Builds a commutative, multiplicity-free rule from the channels x_i x_j -> x_k
// listed for 0 < i <= j. Unit channels are added automatically.
FusionRule commutative_rule(std::vector<std::string> labels, std::vector<Label> dual,
                            std::initializer_list<Triple> channels) {
    const auto n = labels.size();
    std::vector<Multiplicity> tensor(n * n * n, 0);
    auto at = [&](Label i, Label j, Label k) -> Multiplicity & { return tensor[(i * n + j) * n + k]; };
    for (Label i = 0; i < n; ++i) {
        at(0, i, i) = 1;
        at(i, 0, i) = 1;
    }
    for (const auto &[i, j, k] : channels) {
        at(i, j, k) = 1;
        at(j, i, k) = 1;
    }
    return FusionRule(std::move(labels), std::move(dual), std::move(tensor));
}

FusionRule ising() {
    return commutative_rule({"1", "sigma", "psi"}, {0, 1, 2},
                            {{1, 1, 0}, {1, 1, 2}, {1, 2, 1}, {2, 2, 0}});
}

FusionRule fibonacci() {
    return commutative_rule({"1", "tau"}, {0, 1}, {{1, 1, 0}, {1, 1, 1}});
}

FusionRule klein_four(std::vector<std::string> labels) {
    return commutative_rule(std::move(labels), {0, 1, 2, 3},
                            {{1, 1, 0}, {1, 2, 3}, {1, 3, 2}, {2, 2, 0}, {2, 3, 1}, {3, 3, 0}});
}

// SO(8) at level 2. Labels 1..3 are the bosons b1, b2, b1b2; the seven
// dimension-2 objects are x1..x6 and y, where y y = 1 + b1 + b2 + b1b2.
// Computed with the Verlinde formula from the Kac-Peterson S-matrix of the
// eleven level-2 integrable weights of so(8); tests recompute it.
FusionRule so8_level2() {
    std::vector<std::string> labels{"1",  "b1", "b2", "b1b2", "x1", "x2",
                                    "x3", "y",  "x4", "x5",   "x6"};
    std::vector<Label> dual{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    return commutative_rule(std::move(labels), std::move(dual), {
    {1, 1, 0}, {1, 2, 3}, {1, 3, 2}, {1, 4, 4}, {1, 5, 9}, {1, 6, 8}, {1, 7, 7}, {1, 8, 6},
    {1, 9, 5}, {1, 10, 10}, {2, 2, 0}, {2, 3, 1}, {2, 4, 10}, {2, 5, 5}, {2, 6, 8},
    {2, 7, 7}, {2, 8, 6}, {2, 9, 9}, {2, 10, 4}, {3, 3, 0}, {3, 4, 10}, {3, 5, 9},
    {3, 6, 6}, {3, 7, 7}, {3, 8, 8}, {3, 9, 5}, {3, 10, 4}, {4, 4, 0}, {4, 4, 1},
    {4, 4, 7}, {4, 5, 6}, {4, 5, 8}, {4, 6, 5}, {4, 6, 9}, {4, 7, 4}, {4, 7, 10},
    {4, 8, 5}, {4, 8, 9}, {4, 9, 6}, {4, 9, 8}, {4, 10, 2}, {4, 10, 3}, {4, 10, 7},
    {5, 5, 0}, {5, 5, 2}, {5, 5, 7}, {5, 6, 4}, {5, 6, 10}, {5, 7, 5}, {5, 7, 9},
    {5, 8, 4}, {5, 8, 10}, {5, 9, 1}, {5, 9, 3}, {5, 9, 7}, {5, 10, 6}, {5, 10, 8},
    {6, 6, 0}, {6, 6, 3}, {6, 6, 7}, {6, 7, 6}, {6, 7, 8}, {6, 8, 1}, {6, 8, 2}, {6, 8, 7},
    {6, 9, 4}, {6, 9, 10}, {6, 10, 5}, {6, 10, 9}, {7, 7, 0}, {7, 7, 1}, {7, 7, 2},
    {7, 7, 3}, {7, 8, 6}, {7, 8, 8}, {7, 9, 5}, {7, 9, 9}, {7, 10, 4}, {7, 10, 10},
    {8, 8, 0}, {8, 8, 3}, {8, 8, 7}, {8, 9, 4}, {8, 9, 10}, {8, 10, 5}, {8, 10, 9},
    {9, 9, 0}, {9, 9, 2}, {9, 9, 7}, {9, 10, 6}, {9, 10, 8}, {10, 10, 0}, {10, 10, 1},
    {10, 10, 7}});
}

// Rank 11, all self-dual, four invertibles and seven objects of dimension 2.
void check_so8_level2(const FusionRule &rule) {
    auto fail = [](const std::string &what) {
        throw StructuralError("so8_2 fixture is inconsistent: " + what);
    };
    if (rule.rank() != 11)
        fail(fmt::format("rank {}", rule.rank()));
    if (!validate(rule).valid)
        fail("axioms violated");
    for (Label i = 0; i < rule.rank(); ++i)
        if (!rule.is_self_dual(i))
            fail(fmt::format("label {} is not self-dual", rule.label(i)));
    const auto fp = fp_dimensions(rule);
    std::size_t ones = 0, twos = 0;
    for (double d : fp.dims) {
        if (std::abs(d - 1.0) <= 1e-6)
            ++ones;
        else if (std::abs(d - 2.0) <= 1e-6)
            ++twos;
    }
    if (ones != 4 || twos != 7)
        fail(fmt::format("{} dimension-1 and {} dimension-2 objects", ones, twos));
    if (std::abs(fp.global - 32.0) > 1e-6)
        fail(fmt::format("global dimension {}", fp.global));
}

} // namespace

std::vector<std::string> fixture_catalogue() {
    return {"trivial", "semion", "ising", "fibonacci", "toric", "three_fermion", "so8_2"};
}

FusionRule named_fixture(std::string_view name) {
    if (name == "trivial")
        return trivial_rule();
    if (name == "semion")
        return commutative_rule({"1", "s"}, {0, 1}, {{1, 1, 0}});
    if (name == "ising")
        return ising();
    if (name == "fibonacci")
        return fibonacci();
    if (name == "toric")
        return klein_four({"1", "e", "m", "eps"});
    if (name == "three_fermion")
        return klein_four({"1", "f1", "f2", "f3"});
    if (name == "so8_2") {
        auto rule = so8_level2();
        check_so8_level2(rule);
        return rule;
    }
    std::string available;
    for (const auto &f : fixture_catalogue())
        available += (available.empty() ? "" : ", ") + f;
    throw LookupError(fmt::format("unknown fixture '{}'; available: {}", name, available));
}

} // namespace fusion
