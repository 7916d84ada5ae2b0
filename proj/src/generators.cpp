#include "fusion/generators.hpp"

#include "fusion/errors.hpp"

#include <algorithm>
#include <fmt/format.h>

namespace fusion {

FusionRule pointed(const FiniteGroup &group) {
    const auto n = group.order();
    std::vector<std::string> labels;
    std::vector<Label> dual(n);
    std::vector<Multiplicity> tensor(n * n * n, 0);
    for (Element g = 0; g < n; ++g) {
        labels.push_back(g == 0 ? std::string("1") : fmt::format("g{}", g));
        dual[g] = group.inverse(g);
        for (Element h = 0; h < n; ++h)
            tensor[(g * n + h) * n + group.multiply(g, h)] = 1;
    }
    return FusionRule(std::move(labels), std::move(dual), std::move(tensor));
}

FusionRule su2k(std::size_t k) {
    if (k == 0)
        throw PreconditionError("su2k requires k >= 1");
    const auto n = k + 1;
    std::vector<std::string> labels;
    std::vector<Label> dual(n);
    std::vector<Multiplicity> tensor(n * n * n, 0);
    for (std::size_t a = 0; a < n; ++a) {
        labels.push_back(a % 2 == 0 ? fmt::format("{}", a / 2) : fmt::format("{}/2", a));
        dual[a] = a;
        for (std::size_t b = 0; b < n; ++b) {
            const auto lo = a > b ? a - b : b - a;
            const auto hi = std::min(a + b, 2 * k - a - b);
            for (std::size_t c = lo; c <= hi; c += 2)
                tensor[(a * n + b) * n + c] = 1;
        }
    }
    return FusionRule(std::move(labels), std::move(dual), std::move(tensor));
}

std::size_t double_rank_from_commuting_triples(const FiniteGroup &group) {
    const auto n = group.order();
    std::size_t triples = 0;
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
            if (!group.commute(a, b))
                continue;
            for (Element c = 0; c < n; ++c)
                if (group.commute(a, c) && group.commute(b, c))
                    ++triples;
        }
    return triples / n;
}

} // namespace fusion
