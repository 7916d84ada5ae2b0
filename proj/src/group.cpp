#include "fusion/group.hpp"

#include "fusion/errors.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <map>
#include <numeric>

namespace fusion {

FiniteGroup::FiniteGroup(std::size_t order, std::vector<Element> table, std::string name)
    : order_(order), table_(std::move(table)), inverse_(order, order), name_(std::move(name)) {
    if (order_ == 0)
        throw StructuralError("group order must be positive");
    if (table_.size() != order_ * order_)
        throw StructuralError(fmt::format("Cayley table has {} entries, expected {}",
                                          table_.size(), order_ * order_));
    for (auto x : table_)
        if (x >= order_)
            throw StructuralError(fmt::format("Cayley table entry {} out of range", x));
    for (Element a = 0; a < order_; ++a) {
        std::vector<bool> row(order_, false), column(order_, false);
        for (Element b = 0; b < order_; ++b) {
            row[multiply(a, b)] = true;
            column[multiply(b, a)] = true;
        }
        if (std::find(row.begin(), row.end(), false) != row.end() ||
            std::find(column.begin(), column.end(), false) != column.end())
            throw StructuralError(fmt::format("Cayley table is not a Latin square at {}", a));
        if (multiply(0, a) != a || multiply(a, 0) != a)
            throw StructuralError("element 0 is not a two-sided identity");
    }
    for (Element a = 0; a < order_; ++a)
        for (Element b = 0; b < order_; ++b)
            for (Element c = 0; c < order_; ++c)
                if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c)))
                    throw StructuralError(
                        fmt::format("Cayley table is not associative at ({}, {}, {})", a, b, c));
    for (Element a = 0; a < order_; ++a)
        for (Element b = 0; b < order_; ++b)
            if (multiply(a, b) == 0)
                inverse_[a] = b;
}

bool FiniteGroup::is_abelian() const noexcept {
    for (Element a = 0; a < order_; ++a)
        for (Element b = a + 1; b < order_; ++b)
            if (!commute(a, b))
                return false;
    return true;
}

std::vector<std::vector<Element>> FiniteGroup::conjugacy_classes() const {
    std::vector<bool> assigned(order_, false);
    std::vector<std::vector<Element>> classes;
    for (Element a = 0; a < order_; ++a) {
        if (assigned[a])
            continue;
        std::vector<Element> cls;
        for (Element x = 0; x < order_; ++x) {
            const auto g = conjugate(x, a);
            if (!assigned[g]) {
                assigned[g] = true;
                cls.push_back(g);
            }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

std::vector<Element> FiniteGroup::centralizer(Element a) const {
    std::vector<Element> members;
    for (Element x = 0; x < order_; ++x)
        if (commute(a, x))
            members.push_back(x);
    return members;
}

std::vector<Element> FiniteGroup::generated_subgroup(const std::vector<Element> &generators) const {
    std::vector<bool> in(order_, false);
    std::vector<Element> members{0};
    in[0] = true;
    for (std::size_t idx = 0; idx < members.size(); ++idx)
        for (auto g : generators) {
            const auto x = multiply(members[idx], g);
            if (!in[x]) {
                in[x] = true;
                members.push_back(x);
            }
        }
    std::sort(members.begin(), members.end());
    return members;
}

FiniteGroup FiniteGroup::subgroup(const std::vector<Element> &members, std::string name) const {
    std::vector<std::size_t> position(order_, order_);
    for (std::size_t k = 0; k < members.size(); ++k)
        position[members[k]] = k;
    if (members.empty() || members.front() != 0)
        throw PreconditionError("subgroup must list the identity first");
    const auto m = members.size();
    std::vector<Element> table(m * m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            const auto p = position[multiply(members[a], members[b])];
            if (p == order_)
                throw PreconditionError("subgroup members are not closed under multiplication");
            table[a * m + b] = p;
        }
    return FiniteGroup(m, std::move(table), std::move(name));
}

FiniteGroup permutation_group(const std::vector<Permutation> &generators, std::string name) {
    const auto degree = generators.empty() ? 0 : generators.front().size();
    Permutation identity(degree);
    std::iota(identity.begin(), identity.end(), 0);
    auto compose = [](const Permutation &p, const Permutation &q) {
        // (p q)(x) = p(q(x))
        Permutation r(p.size());
        for (std::size_t x = 0; x < p.size(); ++x)
            r[x] = p[q[x]];
        return r;
    };
    std::vector<Permutation> elements{identity};
    std::map<Permutation, std::size_t> index{{identity, 0}};
    for (std::size_t idx = 0; idx < elements.size(); ++idx)
        for (const auto &g : generators) {
            auto x = compose(elements[idx], g);
            if (!index.count(x)) {
                index.emplace(x, elements.size());
                elements.push_back(std::move(x));
            }
        }
    const auto n = elements.size();
    std::vector<Element> table(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            table[a * n + b] = index.at(compose(elements[a], elements[b]));
    return FiniteGroup(n, std::move(table), std::move(name));
}

FiniteGroup cyclic_group(std::size_t n) {
    if (n == 0)
        throw PreconditionError("cyclic group order must be positive");
    std::vector<Element> table(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            table[a * n + b] = (a + b) % n;
    return FiniteGroup(n, std::move(table), fmt::format("z{}", n));
}

FiniteGroup dihedral_group(std::size_t n) {
    if (n < 3)
        throw PreconditionError("dihedral group needs n >= 3");
    Permutation rotation(n), reflection(n);
    for (std::size_t x = 0; x < n; ++x) {
        rotation[x] = (x + 1) % n;
        reflection[x] = (n - x) % n;
    }
    return permutation_group({rotation, reflection}, fmt::format("d{}", n));
}

FiniteGroup symmetric_group(std::size_t n) {
    if (n < 2)
        return cyclic_group(1);
    Permutation cycle(n), transposition(n);
    std::iota(transposition.begin(), transposition.end(), 0);
    std::swap(transposition[0], transposition[1]);
    for (std::size_t x = 0; x < n; ++x)
        cycle[x] = (x + 1) % n;
    return permutation_group({cycle, transposition}, fmt::format("s{}", n));
}

FiniteGroup alternating_group(std::size_t n) {
    if (n < 3)
        return cyclic_group(1);
    // A_n is generated by the 3-cycles (0 1 k).
    std::vector<Permutation> generators;
    for (std::size_t k = 2; k < n; ++k) {
        Permutation p(n);
        std::iota(p.begin(), p.end(), 0);
        p[0] = 1;
        p[1] = k;
        p[k] = 0;
        generators.push_back(std::move(p));
    }
    return permutation_group(generators, fmt::format("a{}", n));
}

FiniteGroup quaternion_group() {
    // Left-regular action on {1, i, j, k, -1, -i, -j, -k} (indices 0..7).
    // Left multiplication by i: 1->i, i->-1, j->k, k->-j.
    const Permutation by_i{1, 4, 3, 6, 5, 0, 7, 2};
    // Left multiplication by j: 1->j, i->-k, j->-1, k->i.
    const Permutation by_j{2, 7, 4, 1, 6, 3, 0, 5};
    return permutation_group({by_i, by_j}, "q8");
}

FiniteGroup direct_product(const FiniteGroup &a, const FiniteGroup &b) {
    const auto na = a.order(), nb = b.order(), n = na * nb;
    std::vector<Element> table(n * n);
    for (Element g1 = 0; g1 < na; ++g1)
        for (Element h1 = 0; h1 < nb; ++h1)
            for (Element g2 = 0; g2 < na; ++g2)
                for (Element h2 = 0; h2 < nb; ++h2)
                    table[(g1 * nb + h1) * n + g2 * nb + h2] =
                        a.multiply(g1, g2) * nb + b.multiply(h1, h2);
    return FiniteGroup(n, std::move(table), fmt::format("{}x{}", a.name(), b.name()));
}

std::vector<std::string> group_catalogue() {
    std::vector<std::string> names;
    for (std::size_t n = 1; n <= 16; ++n)
        names.push_back(fmt::format("z{}", n));
    for (const char *name : {"z2xz2", "s3", "d4", "d5", "q8", "a4"})
        names.emplace_back(name);
    return names;
}

FiniteGroup named_group(std::string_view name) {
    if (name == "z2xz2")
        return direct_product(cyclic_group(2), cyclic_group(2));
    if (name == "s3")
        return symmetric_group(3);
    if (name == "d4")
        return dihedral_group(4);
    if (name == "d5")
        return dihedral_group(5);
    if (name == "q8")
        return quaternion_group();
    if (name == "a4")
        return alternating_group(4);
    if (name.size() >= 2 && name.front() == 'z') {
        const auto digits = name.substr(1);
        if (std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            const auto n = std::stoul(std::string(digits));
            if (n >= 1 && n <= 16)
                return cyclic_group(n);
        }
    }
    std::string available;
    for (const auto &g : group_catalogue())
        available += (available.empty() ? "" : ", ") + g;
    throw LookupError(fmt::format("unknown group '{}'; available: {}", name, available));
}

GroupNilpotency group_is_nilpotent(const FiniteGroup &group) {
    GroupNilpotency result;
    std::vector<Element> current(group.order());
    std::iota(current.begin(), current.end(), 0);
    result.series_orders.push_back(current.size());
    while (current.size() > 1) {
        std::vector<Element> commutators;
        for (Element g = 0; g < group.order(); ++g)
            for (auto h : current)
                commutators.push_back(group.multiply(
                    group.multiply(group.inverse(g), group.inverse(h)), group.multiply(g, h)));
        std::sort(commutators.begin(), commutators.end());
        commutators.erase(std::unique(commutators.begin(), commutators.end()), commutators.end());
        auto next = group.generated_subgroup(commutators);
        if (next == current)
            return result;
        current = std::move(next);
        result.series_orders.push_back(current.size());
    }
    result.nilpotent = true;
    result.nilpotency_class = result.series_orders.size() - 1;
    return result;
}

} // namespace fusion
