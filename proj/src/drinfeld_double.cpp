#include "fusion/errors.hpp"
#include "fusion/generators.hpp"

#include <cmath>
#include <complex>
#include <fmt/format.h>

// Fusion rule of D(G) from double characters.
//
// A simple object X = (class of a, irreducible chi of C(a)) has character
//   Theta_X(g, h) = chi(x_g^-1 h x_g)   if g is in the class of a, h in C(g),
//                   0                   otherwise,
// where x_g is a fixed element with x_g a x_g^-1 = g. Tensor products convolve
// in the first argument and multiply pointwise in the second:
//   (Theta_X * Theta_Y)(g, h) = sum_{g1 g2 = g} Theta_X(g1, h) Theta_Y(g2, h),
// and N_{XY}^Z = 1/|G| sum over commuting (g, h) of
//   (Theta_X * Theta_Y)(g, h) conj(Theta_Z(g, h)).

namespace fusion {

namespace {

using Complex = std::complex<double>;

struct Entry {
    Element g;
    Element h;
    Complex value;
};

struct Simple {
    std::size_t conjugacy_class;
    std::size_t irrep;
    std::vector<Entry> entries;
    std::vector<std::vector<Entry>> by_h; // entries grouped by h
};

} // namespace

FusionRule drinfeld_double(const FiniteGroup &group, double tolerance, std::size_t max_order) {
    const auto n = group.order();
    if (n > max_order)
        throw CapacityError(fmt::format("drinfeld_double: group order {} exceeds the cap of {}", n, max_order));

    const auto classes = group.conjugacy_classes();
    std::vector<std::size_t> class_of(n);
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (auto g : classes[c])
            class_of[g] = c;

    std::vector<Simple> simples;
    for (std::size_t c = 0; c < classes.size(); ++c) {
        const auto a = classes[c].front();
        const auto members = group.centralizer(a);
        std::vector<std::size_t> position(n, n);
        for (std::size_t p = 0; p < members.size(); ++p)
            position[members[p]] = p;
        const auto centralizer = group.subgroup(members, fmt::format("C({})", a));
        const auto table = character_table(centralizer, max_order);

        // Transversal: smallest x with x a x^-1 = g.
        std::vector<Element> transversal(n, n);
        for (Element x = 0; x < n; ++x) {
            const auto g = group.conjugate(x, a);
            if (transversal[g] == n)
                transversal[g] = x;
        }

        for (std::size_t r = 0; r < table.characters.size(); ++r) {
            Simple s{c, r, {}, std::vector<std::vector<Entry>>(n)};
            for (auto g : classes[c]) {
                const auto x = transversal[g];
                for (Element h = 0; h < n; ++h) {
                    if (!group.commute(g, h))
                        continue;
                    const auto pulled = group.multiply(group.multiply(group.inverse(x), h), x);
                    const auto value = table.characters[r][table.class_of[position[pulled]]];
                    s.entries.push_back({g, h, value});
                    s.by_h[h].push_back({g, h, value});
                }
            }
            simples.push_back(std::move(s));
        }
    }

    const auto rank = simples.size();
    std::vector<Multiplicity> tensor(rank * rank * rank, 0);
    std::vector<Complex> convolution(n * n);
    std::vector<std::size_t> touched_cells;
    std::vector<bool> class_hit(classes.size());
    for (std::size_t x = 0; x < rank; ++x)
        for (std::size_t y = 0; y < rank; ++y) {
            std::fill(class_hit.begin(), class_hit.end(), false);
            for (Element h = 0; h < n; ++h)
                for (const auto &ex : simples[x].by_h[h])
                    for (const auto &ey : simples[y].by_h[h]) {
                        const auto g = group.multiply(ex.g, ey.g);
                        const auto cell = g * n + h;
                        if (convolution[cell] == Complex{})
                            touched_cells.push_back(cell);
                        convolution[cell] += ex.value * ey.value;
                        class_hit[class_of[g]] = true;
                    }
            for (std::size_t z = 0; z < rank; ++z) {
                if (!class_hit[simples[z].conjugacy_class])
                    continue;
                Complex sum = 0.0;
                for (const auto &ez : simples[z].entries)
                    sum += convolution[ez.g * n + ez.h] * std::conj(ez.value);
                sum /= static_cast<double>(n);
                const double nearest = std::round(sum.real());
                const double residual = std::max(std::abs(sum.real() - nearest), std::abs(sum.imag()));
                if (residual > tolerance || nearest < 0.0)
                    throw NumericalError(
                        fmt::format("drinfeld_double({}): multiplicity N[{},{},{}] = {:.6f}{:+.6f}i "
                                    "is not a non-negative integer",
                                    group.name(), x, y, z, sum.real(), sum.imag()),
                        residual);
                tensor[(x * rank + y) * rank + z] = static_cast<Multiplicity>(nearest);
            }
            for (auto cell : touched_cells)
                convolution[cell] = Complex{};
            touched_cells.clear();
        }

    std::vector<Label> dual(rank, rank);
    for (std::size_t x = 0; x < rank; ++x)
        for (std::size_t z = 0; z < rank; ++z)
            if (tensor[(x * rank + z) * rank] == 1) {
                if (dual[x] != rank)
                    throw StructuralError(fmt::format("drinfeld_double: simple {} has two duals", x));
                dual[x] = z;
            }
    std::vector<std::string> labels;
    for (std::size_t x = 0; x < rank; ++x) {
        if (dual[x] == rank)
            throw StructuralError(fmt::format("drinfeld_double: simple {} has no dual", x));
        labels.push_back(x == 0 ? std::string("1")
                                : fmt::format("c{}.{}", simples[x].conjugacy_class, simples[x].irrep));
    }
    return FusionRule(std::move(labels), std::move(dual), std::move(tensor));
}

} // namespace fusion
