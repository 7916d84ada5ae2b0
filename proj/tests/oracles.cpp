#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace oracle {

using fusion::Label;
using fusion::Multiplicity;

namespace {

std::vector<Multiplicity> verlinde(const std::vector<std::vector<std::complex<double>>> &s) {
    const auto n = s.size();
    std::vector<Multiplicity> tensor(n * n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                std::complex<double> v = 0;
                for (std::size_t m = 0; m < n; ++m)
                    v += s[a][m] * s[b][m] * std::conj(s[c][m]) / s[0][m];
                const double r = std::round(v.real());
                if (std::abs(v - r) > 1e-8 || r < 0)
                    throw std::runtime_error("Verlinde formula gave a non-integer");
                tensor[(a * n + b) * n + c] = static_cast<Multiplicity>(r);
            }
    return tensor;
}

} // namespace

std::vector<Multiplicity> su2k_verlinde(std::size_t k) {
    const auto n = k + 1;
    const double h = static_cast<double>(k + 2);
    std::vector<std::vector<std::complex<double>>> s(n, std::vector<std::complex<double>>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            s[a][b] = std::sqrt(2.0 / h) * std::sin(std::numbers::pi * double(a + 1) * double(b + 1) / h);
    return verlinde(s);
}

std::vector<Multiplicity> so8_level2_verlinde() {
    // Dominant weights in doubled orthogonal coordinates: l1 >= l2 >= l3 >= |l4|,
    // all even or all odd, level l1 + l2 <= 2 (i.e. doubled sum <= 4).
    using W = std::array<int, 4>;
    std::vector<W> weights;
    for (int a = -4; a <= 4; ++a)
        for (int b = -4; b <= 4; ++b)
            for (int c = -4; c <= 4; ++c)
                for (int d = -4; d <= 4; ++d) {
                    if (!(a >= b && b >= c && c >= std::abs(d)))
                        continue;
                    const bool even = a % 2 == 0 && b % 2 == 0 && c % 2 == 0 && d % 2 == 0;
                    const bool odd = a % 2 != 0 && b % 2 != 0 && c % 2 != 0 && d % 2 != 0;
                    if ((even || odd) && a + b <= 4)
                        weights.push_back({a, b, c, d});
                }
    if (weights.size() != 11)
        throw std::runtime_error("unexpected number of level-2 weights");

    // Weyl group of D4: permutations with an even number of sign changes; the
    // determinant equals the sign of the permutation.
    struct Elem {
        std::array<int, 4> perm;
        std::array<int, 4> signs;
        int det;
    };
    std::vector<Elem> weyl;
    std::array<int, 4> perm{0, 1, 2, 3};
    do {
        int inversions = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                inversions += perm[i] > perm[j];
        for (int mask = 0; mask < 16; ++mask) {
            if (__builtin_popcount(mask) % 2)
                continue;
            std::array<int, 4> signs{};
            for (int i = 0; i < 4; ++i)
                signs[i] = (mask >> i) & 1 ? -1 : 1;
            weyl.push_back({perm, signs, inversions % 2 ? -1 : 1});
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (weyl.size() != 192)
        throw std::runtime_error("unexpected Weyl group order");

    const std::array<int, 4> rho2{6, 4, 2, 0}; // doubled rho = (3, 2, 1, 0)
    const std::size_t n = weights.size();
    std::vector<std::vector<std::complex<double>>> s(n, std::vector<std::complex<double>>(n));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            std::complex<double> sum = 0;
            for (const auto &w : weyl) {
                int dot4 = 0; // 4 * (w(lambda + rho), mu + rho)
                for (int i = 0; i < 4; ++i)
                    dot4 += w.signs[i] * (weights[x][w.perm[i]] + rho2[w.perm[i]]) *
                            (weights[y][i] + rho2[i]);
                // k + h^vee = 8, so the phase is exp(-2 pi i dot / 8) with dot = dot4 / 4.
                sum += double(w.det) * std::polar(1.0, -2.0 * std::numbers::pi * dot4 / 32.0);
            }
            s[x][y] = sum;
        }
    double norm = 0;
    for (std::size_t y = 0; y < n; ++y)
        norm += std::norm(s[0][y]);
    for (auto &row : s)
        for (auto &v : row)
            v /= std::sqrt(norm);
    if (s[0][0].real() < 0)
        for (auto &row : s)
            for (auto &v : row)
                v = -v;

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    auto dim = [&](std::size_t a) { return std::round((s[a][0] / s[0][0]).real() * 1e6); };
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (dim(a) != dim(b))
            return dim(a) < dim(b);
        return weights[a] < weights[b];
    });
    std::vector<std::vector<std::complex<double>>> sorted(n, std::vector<std::complex<double>>(n));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            sorted[x][y] = s[order[x]][order[y]];
    return verlinde(sorted);
}

bool acyclic_by_sequences(const fusion::FusionRule &rule) {
    const auto n = rule.rank();
    std::vector<Label> seq;
    // Extend seq by one label at a time; a cycle closes when the last label's
    // adjoint product contains the first.
    auto extend = [&](auto &&self) -> bool {
        const Label last = seq.back();
        const Label last_dual = rule.dual(last);
        if (rule(last, last_dual, seq.front()) > 0)
            return true;
        if (seq.size() == n)
            return false;
        for (Label next = 0; next < n; ++next) {
            if (rule(last, last_dual, next) == 0)
                continue;
            seq.push_back(next);
            const bool found = self(self);
            seq.pop_back();
            if (found)
                return true;
        }
        return false;
    };
    for (Label start = 1; start < n; ++start) {
        seq.assign(1, start);
        if (extend(extend))
            return false;
    }
    return true;
}

std::vector<std::size_t> central_series_ranks(const fusion::FusionRule &rule) {
    const auto n = rule.rank();
    std::vector<bool> current(n, true);
    std::vector<std::size_t> ranks{n};
    while (ranks.back() > 1) {
        // Seed with every outcome of x x-bar over the current support, then
        // close under products and duals until nothing changes.
        std::vector<bool> next(n, false);
        next[0] = true;
        for (Label i = 0; i < n; ++i)
            if (current[i])
                for (Label k = 0; k < n; ++k)
                    if (rule(i, rule.dual(i), k) > 0)
                        next[k] = true;
        for (bool changed = true; changed;) {
            changed = false;
            for (Label i = 0; i < n; ++i)
                for (Label j = 0; j < n; ++j)
                    if (next[i] && next[j])
                        for (Label k = 0; k < n; ++k)
                            if (!next[k] && (rule(i, j, k) > 0 || (k == rule.dual(i)))) {
                                next[k] = true;
                                changed = true;
                            }
        }
        const auto size = static_cast<std::size_t>(std::count(next.begin(), next.end(), true));
        ranks.push_back(size);
        if (next == current)
            break;
        current = std::move(next);
    }
    return ranks;
}

} // namespace oracle
