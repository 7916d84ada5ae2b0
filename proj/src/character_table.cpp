#include "fusion/errors.hpp"
#include "fusion/group.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <numeric>
#include <random>

namespace fusion {

namespace {

using Complex = std::complex<double>;

constexpr double kOrthogonalityTolerance = 1e-6;
constexpr int kAttempts = 8;

// structure[s][t][u] = #{(x, y) : x in C_s, y in C_t, x y = rep(C_u)}
using ClassAlgebra = std::vector<Eigen::MatrixXd>;

ClassAlgebra class_algebra(const FiniteGroup &group, const std::vector<std::vector<Element>> &classes,
                           const std::vector<std::size_t> &class_of) {
    const auto k = classes.size();
    ClassAlgebra m(k, Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)));
    for (std::size_t s = 0; s < k; ++s)
        for (auto x : classes[s])
            for (std::size_t u = 0; u < k; ++u) {
                // y = x^-1 rep(C_u) is the unique partner of x
                const auto y = group.multiply(group.inverse(x), classes[u].front());
                m[s](static_cast<Eigen::Index>(class_of[y]), static_cast<Eigen::Index>(u)) += 1.0;
            }
    return m;
}

// Central characters w_u = omega(K_u) from eigenvectors of a random
// combination of the class matrices; verified against every class matrix.
std::vector<std::vector<Complex>> central_characters(const ClassAlgebra &m, unsigned seed,
                                                     double &worst) {
    const auto k = static_cast<Eigen::Index>(m.size());
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coefficient(0.5, 1.5);
    Eigen::MatrixXd combo = Eigen::MatrixXd::Zero(k, k);
    for (const auto &ms : m)
        combo += coefficient(rng) * ms;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(combo.cast<Complex>());
    if (solver.info() != Eigen::Success)
        throw NumericalError("eigen-decomposition of the class algebra failed", 0.0);

    std::vector<std::vector<Complex>> result;
    worst = 0.0;
    for (Eigen::Index r = 0; r < k; ++r) {
        Eigen::VectorXcd w = solver.eigenvectors().col(r);
        if (std::abs(w(0)) < 1e-12) {
            worst = std::numeric_limits<double>::infinity();
            return {};
        }
        w /= w(0);
        for (Eigen::Index s = 0; s < k; ++s) {
            const Eigen::VectorXcd residual = m[static_cast<std::size_t>(s)].cast<Complex>() * w - w(s) * w;
            worst = std::max(worst, residual.cwiseAbs().maxCoeff() / (1.0 + w.cwiseAbs().maxCoeff()));
        }
        result.emplace_back(w.data(), w.data() + k);
    }
    return result;
}

double orthogonality_defect(const CharacterTable &t, std::size_t order) {
    double worst = 0.0;
    for (std::size_t r = 0; r < t.characters.size(); ++r)
        for (std::size_t s = 0; s < t.characters.size(); ++s) {
            Complex sum = 0.0;
            for (std::size_t c = 0; c < t.classes.size(); ++c)
                sum += static_cast<double>(t.classes[c].size()) * t.characters[r][c] *
                       std::conj(t.characters[s][c]);
            const double expected = r == s ? static_cast<double>(order) : 0.0;
            worst = std::max(worst, std::abs(sum - expected));
        }
    return worst;
}

} // namespace

CharacterTable character_table(const FiniteGroup &group, std::size_t max_order) {
    if (group.order() > max_order)
        throw CapacityError(fmt::format("group order {} exceeds the cap of {}", group.order(), max_order));

    CharacterTable table;
    table.classes = group.conjugacy_classes();
    table.class_of.assign(group.order(), 0);
    for (std::size_t c = 0; c < table.classes.size(); ++c)
        for (auto x : table.classes[c])
            table.class_of[x] = c;
    const auto k = table.classes.size();
    const auto order = static_cast<double>(group.order());
    const auto algebra = class_algebra(group, table.classes, table.class_of);

    double last_defect = 0.0;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        double eigen_residual = 0.0;
        const auto omegas = central_characters(algebra, 0x5eed + static_cast<unsigned>(attempt), eigen_residual);
        if (omegas.empty() || eigen_residual > kOrthogonalityTolerance) {
            last_defect = eigen_residual;
            continue;
        }
        table.characters.clear();
        table.degrees.clear();
        for (const auto &w : omegas) {
            double norm = 0.0;
            for (std::size_t u = 0; u < k; ++u)
                norm += std::norm(w[u]) / static_cast<double>(table.classes[u].size());
            const double degree = std::sqrt(order / norm);
            std::vector<Complex> chi(k);
            for (std::size_t u = 0; u < k; ++u)
                chi[u] = degree * w[u] / static_cast<double>(table.classes[u].size());
            table.degrees.push_back(static_cast<std::size_t>(std::lround(degree)));
            table.characters.push_back(std::move(chi));
        }

        // Sort by degree; among equal degrees order by values class by class,
        // larger real part first, so the trivial character leads.
        std::vector<std::size_t> perm(k);
        std::iota(perm.begin(), perm.end(), 0);
        auto key = [](double x) { return std::round(x * 1e6); };
        std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
            if (table.degrees[a] != table.degrees[b])
                return table.degrees[a] < table.degrees[b];
            for (std::size_t c = 0; c < k; ++c) {
                const auto &x = table.characters[a][c];
                const auto &y = table.characters[b][c];
                if (key(x.real()) != key(y.real()))
                    return key(x.real()) > key(y.real());
                if (key(x.imag()) != key(y.imag()))
                    return key(x.imag()) > key(y.imag());
            }
            return false;
        });
        CharacterTable sorted = table;
        for (std::size_t r = 0; r < k; ++r) {
            sorted.characters[r] = table.characters[perm[r]];
            sorted.degrees[r] = table.degrees[perm[r]];
        }

        const std::size_t sum_squares = std::accumulate(
            sorted.degrees.begin(), sorted.degrees.end(), std::size_t{0},
            [](std::size_t acc, std::size_t d) { return acc + d * d; });
        last_defect = orthogonality_defect(sorted, group.order());
        if (sum_squares == group.order() && last_defect <= kOrthogonalityTolerance)
            return sorted;
    }
    throw NumericalError(
        fmt::format("character table of '{}' failed the orthogonality relations (defect {:.3e})",
                    group.name(), last_defect),
        last_defect);
}

} // namespace fusion
