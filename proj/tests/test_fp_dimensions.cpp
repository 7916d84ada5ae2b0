#include "fusion/fp_dimensions.hpp"
#include "fusion/generators.hpp"

#include <cmath>
#include <doctest.h>
#include <numbers>
#include <random>

using namespace fusion;

TEST_CASE("Fibonacci has the golden ratio") {
    const auto fp = fp_dimensions(named_fixture("fibonacci"));
    const double phi = (1 + std::sqrt(5.0)) / 2;
    CHECK(fp.dims[0] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(fp.dims[1] == doctest::Approx(phi).epsilon(1e-9));
    CHECK(fp.global == doctest::Approx(1 + phi * phi).epsilon(1e-9));
    CHECK_FALSE(fp.is_integral);
    CHECK_FALSE(fp.is_weakly_integral);
}

TEST_CASE("Ising is weakly integral but not integral") {
    const auto fp = fp_dimensions(named_fixture("ising"));
    CHECK(fp.dims[1] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
    CHECK(fp.dims[2] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(fp.global == doctest::Approx(4.0).epsilon(1e-9));
    CHECK_FALSE(fp.is_integral);
    CHECK(fp.is_weakly_integral);
}

TEST_CASE("pointed rules have unit dimensions") {
    const auto fp = fp_dimensions(pointed(named_group("s3")));
    for (double d : fp.dims)
        CHECK(d == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(fp.global == doctest::Approx(6.0).epsilon(1e-9));
    CHECK(fp.is_integral);
}

TEST_CASE("SU(2)_k quantum dimensions") {
    for (std::size_t k = 1; k <= 12; ++k) {
        CAPTURE(k);
        const auto fp = fp_dimensions(su2k(k));
        const double q = std::numbers::pi / double(k + 2);
        double global = 0;
        for (std::size_t a = 0; a <= k; ++a) {
            const double expected = std::sin(double(a + 1) * q) / std::sin(q);
            CHECK(fp.dims[a] == doctest::Approx(expected).epsilon(1e-8));
            global += expected * expected;
        }
        CHECK(fp.global == doctest::Approx(global).epsilon(1e-8));
    }
}

TEST_CASE("single label and tolerance plumbing") {
    const auto fib = named_fixture("fibonacci");
    CHECK(fp_dimension(fib, 1) == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-9));
    CHECK(fp_dimensions(fib, 1e-3).tolerance == 1e-3);
    CHECK(near_positive_integer(2.0000001, 1e-6));
    CHECK_FALSE(near_positive_integer(2.01, 1e-6));
    CHECK_FALSE(near_positive_integer(0.0, 1e-6));
}

TEST_CASE("dimensions are a character of the fusion ring") {
    std::vector<FusionRule> rules;
    for (const auto &name : fixture_catalogue())
        rules.push_back(named_fixture(name));
    for (std::size_t k = 1; k <= 6; ++k)
        rules.push_back(su2k(k));
    rules.push_back(drinfeld_double(named_group("s3")));
    for (const auto &rule : rules) {
        const auto fp = fp_dimensions(rule);
        for (Label i = 0; i < rule.rank(); ++i) {
            CHECK(fp.dims[i] == doctest::Approx(fp.dims[rule.dual(i)]).epsilon(1e-9));
            for (Label j = 0; j < rule.rank(); ++j) {
                double rhs = 0;
                for (const auto &[k, m] : rule.fuse(i, j))
                    rhs += m * fp.dims[k];
                CHECK(fp.dims[i] * fp.dims[j] == doctest::Approx(rhs).epsilon(1e-8));
            }
        }
    }
}

TEST_CASE("dimensions factor over products") {
    std::mt19937 rng(20240611);
    std::vector<FusionRule> small{su2k(3), su2k(4), drinfeld_double(named_group("s3"))};
    for (const auto &name : fixture_catalogue())
        if (name != "so8_2")
            small.push_back(named_fixture(name));
    std::uniform_int_distribution<std::size_t> pick(0, small.size() - 1);
    for (int trial = 0; trial < 12; ++trial) {
        const auto &a = small[pick(rng)];
        const auto &b = small[pick(rng)];
        const auto fa = fp_dimensions(a), fb = fp_dimensions(b);
        const auto fp = fp_dimensions(product(a, b));
        for (Label i = 0; i < a.rank(); ++i)
            for (Label p = 0; p < b.rank(); ++p)
                CHECK(fp.dims[i * b.rank() + p] == doctest::Approx(fa.dims[i] * fb.dims[p]).epsilon(1e-8));
        CHECK(fp.global == doctest::Approx(fa.global * fb.global).epsilon(1e-8));
    }
}
