#include <doctest.h>

#include <complex>

#include "typecount/archweyl.hpp"

using namespace typecount;

TEST_SUITE("archweyl") {

TEST_CASE("weyl dimension formula") {
    CHECK(weyl_dim(Weight{{0, 0}}) == 1);
    for (long long a = 0; a <= 10; ++a) CHECK(weyl_dim(Weight{{a, 0}}) == a + 1);
    CHECK(weyl_dim(Weight{{1, 0, 0}}) == 3);
    CHECK(weyl_dim(Weight{{2, 1, 0}}) == 8);   // adjoint of SU(3)
    CHECK(weyl_dim(Weight{{1, 1, 0, 0}}) == 6); // wedge^2 of C^4
    CHECK_THROWS_AS((void)weyl_dim(Weight{{0, 1}}), std::invalid_argument);
}

TEST_CASE("root data and delta") {
    for (unsigned n = 2; n <= 5; ++n) {
        const RootData rd = root_data(n);
        CHECK(rd.positive_roots.size() == n * (n - 1) / 2);
        for (unsigned i = 0; i < n; ++i)
            CHECK(rd.delta2[i] == static_cast<long long>(n) - 1 - 2 * static_cast<long long>(i));
    }
}

TEST_CASE("weyl polynomial degree and evaluation") {
    for (unsigned n = 2; n <= 5; ++n) {
        const WeylPolynomial P = weyl_polynomial(n);
        CHECK(P.degree() == n * (n - 1) / 2);
    }
    const WeylPolynomial P3 = weyl_polynomial(3);
    for (long long a = 0; a <= 4; ++a)
        for (long long b = 0; b <= a; ++b) {
            const Weight lam{{a, b, 0}};
            const double v = P3.eval(lam);
            CHECK(v == doctest::Approx(static_cast<double>(weyl_dim(lam))));
        }
}

TEST_CASE("schur values at small weights") {
    const std::vector<std::complex<double>> x = {{0.6, 0.8}, {-0.8, 0.6}};
    // standard representation: x1 + x2
    const auto std_val = schur_trace(Weight{{1, 0}}, x);
    CHECK(std::abs(std_val - (x[0] + x[1])) < 1e-12);
    // determinant character
    const auto det_val = schur_trace(Weight{{1, 1}}, x);
    CHECK(std::abs(det_val - x[0] * x[1]) < 1e-12);
    // negative entries shift by the inverse determinant
    const auto neg_val = schur_trace(Weight{{0, -1}}, x);
    CHECK(std::abs(neg_val - (std::conj(x[0] * x[1]) * (x[0] + x[1]))) < 1e-12);
}

TEST_CASE("schur at the identity is the dimension") {
    for (long long a = 0; a <= 6; ++a)
        for (long long b = 0; b <= a; ++b) {
            CHECK(schur_trace_identity(Weight{{a, b, 0}}, 3) == weyl_dim(Weight{{a, b, 0}}));
            const auto v = schur_trace(Weight{{a, b, 0}}, {{1, 0}, {1, 0}, {1, 0}});
            CHECK(std::abs(v - static_cast<double>(weyl_dim(Weight{{a, b, 0}}))) < 1e-9);
        }
}

TEST_CASE("repeated eigenvalues are fine") {
    const std::vector<std::complex<double>> x = {{0.0, 1.0}, {0.0, 1.0}};
    const auto v = schur_trace(Weight{{1, 0}}, x);
    CHECK(std::abs(v - std::complex<double>(0.0, 2.0)) < 1e-12);
}

TEST_CASE("unitarity: |schur| <= dimension") {
    const std::vector<std::complex<double>> x = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}};
    for (long long a = 0; a <= 12; ++a)
        for (long long b = 0; b <= a; ++b) {
            const Weight lam{{a, b, 0}};
            CHECK(std::abs(schur_trace(lam, x)) <=
                  static_cast<double>(weyl_dim(lam)) + 1e-9);
        }
}

TEST_CASE("regular bound") {
    CHECK(regular_bound({{1, 0}, {-1, 0}}) == doctest::Approx(1.0));
    CHECK(regular_bound({{1, 0}, {0, 1}}) == doctest::Approx(std::sqrt(2.0)));
    CHECK_THROWS_AS((void)regular_bound({{1, 0}, {1, 0}}), std::invalid_argument);
    // |s_(a,0)(1,-1)| is 0 or 1, always within the bound 1
    for (long long a = 0; a <= 50; ++a) {
        const double v = std::abs(schur_trace(Weight{{a, 0}}, {{1, 0}, {-1, 0}}));
        CHECK(v <= 1.0 + 1e-9);
        CHECK((std::abs(v) < 1e-9 || std::abs(v - 1.0) < 1e-9));
    }
    // the bound dominates the standard character on random regular spectra
    const std::vector<std::complex<double>> x = {{0.6, 0.8}, {-0.6, 0.8}, {0.0, -1.0}};
    CHECK(std::abs(schur_trace(Weight{{1, 0, 0}}, x)) <= regular_bound(x) + 1e-9);
}

TEST_CASE("degree scan") {
    SUBCASE("n = 2: ratio decays") {
        const DegreeScanReport rep = cc_degree_scan({{1, 0}, {-1, 0}}, 50);
        CHECK(rep.margin_ok);
        CHECK(rep.shell_max[50] <= 1.0 + 1e-9);
        CHECK(rep.shell_max[50] / 51.0 < 0.05); // max|s| / dim on the top shell
    }
    SUBCASE("n = 3 fitted exponent") {
        const DegreeScanReport rep = cc_degree_scan({{1, 0}, {1, 0}, {-1, 0}}, 20);
        CHECK(rep.fitted_exponent <= 1.5);
        CHECK(rep.weyl_degree == doctest::Approx(3.0));
        CHECK(rep.margin_ok);
    }
    SUBCASE("central spectra are rejected") {
        CHECK_THROWS_AS((void)cc_degree_scan({{1, 0}, {1, 0}}, 10), std::invalid_argument);
    }
}

TEST_CASE("non-unit eigenvalues are rejected") {
    CHECK_THROWS_AS((void)schur_trace(Weight{{1, 0}}, {{2, 0}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS((void)regular_bound({{2, 0}, {1, 0}}), std::invalid_argument);
}

} // TEST_SUITE
