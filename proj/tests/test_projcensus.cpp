#include <doctest.h>

#include "typecount/projcensus.hpp"

using namespace typecount;

namespace {

Mat companion_x2x1(const TruncRing& R) {
    // companion matrix of x^2 + x + 1
    Mat g = Mat::sized(R, 2);
    g.at(0, 1) = R.neg(R.one());
    g.at(1, 0) = R.one();
    g.at(1, 1) = R.neg(R.one());
    return g;
}

} // namespace

TEST_SUITE("projcensus") {

TEST_CASE("model sizes") {
    const TowerField t22(2, 2), t32(3, 2), t23(2, 3);
    CHECK(xk_size(CensusModel::Unramified, t22, 1) == 2);
    CHECK(xk_size(CensusModel::Unramified, t32, 1) == 6);
    CHECK(xk_size(CensusModel::Unramified, t22, 2) == 8);
    CHECK(xk_size(CensusModel::Ramified, t22, 1) == 1);
    CHECK(xk_size(CensusModel::Ramified, t32, 2) == 6);
    CHECK(xk_size(CensusModel::Ramified, t23, 1) == 1);
    for (const TowerField* tf : {&t22, &t32}) {
        for (unsigned k = 1; k <= 2; ++k) {
            CHECK(enum_unram_xk(*tf, k).size() == xk_size(CensusModel::Unramified, *tf, k));
            CHECK(enum_ram_xk(*tf, k).size() == xk_size(CensusModel::Ramified, *tf, k));
        }
    }
    CHECK(enum_unram_xk(t23, 1).size() == 24);
}

TEST_CASE("identity and scalars fix everything") {
    const TowerField tf(3, 2);
    const unsigned k = 2;
    const TruncRing R(tf, RingKind::Base, 2);
    const Mat id = mat_identity(R, 2);
    const auto unram = census(R, id, CensusModel::Unramified, tf, k);
    CHECK(unram.count == xk_size(CensusModel::Unramified, tf, k));
    CHECK(unram.every_point_fixed);
    const auto ram = census(R, id, CensusModel::Ramified, tf, k);
    CHECK(ram.count == xk_size(CensusModel::Ramified, tf, k));

    // a nontrivial scalar
    const Mat sc = mat_scalar(R, 2, R.from_residue(tf.from_fp(2)));
    CHECK(census(R, sc, CensusModel::Unramified, tf, k).count ==
          xk_size(CensusModel::Unramified, tf, k));
}

TEST_CASE("companion of x^2+x+1 fixes both points of X_1 over F_2") {
    const TowerField tf(2, 2);
    const TruncRing R(tf, RingKind::Base, 1);
    const Mat g = companion_x2x1(R);
    const auto pts = enum_unram_xk(tf, 1);
    CHECK(pts.size() == 2);
    for (const auto& p : pts) CHECK(act_unram(R, g, p, tf, 1) == p);
    CHECK(census(R, g, CensusModel::Unramified, tf, 1).count == 2);
}

TEST_CASE("the companion census is 2 at every level up to 3") {
    const TowerField tf(2, 2);
    for (unsigned k = 1; k <= 3; ++k) {
        const TruncRing R(tf, RingKind::Base, k);
        const Mat g = companion_x2x1(R);
        CHECK(census(R, g, CensusModel::Unramified, tf, k).count == 2);
        CHECK(census_formula(R, g, CensusModel::Unramified, tf, k).count == 2);
    }
}

TEST_CASE("act is a group action") {
    const TowerField tf(2, 2);
    const unsigned k = 2;
    const TruncRing R(tf, RingKind::Base, k);
    const auto pts = enum_unram_xk(tf, k);
    std::vector<Mat> els;
    for_each_invertible(R, 2, [&](const Mat& g) {
        els.push_back(g);
        return true;
    });
    for (std::size_t i = 0; i < els.size(); i += 7)
        for (std::size_t j = 0; j < els.size(); j += 11) {
            const Mat gh = mat_mul(R, els[i], els[j]);
            for (const auto& p : pts) {
                CHECK(act_unram(R, gh, p, tf, k) ==
                      act_unram(R, els[i], act_unram(R, els[j], p, tf, k), tf, k));
            }
        }
}

TEST_CASE("ramified action composes on the Iwahori subgroup") {
    const TowerField tf(3, 2);
    const unsigned k = 2;
    const TruncRing R(tf, RingKind::Base, ram_working_level(tf, k));
    std::vector<Mat> iwahori;
    for_each_invertible(R, 2, [&](const Mat& g) {
        if (R.residue(g.at(1, 0)) == 0) iwahori.push_back(g);
        return iwahori.size() < 40;
    });
    const auto pts = enum_ram_xk(tf, k);
    for (std::size_t i = 0; i < iwahori.size(); i += 5)
        for (std::size_t j = 0; j < iwahori.size(); j += 7) {
            const Mat gh = mat_mul(R, iwahori[i], iwahori[j]);
            for (const auto& p : pts)
                CHECK(act_ram(R, gh, p, tf, k) ==
                      act_ram(R, iwahori[i], act_ram(R, iwahori[j], p, tf, k), tf, k));
        }
    // non-Iwahori matrices are rejected by the action
    Mat bad = mat_identity(R, 2);
    bad.at(1, 0) = R.one();
    CHECK_THROWS_AS((void)act_ram(R, bad, pts[0], tf, k), std::invalid_argument);
}

TEST_CASE("projection of a fixed point is fixed") {
    const TowerField tf(3, 2);
    const TruncRing R(tf, RingKind::Base, 2);
    const TruncRing RE2(tf, RingKind::Unramified, 2);
    unsigned tested = 0;
    for_each_invertible(R, 2, [&](const Mat& g) {
        if (tested++ % 31 != 0) return true;
        for (const auto& p : enum_unram_xk(tf, 2)) {
            if (!(act_unram(R, g, p, tf, 2) == p)) continue;
            UnramPoint q;
            for (const auto& u : p.u) q.u.push_back(RE2.truncated(u, 1));
            CHECK(act_unram(R, g, q, tf, 1) == q);
        }
        return true;
    });
}

TEST_CASE("scalar reduction, unramified") {
    const TowerField tf(2, 2);
    const TruncRing R(tf, RingKind::Base, 3);

    SUBCASE("non-scalar residue passes through") {
        Mat g = mat_identity(R, 2);
        g.at(0, 1) = R.one();
        const auto dec = scalar_reduction(R, g, CensusModel::Unramified);
        CHECK(dec.l == 0);
        CHECK_FALSE(dec.alpha.has_value());
    }
    SUBCASE("constructed g = 1 + t^2 a") {
        Mat g = mat_identity(R, 2);
        RElem t2 = R.zero();
        t2.c[2] = tf.one();
        g.at(0, 1) = R.add(g.at(0, 1), t2);
        const auto dec = scalar_reduction(R, g, CensusModel::Unramified);
        CHECK(dec.l == 2);
        REQUIRE(dec.alpha.has_value());
        CHECK(*dec.alpha == R.one());
        REQUIRE(dec.a.has_value());
        CHECK_FALSE(mat_is_scalar(R.at_level(1), mat_residue(R.at_level(1), *dec.a)));
    }
    SUBCASE("central throws") {
        CHECK_THROWS_AS((void)scalar_reduction(R, mat_identity(R, 2), CensusModel::Unramified),
                        std::domain_error);
    }
}

TEST_CASE("stability under the scalar recursion") {
    // g = alpha + t^l a with a invertible: the fixed points at level k are
    // the full fibers over the fixed points of a at level k - l
    const TowerField tf(3, 2);
    const unsigned k = 2, l = 1;
    const TruncRing R(tf, RingKind::Base, k);
    const Mat a = companion_x2x1(R);
    Mat g = mat_identity(R, 2);
    for (unsigned i = 0; i < 2; ++i)
        for (unsigned j = 0; j < 2; ++j)
            g.at(i, j) = R.add(g.at(i, j), R.shift(a.at(i, j), static_cast<int>(l)));

    const auto full = census(R, g, CensusModel::Unramified, tf, k);
    const auto inner = census(R, a, CensusModel::Unramified, tf, k - l);
    std::uint64_t fiber = 1;
    for (unsigned i = 0; i < l * (2 - 1); ++i) fiber *= tf.order();
    CHECK(full.count == inner.count * fiber);
    CHECK(census_formula(R, g, CensusModel::Unramified, tf, k).count == full.count);

    // k <= l: every point is fixed
    const auto low = census(R, g, CensusModel::Unramified, tf, 1);
    CHECK(low.count == xk_size(CensusModel::Unramified, tf, 1));
    CHECK(low.every_point_fixed);
}

TEST_CASE("two distinct residue eigenvalues kill the census") {
    const TowerField tf(3, 2);
    const TruncRing R(tf, RingKind::Base, 2);
    Mat g = mat_identity(R, 2);
    g.at(1, 1) = R.from_residue(tf.from_fp(2)); // diag(1, 2)
    CHECK(census(R, g, CensusModel::Unramified, tf, 2).count == 0);
    CHECK(census(R, g, CensusModel::Ramified, tf, 2).count == 0);
    CHECK(census_formula(R, g, CensusModel::Unramified, tf, 2).count == 0);
    CHECK(census_formula(R, g, CensusModel::Ramified, tf, 2).count == 0);
}

TEST_CASE("ramified eta test") {
    const TowerField tf(3, 2);
    const unsigned k = 2;
    const TruncRing R(tf, RingKind::Base, ram_working_level(tf, k));

    // g = [[1, c], [t, 1]]: h has l = 1, r = 1, and eta-bar = c; fixed points
    // exist only when c is a square in F_3
    auto build = [&](std::uint64_t c) {
        Mat g = mat_identity(R, 2);
        g.at(0, 1) = R.from_residue(tf.from_fp(c));
        g.at(1, 0) = R.uniformizer();
        return g;
    };
    const auto square = census(R, build(1), CensusModel::Ramified, tf, k);
    const auto nonsquare = census(R, build(2), CensusModel::Ramified, tf, k);
    CHECK(nonsquare.count == 0);
    CHECK(square.count > 0);
    CHECK(census_formula(R, build(1), CensusModel::Ramified, tf, k).count == square.count);
    CHECK(census_formula(R, build(2), CensusModel::Ramified, tf, k).count == 0);

    const auto dec = scalar_reduction(R, build(2), CensusModel::Ramified);
    CHECK(dec.l == 1);
    CHECK(dec.r == 1);
    CHECK(dec.eps[0][1] == 0);
    CHECK(dec.eps[1][0] == 1);
    REQUIRE(dec.eta.has_value());
}

TEST_CASE("non-Iwahori-conjugate g has an empty ramified census") {
    const TowerField tf(2, 2);
    const TruncRing R(tf, RingKind::Base, 1);
    const Mat g = companion_x2x1(R); // irreducible charpoly: no eigenvalue in F_q
    const auto rep = census(R, g, CensusModel::Ramified, tf, 1);
    CHECK(rep.count == 0);
    CHECK(rep.not_iwahori);
}

TEST_CASE("census refuses over budget and is partition independent") {
    const TowerField tf(3, 2);
    const TruncRing R(tf, RingKind::Base, 2);
    const Mat g = companion_x2x1(R);
    CHECK_THROWS_AS((void)census(R, g, CensusModel::Unramified, tf, 2, 1), BudgetExceeded);
    const auto one = census(R, g, CensusModel::Unramified, tf, 2, default_budget(), 1);
    const auto four = census(R, g, CensusModel::Unramified, tf, 2, default_budget(), 4);
    CHECK(one.count == four.count);
}

TEST_CASE("non-invertible g is rejected") {
    const TowerField tf(2, 2);
    const TruncRing R(tf, RingKind::Base, 1);
    Mat g = Mat::sized(R, 2);
    g.at(0, 0) = R.one();
    CHECK_THROWS_AS((void)census(R, g, CensusModel::Unramified, tf, 1), std::invalid_argument);
}

} // TEST_SUITE
