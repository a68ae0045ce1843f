#include <doctest.h>

#include <set>

#include "typecount/simpletypes.hpp"

using namespace typecount;

TEST_SUITE("simpletypes") {

TEST_CASE("unramified minimal data") {
    const TypeDatum d1 = make_minimal_unram(2, 2, 1);
    CHECK(d1.lambda_dim == 1);
    CHECK(d1.k == 1);
    CHECK(d1.working_level == 2);

    const TypeDatum d2 = make_minimal_unram(2, 2, 2);
    CHECK(d2.lambda_dim == 2); // q^((n^2-n)/2)
    CHECK(d2.k == 1);

    const TypeDatum d3 = make_minimal_unram(3, 2, 2);
    CHECK(d3.lambda_dim == 3);

    CHECK_THROWS_AS((void)make_minimal_unram(2, 2, 0), std::invalid_argument);
}

TEST_CASE("ramified minimal data and the Eisenstein model") {
    const TypeDatum d1 = make_minimal_ram(2, 2, 1);
    CHECK(d1.beta_pole == 1);
    CHECK_THROWS_AS((void)make_minimal_ram(2, 2, 2), std::invalid_argument); // gcd(2,2) != 1
    const TypeDatum d3 = make_minimal_ram(2, 3, 2);
    CHECK(d3.n == 3);
    CHECK(d3.m == 2);

    // Pi^n = t for the uniformizer matrix used by the model
    const TowerField& tf = *d1.tower;
    const TruncRing R(tf, RingKind::Base, d1.working_level);
    Mat Pi = Mat::sized(R, 2);
    Pi.at(1, 0) = R.one();
    Pi.at(0, 1) = R.uniformizer();
    const Mat Pi2 = mat_mul(R, Pi, Pi);
    CHECK(Pi2 == mat_scalar(R, 2, R.uniformizer()));
}

TEST_CASE("group data at the working level") {
    const TypeDatum d = make_minimal_unram(2, 2, 2);
    const GroupData gd = group_data(d);
    CHECK(gd.w_dim == 2);
    CHECK(gd.w_order == 4);
    CHECK(gd.j1_order / gd.h1_order == 4);              // |J^1/H^1| = q^(n^2-n)
    CHECK(gd.j_mod_j1 == 3);                            // |k_E^x| = q^n - 1
    CHECK(gd.j_order / gd.h1_order == gd.w_order * gd.j_mod_j1); // [J:H^1] = |W| |k_E^x|

    const GroupData g32 = group_data(make_minimal_unram(3, 2, 2));
    CHECK(g32.j_mod_j1 == 8);

    const GroupData g23 = group_data(make_minimal_unram(2, 3, 2));
    CHECK(g23.w_dim == 6);

    CHECK_THROWS_AS((void)group_data(make_minimal_unram(2, 2, 1)), std::invalid_argument); // m odd
    CHECK_THROWS_AS((void)group_data(make_minimal_ram(2, 3, 2)), std::invalid_argument);
}

TEST_CASE("group orders against brute product sets, smallest grid") {
    // q = 2, n = 2, m = 2: working level 3, k = 1
    const TypeDatum d = make_minimal_unram(2, 2, 2);
    const TowerField& tf = *d.tower;
    const unsigned L = d.working_level;
    const TruncRing R(tf, RingKind::Base, L);
    const TruncRing Rsub(tf, RingKind::Base, L - 1);
    const GroupData gd = group_data(d);

    // image of 1 + p_E: matrices 1 + t (a0 + a1 C) with a_i in O/t^(L-1)
    std::vector<Mat> one_pe;
    const Mat C = d.beta_unit;
    for (std::uint64_t i = 0; i < Rsub.size(); ++i)
        for (std::uint64_t j = 0; j < Rsub.size(); ++j) {
            const RElem a0 = R.shift(Rsub.lifted(Rsub.element_at(i), L), 1);
            const RElem a1 = R.shift(Rsub.lifted(Rsub.element_at(j), L), 1);
            Mat z = mat_add(R, mat_scalar(R, 2, a0), mat_scale(R, C, a1));
            one_pe.push_back(mat_add(R, mat_identity(R, 2), z));
        }

    // image of 1 + P^j for j = k, k+1
    auto one_pj = [&](unsigned j) {
        std::vector<Mat> out;
        const TruncRing Rj(tf, RingKind::Base, L - j);
        std::uint64_t total = 1;
        for (unsigned e = 0; e < 4; ++e) total *= Rj.size();
        for (std::uint64_t v = 0; v < total; ++v) {
            Mat m = mat_identity(R, 2);
            std::uint64_t rem = v;
            for (unsigned e = 0; e < 4; ++e) {
                const RElem digit = R.shift(Rj.lifted(Rj.element_at(rem % Rj.size()), L),
                                            static_cast<int>(j));
                m.a[e] = R.add(m.a[e], digit);
                rem /= Rj.size();
            }
            out.push_back(m);
        }
        return out;
    };

    auto key_of = [&](const Mat& m) {
        std::vector<std::uint64_t> key;
        for (const auto& e : m.a) key.push_back(R.index_of(e));
        return key;
    };

    std::set<std::vector<std::uint64_t>> j1set, h1set;
    for (const auto& a : one_pe) {
        for (const auto& b : one_pj(d.k)) j1set.insert(key_of(mat_mul(R, a, b)));
        for (const auto& b : one_pj(d.k + 1)) h1set.insert(key_of(mat_mul(R, a, b)));
    }
    CHECK(j1set.size() == gd.j1_order);
    CHECK(h1set.size() == gd.h1_order);
}

TEST_CASE("psi_beta is a character of 1 + P^ceil((m+1)/2)") {
    const TypeDatum d = make_minimal_unram(2, 2, 2);
    const TowerField& tf = *d.tower;
    const unsigned L = d.working_level;
    const TruncRing R(tf, RingKind::Base, L);
    const unsigned dom = (d.m + 2) / 2;

    // enumerate x = 1 + t^dom * M over all digit matrices at the remaining depth
    std::vector<Mat> xs;
    const TruncRing Rd(tf, RingKind::Base, L - dom);
    std::uint64_t total = 1;
    for (unsigned e = 0; e < 4; ++e) total *= Rd.size();
    for (std::uint64_t v = 0; v < total; ++v) {
        Mat m = mat_identity(R, 2);
        std::uint64_t rem = v;
        for (unsigned e = 0; e < 4; ++e) {
            m.a[e] = R.add(m.a[e], R.shift(Rd.lifted(Rd.element_at(rem % Rd.size()), L),
                                           static_cast<int>(dom)));
            rem /= Rd.size();
        }
        xs.push_back(m);
    }
    for (const auto& x : xs)
        for (const auto& y : xs) {
            const CycInt lhs = psi_beta_value(d, mat_mul(R, x, y));
            const CycInt rhs = psi_beta_value(d, x) * psi_beta_value(d, y);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("pairing Gram matrix, smallest case") {
    const TypeDatum d = make_minimal_unram(2, 2, 2);
    const PairingMatrix pm = theta_pairing(d);
    CHECK(pm.dim == 2);
    CHECK(pm.rank == 2);
    for (unsigned s = 0; s < pm.dim; ++s) CHECK(pm.gram[s * pm.dim + s] == 0);
    CHECK_THROWS_AS((void)theta_pairing(make_minimal_unram(2, 2, 3)), std::invalid_argument);
}

TEST_CASE("iwahori index") {
    CHECK(iwahori_index(2, 2) == 3);
    CHECK(iwahori_index(3, 2) == 4);
    CHECK(iwahori_index(2, 3) == 21);
}

TEST_CASE("trace bounds") {
    const TypeDatum d = make_minimal_unram(3, 2, 2);
    const TowerField& tf = *d.tower;
    const TruncRing R(tf, RingKind::Base, d.working_level);

    SUBCASE("irreducible residue charpoly stays at most n") {
        // companion of x^2 + 1, irreducible over F_3
        Mat g = Mat::sized(R, 2);
        g.at(0, 1) = R.neg(R.one());
        g.at(1, 0) = R.one();
        const TraceBound tb = type_trace_bound(R, g, d);
        CHECK(tb.lemma_applies);
        CHECK(tb.per_point == 1);
        CHECK(tb.bound <= 2);
    }
    SUBCASE("two distinct eigenvalues give zero") {
        Mat g = mat_identity(R, 2);
        g.at(1, 1) = R.from_residue(tf.from_fp(2));
        CHECK(type_trace_bound(R, g, d).bound == 0);
    }
    SUBCASE("scalar-mod-p case stays under the closed form") {
        // g = 1 + t * companion: l = 1, census(k=1) = |X_1|
        Mat g = mat_identity(R, 2);
        Mat a = Mat::sized(R, 2);
        a.at(0, 1) = R.neg(R.one());
        a.at(1, 0) = R.one();
        a.at(1, 1) = R.neg(R.one());
        for (unsigned i = 0; i < 2; ++i)
            for (unsigned j = 0; j < 2; ++j) g.at(i, j) = R.add(g.at(i, j), R.shift(a.at(i, j), 1));
        const TraceBound tb = type_trace_bound(R, g, d);
        CHECK_FALSE(tb.lemma_applies);
        CHECK(tb.per_point == d.lambda_dim);
        // n * (#k_E)^(l n) * lambda_dim with l = 1
        const std::uint64_t closed_form = 2 * 81 * d.lambda_dim;
        CHECK(tb.bound <= closed_form);
    }
    SUBCASE("central g is rejected") {
        CHECK_THROWS_AS((void)type_trace_bound(R, mat_identity(R, 2), d), std::invalid_argument);
    }
}

TEST_CASE("exhaustive bound grid at level 2") {
    for (std::uint64_t q : {2, 3}) {
        for (unsigned m = 1; m <= 4; ++m) {
            const TypeDatum d = make_minimal_unram(q, 2, m);
            const TowerField& tf = *d.tower;
            const TruncRing R(tf, RingKind::Base, std::max(2u, d.k));
            for_each_invertible(R, 2, [&](const Mat& g) {
                if (mat_is_scalar(R, g)) return true;
                const TruncRing R1 = R.at_level(1);
                if (!irreducible1(R1, charpoly(R1, mat_residue(R, g)))) return true;
                CHECK(type_trace_bound(R, g, d).bound <= 2);
                return true;
            });
        }
    }
}

TEST_CASE("ramified bound includes the Iwahori index") {
    const TypeDatum d = make_minimal_ram(3, 2, 1);
    const TowerField& tf = *d.tower;
    const TruncRing R(tf, RingKind::Base, d.working_level);
    Mat g = mat_identity(R, 2);
    g.at(0, 1) = R.one();
    const TraceBound tb = type_trace_bound(R, g, d);
    CHECK(tb.index_factor == 4);
    CHECK(tb.bound == tb.census_count * tb.per_point * 4);
}

} // TEST_SUITE
