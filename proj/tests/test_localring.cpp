#include <doctest.h>

#include "typecount/localring.hpp"

using namespace typecount;

namespace {

// brute count of unit roots by substitution over the whole ring
std::size_t brute_root_count(const std::vector<RElem>& poly, const TruncRing& R) {
    std::size_t count = 0;
    for (std::uint64_t v = 0; v < R.size(); ++v) {
        const RElem x = R.element_at(v);
        RElem acc = R.zero();
        for (std::size_t i = poly.size(); i-- > 0;) acc = R.add(R.mul(acc, x), poly[i]);
        if (R.is_zero(acc)) ++count;
    }
    return count;
}

} // namespace

TEST_SUITE("localring") {

TEST_CASE("ring sizes") {
    const TowerField t22(2, 2);
    CHECK(make_ring(t22, RingKind::Base, 1).size() == 2);
    CHECK(make_ring(t22, RingKind::Unramified, 2).size() == 16);
    const TowerField t32(3, 2);
    CHECK(make_ring(t32, RingKind::Ramified, 3).size() == 27);
    CHECK_THROWS_AS(make_ring(t22, RingKind::Base, 0), std::invalid_argument);
}

TEST_CASE("valuation is additive and val(t) = n in the ramified model") {
    const TowerField tf(3, 2);
    const TruncRing R(tf, RingKind::Ramified, 4);
    CHECK(R.val(R.t_image()) == 2);
    CHECK(R.ram_index() == 2);
    for (std::uint64_t i = 0; i < R.size(); ++i)
        for (std::uint64_t j = 0; j < R.size(); j += 7) {
            const RElem a = R.element_at(i), b = R.element_at(j);
            const unsigned va = R.val(a), vb = R.val(b);
            if (va + vb < R.level()) CHECK(R.val(R.mul(a, b)) == va + vb);
        }
}

TEST_CASE("unit counts match the closed form") {
    for (const auto& [q, n] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{2, 2}, {3, 2}, {2, 3}}) {
        const TowerField tf(q, n);
        for (RingKind kind : {RingKind::Base, RingKind::Unramified, RingKind::Ramified}) {
            for (unsigned k = 1; k <= 4; ++k) {
                const TruncRing R(tf, kind, k);
                if (R.size() > (1ull << 16)) continue;
                std::uint64_t units = 0;
                for (std::uint64_t v = 0; v < R.size(); ++v)
                    if (R.is_unit(R.element_at(v))) ++units;
                CHECK(units == R.unit_count());
            }
        }
    }
    // the spec's closed form for the unramified level-k unit group
    const TowerField tf(2, 2);
    const TruncRing R(tf, RingKind::Unramified, 3);
    CHECK(R.unit_count() == (4 - 1) * 4 * 4);
}

TEST_CASE("inverses") {
    const TowerField tf(3, 2);
    for (RingKind kind : {RingKind::Unramified, RingKind::Ramified}) {
        const TruncRing R(tf, kind, 3);
        std::uint64_t checked = 0;
        for (std::uint64_t v = 0; v < R.size() && checked < 200; ++v) {
            const RElem a = R.element_at(v);
            if (!R.is_unit(a)) continue;
            CHECK(R.mul(a, R.inv(a)) == R.one());
            ++checked;
        }
        CHECK_THROWS_AS((void)R.inv(R.uniformizer()), std::domain_error);
    }
}

TEST_CASE("hensel lifting of simple roots is exact and level-stable") {
    const TowerField tf(2, 2);
    // x^2 + x + 1 over F_2 has two simple roots in F_4, hence exactly two
    // unit roots at every level
    for (unsigned k = 1; k <= 4; ++k) {
        const TruncRing R(tf, RingKind::Unramified, k);
        const std::vector<RElem> poly = {R.one(), R.one(), R.one()};
        const auto hr = hensel_roots(poly, R);
        CHECK(hr.roots.size() == 2);
        CHECK_FALSE(hr.hensel_fallback);
        for (const auto& r : hr.roots) {
            RElem acc = R.zero();
            for (std::size_t i = poly.size(); i-- > 0;) acc = R.add(R.mul(acc, r), poly[i]);
            CHECK(R.is_zero(acc));
        }
        CHECK(hr.roots.size() == brute_root_count(poly, R));
    }
}

TEST_CASE("x^2 - 1 over F_9[t]/(t^2) has exactly the two sign roots") {
    const TowerField tf(3, 2);
    const TruncRing R(tf, RingKind::Unramified, 2);
    const std::vector<RElem> poly = {R.neg(R.one()), R.zero(), R.one()};
    const auto hr = hensel_roots(poly, R);
    CHECK(hr.roots.size() == 2);
    CHECK_FALSE(hr.hensel_fallback);
    bool has_one = false, has_minus_one = false;
    for (const auto& r : hr.roots) {
        has_one = has_one || r == R.one();
        has_minus_one = has_minus_one || r == R.neg(R.one());
    }
    CHECK(has_one);
    CHECK(has_minus_one);
}

TEST_CASE("irreducible residue polynomial has no roots") {
    const TowerField tf(2, 2);
    const TruncRing R(tf, RingKind::Ramified, 3); // residue field F_2
    const std::vector<RElem> poly = {R.one(), R.one(), R.one()}; // x^2+x+1, irreducible over F_2
    CHECK(hensel_roots(poly, R).roots.empty());
}

TEST_CASE("nth power roots") {
    const TowerField tf(3, 2);
    const TruncRing R1(tf, RingKind::Unramified, 1);
    SUBCASE("eta = 1, n = 2 gives the two signs") {
        const auto hr = nth_power_roots(R1.one(), R1, 2);
        CHECK(hr.roots.size() == 2);
    }
    SUBCASE("a non-square has no square roots") {
        // squares have index 2 in the cyclic group F_9^x, so gen is not one
        const RElem eta = R1.from_coeffs({tf.gen()});
        CHECK(nth_power_roots(eta, R1, 2).roots.empty());
    }
}

TEST_CASE("n equal to the residual characteristic falls back to fiber search") {
    // x^2 - 1 = (x - 1)^2 over F_2: the residue root is multiple, lifting
    // must go exhaustive and raise the flag; the exact count at level k is
    // 2^floor(k/2) (solutions of z^2 = 0 shifted by 1)
    const TowerField tf(2, 2);
    for (unsigned k = 2; k <= 4; ++k) {
        const TruncRing R(tf, RingKind::Ramified, k);
        const auto hr = nth_power_roots(R.one(), R, 2);
        CHECK(hr.hensel_fallback);
        const std::vector<RElem> poly = {R.neg(R.one()), R.zero(), R.one()};
        CHECK(hr.roots.size() == brute_root_count(poly, R));
        CHECK(hr.roots.size() == (1u << (k / 2)));
    }
}

TEST_CASE("hensel preconditions") {
    const TowerField tf(2, 2);
    const TruncRing R(tf, RingKind::Unramified, 2);
    // non-unit constant term rejected
    const std::vector<RElem> bad = {R.uniformizer(), R.one(), R.one()};
    CHECK_THROWS_AS((void)hensel_roots(bad, R), std::invalid_argument);
}

TEST_CASE("budget refusal") {
    const TowerField tf(2, 2);
    const TruncRing R(tf, RingKind::Unramified, 4);
    const std::vector<RElem> poly = {R.one(), R.one(), R.one()};
    CHECK_THROWS_AS((void)hensel_roots(poly, R, 1), BudgetExceeded);
}

} // TEST_SUITE
