#include <doctest.h>

#include <set>

#include "typecount/towerfield.hpp"

using namespace typecount;

TEST_SUITE("towerfield") {

TEST_CASE("construction of the smallest towers") {
    for (const auto& [q, n] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{
             {2, 2}, {3, 2}, {2, 3}, {4, 2}, {5, 2}}) {
        const TowerField tf(q, n);
        CHECK(tf.q() == q);
        CHECK(tf.n() == n);
        std::uint64_t qn = 1;
        for (std::uint64_t i = 0; i < n; ++i) qn *= q;
        CHECK(tf.order() == qn);
        // the generator has full multiplicative order
        FF acc = tf.gen();
        std::uint64_t ord = 1;
        while (acc != tf.one()) {
            acc = tf.mul(acc, tf.gen());
            ++ord;
        }
        CHECK(ord == tf.order() - 1);
    }
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(TowerField(2, 4), std::invalid_argument);  // n not prime
    CHECK_THROWS_AS(TowerField(6, 2), std::invalid_argument);  // q not a prime power
    CHECK_THROWS_AS(TowerField(1, 2), std::invalid_argument);
}

TEST_CASE("frobenius fixes exactly the base subfield") {
    for (const auto& [q, n] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{
             {2, 2}, {3, 2}, {2, 3}, {4, 2}}) {
        const TowerField tf(q, n);
        std::uint64_t fixed = 0;
        for (FF a = 0; a < tf.order(); ++a) {
            const bool fix = tf.frobenius(a) == a;
            CHECK(fix == tf.in_base(a));
            if (fix) ++fixed;
        }
        CHECK(fixed == q);
    }
}

TEST_CASE("regularity of character indices") {
    const TowerField t22(2, 2), t32(3, 2);
    CHECK_FALSE(is_regular({0}, t22));
    CHECK(is_regular({1}, t22));
    CHECK_FALSE(is_regular({4}, t32)); // 4*3 = 12 = 4 mod 8
}

TEST_CASE("regular orbits") {
    const TowerField t22(2, 2);
    CHECK(regular_orbits(t22) == std::vector<std::uint64_t>{1});
    const TowerField t32(3, 2);
    CHECK(regular_orbits(t32) == std::vector<std::uint64_t>{1, 2, 5});
    const TowerField t23(2, 3);
    CHECK(regular_orbits(t23) == std::vector<std::uint64_t>{1, 3});
    // each regular orbit has exactly n members
    for (const TowerField* tf : {&t22, &t32, &t23})
        for (auto k : regular_orbits(*tf)) CHECK(frobenius_orbit({k}, *tf).size() == tf->n());
}

TEST_CASE("character values") {
    const TowerField tf(2, 2);
    CHECK(char_value({1}, tf.one(), tf) == CycInt::integer(3, 1));
    CHECK(char_value({0}, tf.gen(), tf) == CycInt::integer(3, 1));
    // theta(omega) + theta(omega^2) = zeta_3 + zeta_3^2 = -1
    const CycInt sum = char_value({1}, tf.gen(), tf) + char_value({1}, tf.mul(tf.gen(), tf.gen()), tf);
    CHECK(sum == CycInt::integer(3, -1));
    CHECK(cyc_abs(sum) == doctest::Approx(1.0));
    CHECK_THROWS_AS((void)char_value({1}, tf.zero(), tf), std::domain_error);
}

TEST_CASE("characters are multiplicative") {
    for (const auto& [q, n] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{
             {2, 2}, {3, 2}, {2, 3}, {4, 2}, {5, 2}, {3, 3}}) {
        const TowerField tf(q, n);
        if (tf.order() > 64) continue;
        const std::uint64_t k = 1 + (tf.order() / 2);
        for (FF x = 1; x < tf.order(); ++x)
            for (FF y = 1; y < tf.order(); ++y) {
                const CycInt lhs = char_value({k}, tf.mul(x, y), tf);
                const CycInt rhs = char_value({k}, x, tf) * char_value({k}, y, tf);
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("cyc_abs examples") {
    CHECK(cyc_abs(CycInt::integer(8, 1)) == doctest::Approx(1.0));
    CHECK(cyc_abs(CycInt::zero(8)) == doctest::Approx(0.0));
}

TEST_CASE("coordinates over the base recompose") {
    for (const auto& [q, n] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{
             {2, 2}, {3, 2}, {2, 3}, {4, 2}}) {
        const TowerField tf(q, n);
        for (FF a = 0; a < tf.order(); ++a) {
            const auto co = tf.coords_over_base(a);
            FF acc = 0;
            for (std::uint64_t j = 0; j < n; ++j) {
                CHECK(tf.in_base(co[j]));
                acc = tf.add(acc, tf.mul(co[j], tf.pow(tf.gen(), j)));
            }
            CHECK(acc == a);
        }
    }
}

TEST_CASE("prime-field traces") {
    const TowerField tf(4, 2);
    CHECK(tf.characteristic() == 2);
    CHECK(tf.base_degree() == 2);
    for (FF a = 0; a < tf.order(); ++a) {
        const unsigned t = tf.abs_trace(a);
        CHECK(t < 2);
    }
    // base_trace rejects non-base elements
    bool found_outside = false;
    for (FF a = 0; a < tf.order() && !found_outside; ++a) {
        if (tf.in_base(a)) continue;
        found_outside = true;
        CHECK_THROWS_AS((void)tf.base_trace(a), std::domain_error);
    }
}

} // TEST_SUITE
