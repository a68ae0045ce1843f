#include <doctest.h>

#include "typecount/greenchar.hpp"

using namespace typecount;

namespace {

std::uint64_t total_size(const std::vector<ConjClassData>& classes) {
    std::uint64_t s = 0;
    for (const auto& c : classes) s += c.class_size;
    return s;
}

const ConjClassData* find_identity(const std::vector<ConjClassData>& classes, const TowerField& tf) {
    const TruncRing R1(tf, RingKind::Base, 1);
    for (const auto& c : classes)
        if (c.rep == mat_identity(R1, static_cast<unsigned>(tf.n()))) return &c;
    return nullptr;
}

} // namespace

TEST_SUITE("greenchar") {

TEST_CASE("class lists") {
    const TowerField t22(2, 2);
    const auto c22 = conj_classes(t22);
    CHECK(c22.size() == 3);
    CHECK(total_size(c22) == 6);

    const TowerField t32(3, 2);
    const auto c32 = conj_classes(t32);
    CHECK(c32.size() == 8);
    CHECK(total_size(c32) == 48);

    const TowerField t23(2, 3);
    const auto c23 = conj_classes(t23);
    CHECK(c23.size() == 6);
    CHECK(total_size(c23) == 168);
}

TEST_CASE("block counts from rank sequences") {
    const TowerField tf(2, 2);
    const auto classes = conj_classes(tf);
    for (const auto& c : classes) {
        if (!c.single_factor) continue;
        if (c.central) CHECK(c.r == 2);                   // identity: two blocks
        else if (c.d == 1) CHECK(c.r == 1);               // transvection: one block
        else CHECK(c.r == 1);                             // elliptic: one companion block
    }
}

TEST_CASE("identity value is the dimension") {
    const TowerField tf(3, 2);
    const auto classes = conj_classes(tf);
    const auto* id = find_identity(classes, tf);
    REQUIRE(id != nullptr);
    CHECK(cuspidal_dimension(tf) == 2);
    for (auto k : regular_orbits(tf))
        CHECK(green_value({k}, *id, tf) == CycInt::integer(8, 2));
}

TEST_CASE("elliptic value over F_2") {
    const TowerField tf(2, 2);
    const auto classes = conj_classes(tf);
    for (const auto& c : classes) {
        if (!c.single_factor || c.d != 2) continue;
        // -(zeta_3 + zeta_3^2) = 1
        CHECK(green_value({1}, c, tf) == CycInt::integer(3, 1));
    }
}

TEST_CASE("split classes vanish") {
    const TowerField tf(3, 2);
    const auto classes = conj_classes(tf);
    bool found = false;
    for (const auto& c : classes) {
        if (c.single_factor) continue;
        found = true;
        for (auto k : regular_orbits(tf)) CHECK(green_value({k}, c, tf).is_zero());
    }
    CHECK(found);
}

TEST_CASE("non-regular index is rejected") {
    const TowerField tf(3, 2);
    const auto classes = conj_classes(tf);
    CHECK_THROWS_AS((void)green_value({0}, classes[0], tf), std::invalid_argument);
    CHECK_THROWS_AS((void)green_value({4}, classes[0], tf), std::invalid_argument);
}

TEST_CASE("inner products over GL_2(F_3)") {
    const TowerField tf(3, 2);
    const auto classes = conj_classes(tf);
    const auto orbits = regular_orbits(tf);
    REQUIRE(orbits.size() == 3);
    std::vector<std::vector<CycInt>> chars;
    for (auto k : orbits) chars.push_back(green_class_function({k}, classes, tf));
    for (std::size_t i = 0; i < chars.size(); ++i) {
        CHECK(inner_product(chars[i], chars[i], classes, tf) == CycInt::integer(8, 1));
        for (std::size_t j = i + 1; j < chars.size(); ++j)
            CHECK(inner_product(chars[i], chars[j], classes, tf).is_zero());
        CHECK(inner_product(chars[i], trivial_class_function(classes, tf), classes, tf).is_zero());
    }
}

TEST_CASE("depth zero bounds") {
    const TowerField t32(3, 2);
    const auto classes = conj_classes(t32);
    for (const auto& c : classes) {
        if (c.central) {
            CHECK_THROWS_AS((void)depth_zero_bound(c, t32), std::invalid_argument);
            continue;
        }
        const auto b = depth_zero_bound(c, t32);
        if (c.single_factor && c.d == 2) CHECK(b == 2);
        if (!c.single_factor) CHECK(b == 0);
        if (c.single_factor && c.d == 1) CHECK(b == cuspidal_dimension(t32));
        // the bound honors the actual values
        for (auto k : regular_orbits(t32))
            CHECK(cyc_abs(green_value({k}, c, t32)) <= static_cast<double>(b) + 1e-9);
    }
}

TEST_CASE("unipotent value over F_2 stays within the bound") {
    const TowerField tf(2, 2);
    const auto classes = conj_classes(tf);
    for (const auto& c : classes) {
        if (!c.single_factor || c.d != 1 || c.central) continue;
        const CycInt v = green_value({1}, c, tf);
        CHECK(v == CycInt::integer(3, -1)); // -theta(1) = -1
        CHECK(cyc_abs(v) <= static_cast<double>(depth_zero_bound(c, tf)) + 1e-9);
    }
}

TEST_CASE("cuspidal count equals the regular orbit count") {
    for (const auto& [q, n] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{2, 2}, {3, 2}, {2, 3}}) {
        const TowerField tf(q, n);
        const auto orbits = regular_orbits(tf);
        std::uint64_t regular = 0;
        for (std::uint64_t k = 0; k < tf.order() - 1; ++k)
            if (is_regular({k}, tf)) ++regular;
        CHECK(orbits.size() * n == regular);
    }
}

TEST_CASE("budget refusal") {
    const TowerField tf(3, 2);
    CHECK_THROWS_AS((void)conj_classes(tf, 1), BudgetExceeded);
}

} // TEST_SUITE
