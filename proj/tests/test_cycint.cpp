#include <doctest.h>

#include <random>

#include "typecount/cycint.hpp"

using namespace typecount;

TEST_SUITE("cycint") {

TEST_CASE("prime coset sums vanish") {
    CHECK((CycInt::root(3, 0) + CycInt::root(3, 1) + CycInt::root(3, 2)).is_zero());
    CHECK((CycInt::root(5, 1) + CycInt::root(5, 2) + CycInt::root(5, 3) + CycInt::root(5, 4) +
           CycInt::root(5, 0))
              .is_zero());
    // rotated coset of the order-2 subgroup of mu_8
    CHECK((CycInt::root(8, 3) + CycInt::root(8, 7)).is_zero());
}

TEST_CASE("quadratic identities") {
    CHECK(CycInt::root(4, 1) * CycInt::root(4, 1) == CycInt::integer(4, -1));
    CHECK(CycInt::root(3, 1) + CycInt::root(3, 2) == CycInt::integer(3, -1));
    CHECK(CycInt::root(6, 1) * CycInt::root(6, 5) == CycInt::integer(6, 1));
}

TEST_CASE("conjugation") {
    const CycInt z = CycInt::root(8, 3);
    CHECK(z.conj() == CycInt::root(8, 5));
    CHECK((z * z.conj()) == CycInt::integer(8, 1));
    CHECK(CycInt::integer(8, 7).conj() == CycInt::integer(8, 7));
}

TEST_CASE("as_integer and exact_div") {
    CHECK(CycInt::integer(12, 42).as_integer() == 42);
    CHECK_THROWS_AS((void)CycInt::root(12, 1).as_integer(), std::domain_error);
    CHECK(CycInt::integer(8, 6).exact_div(3) == CycInt::integer(8, 2));
    CHECK_THROWS_AS((void)CycInt::integer(8, 7).exact_div(2), std::domain_error);
}

TEST_CASE("numeric evaluation tracks exact arithmetic") {
    std::mt19937 rng(7);
    for (std::uint32_t m : {8u, 12u, 24u, 63u}) {
        std::uniform_int_distribution<std::uint32_t> pick(0, m - 1);
        CycInt exact = CycInt::integer(m, 1);
        std::complex<long double> numeric(1.0L, 0.0L);
        for (int i = 0; i < 50; ++i) {
            const auto j = pick(rng);
            const CycInt z = CycInt::root(m, j) + CycInt::integer(m, 1);
            exact = exact * z;
            numeric *= z.to_complex();
        }
        const double err = static_cast<double>(std::abs(exact.to_complex() - numeric));
        const double scale = std::max(1.0, static_cast<double>(std::abs(numeric)));
        CHECK(err / scale < 1e-10);
    }
}

TEST_CASE("rendering") {
    CHECK(CycInt::zero(8).to_string() == "0");
    CHECK(CycInt::integer(8, -3).to_string() == "-3");
    CHECK((CycInt::root(8, 1) + CycInt::integer(8, 2)).to_string() == "2 + z(8)^1");
}

} // TEST_SUITE
