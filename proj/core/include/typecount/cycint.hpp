#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace typecount {

// Exact cyclotomic integers: elements of Z[zeta_m], stored as integer
// coefficient vectors on the m-th roots of unity.  The only relations among
// roots of unity are generated by the rotated prime-coset sums
//     sum_{c=0}^{p-1} zeta^(j + c*m/p) = 0   for primes p | m,
// so reducing against those gives a faithful model of Z[zeta_m].
//
// Canonical form: for each prime p | m with p^a || m, the exponents j whose
// leading base-p digit of (j mod p^a) equals p-1 are eliminated.  The
// surviving phi(m) exponents form a Z-basis, so equality is coefficient
// equality.
class CycInt {
public:
    CycInt() : m_(1), c_(1, 0) {}
    explicit CycInt(std::uint32_t order) : m_(order), c_(order, 0) { require_order(order); }

    static CycInt zero(std::uint32_t order) { return CycInt(order); }
    static CycInt integer(std::uint32_t order, std::int64_t v);
    // zeta_order^j, canonicalized
    static CycInt root(std::uint32_t order, std::uint64_t j);

    std::uint32_t order() const { return m_; }
    bool is_zero() const;
    // the value as a rational integer, if it is one (throws otherwise)
    std::int64_t as_integer() const;

    CycInt operator+(const CycInt& o) const;
    CycInt operator-(const CycInt& o) const;
    CycInt operator-() const;
    CycInt operator*(const CycInt& o) const;
    CycInt scaled(std::int64_t k) const;
    CycInt conj() const;

    bool operator==(const CycInt& o) const;
    bool operator!=(const CycInt& o) const { return !(*this == o); }

    // divide every coefficient by d, throwing if not exactly divisible
    CycInt exact_div(std::int64_t d) const;

    std::complex<long double> to_complex() const;
    double abs() const;

    // rendering like "1 + 2*z(8)^3 - z(8)^5"
    std::string to_string() const;

    const std::vector<std::int64_t>& coeffs() const { return c_; }

private:
    static void require_order(std::uint32_t m);
    void canonicalize();

    std::uint32_t m_;
    std::vector<std::int64_t> c_; // length m_, canonical support
};

} // namespace typecount
