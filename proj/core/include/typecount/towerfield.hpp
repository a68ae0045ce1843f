#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "typecount/cycint.hpp"

namespace typecount {

// Field element handle: 0 encodes the zero element, v in [1, q^n-1] encodes
// gen^(v-1).  Handles are only meaningful relative to their TowerField.
using FF = std::uint32_t;

// The residue-field tower F_q < F_{q^n} for a prime power q and a prime n,
// with exact arithmetic in F_{q^n} and the base subfield distinguished.
//
// F_{q^n} is built as F_p[x]/(modulus) where q = p^f.  The modulus is the
// first monic irreducible polynomial of degree f*n, in ascending order of the
// integer encoding sum(c_i p^i) of its non-leading coefficients, whose root x
// generates the multiplicative group; the generator is the class of x.  This
// pins down every discrete logarithm, so character exponents are reproducible
// across runs.
class TowerField {
public:
    TowerField(std::uint64_t q, std::uint64_t n);

    static bool is_prime(std::uint64_t v);
    // if v = p^f, reports p and f
    static bool is_prime_power(std::uint64_t v, std::uint64_t* p = nullptr, std::uint64_t* f = nullptr);

    std::uint64_t q() const { return q_; }
    std::uint64_t n() const { return n_; }
    std::uint64_t order() const { return order_; }              // q^n
    std::uint64_t characteristic() const { return p_; }
    std::uint64_t base_degree() const { return f_; }            // q = p^f
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    FF zero() const { return 0; }
    FF one() const { return 1; }
    FF gen() const { return order_ > 2 ? 2 : 1; }
    bool is_zero(FF a) const { return a == 0; }

    FF add(FF a, FF b) const;
    FF neg(FF a) const;
    FF sub(FF a, FF b) const { return add(a, neg(b)); }
    FF mul(FF a, FF b) const;
    FF inv(FF a) const;
    FF pow(FF a, std::uint64_t e) const;
    FF frobenius(FF a) const { return pow(a, q_); }             // x -> x^q

    bool in_base(FF a) const;                                   // member of F_q
    bool in_prime_field(FF a) const;

    std::uint64_t dlog(FF a) const;                             // a = gen^dlog(a), a != 0
    FF from_dlog(std::uint64_t j) const;

    // deterministic enumerations: index 0 is zero, nonzero elements follow in
    // polynomial-coordinate order
    std::vector<FF> base_elements() const;
    std::vector<FF> all_elements() const;
    FF base_element(std::uint64_t index) const;                 // index in [0, q)
    std::uint64_t base_index(FF a) const;

    // packed polynomial representation sum(c_i p^i) over F_p, for I/O
    std::uint64_t poly_index(FF a) const;
    FF from_poly_index(std::uint64_t v) const;

    unsigned fp_value(FF a) const;                              // prime-subfield element as 0..p-1
    FF from_fp(std::uint64_t v) const;
    unsigned abs_trace(FF a) const;                             // Tr to F_p, as 0..p-1
    unsigned base_trace(FF a) const;                            // Tr_{F_q/F_p}(a) for a in F_q

    // coordinates of a in the F_q-basis {1, gen, ..., gen^(n-1)} of F_{q^n}
    std::vector<FF> coords_over_base(FF a) const;

private:
    std::uint64_t q_, n_, p_, f_, order_;
    std::uint64_t sub_stride_;   // (q^n-1)/(q-1): F_q^x = powers of gen^sub_stride
    std::uint64_t fp_stride_;    // (q^n-1)/(p-1)
    std::vector<std::uint32_t> modulus_;          // degree f*n, coefficients low to high
    std::vector<std::uint32_t> idx_to_poly_;      // handle-1 -> packed poly
    std::vector<FF> poly_to_idx_;                 // packed poly -> handle
    std::vector<FF> base_elems_;                  // F_q in enumeration order
    std::vector<FF> basis_coord_table_;           // order_ * n coords over base
};

// A character index k of F_{q^n}^x (theta^k for the fixed reference character
// theta = "dlog to zeta_{q^n-1}").
struct CharacterIndex {
    std::uint64_t k = 0;
};

// k is regular iff its Frobenius orbit {k, kq, ..., kq^(n-1)} mod q^n-1 has n
// distinct members.
bool is_regular(CharacterIndex k, const TowerField& tf);

// minimal representatives of the regular Frobenius orbits, ascending
std::vector<std::uint64_t> regular_orbits(const TowerField& tf);

// full Frobenius orbit of k, sorted
std::vector<std::uint64_t> frobenius_orbit(CharacterIndex k, const TowerField& tf);

// theta^k(x) as an exact cyclotomic integer of order q^n - 1
CycInt char_value(CharacterIndex k, FF x, const TowerField& tf);

double cyc_abs(const CycInt& v);

} // namespace typecount
