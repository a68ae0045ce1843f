#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "typecount/budget.hpp"
#include "typecount/towerfield.hpp"

namespace typecount {

// The three truncated rings used throughout, all in equal characteristic:
//   Base        O_F / p_F^k    = F_q[t]/(t^k)
//   Unramified  O_E / p_E^k    = F_{q^n}[t]/(t^k)       (E/F unramified, deg n)
//   Ramified    O_E / p_E^k    = F_q[u]/(u^k), t = u^n  (E/F totally ramified)
enum class RingKind { Base, Unramified, Ramified };

// Ring elements are coefficient vectors in the uniformizer, length = level.
// Arithmetic goes through the owning TruncRing.
struct RElem {
    std::vector<FF> c;
    bool operator==(const RElem& o) const { return c == o.c; }
};

class TruncRing {
public:
    TruncRing(const TowerField& tf, RingKind kind, unsigned level);

    const TowerField& tower() const { return *tf_; }
    RingKind kind() const { return kind_; }
    unsigned level() const { return level_; }

    std::uint64_t residue_order() const;         // q^n if unramified, q otherwise
    std::uint64_t size() const;                  // residue_order^level
    std::uint64_t unit_count() const;            // (residue_order-1) * residue_order^(level-1)
    unsigned ram_index() const;                  // val_E(t): n if ramified, 1 otherwise

    RElem zero() const { return RElem{std::vector<FF>(level_, 0)}; }
    RElem one() const;
    RElem uniformizer() const;                   // t (base/unramified) or u (ramified)
    RElem t_image() const;                       // image of t; equals uniformizer^ram_index

    RElem from_residue(FF a) const;              // constant a (checked against the kind)
    RElem from_coeffs(std::vector<FF> c) const;
    FF residue(const RElem& a) const { return a.c[0]; }
    FF coeff(const RElem& a, unsigned i) const { return a.c[i]; }

    unsigned val(const RElem& a) const;          // level for the zero element
    bool is_unit(const RElem& a) const { return a.c[0] != 0; }
    bool is_zero(const RElem& a) const;

    RElem add(const RElem& a, const RElem& b) const;
    RElem sub(const RElem& a, const RElem& b) const;
    RElem neg(const RElem& a) const;
    RElem mul(const RElem& a, const RElem& b) const;
    RElem inv(const RElem& a) const;             // throws on non-units
    RElem pow(const RElem& a, std::uint64_t e) const;

    // multiply by uniformizer^s; for s < 0 requires val(a) >= -s
    RElem shift(const RElem& a, int s) const;
    RElem truncated(const RElem& a, unsigned new_level) const; // new_level <= level
    RElem lifted(const RElem& a, unsigned new_level) const;    // zero-pad to a higher level

    // deterministic enumeration: digits over the residue field, least
    // significant first; index in [0, size())
    RElem element_at(std::uint64_t index) const;
    std::uint64_t index_of(const RElem& a) const;

    TruncRing at_level(unsigned new_level) const { return TruncRing(*tf_, kind_, new_level); }

    std::string to_string(const RElem& a) const;

private:
    FF residue_field_element(std::uint64_t digit) const;
    std::uint64_t residue_field_index(FF a) const;
    void check_coeff(FF a) const;

    const TowerField* tf_;
    RingKind kind_;
    unsigned level_;
};

// make_ring: the spec-level constructor; base rings ignore n
TruncRing make_ring(const TowerField& tf, RingKind kind, unsigned level);

// Unit roots of a monic polynomial with unit constant term, found by scanning
// the residue field and lifting.  Simple residue roots lift uniquely
// (Newton digit by digit); multiple residue roots fall back to an exhaustive
// fiber search and raise hensel_fallback.  This happens exactly in the
// "n equal to the residual characteristic" situation of the ramified census.
struct HenselResult {
    std::vector<RElem> roots;
    bool hensel_fallback = false;
};

// poly coefficients low to high; must be monic with unit constant term
HenselResult hensel_roots(const std::vector<RElem>& poly, const TruncRing& ring,
                          std::uint64_t budget = default_budget());

// roots of x^e - eta for a unit eta
HenselResult nth_power_roots(const RElem& eta, const TruncRing& ring, unsigned e,
                             std::uint64_t budget = default_budget());

} // namespace typecount
