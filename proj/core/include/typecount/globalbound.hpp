#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "typecount/archweyl.hpp"

namespace typecount {

// exact rational arithmetic for the mass sums
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);
    static Rational integer(long long v) { return Rational(v, 1); }

    Rational operator+(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string to_string() const;
};

// The data Theorem-1.2-style bounds consume.  Masses |K_g| and the
// noncentral-term inputs (C_2 and the per-place polynomials P_v) come from
// the global arithmetic of the group and are supplied by the user; P_v is a
// polynomial in the weight gap a_1 - a_n of the place, of degree strictly
// below the Weyl polynomial degree.
struct GlobalConfig {
    unsigned n = 2;
    std::uint64_t mu_e = 1;                  // |mu_E|
    std::vector<std::uint64_t> masses;       // |K_g| over the double-coset set
    double c2 = 0.0;
    std::vector<std::vector<double>> pv;     // per infinite place: coeffs, low to high
    std::vector<std::uint64_t> places_q;     // residue cardinalities of candidate finite places

    void validate() const;                   // n prime, mu_E | masses, ...
};

struct TypeDescriptor {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> finite; // (q_v, dim_v) over S(tau)
    std::vector<Weight> arch;                                    // one dominant weight per place
};

// C_1 = |mu_E| * sum_g 1/|K_g|, exact
Rational c1(const GlobalConfig& cfg);

// smallest supercuspidal type dimension at a split place
std::uint64_t min_cuspidal_dim(std::uint64_t q_v, unsigned n);

// dim(tau) = prod dim_v * prod weyl_dim(lambda_v)
std::uint64_t type_dimension(const TypeDescriptor& desc, unsigned n);

double eval_pv(const std::vector<double>& coeffs, const Weight& lambda);

// C_1 dim(tau) - C_2 n^|S| prod_v P_v(lambda_v)
double lower_bound(const GlobalConfig& cfg, const TypeDescriptor& desc);

// Scan over finite-place subsets (at the minimal type dimension) and
// weight boxes; returns the descriptors with nonpositive bound plus a
// monotonicity certificate along each archimedean axis.
struct ScanEntry {
    TypeDescriptor desc;
    double bound = 0.0;
};

struct AxisCertificate {
    unsigned place = 0;
    bool eventually_increasing = false;
    long long crossover = 0;     // bound increases beyond this gap along the axis
};

struct PositivityScan {
    std::vector<ScanEntry> exceptional;      // bound <= 0 within the box
    std::vector<AxisCertificate> certificates;
    bool certified = false;                  // all axes eventually increasing
};

PositivityScan positivity_scan(const GlobalConfig& cfg, unsigned box);

// JSON round trip for the CLI config file:
// {n, mu_E, masses:[int], C_2, P_v:[{place, coeffs}], places:[{q}]}
GlobalConfig config_from_json_text(const std::string& text);
std::string config_to_json_text(const GlobalConfig& cfg);

} // namespace typecount
