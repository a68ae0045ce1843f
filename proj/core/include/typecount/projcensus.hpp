#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "typecount/budget.hpp"
#include "typecount/linalg.hpp"

namespace typecount {

enum class CensusModel { Unramified, Ramified };
enum class CensusRoute { Brute, Formula };

// Point of the unramified coset model X_k: homogeneous coordinates
// [u_0 : ... : u_{n-1}] with u_i in O_E/p_E^k whose residues form an
// F_q-basis of F_{q^n}.  Every coordinate is a unit, so the canonical
// representative scales the first coordinate to 1.
struct UnramPoint {
    std::vector<RElem> u;
    bool operator==(const UnramPoint& o) const { return u == o.u; }
};

// Point of the ramified model X_k: [u_0 : u_1 w : ... : u_{n-1} w^{n-1}] for
// the uniformizer w of E, stored as the unit tuple (u_i in F_q[u]/(u^k)).
// Scalar equivalence multiplies all u_i by one unit; canonical form has
// u_0 = 1.
struct RamPoint {
    std::vector<RElem> u;
    bool operator==(const RamPoint& o) const { return u == o.u; }
};

struct CensusReport {
    CensusModel model = CensusModel::Unramified;
    std::uint64_t q = 0, n = 0;
    unsigned k = 0;
    std::uint64_t count = 0;
    CensusRoute route = CensusRoute::Brute;
    bool hensel_fallback = false;    // lifting fell back to fiber search
    bool every_point_fixed = false;  // k <= l regime
    bool not_iwahori = false;        // ramified g not conjugate into the Iwahori subgroup
};

// Maximal decomposition g = alpha + pi^l * a.  For a non-scalar residue the
// decomposition is the trivial passthrough l = 0.  In the ramified case l is
// the radical filtration level l = n*t + r of the Iwahori order, and a is the
// matrix a_ij = w^(j-i-l) h_ij over O_E with the invariants of the staggered
// system attached.
struct ScalarDecomp {
    unsigned l = 0;
    std::optional<RElem> alpha;          // over the base ring (absent for l = 0)
    std::optional<Mat> a;                // unramified: over base ring at level - l

    // ramified extras
    unsigned t = 0, r = 0;
    std::vector<std::vector<unsigned>> eps, e;
    std::optional<Mat> a_ram;            // over the ramified ring
    std::optional<RElem> eta;            // product of the r-shifted diagonal of a
};

std::uint64_t xk_size(CensusModel model, const TowerField& tf, unsigned k);

// full point sets, deterministic order
std::vector<UnramPoint> enum_unram_xk(const TowerField& tf, unsigned k,
                                      std::uint64_t budget = default_budget());
std::vector<RamPoint> enum_ram_xk(const TowerField& tf, unsigned k,
                                  std::uint64_t budget = default_budget());

// group actions; g over the base ring at a level >= the required working
// level (k for the unramified model, ceil((k+n-1)/n) for the ramified one)
unsigned unram_working_level(const TowerField& tf, unsigned k);
unsigned ram_working_level(const TowerField& tf, unsigned k);

UnramPoint act_unram(const TruncRing& gring, const Mat& g, const UnramPoint& x,
                     const TowerField& tf, unsigned k);
RamPoint act_ram(const TruncRing& gring, const Mat& g, const RamPoint& x,
                 const TowerField& tf, unsigned k);

// brute-force census: enumerate X_k and count fixed points.  For the
// ramified model, a g whose residue is not triangularizable over F_q fixes no
// coset (it is not conjugate into the Iwahori subgroup), reported as count 0;
// otherwise g is conjugated to Iwahori shape first.
CensusReport census(const TruncRing& gring, const Mat& g, CensusModel model,
                    const TowerField& tf, unsigned k,
                    std::uint64_t budget = default_budget(), unsigned threads = 0);

// formula-route census: roots of the characteristic polynomial (unramified,
// irreducible residue), the scalar-perturbation recursion with its lift
// multiplicity, or roots of charpoly(a) = x^n - eta + O(p_E) (ramified).
CensusReport census_formula(const TruncRing& gring, const Mat& g, CensusModel model,
                            const TowerField& tf, unsigned k,
                            std::uint64_t budget = default_budget());

// maximal scalar decomposition; throws std::domain_error if g is central at
// the working level.  `model` selects the filtration (matrix-algebra radical
// vs Iwahori radical).
ScalarDecomp scalar_reduction(const TruncRing& gring, const Mat& g, CensusModel model);

} // namespace typecount
