#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "typecount/budget.hpp"
#include "typecount/cycint.hpp"
#include "typecount/linalg.hpp"
#include "typecount/towerfield.hpp"

namespace typecount {

// One conjugacy class of GL_n(F_q), keyed by charpoly factorization together
// with the rank profile of each irreducible factor (a complete invariant).
struct ConjClassData {
    Mat rep;                                            // level-1 entries
    std::vector<std::pair<PolyR, unsigned>> factors;    // monic, with multiplicities
    std::uint64_t class_size = 0;
    // when the charpoly is a power of a single irreducible f:
    bool single_factor = false;
    unsigned d = 0;  // deg f
    unsigned r = 0;  // number of blocks: dim ker f(g) / d
    bool central = false;
};

// Cuspidal character of GL_n(F_q) attached to a regular orbit representative.
struct CuspidalCharacter {
    std::uint64_t k = 0;
};

// complete class list; deterministic order (by enumeration of representatives)
std::vector<ConjClassData> conj_classes(const TowerField& tf,
                                        std::uint64_t budget = default_budget());

// Green's formula for the cuspidal character value at a class:
//   (-1)^(n-1) * prod_{i<r} (1 - q^i) * sum over the d roots of f of theta^k,
// when the charpoly is a power of one irreducible f; zero otherwise.
CycInt green_value(CuspidalCharacter chi, const ConjClassData& c, const TowerField& tf);

// the full class-function vector of a cuspidal character, aligned to `classes`
std::vector<CycInt> green_class_function(CuspidalCharacter chi,
                                         const std::vector<ConjClassData>& classes,
                                         const TowerField& tf);

// exact inner product (1/|G|) sum size * f1 * conj(f2); throws if the result
// is not an exact cyclotomic integer (it always is for virtual characters)
CycInt inner_product(const std::vector<CycInt>& f1, const std::vector<CycInt>& f2,
                     const std::vector<ConjClassData>& classes, const TowerField& tf);

std::vector<CycInt> trivial_class_function(const std::vector<ConjClassData>& classes,
                                           const TowerField& tf);

// dimension of any cuspidal representation: (q-1)(q^2-1)...(q^(n-1)-1)
std::uint64_t cuspidal_dimension(const TowerField& tf);

// Theorem-3 style bound for depth-zero types at a noncentral class: n when
// the charpoly is irreducible, 0 with two or more distinct eigenvalues, the
// full dimension in the remaining (scalar times unipotent) case.
std::uint64_t depth_zero_bound(const ConjClassData& c, const TowerField& tf);

} // namespace typecount
