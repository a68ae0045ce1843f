#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "typecount/cycint.hpp"
#include "typecount/linalg.hpp"
#include "typecount/projcensus.hpp"

namespace typecount {

enum class TypeCase { Unramified, Ramified };

// Positive-depth simple-type data at finite level.  beta = t^(-pole) * unit
// with the unit part stored over the base ring at the working level m+1,
// the smallest level at which H^1, J^1, J and the character theta are all
// defined.
//
// Unramified: beta = t^(-m) C for C the companion matrix of the minimal
// polynomial of the fixed field generator, so E = F[beta] is unramified of
// degree n and beta is minimal over F (its unit residue generates the
// residue extension).
// Ramified: beta = Pi^(-m) for the Eisenstein uniformizer matrix Pi
// (Pi^n = t), requiring gcd(m, n) = 1.
struct TypeDatum {
    TypeCase kase = TypeCase::Unramified;
    std::uint64_t q = 0, n = 0;
    unsigned m = 0;              // beta in P^(-m) \ P^(-m+1)
    unsigned k = 0;              // floor((m+1)/2): the X_k level of the type
    std::uint64_t lambda_dim = 1; // 1 if m odd, q^((n^2-n)/2) if m even
    unsigned working_level = 0;  // m + 1
    unsigned beta_pole = 0;      // s with beta = t^(-s) * beta_unit
    Mat beta_unit;               // over the base ring at working_level
    std::shared_ptr<TowerField> tower;
};

TypeDatum make_minimal_unram(std::uint64_t q, std::uint64_t n, unsigned m);
TypeDatum make_minimal_ram(std::uint64_t q, std::uint64_t n, unsigned m);

// psi_beta(x) = psi(Tr_{A/F}(beta (x-1))) for the fixed level-zero additive
// character psi (psi_0 of F_q composed with the t^0 coefficient, psi_0 being
// zeta_p^(Tr to F_p)).  Returns the exponent in F_q; the character value is
// zeta_p^(base_trace(exponent)).
FF psi_beta_exponent(const TypeDatum& d, const Mat& x);
CycInt psi_beta_value(const TypeDatum& d, const Mat& x);

// group orders at the working level and the F_q-structure of W = J^1/H^1
struct GroupData {
    std::uint64_t h1_order = 0, j1_order = 0, j_order = 0;
    std::uint64_t j_mod_j1 = 0;                 // |k_E^x|
    unsigned w_dim = 0;                         // n^2 - n
    std::uint64_t w_order = 0;                  // q^(n^2-n)
    std::vector<Mat> w_basis;                   // level-1 matrices spanning W
};

GroupData group_data(const TypeDatum& d);       // unramified, m even

// Gram matrix over F_q of the pairing h_theta(x, y) = psi(Tr(beta(uv - vu)))
// on W, for x = 1+u, y = 1+v.  Alternating of full rank n^2 - n.
struct PairingMatrix {
    unsigned dim = 0;
    std::vector<FF> gram;                       // dim x dim entries in F_q
    unsigned rank = 0;
};

PairingMatrix theta_pairing(const TypeDatum& d); // unramified, m even

// [K : Iwahori] = prod_{k=1}^{n-1} (1 + q + ... + q^k)
std::uint64_t iwahori_index(std::uint64_t q, std::uint64_t n);

// Upper bound for |Tr tau(g)| assembled through the Frobenius formula:
// (fixed points of g on X_k) x (per-point bound: 1 under the Glauberman
// lemma hypotheses, lambda_dim otherwise), x [K : Iwahori] in the ramified
// case.  g over the base ring at any level >= k; throws on central g.
struct TraceBound {
    std::uint64_t census_count = 0;
    std::uint64_t per_point = 1;
    std::uint64_t index_factor = 1;
    std::uint64_t bound = 0;
    bool lemma_applies = false;
};

TraceBound type_trace_bound(const TruncRing& gring, const Mat& g, const TypeDatum& d,
                            std::uint64_t budget = default_budget());

} // namespace typecount
