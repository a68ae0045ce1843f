#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "typecount/localring.hpp"

namespace typecount {

// Square matrices with entries in a TruncRing, row major.  All operations
// take the ring explicitly; sizes here are tiny (n <= 5), so everything is
// written for clarity over speed.
struct Mat {
    unsigned n = 0;
    std::vector<RElem> a;

    static Mat sized(const TruncRing& R, unsigned n) {
        Mat m;
        m.n = n;
        m.a.assign(static_cast<std::size_t>(n) * n, R.zero());
        return m;
    }
    RElem& at(unsigned i, unsigned j) { return a[static_cast<std::size_t>(i) * n + j]; }
    const RElem& at(unsigned i, unsigned j) const { return a[static_cast<std::size_t>(i) * n + j]; }
    bool operator==(const Mat& o) const { return n == o.n && a == o.a; }
};

// Polynomials over a TruncRing, coefficients low to high.
struct PolyR {
    std::vector<RElem> c;
    std::size_t degree() const { return c.empty() ? 0 : c.size() - 1; }
};

Mat mat_identity(const TruncRing& R, unsigned n);
Mat mat_scalar(const TruncRing& R, unsigned n, const RElem& s);
Mat mat_add(const TruncRing& R, const Mat& A, const Mat& B);
Mat mat_sub(const TruncRing& R, const Mat& A, const Mat& B);
Mat mat_mul(const TruncRing& R, const Mat& A, const Mat& B);
Mat mat_scale(const TruncRing& R, const Mat& A, const RElem& s);
RElem mat_trace(const TruncRing& R, const Mat& A);
RElem mat_det(const TruncRing& R, const Mat& A);         // Leibniz, n <= 6
bool mat_is_scalar(const TruncRing& R, const Mat& A);
bool mat_invertible(const TruncRing& R, const Mat& A);
Mat mat_inverse(const TruncRing& R, const Mat& A);       // Gauss with unit pivots
Mat mat_truncated(const TruncRing& R, const Mat& A, const TruncRing& Rlow);
Mat mat_lifted(const TruncRing& R, const Mat& A, const TruncRing& Rhigh);
Mat mat_residue(const TruncRing& R, const Mat& A);       // entries at level 1
std::string mat_to_string(const TruncRing& R, const Mat& A);

// characteristic polynomial det(xI - A), monic of degree n
PolyR charpoly(const TruncRing& R, const Mat& A);

PolyR poly_add(const TruncRing& R, const PolyR& f, const PolyR& g);
PolyR poly_mul(const TruncRing& R, const PolyR& f, const PolyR& g);
RElem poly_eval(const TruncRing& R, const PolyR& f, const RElem& x);
PolyR poly_trim(const TruncRing& R, PolyR f);

// division by a monic divisor, valid over any of the rings
void poly_divmod_monic(const TruncRing& R, const PolyR& f, const PolyR& g, PolyR* quo, PolyR* rem);

// ----- residue-level (level-1 == field) routines -----

// rank by Gaussian elimination; requires R.level() == 1
unsigned rank1(const TruncRing& R1, const Mat& A);

// evaluate a matrix in a polynomial: f(A)
Mat poly_of_matrix(const TruncRing& R, const PolyR& f, const Mat& A);

// all roots of f over the residue field of R1 (level 1)
std::vector<RElem> roots1(const TruncRing& R1, const PolyR& f);

// irreducible factorization over the residue field, deterministic order;
// returns (factor, multiplicity) pairs, factors monic
std::vector<std::pair<PolyR, unsigned>> factor1(const TruncRing& R1, const PolyR& f);
bool irreducible1(const TruncRing& R1, const PolyR& f);

// does the characteristic polynomial split into linear factors over F_q?
bool splits1(const TruncRing& R1, const PolyR& f);

// A conjugator x (level-1 entries, invertible) with x^-1 A x upper triangular;
// requires the charpoly of A to split over the residue field
Mat triangularize1(const TruncRing& R1, const Mat& A);

// deterministic enumeration of monic polynomials of fixed degree over the
// residue field of R1
std::vector<PolyR> monic_polys1(const TruncRing& R1, unsigned degree);

// visit every invertible matrix over R (any level) in enumeration order;
// stops early if visit returns false
void for_each_invertible(const TruncRing& R, unsigned n,
                         const std::function<bool(const Mat&)>& visit);

std::uint64_t gl_order(std::uint64_t q, unsigned n);      // |GL_n(F_q)|
std::uint64_t gl_order_level(const TruncRing& R, unsigned n); // |GL_n(O/t^level)|

} // namespace typecount
