#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

namespace typecount {

// Weight of U(n) in coordinates a_1, ..., a_n; dominant iff weakly decreasing.
struct Weight {
    std::vector<long long> a;
    bool dominant() const {
        for (std::size_t i = 1; i < a.size(); ++i)
            if (a[i - 1] < a[i]) return false;
        return true;
    }
};

// Root data of U(n): positive roots e_i* - e_j* (i < j) and delta = half the
// sum of positive roots; the inner product from B_0(X, Y) = Tr XY makes
// {e_i*} orthonormal.  delta has half-integer entries, stored doubled.
struct RootData {
    unsigned n = 0;
    std::vector<std::pair<unsigned, unsigned>> positive_roots;
    std::vector<long long> delta2; // 2 * delta
};

RootData root_data(unsigned n);

// Weyl dimension formula: prod_{i<j} (a_i - a_j + j - i) / prod_k k!
std::uint64_t weyl_dim(const Weight& lambda);

// The dimension polynomial in variables a_1..a_n, exact integer numerator
// over the constant denominator prod_{k<n} k!.
struct WeylPolynomial {
    unsigned n = 0;
    std::map<std::vector<unsigned>, long long> terms;
    std::uint64_t denominator = 1;
    unsigned degree() const;
    // exact rational evaluation (numerator / denominator is integral on
    // dominant integral weights)
    double eval(const Weight& lambda) const;
    long long eval_numerator(const Weight& lambda) const;
};

WeylPolynomial weyl_polynomial(unsigned n);

// Schur character value s_lambda(x) at unit-modulus eigenvalues, by a
// Jacobi-Trudi determinant in the complete homogeneous basis; weights with
// negative entries are shifted by a determinant power first.  Well-defined
// for repeated eigenvalues.
std::complex<double> schur_trace(const Weight& lambda, const std::vector<std::complex<double>>& x);

// exact integer value at x = (1, ..., 1); equals weyl_dim
std::uint64_t schur_trace_identity(const Weight& lambda, unsigned n);

// lambda-independent bound n!/|Vandermonde(x)| for regular spectra
double regular_bound(const std::vector<std::complex<double>>& x);

// Empirical growth scan backing the degree claim for character bounds at
// non-regular elements: max |s_lambda(x)| over shells a_1 - a_n = s, with a
// log-log least-squares growth exponent.
struct DegreeScanReport {
    std::vector<double> shell_max;    // index s = 0..B
    double fitted_exponent = 0.0;
    double weyl_degree = 0.0;         // (n^2-n)/2
    double max_ratio = 0.0;           // max |s_lambda(x)| / weyl_dim(lambda)
    bool margin_ok = false;           // fitted_exponent <= weyl_degree - 0.5
};

DegreeScanReport cc_degree_scan(const std::vector<std::complex<double>>& x, unsigned box);

} // namespace typecount
