#include "typecount/archweyl.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace typecount {

namespace {

void require_dominant(const Weight& lambda) {
    if (!lambda.dominant()) throw std::invalid_argument("weight is not dominant");
}

constexpr double kUnitTol = 1e-12;

void require_unit_modulus(const std::vector<std::complex<double>>& x) {
    for (const auto& xi : x)
        if (std::abs(std::abs(xi) - 1.0) > kUnitTol)
            throw std::invalid_argument("eigenvalues must have unit modulus");
}

// complete homogeneous symmetric values h_0..h_max at x, via the elementary
// symmetric recurrence h_k = sum_j (-1)^(j-1) e_j h_(k-j)
std::vector<std::complex<double>> complete_homogeneous(const std::vector<std::complex<double>>& x,
                                                       std::size_t max_deg) {
    const std::size_t n = x.size();
    std::vector<std::complex<double>> e(n + 1, 0.0);
    e[0] = 1.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = std::min(i + 1, n); j >= 1; --j) e[j] += x[i] * e[j - 1];
    std::vector<std::complex<double>> h(max_deg + 1, 0.0);
    h[0] = 1.0;
    for (std::size_t k = 1; k <= max_deg; ++k) {
        std::complex<double> s = 0.0;
        for (std::size_t j = 1; j <= std::min(k, n); ++j)
            s += (j % 2 == 1 ? 1.0 : -1.0) * e[j] * h[k - j];
        h[k] = s;
    }
    return h;
}

// signed permutation expansion of an n x n determinant given an entry lookup
template <typename Entry, typename Value>
Value permutation_det(unsigned n, Entry&& entry, Value zero) {
    std::vector<unsigned> perm(n);
    for (unsigned i = 0; i < n; ++i) perm[i] = i;
    Value det = zero;
    do {
        int inv = 0;
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inv;
        Value term = entry(0, perm[0]);
        for (unsigned i = 1; i < n; ++i) term = term * entry(i, perm[i]);
        det = (inv % 2 == 0) ? det + term : det - term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

} // namespace

RootData root_data(unsigned n) {
    RootData rd;
    rd.n = n;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j) rd.positive_roots.emplace_back(i, j);
    rd.delta2.assign(n, 0);
    for (const auto& [i, j] : rd.positive_roots) {
        rd.delta2[i] += 1;
        rd.delta2[j] -= 1;
    }
    return rd;
}

std::uint64_t weyl_dim(const Weight& lambda) {
    require_dominant(lambda);
    const std::size_t n = lambda.a.size();
    __int128 num = 1, den = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            num *= lambda.a[i] - lambda.a[j] + static_cast<long long>(j - i);
            den *= static_cast<long long>(j - i);
        }
    if (den == 0 || num % den != 0) throw std::logic_error("weyl_dim: non-integral value");
    const __int128 v = num / den;
    if (v < 0) throw std::logic_error("weyl_dim: negative value");
    return static_cast<std::uint64_t>(v);
}

unsigned WeylPolynomial::degree() const {
    unsigned deg = 0;
    for (const auto& [expo, coeff] : terms) {
        if (coeff == 0) continue;
        unsigned d = 0;
        for (unsigned e : expo) d += e;
        deg = std::max(deg, d);
    }
    return deg;
}

long long WeylPolynomial::eval_numerator(const Weight& lambda) const {
    long long acc = 0;
    for (const auto& [expo, coeff] : terms) {
        long long term = coeff;
        for (unsigned i = 0; i < n; ++i)
            for (unsigned e = 0; e < expo[i]; ++e) term *= lambda.a[i];
        acc += term;
    }
    return acc;
}

double WeylPolynomial::eval(const Weight& lambda) const {
    return static_cast<double>(eval_numerator(lambda)) / static_cast<double>(denominator);
}

WeylPolynomial weyl_polynomial(unsigned n) {
    WeylPolynomial P;
    P.n = n;
    P.terms[std::vector<unsigned>(n, 0)] = 1;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j) {
            // multiply by (a_i - a_j + (j - i))
            std::map<std::vector<unsigned>, long long> next;
            for (const auto& [expo, coeff] : P.terms) {
                auto e1 = expo;
                ++e1[i];
                next[e1] += coeff;
                auto e2 = expo;
                ++e2[j];
                next[e2] -= coeff;
                next[expo] += coeff * static_cast<long long>(j - i);
            }
            for (auto it = next.begin(); it != next.end();)
                it = it->second == 0 ? next.erase(it) : std::next(it);
            P.terms = std::move(next);
        }
    std::uint64_t den = 1;
    for (unsigned k = 1; k < n; ++k) {
        std::uint64_t kf = 1;
        for (unsigned i = 2; i <= k; ++i) kf *= i;
        den *= kf;
    }
    P.denominator = den;
    return P;
}

std::complex<double> schur_trace(const Weight& lambda, const std::vector<std::complex<double>>& x) {
    require_dominant(lambda);
    const unsigned n = static_cast<unsigned>(x.size());
    if (lambda.a.size() != n) throw std::invalid_argument("schur_trace: weight length mismatch");
    require_unit_modulus(x);

    // shift by the last entry so the partition is nonnegative, and twist by
    // the determinant character afterwards
    const long long shift = lambda.a.back();
    std::vector<long long> mu(lambda.a.begin(), lambda.a.end());
    for (auto& v : mu) v -= shift;

    const std::size_t max_deg = static_cast<std::size_t>(mu[0]) + n;
    const auto h = complete_homogeneous(x, max_deg);
    auto entry = [&](unsigned i, unsigned j) -> std::complex<double> {
        const long long deg = mu[i] - static_cast<long long>(i) + static_cast<long long>(j);
        if (deg < 0) return 0.0;
        return h[static_cast<std::size_t>(deg)];
    };
    std::complex<double> det = permutation_det(n, entry, std::complex<double>(0.0));

    std::complex<double> dpow(1.0, 0.0);
    std::complex<double> prod(1.0, 0.0);
    for (const auto& xi : x) prod *= xi;
    long long s = shift;
    const std::complex<double> base = s >= 0 ? prod : std::conj(prod); // |x_i| = 1
    for (long long i = 0; i < std::llabs(s); ++i) dpow *= base;
    return det * dpow;
}

std::uint64_t schur_trace_identity(const Weight& lambda, unsigned n) {
    require_dominant(lambda);
    if (lambda.a.size() != n) throw std::invalid_argument("schur_trace_identity: length mismatch");
    const long long shift = lambda.a.back();
    std::vector<long long> mu(lambda.a.begin(), lambda.a.end());
    for (auto& v : mu) v -= shift;

    // h_k(1,...,1) = C(k+n-1, n-1), exact
    const long long max_deg = mu[0] + n;
    std::vector<__int128> h(static_cast<std::size_t>(max_deg) + 1, 0);
    for (long long k = 0; k <= max_deg; ++k) {
        __int128 b = 1;
        for (unsigned i = 1; i < n; ++i) { b *= (k + i); b /= i; }
        h[static_cast<std::size_t>(k)] = b;
    }
    struct I128 {
        __int128 v;
        I128 operator+(I128 o) const { return {v + o.v}; }
        I128 operator-(I128 o) const { return {v - o.v}; }
        I128 operator*(I128 o) const { return {v * o.v}; }
    };
    auto entry = [&](unsigned i, unsigned j) -> I128 {
        const long long deg = mu[i] - static_cast<long long>(i) + static_cast<long long>(j);
        if (deg < 0) return {0};
        return {h[static_cast<std::size_t>(deg)]};
    };
    const I128 det = permutation_det(n, entry, I128{0});
    if (det.v < 0) throw std::logic_error("schur_trace_identity: negative dimension");
    return static_cast<std::uint64_t>(det.v);
}

double regular_bound(const std::vector<std::complex<double>>& x) {
    require_unit_modulus(x);
    const std::size_t n = x.size();
    double vdm = 1.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = std::abs(x[i] - x[j]);
            if (d < 1e-12) throw std::invalid_argument("regular_bound: repeated eigenvalues");
            vdm *= d;
        }
    double fact = 1.0;
    for (std::size_t i = 2; i <= n; ++i) fact *= static_cast<double>(i);
    return fact / vdm;
}

DegreeScanReport cc_degree_scan(const std::vector<std::complex<double>>& x, unsigned box) {
    require_unit_modulus(x);
    const unsigned n = static_cast<unsigned>(x.size());
    bool central = true;
    for (const auto& xi : x) central = central && std::abs(xi - x[0]) < 1e-12;
    if (central) throw std::invalid_argument("cc_degree_scan: central element");

    DegreeScanReport rep;
    rep.weyl_degree = static_cast<double>(n) * (n - 1) / 2.0;
    rep.shell_max.assign(box + 1, 0.0);

    // enumerate dominant lambda with a_n = 0 and a_1 = s (|s_lambda| and
    // weyl_dim are both invariant under the uniform shift)
    std::vector<long long> a(n, 0);
    for (unsigned s = 0; s <= box; ++s) {
        a[0] = s;
        // middle entries a_2..a_(n-1) range over s >= a_2 >= ... >= 0
        std::vector<long long> mid(n >= 2 ? n - 2 : 0, 0);
        bool done = false;
        while (!done) {
            Weight lambda;
            lambda.a.assign(n, 0);
            lambda.a[0] = s;
            for (unsigned i = 0; i < mid.size(); ++i) lambda.a[i + 1] = mid[i];
            if (lambda.dominant()) {
                const double v = std::abs(schur_trace(lambda, x));
                rep.shell_max[s] = std::max(rep.shell_max[s], v);
                const double dim = static_cast<double>(weyl_dim(lambda));
                rep.max_ratio = std::max(rep.max_ratio, v / dim);
            }
            // odometer over the middle entries
            done = true;
            for (std::size_t i = mid.size(); i-- > 0;) {
                if (mid[i] < static_cast<long long>(s)) {
                    ++mid[i];
                    for (std::size_t j = i + 1; j < mid.size(); ++j) mid[j] = 0;
                    done = false;
                    break;
                }
            }
            if (mid.empty()) done = true;
        }
    }

    // least-squares slope of log(shell max) against log(1+s)
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    unsigned cnt = 0;
    for (unsigned s = 1; s <= box; ++s) {
        if (rep.shell_max[s] < 1e-13) continue;
        const double lx = std::log(1.0 + s), ly = std::log(rep.shell_max[s]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++cnt;
    }
    if (cnt >= 2 && sxx * cnt - sx * sx > 1e-12)
        rep.fitted_exponent = (sxy * cnt - sx * sy) / (sxx * cnt - sx * sx);
    else
        rep.fitted_exponent = 0.0;
    rep.margin_ok = rep.fitted_exponent <= rep.weyl_degree - 0.5;
    return rep;
}

} // namespace typecount
