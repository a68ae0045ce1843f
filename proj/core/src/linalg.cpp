#include "typecount/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace typecount {

Mat mat_identity(const TruncRing& R, unsigned n) {
    Mat m = Mat::sized(R, n);
    for (unsigned i = 0; i < n; ++i) m.at(i, i) = R.one();
    return m;
}

Mat mat_scalar(const TruncRing& R, unsigned n, const RElem& s) {
    Mat m = Mat::sized(R, n);
    for (unsigned i = 0; i < n; ++i) m.at(i, i) = s;
    return m;
}

Mat mat_add(const TruncRing& R, const Mat& A, const Mat& B) {
    Mat m = Mat::sized(R, A.n);
    for (std::size_t i = 0; i < m.a.size(); ++i) m.a[i] = R.add(A.a[i], B.a[i]);
    return m;
}

Mat mat_sub(const TruncRing& R, const Mat& A, const Mat& B) {
    Mat m = Mat::sized(R, A.n);
    for (std::size_t i = 0; i < m.a.size(); ++i) m.a[i] = R.sub(A.a[i], B.a[i]);
    return m;
}

Mat mat_mul(const TruncRing& R, const Mat& A, const Mat& B) {
    const unsigned n = A.n;
    Mat m = Mat::sized(R, n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            RElem s = R.zero();
            for (unsigned k = 0; k < n; ++k) s = R.add(s, R.mul(A.at(i, k), B.at(k, j)));
            m.at(i, j) = s;
        }
    return m;
}

Mat mat_scale(const TruncRing& R, const Mat& A, const RElem& s) {
    Mat m = Mat::sized(R, A.n);
    for (std::size_t i = 0; i < m.a.size(); ++i) m.a[i] = R.mul(A.a[i], s);
    return m;
}

RElem mat_trace(const TruncRing& R, const Mat& A) {
    RElem s = R.zero();
    for (unsigned i = 0; i < A.n; ++i) s = R.add(s, A.at(i, i));
    return s;
}

namespace {

// iterate permutations with sign; n is tiny so Leibniz is fine
template <typename F>
void for_each_permutation(unsigned n, F&& f) {
    std::vector<unsigned> perm(n);
    for (unsigned i = 0; i < n; ++i) perm[i] = i;
    do {
        // sign by counting inversions
        int inv = 0;
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inv;
        f(perm, inv % 2 == 0 ? +1 : -1);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

} // namespace

RElem mat_det(const TruncRing& R, const Mat& A) {
    RElem det = R.zero();
    for_each_permutation(A.n, [&](const std::vector<unsigned>& perm, int sign) {
        RElem term = R.one();
        for (unsigned i = 0; i < A.n; ++i) term = R.mul(term, A.at(i, perm[i]));
        det = R.add(det, sign > 0 ? term : R.neg(term));
    });
    return det;
}

bool mat_is_scalar(const TruncRing& R, const Mat& A) {
    for (unsigned i = 0; i < A.n; ++i)
        for (unsigned j = 0; j < A.n; ++j) {
            if (i == j) {
                if (!(A.at(i, i) == A.at(0, 0))) return false;
            } else if (!R.is_zero(A.at(i, j))) {
                return false;
            }
        }
    return true;
}

bool mat_invertible(const TruncRing& R, const Mat& A) { return R.is_unit(mat_det(R, A)); }

Mat mat_inverse(const TruncRing& R, const Mat& A) {
    const unsigned n = A.n;
    Mat w = A, inv = mat_identity(R, n);
    for (unsigned col = 0; col < n; ++col) {
        unsigned piv = col;
        while (piv < n && !R.is_unit(w.at(piv, col))) ++piv;
        if (piv == n) throw std::domain_error("mat_inverse: matrix not invertible");
        for (unsigned j = 0; j < n; ++j) {
            std::swap(w.at(piv, j), w.at(col, j));
            std::swap(inv.at(piv, j), inv.at(col, j));
        }
        const RElem s = R.inv(w.at(col, col));
        for (unsigned j = 0; j < n; ++j) {
            w.at(col, j) = R.mul(w.at(col, j), s);
            inv.at(col, j) = R.mul(inv.at(col, j), s);
        }
        for (unsigned r = 0; r < n; ++r) {
            if (r == col || R.is_zero(w.at(r, col))) continue;
            const RElem f = w.at(r, col);
            for (unsigned j = 0; j < n; ++j) {
                w.at(r, j) = R.sub(w.at(r, j), R.mul(f, w.at(col, j)));
                inv.at(r, j) = R.sub(inv.at(r, j), R.mul(f, inv.at(col, j)));
            }
        }
    }
    return inv;
}

Mat mat_truncated(const TruncRing& R, const Mat& A, const TruncRing& Rlow) {
    Mat m = Mat::sized(Rlow, A.n);
    for (std::size_t i = 0; i < m.a.size(); ++i) m.a[i] = R.truncated(A.a[i], Rlow.level());
    return m;
}

Mat mat_lifted(const TruncRing& R, const Mat& A, const TruncRing& Rhigh) {
    Mat m = Mat::sized(Rhigh, A.n);
    for (std::size_t i = 0; i < m.a.size(); ++i) m.a[i] = R.lifted(A.a[i], Rhigh.level());
    return m;
}

Mat mat_residue(const TruncRing& R, const Mat& A) {
    return mat_truncated(R, A, R.at_level(1));
}

std::string mat_to_string(const TruncRing& R, const Mat& A) {
    std::string out = "[";
    for (unsigned i = 0; i < A.n; ++i) {
        if (i) out += "; ";
        for (unsigned j = 0; j < A.n; ++j) {
            if (j) out += ", ";
            out += R.to_string(A.at(i, j));
        }
    }
    return out + "]";
}

PolyR poly_trim(const TruncRing& R, PolyR f) {
    while (f.c.size() > 1 && R.is_zero(f.c.back())) f.c.pop_back();
    return f;
}

PolyR poly_add(const TruncRing& R, const PolyR& f, const PolyR& g) {
    PolyR h;
    h.c.assign(std::max(f.c.size(), g.c.size()), R.zero());
    for (std::size_t i = 0; i < f.c.size(); ++i) h.c[i] = R.add(h.c[i], f.c[i]);
    for (std::size_t i = 0; i < g.c.size(); ++i) h.c[i] = R.add(h.c[i], g.c[i]);
    return h;
}

PolyR poly_mul(const TruncRing& R, const PolyR& f, const PolyR& g) {
    PolyR h;
    if (f.c.empty() || g.c.empty()) return h;
    h.c.assign(f.c.size() + g.c.size() - 1, R.zero());
    for (std::size_t i = 0; i < f.c.size(); ++i)
        for (std::size_t j = 0; j < g.c.size(); ++j)
            h.c[i + j] = R.add(h.c[i + j], R.mul(f.c[i], g.c[j]));
    return h;
}

RElem poly_eval(const TruncRing& R, const PolyR& f, const RElem& x) {
    RElem acc = R.zero();
    for (std::size_t i = f.c.size(); i-- > 0;) acc = R.add(R.mul(acc, x), f.c[i]);
    return acc;
}

void poly_divmod_monic(const TruncRing& R, const PolyR& f, const PolyR& g, PolyR* quo, PolyR* rem) {
    if (g.c.empty() || !(g.c.back() == R.one()))
        throw std::invalid_argument("poly_divmod_monic: divisor must be monic");
    PolyR r = f, q;
    const std::size_t dg = g.c.size() - 1;
    if (f.c.size() > dg) q.c.assign(f.c.size() - dg, R.zero());
    else q.c.assign(1, R.zero());
    while (r.c.size() > dg) {
        const std::size_t sh = r.c.size() - 1 - dg;
        const RElem lead = r.c.back();
        q.c[sh] = R.add(q.c[sh], lead);
        for (std::size_t i = 0; i <= dg; ++i)
            r.c[sh + i] = R.sub(r.c[sh + i], R.mul(lead, g.c[i]));
        while (r.c.size() > 1 && R.is_zero(r.c.back())) r.c.pop_back();
        if (r.c.size() == 1 && R.is_zero(r.c[0])) break;
        if (r.c.size() <= dg) break;
    }
    if (quo) *quo = poly_trim(R, q);
    if (rem) *rem = poly_trim(R, r);
}

PolyR charpoly(const TruncRing& R, const Mat& A) {
    // det(xI - A) by Leibniz over R[x]
    const unsigned n = A.n;
    PolyR det;
    det.c.assign(n + 1, R.zero());
    for_each_permutation(n, [&](const std::vector<unsigned>& perm, int sign) {
        PolyR term;
        term.c.assign(1, sign > 0 ? R.one() : R.neg(R.one()));
        for (unsigned i = 0; i < n; ++i) {
            PolyR entry;
            if (perm[i] == i) {
                entry.c = {R.neg(A.at(i, i)), R.one()};
            } else {
                entry.c = {R.neg(A.at(i, perm[i]))};
            }
            term = poly_mul(R, term, entry);
        }
        PolyR acc;
        acc.c.assign(n + 1, R.zero());
        for (std::size_t i = 0; i < term.c.size(); ++i) acc.c[i] = term.c[i];
        det = poly_add(R, det, acc);
    });
    det.c.resize(n + 1, R.zero());
    return det;
}

Mat poly_of_matrix(const TruncRing& R, const PolyR& f, const Mat& A) {
    Mat acc = Mat::sized(R, A.n);
    for (std::size_t i = f.c.size(); i-- > 0;) {
        acc = mat_mul(R, acc, A);
        acc = mat_add(R, acc, mat_scalar(R, A.n, f.c[i]));
    }
    return acc;
}

unsigned rank1(const TruncRing& R1, const Mat& A) {
    if (R1.level() != 1) throw std::invalid_argument("rank1: level-1 ring required");
    const TowerField& tf = R1.tower();
    const unsigned n = A.n;
    std::vector<std::vector<FF>> m(n, std::vector<FF>(n));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) m[i][j] = R1.residue(A.at(i, j));
    unsigned rank = 0;
    for (unsigned col = 0; col < n && rank < n; ++col) {
        unsigned piv = rank;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) continue;
        std::swap(m[piv], m[rank]);
        const FF s = tf.inv(m[rank][col]);
        for (unsigned j = 0; j < n; ++j) m[rank][j] = tf.mul(m[rank][j], s);
        for (unsigned r = 0; r < n; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            const FF f = m[r][col];
            for (unsigned j = 0; j < n; ++j) m[r][j] = tf.sub(m[r][j], tf.mul(f, m[rank][j]));
        }
        ++rank;
    }
    return rank;
}

std::vector<RElem> roots1(const TruncRing& R1, const PolyR& f) {
    std::vector<RElem> out;
    for (std::uint64_t i = 0; i < R1.residue_order(); ++i) {
        const RElem x = R1.element_at(i);
        if (R1.is_zero(poly_eval(R1, f, x))) out.push_back(x);
    }
    return out;
}

std::vector<PolyR> monic_polys1(const TruncRing& R1, unsigned degree) {
    std::vector<PolyR> out;
    const std::uint64_t ro = R1.residue_order();
    std::uint64_t count = 1;
    for (unsigned i = 0; i < degree; ++i) count *= ro;
    for (std::uint64_t v = 0; v < count; ++v) {
        PolyR f;
        f.c.assign(degree + 1, R1.zero());
        std::uint64_t rem = v;
        for (unsigned i = 0; i < degree; ++i) {
            f.c[i] = R1.element_at(rem % ro);
            rem /= ro;
        }
        f.c[degree] = R1.one();
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<std::pair<PolyR, unsigned>> factor1(const TruncRing& R1, const PolyR& f) {
    if (R1.level() != 1) throw std::invalid_argument("factor1: level-1 ring required");
    std::vector<std::pair<PolyR, unsigned>> out;
    PolyR rest = poly_trim(R1, f);
    unsigned d = 1;
    while (rest.c.size() > 1) {
        if (2 * d > rest.c.size() - 1) {
            out.emplace_back(rest, 1); // remainder is irreducible
            break;
        }
        bool divided_any = false;
        for (const PolyR& g : monic_polys1(R1, d)) {
            unsigned mult = 0;
            for (;;) {
                PolyR quo, rem;
                poly_divmod_monic(R1, rest, g, &quo, &rem);
                if (!(rem.c.size() == 1 && R1.is_zero(rem.c[0]))) break;
                rest = quo;
                ++mult;
            }
            if (mult > 0) {
                out.emplace_back(g, mult);
                divided_any = true;
                if (rest.c.size() == 1) break;
            }
        }
        (void)divided_any;
        ++d;
    }
    return out;
}

bool irreducible1(const TruncRing& R1, const PolyR& f) {
    const PolyR ft = poly_trim(R1, f);
    const auto fac = factor1(R1, ft);
    return fac.size() == 1 && fac[0].second == 1 && fac[0].first.c.size() == ft.c.size();
}

bool splits1(const TruncRing& R1, const PolyR& f) {
    for (const auto& [g, mult] : factor1(R1, f))
        if (g.c.size() != 2) return false;
    return true;
}

Mat triangularize1(const TruncRing& R1, const Mat& A) {
    if (R1.level() != 1) throw std::invalid_argument("triangularize1: level-1 ring required");
    const TowerField& tf = R1.tower();
    const unsigned n = A.n;

    // accumulate the flag basis column by column: repeatedly find an
    // eigenvector of the map induced on the quotient of the span so far
    std::vector<std::vector<FF>> basis; // columns
    auto in_span_reduce = [&](std::vector<FF> v) {
        // reduce v against the basis columns (kept in echelon via pivots)
        for (const auto& b : basis) {
            unsigned piv = 0;
            while (piv < n && b[piv] == 0) ++piv;
            if (piv == n || v[piv] == 0) continue;
            const FF s = tf.mul(v[piv], tf.inv(b[piv]));
            for (unsigned i = 0; i < n; ++i) v[i] = tf.sub(v[i], tf.mul(s, b[i]));
        }
        return v;
    };

    while (basis.size() < n) {
        // find gamma in F_q and v not in span with A v = gamma v (mod span)
        bool found = false;
        for (std::uint64_t gi = 0; gi < tf.q() && !found; ++gi) {
            const FF gamma = tf.base_element(gi);
            // solve (A - gamma) v in span, v not in span: brute force over a
            // kernel computation of the composed map; n is tiny, use direct scan
            // over the quotient by solving the linear system via elimination.
            // Build the matrix M = A - gamma*I and augment with span columns.
            const unsigned k = static_cast<unsigned>(basis.size());
            // unknowns: v (n coords) and coefficients of -span combo (k coords)
            // equations: M v + B c = 0, i.e. (M | B) (v; c) = 0, v not in span
            const unsigned cols = n + k;
            std::vector<std::vector<FF>> m(n, std::vector<FF>(cols, 0));
            for (unsigned i = 0; i < n; ++i) {
                for (unsigned j = 0; j < n; ++j) {
                    FF x = R1.residue(A.at(i, j));
                    if (i == j) x = tf.sub(x, gamma);
                    m[i][j] = x;
                }
                for (unsigned j = 0; j < k; ++j) m[i][n + j] = basis[j][i];
            }
            // null space by Gaussian elimination
            std::vector<int> pivot_of_col(cols, -1);
            unsigned row = 0;
            for (unsigned col = 0; col < cols && row < n; ++col) {
                unsigned piv = row;
                while (piv < n && m[piv][col] == 0) ++piv;
                if (piv == n) continue;
                std::swap(m[piv], m[row]);
                const FF s = tf.inv(m[row][col]);
                for (unsigned j = 0; j < cols; ++j) m[row][j] = tf.mul(m[row][j], s);
                for (unsigned r = 0; r < n; ++r) {
                    if (r == row || m[r][col] == 0) continue;
                    const FF f = m[r][col];
                    for (unsigned j = 0; j < cols; ++j) m[r][j] = tf.sub(m[r][j], tf.mul(f, m[row][j]));
                }
                pivot_of_col[col] = static_cast<int>(row);
                ++row;
            }
            // free columns give null vectors; look for one with v-part outside span
            for (unsigned free_col = 0; free_col < cols; ++free_col) {
                if (pivot_of_col[free_col] >= 0) continue;
                std::vector<FF> sol(cols, 0);
                sol[free_col] = tf.one();
                for (unsigned col = 0; col < cols; ++col) {
                    if (pivot_of_col[col] < 0) continue;
                    sol[col] = tf.neg(m[static_cast<unsigned>(pivot_of_col[col])][free_col]);
                }
                std::vector<FF> v(sol.begin(), sol.begin() + n);
                const auto vr = in_span_reduce(v);
                bool nonzero = false;
                for (FF x : vr) nonzero = nonzero || x != 0;
                if (!nonzero) continue;
                basis.push_back(vr);
                found = true;
                break;
            }
        }
        if (!found)
            throw std::domain_error("triangularize1: characteristic polynomial does not split");
    }

    Mat X = Mat::sized(R1, n);
    for (unsigned j = 0; j < n; ++j)
        for (unsigned i = 0; i < n; ++i) X.at(i, j) = R1.from_coeffs({basis[j][i]});
    if (!mat_invertible(R1, X)) throw std::logic_error("triangularize1: flag basis singular");
    return X;
}

void for_each_invertible(const TruncRing& R, unsigned n,
                         const std::function<bool(const Mat&)>& visit) {
    const std::uint64_t sz = R.size();
    std::uint64_t total = 1;
    for (unsigned i = 0; i < n * n; ++i) {
        if (total > (1ull << 62) / sz)
            throw std::invalid_argument("for_each_invertible: matrix space too large");
        total *= sz;
    }
    for (std::uint64_t v = 0; v < total; ++v) {
        Mat m = Mat::sized(R, n);
        std::uint64_t rem = v;
        for (unsigned i = 0; i < n * n; ++i) {
            m.a[i] = R.element_at(rem % sz);
            rem /= sz;
        }
        if (!mat_invertible(R, m)) continue;
        if (!visit(m)) return;
    }
}

std::uint64_t gl_order(std::uint64_t q, unsigned n) {
    std::uint64_t qn = 1;
    for (unsigned i = 0; i < n; ++i) qn *= q;
    std::uint64_t ord = 1, qi = 1;
    for (unsigned i = 0; i < n; ++i) {
        ord *= (qn - qi);
        qi *= q;
    }
    return ord;
}

std::uint64_t gl_order_level(const TruncRing& R, unsigned n) {
    std::uint64_t ord = gl_order(R.residue_order(), n);
    std::uint64_t fiber = 1;
    for (unsigned i = 1; i < R.level(); ++i)
        for (unsigned j = 0; j < n * n; ++j) fiber *= R.residue_order();
    return ord * fiber;
}

} // namespace typecount
