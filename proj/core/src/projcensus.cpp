#include "typecount/projcensus.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>
#include <thread>

namespace typecount {

namespace {

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

// residues of the coordinate tuple form an F_q-basis of F_{q^n}?
bool residues_form_basis(const TowerField& tf, const std::vector<RElem>& u) {
    const unsigned n = static_cast<unsigned>(tf.n());
    std::vector<std::vector<FF>> rows;
    rows.reserve(n);
    for (const auto& ui : u) rows.push_back(tf.coords_over_base(ui.c[0]));
    // rank over F_q by elimination
    unsigned rank = 0;
    for (unsigned col = 0; col < n && rank < n; ++col) {
        unsigned piv = rank;
        while (piv < n && rows[piv][col] == 0) ++piv;
        if (piv == n) continue;
        std::swap(rows[piv], rows[rank]);
        const FF s = tf.inv(rows[rank][col]);
        for (unsigned j = 0; j < n; ++j) rows[rank][j] = tf.mul(rows[rank][j], s);
        for (unsigned r2 = 0; r2 < n; ++r2) {
            if (r2 == rank || rows[r2][col] == 0) continue;
            const FF f = rows[r2][col];
            for (unsigned j = 0; j < n; ++j) rows[r2][j] = tf.sub(rows[r2][j], tf.mul(f, rows[rank][j]));
        }
        ++rank;
    }
    return rank == n;
}

// reinterpret a base-ring element in the unramified ring at level k
RElem to_unram(const TruncRing& from, const RElem& x, unsigned k) {
    RElem r{std::vector<FF>(x.c.begin(), x.c.begin() + std::min<std::size_t>(k, x.c.size()))};
    r.c.resize(k, 0);
    (void)from;
    return r;
}

// embed a base-ring element into the ramified ring (t = u^n) at a given level
RElem base_to_ram(const TruncRing& from, const RElem& x, const TruncRing& ram) {
    RElem r = ram.zero();
    const unsigned n = static_cast<unsigned>(from.tower().n());
    for (unsigned s = 0; s < from.level(); ++s) {
        if (x.c[s] == 0) continue;
        const unsigned e = n * s;
        if (e < ram.level()) r.c[e] = x.c[s];
    }
    return r;
}

unsigned iceil_div(unsigned a, unsigned b) { return (a + b - 1) / b; }

// conjugate g so that its residue is upper triangular; identity when it
// already is.  Deterministic, so both census routes see the same matrix.
Mat iwahori_form(const TruncRing& gring, const Mat& g) {
    const unsigned n = g.n;
    bool upper = true;
    for (unsigned i = 0; i < n && upper; ++i)
        for (unsigned j = 0; j < i && upper; ++j)
            if (gring.residue(g.at(i, j)) != 0) upper = false;
    if (upper) return g;
    const TruncRing R1 = gring.at_level(1);
    const Mat X1 = triangularize1(R1, mat_residue(gring, g));
    Mat X = Mat::sized(gring, n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            X.at(i, j) = gring.from_residue(R1.residue(X1.at(i, j)));
    return mat_mul(gring, mat_mul(gring, mat_inverse(gring, X), g), X);
}

} // namespace

std::uint64_t xk_size(CensusModel model, const TowerField& tf, unsigned k) {
    const std::uint64_t q = tf.q(), qn = tf.order(), n = tf.n();
    if (model == CensusModel::Unramified) {
        std::uint64_t bases = 1, qi = 1;
        for (std::uint64_t i = 0; i < n; ++i) {
            bases *= (qn - qi);
            qi *= q;
        }
        return bases / (qn - 1) * ipow(qn, (k - 1) * (n - 1));
    }
    return ipow(q - 1, n - 1) * ipow(q, (n - 1) * (k - 1));
}

unsigned unram_working_level(const TowerField&, unsigned k) { return k; }

unsigned ram_working_level(const TowerField& tf, unsigned k) {
    return iceil_div(k + static_cast<unsigned>(tf.n()) - 1, static_cast<unsigned>(tf.n()));
}

std::vector<UnramPoint> enum_unram_xk(const TowerField& tf, unsigned k, std::uint64_t budget) {
    const unsigned n = static_cast<unsigned>(tf.n());
    const TruncRing R(tf, RingKind::Unramified, k);
    const std::uint64_t rs = R.size();
    std::uint64_t cand = 1;
    for (unsigned i = 0; i + 1 < n; ++i) cand *= rs;
    check_budget(cand * n * k, budget);

    std::vector<UnramPoint> out;
    for (std::uint64_t v = 0; v < cand; ++v) {
        UnramPoint p;
        p.u.assign(n, R.one());
        std::uint64_t rem = v;
        for (unsigned i = 1; i < n; ++i) {
            p.u[i] = R.element_at(rem % rs);
            rem /= rs;
        }
        bool units = true;
        for (unsigned i = 1; i < n; ++i) units = units && R.is_unit(p.u[i]);
        if (!units) continue;
        if (!residues_form_basis(tf, p.u)) continue;
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<RamPoint> enum_ram_xk(const TowerField& tf, unsigned k, std::uint64_t budget) {
    const unsigned n = static_cast<unsigned>(tf.n());
    const TruncRing R(tf, RingKind::Ramified, k);
    const std::uint64_t units = R.unit_count();
    std::uint64_t cand = 1;
    for (unsigned i = 0; i + 1 < n; ++i) cand *= units;
    check_budget(cand * n * k, budget);

    // enumerate unit tuples directly: unit index = (residue in F_q^x, higher digits)
    const std::uint64_t ro = R.residue_order();
    auto unit_at = [&](std::uint64_t idx) {
        RElem x = R.zero();
        x.c[0] = tf.base_element(1 + idx % (ro - 1));
        idx /= (ro - 1);
        for (unsigned i = 1; i < k; ++i) {
            x.c[i] = tf.base_element(idx % ro);
            idx /= ro;
        }
        return x;
    };

    std::vector<RamPoint> out;
    out.reserve(cand);
    for (std::uint64_t v = 0; v < cand; ++v) {
        RamPoint p;
        p.u.assign(n, R.one());
        std::uint64_t rem = v;
        for (unsigned i = 1; i < n; ++i) {
            p.u[i] = unit_at(rem % units);
            rem /= units;
        }
        out.push_back(std::move(p));
    }
    return out;
}

UnramPoint act_unram(const TruncRing& gring, const Mat& g, const UnramPoint& x,
                     const TowerField& tf, unsigned k) {
    if (gring.level() < k) throw std::invalid_argument("act_unram: g known to insufficient level");
    const unsigned n = g.n;
    const TruncRing R(tf, RingKind::Unramified, k);
    UnramPoint y;
    y.u.assign(n, R.zero());
    for (unsigned i = 0; i < n; ++i) {
        RElem s = R.zero();
        for (unsigned j = 0; j < n; ++j) {
            const RElem gij = to_unram(gring, g.at(i, j), k);
            s = R.add(s, R.mul(gij, x.u[j]));
        }
        y.u[i] = s;
    }
    if (!R.is_unit(y.u[0]))
        throw std::domain_error("act_unram: image has non-unit leading coordinate (g not invertible?)");
    const RElem s = R.inv(y.u[0]);
    for (auto& c : y.u) c = R.mul(c, s);
    return y;
}

RamPoint act_ram(const TruncRing& gring, const Mat& g, const RamPoint& x,
                 const TowerField& tf, unsigned k) {
    const unsigned n = g.n;
    if (gring.level() < ram_working_level(tf, k))
        throw std::invalid_argument("act_ram: g known to insufficient level");
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < i; ++j)
            if (gring.residue(g.at(i, j)) != 0)
                throw std::invalid_argument("act_ram: g is not in the Iwahori subgroup");
    for (unsigned i = 0; i < n; ++i)
        if (gring.residue(g.at(i, i)) == 0)
            throw std::invalid_argument("act_ram: g not invertible");

    const TruncRing R(tf, RingKind::Ramified, k);
    const TruncRing Rbig(tf, RingKind::Ramified, k + n - 1);
    // homogeneous coordinates w_j = u_j * w^j in the big ring, image v_i,
    // then u'_i = v_i / w^i truncated back to level k
    RamPoint y;
    y.u.assign(n, R.zero());
    std::vector<RElem> w(n);
    for (unsigned j = 0; j < n; ++j)
        w[j] = Rbig.shift(R.lifted(x.u[j], k + n - 1), static_cast<int>(j));
    for (unsigned i = 0; i < n; ++i) {
        RElem s = Rbig.zero();
        for (unsigned j = 0; j < n; ++j) {
            const RElem gij = base_to_ram(gring, g.at(i, j), Rbig);
            s = Rbig.add(s, Rbig.mul(gij, w[j]));
        }
        const RElem vi = Rbig.shift(s, -static_cast<int>(i));
        y.u[i] = Rbig.truncated(vi, k);
    }
    if (!R.is_unit(y.u[0])) throw std::logic_error("act_ram: leading unit lost");
    const RElem s = R.inv(y.u[0]);
    for (auto& c : y.u) c = R.mul(c, s);
    return y;
}

ScalarDecomp scalar_reduction(const TruncRing& gring, const Mat& g, CensusModel model) {
    const TowerField& tf = gring.tower();
    const unsigned n = g.n;
    const unsigned K = gring.level();

    if (model == CensusModel::Unramified) {
        // passthrough when the residue is already non-scalar
        if (!mat_is_scalar(gring.at_level(1), mat_residue(gring, g))) return ScalarDecomp{};
        RElem alpha = gring.zero();
        unsigned l = K;
        for (unsigned d = 0; d < K; ++d) {
            // digit-d coefficient matrix of g - alpha*I
            std::vector<FF> digit(static_cast<std::size_t>(n) * n);
            bool zero = true, scalar = true;
            for (unsigned i = 0; i < n; ++i)
                for (unsigned j = 0; j < n; ++j) {
                    FF c = gring.coeff(g.at(i, j), d);
                    if (i == j) c = tf.sub(c, alpha.c[d]);
                    digit[i * n + j] = c;
                    if (c != 0) zero = false;
                }
            for (unsigned i = 0; i < n && scalar; ++i)
                for (unsigned j = 0; j < n && scalar; ++j)
                    if (digit[i * n + j] != (i == j ? digit[0] : 0u)) scalar = false;
            if (zero) continue;
            if (scalar) {
                alpha.c[d] = tf.add(alpha.c[d], digit[0]);
                continue;
            }
            l = d;
            break;
        }
        if (l == K) throw std::domain_error("scalar_reduction: g is central at the working level");
        if (l == 0) return ScalarDecomp{}; // non-scalar residue, passthrough
        ScalarDecomp out;
        out.l = l;
        out.alpha = alpha;
        const TruncRing Rlow = gring.at_level(K - l);
        Mat a = Mat::sized(Rlow, n);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) {
                RElem diff = gring.sub(g.at(i, j), i == j ? alpha : gring.zero());
                a.at(i, j) = gring.truncated(gring.shift(diff, -static_cast<int>(l)), K - l);
            }
        out.a = a;
        return out;
    }

    // ramified: residue must be upper triangular with a single eigenvalue
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < i; ++j)
            if (gring.residue(g.at(i, j)) != 0)
                throw std::invalid_argument("scalar_reduction: residue not upper triangular");
    for (unsigned i = 1; i < n; ++i)
        if (gring.residue(g.at(i, i)) != gring.residue(g.at(0, 0)))
            throw std::invalid_argument("scalar_reduction: residue has distinct eigenvalues");

    RElem alpha = gring.from_residue(gring.residue(g.at(0, 0)));
    // below this, zero-at-precision entries can no longer certify membership
    // in the radical power, so l is capped there
    const int l_cap = static_cast<int>(n) * static_cast<int>(K) - static_cast<int>(n - 1);
    for (;;) {
        Mat diff = mat_sub(gring, g, mat_scalar(gring, n, alpha));
        // Iwahori filtration level: min over nonzero entries of n*val_F + j - i
        int l = l_cap;
        bool all_zero = true;
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) {
                const unsigned v = gring.val(diff.at(i, j));
                if (v >= K) continue;
                all_zero = false;
                const int cand = static_cast<int>(n) * static_cast<int>(v) +
                                 static_cast<int>(j) - static_cast<int>(i);
                l = std::min(l, cand);
            }
        if (all_zero) throw std::domain_error("scalar_reduction: g is central at the working level");
        const unsigned r = static_cast<unsigned>(l) % n, t = static_cast<unsigned>(l) / n;
        if (l < l_cap && r == 0) {
            // equality is attained only on the diagonal; if all diagonal
            // digits agree, fold them into alpha and go deeper
            bool all_equal = true;
            const FF d0 = gring.coeff(diff.at(0, 0), t);
            for (unsigned i = 1; i < n; ++i)
                if (gring.coeff(diff.at(i, i), t) != d0) all_equal = false;
            if (all_equal) {
                RElem bump = gring.zero();
                bump.c[t] = d0;
                alpha = gring.add(alpha, bump);
                continue;
            }
        }
        ScalarDecomp out;
        out.l = static_cast<unsigned>(l);
        out.alpha = alpha;
        out.t = t;
        out.r = r;
        out.eps.assign(n, std::vector<unsigned>(n, 0));
        out.e.assign(n, std::vector<unsigned>(n, 0));
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) {
                out.eps[i][j] = (n - 1 + r + i - j) / n;
                out.e[i][j] = static_cast<unsigned>(
                    ((static_cast<int>(j) - static_cast<int>(i) - static_cast<int>(r)) %
                         static_cast<int>(n) + static_cast<int>(n)) % static_cast<int>(n));
            }
        const int la = static_cast<int>(n) * static_cast<int>(K) - l - static_cast<int>(n - 1);
        if (la > 0) {
            const TruncRing Rbig(tf, RingKind::Ramified, n * K);
            const TruncRing Ra(tf, RingKind::Ramified, static_cast<unsigned>(la));
            Mat a = Mat::sized(Ra, n);
            for (unsigned i = 0; i < n; ++i)
                for (unsigned j = 0; j < n; ++j) {
                    const RElem h = base_to_ram(gring, diff.at(i, j), Rbig);
                    const int sh = static_cast<int>(j) - static_cast<int>(i) - l;
                    a.at(i, j) = Rbig.truncated(Rbig.shift(h, sh), static_cast<unsigned>(la));
                }
            out.a_ram = a;
            RElem eta = Ra.one();
            for (unsigned i = 0; i < n; ++i) {
                const unsigned j = (i + r) % n;
                eta = Ra.mul(eta, a.at(i, j));
            }
            out.eta = eta;
        }
        return out;
    }
}

namespace {

template <typename Point, typename Act>
std::uint64_t count_fixed(const std::vector<Point>& pts, Act&& act, unsigned threads) {
    if (threads == 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        threads = hw == 0 ? 1 : std::min(hw, 8u);
    }
    if (threads <= 1 || pts.size() < 4096) {
        std::uint64_t c = 0;
        for (const auto& p : pts)
            if (act(p) == p) ++c;
        return c;
    }
    // deterministic partition: chunk counts are summed in index order
    const std::size_t chunk = (pts.size() + threads - 1) / threads;
    std::vector<std::future<std::uint64_t>> futs;
    for (unsigned ti = 0; ti < threads; ++ti) {
        const std::size_t lo = ti * chunk, hi = std::min(pts.size(), lo + chunk);
        if (lo >= hi) break;
        futs.push_back(std::async(std::launch::async, [&, lo, hi] {
            std::uint64_t c = 0;
            for (std::size_t i = lo; i < hi; ++i)
                if (act(pts[i]) == pts[i]) ++c;
            return c;
        }));
    }
    std::uint64_t total = 0;
    for (auto& f : futs) total += f.get();
    return total;
}

} // namespace

CensusReport census(const TruncRing& gring, const Mat& g, CensusModel model,
                    const TowerField& tf, unsigned k, std::uint64_t budget, unsigned threads) {
    CensusReport rep;
    rep.model = model;
    rep.q = tf.q();
    rep.n = tf.n();
    rep.k = k;
    rep.route = CensusRoute::Brute;

    if (model == CensusModel::Unramified) {
        if (gring.level() < k) throw std::invalid_argument("census: g known to insufficient level");
        if (!mat_invertible(gring, g)) throw std::invalid_argument("census: g not invertible");
        const auto pts = enum_unram_xk(tf, k, budget);
        check_budget(pts.size() * g.n * g.n * k, budget);
        rep.count = count_fixed(pts, [&](const UnramPoint& p) { return act_unram(gring, g, p, tf, k); },
                                threads);
        rep.every_point_fixed = rep.count == pts.size() && !pts.empty();
        return rep;
    }

    if (gring.level() < ram_working_level(tf, k))
        throw std::invalid_argument("census: g known to insufficient level");
    if (!mat_invertible(gring, g)) throw std::invalid_argument("census: g not invertible");
    const TruncRing R1 = gring.at_level(1);
    if (!splits1(R1, charpoly(R1, mat_residue(gring, g)))) {
        rep.not_iwahori = true;
        rep.count = 0;
        return rep;
    }
    const Mat gi = iwahori_form(gring, g);
    const auto pts = enum_ram_xk(tf, k, budget);
    check_budget(pts.size() * g.n * g.n * (k + g.n), budget);
    rep.count = count_fixed(pts, [&](const RamPoint& p) { return act_ram(gring, gi, p, tf, k); },
                            threads);
    rep.every_point_fixed = rep.count == pts.size() && !pts.empty();
    return rep;
}

CensusReport census_formula(const TruncRing& gring, const Mat& g, CensusModel model,
                            const TowerField& tf, unsigned k, std::uint64_t budget) {
    CensusReport rep;
    rep.model = model;
    rep.q = tf.q();
    rep.n = tf.n();
    rep.k = k;
    rep.route = CensusRoute::Formula;
    const unsigned n = g.n;

    if (model == CensusModel::Unramified) {
        if (gring.level() < k) throw std::invalid_argument("census_formula: insufficient level");
        if (!mat_invertible(gring, g)) throw std::invalid_argument("census_formula: g not invertible");
        const TruncRing Rk = gring.at_level(k);
        const Mat gk = mat_truncated(gring, g, Rk);
        if (mat_is_scalar(Rk, gk)) {
            rep.count = xk_size(model, tf, k);
            rep.every_point_fixed = true;
            return rep;
        }
        const TruncRing R1 = gring.at_level(1);
        const Mat res = mat_residue(Rk, gk);
        if (!mat_is_scalar(R1, res)) {
            const PolyR cp1 = charpoly(R1, res);
            if (!irreducible1(R1, cp1)) {
                rep.count = 0;
                return rep;
            }
            // fixed points correspond to the roots of charpoly(g) in O_E/p_E^k
            const TruncRing RE(tf, RingKind::Unramified, k);
            const PolyR cp = charpoly(Rk, gk);
            std::vector<RElem> coeffs;
            for (const auto& c : cp.c) coeffs.push_back(to_unram(Rk, c, k));
            const auto hr = hensel_roots(coeffs, RE, budget);
            rep.count = hr.roots.size();
            rep.hensel_fallback = hr.hensel_fallback;
            return rep;
        }
        // scalar residue: g = alpha + t^l a with l maximal, then the fixed
        // points at level k are the lifts of the fixed points of a at level
        // k - l (residue-field fiber of size (q^n)^(n-1) per omitted level)
        const ScalarDecomp dec = scalar_reduction(Rk, gk, CensusModel::Unramified);
        if (k <= dec.l) {
            rep.count = xk_size(model, tf, k);
            rep.every_point_fixed = true;
            return rep;
        }
        const Mat& a = *dec.a;
        const TruncRing Ra = Rk.at_level(k - dec.l);
        const TruncRing R1a = Ra.at_level(1);
        const Mat ares = mat_residue(Ra, a);
        std::uint64_t inner = 0;
        bool fallback = false;
        if (rank1(R1a, ares) == n) {
            const PolyR cp1 = charpoly(R1a, ares);
            if (irreducible1(R1a, cp1)) {
                const TruncRing RE(tf, RingKind::Unramified, k - dec.l);
                const PolyR cp = charpoly(Ra, a);
                std::vector<RElem> coeffs;
                for (const auto& c : cp.c) coeffs.push_back(to_unram(Ra, c, k - dec.l));
                const auto hr = hensel_roots(coeffs, RE, budget);
                inner = hr.roots.size();
                fallback = hr.hensel_fallback;
            }
        }
        rep.count = inner * ipow(tf.order(), static_cast<std::uint64_t>(dec.l) * (n - 1));
        rep.hensel_fallback = fallback;
        return rep;
    }

    // ramified model
    if (gring.level() < ram_working_level(tf, k))
        throw std::invalid_argument("census_formula: insufficient level");
    if (!mat_invertible(gring, g)) throw std::invalid_argument("census_formula: g not invertible");
    const TruncRing R1 = gring.at_level(1);
    if (!splits1(R1, charpoly(R1, mat_residue(gring, g)))) {
        rep.not_iwahori = true;
        rep.count = 0;
        return rep;
    }
    const unsigned wl = ram_working_level(tf, k);
    const TruncRing Rw = gring.at_level(wl);
    const Mat gi = mat_truncated(gring, iwahori_form(gring, g), Rw);
    // distinct diagonal residues: no fixed point already in X_1
    for (unsigned i = 1; i < n; ++i) {
        if (Rw.residue(gi.at(i, i)) != Rw.residue(gi.at(0, 0))) {
            rep.count = 0;
            return rep;
        }
    }
    if (mat_is_scalar(Rw, gi)) {
        rep.count = xk_size(model, tf, k);
        rep.every_point_fixed = true;
        return rep;
    }
    const ScalarDecomp dec = scalar_reduction(Rw, gi, CensusModel::Ramified);
    if (k <= dec.l) {
        rep.count = xk_size(model, tf, k);
        rep.every_point_fixed = true;
        return rep;
    }
    if (dec.r == 0) {
        rep.count = 0; // diagonal, non-scalar residue of a: no fixed points past level l
        return rep;
    }
    const Mat& a = *dec.a_ram;
    const TruncRing Ra(tf, RingKind::Ramified, static_cast<unsigned>(a.a[0].c.size()));
    // the system is solvable only if every entry on the r-shifted diagonal is a unit
    for (unsigned i = 0; i < n; ++i) {
        const unsigned j = (i + dec.r) % n;
        if (!Ra.is_unit(a.at(i, j))) {
            rep.count = 0;
            return rep;
        }
    }
    const TruncRing Rr(tf, RingKind::Ramified, k - dec.l);
    const PolyR cp = charpoly(Ra, a);
    std::vector<RElem> coeffs;
    for (const auto& c : cp.c) coeffs.push_back(Ra.truncated(c, k - dec.l));
    const auto hr = hensel_roots(coeffs, Rr, budget);
    rep.hensel_fallback = hr.hensel_fallback;
    rep.count = hr.roots.size() * ipow(tf.q(), static_cast<std::uint64_t>(dec.l) * (n - 1));
    return rep;
}

} // namespace typecount
