#include "typecount/simpletypes.hpp"

#include <numeric>
#include <stdexcept>

namespace typecount {

namespace {

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

// minimal polynomial of the field generator over F_q: prod (x - g^(q^i))
std::vector<FF> generator_minpoly(const TowerField& tf) {
    std::vector<FF> poly{tf.one()};
    FF conj = tf.gen();
    for (std::uint64_t i = 0; i < tf.n(); ++i) {
        std::vector<FF> next(poly.size() + 1, 0);
        for (std::size_t j = 0; j < poly.size(); ++j) {
            next[j + 1] = tf.add(next[j + 1], poly[j]);
            next[j] = tf.add(next[j], tf.mul(tf.neg(conj), poly[j]));
        }
        poly = std::move(next);
        conj = tf.frobenius(conj);
    }
    for (FF c : poly)
        if (!tf.in_base(c)) throw std::logic_error("generator_minpoly: coefficient outside F_q");
    return poly;
}

std::uint64_t lambda_dimension(std::uint64_t q, std::uint64_t n, unsigned m) {
    if (m % 2 == 1) return 1;
    return ipow(q, n * (n - 1) / 2);
}

} // namespace

TypeDatum make_minimal_unram(std::uint64_t q, std::uint64_t n, unsigned m) {
    if (m == 0) throw std::invalid_argument("make_minimal_unram: m must be >= 1");
    TypeDatum d;
    d.kase = TypeCase::Unramified;
    d.q = q;
    d.n = n;
    d.m = m;
    d.k = (m + 1) / 2;
    d.working_level = m + 1;
    d.beta_pole = m;
    d.tower = std::make_shared<TowerField>(q, n);
    d.lambda_dim = lambda_dimension(q, n, m);

    const TruncRing R(*d.tower, RingKind::Base, d.working_level);
    const auto p = generator_minpoly(*d.tower);
    const unsigned nn = static_cast<unsigned>(n);
    Mat C = Mat::sized(R, nn);
    for (unsigned i = 0; i + 1 < nn; ++i) C.at(i + 1, i) = R.one();
    for (unsigned i = 0; i < nn; ++i) C.at(i, nn - 1) = R.from_residue(d.tower->neg(p[i]));
    d.beta_unit = C;
    return d;
}

TypeDatum make_minimal_ram(std::uint64_t q, std::uint64_t n, unsigned m) {
    if (m == 0) throw std::invalid_argument("make_minimal_ram: m must be >= 1");
    if (std::gcd(static_cast<std::uint64_t>(m), n) != 1)
        throw std::invalid_argument("make_minimal_ram: gcd(m, n) must be 1");
    TypeDatum d;
    d.kase = TypeCase::Ramified;
    d.q = q;
    d.n = n;
    d.m = m;
    d.k = (m + 1) / 2;
    d.working_level = m + 1;
    d.tower = std::make_shared<TowerField>(q, n);
    d.lambda_dim = lambda_dimension(q, n, m);

    // beta = Pi^(-m) = t^(-ceil(m/n)) Pi^(n ceil(m/n) - m) in the Eisenstein
    // model Pi^n = t
    const unsigned nn = static_cast<unsigned>(n);
    const unsigned s = (m + nn - 1) / nn;
    const unsigned e = nn * s - m; // in [1, n-1] since gcd(m, n) = 1
    d.beta_pole = s;
    const TruncRing R(*d.tower, RingKind::Base, d.working_level);
    Mat Pi = Mat::sized(R, nn);
    for (unsigned i = 0; i + 1 < nn; ++i) Pi.at(i + 1, i) = R.one();
    Pi.at(0, nn - 1) = R.uniformizer();
    Mat U = mat_identity(R, nn);
    for (unsigned i = 0; i < e; ++i) U = mat_mul(R, U, Pi);
    d.beta_unit = U;
    return d;
}

FF psi_beta_exponent(const TypeDatum& d, const Mat& x) {
    const TruncRing R(*d.tower, RingKind::Base, d.working_level);
    if (x.a[0].c.size() != d.working_level)
        throw std::invalid_argument("psi_beta_exponent: x must be at the working level");
    const Mat diff = mat_sub(R, x, mat_identity(R, x.n));
    const RElem tr = mat_trace(R, mat_mul(R, d.beta_unit, diff));
    return R.coeff(tr, d.beta_pole);
}

CycInt psi_beta_value(const TypeDatum& d, const Mat& x) {
    const FF expo = psi_beta_exponent(d, x);
    const auto p = static_cast<std::uint32_t>(d.tower->characteristic());
    if (expo == 0) return CycInt::integer(p, 1);
    return CycInt::root(p, d.tower->base_trace(expo));
}

GroupData group_data(const TypeDatum& d) {
    if (d.kase != TypeCase::Unramified)
        throw std::invalid_argument("group_data: defined for unramified data");
    if (d.m % 2 != 0) throw std::invalid_argument("group_data: W is formed only for even m");
    const std::uint64_t q = d.q, n = d.n;
    const unsigned L = d.working_level, k = d.k;

    // orders of the images of 1 + p_E^i and 1 + P^j at level L
    auto im_e = [&](unsigned i) { return ipow(q, n * (L - i)); };
    auto im_p = [&](unsigned j) { return ipow(q, n * n * (L - j)); };

    GroupData gd;
    gd.h1_order = im_e(1) * im_p(k + 1) / im_e(k + 1);
    gd.j1_order = im_e(1) * im_p(k) / im_e(k);
    gd.j_mod_j1 = ipow(q, n) - 1;
    gd.j_order = gd.j_mod_j1 * gd.j1_order;
    gd.w_dim = static_cast<unsigned>(n * n - n);
    gd.w_order = ipow(q, n * n - n);

    // basis of W = P^k / (p_E^k + P^(k+1)): extend the F_q-span of
    // {1, Cbar, ..., Cbar^(n-1)} to all of M_n(F_q) by standard matrix units
    const TowerField& tf = *d.tower;
    const TruncRing R1(tf, RingKind::Base, 1);
    const Mat Cbar = mat_residue(TruncRing(tf, RingKind::Base, d.working_level), d.beta_unit);
    const unsigned nn = static_cast<unsigned>(n);
    const unsigned dim = nn * nn;

    std::vector<std::vector<FF>> rows; // echelonized span, as flat vectors
    auto reduce = [&](std::vector<FF> v) {
        for (const auto& b : rows) {
            unsigned piv = 0;
            while (piv < dim && b[piv] == 0) ++piv;
            if (piv == dim || v[piv] == 0) continue;
            const FF sc = tf.mul(v[piv], tf.inv(b[piv]));
            for (unsigned i = 0; i < dim; ++i) v[i] = tf.sub(v[i], tf.mul(sc, b[i]));
        }
        return v;
    };
    auto insert = [&](const std::vector<FF>& v) {
        auto w = reduce(v);
        for (unsigned i = 0; i < dim; ++i)
            if (w[i] != 0) { rows.push_back(w); return true; }
        return false;
    };

    Mat pw = mat_identity(R1, nn);
    for (unsigned i = 0; i < nn; ++i) {
        std::vector<FF> flat(dim);
        for (unsigned a = 0; a < nn; ++a)
            for (unsigned b = 0; b < nn; ++b) flat[a * nn + b] = R1.residue(pw.at(a, b));
        insert(flat);
        pw = mat_mul(R1, pw, Cbar);
    }
    if (rows.size() != nn)
        throw std::logic_error("group_data: residue of beta does not generate k_E");

    for (unsigned a = 0; a < nn && gd.w_basis.size() < gd.w_dim; ++a)
        for (unsigned b = 0; b < nn && gd.w_basis.size() < gd.w_dim; ++b) {
            std::vector<FF> flat(dim, 0);
            flat[a * nn + b] = tf.one();
            if (!insert(flat)) continue;
            Mat unit = Mat::sized(R1, nn);
            unit.at(a, b) = R1.one();
            gd.w_basis.push_back(unit);
        }
    if (gd.w_basis.size() != gd.w_dim) throw std::logic_error("group_data: W basis incomplete");
    return gd;
}

PairingMatrix theta_pairing(const TypeDatum& d) {
    if (d.kase != TypeCase::Unramified)
        throw std::invalid_argument("theta_pairing: defined for unramified data");
    if (d.m % 2 != 0) throw std::invalid_argument("theta_pairing: requires even m");
    const GroupData gd = group_data(d);
    const TowerField& tf = *d.tower;
    const TruncRing R1(tf, RingKind::Base, 1);
    const Mat Cbar = mat_residue(TruncRing(tf, RingKind::Base, d.working_level), d.beta_unit);

    PairingMatrix pm;
    pm.dim = gd.w_dim;
    pm.gram.assign(static_cast<std::size_t>(pm.dim) * pm.dim, 0);
    for (unsigned s = 0; s < pm.dim; ++s)
        for (unsigned r = 0; r < pm.dim; ++r) {
            const Mat& Bs = gd.w_basis[s];
            const Mat& Br = gd.w_basis[r];
            const Mat comm = mat_sub(R1, mat_mul(R1, Bs, Br), mat_mul(R1, Br, Bs));
            const RElem tr = mat_trace(R1, mat_mul(R1, Cbar, comm));
            pm.gram[static_cast<std::size_t>(s) * pm.dim + r] = R1.residue(tr);
        }

    // rank over F_q
    std::vector<std::vector<FF>> m(pm.dim, std::vector<FF>(pm.dim));
    for (unsigned i = 0; i < pm.dim; ++i)
        for (unsigned j = 0; j < pm.dim; ++j) m[i][j] = pm.gram[static_cast<std::size_t>(i) * pm.dim + j];
    unsigned rank = 0;
    for (unsigned col = 0; col < pm.dim && rank < pm.dim; ++col) {
        unsigned piv = rank;
        while (piv < pm.dim && m[piv][col] == 0) ++piv;
        if (piv == pm.dim) continue;
        std::swap(m[piv], m[rank]);
        const FF sc = tf.inv(m[rank][col]);
        for (unsigned j = 0; j < pm.dim; ++j) m[rank][j] = tf.mul(m[rank][j], sc);
        for (unsigned r2 = 0; r2 < pm.dim; ++r2) {
            if (r2 == rank || m[r2][col] == 0) continue;
            const FF f = m[r2][col];
            for (unsigned j = 0; j < pm.dim; ++j) m[r2][j] = tf.sub(m[r2][j], tf.mul(f, m[rank][j]));
        }
        ++rank;
    }
    pm.rank = rank;
    return pm;
}

std::uint64_t iwahori_index(std::uint64_t q, std::uint64_t n) {
    std::uint64_t idx = 1;
    for (std::uint64_t k = 1; k < n; ++k) {
        std::uint64_t s = 0, qi = 1;
        for (std::uint64_t i = 0; i <= k; ++i) {
            s += qi;
            qi *= q;
        }
        idx *= s;
    }
    return idx;
}

TraceBound type_trace_bound(const TruncRing& gring, const Mat& g, const TypeDatum& d,
                            std::uint64_t budget) {
    if (mat_is_scalar(gring, g))
        throw std::invalid_argument("type_trace_bound: g is central");
    const TowerField& tf = *d.tower;
    TraceBound tb;

    if (d.kase == TypeCase::Unramified) {
        const CensusReport rep = census_formula(gring, g, CensusModel::Unramified, tf, d.k, budget);
        tb.census_count = rep.count;
        const TruncRing R1 = gring.at_level(1);
        const bool irred = irreducible1(R1, charpoly(R1, mat_residue(gring, g)));
        tb.lemma_applies = d.m % 2 == 0 && irred;
        tb.per_point = tb.lemma_applies ? 1 : d.lambda_dim;
        tb.index_factor = 1;
    } else {
        const CensusReport rep = census_formula(gring, g, CensusModel::Ramified, tf, d.k, budget);
        tb.census_count = rep.count;
        tb.per_point = d.lambda_dim;
        tb.index_factor = iwahori_index(d.q, d.n);
    }
    tb.bound = tb.census_count * tb.per_point * tb.index_factor;
    return tb;
}

} // namespace typecount
