#include "typecount/towerfield.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace typecount {

namespace {

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

// multiply packed F_p-polynomials modulo the packed modulus (degree d)
std::uint64_t packed_mul_x(std::uint64_t a, std::uint64_t p, std::uint64_t d,
                           const std::vector<std::uint32_t>& mod) {
    // a * x, reduced
    std::vector<std::uint32_t> dig(d + 1, 0);
    for (std::uint64_t i = 0; i < d; ++i) {
        dig[i + 1] = static_cast<std::uint32_t>(a % p);
        a /= p;
    }
    const std::uint32_t top = dig[d];
    if (top != 0) {
        for (std::uint64_t i = 0; i < d; ++i)
            dig[i] = static_cast<std::uint32_t>((dig[i] + (p - top % p) * mod[i]) % p);
    }
    std::uint64_t out = 0;
    for (std::uint64_t i = d; i-- > 0;) out = out * p + dig[i];
    return out;
}

} // namespace

bool TowerField::is_prime(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

bool TowerField::is_prime_power(std::uint64_t v, std::uint64_t* p_out, std::uint64_t* f_out) {
    if (v < 2) return false;
    std::uint64_t p = v;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) { p = d; break; }
    }
    std::uint64_t f = 0, w = v;
    while (w % p == 0) { w /= p; ++f; }
    if (w != 1) return false;
    if (p_out) *p_out = p;
    if (f_out) *f_out = f;
    return true;
}

TowerField::TowerField(std::uint64_t q, std::uint64_t n) : q_(q), n_(n) {
    if (!is_prime_power(q, &p_, &f_))
        throw std::invalid_argument("TowerField: q must be a prime power >= 2");
    if (!is_prime(n))
        throw std::invalid_argument("TowerField: n must be prime");
    const std::uint64_t d = f_ * n_;
    order_ = ipow(p_, d);
    if (order_ > (1ull << 20))
        throw std::invalid_argument("TowerField: q^n too large for table construction");
    sub_stride_ = (order_ - 1) / (q_ - 1);
    fp_stride_ = (order_ - 1) / (p_ - 1);

    // Find the modulus: first monic degree-d polynomial, by ascending integer
    // encoding of its low coefficients, whose root x has multiplicative order
    // p^d - 1 (this forces irreducibility).
    std::vector<std::uint32_t> mod(d, 0);
    bool found = false;
    for (std::uint64_t enc = 1; enc < order_ && !found; ++enc) {
        std::uint64_t e = enc;
        for (std::uint64_t i = 0; i < d; ++i) { mod[i] = static_cast<std::uint32_t>(e % p_); e /= p_; }
        if (mod[0] == 0) continue; // x | polynomial, x cannot be invertible
        // walk powers of x; x is primitive iff we first return to 1 after
        // q^n - 1 steps, which also certifies irreducibility (a reducible
        // modulus has a smaller unit group)
        bool primitive = true;
        std::uint64_t steps = 1;
        std::uint64_t acc = p_; // packed "x" (d >= 2 always, since n >= 2)
        while (acc != 1) {
            acc = packed_mul_x(acc, p_, d, mod);
            ++steps;
            if (acc == 0 || steps > order_ - 1) { primitive = false; break; }
        }
        if (primitive && steps == order_ - 1) found = true;
    }
    if (!found) throw std::logic_error("TowerField: no primitive polynomial found");
    modulus_ = mod;

    // dlog tables
    idx_to_poly_.assign(order_ - 1, 0);
    poly_to_idx_.assign(order_, 0);
    std::uint64_t acc = 1; // gen^0
    for (std::uint64_t j = 0; j < order_ - 1; ++j) {
        idx_to_poly_[j] = static_cast<std::uint32_t>(acc);
        poly_to_idx_[acc] = static_cast<FF>(j + 1);
        acc = packed_mul_x(acc, p_, d, mod);
    }

    // base-subfield enumeration, sorted by packed-poly encoding so the order
    // is stable and, for prime q, matches the integer residue
    {
        std::vector<std::pair<std::uint64_t, FF>> tmp;
        tmp.emplace_back(0, 0);
        for (std::uint64_t j = 0; j < q_ - 1; ++j) {
            const FF h = from_dlog(j * sub_stride_);
            tmp.emplace_back(idx_to_poly_[h - 1], h);
        }
        std::sort(tmp.begin(), tmp.end());
        base_elems_.clear();
        for (auto& [pk, h] : tmp) base_elems_.push_back(h);
    }

    // coordinates over the base: solve the F_p-linear system for the basis
    // {gen^j * b^i : j < n, i < f} where b = gen^sub_stride generates F_q
    basis_coord_table_.assign(order_ * n_, 0);
    {
        const std::uint64_t dim = d;
        // columns: index (j, i) -> packed poly of gen^j * b^i, as F_p digit vector
        std::vector<std::vector<std::uint32_t>> cols(dim, std::vector<std::uint32_t>(dim, 0));
        const FF b = from_dlog(sub_stride_ % (order_ - 1));
        for (std::uint64_t j = 0; j < n_; ++j) {
            for (std::uint64_t i = 0; i < f_; ++i) {
                FF v = mul(pow(gen(), j), pow(b, i));
                std::uint64_t pk = poly_index(v);
                for (std::uint64_t r = 0; r < dim; ++r) { cols[j * f_ + i][r] = static_cast<std::uint32_t>(pk % p_); pk /= p_; }
            }
        }
        // invert the dim x dim matrix over F_p by Gauss-Jordan
        std::vector<std::vector<std::int64_t>> m(dim, std::vector<std::int64_t>(2 * dim, 0));
        for (std::uint64_t c = 0; c < dim; ++c)
            for (std::uint64_t r = 0; r < dim; ++r) m[r][c] = cols[c][r];
        for (std::uint64_t r = 0; r < dim; ++r) m[r][dim + r] = 1;
        const std::int64_t P = static_cast<std::int64_t>(p_);
        auto inv_mod = [P](std::int64_t a) {
            a %= P; if (a < 0) a += P;
            std::int64_t r = 1;
            for (std::int64_t e = P - 2; e > 0; e >>= 1) { if (e & 1) r = r * a % P; a = a * a % P; }
            return r;
        };
        for (std::uint64_t col = 0; col < dim; ++col) {
            std::uint64_t piv = col;
            while (piv < dim && m[piv][col] % P == 0) ++piv;
            if (piv == dim) throw std::logic_error("TowerField: basis matrix singular");
            std::swap(m[piv], m[col]);
            const std::int64_t s = inv_mod(m[col][col]);
            for (auto& x : m[col]) x = (x % P * s % P + P) % P;
            for (std::uint64_t r = 0; r < dim; ++r) {
                if (r == col || m[r][col] % P == 0) continue;
                const std::int64_t t = m[r][col] % P;
                for (std::uint64_t c2 = 0; c2 < 2 * dim; ++c2)
                    m[r][c2] = ((m[r][c2] - t * m[col][c2]) % P + P) % P;
            }
        }
        for (std::uint64_t h = 0; h < order_; ++h) {
            const FF a = static_cast<FF>(h);
            std::uint64_t pk = (a == 0) ? 0 : idx_to_poly_[a - 1];
            std::vector<std::int64_t> rhs(dim, 0);
            for (std::uint64_t r = 0; r < dim; ++r) { rhs[r] = static_cast<std::int64_t>(pk % p_); pk /= p_; }
            for (std::uint64_t j = 0; j < n_; ++j) {
                // coefficient c_j in F_q: sum over i of sol[(j,i)] * b^i
                FF cj = 0;
                const FF bb = from_dlog(sub_stride_ % (order_ - 1));
                for (std::uint64_t i = 0; i < f_; ++i) {
                    std::int64_t s = 0;
                    for (std::uint64_t r = 0; r < dim; ++r) s = (s + m[j * f_ + i][dim + r] * rhs[r]) % P;
                    if (s != 0) cj = add(cj, mul(from_fp(static_cast<std::uint64_t>(s)), pow(bb, i)));
                }
                basis_coord_table_[h * n_ + j] = cj;
            }
        }
    }
}

FF TowerField::add(FF a, FF b) const {
    if (a == 0) return b;
    if (b == 0) return a;
    const std::uint64_t pa = idx_to_poly_[a - 1], pb = idx_to_poly_[b - 1];
    std::uint64_t out = 0, mulp = 1, x = pa, y = pb;
    for (std::uint64_t i = 0; i < f_ * n_; ++i) {
        out += ((x % p_ + y % p_) % p_) * mulp;
        x /= p_; y /= p_; mulp *= p_;
    }
    return poly_to_idx_[out];
}

FF TowerField::neg(FF a) const {
    if (a == 0) return 0;
    if (p_ == 2) return a;
    const std::uint64_t half = (order_ - 1) / 2; // gen^half = -1 for odd characteristic
    return from_dlog((dlog(a) + half) % (order_ - 1));
}

FF TowerField::mul(FF a, FF b) const {
    if (a == 0 || b == 0) return 0;
    return from_dlog((dlog(a) + dlog(b)) % (order_ - 1));
}

FF TowerField::inv(FF a) const {
    if (a == 0) throw std::domain_error("TowerField::inv of zero");
    return from_dlog((order_ - 1 - dlog(a)) % (order_ - 1));
}

FF TowerField::pow(FF a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? one() : 0;
    const unsigned __int128 j = static_cast<unsigned __int128>(dlog(a)) * e % (order_ - 1);
    return from_dlog(static_cast<std::uint64_t>(j));
}

bool TowerField::in_base(FF a) const { return a == 0 || dlog(a) % sub_stride_ == 0; }

bool TowerField::in_prime_field(FF a) const { return a == 0 || dlog(a) % fp_stride_ == 0; }

std::uint64_t TowerField::dlog(FF a) const {
    if (a == 0) throw std::domain_error("TowerField::dlog of zero");
    return a - 1;
}

FF TowerField::from_dlog(std::uint64_t j) const { return static_cast<FF>(j % (order_ - 1) + 1); }

std::vector<FF> TowerField::base_elements() const { return base_elems_; }

std::vector<FF> TowerField::all_elements() const {
    std::vector<FF> out;
    out.reserve(order_);
    for (std::uint64_t v = 0; v < order_; ++v) out.push_back(poly_to_idx_[v]);
    return out;
}

FF TowerField::base_element(std::uint64_t index) const {
    if (index >= q_) throw std::out_of_range("TowerField::base_element");
    return base_elems_[index];
}

std::uint64_t TowerField::base_index(FF a) const {
    for (std::uint64_t i = 0; i < q_; ++i)
        if (base_elems_[i] == a) return i;
    throw std::domain_error("TowerField::base_index: not a base-field element");
}

std::uint64_t TowerField::poly_index(FF a) const { return a == 0 ? 0 : idx_to_poly_[a - 1]; }

FF TowerField::from_poly_index(std::uint64_t v) const {
    if (v >= order_) throw std::out_of_range("TowerField::from_poly_index");
    return poly_to_idx_[v];
}

unsigned TowerField::fp_value(FF a) const {
    if (!in_prime_field(a)) throw std::domain_error("TowerField::fp_value: not in prime subfield");
    return static_cast<unsigned>(poly_index(a)); // prime-field elements pack as 0..p-1
}

FF TowerField::from_fp(std::uint64_t v) const { return poly_to_idx_[v % p_]; }

unsigned TowerField::abs_trace(FF a) const {
    FF s = 0, x = a;
    for (std::uint64_t i = 0; i < f_ * n_; ++i) {
        s = add(s, x);
        x = pow(x, p_);
    }
    return fp_value(s);
}

unsigned TowerField::base_trace(FF a) const {
    if (!in_base(a)) throw std::domain_error("TowerField::base_trace: not in base field");
    FF s = 0, x = a;
    for (std::uint64_t i = 0; i < f_; ++i) {
        s = add(s, x);
        x = pow(x, p_);
    }
    return fp_value(s);
}

std::vector<FF> TowerField::coords_over_base(FF a) const {
    std::vector<FF> out(n_);
    for (std::uint64_t j = 0; j < n_; ++j) out[j] = basis_coord_table_[static_cast<std::uint64_t>(a) * n_ + j];
    return out;
}

bool is_regular(CharacterIndex k, const TowerField& tf) {
    const std::uint64_t m = tf.order() - 1;
    std::set<std::uint64_t> orbit;
    std::uint64_t cur = k.k % m;
    for (std::uint64_t i = 0; i < tf.n(); ++i) {
        orbit.insert(cur);
        cur = static_cast<std::uint64_t>(static_cast<unsigned __int128>(cur) * tf.q() % m);
    }
    return orbit.size() == tf.n();
}

std::vector<std::uint64_t> frobenius_orbit(CharacterIndex k, const TowerField& tf) {
    const std::uint64_t m = tf.order() - 1;
    std::set<std::uint64_t> orbit;
    std::uint64_t cur = k.k % m;
    for (std::uint64_t i = 0; i < tf.n(); ++i) {
        orbit.insert(cur);
        cur = static_cast<std::uint64_t>(static_cast<unsigned __int128>(cur) * tf.q() % m);
    }
    return {orbit.begin(), orbit.end()};
}

std::vector<std::uint64_t> regular_orbits(const TowerField& tf) {
    const std::uint64_t m = tf.order() - 1;
    std::vector<bool> seen(m, false);
    std::vector<std::uint64_t> reps;
    for (std::uint64_t k = 0; k < m; ++k) {
        if (seen[k]) continue;
        const auto orbit = frobenius_orbit({k}, tf);
        for (auto j : orbit) seen[j] = true;
        if (orbit.size() == tf.n()) reps.push_back(*std::min_element(orbit.begin(), orbit.end()));
    }
    return reps;
}

CycInt char_value(CharacterIndex k, FF x, const TowerField& tf) {
    if (tf.is_zero(x)) throw std::domain_error("char_value: character of zero");
    const std::uint64_t m = tf.order() - 1;
    const unsigned __int128 e = static_cast<unsigned __int128>(k.k % m) * tf.dlog(x) % m;
    return CycInt::root(static_cast<std::uint32_t>(m), static_cast<std::uint64_t>(e));
}

double cyc_abs(const CycInt& v) { return v.abs(); }

} // namespace typecount
