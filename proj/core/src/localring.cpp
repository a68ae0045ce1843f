#include "typecount/localring.hpp"

#include <stdexcept>

namespace typecount {

TruncRing::TruncRing(const TowerField& tf, RingKind kind, unsigned level)
    : tf_(&tf), kind_(kind), level_(level) {
    if (level == 0) throw std::invalid_argument("TruncRing: level must be >= 1");
}

TruncRing make_ring(const TowerField& tf, RingKind kind, unsigned level) {
    return TruncRing(tf, kind, level);
}

std::uint64_t TruncRing::residue_order() const {
    return kind_ == RingKind::Unramified ? tf_->order() : tf_->q();
}

std::uint64_t TruncRing::size() const {
    std::uint64_t s = 1;
    for (unsigned i = 0; i < level_; ++i) s *= residue_order();
    return s;
}

std::uint64_t TruncRing::unit_count() const {
    return size() / residue_order() * (residue_order() - 1);
}

unsigned TruncRing::ram_index() const {
    return kind_ == RingKind::Ramified ? static_cast<unsigned>(tf_->n()) : 1;
}

RElem TruncRing::one() const {
    RElem r = zero();
    r.c[0] = tf_->one();
    return r;
}

RElem TruncRing::uniformizer() const {
    RElem r = zero();
    if (level_ > 1) r.c[1] = tf_->one();
    return r;
}

RElem TruncRing::t_image() const {
    RElem r = zero();
    const unsigned e = ram_index();
    if (e < level_) r.c[e] = tf_->one();
    return r;
}

void TruncRing::check_coeff(FF a) const {
    if (kind_ != RingKind::Unramified && !tf_->in_base(a))
        throw std::invalid_argument("TruncRing: coefficient not in the residue field F_q");
}

RElem TruncRing::from_residue(FF a) const {
    check_coeff(a);
    RElem r = zero();
    r.c[0] = a;
    return r;
}

RElem TruncRing::from_coeffs(std::vector<FF> c) const {
    if (c.size() != level_) throw std::invalid_argument("TruncRing::from_coeffs: wrong length");
    for (FF a : c) check_coeff(a);
    return RElem{std::move(c)};
}

unsigned TruncRing::val(const RElem& a) const {
    for (unsigned i = 0; i < level_; ++i)
        if (a.c[i] != 0) return i;
    return level_;
}

bool TruncRing::is_zero(const RElem& a) const { return val(a) == level_; }

RElem TruncRing::add(const RElem& a, const RElem& b) const {
    RElem r = zero();
    for (unsigned i = 0; i < level_; ++i) r.c[i] = tf_->add(a.c[i], b.c[i]);
    return r;
}

RElem TruncRing::sub(const RElem& a, const RElem& b) const {
    RElem r = zero();
    for (unsigned i = 0; i < level_; ++i) r.c[i] = tf_->sub(a.c[i], b.c[i]);
    return r;
}

RElem TruncRing::neg(const RElem& a) const {
    RElem r = zero();
    for (unsigned i = 0; i < level_; ++i) r.c[i] = tf_->neg(a.c[i]);
    return r;
}

RElem TruncRing::mul(const RElem& a, const RElem& b) const {
    RElem r = zero();
    for (unsigned i = 0; i < level_; ++i) {
        if (a.c[i] == 0) continue;
        for (unsigned j = 0; i + j < level_; ++j) {
            if (b.c[j] == 0) continue;
            r.c[i + j] = tf_->add(r.c[i + j], tf_->mul(a.c[i], b.c[j]));
        }
    }
    return r;
}

RElem TruncRing::inv(const RElem& a) const {
    if (!is_unit(a)) throw std::domain_error("TruncRing::inv of a non-unit");
    // power series inversion, digit by digit
    RElem r = zero();
    const FF u0 = tf_->inv(a.c[0]);
    r.c[0] = u0;
    for (unsigned i = 1; i < level_; ++i) {
        FF s = 0;
        for (unsigned j = 0; j < i; ++j) s = tf_->add(s, tf_->mul(a.c[i - j], r.c[j]));
        r.c[i] = tf_->neg(tf_->mul(u0, s));
    }
    return r;
}

RElem TruncRing::pow(const RElem& a, std::uint64_t e) const {
    RElem acc = one(), base = a;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

RElem TruncRing::shift(const RElem& a, int s) const {
    RElem r = zero();
    if (s >= 0) {
        for (unsigned i = 0; i + s < level_; ++i) r.c[i + s] = a.c[i];
    } else {
        const unsigned d = static_cast<unsigned>(-s);
        if (val(a) < d && !is_zero(a))
            throw std::domain_error("TruncRing::shift: negative shift below valuation");
        for (unsigned i = d; i < level_; ++i) r.c[i - d] = a.c[i];
    }
    return r;
}

RElem TruncRing::truncated(const RElem& a, unsigned new_level) const {
    if (new_level > level_) throw std::invalid_argument("TruncRing::truncated: level grows");
    return RElem{std::vector<FF>(a.c.begin(), a.c.begin() + new_level)};
}

RElem TruncRing::lifted(const RElem& a, unsigned new_level) const {
    if (new_level < level_) throw std::invalid_argument("TruncRing::lifted: level shrinks");
    RElem r = a;
    r.c.resize(new_level, 0);
    return r;
}

FF TruncRing::residue_field_element(std::uint64_t digit) const {
    // packed-poly order: digit 0 is zero, nonzero digits are packed values
    if (kind_ == RingKind::Unramified) return tf_->from_poly_index(digit);
    return tf_->base_element(digit);
}

std::uint64_t TruncRing::residue_field_index(FF a) const {
    if (kind_ == RingKind::Unramified) return tf_->poly_index(a);
    return tf_->base_index(a);
}

RElem TruncRing::element_at(std::uint64_t index) const {
    RElem r = zero();
    const std::uint64_t ro = residue_order();
    for (unsigned i = 0; i < level_; ++i) {
        r.c[i] = residue_field_element(index % ro);
        index /= ro;
    }
    return r;
}

std::uint64_t TruncRing::index_of(const RElem& a) const {
    const std::uint64_t ro = residue_order();
    std::uint64_t idx = 0, mulp = 1;
    for (unsigned i = 0; i < level_; ++i) {
        idx += residue_field_index(a.c[i]) * mulp;
        mulp *= ro;
    }
    return idx;
}

std::string TruncRing::to_string(const RElem& a) const {
    const char* var = kind_ == RingKind::Ramified ? "u" : "t";
    std::string out;
    for (unsigned i = 0; i < level_; ++i) {
        if (a.c[i] == 0) continue;
        if (!out.empty()) out += " + ";
        const std::uint64_t pv = tf_->poly_index(a.c[i]);
        if (i == 0) {
            out += std::to_string(pv);
        } else {
            if (pv != 1) out += std::to_string(pv) + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

namespace {

// evaluate poly (coeffs low to high) at x
RElem poly_eval(const std::vector<RElem>& poly, const RElem& x, const TruncRing& R) {
    RElem acc = R.zero();
    for (std::size_t i = poly.size(); i-- > 0;) acc = R.add(R.mul(acc, x), poly[i]);
    return acc;
}

std::vector<RElem> poly_derivative(const std::vector<RElem>& poly, const TruncRing& R) {
    std::vector<RElem> d;
    for (std::size_t i = 1; i < poly.size(); ++i) {
        RElem term = R.zero();
        for (std::uint64_t c = 0; c < i; ++c) term = R.add(term, poly[i]); // i * poly[i]
        d.push_back(term);
    }
    return d;
}

} // namespace

HenselResult hensel_roots(const std::vector<RElem>& poly, const TruncRing& ring, std::uint64_t budget) {
    if (poly.empty()) throw std::invalid_argument("hensel_roots: empty polynomial");
    const TruncRing& R = ring;
    const TowerField& tf = R.tower();
    if (!R.is_unit(poly.back()))
        throw std::invalid_argument("hensel_roots: leading coefficient must be a unit");
    if (!R.is_unit(poly.front()))
        throw std::invalid_argument("hensel_roots: constant term must be a unit");

    // residue roots by scanning the residue field
    const TruncRing R1 = R.at_level(1);
    std::vector<RElem> rpoly;
    for (const auto& c : poly) rpoly.push_back(R1.from_residue(R.residue(c)));
    const std::vector<RElem> dpoly = poly_derivative(poly, R);

    HenselResult out;
    std::vector<FF> residue_roots;
    std::vector<bool> simple;
    const std::uint64_t ro = R.residue_order();
    check_budget(ro * poly.size(), budget);
    for (std::uint64_t i = 0; i < ro; ++i) {
        const RElem x1 = R1.element_at(i);
        if (!R1.is_zero(poly_eval(rpoly, x1, R1))) continue;
        residue_roots.push_back(R1.residue(x1));
        // simple iff the derivative does not vanish at the residue root
        const RElem dv = poly_eval(dpoly, R.from_residue(R1.residue(x1)), R);
        simple.push_back(R.residue(dv) != 0);
    }

    for (std::size_t ri = 0; ri < residue_roots.size(); ++ri) {
        if (simple[ri]) {
            // unique lift, one uniformizer digit at a time:
            // r <- r + pi^j * c with c = -(p(r)/pi^j) / p'(r) in the residue field
            RElem r = R.from_residue(residue_roots[ri]);
            const FF dinv = tf.inv(R.residue(poly_eval(dpoly, r, R)));
            for (unsigned j = 1; j < R.level(); ++j) {
                const RElem pv = poly_eval(poly, r, R);
                if (R.is_zero(pv)) break;
                const unsigned v = R.val(pv);
                if (v < j) throw std::logic_error("hensel_roots: lift lost precision");
                if (v >= R.level()) break;
                const FF c = tf.neg(tf.mul(R.coeff(pv, v), dinv));
                RElem delta = R.zero();
                delta.c[v] = c;
                r = R.add(r, delta);
            }
            if (!R.is_zero(poly_eval(poly, r, R)))
                throw std::logic_error("hensel_roots: simple lift failed");
            out.roots.push_back(r);
        } else {
            // multiple residue root: exhaustive fiber search
            out.hensel_fallback = true;
            std::uint64_t fiber = 1;
            for (unsigned i = 1; i < R.level(); ++i) fiber *= ro;
            check_budget(fiber * poly.size() * R.level(), budget);
            for (std::uint64_t idx = 0; idx < fiber; ++idx) {
                RElem r = R.zero();
                r.c[0] = residue_roots[ri];
                std::uint64_t rem = idx;
                for (unsigned i = 1; i < R.level(); ++i) {
                    r.c[i] = R.at_level(1).element_at(rem % ro).c[0];
                    rem /= ro;
                }
                if (R.is_zero(poly_eval(poly, r, R))) out.roots.push_back(r);
            }
        }
    }
    return out;
}

HenselResult nth_power_roots(const RElem& eta, const TruncRing& ring, unsigned e, std::uint64_t budget) {
    if (!ring.is_unit(eta)) throw std::invalid_argument("nth_power_roots: eta must be a unit");
    std::vector<RElem> poly(e + 1, ring.zero());
    poly[0] = ring.neg(eta);
    poly[e] = ring.one();
    return hensel_roots(poly, ring, budget);
}

} // namespace typecount
