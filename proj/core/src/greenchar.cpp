#include "typecount/greenchar.hpp"

#include <map>
#include <stdexcept>

namespace typecount {

namespace {

std::vector<std::uint64_t> class_key(const TruncRing& R1, const Mat& g,
                                     const std::vector<std::pair<PolyR, unsigned>>& factors,
                                     const TowerField& tf) {
    // charpoly coefficients + per-factor rank profile
    std::vector<std::uint64_t> key;
    const PolyR cp = charpoly(R1, g);
    for (const auto& c : cp.c) key.push_back(tf.poly_index(R1.residue(c)));
    key.push_back(~0ull);
    for (const auto& [f, mult] : factors) {
        for (const auto& c : f.c) key.push_back(tf.poly_index(R1.residue(c)));
        key.push_back(mult);
        Mat fg = poly_of_matrix(R1, f, g);
        Mat pw = fg;
        for (unsigned j = 0; j * f.degree() <= g.n; ++j) {
            key.push_back(rank1(R1, pw));
            pw = mat_mul(R1, pw, fg);
        }
        key.push_back(~0ull - 1);
    }
    return key;
}

} // namespace

std::vector<ConjClassData> conj_classes(const TowerField& tf, std::uint64_t budget) {
    const unsigned n = static_cast<unsigned>(tf.n());
    const std::uint64_t g_order = gl_order(tf.q(), n);
    check_budget(g_order * n, budget);

    const TruncRing R1(tf, RingKind::Base, 1);
    std::map<std::vector<std::uint64_t>, ConjClassData> classes;
    for_each_invertible(R1, n, [&](const Mat& g) {
        const PolyR cp = charpoly(R1, g);
        const auto factors = factor1(R1, cp);
        auto key = class_key(R1, g, factors, tf);
        auto it = classes.find(key);
        if (it != classes.end()) {
            ++it->second.class_size;
            return true;
        }
        ConjClassData c;
        c.rep = g;
        c.factors = factors;
        c.class_size = 1;
        c.central = mat_is_scalar(R1, g);
        if (factors.size() == 1) {
            c.single_factor = true;
            c.d = static_cast<unsigned>(factors[0].first.degree());
            const Mat fg = poly_of_matrix(R1, factors[0].first, g);
            c.r = (n - rank1(R1, fg)) / c.d;
        }
        classes.emplace(std::move(key), std::move(c));
        return true;
    });

    std::vector<ConjClassData> out;
    out.reserve(classes.size());
    for (auto& [key, c] : classes) out.push_back(std::move(c));
    return out;
}

CycInt green_value(CuspidalCharacter chi, const ConjClassData& c, const TowerField& tf) {
    if (!is_regular({chi.k}, tf))
        throw std::invalid_argument("green_value: character index is not regular");
    const std::uint32_t m = static_cast<std::uint32_t>(tf.order() - 1);
    if (!c.single_factor) return CycInt::zero(m);

    // sum of theta^k over the d distinct roots of f in F_{q^n}: one root's
    // Frobenius orbit
    const TruncRing R1(tf, RingKind::Base, 1);
    const TruncRing RE(tf, RingKind::Unramified, 1);
    PolyR fe;
    for (const auto& co : c.factors[0].first.c) fe.c.push_back(RE.from_coeffs({R1.residue(co)}));
    FF root = 0;
    for (std::uint64_t v = 0; v < tf.order(); ++v) {
        const RElem x = RE.element_at(v);
        if (RE.is_zero(poly_eval(RE, fe, x))) { root = RE.residue(x); break; }
    }
    if (root == 0) throw std::logic_error("green_value: no root of the irreducible factor in F_{q^n}");
    CycInt sum = CycInt::zero(m);
    FF cur = root;
    for (unsigned i = 0; i < c.d; ++i) {
        sum = sum + char_value({chi.k}, cur, tf);
        cur = tf.frobenius(cur);
    }

    std::int64_t scale = 1;
    std::int64_t qi = 1;
    for (unsigned i = 1; i < c.r; ++i) {
        qi *= static_cast<std::int64_t>(tf.q());
        scale *= (1 - qi);
    }
    if (tf.n() % 2 == 0) scale = -scale; // (-1)^(n-1)
    return sum.scaled(scale);
}

std::vector<CycInt> green_class_function(CuspidalCharacter chi,
                                         const std::vector<ConjClassData>& classes,
                                         const TowerField& tf) {
    std::vector<CycInt> out;
    out.reserve(classes.size());
    for (const auto& c : classes) out.push_back(green_value(chi, c, tf));
    return out;
}

CycInt inner_product(const std::vector<CycInt>& f1, const std::vector<CycInt>& f2,
                     const std::vector<ConjClassData>& classes, const TowerField& tf) {
    if (f1.size() != classes.size() || f2.size() != classes.size())
        throw std::invalid_argument("inner_product: class-function length mismatch");
    const std::uint32_t m = static_cast<std::uint32_t>(tf.order() - 1);
    CycInt acc = CycInt::zero(m);
    std::uint64_t g_order = 0;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        g_order += classes[i].class_size;
        acc = acc + (f1[i] * f2[i].conj()).scaled(static_cast<std::int64_t>(classes[i].class_size));
    }
    return acc.exact_div(static_cast<std::int64_t>(g_order));
}

std::vector<CycInt> trivial_class_function(const std::vector<ConjClassData>& classes,
                                           const TowerField& tf) {
    const std::uint32_t m = static_cast<std::uint32_t>(tf.order() - 1);
    return std::vector<CycInt>(classes.size(), CycInt::integer(m, 1));
}

std::uint64_t cuspidal_dimension(const TowerField& tf) {
    std::uint64_t dim = 1, qi = 1;
    for (std::uint64_t i = 1; i < tf.n(); ++i) {
        qi *= tf.q();
        dim *= (qi - 1);
    }
    return dim;
}

std::uint64_t depth_zero_bound(const ConjClassData& c, const TowerField& tf) {
    if (c.central) throw std::invalid_argument("depth_zero_bound: class is central");
    if (c.single_factor && c.d == tf.n()) return tf.n(); // irreducible charpoly
    if (!c.single_factor) return 0;                      // >= 2 distinct eigenvalues
    return cuspidal_dimension(tf);                       // scalar times unipotent
}

} // namespace typecount
