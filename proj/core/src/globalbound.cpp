#include "typecount/globalbound.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "typecount/towerfield.hpp"

namespace typecount {

Rational::Rational(long long n, long long d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    const long long g = std::gcd(std::llabs(n), d);
    num = g ? n / g : n;
    den = g ? d / g : d;
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num * o.den + o.num * den, den * o.den);
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(num * o.num, den * o.den);
}

std::string Rational::to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

void GlobalConfig::validate() const {
    if (!TowerField::is_prime(n)) throw std::invalid_argument("GlobalConfig: n must be prime");
    if (mu_e == 0) throw std::invalid_argument("GlobalConfig: mu_E must be positive");
    for (auto m : masses) {
        if (m == 0) throw std::invalid_argument("GlobalConfig: masses must be positive");
        if (m % mu_e != 0)
            throw std::invalid_argument("GlobalConfig: each |K_g| must be divisible by mu_E");
    }
    if (c2 < 0) throw std::invalid_argument("GlobalConfig: C_2 must be nonnegative");
}

Rational c1(const GlobalConfig& cfg) {
    if (cfg.masses.empty()) throw std::invalid_argument("c1: mass list is empty");
    Rational acc = Rational::integer(0);
    for (auto m : cfg.masses) acc = acc + Rational(1, static_cast<long long>(m));
    return acc * Rational::integer(static_cast<long long>(cfg.mu_e));
}

std::uint64_t min_cuspidal_dim(std::uint64_t q_v, unsigned n) {
    std::uint64_t dim = 1, qi = 1;
    for (unsigned i = 1; i < n; ++i) {
        qi *= q_v;
        dim *= (qi - 1);
    }
    return dim;
}

std::uint64_t type_dimension(const TypeDescriptor& desc, unsigned n) {
    std::uint64_t dim = 1;
    for (const auto& [q_v, dim_v] : desc.finite) {
        if (dim_v < min_cuspidal_dim(q_v, n))
            throw std::invalid_argument("type_dimension: dim_v below the cuspidal minimum");
        dim *= dim_v;
    }
    for (const auto& w : desc.arch) dim *= weyl_dim(w);
    return dim;
}

double eval_pv(const std::vector<double>& coeffs, const Weight& lambda) {
    const double gap = static_cast<double>(lambda.a.front() - lambda.a.back());
    double acc = 0.0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * gap + coeffs[i];
    return acc;
}

double lower_bound(const GlobalConfig& cfg, const TypeDescriptor& desc) {
    if (desc.arch.size() != cfg.pv.size())
        throw std::invalid_argument("lower_bound: archimedean place count mismatch");
    const double dim = static_cast<double>(type_dimension(desc, cfg.n));
    double pprod = 1.0;
    for (std::size_t v = 0; v < desc.arch.size(); ++v) pprod *= eval_pv(cfg.pv[v], desc.arch[v]);
    const double npow = std::pow(static_cast<double>(cfg.n), static_cast<double>(desc.finite.size()));
    return c1(cfg).to_double() * dim - cfg.c2 * npow * pprod;
}

namespace {

unsigned pv_degree(const std::vector<double>& coeffs) {
    unsigned deg = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0.0) deg = static_cast<unsigned>(i);
    return deg;
}

// dominant weights of U(n) with a_n = 0 and a_1 <= box, deterministic order
void gen_weights(unsigned n, long long cap, std::vector<long long>& cur, std::vector<Weight>& out) {
    if (cur.size() + 1 == n) {
        Weight w;
        w.a = cur;
        w.a.push_back(0);
        out.push_back(std::move(w));
        return;
    }
    for (long long v = 0; v <= cap; ++v) {
        cur.push_back(v);
        gen_weights(n, v, cur, out);
        cur.pop_back();
    }
}

std::vector<Weight> weight_box(unsigned n, unsigned box) {
    std::vector<Weight> out;
    if (n == 1) {
        out.push_back(Weight{{0}});
        return out;
    }
    std::vector<long long> cur;
    gen_weights(n, box, cur, out);
    return out;
}

} // namespace

PositivityScan positivity_scan(const GlobalConfig& cfg, unsigned box) {
    cfg.validate();
    const unsigned weyl_deg = cfg.n * (cfg.n - 1) / 2;
    for (const auto& coeffs : cfg.pv)
        if (pv_degree(coeffs) >= weyl_deg && weyl_deg > 0)
            throw std::invalid_argument("positivity_scan: P_v degree must be below the Weyl degree");

    PositivityScan scan;
    const auto weights = weight_box(cfg.n, box);

    // all subsets of the finite-place list, each place at the minimal type
    // dimension (the worst case for the bound)
    const std::size_t np = cfg.places_q.size();
    if (np > 20) throw std::invalid_argument("positivity_scan: too many finite places");
    for (std::uint64_t mask = 0; mask < (1ull << np); ++mask) {
        TypeDescriptor base;
        for (std::size_t i = 0; i < np; ++i)
            if (mask & (1ull << i))
                base.finite.emplace_back(cfg.places_q[i], min_cuspidal_dim(cfg.places_q[i], cfg.n));
        // product over archimedean places of the weight box
        std::vector<std::size_t> sel(cfg.pv.size(), 0);
        for (;;) {
            TypeDescriptor desc = base;
            for (std::size_t v = 0; v < sel.size(); ++v) desc.arch.push_back(weights[sel[v]]);
            const double b = lower_bound(cfg, desc);
            if (b <= 0.0) scan.exceptional.push_back(ScanEntry{desc, b});
            std::size_t pos = 0;
            for (; pos < sel.size(); ++pos) {
                if (sel[pos] + 1 < weights.size()) {
                    ++sel[pos];
                    for (std::size_t j = 0; j < pos; ++j) sel[j] = 0;
                    break;
                }
            }
            if (pos == sel.size()) break;
        }
    }

    // Axis certificates: along lambda_v = (s, 0, ..., 0) with everything else
    // fixed, the bound is C * dim_axis(s) - C' * P_v(s) with positive C, C',
    // dim_axis of degree n-1.  It is eventually increasing whenever
    // deg P_v < n - 1 (or C_2 = 0); the crossover is located by scanning
    // every finite-place subset in the worst case.
    scan.certified = true;
    for (std::size_t v = 0; v < cfg.pv.size(); ++v) {
        AxisCertificate cert;
        cert.place = static_cast<unsigned>(v);
        const unsigned ddeg = cfg.n - 1;
        const unsigned pdeg = pv_degree(cfg.pv[v]);
        cert.eventually_increasing = cfg.c2 == 0.0 || pdeg < ddeg;
        long long crossover = 0;
        for (std::uint64_t mask = 0; mask < (1ull << np); ++mask) {
            TypeDescriptor base;
            for (std::size_t i = 0; i < np; ++i)
                if (mask & (1ull << i))
                    base.finite.emplace_back(cfg.places_q[i], min_cuspidal_dim(cfg.places_q[i], cfg.n));
            double prev = -1e300;
            for (long long s = 0; s <= static_cast<long long>(2 * box + 64); ++s) {
                TypeDescriptor d = base;
                for (std::size_t w = 0; w < cfg.pv.size(); ++w) {
                    Weight lam;
                    lam.a.assign(cfg.n, 0);
                    if (w == v) lam.a[0] = s;
                    d.arch.push_back(lam);
                }
                const double b = lower_bound(cfg, d);
                if (b <= prev) crossover = std::max(crossover, s);
                prev = b;
            }
        }
        cert.crossover = crossover + 1;
        scan.certified = scan.certified && cert.eventually_increasing;
        scan.certificates.push_back(cert);
    }
    return scan;
}

GlobalConfig config_from_json_text(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    GlobalConfig cfg;
    cfg.n = j.at("n").get<unsigned>();
    cfg.mu_e = j.at("mu_E").get<std::uint64_t>();
    cfg.masses = j.at("masses").get<std::vector<std::uint64_t>>();
    cfg.c2 = j.value("C_2", 0.0);
    if (j.contains("P_v"))
        for (const auto& pv : j.at("P_v"))
            cfg.pv.push_back(pv.at("coeffs").get<std::vector<double>>());
    if (j.contains("places"))
        for (const auto& pl : j.at("places")) cfg.places_q.push_back(pl.at("q").get<std::uint64_t>());
    cfg.validate();
    return cfg;
}

std::string config_to_json_text(const GlobalConfig& cfg) {
    nlohmann::json j;
    j["n"] = cfg.n;
    j["mu_E"] = cfg.mu_e;
    j["masses"] = cfg.masses;
    j["C_2"] = cfg.c2;
    j["P_v"] = nlohmann::json::array();
    for (std::size_t v = 0; v < cfg.pv.size(); ++v)
        j["P_v"].push_back({{"place", v}, {"coeffs", cfg.pv[v]}});
    j["places"] = nlohmann::json::array();
    for (auto q : cfg.places_q) j["places"].push_back({{"q", q}});
    return j.dump(2);
}

} // namespace typecount
