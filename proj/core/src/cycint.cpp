#include "typecount/cycint.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace typecount {

namespace {

// prime factorization by trial division; orders here are small (q^n - 1 at desk scale)
std::vector<std::pair<std::uint32_t, std::uint32_t>> factor_order(std::uint32_t m) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::uint32_t p = 2; static_cast<std::uint64_t>(p) * p <= m; ++p) {
        if (m % p == 0) {
            std::uint32_t a = 0;
            while (m % p == 0) { m /= p; ++a; }
            out.emplace_back(p, a);
        }
    }
    if (m > 1) out.emplace_back(m, 1);
    return out;
}

} // namespace

void CycInt::require_order(std::uint32_t m) {
    if (m == 0) throw std::invalid_argument("CycInt: order must be positive");
    if (m > (1u << 22)) throw std::invalid_argument("CycInt: order too large");
}

CycInt CycInt::integer(std::uint32_t order, std::int64_t v) {
    CycInt r(order);
    r.c_[0] = v;
    return r; // exponent 0 is always canonical
}

CycInt CycInt::root(std::uint32_t order, std::uint64_t j) {
    CycInt r(order);
    r.c_[j % order] = 1;
    r.canonicalize();
    return r;
}

void CycInt::canonicalize() {
    if (m_ == 1) return;
    const auto primes = factor_order(m_);
    for (const auto& [p, a] : primes) {
        std::uint32_t pa = 1;
        for (std::uint32_t i = 0; i < a; ++i) pa *= p;
        const std::uint32_t lead = pa / p;       // p^(a-1)
        const std::uint32_t step = m_ / p;       // generator of the order-p subgroup
        for (std::uint32_t j = 0; j < m_; ++j) {
            if ((j % pa) / lead != p - 1) continue;
            const std::int64_t v = c_[j];
            if (v == 0) continue;
            c_[j] = 0;
            for (std::uint32_t cc = 1; cc < p; ++cc)
                c_[(j + static_cast<std::uint64_t>(cc) * step) % m_] -= v;
        }
    }
}

bool CycInt::is_zero() const {
    for (auto v : c_)
        if (v != 0) return false;
    return true;
}

std::int64_t CycInt::as_integer() const {
    for (std::uint32_t j = 1; j < m_; ++j)
        if (c_[j] != 0) throw std::domain_error("CycInt::as_integer: value is not a rational integer");
    return c_[0];
}

CycInt CycInt::operator+(const CycInt& o) const {
    if (m_ != o.m_) throw std::invalid_argument("CycInt: mismatched orders");
    CycInt r(m_);
    for (std::uint32_t j = 0; j < m_; ++j) r.c_[j] = c_[j] + o.c_[j];
    return r; // sum of canonical forms stays canonical
}

CycInt CycInt::operator-(const CycInt& o) const {
    if (m_ != o.m_) throw std::invalid_argument("CycInt: mismatched orders");
    CycInt r(m_);
    for (std::uint32_t j = 0; j < m_; ++j) r.c_[j] = c_[j] - o.c_[j];
    return r;
}

CycInt CycInt::operator-() const {
    CycInt r(m_);
    for (std::uint32_t j = 0; j < m_; ++j) r.c_[j] = -c_[j];
    return r;
}

CycInt CycInt::operator*(const CycInt& o) const {
    if (m_ != o.m_) throw std::invalid_argument("CycInt: mismatched orders");
    CycInt r(m_);
    for (std::uint32_t i = 0; i < m_; ++i) {
        if (c_[i] == 0) continue;
        for (std::uint32_t j = 0; j < m_; ++j) {
            if (o.c_[j] == 0) continue;
            r.c_[(i + j) % m_] += c_[i] * o.c_[j];
        }
    }
    r.canonicalize();
    return r;
}

CycInt CycInt::scaled(std::int64_t k) const {
    CycInt r(m_);
    for (std::uint32_t j = 0; j < m_; ++j) r.c_[j] = c_[j] * k;
    return r;
}

CycInt CycInt::conj() const {
    CycInt r(m_);
    for (std::uint32_t j = 0; j < m_; ++j) r.c_[(m_ - j) % m_] += c_[j];
    r.canonicalize();
    return r;
}

bool CycInt::operator==(const CycInt& o) const { return m_ == o.m_ && c_ == o.c_; }

CycInt CycInt::exact_div(std::int64_t d) const {
    if (d == 0) throw std::invalid_argument("CycInt::exact_div: division by zero");
    CycInt r(m_);
    for (std::uint32_t j = 0; j < m_; ++j) {
        if (c_[j] % d != 0) throw std::domain_error("CycInt::exact_div: not divisible");
        r.c_[j] = c_[j] / d;
    }
    return r;
}

std::complex<long double> CycInt::to_complex() const {
    const long double tau = 2.0L * std::numbers::pi_v<long double>;
    std::complex<long double> acc(0.0L, 0.0L);
    for (std::uint32_t j = 0; j < m_; ++j) {
        if (c_[j] == 0) continue;
        const long double ang = tau * static_cast<long double>(j) / static_cast<long double>(m_);
        acc += static_cast<long double>(c_[j]) *
               std::complex<long double>(std::cos(ang), std::sin(ang));
    }
    return acc;
}

double CycInt::abs() const { return static_cast<double>(std::abs(to_complex())); }

std::string CycInt::to_string() const {
    std::string out;
    for (std::uint32_t j = 0; j < m_; ++j) {
        if (c_[j] == 0) continue;
        std::int64_t v = c_[j];
        if (out.empty()) {
            if (v < 0) { out += "-"; v = -v; }
        } else {
            out += (v < 0) ? " - " : " + ";
            if (v < 0) v = -v;
        }
        if (j == 0) {
            out += std::to_string(v);
        } else {
            if (v != 1) out += std::to_string(v) + "*";
            out += "z(" + std::to_string(m_) + ")^" + std::to_string(j);
        }
    }
    if (out.empty()) out = "0";
    return out;
}

} // namespace typecount
