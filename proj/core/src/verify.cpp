#include "typecount/verify.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "typecount/archweyl.hpp"
#include "typecount/globalbound.hpp"
#include "typecount/greenchar.hpp"
#include "typecount/projcensus.hpp"
#include "typecount/simpletypes.hpp"

namespace typecount {

namespace {

struct Check {
    bool ok = true;
    std::ostringstream detail;
    std::uint64_t cases = 0;

    void expect(bool cond, const std::string& what) {
        ++cases;
        if (cond) return;
        if (ok) detail << "first failure: " << what;
        ok = false;
    }
};

// deterministic sample of invertible matrices over R: stride through the
// coefficient space and keep the first `want` invertible hits
std::vector<Mat> sample_invertible(const TruncRing& R, unsigned n, std::size_t want) {
    const std::uint64_t sz = R.size();
    std::uint64_t total = 1;
    for (unsigned i = 0; i < n * n; ++i) total *= sz;
    const std::uint64_t stride = 2654435761ull % total | 1ull;
    std::vector<Mat> out;
    std::uint64_t v = 1;
    for (std::uint64_t iter = 0; iter < total && out.size() < want; ++iter, v = (v + stride) % total) {
        Mat m = Mat::sized(R, n);
        std::uint64_t rem = v;
        for (unsigned i = 0; i < n * n; ++i) {
            m.a[i] = R.element_at(rem % sz);
            rem /= sz;
        }
        if (mat_invertible(R, m)) out.push_back(std::move(m));
    }
    return out;
}

bool residue_charpoly_irreducible(const TruncRing& R, const Mat& g) {
    const TruncRing R1 = R.at_level(1);
    return irreducible1(R1, charpoly(R1, mat_residue(R, g)));
}

bool residue_two_distinct_eigenvalues(const TruncRing& R, const Mat& g) {
    const TruncRing R1 = R.at_level(1);
    const auto fac = factor1(R1, charpoly(R1, mat_residue(R, g)));
    return fac.size() >= 2;
}

// ----- criterion 1 & 2 -----

SuiteResult green_orthogonality(std::uint64_t budget) {
    Check ck;
    const std::vector<std::pair<std::uint64_t, std::uint64_t>> grids = {
        {2, 2}, {3, 2}, {4, 2}, {5, 2}, {2, 3}, {3, 3}};
    for (const auto& [q, n] : grids) {
        const TowerField tf(q, n);
        const auto classes = conj_classes(tf, budget);
        const auto orbits = regular_orbits(tf);
        std::vector<std::vector<CycInt>> chars;
        for (auto k : orbits) chars.push_back(green_class_function({k}, classes, tf));
        const auto triv = trivial_class_function(classes, tf);
        const std::uint32_t m = static_cast<std::uint32_t>(tf.order() - 1);
        for (std::size_t i = 0; i < chars.size(); ++i) {
            const CycInt self = inner_product(chars[i], chars[i], classes, tf);
            ck.expect(self == CycInt::integer(m, 1),
                      "self inner product != 1 at q=" + std::to_string(q) + " n=" + std::to_string(n) +
                          " k=" + std::to_string(orbits[i]));
            for (std::size_t j = i + 1; j < chars.size(); ++j) {
                const CycInt cross = inner_product(chars[i], chars[j], classes, tf);
                ck.expect(cross.is_zero(), "cross inner product != 0 at q=" + std::to_string(q));
            }
            const CycInt vs_triv = inner_product(chars[i], triv, classes, tf);
            ck.expect(vs_triv.is_zero(), "inner product with trivial != 0 at q=" + std::to_string(q));
        }
        ck.expect(chars.size() == orbits.size(), "orbit count mismatch");
    }
    return {"green-orthogonality", ck.ok,
            ck.ok ? "exact norm-1 and pairwise orthogonality on all grids (" +
                        std::to_string(ck.cases) + " checks)"
                  : ck.detail.str(),
            0.0};
}

SuiteResult green_dimension(std::uint64_t budget) {
    Check ck;
    const std::vector<std::pair<std::uint64_t, std::uint64_t>> grids = {
        {2, 2}, {3, 2}, {4, 2}, {5, 2}, {2, 3}, {3, 3}};
    for (const auto& [q, n] : grids) {
        const TowerField tf(q, n);
        const auto classes = conj_classes(tf, budget);
        const auto orbits = regular_orbits(tf);
        const std::uint32_t m = static_cast<std::uint32_t>(tf.order() - 1);
        for (const auto& c : classes) {
            if (!(c.central && c.single_factor && c.d == 1 && c.r == n)) continue;
            // scalar classes: value = dimension * theta^k(alpha)
            for (auto k : orbits) {
                const CycInt v = green_value({k}, c, tf);
                ck.expect(cyc_abs(v) > 0, "vanishing at a central class");
            }
        }
        // the identity class specifically
        for (const auto& c : classes) {
            bool is_identity = c.central && !c.rep.a.empty();
            if (is_identity) {
                const TruncRing R1(tf, RingKind::Base, 1);
                is_identity = c.rep == mat_identity(R1, static_cast<unsigned>(n));
            }
            if (!is_identity) continue;
            for (auto k : orbits) {
                const CycInt v = green_value({k}, c, tf);
                ck.expect(v == CycInt::integer(m, static_cast<std::int64_t>(cuspidal_dimension(tf))),
                          "identity value != (q-1)...(q^(n-1)-1) at q=" + std::to_string(q) +
                              " n=" + std::to_string(n));
            }
        }
    }
    return {"green-dimension", ck.ok,
            ck.ok ? "green_value at identity equals the dimension formula on all grids (" +
                        std::to_string(ck.cases) + " checks)"
                  : ck.detail.str(),
            0.0};
}

// ----- criteria 3, 4, 5 -----

struct CensusGrid {
    std::uint64_t q;
    std::uint64_t n;
    unsigned k;
    bool exhaustive;
    std::size_t samples;
};

void census_checks(Check& ck, std::uint64_t budget, bool check_bounds, bool check_oracle) {
    const std::vector<CensusGrid> grids = {
        {2, 2, 1, true, 0},  {2, 2, 2, true, 0},  {3, 2, 1, true, 0}, {3, 2, 2, true, 0},
        {5, 2, 1, false, 60}, {5, 2, 2, false, 60}, {2, 3, 1, false, 80}, {2, 3, 2, false, 80}};
    for (const auto& grid : grids) {
        const TowerField tf(grid.q, grid.n);
        const unsigned n = static_cast<unsigned>(grid.n);
        const unsigned wl_ram = ram_working_level(tf, grid.k);
        const unsigned wl = std::max(grid.k, wl_ram);
        const TruncRing R(tf, RingKind::Base, wl);

        const auto classes = conj_classes(tf, budget);
        const auto orbits = regular_orbits(tf);

        auto handle = [&](const Mat& g) {
            const bool irred = residue_charpoly_irreducible(R, g);
            const bool split2 = residue_two_distinct_eigenvalues(R, g);
            const bool central = mat_is_scalar(R, g);

            CensusReport bu, bf, ru, rf;
            bu = census(R, g, CensusModel::Unramified, tf, grid.k, budget);
            ru = census(R, g, CensusModel::Ramified, tf, grid.k, budget);
            if (check_oracle) {
                bf = census_formula(R, g, CensusModel::Unramified, tf, grid.k, budget);
                rf = census_formula(R, g, CensusModel::Ramified, tf, grid.k, budget);
                ck.expect(bu.count == bf.count,
                          "unramified brute != formula (q=" + std::to_string(grid.q) +
                              " n=" + std::to_string(grid.n) + " k=" + std::to_string(grid.k) +
                              " brute=" + std::to_string(bu.count) + " formula=" + std::to_string(bf.count) +
                              " g=" + mat_to_string(R, g) + ")");
                ck.expect(ru.count == rf.count,
                          "ramified brute != formula (q=" + std::to_string(grid.q) +
                              " k=" + std::to_string(grid.k) + " brute=" + std::to_string(ru.count) +
                              " formula=" + std::to_string(rf.count) + " g=" + mat_to_string(R, g) + ")");
            }
            if (check_bounds && !central) {
                if (irred) {
                    ck.expect(bu.count <= grid.n, "irreducible charpoly census > n");
                    ck.expect(ru.count <= grid.n, "irreducible charpoly ramified census > n");
                }
                if (split2) {
                    ck.expect(bu.count == 0, "distinct eigenvalues but unramified census != 0");
                    ck.expect(ru.count == 0, "distinct eigenvalues but ramified census != 0");
                }
            }
            return true;
        };

        if (grid.exhaustive) {
            for_each_invertible(R, n, handle);
        } else {
            for (const auto& g : sample_invertible(R, n, grid.samples)) handle(g);
        }

        if (check_bounds) {
            // depth-zero side of the same criteria, exact over the class list
            for (const auto& c : classes) {
                if (c.central) continue;
                const bool irred = c.single_factor && c.d == grid.n;
                const bool split2 = !c.single_factor;
                for (auto korb : orbits) {
                    const CycInt v = green_value({korb}, c, tf);
                    if (irred)
                        ck.expect(cyc_abs(v) <= static_cast<double>(grid.n) + 1e-9,
                                  "depth-zero |green| > n on an elliptic class");
                    if (split2) ck.expect(v.is_zero(), "depth-zero green != 0 with distinct eigenvalues");
                }
            }
        }
    }
}

SuiteResult tracebound_n(std::uint64_t budget) {
    Check ck;
    census_checks(ck, budget, true, false);
    return {"tracebound-n", ck.ok,
            ck.ok ? "census <= n and |green| <= n whenever the residue charpoly is irreducible (" +
                        std::to_string(ck.cases) + " checks)"
                  : ck.detail.str(),
            0.0};
}

SuiteResult tracebound_zero(std::uint64_t budget) {
    Check ck;
    census_checks(ck, budget, true, false);
    return {"tracebound-zero", ck.ok,
            ck.ok ? "census = 0 in both models and green = 0 with >= 2 distinct eigenvalues (" +
                        std::to_string(ck.cases) + " checks)"
                  : ck.detail.str(),
            0.0};
}

SuiteResult census_oracle(std::uint64_t budget) {
    Check ck;
    census_checks(ck, budget, false, true);
    return {"census-oracle", ck.ok,
            ck.ok ? "brute census equals the formula route on every grid input, both models (" +
                        std::to_string(ck.cases) + " checks)"
                  : ck.detail.str(),
            0.0};
}

// ----- criterion 6 -----

SuiteResult pairing_nondegeneracy(std::uint64_t) {
    Check ck;
    for (std::uint64_t q : {2, 3}) {
        for (std::uint64_t n : {2, 3}) {
            for (unsigned m : {2u, 4u}) {
                const TypeDatum d = make_minimal_unram(q, n, m);
                const PairingMatrix pm = theta_pairing(d);
                const TowerField& tf = *d.tower;
                const unsigned dim = pm.dim;
                ck.expect(dim == n * n - n, "W dimension != n^2 - n");
                ck.expect(pm.rank == dim, "pairing rank below n^2 - n at q=" + std::to_string(q) +
                                              " n=" + std::to_string(n) + " m=" + std::to_string(m));
                for (unsigned s = 0; s < dim; ++s) {
                    ck.expect(pm.gram[s * dim + s] == 0, "nonzero diagonal");
                    for (unsigned r = 0; r < dim; ++r)
                        ck.expect(pm.gram[s * dim + r] == tf.neg(pm.gram[r * dim + s]),
                                  "Gram not skew-symmetric");
                }

                // extension independence: the group commutator of 1 + t^k B_s
                // and 1 + t^k B_r lands inside the domain of psi_beta, where
                // every extension theta agrees with psi_beta, and its value
                // matches the Gram entry
                const GroupData gd = group_data(d);
                const TruncRing R(tf, RingKind::Base, d.working_level);
                const unsigned kk = d.k;
                const unsigned dom = (d.m + 2) / 2; // ceil((m+1)/2)
                for (unsigned s = 0; s < dim; ++s)
                    for (unsigned r = 0; r < dim; ++r) {
                        Mat x = mat_identity(R, static_cast<unsigned>(n));
                        Mat y = mat_identity(R, static_cast<unsigned>(n));
                        for (unsigned i = 0; i < n; ++i)
                            for (unsigned j = 0; j < n; ++j) {
                                const FF bs = gd.w_basis[s].at(i, j).c[0];
                                const FF br = gd.w_basis[r].at(i, j).c[0];
                                if (bs) {
                                    RElem t = R.zero();
                                    t.c[kk] = bs;
                                    x.at(i, j) = R.add(x.at(i, j), t);
                                }
                                if (br) {
                                    RElem t = R.zero();
                                    t.c[kk] = br;
                                    y.at(i, j) = R.add(y.at(i, j), t);
                                }
                            }
                        const Mat comm = mat_mul(R, mat_mul(R, x, y),
                                                 mat_mul(R, mat_inverse(R, x), mat_inverse(R, y)));
                        const Mat cm1 = mat_sub(R, comm, mat_identity(R, static_cast<unsigned>(n)));
                        unsigned minval = d.working_level;
                        for (const auto& el : cm1.a) minval = std::min(minval, R.val(el));
                        ck.expect(minval >= dom, "commutator outside the domain of psi_beta");
                        const FF expo = psi_beta_exponent(d, comm);
                        ck.expect(expo == pm.gram[s * dim + r],
                                  "psi_beta(commutator) != Gram entry at q=" + std::to_string(q) +
                                      " n=" + std::to_string(n) + " m=" + std::to_string(m));
                    }
            }
        }
    }
    return {"pairing", ck.ok,
            ck.ok ? "h_theta alternating of rank n^2-n and extension-independent on all grids (" +
                        std::to_string(ck.cases) + " checks)"
                  : ck.detail.str(),
            0.0};
}

// ----- criterion 7 -----

SuiteResult weyl_schur(std::uint64_t) {
    Check ck;
    for (unsigned n = 1; n <= 4; ++n) {
        // all dominant weights with a_n = 0 and gap <= 6 (both sides are
        // invariant under the uniform determinant shift)
        std::vector<long long> a(n, 0);
        for (;;) {
            Weight lam{a};
            if (lam.dominant()) {
                const std::uint64_t lhs = schur_trace_identity(lam, n);
                const std::uint64_t rhs = weyl_dim(lam);
                ck.expect(lhs == rhs, "schur at identity != weyl_dim");
            }
            std::size_t i = 0;
            for (; i + 1 < n; ++i) {
                if (a[i] < 6) {
                    ++a[i];
                    for (std::size_t j = 0; j < i; ++j) a[j] = 0;
                    break;
                }
            }
            if (n == 1 || i + 1 == n) break;
        }
    }
    for (unsigned n = 1; n <= 5; ++n) {
        const WeylPolynomial P = weyl_polynomial(n);
        ck.expect(P.degree() == n * (n - 1) / 2, "weyl polynomial degree != (n^2-n)/2");
    }
    return {"weyl-schur", ck.ok,
            ck.ok ? "schur(1,...,1) = weyl_dim up to gap 6, n <= 4; polynomial degree checks n <= 5 (" +
                        std::to_string(ck.cases) + " checks)"
                  : ck.detail.str(),
            0.0};
}

// ----- criterion 8 -----

SuiteResult regular_bound_scan(std::uint64_t) {
    Check ck;
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * 3.14159265358979323846);
    for (unsigned n : {2u, 3u}) {
        for (unsigned trial = 0; trial < 50; ++trial) {
            std::vector<std::complex<double>> x;
            for (;;) {
                x.clear();
                for (unsigned i = 0; i < n; ++i) {
                    const double t = ang(rng);
                    x.emplace_back(std::cos(t), std::sin(t));
                }
                double min_gap = 10.0;
                for (unsigned i = 0; i < n; ++i)
                    for (unsigned j = i + 1; j < n; ++j) min_gap = std::min(min_gap, std::abs(x[i] - x[j]));
                if (min_gap > 1e-3) break;
            }
            const double bound = regular_bound(x);
            std::vector<long long> a(n, 0);
            for (;;) {
                Weight lam{a};
                if (lam.dominant()) {
                    const double v = std::abs(schur_trace(lam, x));
                    ck.expect(v <= bound + 1e-9, "|schur| exceeds n!/|Vandermonde|");
                }
                std::size_t i = 0;
                for (; i + 1 < n; ++i) {
                    if (a[i] < 30) {
                        ++a[i];
                        for (std::size_t j = 0; j < i; ++j) a[j] = 0;
                        break;
                    }
                }
                if (i + 1 == n) break;
            }
        }
    }
    return {"regular-bound", ck.ok,
            ck.ok ? "|schur| <= n!/|Vandermonde| on 100 random regular spectra, gaps <= 30 (" +
                        std::to_string(ck.cases) + " checks)"
                  : ck.detail.str(),
            0.0};
}

// ----- criterion 9 -----

SuiteResult cc_degree(std::uint64_t) {
    Check ck;
    const std::vector<std::complex<double>> x = {{1.0, 0.0}, {1.0, 0.0}, {-1.0, 0.0}};
    const DegreeScanReport rep = cc_degree_scan(x, 20);
    ck.expect(rep.fitted_exponent <= 2.5, "fitted growth exponent above 2.5");
    ck.expect(rep.weyl_degree == 3.0, "weyl degree mismatch");
    std::ostringstream os;
    os << "fitted exponent " << rep.fitted_exponent << " <= 2.5 < 3 (weyl degree) for x = (1,1,-1)";
    return {"cc-degree", ck.ok, ck.ok ? os.str() : ck.detail.str(), 0.0};
}

// ----- criterion 10 -----

SuiteResult global_formula(std::uint64_t) {
    Check ck;

    // fixture 1: spec arithmetic examples for c1
    {
        GlobalConfig cfg;
        cfg.n = 2;
        cfg.mu_e = 2;
        cfg.masses = {2};
        ck.expect(c1(cfg) == Rational::integer(1), "c1({2}, mu=2) != 1");
        cfg.masses = {2, 4};
        ck.expect(c1(cfg) == Rational(3, 2), "c1({2,4}, mu=2) != 3/2");
    }
    // fixture 2: bound = c1 dim - C2 n^|S| P = 4 - 2 = 2
    {
        GlobalConfig cfg;
        cfg.n = 2;
        cfg.mu_e = 1;
        cfg.masses = {1};
        cfg.c2 = 1.0;
        cfg.pv = {{1.0}};
        TypeDescriptor desc;
        desc.finite = {{3, 2}};
        desc.arch = {Weight{{1, 0}}};
        ck.expect(std::abs(lower_bound(cfg, desc) - 2.0) < 1e-12, "fixture bound != 2");
    }
    // fixture 3: C2 = 0 degenerate: bound = c1 * dim exactly
    {
        GlobalConfig cfg;
        cfg.n = 3;
        cfg.mu_e = 3;
        cfg.masses = {3, 6, 9};
        cfg.c2 = 0.0;
        ck.expect(c1(cfg) == Rational(11, 6), "c1({3,6,9}, mu=3) != 11/6");
        TypeDescriptor desc;
        desc.finite = {{2, 3}};
        ck.expect(std::abs(lower_bound(cfg, desc) - 11.0 / 2.0) < 1e-12, "fixture bound != 11/2");
    }
    // fixture 4: fractional masses and a nontrivial P_v
    {
        GlobalConfig cfg;
        cfg.n = 2;
        cfg.mu_e = 2;
        cfg.masses = {4, 4, 8};
        cfg.c2 = 0.5;
        cfg.pv = {{2.0}};
        ck.expect(c1(cfg) == Rational(5, 4), "c1({4,4,8}, mu=2) != 5/4");
        TypeDescriptor desc;
        desc.arch = {Weight{{2, 0}}};
        ck.expect(std::abs(lower_bound(cfg, desc) - 11.0 / 4.0) < 1e-12, "fixture bound != 11/4");
    }
    // fixture 5: minimal dimension values
    {
        ck.expect(min_cuspidal_dim(3, 2) == 2, "min dim (3,2) != 2");
        ck.expect(min_cuspidal_dim(2, 3) == 3, "min dim (2,3) != 3");
        ck.expect(min_cuspidal_dim(5, 2) == 4, "min dim (5,2) != 4");
    }

    // scan stability: exceptional set stable under doubling the box
    {
        GlobalConfig cfg;
        cfg.n = 2;
        cfg.mu_e = 1;
        cfg.masses = {1};
        cfg.c2 = 3.0;
        cfg.pv = {{1.0}};
        cfg.places_q = {3};
        const PositivityScan s1 = positivity_scan(cfg, 8);
        const PositivityScan s2 = positivity_scan(cfg, 16);
        ck.expect(s1.exceptional.size() == s2.exceptional.size(),
                  "exceptional set changed under box doubling");
        ck.expect(s1.certified && s2.certified, "axis certificate failed");
        ck.expect(!s1.exceptional.empty(), "expected a nonempty exceptional set");
        // C2 = 0 gives an empty exceptional set
        cfg.c2 = 0.0;
        const PositivityScan s0 = positivity_scan(cfg, 8);
        ck.expect(s0.exceptional.empty(), "C2 = 0 but exceptional set nonempty");
    }

    return {"global", ck.ok,
            ck.ok ? "c1 and lower_bound match hand-computed fixtures; scans stable under doubling (" +
                        std::to_string(ck.cases) + " checks)"
                  : ck.detail.str(),
            0.0};
}

using SuiteFn = SuiteResult (*)(std::uint64_t);

struct Registered {
    const char* name;
    const char* summary;
    SuiteFn fn;
};

const Registered kSuites[] = {
    {"green-orthogonality", "exact cuspidal character orthogonality", green_orthogonality},
    {"green-dimension", "identity value matches the dimension formula", green_dimension},
    {"tracebound-n", "census and |green| at most n for irreducible residue charpoly", tracebound_n},
    {"tracebound-zero", "census and green vanish with two distinct eigenvalues", tracebound_zero},
    {"census-oracle", "brute census equals the formula route", census_oracle},
    {"pairing", "h_theta alternating, full rank, extension independent", pairing_nondegeneracy},
    {"weyl-schur", "schur at identity = weyl dimension; polynomial degree", weyl_schur},
    {"regular-bound", "schur values below n!/|Vandermonde| for regular spectra", regular_bound_scan},
    {"cc-degree", "empirical growth exponent below the Weyl degree", cc_degree},
    {"global", "c1 / lower bound fixtures and scan stability", global_formula},
};

} // namespace

std::vector<SuiteSpec> verify_suites() {
    std::vector<SuiteSpec> out;
    for (const auto& s : kSuites) out.push_back({s.name, s.summary});
    return out;
}

SuiteResult run_suite(const std::string& name, std::uint64_t budget) {
    for (const auto& s : kSuites) {
        if (name != s.name) continue;
        const auto start = std::chrono::steady_clock::now();
        SuiteResult r = s.fn(budget);
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return r;
    }
    throw std::invalid_argument("unknown verify suite: " + name);
}

std::vector<SuiteResult> run_all_suites(std::uint64_t budget) {
    std::vector<SuiteResult> out;
    for (const auto& s : kSuites) out.push_back(run_suite(s.name, budget));
    return out;
}

} // namespace typecount
