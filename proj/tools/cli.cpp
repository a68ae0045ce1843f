#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "typecount/archweyl.hpp"
#include "typecount/globalbound.hpp"
#include "typecount/greenchar.hpp"
#include "typecount/projcensus.hpp"
#include "typecount/simpletypes.hpp"
#include "typecount/verify.hpp"

namespace typecount::cli {

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// Matrix entries are integers encoding t-adic digits in base q:
// e = sum d_j q^j stands for sum elem(d_j) t^j, where elem(d) is the d-th
// element of F_q in the canonical enumeration (for prime q this is just the
// residue d).
Mat parse_matrix(const std::string& text, const TruncRing& R, unsigned n) {
    std::vector<std::uint64_t> entries;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        entries.push_back(std::stoull(item));
    }
    if (entries.size() != static_cast<std::size_t>(n) * n)
        throw CLI::ValidationError("--matrix", "expected " + std::to_string(n * n) + " entries");
    const TowerField& tf = R.tower();
    Mat m = Mat::sized(R, n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            std::uint64_t e = entries[static_cast<std::size_t>(i) * n + j];
            RElem el = R.zero();
            for (unsigned d = 0; d < R.level() && e; ++d) {
                el.c[d] = tf.base_element(e % tf.q());
                e /= tf.q();
            }
            if (e) throw CLI::ValidationError("--matrix", "entry exceeds the ring precision");
            m.at(i, j) = el;
        }
    return m;
}

std::string flags_of(const CensusReport& rep) {
    std::string f;
    auto append = [&](const char* name) {
        if (!f.empty()) f += ";";
        f += name;
    };
    if (rep.hensel_fallback) append("hensel_fallback");
    if (rep.every_point_fixed) append("every_point_fixed");
    if (rep.not_iwahori) append("not_iwahori");
    return f.empty() ? "-" : f;
}

struct Output {
    std::ostream* stream;
    std::unique_ptr<std::ofstream> file;
    char sep = ',';

    std::ostream& os() { return file ? *file : *stream; }
};

Output make_output(const std::string& path, const std::string& format, std::ostream& fallback) {
    Output out;
    out.stream = &fallback;
    out.sep = format == "tsv" ? '\t' : ',';
    if (!path.empty()) {
        out.file = std::make_unique<std::ofstream>(path);
        if (!*out.file) throw CLI::ValidationError("--out", "cannot open " + path);
    }
    return out;
}

std::string poly_string(const TruncRing& R1, const PolyR& f) {
    const TowerField& tf = R1.tower();
    std::string s;
    for (std::size_t i = f.c.size(); i-- > 0;) {
        const FF c = R1.residue(f.c[i]);
        if (c == 0 && f.c.size() > 1) continue;
        if (!s.empty()) s += "+";
        const std::uint64_t pv = tf.poly_index(c);
        if (i == 0) {
            s += std::to_string(pv);
        } else {
            if (pv != 1) s += std::to_string(pv) + "*";
            s += "x";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

int cmd_census(const std::string& model, std::uint64_t q, std::uint64_t n, unsigned k,
               const std::string& matrix, const std::string& route, std::uint64_t budget,
               unsigned threads, const std::string& out_path, const std::string& format,
               std::ostream& out_stream) {
    const TowerField tf(q, n);
    const CensusModel cm = model == "ram" ? CensusModel::Ramified : CensusModel::Unramified;
    const unsigned wl = cm == CensusModel::Ramified
                            ? std::max(k, ram_working_level(tf, k))
                            : unram_working_level(tf, k);
    const TruncRing R(tf, RingKind::Base, wl);
    const Mat g = parse_matrix(matrix, R, static_cast<unsigned>(n));

    Output out = make_output(out_path, format, out_stream);
    const char s = out.sep;
    out.os() << "model" << s << "q" << s << "n" << s << "k" << s << "count" << s << "route" << s
             << "flags\n";
    auto emit = [&](const CensusReport& rep, const char* rname) {
        out.os() << model << s << q << s << n << s << k << s << rep.count << s << rname << s
                 << flags_of(rep) << "\n";
    };
    if (route == "brute" || route == "both") emit(census(R, g, cm, tf, k, budget, threads), "brute");
    if (route == "formula" || route == "both") emit(census_formula(R, g, cm, tf, k, budget), "formula");
    return 0;
}

int cmd_green(std::uint64_t q, std::uint64_t n, std::uint64_t budget, const std::string& out_path,
              const std::string& format, std::ostream& out_stream) {
    const TowerField tf(q, n);
    const auto classes = conj_classes(tf, budget);
    const auto orbits = regular_orbits(tf);
    const TruncRing R1(tf, RingKind::Base, 1);

    Output out = make_output(out_path, format, out_stream);
    const char s = out.sep;
    out.os() << "class" << s << "charpoly" << s << "d" << s << "r" << s << "size";
    for (auto k : orbits) out.os() << s << "chi" << k << s << "abs" << k;
    out.os() << "\n";
    for (std::size_t ci = 0; ci < classes.size(); ++ci) {
        const auto& c = classes[ci];
        out.os() << ci << s << poly_string(R1, charpoly(R1, c.rep)) << s;
        if (c.single_factor)
            out.os() << c.d << s << c.r;
        else
            out.os() << "-" << s << "-";
        out.os() << s << c.class_size;
        for (auto k : orbits) {
            const CycInt v = green_value({k}, c, tf);
            out.os() << s << v.to_string() << s << fmt_double(cyc_abs(v));
        }
        out.os() << "\n";
    }
    return 0;
}

int cmd_pairing(std::uint64_t q, std::uint64_t n, unsigned m, const std::string& out_path,
                const std::string& format, std::ostream& out_stream) {
    const TypeDatum d = make_minimal_unram(q, n, m);
    const PairingMatrix pm = theta_pairing(d);
    const TowerField& tf = *d.tower;

    Output out = make_output(out_path, format, out_stream);
    const char s = out.sep;
    out.os() << "q" << s << "n" << s << "m" << s << "dim" << s << "rank\n";
    out.os() << q << s << n << s << m << s << pm.dim << s << pm.rank << "\n";
    for (unsigned i = 0; i < pm.dim; ++i) {
        for (unsigned j = 0; j < pm.dim; ++j) {
            if (j) out.os() << s;
            out.os() << tf.poly_index(pm.gram[static_cast<std::size_t>(i) * pm.dim + j]);
        }
        out.os() << "\n";
    }
    return 0;
}

int cmd_bound(std::uint64_t q, std::uint64_t n, unsigned m, const std::string& kase,
              const std::string& matrix, std::uint64_t budget, const std::string& out_path,
              const std::string& format, std::ostream& out_stream) {
    const TypeDatum d = kase == "ram" ? make_minimal_ram(q, n, m) : make_minimal_unram(q, n, m);
    const TruncRing R(*d.tower, RingKind::Base, d.working_level);
    const Mat g = parse_matrix(matrix, R, static_cast<unsigned>(n));
    const TraceBound tb = type_trace_bound(R, g, d, budget);

    Output out = make_output(out_path, format, out_stream);
    const char s = out.sep;
    out.os() << "case" << s << "q" << s << "n" << s << "m" << s << "k" << s << "census" << s
             << "per_point" << s << "index" << s << "bound" << s << "lemma\n";
    out.os() << kase << s << q << s << n << s << m << s << d.k << s << tb.census_count << s
             << tb.per_point << s << tb.index_factor << s << tb.bound << s
             << (tb.lemma_applies ? "yes" : "no") << "\n";
    return 0;
}

std::vector<std::complex<double>> parse_spectrum(const std::string& text) {
    std::vector<std::complex<double>> x;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (item.empty()) continue;
        const auto comma = item.find(',');
        if (comma == std::string::npos) {
            x.emplace_back(std::stod(item), 0.0);
        } else {
            x.emplace_back(std::stod(item.substr(0, comma)), std::stod(item.substr(comma + 1)));
        }
    }
    return x;
}

int cmd_weyl(unsigned n, const std::string& weight, bool poly, const std::string& scan_x,
             unsigned box, const std::string& out_path, const std::string& format,
             std::ostream& out_stream) {
    Output out = make_output(out_path, format, out_stream);
    const char s = out.sep;
    if (poly) {
        const WeylPolynomial P = weyl_polynomial(n);
        out.os() << "monomial" << s << "numerator" << s << "denominator\n";
        for (const auto& [expo, coeff] : P.terms) {
            std::string mono;
            for (unsigned i = 0; i < n; ++i) {
                if (expo[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += "a" + std::to_string(i + 1);
                if (expo[i] > 1) mono += "^" + std::to_string(expo[i]);
            }
            if (mono.empty()) mono = "1";
            out.os() << mono << s << coeff << s << P.denominator << "\n";
        }
        return 0;
    }
    if (!scan_x.empty()) {
        const auto x = parse_spectrum(scan_x);
        const DegreeScanReport rep = cc_degree_scan(x, box);
        out.os() << "s" << s << "shell_max\n";
        for (std::size_t i = 0; i < rep.shell_max.size(); ++i)
            out.os() << i << s << fmt_double(rep.shell_max[i]) << "\n";
        out.os() << "# fitted_exponent" << s << fmt_double(rep.fitted_exponent) << "\n";
        out.os() << "# weyl_degree" << s << fmt_double(rep.weyl_degree) << "\n";
        out.os() << "# max_ratio" << s << fmt_double(rep.max_ratio) << "\n";
        return 0;
    }
    if (!weight.empty()) {
        Weight lam;
        std::stringstream ss(weight);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) lam.a.push_back(std::stoll(item));
        out.os() << "weight" << s << "dim\n";
        out.os() << weight << s << weyl_dim(lam) << "\n";
        return 0;
    }
    throw CLI::ValidationError("weyl", "one of --weight, --poly, --scan-x is required");
}

int cmd_global(const std::string& config_path, unsigned box, const std::string& out_path,
               const std::string& format, std::ostream& out_stream) {
    std::ifstream in(config_path);
    if (!in) throw CLI::ValidationError("--config", "cannot open " + config_path);
    std::stringstream buf;
    buf << in.rdbuf();
    const GlobalConfig cfg = config_from_json_text(buf.str());

    Output out = make_output(out_path, format, out_stream);
    const char s = out.sep;
    out.os() << "# c1" << s << c1(cfg).to_string() << "\n";
    const PositivityScan scan = positivity_scan(cfg, box);
    for (const auto& cert : scan.certificates)
        out.os() << "# axis" << s << cert.place << s
                 << (cert.eventually_increasing ? "increasing" : "uncertified") << s << "crossover"
                 << s << cert.crossover << "\n";
    out.os() << "finite_places" << s << "arch_weights" << s << "dim" << s << "bound\n";
    for (const auto& entry : scan.exceptional) {
        std::string fin;
        for (const auto& [qv, dv] : entry.desc.finite) {
            if (!fin.empty()) fin += " ";
            fin += "q" + std::to_string(qv) + ":d" + std::to_string(dv);
        }
        if (fin.empty()) fin = "-";
        std::string arch;
        for (const auto& w : entry.desc.arch) {
            if (!arch.empty()) arch += " ";
            arch += "(";
            for (std::size_t i = 0; i < w.a.size(); ++i) {
                if (i) arch += " ";
                arch += std::to_string(w.a[i]);
            }
            arch += ")";
        }
        if (arch.empty()) arch = "-";
        out.os() << fin << s << arch << s << type_dimension(entry.desc, cfg.n) << s
                 << fmt_double(entry.bound) << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t budget, bool list, std::ostream& out) {
    if (list) {
        for (const auto& sp : verify_suites()) out << sp.name << ": " << sp.summary << "\n";
        return 0;
    }
    std::vector<SuiteResult> results;
    if (suite == "all") {
        results = run_all_suites(budget);
    } else {
        results.push_back(run_suite(suite, budget));
    }
    bool all_ok = true;
    for (const auto& r : results) {
        char timing[32];
        std::snprintf(timing, sizeof(timing), "%.2fs", r.seconds);
        out << (r.passed ? "PASS" : "FAIL") << " " << r.name << " (" << timing << "): " << r.detail
            << "\n";
        all_ok = all_ok && r.passed;
    }
    out << (all_ok ? "verify: all suites passed\n" : "verify: FAILURES present\n");
    return all_ok ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"typecount: exact censuses, cuspidal characters, and multiplicity bounds"};
    app.require_subcommand(1);

    std::uint64_t q = 2, n = 2;
    unsigned k = 1, m = 2, box = 20, threads = 0;
    std::uint64_t budget = default_budget();
    std::string model = "unram", matrix, route = "both", out_path, format, kase = "unram";
    std::string weight, scan_x, config_path, suite = "all";
    bool poly = false, list = false;

    auto* census_cmd = app.add_subcommand("census", "fixed points of g on the coset model X_k");
    census_cmd->add_option("--model", model)->check(CLI::IsMember({"unram", "ram"}));
    census_cmd->add_option("--q", q)->required();
    census_cmd->add_option("--n", n)->required();
    census_cmd->add_option("--k", k)->required();
    census_cmd->add_option("--matrix", matrix)->required();
    census_cmd->add_option("--route", route)->check(CLI::IsMember({"brute", "formula", "both"}));
    census_cmd->add_option("--budget", budget);
    census_cmd->add_option("--threads", threads);
    census_cmd->add_option("--out", out_path);
    census_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "tsv"}));

    auto* green_cmd = app.add_subcommand("green", "cuspidal character table of GL_n(F_q)");
    green_cmd->add_option("--q", q)->required();
    green_cmd->add_option("--n", n)->required();
    green_cmd->add_option("--budget", budget);
    green_cmd->add_option("--out", out_path);
    green_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "tsv"}));

    auto* pairing_cmd = app.add_subcommand("pairing", "Gram matrix and rank of h_theta");
    pairing_cmd->add_option("--q", q)->required();
    pairing_cmd->add_option("--n", n)->required();
    pairing_cmd->add_option("--m", m)->required();
    pairing_cmd->add_option("--out", out_path);
    pairing_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "tsv"}));

    auto* bound_cmd = app.add_subcommand("bound", "trace bound for one g against a type datum");
    bound_cmd->add_option("--q", q)->required();
    bound_cmd->add_option("--n", n)->required();
    bound_cmd->add_option("--m", m)->required();
    bound_cmd->add_option("--case", kase)->check(CLI::IsMember({"unram", "ram"}));
    bound_cmd->add_option("--matrix", matrix)->required();
    bound_cmd->add_option("--budget", budget);
    bound_cmd->add_option("--out", out_path);
    bound_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "tsv"}));

    auto* weyl_cmd = app.add_subcommand("weyl", "Weyl dimensions, polynomial, character scans");
    weyl_cmd->add_option("--n", n)->required();
    weyl_cmd->add_option("--weight", weight);
    weyl_cmd->add_flag("--poly", poly);
    weyl_cmd->add_option("--scan-x", scan_x);
    weyl_cmd->add_option("--box", box);
    weyl_cmd->add_option("--out", out_path);
    weyl_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "tsv"}));

    auto* global_cmd = app.add_subcommand("global", "multiplicity lower bounds from a JSON config");
    global_cmd->add_option("--config", config_path)->required();
    global_cmd->add_option("--box", box);
    global_cmd->add_option("--out", out_path);
    global_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "tsv"}));

    auto* verify_cmd = app.add_subcommand("verify", "run the verification suites");
    verify_cmd->add_option("--suite", suite);
    verify_cmd->add_option("--budget", budget);
    verify_cmd->add_flag("--list", list);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (census_cmd->parsed())
            return cmd_census(model, q, n, k, matrix, route, budget, threads, out_path,
                              format.empty() ? "csv" : format, out);
        if (green_cmd->parsed())
            return cmd_green(q, n, budget, out_path, format.empty() ? "tsv" : format, out);
        if (pairing_cmd->parsed())
            return cmd_pairing(q, n, m, out_path, format.empty() ? "csv" : format, out);
        if (bound_cmd->parsed())
            return cmd_bound(q, n, m, kase, matrix, budget, out_path, format.empty() ? "csv" : format,
                             out);
        if (weyl_cmd->parsed())
            return cmd_weyl(static_cast<unsigned>(n), weight, poly, scan_x, box, out_path,
                            format.empty() ? "csv" : format, out);
        if (global_cmd->parsed())
            return cmd_global(config_path, box, out_path, format.empty() ? "csv" : format, out);
        if (verify_cmd->parsed()) return cmd_verify(suite, budget, list, out);
    } catch (const BudgetExceeded& e) {
        err << "budget: " << e.what() << "\n";
        return 3;
    } catch (const CLI::ValidationError& e) {
        err << "usage: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace typecount::cli
