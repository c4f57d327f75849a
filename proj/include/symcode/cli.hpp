#pragma once

// Command-line front end: argument parsing, validation and output formatting.

#include <symcode/code.hpp>
#include <symcode/field.hpp>
#include <symcode/parallel.hpp>
#include <symcode/sym_poly.hpp>
#include <symcode/verify.hpp>
#include <symcode/weights.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace symcode::cli {

/// Raised for invalid user input; the message names the offending flag.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string verb;
    std::optional<unsigned> q, p;
    unsigned e = 1;
    std::string modulus;  // comma-separated c_0..c_e
    std::optional<unsigned> m;
    std::string set = "full";
    std::string format = "text";
    std::optional<unsigned> r;
    unsigned s = 2;
    std::string coeffs, subset;
    unsigned jobs = default_jobs();
    bool force = false;
    bool witnesses = false;
    bool list = false;
    std::string method = "sweep";
    std::string suite = "all";
    bool all_subsets = false;
    std::int64_t bound_offset = 0;
};

inline constexpr std::uint64_t sweep_limit = 4'000'000'000ULL;
inline constexpr unsigned verify_q_cap = 9, verify_m_cap = 4;

namespace details {

inline std::vector<unsigned> parse_list(const std::string& flag, const std::string& text) {
    std::vector<unsigned> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size() || v > std::numeric_limits<unsigned>::max())
            throw UsageError(flag + ": expected comma-separated non-negative integers, got '" + text + "'");
        out.push_back(static_cast<unsigned>(v));
    }
    if (out.empty()) throw UsageError(flag + ": empty list");
    return out;
}

inline Field make_field(const RunConfig& cfg) {
    if (cfg.q && cfg.p) throw UsageError("--q and --p are mutually exclusive");
    if (!cfg.q && !cfg.p) throw UsageError("--q or --p is required");
    try {
        if (cfg.q) {
            if (!cfg.modulus.empty()) throw UsageError("--modulus needs --p and --e");
            return Field::of_order(*cfg.q);
        }
        std::optional<std::vector<unsigned>> mod;
        if (!cfg.modulus.empty()) mod = parse_list("--modulus", cfg.modulus);
        return Field(*cfg.p, cfg.e, mod);
    } catch (const std::invalid_argument& ex) {
        throw UsageError(std::string(cfg.q ? "--q: " : "--p/--e/--modulus: ") + ex.what());
    }
}

inline unsigned require_m(const RunConfig& cfg) {
    if (!cfg.m) throw UsageError("--m is required");
    if (*cfg.m < 1) throw UsageError("--m: must be at least 1");
    return *cfg.m;
}

inline SetKind set_kind(const RunConfig& cfg) {
    try {
        return parse_set_kind(cfg.set);
    } catch (const std::invalid_argument&) {
        throw UsageError("--set: expected full or orbit, got '" + cfg.set + "'");
    }
}

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

inline std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
    return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

inline std::uint64_t code_length(unsigned q, unsigned m, SetKind kind) {
    try {
        return kind == SetKind::full ? perm_count(q, m) : binomial(q, m);
    } catch (const std::overflow_error&) {
        return std::numeric_limits<std::uint64_t>::max();
    }
}

// Work estimates computed from (q, m) alone, before anything is allocated.
inline std::uint64_t message_cost(unsigned q, unsigned m, SetKind kind) {
    std::uint64_t cost = code_length(q, m, kind);
    for (unsigned i = 0; i <= m; ++i) cost = saturating_mul(cost, q);
    return cost;
}

inline std::uint64_t subspace_cost(unsigned q, unsigned m, SetKind kind) {
    const unsigned k = m + 1;
    std::uint64_t total = message_cost(q, m, kind);
    const std::uint64_t words = code_length(q, m, kind) / 64 + 1;
    for (unsigned r = 1; r <= k; ++r) {
        std::uint64_t g = std::numeric_limits<std::uint64_t>::max();
        try {
            g = gaussian_binomial(k, r, q);
        } catch (const std::overflow_error&) {
        }
        total = saturating_add(total, saturating_mul(saturating_mul(g, r), words));
    }
    return total;
}

inline void require_feasible(const RunConfig& cfg, std::uint64_t cost, const std::string& what) {
    if (cost <= sweep_limit || cfg.force) return;
    const std::string size = cost == std::numeric_limits<std::uint64_t>::max() ? "more than 1.8e19" : "about " + std::to_string(cost);
    throw UsageError(what + " needs " + size + " operations (limit " + std::to_string(sweep_limit) + "); pass --force to run it anyway");
}

inline json field_json(const Field& F) {
    return json{{"p", F.characteristic()}, {"e", F.degree()}, {"modulus", F.modulus()}};
}

inline void field_header(const Field& F, const std::string& format, std::ostream& out) {
    if (F.degree() > 1 && format != "json") out << "# field " << F.describe() << '\n';
}

inline void spectrum_lines(const WeightSpectrum& s, const std::string& format, std::ostream& out) {
    if (format == "csv") out << "weight,count\n";
    for (auto [w, c] : s.nonzero()) {
        if (format == "csv")
            out << w << ',' << c << '\n';
        else
            out << "w=" << w << " count=" << c << '\n';
    }
}

inline json spectrum_json(const WeightSpectrum& s) {
    json j = json::object();
    for (auto [w, c] : s.nonzero()) j[std::to_string(w)] = c;
    return j;
}

inline std::string row_text(std::span<const Index> row, char sep) {
    std::string s;
    for (std::size_t j = 0; j < row.size(); ++j) {
        if (j) s += sep;
        s += std::to_string(row[j]);
    }
    return s;
}

inline json code_json(const Field& F, unsigned m, SetKind kind) {
    return json{{"q", F.order()}, {"m", m}, {"kind", to_string(kind)}, {"field", field_json(F)}};
}

inline LinearCode build(const RunConfig& cfg, const Field& F, unsigned m, SetKind kind, bool sweep_subspaces) {
    const std::uint64_t n = code_length(F.order(), m, kind);
    if (n == 0) throw UsageError("--m: no distinguished points for m = " + std::to_string(m) + " > q = " + std::to_string(F.order()));
    require_feasible(cfg, sweep_subspaces ? subspace_cost(F.order(), m, kind) : message_cost(F.order(), m, kind),
                     "this sweep of the q=" + std::to_string(F.order()) + " m=" + std::to_string(m) + " code");
    return make_code(F, m, kind);
}

inline int cmd_params(const RunConfig& cfg, std::ostream& out) {
    const Field F = make_field(cfg);
    const unsigned m = require_m(cfg);
    const SetKind kind = set_kind(cfg);
    const auto code = build(cfg, F, m, kind, false);
    const auto p = code_params(code, cfg.jobs);
    if (cfg.format == "json") {
        json j = code_json(F, m, kind);
        j["n"] = p.n;
        j["k"] = p.k;
        j["d"] = p.d;
        out << j.dump(2) << '\n';
        return 0;
    }
    field_header(F, cfg.format, out);
    if (cfg.format == "csv")
        out << "n,k,d\n" << p.n << ',' << p.k << ',' << p.d << '\n';
    else
        out << "n=" << p.n << " k=" << p.k << " d=" << p.d << '\n';
    return 0;
}

inline int cmd_genmat(const RunConfig& cfg, std::ostream& out) {
    const Field F = make_field(cfg);
    const unsigned m = require_m(cfg);
    const SetKind kind = set_kind(cfg);
    const std::uint64_t n = code_length(F.order(), m, kind);
    if (n == 0) throw UsageError("--m: no distinguished points for m = " + std::to_string(m) + " > q = " + std::to_string(F.order()));
    require_feasible(cfg, saturating_mul(n, m + 1) * 64, "the generator matrix");
    const auto code = make_code(F, m, kind);
    const Matrix& g = code.generator();
    if (cfg.format == "json") {
        json j = code_json(F, m, kind);
        json rows = json::array();
        for (std::size_t i = 0; i < g.rows; ++i) rows.push_back(std::vector<Index>(g.row(i).begin(), g.row(i).end()));
        j["rows"] = std::move(rows);
        out << j.dump() << '\n';
        return 0;
    }
    field_header(F, cfg.format, out);
    if (cfg.format == "text") out << "# q=" << F.order() << " m=" << m << " set=" << to_string(kind) << " order=lex\n";
    for (std::size_t i = 0; i < g.rows; ++i) out << row_text(g.row(i), cfg.format == "csv" ? ',' : ' ') << '\n';
    return 0;
}

inline int cmd_zeroes(const RunConfig& cfg, std::ostream& out) {
    const Field F = make_field(cfg);
    if (cfg.coeffs.empty()) throw UsageError("--coeffs is required");
    const auto raw = parse_list("--coeffs", cfg.coeffs);
    if (raw.size() < 2) throw UsageError("--coeffs: need a_0,...,a_m with m >= 1");
    const auto m = static_cast<unsigned>(raw.size() - 1);
    if (cfg.m && *cfg.m != m)
        throw UsageError("--coeffs: " + std::to_string(raw.size()) + " coefficients given but --m " + std::to_string(*cfg.m) + " needs " +
                         std::to_string(*cfg.m + 1));
    std::vector<Index> coeffs(raw.begin(), raw.end());
    for (Index c : coeffs)
        if (c >= F.order()) throw UsageError("--coeffs: index " + std::to_string(c) + " is not an element of F_" + std::to_string(F.order()));
    std::vector<Index> subset;
    try {
        if (cfg.subset.empty()) {
            subset = all_elements(F);
        } else {
            const auto s = parse_list("--subset", cfg.subset);
            subset = normalize_subset(F, std::vector<Index>(s.begin(), s.end()));
        }
    } catch (const std::invalid_argument& ex) {
        throw UsageError(std::string("--subset: ") + ex.what());
    } catch (const std::out_of_range& ex) {
        throw UsageError(std::string("--subset: ") + ex.what());
    }
    if (subset.size() < m) throw UsageError("--subset: needs at least m = " + std::to_string(m) + " elements");
    require_feasible(cfg, saturating_mul(perm_count(static_cast<std::int64_t>(subset.size()), m), m + 1), "the zero count");

    const SymPoly f(F, coeffs);
    const auto cls = classify(f);
    const auto zeros = distinguished_zeroes(f, subset);
    const auto b4 = zero_count_bound(subset.size(), m, true), b5 = zero_count_bound(subset.size(), m, false);
    if (cfg.format == "json") {
        json j = {{"field", field_json(F)}, {"poly", {{"m", m}, {"coeffs", coeffs}}}, {"subset", subset}, {"count", zeros.size()},
                  {"bound4", b4}, {"bound5", b5}, {"type", to_string(cls.tag)}};
        if (cls.alpha) j["alpha"] = *cls.alpha;
        if (cls.root) j["root"] = *cls.root;
        if (cfg.list) j["zeroes"] = zeros;
        out << j.dump(2) << '\n';
        return 0;
    }
    field_header(F, cfg.format, out);
    if (cfg.format == "csv") {
        out << "count,bound4,bound5,type\n" << zeros.size() << ',' << b4 << ',' << b5 << ',' << to_string(cls.tag) << '\n';
    } else {
        out << "count=" << zeros.size() << " bound4=" << b4 << " bound5=" << b5 << " type=" << to_string(cls.tag);
        if (cls.alpha) out << " alpha=" << *cls.alpha << " root=" << *cls.root;
        out << '\n';
    }
    if (cfg.list)
        for (const auto& z : zeros) out << row_text(z, cfg.format == "csv" ? ',' : ' ') << '\n';
    return 0;
}

inline int cmd_weight_dist(const RunConfig& cfg, std::ostream& out) {
    const Field F = make_field(cfg);
    const unsigned m = require_m(cfg);
    const SetKind kind = set_kind(cfg);
    const auto code = build(cfg, F, m, kind, false);
    const auto a = weight_distribution(code, cfg.jobs);
    if (cfg.format == "json") {
        json j = code_json(F, m, kind);
        j["n"] = code.length();
        j["weights"] = spectrum_json(a);
        out << j.dump(2) << '\n';
        return 0;
    }
    field_header(F, cfg.format, out);
    spectrum_lines(a, cfg.format, out);
    return 0;
}

inline int cmd_ghw(const RunConfig& cfg, std::ostream& out) {
    const Field F = make_field(cfg);
    const unsigned m = require_m(cfg);
    const SetKind kind = set_kind(cfg);
    if (cfg.method != "sweep" && cfg.method != "geometric") throw UsageError("--method: expected sweep or geometric");
    if (cfg.witnesses && cfg.method != "sweep") throw UsageError("--witnesses: only available with --method sweep");
    const auto code = build(cfg, F, m, kind, true);
    GhwResult g;
    if (cfg.method == "sweep")
        g = generalized_hamming_weights(code, cfg.jobs);
    else
        g.d = ghw_geometric(code, cfg.jobs);
    auto basis_text = [&](const Matrix& b, char sep, const char* row_sep) {
        std::string s;
        for (std::size_t i = 0; i < b.rows; ++i) s += (i ? row_sep : "") + row_text(b.row(i), sep);
        return s;
    };
    if (cfg.format == "json") {
        json j = code_json(F, m, kind);
        j["d"] = g.d;
        if (cfg.witnesses) {
            json w = json::array();
            for (const auto& b : g.witnesses) {
                json rows = json::array();
                for (std::size_t i = 0; i < b.rows; ++i) rows.push_back(std::vector<Index>(b.row(i).begin(), b.row(i).end()));
                w.push_back(std::move(rows));
            }
            j["witnesses"] = std::move(w);
        }
        out << j.dump(2) << '\n';
        return 0;
    }
    field_header(F, cfg.format, out);
    if (cfg.format == "csv") {
        out << (cfg.witnesses ? "r,d,basis\n" : "r,d\n");
        for (std::size_t r = 0; r < g.d.size(); ++r) {
            out << r + 1 << ',' << g.d[r];
            if (cfg.witnesses) out << ',' << basis_text(g.witnesses[r], ' ', ";");
            out << '\n';
        }
        return 0;
    }
    for (std::size_t r = 0; r < g.d.size(); ++r) out << (r ? " " : "") << g.d[r];
    out << '\n';
    if (cfg.witnesses)
        for (std::size_t r = 0; r < g.d.size(); ++r)
            out << "r=" << r + 1 << " d=" << g.d[r] << " basis=" << basis_text(g.witnesses[r], ',', ";") << '\n';
    return 0;
}

inline int cmd_spectra(const RunConfig& cfg, std::ostream& out) {
    const Field F = make_field(cfg);
    const unsigned m = require_m(cfg);
    const SetKind kind = set_kind(cfg);
    if (cfg.r && *cfg.r > m + 1) throw UsageError("--r: must be at most k = m+1 = " + std::to_string(m + 1));
    const auto code = build(cfg, F, m, kind, true);
    std::vector<HigherSpectrum> spectra;
    if (cfg.r)
        spectra.push_back(higher_weight_spectrum(code, *cfg.r, cfg.jobs));
    else
        spectra = all_higher_spectra(code, cfg.jobs);
    if (cfg.format == "json") {
        json j = json::object();
        for (const auto& s : spectra) j[std::to_string(s.r)] = spectrum_json(s.spectrum);
        out << j.dump(2) << '\n';
        return 0;
    }
    field_header(F, cfg.format, out);
    if (cfg.format == "csv") out << "r,weight,count\n";
    for (const auto& s : spectra)
        for (auto [w, c] : s.spectrum.nonzero()) {
            if (cfg.format == "csv")
                out << s.r << ',' << w << ',' << c << '\n';
            else
                out << "r=" << s.r << " w=" << w << " count=" << c << '\n';
        }
    return 0;
}

inline int cmd_extend(const RunConfig& cfg, std::ostream& out) {
    const Field F = make_field(cfg);
    const unsigned m = require_m(cfg);
    const SetKind kind = set_kind(cfg);
    if (cfg.s < 1) throw UsageError("--s: must be at least 1");
    std::uint64_t Q = 0;
    try {
        Q = ipow(F.order(), cfg.s);
    } catch (const std::overflow_error&) {
        throw UsageError("--s: q^s overflows");
    }
    const auto code = build(cfg, F, m, kind, true);
    const auto ext = extension_spectrum(all_higher_spectra(code, cfg.jobs), F.order(), Q);
    if (cfg.format == "json") {
        json j = code_json(F, m, kind);
        j["s"] = cfg.s;
        j["Q"] = Q;
        j["weights"] = spectrum_json(ext);
        out << j.dump(2) << '\n';
        return 0;
    }
    field_header(F, cfg.format, out);
    if (cfg.format == "text") out << "# Q=" << Q << " s=" << cfg.s << '\n';
    spectrum_lines(ext, cfg.format, out);
    return 0;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    static const std::vector<std::string> suites = {"zeroes", "tables", "codes", "spectra", "example", "all"};
    if (std::find(suites.begin(), suites.end(), cfg.suite) == suites.end())
        throw UsageError("--suite: expected zeroes, tables, codes, spectra, example or all");
    if (cfg.p) throw UsageError("--p: verify takes the field order via --q");
    const bool needs_q = cfg.suite != "example";
    if (needs_q && !cfg.q) throw UsageError("--q is required for --suite " + cfg.suite);
    const unsigned m = cfg.m.value_or(2);
    if (m < 1) throw UsageError("--m: must be at least 1");
    unsigned q = 0;
    if (cfg.q) {
        q = *cfg.q;
        try {
            Field::of_order(q);
        } catch (const std::invalid_argument& ex) {
            throw UsageError(std::string("--q: ") + ex.what());
        }
        if (!cfg.force && q > verify_q_cap) throw UsageError("--q: verification is capped at q <= 9; pass --force to exceed it");
        if (!cfg.force && m > verify_m_cap) throw UsageError("--m: verification is capped at m <= 4; pass --force to exceed it");
    }
    auto wants = [&](const char* s) { return cfg.suite == s || cfg.suite == "all"; };
    auto explicit_suite = [&](const char* s) { return cfg.suite == s; };
    VerificationReport report;
    if (wants("zeroes")) {
        if (m > q) throw UsageError("--m: zero-bound verification needs m <= q");
        ZeroBoundOptions opt;
        opt.all_subsets = cfg.all_subsets;
        opt.bound_offset = cfg.bound_offset;
        report.append(verify_zero_bounds(q, m, opt, cfg.jobs));
    }
    if (wants("tables")) {
        if (q >= 3)
            report.append(verify_m2_tables(q));
        else if (explicit_suite("tables"))
            throw UsageError("--q: the m=2 tables need q >= 3");
    }
    if (wants("codes")) {
        if (m < q)
            report.append(verify_code_structure(q, m, cfg.jobs));
        else if (explicit_suite("codes"))
            throw UsageError("--m: code-structure verification needs m < q");
    }
    if (wants("spectra")) {
        if (q >= 3)
            report.append(verify_m2_spectra(q, cfg.jobs));
        else if (explicit_suite("spectra"))
            throw UsageError("--q: the m=2 spectra need q >= 3");
    }
    if (wants("example")) report.append(verify_example_q5_m3(cfg.jobs));
    if (cfg.format == "json") {
        json j = {{"suite", cfg.suite}};
        j.update(report.to_json());
        out << j.dump(2) << '\n';
    } else {
        out << report.to_text();
    }
    return report.passed() ? 0 : 1;
}

}  // namespace details

/// Runs one command; args excludes the program name. Returns the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Codes from elementary symmetric polynomials on distinguished points", "symcode"};
    app.require_subcommand(1);

    auto field_opts = [&](CLI::App* sub) {
        sub->add_option("--q", cfg.q, "field order (a prime power)");
        sub->add_option("--p", cfg.p, "field characteristic");
        sub->add_option("--e", cfg.e, "extension degree");
        sub->add_option("--modulus", cfg.modulus, "monic irreducible modulus c0,...,ce");
    };
    auto code_opts = [&](CLI::App* sub) {
        field_opts(sub);
        sub->add_option("--m", cfg.m, "number of variables");
        sub->add_option("--set", cfg.set, "evaluation set: full or orbit");
        sub->add_option("--format", cfg.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--jobs", cfg.jobs, "worker threads (default SYMCODE_JOBS or 1)")->check(CLI::PositiveNumber);
        sub->add_flag("--force", cfg.force, "run sweeps beyond the size limit");
    };
    struct Verb {
        const char* name;
        const char* help;
    };
    const Verb verbs[] = {
        {"params", "length, dimension and minimum distance"},
        {"genmat", "generator matrix"},
        {"zeroes", "distinguished zeroes of one polynomial"},
        {"weight-dist", "weight distribution"},
        {"ghw", "generalized Hamming weights"},
        {"spectra", "higher weight spectra"},
        {"extend", "weight distribution of the extension to F_{q^s}"},
        {"verify", "check closed forms against brute force"},
    };
    for (const auto& v : verbs) {
        CLI::App* sub = app.add_subcommand(v.name, v.help);
        code_opts(sub);
        const std::string name = v.name;
        sub->callback([&cfg, name] { cfg.verb = name; });
        if (name == "zeroes") {
            sub->add_option("--coeffs", cfg.coeffs, "coefficients a_0,...,a_m as field indices");
            sub->add_option("--subset", cfg.subset, "grid S as comma-separated field indices (default all of F_q)");
            sub->add_flag("--list", cfg.list, "print the zeroes");
        } else if (name == "ghw") {
            sub->add_flag("--witnesses", cfg.witnesses, "print a subcode basis attaining each d_r");
            sub->add_option("--method", cfg.method, "sweep or geometric");
        } else if (name == "spectra") {
            sub->add_option("--r", cfg.r, "subcode dimension (default: all)");
        } else if (name == "extend") {
            sub->add_option("--s", cfg.s, "extension degree s, Q = q^s");
        } else if (name == "verify") {
            sub->add_option("--suite", cfg.suite, "zeroes, tables, codes, spectra, example or all");
            sub->add_flag("--json", [&cfg](std::int64_t) { cfg.format = "json"; }, "same as --format json");
            sub->add_flag("--all-subsets", cfg.all_subsets, "zero bounds over every S with |S| >= m");
            sub->add_option("--bound-offset", cfg.bound_offset, "shift both zero-count bounds (negative control)");
        }
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }
    try {
        if (cfg.verb == "params") return details::cmd_params(cfg, out);
        if (cfg.verb == "genmat") return details::cmd_genmat(cfg, out);
        if (cfg.verb == "zeroes") return details::cmd_zeroes(cfg, out);
        if (cfg.verb == "weight-dist") return details::cmd_weight_dist(cfg, out);
        if (cfg.verb == "ghw") return details::cmd_ghw(cfg, out);
        if (cfg.verb == "spectra") return details::cmd_spectra(cfg, out);
        if (cfg.verb == "extend") return details::cmd_extend(cfg, out);
        if (cfg.verb == "verify") return details::cmd_verify(cfg, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    err << "error: no command given\n";
    return 2;
}

}  // namespace symcode::cli
