#pragma once

// Reconciles closed-form claims about the codes against brute-force computation.

#include <symcode/code.hpp>
#include <symcode/combinatorics.hpp>
#include <symcode/parallel.hpp>
#include <symcode/sym_poly.hpp>
#include <symcode/weights.hpp>

#include <nlohmann/json.hpp>

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace symcode {

using json = nlohmann::ordered_json;

struct Check {
    std::string id;
    std::string anchor;  // short description of the claim
    json params;
    json predicted;
    json computed;
    bool passed = false;
    std::optional<json> counterexample;  // present iff !passed
};

struct VerificationReport {
    std::vector<Check> checks;

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
    }
    std::size_t failures() const {
        return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));
    }
    void append(VerificationReport other) {
        for (auto& c : other.checks) checks.push_back(std::move(c));
    }
    const Check* find(const std::string& id) const {
        for (const auto& c : checks)
            if (c.id == id) return &c;
        return nullptr;
    }

    json to_json() const {
        json out = json::object();
        out["passed"] = passed();
        out["failures"] = failures();
        json list = json::array();
        for (const auto& c : checks) {
            json j = {{"id", c.id}, {"anchor", c.anchor}, {"params", c.params}, {"predicted", c.predicted},
                      {"computed", c.computed}, {"status", c.passed ? "pass" : "fail"}};
            if (c.counterexample) j["counterexample"] = *c.counterexample;
            list.push_back(std::move(j));
        }
        out["checks"] = std::move(list);
        return out;
    }

    std::string to_text() const {
        std::ostringstream os;
        for (const auto& c : checks) {
            os << (c.passed ? "PASS " : "FAIL ") << c.id;
            for (const auto& [k, v] : c.params.items()) os << ' ' << k << '=' << (v.is_string() ? v.get<std::string>() : v.dump());
            os << " predicted=" << c.predicted.dump() << " computed=" << c.computed.dump() << '\n';
            if (c.counterexample) os << "  counterexample: " << c.counterexample->dump() << '\n';
        }
        os << "checks=" << checks.size() << " failed=" << failures() << '\n';
        return os.str();
    }
};

namespace details {

inline Check make_check(std::string id, std::string anchor, json params, json predicted, json computed, std::optional<json> witness) {
    Check c{std::move(id), std::move(anchor), std::move(params), std::move(predicted), std::move(computed), !witness.has_value(), std::move(witness)};
    return c;
}

// Equality check of two histograms; the witness is the first key where they differ.
inline Check compare_maps(std::string id, std::string anchor, json params, const std::map<std::uint64_t, std::uint64_t>& predicted,
                          const std::map<std::uint64_t, std::uint64_t>& computed, const char* key_name) {
    auto to_json = [](const std::map<std::uint64_t, std::uint64_t>& m) {
        json j = json::object();
        for (auto [k, v] : m) j[std::to_string(k)] = v;
        return j;
    };
    std::optional<json> witness;
    std::set<std::uint64_t> keys;
    for (auto [k, v] : predicted) keys.insert(k);
    for (auto [k, v] : computed) keys.insert(k);
    for (auto k : keys) {
        const auto p = predicted.count(k) ? predicted.at(k) : 0;
        const auto c = computed.count(k) ? computed.at(k) : 0;
        if (p != c) {
            witness = json{{key_name, k}, {"predicted", p}, {"computed", c}};
            break;
        }
    }
    return make_check(std::move(id), std::move(anchor), std::move(params), to_json(predicted), to_json(computed), std::move(witness));
}

inline std::map<std::uint64_t, std::uint64_t> as_map(const WeightSpectrum& s) {
    std::map<std::uint64_t, std::uint64_t> out;
    for (auto [w, c] : s.nonzero()) out[w] = c;
    return out;
}

inline json indices(std::span<const Index> v) { return json(std::vector<Index>(v.begin(), v.end())); }

inline json subset_json(std::uint64_t mask) {
    json j = json::array();
    for (unsigned x = 0; x < 64; ++x)
        if (mask >> x & 1) j.push_back(x);
    return j;
}

// Running state of one "holds for every case" claim.
struct Tally {
    std::uint64_t cases = 0;
    std::uint64_t violations = 0;
    std::optional<json> witness;

    void record(bool ok, const std::function<json()>& describe) {
        ++cases;
        if (ok) return;
        ++violations;
        if (!witness) witness = describe();
    }
    void merge(Tally other) {
        cases += other.cases;
        violations += other.violations;
        if (!witness) witness = std::move(other.witness);
    }
};

inline Check tally_check(std::string id, std::string anchor, json params, Tally t) {
    params["cases"] = t.cases;
    return make_check(std::move(id), std::move(anchor), std::move(params), json{{"violations", 0}}, json{{"violations", t.violations}},
                      std::move(t.witness));
}

}  // namespace details

struct ZeroBoundOptions {
    bool all_subsets = true;       // every S with |S| >= m; otherwise S = F_q only
    std::int64_t bound_offset = 0;  // added to both bounds; nonzero values serve as a negative control
    unsigned min_subset_size = 0;   // with all_subsets, skip S smaller than this (0: no restriction beyond m)
};

/**
 * Zero-count bounds over every nonzero f of arity m and every admissible S: the general bound,
 * the claim that it is attained exactly by c prod (x_i - b) with b in S, the sharper bound for
 * all other f, and divisibility of the count by m!.
 */
inline VerificationReport verify_zero_bounds(unsigned q, unsigned m, ZeroBoundOptions opt = {}, unsigned jobs = 1) {
    const Field F = Field::of_order(q);
    if (m < 1 || m > q) throw std::invalid_argument("zero-bound verification needs 1 <= m <= q");
    if (opt.all_subsets && q > 20) throw std::invalid_argument("subset sweep needs q <= 20");
    // Distinguished tuples of F_q with their sigma vectors and coordinate masks.
    const EvaluationSet pts = enumerate_distinguished(F, m);
    std::vector<Index> sigmas;
    std::vector<std::uint64_t> masks;
    for (std::size_t j = 0; j < pts.size(); ++j) {
        const auto s = elementary_symmetric_all(F, pts.point(j));
        sigmas.insert(sigmas.end(), s.begin(), s.end());
        std::uint64_t mask = 0;
        for (Index x : pts.point(j)) mask |= std::uint64_t{1} << (x % 64);
        masks.push_back(mask);
    }
    std::vector<std::uint64_t> subsets;
    if (opt.all_subsets) {
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << q); ++s)
            if (static_cast<unsigned>(std::popcount(s)) >= std::max(m, opt.min_subset_size)) subsets.push_back(s);
    } else {
        subsets.push_back(q >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << q) - 1);
    }
    const std::size_t k = m + 1;
    const std::uint64_t total = ipow(q, m + 1);
    const std::uint64_t chunks = std::min<std::uint64_t>(total, 256);
    const std::uint64_t mfact = factorial(m);

    struct Part {
        details::Tally bound4, equality, bound5, divisible;
    };
    auto run = [&](std::size_t chunk) {
        Part part;
        std::vector<Index> a(k);
        std::vector<std::uint64_t> zero_masks;
        const std::uint64_t lo = total * chunk / chunks, hi = total * (chunk + 1) / chunks;
        for (std::uint64_t ord = lo; ord < hi; ++ord) {
            std::uint64_t x = ord;
            for (std::size_t i = k; i-- > 0;) {
                a[i] = static_cast<Index>(x % q);
                x /= q;
            }
            const SymPoly f(F, a);
            if (f.is_zero()) continue;
            const auto cls = classify(f);
            zero_masks.clear();
            for (std::size_t t = 0; t < masks.size(); ++t)
                if (dot(F, {sigmas.data() + t * k, k}, a) == 0) zero_masks.push_back(masks[t]);
            for (std::uint64_t S : subsets) {
                std::uint64_t count = 0;
                if (opt.all_subsets) {
                    for (auto zm : zero_masks) count += (zm & ~S) == 0;
                } else {
                    count = zero_masks.size();
                }
                const auto size = opt.all_subsets ? static_cast<std::uint64_t>(std::popcount(S)) : q;
                const bool special = cls.tag == Classification::Tag::type_one && (opt.all_subsets ? (S >> *cls.root & 1) : true);
                const auto b4 = static_cast<std::int64_t>(zero_count_bound(size, m, true)) + opt.bound_offset;
                const auto b5 = static_cast<std::int64_t>(zero_count_bound(size, m, false)) + opt.bound_offset;
                const auto c = static_cast<std::int64_t>(count);
                auto describe = [&](std::int64_t bound) {
                    return [&, bound]() {
                        return json{{"coeffs", details::indices(a)},
                                    {"subset", opt.all_subsets ? details::subset_json(S) : json("all")},
                                    {"count", count},
                                    {"bound", bound},
                                    {"type", to_string(cls.tag)}};
                    };
                };
                part.bound4.record(c <= b4, describe(b4));
                part.equality.record((c == b4) == special, describe(b4));
                if (!special) part.bound5.record(c <= b5, describe(b5));
                part.divisible.record(count % mfact == 0, describe(static_cast<std::int64_t>(mfact)));
            }
        }
        return part;
    };
    const Part all = parallel_reduce(
        static_cast<std::size_t>(chunks), jobs, Part{}, run, [](Part& acc, Part part) {
            acc.bound4.merge(std::move(part.bound4));
            acc.equality.merge(std::move(part.equality));
            acc.bound5.merge(std::move(part.bound5));
            acc.divisible.merge(std::move(part.divisible));
        });
    json params = {{"q", q}, {"m", m}, {"subsets", opt.all_subsets ? "all" : "field"}, {"offset", opt.bound_offset}};
    if (opt.all_subsets && opt.min_subset_size > m) params["min_size"] = opt.min_subset_size;
    VerificationReport r;
    r.checks.push_back(details::tally_check("zeroes.bound4", "distinguished zeroes <= m P(|S|-1,m-1)", params, all.bound4));
    r.checks.push_back(details::tally_check("zeroes.equality", "general bound attained iff f = c prod(x_i - b), b in S", params, all.equality));
    r.checks.push_back(details::tally_check("zeroes.bound5", "sharper bound for all other f", params, all.bound5));
    r.checks.push_back(details::tally_check("zeroes.divisibility", "zero count divisible by m!", params, all.divisible));
    return r;
}

/// Histogram of brute-force zero counts over all q^3 polynomials of arity 2 against the tables.
inline VerificationReport verify_m2_tables(unsigned q) {
    if (q < 3) throw std::invalid_argument("m=2 tables need q >= 3");
    const Field F = Field::of_order(q);
    std::map<std::uint64_t, std::uint64_t> hist;
    details::Tally agree;
    for (Index a0 = 0; a0 < q; ++a0)
        for (Index a1 = 0; a1 < q; ++a1)
            for (Index a2 = 0; a2 < q; ++a2) {
                const SymPoly f(F, {a0, a1, a2});
                const auto brute = count_distinguished_zeroes(f);
                ++hist[brute];
                const auto formula = closed_form_count_m2(f);
                agree.record(brute == formula, [&] {
                    return json{{"coeffs", {a0, a1, a2}}, {"count", brute}, {"formula", formula}};
                });
            }
    json params = {{"q", q}, {"table", q % 2 ? "odd" : "even"}};
    if (q == 3) params["merged"] = true;
    VerificationReport r;
    r.checks.push_back(details::compare_maps("tables.histogram", "number of polynomials per distinguished-zero count", params,
                                             m2_zero_count_table(q), hist, "zeroes"));
    r.checks.push_back(details::tally_check("tables.closed_form", "zero count by discriminant case analysis", params, agree));
    return r;
}

/// Length, dimension, distance, minimum-weight words and weight hierarchy of both codes.
inline VerificationReport verify_code_structure(unsigned q, unsigned m, unsigned jobs = 1) {
    if (m < 1 || m >= q) throw std::invalid_argument("code-structure verification needs 1 <= m < q");
    const Field F = Field::of_order(q);
    VerificationReport r;
    std::vector<std::size_t> ghw[2];
    for (auto kind : {SetKind::full, SetKind::orbit}) {
        const auto code = make_code(F, m, kind);
        const json params = {{"q", q}, {"m", m}, {"set", to_string(kind)}};
        const std::string tag = "codes." + to_string(kind) + ".";

        const auto want = predicted_params(q, m, kind);
        const auto got = code_params(code, jobs);
        r.checks.push_back(details::make_check(tag + "params", "length, dimension and minimum distance", params,
                                               {{"n", want.n}, {"k", want.k}, {"d", want.d}}, {{"n", got.n}, {"k", got.k}, {"d", got.d}},
                                               want == got ? std::nullopt : std::optional<json>(json{{"n", got.n}, {"k", got.k}, {"d", got.d}})));

        const auto mw = min_weight_words(code, jobs);
        const std::uint64_t want_count = std::uint64_t{q} * (q - 1);
        r.checks.push_back(details::make_check(
            tag + "min_weight_count", "minimum-weight words are the q(q-1) multiples of prod(x_i - b)", params, want_count, mw.words.size(),
            mw.words.size() == want_count ? std::nullopt : std::optional<json>(json{{"weight", mw.weight}, {"words", mw.words.size()}})));
        const auto span = mw.words.empty() ? 0 : rank(F, Matrix::from_rows(mw.words));
        r.checks.push_back(details::make_check(tag + "min_weight_span", "minimum-weight words generate the code", params, code.rows(), span,
                                               span == code.rows() ? std::nullopt : std::optional<json>(json{{"rank", span}})));

        const auto d = generalized_hamming_weights(code, jobs).d;
        std::vector<std::uint64_t> bounds;
        std::optional<json> over;
        for (unsigned i = 1; i <= d.size(); ++i) {
            bounds.push_back(ghw_upper_bound(q, m, i, kind));
            if (d[i - 1] > bounds.back() && !over) over = json{{"r", i}, {"d_r", d[i - 1]}, {"bound", bounds.back()}};
        }
        r.checks.push_back(details::make_check(tag + "ghw_bound", "d_r <= upper bound for every r", params, bounds, d, over));
        const std::vector<std::uint64_t> want_top = {bounds[m - 1], bounds[m]};
        const std::vector<std::uint64_t> got_top = {d[m - 1], d[m]};
        const std::uint64_t n = code.length();
        r.checks.push_back(details::make_check(
            tag + "ghw_top", kind == SetKind::full ? "d_m = n - m! and d_{m+1} = n" : "d_m = n - 1 and d_{m+1} = n", params, want_top, got_top,
            want_top == got_top && want_top[1] == n ? std::nullopt : std::optional<json>(json{{"d_m", d[m - 1]}, {"d_m+1", d[m]}})));

        if (kind == SetKind::orbit) {
            const auto dd = dual_distance_check(code);
            std::optional<json> bad;
            if (!dd.passes()) {
                bad = json::object();
                if (dd.zero_column) (*bad)["zero_column"] = *dd.zero_column;
                if (dd.parallel_columns) (*bad)["parallel_columns"] = {dd.parallel_columns->first, dd.parallel_columns->second};
            }
            r.checks.push_back(details::make_check(tag + "dual_distance", "columns nonzero and pairwise independent", params, 3,
                                                   dd.lower_bound, bad));
            if (m + 1 == q)
                r.checks.push_back(details::make_check(tag + "fills_space", "the orbit code for m = q-1 is all of F_q^q", params, q,
                                                       code.rank(), code.rank() == q ? std::nullopt
                                                                                     : std::optional<json>(json{{"rank", code.rank()}})));
        }
        ghw[kind == SetKind::orbit] = d;
    }
    const std::uint64_t mf = factorial(m);
    std::vector<std::uint64_t> scaled;
    for (auto x : ghw[1]) scaled.push_back(x * mf);
    std::optional<json> diff;
    for (std::size_t i = 0; i < scaled.size(); ++i)
        if (scaled[i] != ghw[0][i]) {
            diff = json{{"r", i + 1}, {"full", ghw[0][i]}, {"orbit", ghw[1][i]}};
            break;
        }
    r.checks.push_back(details::make_check("codes.ghw_factorial", "d_r of the full-set code = m! d_r of the orbit code",
                                           {{"q", q}, {"m", m}}, scaled, ghw[0], diff));
    return r;
}

/// Weight distribution, higher spectra and scalar-extension spectra of the m = 2 full-set code.
inline VerificationReport verify_m2_spectra(unsigned q, unsigned jobs = 1) {
    if (q < 3) throw std::invalid_argument("m=2 spectra need q >= 3");
    const Field F = Field::of_order(q);
    const auto code = make_code(F, 2, SetKind::full);
    const json params = {{"q", q}, {"m", 2}};
    VerificationReport r;
    const auto a = weight_distribution(code, jobs);
    r.checks.push_back(details::compare_maps("spectra.weights", "weight distribution by discriminant classes", params,
                                             details::as_map(closed_form_m2_distribution(q)), details::as_map(a), "w"));
    const auto spectra = all_higher_spectra(code, jobs);
    for (unsigned i = 0; i < spectra.size(); ++i) {
        json p = params;
        p["r"] = i;
        r.checks.push_back(details::compare_maps("spectra.higher.r" + std::to_string(i), "r-dimensional subcodes per support weight", p,
                                                 details::as_map(closed_form_m2_higher(q, i).spectrum), details::as_map(spectra[i].spectrum),
                                                 "w"));
        const auto want = gaussian_binomial(3, i, q), got = spectra[i].spectrum.total();
        r.checks.push_back(details::make_check("spectra.gaussian.r" + std::to_string(i), "subcode count is a Gaussian binomial", p, want, got,
                                               want == got ? std::nullopt : std::optional<json>(json{{"total", got}})));
    }
    if (q % 2 == 1 && q >= 7) {
        for (unsigned s = 1; s <= 2; ++s) {
            const std::uint64_t Q = ipow(q, s);
            json p = params;
            p["s"] = s;
            p["Q"] = Q;
            const auto ext = extension_spectrum(spectra, q, Q);
            r.checks.push_back(details::compare_maps("spectra.extension.s" + std::to_string(s), "extension word counts by weight", p,
                                                     details::as_map(closed_form_m2_extension(q, Q)), details::as_map(ext), "w"));
            std::uint64_t total = 0;
            for (auto c : ext.counts) total = checked_add(total, c);
            const auto cube = checked_mul(Q, checked_mul(Q, Q));
            r.checks.push_back(details::make_check("spectra.extension_total.s" + std::to_string(s), "extension has Q^3 words", p, cube, total,
                                                   cube == total ? std::nullopt : std::optional<json>(json{{"total", total}})));
            if (s == 1)
                r.checks.push_back(details::compare_maps("spectra.extension_degenerate", "s = 1 gives the weight distribution", p,
                                                         details::as_map(a), details::as_map(ext), "w"));
        }
    }
    return r;
}

inline const std::vector<std::vector<Index>>& printed_matrix_q5_m3() {
    static const std::vector<std::vector<Index>> m = {
        {1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
        {3, 4, 0, 0, 1, 2, 1, 2, 3, 4},
        {2, 3, 4, 1, 3, 2, 1, 4, 4, 1},
        {0, 0, 0, 0, 0, 0, 1, 3, 2, 4},
    };
    return m;
}

/// The worked example q = 5, m = 3: matrix, weight hierarchies and the incidence geometry of the columns.
inline VerificationReport verify_example_q5_m3(unsigned jobs = 1) {
    const Field F(5);
    const auto orbit = make_code(F, 3, SetKind::orbit);
    const auto full = make_code(F, 3, SetKind::full);
    const json params = {{"q", 5}, {"m", 3}};
    VerificationReport r;

    const auto& printed = printed_matrix_q5_m3();
    std::optional<json> entry;
    for (std::size_t i = 0; i < printed.size() && !entry; ++i)
        for (std::size_t j = 0; j < printed[i].size() && !entry; ++j)
            if (orbit.generator()(i, j) != printed[i][j])
                entry = json{{"row", i + 1}, {"col", j + 1}, {"printed", printed[i][j]}, {"built", orbit.generator()(i, j)}};
    std::vector<std::vector<Index>> built;
    for (std::size_t i = 0; i < orbit.rows(); ++i) built.emplace_back(orbit.generator().row(i).begin(), orbit.generator().row(i).end());
    if (built.size() != printed.size() && !entry) entry = json{{"rows", built.size()}};
    r.checks.push_back(details::make_check("example.matrix", "printed 4x10 generator matrix", params, printed, built, entry));

    auto ghw_check = [&](const std::string& id, const std::string& anchor, const std::vector<std::size_t>& want, const std::vector<std::size_t>& got,
                         const char* set) {
        json p = params;
        p["set"] = set;
        r.checks.push_back(details::make_check(id, anchor, p, want, got, want == got ? std::nullopt : std::optional<json>(json(got))));
    };
    const std::vector<std::size_t> want_orbit = {4, 7, 9, 10}, want_full = {24, 42, 54, 60};
    ghw_check("example.ghw_orbit_sweep", "weight hierarchy by subcode supports", want_orbit, generalized_hamming_weights(orbit, jobs).d, "orbit");
    ghw_check("example.ghw_orbit_geometric", "weight hierarchy by column incidences", want_orbit, ghw_geometric(orbit, jobs), "orbit");
    ghw_check("example.ghw_full_sweep", "weight hierarchy by subcode supports", want_full, generalized_hamming_weights(full, jobs).d, "full");
    ghw_check("example.ghw_full_geometric", "weight hierarchy by column incidences", want_full, ghw_geometric(full, jobs), "full");

    // Planes of P^3 by their (normalized) equations; W_j is the plane of prod (x_i - j).
    const EchelonEnumerator planes(5, 1, 4);
    const auto on_plane = subspace_incidences(orbit, 1);
    std::set<std::vector<Index>> w_planes;
    for (Index j = 0; j < 5; ++j) {
        std::vector<Index> c(4);
        for (unsigned i = 0; i <= 3; ++i) c[i] = F.pow(F.neg(j), 3 - i);
        w_planes.insert(projective_normal_form(F, c));
    }
    std::set<std::vector<Index>> six;
    std::uint64_t four = 0, five_outside = 0;
    std::vector<Index> eq;
    for (std::uint64_t o = 0; o < planes.count(); ++o) {
        planes.fill(o, eq);
        if (on_plane[o] == 6) six.insert(eq);
        if (on_plane[o] == 4) ++four;
        if (on_plane[o] >= 5 && !w_planes.count(eq)) ++five_outside;
    }
    auto set_json = [](const std::set<std::vector<Index>>& s) { return json(std::vector<std::vector<Index>>(s.begin(), s.end())); };
    r.checks.push_back(details::make_check("example.planes_six", "the planes with 6 column points are exactly W_0..W_4", params,
                                           set_json(w_planes), set_json(six), six == w_planes ? std::nullopt : std::optional<json>(set_json(six))));
    r.checks.push_back(details::make_check("example.planes_four", "planes with exactly 4 column points", params, 10, four,
                                           four == 10 ? std::nullopt : std::optional<json>(json{{"planes", four}})));
    r.checks.push_back(details::make_check("example.planes_five_outside", "no other plane holds 5 or more column points", params, 0,
                                           five_outside, five_outside == 0 ? std::nullopt : std::optional<json>(json{{"planes", five_outside}})));
    const auto on_line = subspace_incidences(orbit, 2);
    const auto collinear = *std::max_element(on_line.begin(), on_line.end());
    r.checks.push_back(details::make_check("example.max_collinear", "at most 3 collinear column points", params, 3, collinear,
                                           collinear == 3 ? std::nullopt : std::optional<json>(json{{"max", collinear}})));

    // Dependent triples among the six columns on W_0, numbered from 1.
    std::vector<std::string> triples;
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = a + 1; b < 6; ++b)
            for (std::size_t c = b + 1; c < 6; ++c) {
                std::vector<std::vector<Index>> cols = {orbit.generator().column(a), orbit.generator().column(b), orbit.generator().column(c)};
                if (rank(F, Matrix::from_rows(cols)) < 3) triples.push_back(std::to_string(a + 1) + std::to_string(b + 1) + std::to_string(c + 1));
            }
    const std::vector<std::string> want_triples = {"123", "145", "246", "356"};
    r.checks.push_back(details::make_check("example.dependent_triples", "dependent triples among columns 1-6", params, want_triples, triples,
                                           triples == want_triples ? std::nullopt : std::optional<json>(json(triples))));

    const auto a = weight_distribution(orbit, jobs);
    const std::map<std::uint64_t, std::uint64_t> low = {{4, a[4]}, {5, a[5]}, {6, a[6]}};
    r.checks.push_back(details::compare_maps("example.low_weights", "20 minimum-weight and 40 subminimal-weight words", params,
                                             {{4, 20}, {5, 0}, {6, 40}}, low, "w"));
    return r;
}

}  // namespace symcode
