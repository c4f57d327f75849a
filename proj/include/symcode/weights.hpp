/**
 * @file weights.hpp
 * @brief Weight distributions, higher weight spectra, generalized Hamming weights and
 * extension-field spectra.
 *
 * Subcodes are enumerated once each through their reduced row echelon bases in message space,
 * which is valid whenever the evaluation map is injective (m < q). Two independent routes give the
 * generalized Hamming weights:
 *  - a support sweep, which ORs the precomputed support bitsets of the codewords in each basis;
 *  - a geometric sweep, which counts projective column points inside each codimension-r subspace.
 */
#pragma once

#include "code.hpp"
#include "combinatorics.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace symcode {

struct WeightSpectrum {
    std::vector<std::uint64_t> counts;  // counts[w] = A_w, 0 <= w <= n

    std::uint64_t operator[](std::size_t w) const { return w < counts.size() ? counts[w] : 0; }
    std::size_t length() const { return counts.empty() ? 0 : counts.size() - 1; }
    std::uint64_t total() const {
        std::uint64_t t = 0;
        for (auto c : counts) t = checked_add(t, c);
        return t;
    }
    std::map<std::size_t, std::uint64_t> nonzero() const {
        std::map<std::size_t, std::uint64_t> out;
        for (std::size_t w = 0; w < counts.size(); ++w)
            if (counts[w]) out[w] = counts[w];
        return out;
    }
    bool operator==(const WeightSpectrum&) const = default;
};

struct HigherSpectrum {
    unsigned r = 0;
    WeightSpectrum spectrum;  // A_w^(r)
};

inline WeightSpectrum weight_distribution(const LinearCode& code, unsigned jobs = 1) {
    if (!code.injective()) throw std::invalid_argument("weight distribution needs an injective evaluation map (m < q)");
    return {message_weight_histogram(code, jobs)};
}

/**
 * Weight distribution of the full-set code for m = 2 from the zero-count classification.
 * A codeword of f has weight q(q-1) - (number of distinguished zeroes of f). The row with
 * (q-1)^2 words for even q sits at weight q(q-2): those polynomials have q zeroes.
 */
inline WeightSpectrum closed_form_m2_distribution(std::uint64_t q) {
    if (q < 3) throw std::invalid_argument("closed-form m=2 distribution needs q >= 3");
    const std::uint64_t n = q * (q - 1);
    WeightSpectrum s{std::vector<std::uint64_t>(n + 1, 0)};
    if (q == 3) {
        s.counts[0] = 1;
        s.counts[2] = 6;
        s.counts[4] = 12;
        s.counts[6] = 8;
        return s;
    }
    s.counts[0] += 1;
    s.counts[(q - 1) * (q - 2)] += q * (q - 1);
    if (q % 2 == 1) {
        s.counts[n - (q - 1)] += q * (q - 1) * (q + 1) / 2;
        s.counts[n - (q - 3)] += q * (q - 1) * (q - 1) / 2;
        s.counts[n] += q - 1;
    } else {
        s.counts[n - (q - 2)] += q * (q - 1) * (q - 1);
        s.counts[n - q] += (q - 1) * (q - 1);
        s.counts[n] += 2 * (q - 1);
    }
    return s;
}

/**
 * All r x k matrices over F_q in reduced row echelon form with r nonzero rows, i.e. one per
 * r-dimensional subspace of F_q^k. Ordinals run over pivot patterns in lexicographic order, and
 * within a pattern over the free entries (row-major, first entry most significant).
 */
class EchelonEnumerator {
  public:
    EchelonEnumerator(unsigned q, unsigned r, unsigned k) : q_(q), r_(r), k_(k) {
        if (r > k) throw std::invalid_argument("subspace dimension exceeds ambient dimension");
        std::vector<unsigned> piv(r);
        for (unsigned i = 0; i < r; ++i) piv[i] = i;
        std::uint64_t offset = 0;
        for (;;) {
            Pattern p;
            p.pivots = piv;
            for (unsigned i = 0; i < r; ++i)
                for (unsigned c = piv[i] + 1; c < k; ++c)
                    if (std::find(piv.begin(), piv.end(), c) == piv.end()) p.free.push_back(i * k + c);
            p.offset = offset;
            p.count = ipow(q, static_cast<unsigned>(p.free.size()));
            offset = checked_add(offset, p.count);
            patterns_.push_back(std::move(p));
            int i = static_cast<int>(r) - 1;
            while (i >= 0 && piv[i] == k - r + static_cast<unsigned>(i)) --i;
            if (i < 0) break;
            ++piv[i];
            for (unsigned j = i + 1; j < r; ++j) piv[j] = piv[j - 1] + 1;
        }
        total_ = offset;
    }

    std::uint64_t count() const { return total_; }
    unsigned rows() const { return r_; }
    unsigned cols() const { return k_; }

    /// Writes the r*k row-major matrix with the given ordinal into out.
    void fill(std::uint64_t ordinal, std::vector<Index>& out) const {
        out.assign(std::size_t{r_} * k_, 0);
        auto it = std::upper_bound(patterns_.begin(), patterns_.end(), ordinal,
                                   [](std::uint64_t v, const Pattern& p) { return v < p.offset; });
        const Pattern& p = *std::prev(it);
        for (unsigned i = 0; i < r_; ++i) out[i * k_ + p.pivots[i]] = 1;
        std::uint64_t local = ordinal - p.offset;
        for (std::size_t f = p.free.size(); f-- > 0;) {
            out[p.free[f]] = static_cast<Index>(local % q_);
            local /= q_;
        }
    }

    Matrix matrix(std::uint64_t ordinal) const {
        Matrix m(r_, k_);
        fill(ordinal, m.data);
        return m;
    }

  private:
    struct Pattern {
        std::vector<unsigned> pivots;
        std::vector<std::size_t> free;
        std::uint64_t offset = 0;
        std::uint64_t count = 0;
    };
    unsigned q_, r_, k_;
    std::vector<Pattern> patterns_;
    std::uint64_t total_ = 0;
};

/// Support bitsets of every codeword, indexed by message ordinal.
class SupportTable {
  public:
    explicit SupportTable(const LinearCode& code, unsigned jobs = 1)
        : q_(code.q()), k_(code.rows()), words_((code.length() + 63) / 64) {
        const MessageSweep sweep(code);
        bits_.assign(sweep.total() * words_, 0);
        parallel_reduce(
            sweep.chunks(), jobs, 0,
            [&](std::size_t c) {
                sweep.run_chunk(c, [&](std::uint64_t ord, std::span<const Index>, std::span<const Index> w) {
                    std::uint64_t* b = &bits_[ord * words_];
                    for (std::size_t j = 0; j < w.size(); ++j)
                        if (w[j]) b[j / 64] |= std::uint64_t{1} << (j % 64);
                });
                return 0;
            },
            [](int&, int&&) {});
    }

    std::uint64_t ordinal_of(std::span<const Index> message) const {
        std::uint64_t ord = 0;
        for (Index a : message) ord = ord * q_ + a;
        return ord;
    }

    /// Number of coordinates where some row of `basis` (r*k, row-major) encodes to a nonzero value.
    std::size_t support_weight(std::span<const Index> basis, std::vector<std::uint64_t>& scratch) const {
        scratch.assign(words_, 0);
        for (std::size_t row = 0; row * k_ < basis.size(); ++row) {
            const std::uint64_t* b = &bits_[ordinal_of(basis.subspan(row * k_, k_)) * words_];
            for (std::size_t i = 0; i < words_; ++i) scratch[i] |= b[i];
        }
        std::size_t w = 0;
        for (auto x : scratch) w += static_cast<std::size_t>(std::popcount(x));
        return w;
    }

  private:
    std::uint64_t q_;
    std::size_t k_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

namespace details {

inline constexpr std::uint64_t subspace_chunk = 2048;

struct SweepResult {
    std::vector<std::uint64_t> histogram;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::uint64_t best_ordinal = 0;
};

// Iterates every ordinal of `en` in fixed-size chunks; value(ordinal, matrix) gives the
// quantity to histogram, and the extremum (min if minimize, else max) keeps its first ordinal.
template <class ValueFn>
SweepResult sweep_subspaces(const EchelonEnumerator& en, std::size_t bins, bool minimize, unsigned jobs, ValueFn value) {
    const std::uint64_t total = en.count();
    const std::size_t chunks = static_cast<std::size_t>((total + subspace_chunk - 1) / subspace_chunk);
    SweepResult init;
    init.histogram.assign(bins, 0);
    if (!minimize) init.best = 0;
    auto better = [minimize](std::size_t a, std::size_t b) { return minimize ? a < b : a > b; };
    return parallel_reduce(
        chunks, jobs, std::move(init),
        [&](std::size_t c) {
            SweepResult part;
            part.histogram.assign(bins, 0);
            part.best = minimize ? std::numeric_limits<std::size_t>::max() : 0;
            bool have = false;
            ValueFn local = value;  // per-chunk copy: value functors may own scratch buffers
            std::vector<Index> mat;
            const std::uint64_t lo = c * subspace_chunk, hi = std::min(total, lo + subspace_chunk);
            for (std::uint64_t ord = lo; ord < hi; ++ord) {
                en.fill(ord, mat);
                const std::size_t v = local(ord, mat);
                ++part.histogram[v];
                if (!have || better(v, part.best)) {
                    part.best = v;
                    part.best_ordinal = ord;
                    have = true;
                }
            }
            return part;
        },
        [&](SweepResult& acc, SweepResult&& part) {
            for (std::size_t i = 0; i < bins; ++i) acc.histogram[i] += part.histogram[i];
            if (better(part.best, acc.best)) {
                acc.best = part.best;
                acc.best_ordinal = part.best_ordinal;
            }
        });
}

inline void require_injective(const LinearCode& code) {
    if (!code.injective())
        throw std::invalid_argument("subcode enumeration needs an injective evaluation map (m < q); rank " +
                                    std::to_string(code.rank()) + " < " + std::to_string(code.rows()));
}

}  // namespace details

/// Cost estimate (subspace count times support words) of sweeping every subcode dimension.
inline std::uint64_t subspace_sweep_cost(const LinearCode& code) {
    std::uint64_t total = 0;
    const auto k = static_cast<unsigned>(code.rows());
    try {
        for (unsigned r = 1; r <= k; ++r) total = checked_add(total, checked_mul(gaussian_binomial(k, r, code.q()), r));
        total = checked_mul(total, (code.length() + 63) / 64);
        total = checked_add(total, message_sweep_cost(code));
    } catch (const std::overflow_error&) {
        return std::numeric_limits<std::uint64_t>::max();
    }
    return total;
}

/// A_w^(r): number of r-dimensional subcodes with support size w. r = 0 gives the zero subcode.
inline HigherSpectrum higher_weight_spectrum(const LinearCode& code, const SupportTable& table, unsigned r, unsigned jobs = 1) {
    details::require_injective(code);
    const auto k = static_cast<unsigned>(code.rows());
    if (r > k) throw std::invalid_argument("subcode dimension r = " + std::to_string(r) + " exceeds k = " + std::to_string(k));
    HigherSpectrum out{r, {std::vector<std::uint64_t>(code.length() + 1, 0)}};
    if (r == 0) {
        out.spectrum.counts[0] = 1;
        return out;
    }
    const EchelonEnumerator en(code.q(), r, k);
    auto res = details::sweep_subspaces(en, code.length() + 1, true, jobs,
                                        [&, scratch = std::vector<std::uint64_t>()](std::uint64_t, const std::vector<Index>& basis) mutable {
                                            return table.support_weight(basis, scratch);
                                        });
    out.spectrum.counts = std::move(res.histogram);
    return out;
}

inline HigherSpectrum higher_weight_spectrum(const LinearCode& code, unsigned r, unsigned jobs = 1) {
    details::require_injective(code);
    const SupportTable table(code, jobs);
    return higher_weight_spectrum(code, table, r, jobs);
}

/// Spectra for r = 0..k, index = r.
inline std::vector<HigherSpectrum> all_higher_spectra(const LinearCode& code, unsigned jobs = 1) {
    details::require_injective(code);
    const SupportTable table(code, jobs);
    std::vector<HigherSpectrum> out;
    for (unsigned r = 0; r <= code.rows(); ++r) out.push_back(higher_weight_spectrum(code, table, r, jobs));
    return out;
}

struct GhwResult {
    std::vector<std::size_t> d;     // d[r-1] = d_r
    std::vector<Matrix> witnesses;  // message-space RREF basis attaining d_r (first in enumeration order)
};

/// d_r as the least support size over all r-dimensional subcodes.
inline GhwResult generalized_hamming_weights(const LinearCode& code, unsigned jobs = 1) {
    details::require_injective(code);
    const SupportTable table(code, jobs);
    const auto k = static_cast<unsigned>(code.rows());
    GhwResult out;
    for (unsigned r = 1; r <= k; ++r) {
        const EchelonEnumerator en(code.q(), r, k);
        auto res = details::sweep_subspaces(en, code.length() + 1, true, jobs,
                                            [&, scratch = std::vector<std::uint64_t>()](std::uint64_t, const std::vector<Index>& basis) mutable {
                                                return table.support_weight(basis, scratch);
                                            });
        out.d.push_back(res.best);
        out.witnesses.push_back(en.matrix(res.best_ordinal));
    }
    return out;
}

/// Generator columns as distinct projective points with multiplicities; zero columns counted apart.
struct ColumnPoints {
    std::vector<std::vector<Index>> points;
    std::vector<std::size_t> multiplicity;
    std::size_t zero_columns = 0;
};

inline ColumnPoints column_points(const LinearCode& code) {
    const Field& F = code.field();
    std::map<std::vector<Index>, std::size_t> acc;
    ColumnPoints out;
    for (std::size_t j = 0; j < code.length(); ++j) {
        auto col = projective_normal_form(F, code.generator().column(j));
        if (std::all_of(col.begin(), col.end(), [](Index x) { return x == 0; }))
            ++out.zero_columns;
        else
            ++acc[std::move(col)];
    }
    for (auto& [p, mult] : acc) {
        out.points.push_back(p);
        out.multiplicity.push_back(mult);
    }
    return out;
}

namespace details {

// Number of columns inside the null space of the r*k matrix `equations`.
inline std::size_t columns_in_null_space(const Field& F, const ColumnPoints& pts, std::span<const Index> equations, std::size_t k) {
    std::size_t count = pts.zero_columns;
    const std::size_t r = equations.size() / k;
    for (std::size_t p = 0; p < pts.points.size(); ++p) {
        bool inside = true;
        for (std::size_t i = 0; i < r && inside; ++i) inside = dot(F, equations.subspan(i * k, k), pts.points[p]) == 0;
        if (inside) count += pts.multiplicity[p];
    }
    return count;
}

}  // namespace details

/// Column counts of every codimension-r subspace, indexed by the enumerator ordinal of its equations.
inline std::vector<std::size_t> subspace_incidences(const LinearCode& code, unsigned codim) {
    const auto k = static_cast<unsigned>(code.rows());
    const ColumnPoints pts = column_points(code);
    const EchelonEnumerator en(code.q(), codim, k);
    std::vector<std::size_t> out(en.count());
    std::vector<Index> mat;
    for (std::uint64_t ord = 0; ord < en.count(); ++ord) {
        en.fill(ord, mat);
        out[ord] = details::columns_in_null_space(code.field(), pts, mat, k);
    }
    return out;
}

/// d_r = n - (most column points in a codimension-r projective subspace).
inline std::vector<std::size_t> ghw_geometric(const LinearCode& code, unsigned jobs = 1) {
    details::require_injective(code);
    const auto k = static_cast<unsigned>(code.rows());
    const ColumnPoints pts = column_points(code);
    std::vector<std::size_t> d;
    for (unsigned r = 1; r <= k; ++r) {
        const EchelonEnumerator en(code.q(), r, k);
        auto res = details::sweep_subspaces(en, code.length() + 1, false, jobs, [&](std::uint64_t, const std::vector<Index>& eq) {
            return details::columns_in_null_space(code.field(), pts, eq, k);
        });
        d.push_back(code.length() - res.best);
    }
    return d;
}

/**
 * Upper bound on d_r for 1 <= r <= m+1 <= q: P(q,m) - m! C(q-r, m-r) for the full-set code,
 * C(q,m) - C(q-r, m-r) for the orbit code. At r = m+1 the bound is the length.
 */
inline std::uint64_t ghw_upper_bound(unsigned q, unsigned m, unsigned r, SetKind kind) {
    if (r < 1 || r > m + 1 || m + 1 > q)
        throw std::invalid_argument("ghw_upper_bound needs 1 <= r <= m+1 <= q (q=" + std::to_string(q) + " m=" + std::to_string(m) +
                                    " r=" + std::to_string(r) + ")");
    const std::uint64_t tail = binomial(static_cast<std::int64_t>(q) - r, static_cast<std::int64_t>(m) - r);
    if (kind == SetKind::full) return perm_count(q, m) - factorial(m) * tail;
    return binomial(q, m) - tail;
}

/// s with Q = q^s, s >= 1; throws if Q is not such a power.
inline unsigned extension_degree(std::uint64_t q, std::uint64_t Q) {
    unsigned s = 0;
    std::uint64_t x = 1;
    while (x < Q) {
        x = checked_mul(x, q);
        ++s;
    }
    if (x != Q || s == 0) throw std::invalid_argument(std::to_string(Q) + " is not a power q^s (s >= 1) of q = " + std::to_string(q));
    return s;
}

/**
 * Word counts of the scalar extension to F_Q from the higher spectra:
 * P_w(Q) = sum_r A_w^(r) prod_{i<r} (Q - q^i). `spectra` must hold r = 0..k in order.
 */
inline WeightSpectrum extension_spectrum(const std::vector<HigherSpectrum>& spectra, std::uint64_t q, std::uint64_t Q) {
    extension_degree(q, Q);
    if (spectra.empty()) throw std::invalid_argument("extension spectrum needs the spectra for r = 0..k");
    const std::size_t len = spectra[0].spectrum.counts.size();
    WeightSpectrum out{std::vector<std::uint64_t>(len, 0)};
    std::uint64_t factor = 1;  // prod_{i<r} (Q - q^i)
    for (std::size_t r = 0; r < spectra.size(); ++r) {
        if (spectra[r].r != r) throw std::invalid_argument("spectra must be listed for r = 0..k in order");
        if (r > 0) factor = checked_mul(factor, Q - ipow(q, static_cast<unsigned>(r - 1)));
        const auto& a = spectra[r].spectrum.counts;
        for (std::size_t w = 0; w < len && w < a.size(); ++w)
            if (a[w]) out.counts[w] = checked_add(out.counts[w], checked_mul(a[w], factor));
    }
    return out;
}

/// A_w^(r) for the full-set code with m = 2 from the subcode classification (r = 0..3).
inline HigherSpectrum closed_form_m2_higher(std::uint64_t q, unsigned r) {
    if (q < 3 || r > 3) throw std::invalid_argument("closed-form m=2 higher spectrum needs q >= 3 and r <= 3");
    const std::uint64_t n = q * (q - 1);
    HigherSpectrum out{r, {std::vector<std::uint64_t>(n + 1, 0)}};
    auto& c = out.spectrum.counts;
    switch (r) {
        case 0: c[0] = 1; break;
        case 1: {
            const auto a = closed_form_m2_distribution(q);
            for (std::size_t w = 1; w <= n; ++w) c[w] = a[w] / (q - 1);
            break;
        }
        case 2:
            c[n - 2] = q * (q - 1) / 2;
            c[n] = (q * q + 3 * q + 2) / 2;
            break;
        case 3: c[n] = 1; break;
    }
    return out;
}

/// P_w(Q) for the full-set code with m = 2 and odd q >= 7, from the closed formulas.
inline WeightSpectrum closed_form_m2_extension(std::uint64_t q, std::uint64_t Q) {
    if (q < 7 || q % 2 == 0) throw std::invalid_argument("closed-form extension spectrum needs odd q >= 7");
    extension_degree(q, Q);
    const std::uint64_t n = q * (q - 1);
    WeightSpectrum out{std::vector<std::uint64_t>(n + 1, 0)};
    using i128 = __int128;
    const i128 qq = q, QQ = Q;
    auto put = [&](std::uint64_t w, i128 v) {
        if (v < 0 || v > static_cast<i128>(std::numeric_limits<std::uint64_t>::max())) throw std::overflow_error("P_w out of range");
        out.counts[w] = static_cast<std::uint64_t>(v);
    };
    put(0, 1);
    put(n - 2 * (q - 1), qq * (QQ - 1));
    put(n - (q - 1), (qq * qq + qq) / 2 * (QQ - 1));
    put(n - (q - 3), (qq * qq - qq) / 2 * (QQ - 1));
    put(n - 2, (qq * qq - qq) / 2 * (QQ - 1) * (QQ - qq));
    put(n, (QQ - 1) * (QQ * QQ + (-qq * qq + qq + 2) / 2 * QQ + (qq * qq * qq - 3 * qq * qq - 2 * qq + 2) / 2));
    return out;
}

}  // namespace symcode
