/**
 * @file code.hpp
 * @brief Evaluation sets, the evaluation codes of symmetric polynomials, and their basic parameters.
 *
 * The full set is every distinguished m-tuple over F_q; the orbit set keeps one strictly increasing
 * representative per coordinate-permutation orbit. Both are listed in lexicographic order of
 * canonical indices. Row i of the generator matrix holds s_i evaluated at every point.
 */
#pragma once

#include "combinatorics.hpp"
#include "field.hpp"
#include "linalg.hpp"
#include "parallel.hpp"
#include "sym_poly.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace symcode {

enum class SetKind { full, orbit };

inline std::string to_string(SetKind kind) { return kind == SetKind::full ? "full" : "orbit"; }

inline SetKind parse_set_kind(const std::string& s) {
    if (s == "full") return SetKind::full;
    if (s == "orbit") return SetKind::orbit;
    throw std::invalid_argument("set kind must be 'full' or 'orbit', got '" + s + "'");
}

struct EvaluationSet {
    SetKind kind;
    Field field;
    unsigned m;
    std::vector<Index> coords;  // size() * m entries, point-major

    std::size_t size() const { return m == 0 ? 0 : coords.size() / m; }
    bool empty() const { return coords.empty(); }
    std::span<const Index> point(std::size_t j) const { return {coords.data() + j * m, m}; }
};

inline EvaluationSet enumerate_distinguished(const Field& field, unsigned m) {
    if (m < 1) throw std::invalid_argument("arity m must be at least 1");
    EvaluationSet set{SetKind::full, field, m, {}};
    const auto elems = all_elements(field);
    set.coords.reserve(static_cast<std::size_t>(perm_count(field.order(), m)) * m);
    for_each_distinct_tuple(elems, m, [&](std::span<const Index> t) { set.coords.insert(set.coords.end(), t.begin(), t.end()); });
    return set;
}

inline EvaluationSet enumerate_orbit_reps(const Field& field, unsigned m) {
    if (m < 1) throw std::invalid_argument("arity m must be at least 1");
    EvaluationSet set{SetKind::orbit, field, m, {}};
    const unsigned q = field.order();
    if (m > q) return set;
    set.coords.reserve(static_cast<std::size_t>(binomial(q, m)) * m);
    std::vector<Index> t(m);
    for (unsigned i = 0; i < m; ++i) t[i] = i;
    for (;;) {
        set.coords.insert(set.coords.end(), t.begin(), t.end());
        int i = static_cast<int>(m) - 1;
        while (i >= 0 && t[i] == q - m + static_cast<unsigned>(i)) --i;
        if (i < 0) break;
        ++t[i];
        for (unsigned j = i + 1; j < m; ++j) t[j] = t[j - 1] + 1;
    }
    return set;
}

inline EvaluationSet enumerate_points(const Field& field, unsigned m, SetKind kind) {
    return kind == SetKind::full ? enumerate_distinguished(field, m) : enumerate_orbit_reps(field, m);
}

class LinearCode {
  public:
    LinearCode(Field field, unsigned m, SetKind kind, Matrix generator)
        : field_(std::move(field)), m_(m), kind_(kind), generator_(std::move(generator)),
          rank_(symcode::rank(field_, generator_)) {}

    const Field& field() const { return field_; }
    unsigned q() const { return field_.order(); }
    unsigned m() const { return m_; }
    SetKind kind() const { return kind_; }
    const Matrix& generator() const { return generator_; }
    std::size_t length() const { return generator_.cols; }
    /// Number of generator rows, m+1 (the message-space dimension).
    std::size_t rows() const { return generator_.rows; }
    std::size_t rank() const { return rank_; }
    bool injective() const { return rank_ == generator_.rows; }

  private:
    Field field_;
    unsigned m_;
    SetKind kind_;
    Matrix generator_;
    std::size_t rank_;
};

inline LinearCode build_code(const EvaluationSet& set) {
    if (set.empty())
        throw std::invalid_argument("empty evaluation set: arity " + std::to_string(set.m) + " exceeds q = " +
                                    std::to_string(set.field.order()));
    Matrix g(set.m + 1, set.size());
    for (std::size_t j = 0; j < set.size(); ++j) {
        const auto s = elementary_symmetric_all(set.field, set.point(j));
        for (std::size_t i = 0; i <= set.m; ++i) g(i, j) = s[i];
    }
    return LinearCode(set.field, set.m, set.kind, std::move(g));
}

inline LinearCode make_code(const Field& field, unsigned m, SetKind kind) { return build_code(enumerate_points(field, m, kind)); }

inline std::size_t hamming_weight(std::span<const Index> word) {
    return static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](Index x) { return x != 0; }));
}

/// Coefficient vector times the generator matrix.
inline std::vector<Index> encode(const SymPoly& f, const LinearCode& code) {
    if (f.arity() != code.m())
        throw std::invalid_argument("polynomial arity " + std::to_string(f.arity()) + " does not match code arity " +
                                    std::to_string(code.m()));
    if (!(f.field() == code.field())) throw std::invalid_argument("polynomial and code are over different fields");
    const Field& F = code.field();
    const Matrix& g = code.generator();
    std::vector<Index> word(code.length(), 0);
    for (std::size_t i = 0; i < g.rows; ++i) {
        const Index a = f.coeff(i);
        if (a == 0) continue;
        for (std::size_t j = 0; j < g.cols; ++j) word[j] = F.add(word[j], F.mul(a, g(i, j)));
    }
    return word;
}

/// Saturating estimate of q^k * n, the cost of a full message sweep.
inline std::uint64_t message_sweep_cost(const LinearCode& code) {
    std::uint64_t cost = code.length();
    for (std::size_t i = 0; i < code.rows(); ++i) {
        if (cost > std::numeric_limits<std::uint64_t>::max() / code.q()) return std::numeric_limits<std::uint64_t>::max();
        cost *= code.q();
    }
    return cost;
}

/**
 * Enumerates codewords by message. A message (a_0, ..., a_{k-1}) has ordinal sum a_i q^{k-1-i},
 * so ordinal order is lexicographic. The sweep is split into chunks by the leading digits; the
 * chunking depends only on the code, never on the worker count.
 */
class MessageSweep {
  public:
    explicit MessageSweep(const LinearCode& code) : code_(code), k_(code.rows()), q_(code.q()), n_(code.length()) {
        const Field& F = code.field();
        const Matrix& g = code.generator();
        scaled_.resize(k_ * q_ * n_);
        for (std::size_t i = 0; i < k_; ++i)
            for (Index a = 0; a < q_; ++a)
                for (std::size_t j = 0; j < n_; ++j) scaled_[(i * q_ + a) * n_ + j] = F.mul(a, g(i, j));
        prefix_digits_ = 0;
        std::uint64_t chunks = 1;
        while (prefix_digits_ + 1 < k_ && chunks < 256) {
            chunks *= q_;
            ++prefix_digits_;
        }
        chunks_ = chunks;
    }

    std::size_t chunks() const { return chunks_; }
    std::uint64_t total() const { return ipow(q_, static_cast<unsigned>(k_)); }

    /// fn(ordinal, message digits, word) for every message whose leading digits spell `chunk`.
    template <class Fn>
    void run_chunk(std::size_t chunk, Fn&& fn) const {
        const Field& F = code_.field();
        std::vector<Index> digits(k_, 0);
        std::size_t c = chunk;
        for (std::size_t i = prefix_digits_; i-- > 0;) {
            digits[i] = static_cast<Index>(c % q_);
            c /= q_;
        }
        // partial[l] = sum_{i<l} a_i row_i
        std::vector<std::vector<Index>> partial(k_ + 1, std::vector<Index>(n_, 0));
        auto extend = [&](std::size_t level) {
            const Index* s = &scaled_[(level * q_ + digits[level]) * n_];
            const auto& prev = partial[level];
            auto& next = partial[level + 1];
            for (std::size_t j = 0; j < n_; ++j) next[j] = F.add(prev[j], s[j]);
        };
        for (std::size_t l = 0; l < k_; ++l) extend(l);
        const std::uint64_t span = ipow(q_, static_cast<unsigned>(k_ - prefix_digits_));
        const std::uint64_t base = static_cast<std::uint64_t>(chunk) * span;
        for (std::uint64_t t = 0;; ++t) {
            fn(base + t, std::span<const Index>(digits), std::span<const Index>(partial[k_]));
            // odometer over the free digits
            std::size_t i = k_;
            while (i > prefix_digits_) {
                --i;
                if (digits[i] + 1 < q_) {
                    ++digits[i];
                    break;
                }
                digits[i] = 0;
                if (i == prefix_digits_) return;
            }
            for (std::size_t l = i; l < k_; ++l) extend(l);
        }
    }

  private:
    const LinearCode& code_;
    std::size_t k_;
    Index q_;
    std::size_t n_;
    std::vector<Index> scaled_;
    std::size_t prefix_digits_;
    std::size_t chunks_;
};

/// Histogram of codeword weights over all q^k messages (multiplicities included if ev is not injective).
inline std::vector<std::uint64_t> message_weight_histogram(const LinearCode& code, unsigned jobs = 1) {
    const MessageSweep sweep(code);
    using Hist = std::vector<std::uint64_t>;
    return parallel_reduce(
        sweep.chunks(), jobs, Hist(code.length() + 1, 0),
        [&](std::size_t c) {
            Hist h(code.length() + 1, 0);
            sweep.run_chunk(c, [&](std::uint64_t, std::span<const Index>, std::span<const Index> w) { ++h[hamming_weight(w)]; });
            return h;
        },
        [](Hist& acc, Hist&& h) {
            for (std::size_t w = 0; w < acc.size(); ++w) acc[w] += h[w];
        });
}

struct CodeParams {
    std::size_t n;
    std::size_t k;
    std::size_t d;
    bool operator==(const CodeParams&) const = default;
};

/// (n, k, d) by brute force: k is the generator rank, d the least weight of a nonzero message.
inline CodeParams code_params(const LinearCode& code, unsigned jobs = 1) {
    if (code.m() >= code.q())
        throw std::invalid_argument("parameters need m < q (m = " + std::to_string(code.m()) + ", q = " + std::to_string(code.q()) + ")");
    const auto hist = message_weight_histogram(code, jobs);
    std::size_t d = 0;
    for (std::size_t w = 1; w < hist.size(); ++w)
        if (hist[w]) {
            d = w;
            break;
        }
    return {code.length(), code.rank(), d};
}

/// The closed forms: full set [P(q,m), m+1, (q-m)P(q-1,m-1)], orbit set [C(q,m), m+1, C(q,m)-C(q-1,m-1)].
inline CodeParams predicted_params(unsigned q, unsigned m, SetKind kind) {
    if (m < 1 || m >= q) throw std::invalid_argument("closed-form parameters need 1 <= m < q");
    if (kind == SetKind::full)
        return {static_cast<std::size_t>(perm_count(q, m)), m + 1, static_cast<std::size_t>((q - m) * perm_count(q - 1, m - 1))};
    return {static_cast<std::size_t>(binomial(q, m)), m + 1, static_cast<std::size_t>(binomial(q, m) - binomial(q - 1, m - 1))};
}

struct MinWeightWords {
    std::size_t weight = 0;
    std::vector<std::uint64_t> messages;  // ordinals, ascending
    std::vector<std::vector<Index>> words;
};

/// Every codeword of minimum nonzero weight.
inline MinWeightWords min_weight_words(const LinearCode& code, unsigned jobs = 1) {
    if (!code.injective()) throw std::invalid_argument("min_weight_words needs an injective evaluation map (m < q)");
    const std::size_t d = code_params(code, jobs).d;
    const MessageSweep sweep(code);
    MinWeightWords init;
    init.weight = d;
    return parallel_reduce(
        sweep.chunks(), jobs, std::move(init),
        [&](std::size_t c) {
            MinWeightWords part;
            sweep.run_chunk(c, [&](std::uint64_t ord, std::span<const Index>, std::span<const Index> w) {
                if (hamming_weight(w) == d) {
                    part.messages.push_back(ord);
                    part.words.emplace_back(w.begin(), w.end());
                }
            });
            return part;
        },
        [](MinWeightWords& acc, MinWeightWords&& part) {
            acc.messages.insert(acc.messages.end(), part.messages.begin(), part.messages.end());
            for (auto& w : part.words) acc.words.push_back(std::move(w));
        });
}

/// Column scaled so that its first nonzero entry is 1; the zero column is returned unchanged.
inline std::vector<Index> projective_normal_form(const Field& F, std::vector<Index> v) {
    const auto it = std::find_if(v.begin(), v.end(), [](Index x) { return x != 0; });
    if (it == v.end()) return v;
    const Index inv = F.inv(*it);
    for (Index& x : v) x = F.mul(x, inv);
    return v;
}

struct DualDistanceCheck {
    std::optional<std::size_t> zero_column;
    std::optional<std::pair<std::size_t, std::size_t>> parallel_columns;  // first offending pair
    /// 1 if a zero column exists, 2 if two columns are parallel, else 3.
    unsigned lower_bound = 3;
    bool passes() const { return lower_bound >= 3; }
};

/// Lower bound on the dual distance from column conditions.
inline DualDistanceCheck dual_distance_check(const Field& F, const Matrix& g) {
    DualDistanceCheck out;
    std::map<std::vector<Index>, std::size_t> seen;
    for (std::size_t j = 0; j < g.cols; ++j) {
        auto col = projective_normal_form(F, g.column(j));
        if (std::all_of(col.begin(), col.end(), [](Index x) { return x == 0; })) {
            out.zero_column = j;
            out.lower_bound = 1;
            return out;
        }
        auto [it, inserted] = seen.emplace(std::move(col), j);
        if (!inserted && !out.parallel_columns) {
            out.parallel_columns = {it->second, j};
            out.lower_bound = 2;
        }
    }
    return out;
}

inline DualDistanceCheck dual_distance_check(const LinearCode& code) { return dual_distance_check(code.field(), code.generator()); }

}  // namespace symcode
