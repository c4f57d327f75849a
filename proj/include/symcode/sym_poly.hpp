/**
 * @file sym_poly.hpp
 * @brief Linear combinations of elementary symmetric polynomials and their distinguished zeroes.
 *
 * A SymPoly of arity m is f = a_0 + a_1 s_1 + ... + a_m s_m where s_i is the i-th elementary
 * symmetric polynomial in x_1..x_m (s_0 = 1). A point is distinguished when its coordinates are
 * pairwise distinct.
 */
#pragma once

#include "combinatorics.hpp"
#include "field.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace symcode {

/// All m+1 elementary symmetric values of `point`, via the coefficients of prod (1 + x_j t).
inline std::vector<Index> elementary_symmetric_all(const Field& field, std::span<const Index> point) {
    std::vector<Index> s(point.size() + 1, 0);
    s[0] = 1;
    for (std::size_t j = 0; j < point.size(); ++j) {
        for (std::size_t i = j + 1; i >= 1; --i) s[i] = field.add(s[i], field.mul(point[j], s[i - 1]));
    }
    return s;
}

/// s_i(point), using only the first i coefficients of the recurrence.
inline Index elementary_symmetric(const Field& field, std::size_t i, std::span<const Index> point) {
    if (i > point.size()) throw std::out_of_range("elementary symmetric index exceeds arity");
    std::vector<Index> s(i + 1, 0);
    s[0] = 1;
    for (std::size_t j = 0; j < point.size(); ++j) {
        for (std::size_t l = std::min(i, j + 1); l >= 1; --l) s[l] = field.add(s[l], field.mul(point[j], s[l - 1]));
    }
    return s[i];
}

inline Index dot(const Field& field, std::span<const Index> a, std::span<const Index> b) {
    Index acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc = field.add(acc, field.mul(a[i], b[i]));
    return acc;
}

class SymPoly {
  public:
    /// coeffs = (a_0, ..., a_m); arity is coeffs.size() - 1 and must be at least 1.
    SymPoly(Field field, std::vector<Index> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
        if (coeffs_.size() < 2) throw std::invalid_argument("a symmetric polynomial needs arity m >= 1");
        for (Index c : coeffs_)
            if (c >= field_.order()) throw std::out_of_range("coefficient index out of range for F_" + std::to_string(field_.order()));
    }

    static SymPoly zero(Field field, unsigned m) { return SymPoly(std::move(field), std::vector<Index>(m + 1, 0)); }

    const Field& field() const { return field_; }
    unsigned arity() const { return static_cast<unsigned>(coeffs_.size() - 1); }
    std::span<const Index> coeffs() const { return coeffs_; }
    Index coeff(std::size_t i) const { return coeffs_.at(i); }
    bool is_zero() const { return std::all_of(coeffs_.begin(), coeffs_.end(), [](Index c) { return c == 0; }); }

    bool operator==(const SymPoly&) const = default;

  private:
    Field field_;
    std::vector<Index> coeffs_;
};

inline Index evaluate(const SymPoly& f, std::span<const Index> point) {
    if (point.size() != f.arity())
        throw std::invalid_argument("point has " + std::to_string(point.size()) + " coordinates, polynomial arity is " +
                                    std::to_string(f.arity()));
    return dot(f.field(), f.coeffs(), elementary_symmetric_all(f.field(), point));
}

/// f = f1 + x_m f2 with f1 = (a_0..a_{m-1}) and f2 = (a_1..a_m), both of arity m-1.
inline std::pair<SymPoly, SymPoly> decompose(const SymPoly& f) {
    if (f.arity() < 2) throw std::invalid_argument("decompose needs arity m >= 2");
    const auto c = f.coeffs();
    return {SymPoly(f.field(), {c.begin(), c.end() - 1}), SymPoly(f.field(), {c.begin() + 1, c.end()})};
}

struct Classification {
    enum class Tag { zero, nonzero_constant, type_one, type_two };
    Tag tag;
    // For type_one: f = a_m prod (x_i + alpha), vanishing exactly when some x_i = root = -alpha.
    std::optional<Index> alpha{};
    std::optional<Index> root{};

    bool operator==(const Classification&) const = default;
};

inline std::string to_string(Classification::Tag tag) {
    switch (tag) {
        case Classification::Tag::zero: return "zero";
        case Classification::Tag::nonzero_constant: return "constant";
        case Classification::Tag::type_one: return "I";
        case Classification::Tag::type_two: return "II";
    }
    return "?";
}

inline Classification classify(const SymPoly& f) {
    using Tag = Classification::Tag;
    const Field& F = f.field();
    const auto a = f.coeffs();
    const unsigned m = f.arity();
    if (f.is_zero()) return {Tag::zero};
    if (std::all_of(a.begin() + 1, a.end(), [](Index c) { return c == 0; })) return {Tag::nonzero_constant};
    if (a[m] != 0) {
        const Index alpha = F.mul(a[m - 1], F.inv(a[m]));
        bool proportional = true;
        for (unsigned i = 0; i < m && proportional; ++i) proportional = a[i] == F.mul(alpha, a[i + 1]);
        if (proportional) return {Tag::type_one, alpha, F.neg(alpha)};
    }
    return {Tag::type_two};
}

/// Sorted, duplicate-free copy of an element subset.
inline std::vector<Index> normalize_subset(const Field& field, std::span<const Index> subset) {
    std::vector<Index> s(subset.begin(), subset.end());
    for (Index x : s)
        if (x >= field.order()) throw std::out_of_range("subset element out of range");
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw std::invalid_argument("subset has repeated elements");
    return s;
}

inline std::vector<Index> all_elements(const Field& field) {
    std::vector<Index> s(field.order());
    for (Index i = 0; i < field.order(); ++i) s[i] = i;
    return s;
}

/**
 * Calls fn(tuple) for every ordered m-tuple of pairwise-distinct elements of `sorted_set`, in
 * lexicographic order (first coordinate most significant).
 */
template <class Fn>
void for_each_distinct_tuple(std::span<const Index> sorted_set, unsigned m, Fn&& fn) {
    const std::size_t n = sorted_set.size();
    if (m > n) return;
    if (m == 0) {
        fn(std::span<const Index>{});
        return;
    }
    std::vector<std::size_t> pos(m, 0);
    std::vector<char> used(n, 0);
    std::vector<Index> tuple(m);
    std::size_t depth = 0;
    pos[0] = 0;
    // Iterative depth-first search; pos[depth] is the next candidate position at this depth.
    for (;;) {
        if (pos[depth] >= n) {
            if (depth == 0) return;
            --depth;
            used[pos[depth]] = 0;
            ++pos[depth];
            continue;
        }
        if (used[pos[depth]]) {
            ++pos[depth];
            continue;
        }
        tuple[depth] = sorted_set[pos[depth]];
        if (depth + 1 == m) {
            fn(std::span<const Index>(tuple));
            ++pos[depth];
            continue;
        }
        used[pos[depth]] = 1;
        ++depth;
        pos[depth] = 0;
    }
}

/// Distinguished zeroes of f with all coordinates in `subset`, lexicographic.
inline std::vector<std::vector<Index>> distinguished_zeroes(const SymPoly& f, std::span<const Index> subset) {
    const auto s = normalize_subset(f.field(), subset);
    if (s.size() < f.arity()) throw std::invalid_argument("subset is smaller than the arity");
    std::vector<std::vector<Index>> zeros;
    for_each_distinct_tuple(s, f.arity(), [&](std::span<const Index> t) {
        if (evaluate(f, t) == 0) zeros.emplace_back(t.begin(), t.end());
    });
    return zeros;
}

inline std::uint64_t count_distinguished_zeroes(const SymPoly& f, std::span<const Index> subset) {
    const auto s = normalize_subset(f.field(), subset);
    if (s.size() < f.arity()) throw std::invalid_argument("subset is smaller than the arity");
    std::uint64_t count = 0;
    for_each_distinct_tuple(s, f.arity(), [&](std::span<const Index> t) { count += evaluate(f, t) == 0; });
    return count;
}

inline std::uint64_t count_distinguished_zeroes(const SymPoly& f) {
    return count_distinguished_zeroes(f, all_elements(f.field()));
}

/**
 * Zero-count bounds over a grid of size `set_size`.
 * type_one_allowed = true: the general bound m P(|S|-1, m-1).
 * type_one_allowed = false: the sharper bound for polynomials that are not c prod (x_i - b) with
 * b in S, m P(|S|-1, m-1) - (|S|-m) P(|S|-2, m-2). For m = 1 the correction term is 0.
 */
inline std::uint64_t zero_count_bound(std::uint64_t set_size, unsigned m, bool type_one_allowed) {
    if (m < 1 || set_size < m) throw std::invalid_argument("zero_count_bound needs 1 <= m <= |S|");
    const auto s = static_cast<std::int64_t>(set_size);
    const std::uint64_t general = checked_mul(m, perm_count(s - 1, m - 1));
    if (type_one_allowed || m < 2) return general;
    return general - checked_mul(set_size - m, perm_count(s - 2, m - 2));
}

/// Distinguished-zero count of a_0 + a_1(x_1+x_2) + a_2 x_1 x_2 over all of F_q, by case analysis.
inline std::uint64_t closed_form_count_m2(const SymPoly& f) {
    if (f.arity() != 2) throw std::invalid_argument("closed-form count needs arity 2");
    const Field& F = f.field();
    const std::uint64_t q = F.order();
    if (q == 2) throw std::invalid_argument("closed-form count needs q >= 3");
    const Index a0 = f.coeff(0), a1 = f.coeff(1), a2 = f.coeff(2);
    const Index disc = F.sub(F.mul(a1, a1), F.mul(a0, a2));
    if (a0 == 0 && a1 == 0 && a2 == 0) return q * (q - 1);
    if (F.characteristic() != 2) {
        if (a2 == 0) return a1 == 0 ? 0 : q - 1;
        if (disc == 0) return 2 * (q - 1);
        return F.is_square(disc) ? q - 3 : q - 1;
    }
    if (a2 == 0) {
        if (a1 == 0) return 0;
        return a0 != 0 ? q : 0;
    }
    return disc == 0 ? 2 * (q - 1) : q - 2;
}

/**
 * Histogram {zero count -> number of coefficient vectors} over all q^3 polynomials of arity 2,
 * from the counting formulas. For q = 3 the q-3 row coincides with the 0 row and is merged.
 */
inline std::map<std::uint64_t, std::uint64_t> m2_zero_count_table(std::uint64_t q) {
    if (q < 3) throw std::invalid_argument("zero-count table needs q >= 3");
    std::map<std::uint64_t, std::uint64_t> table;
    if (q % 2 == 1) {
        table[0] += q - 1;
        table[q - 3] += q * (q - 1) * (q - 1) / 2;
        table[q - 1] += q * (q - 1) * (q + 1) / 2;
    } else {
        table[0] += 2 * (q - 1);
        table[q] += (q - 1) * (q - 1);
        table[q - 2] += q * (q - 1) * (q - 1);
    }
    table[2 * (q - 1)] += q * (q - 1);
    table[q * (q - 1)] += 1;
    return table;
}

}  // namespace symcode
