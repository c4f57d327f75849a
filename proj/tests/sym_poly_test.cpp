#include <symcode/sym_poly.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace symcode;

namespace {

// Oracle: s_i as the explicit sum over i-subsets (bitmasks), independent of the recurrence.
Index naive_sigma(const Field& F, unsigned i, const std::vector<Index>& pt) {
    Index acc = 0;
    for (unsigned mask = 0; mask < (1u << pt.size()); ++mask) {
        if (static_cast<unsigned>(__builtin_popcount(mask)) != i) continue;
        Index prod = 1;
        for (unsigned j = 0; j < pt.size(); ++j)
            if (mask >> j & 1) prod = F.mul(prod, pt[j]);
        acc = F.add(acc, prod);
    }
    return acc;
}

Index naive_eval(const SymPoly& f, const std::vector<Index>& pt) {
    Index acc = 0;
    for (unsigned i = 0; i <= f.arity(); ++i) acc = f.field().add(acc, f.field().mul(f.coeff(i), naive_sigma(f.field(), i, pt)));
    return acc;
}

// Oracle: distinguished zeroes by scanning all of S^m and skipping tuples with repeats.
std::uint64_t naive_zero_count(const SymPoly& f, const std::vector<Index>& S) {
    const unsigned m = f.arity();
    std::vector<std::size_t> idx(m, 0);
    std::uint64_t count = 0;
    for (;;) {
        std::vector<Index> pt(m);
        bool distinct = true;
        for (unsigned i = 0; i < m; ++i) {
            pt[i] = S[idx[i]];
            for (unsigned j = 0; j < i; ++j) distinct &= pt[j] != pt[i];
        }
        if (distinct && naive_eval(f, pt) == 0) ++count;
        unsigned i = 0;
        while (i < m && ++idx[i] == S.size()) idx[i++] = 0;
        if (i == m) return count;
    }
}

}  // namespace

TEST(ElementarySymmetric, Examples) {
    const Field f5(5);
    const std::vector<Index> p34{3, 4}, p012{0, 1, 2};
    EXPECT_EQ(elementary_symmetric(f5, 1, p34), 2u);
    EXPECT_EQ(elementary_symmetric(f5, 2, p012), 2u);
    EXPECT_EQ(elementary_symmetric(f5, 0, p012), 1u);
    EXPECT_EQ(elementary_symmetric_all(f5, p012), (std::vector<Index>{1, 3, 2, 0}));
    EXPECT_THROW(elementary_symmetric(f5, 4, p012), std::out_of_range);
}

TEST(ElementarySymmetric, MatchesSubsetExpansion) {
    const Field f9 = Field::of_order(9);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Index> pt(1 + trial % 5);
        for (auto& x : pt) x = static_cast<Index>(rng() % 9);
        const auto all = elementary_symmetric_all(f9, pt);
        for (unsigned i = 0; i <= pt.size(); ++i) {
            EXPECT_EQ(all[i], naive_sigma(f9, i, pt));
            EXPECT_EQ(elementary_symmetric(f9, i, pt), all[i]);
        }
    }
}

TEST(SymPolyEvaluate, Examples) {
    const Field f5(5);
    const std::vector<Index> p01{0, 1}, p012{0, 1, 2};
    EXPECT_EQ(evaluate(SymPoly(f5, {1, 1, 1}), p01), 2u);
    // 3 s_1 + 2 s_2 with (s_1, s_2) = (3, 2): 9 + 4 = 13 = 3 mod 5
    EXPECT_EQ(evaluate(SymPoly(f5, {0, 3, 2, 0}), p012), naive_eval(SymPoly(f5, {0, 3, 2, 0}), p012));
    EXPECT_EQ(evaluate(SymPoly(f5, {0, 3, 2, 0}), p012), 3u);
    EXPECT_EQ(evaluate(SymPoly::zero(f5, 3), p012), 0u);
    EXPECT_THROW(evaluate(SymPoly(f5, {1, 1, 1}), p012), std::invalid_argument);
    EXPECT_THROW(SymPoly(f5, {1}), std::invalid_argument);
    EXPECT_THROW(SymPoly(f5, {1, 5}), std::out_of_range);
}

TEST(SymPolyDecompose, ShapeAndErrors) {
    const Field f5(5);
    auto [f1, f2] = decompose(SymPoly(f5, {1, 2, 3}));
    EXPECT_EQ(f1, SymPoly(f5, {1, 2}));
    EXPECT_EQ(f2, SymPoly(f5, {2, 3}));
    auto [c1, c2] = decompose(SymPoly(f5, {1, 0, 0}));
    EXPECT_EQ(c1, SymPoly(f5, {1, 0}));
    EXPECT_TRUE(c2.is_zero());
    EXPECT_THROW(decompose(SymPoly(f5, {1, 2})), std::invalid_argument);
}

TEST(SymPolyDecompose, IdentityHoldsPointwise) {
    const Field f5(5);
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const SymPoly f(f5, {static_cast<Index>(rng() % 5), static_cast<Index>(rng() % 5), static_cast<Index>(rng() % 5), static_cast<Index>(rng() % 5)});
        const auto [f1, f2] = decompose(f);
        for (Index x = 0; x < 5; ++x)
            for (Index y = 0; y < 5; ++y)
                for (Index z = 0; z < 5; ++z) {
                    const std::vector<Index> p{x, y, z}, head{x, y};
                    EXPECT_EQ(evaluate(f, p), f5.add(evaluate(f1, head), f5.mul(z, evaluate(f2, head))));
                }
    }
}

TEST(Classify, Examples) {
    using Tag = Classification::Tag;
    const Field f5(5);
    const auto c1 = classify(SymPoly(f5, {1, 1, 1}));
    EXPECT_EQ(c1.tag, Tag::type_one);
    EXPECT_EQ(*c1.alpha, 1u);
    EXPECT_EQ(*c1.root, 4u);
    const auto c2 = classify(SymPoly(f5, {0, 0, 1}));
    EXPECT_EQ(c2.tag, Tag::type_one);
    EXPECT_EQ(*c2.alpha, 0u);
    EXPECT_EQ(*c2.root, 0u);
    EXPECT_EQ(classify(SymPoly(f5, {1, 0, 1})).tag, Tag::type_two);
    EXPECT_EQ(classify(SymPoly(f5, {0, 0, 0})).tag, Tag::zero);
    EXPECT_EQ(classify(SymPoly(f5, {3, 0, 0})).tag, Tag::nonzero_constant);
    EXPECT_EQ(classify(SymPoly(f5, {3, 4, 0})).tag, Tag::type_two);
}

TEST(Classify, TypeOneIsProductOfLinearFactors) {
    // Every Type I polynomial a_m prod (x_i + alpha) evaluates as that product.
    const Field F = Field::of_order(8);
    for (Index a0 = 0; a0 < 8; ++a0)
        for (Index a1 = 0; a1 < 8; ++a1)
            for (Index a2 = 1; a2 < 8; ++a2) {
                const SymPoly f(F, {a0, a1, a2});
                const auto c = classify(f);
                if (c.tag != Classification::Tag::type_one) continue;
                for (Index x = 0; x < 8; ++x)
                    for (Index y = 0; y < 8; ++y) {
                        const std::vector<Index> p{x, y};
                        EXPECT_EQ(evaluate(f, p), F.mul(a2, F.mul(F.add(x, *c.alpha), F.add(y, *c.alpha))));
                    }
            }
}

TEST(DistinguishedTuples, LexicographicOrder) {
    const std::vector<Index> s{0, 1, 2};
    std::vector<std::vector<Index>> got;
    for_each_distinct_tuple(s, 2, [&](std::span<const Index> t) { got.emplace_back(t.begin(), t.end()); });
    EXPECT_EQ(got, (std::vector<std::vector<Index>>{{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}}));
    int count = 0;
    for_each_distinct_tuple(s, 4, [&](std::span<const Index>) { ++count; });
    EXPECT_EQ(count, 0);
}

TEST(ZeroCount, Examples) {
    const Field f5(5);
    EXPECT_EQ(count_distinguished_zeroes(SymPoly(f5, {0, 0, 1})), 8u);
    EXPECT_EQ(count_distinguished_zeroes(SymPoly(f5, {3, 0, 1})), 4u);
    EXPECT_EQ(count_distinguished_zeroes(SymPoly(f5, {4, 0, 1})), 2u);
    const auto zeros = distinguished_zeroes(SymPoly(f5, {4, 0, 1}), all_elements(f5));
    EXPECT_EQ(zeros, (std::vector<std::vector<Index>>{{2, 3}, {3, 2}}));
    const std::vector<Index> tiny{0};
    EXPECT_THROW(count_distinguished_zeroes(SymPoly(f5, {0, 0, 1}), tiny), std::invalid_argument);
    const std::vector<Index> dup{0, 0, 1};
    EXPECT_THROW(count_distinguished_zeroes(SymPoly(f5, {0, 0, 1}), dup), std::invalid_argument);
}

TEST(ZeroCount, MatchesNaiveScanAndDivisibility) {
    const Field f7(7);
    std::mt19937 rng(3);
    const std::vector<Index> S{0, 2, 3, 5, 6};
    for (int trial = 0; trial < 60; ++trial) {
        const SymPoly f(f7, {static_cast<Index>(rng() % 7), static_cast<Index>(rng() % 7), static_cast<Index>(rng() % 7), static_cast<Index>(rng() % 7)});
        const auto c = count_distinguished_zeroes(f, S);
        EXPECT_EQ(c, naive_zero_count(f, S));
        EXPECT_EQ(c % 6, 0u);
    }
}

TEST(PermCount, Examples) {
    EXPECT_EQ(perm_count(5, 2), 20u);
    EXPECT_EQ(perm_count(3, 5), 0u);
    EXPECT_EQ(perm_count(7, 0), 1u);
    EXPECT_EQ(perm_count(0, 0), 1u);
    EXPECT_THROW(perm_count(-1, 0), std::invalid_argument);
    EXPECT_EQ(binomial(5, 3), 10u);
    EXPECT_EQ(binomial(3, -1), 0u);
    EXPECT_EQ(gaussian_binomial(3, 1, 5), 31u);
    EXPECT_EQ(gaussian_binomial(4, 2, 5), 806u);
}

TEST(ZeroCountBound, Examples) {
    EXPECT_EQ(zero_count_bound(5, 2, true), 8u);
    EXPECT_EQ(zero_count_bound(5, 2, false), 5u);
    for (unsigned m = 1; m <= 5; ++m) EXPECT_EQ(zero_count_bound(m, m, true), zero_count_bound(m, m, false));
    EXPECT_THROW(zero_count_bound(2, 3, true), std::invalid_argument);
}

TEST(ClosedFormM2, Examples) {
    EXPECT_EQ(closed_form_count_m2(SymPoly(Field(5), {3, 0, 1})), 4u);
    const Field f4(2, 2);
    EXPECT_EQ(closed_form_count_m2(SymPoly(f4, {1, 1, 0})), 4u);
    EXPECT_EQ(closed_form_count_m2(SymPoly(f4, {0, 0, 0})), 12u);
    EXPECT_THROW(closed_form_count_m2(SymPoly(Field(2), {1, 1, 0})), std::invalid_argument);
    EXPECT_THROW(closed_form_count_m2(SymPoly(Field(5), {1, 1, 0, 1})), std::invalid_argument);
}

class ClosedFormM2Agreement : public ::testing::TestWithParam<unsigned> {};

TEST_P(ClosedFormM2Agreement, EqualsBruteForceOnEveryPolynomial) {
    const Field F = Field::of_order(GetParam());
    const Index q = F.order();
    std::map<std::uint64_t, std::uint64_t> hist;
    for (Index a0 = 0; a0 < q; ++a0)
        for (Index a1 = 0; a1 < q; ++a1)
            for (Index a2 = 0; a2 < q; ++a2) {
                const SymPoly f(F, {a0, a1, a2});
                const auto brute = count_distinguished_zeroes(f);
                EXPECT_EQ(closed_form_count_m2(f), brute) << a0 << "," << a1 << "," << a2;
                ++hist[brute];
            }
    EXPECT_EQ(hist, m2_zero_count_table(q));
}

INSTANTIATE_TEST_SUITE_P(Fields, ClosedFormM2Agreement, ::testing::Values(3u, 4u, 5u, 7u, 8u, 9u, 11u, 16u));

TEST(ZeroCountTable, KnownRows) {
    EXPECT_EQ(m2_zero_count_table(5), (std::map<std::uint64_t, std::uint64_t>{{0, 4}, {2, 40}, {4, 60}, {8, 20}, {20, 1}}));
    EXPECT_EQ(m2_zero_count_table(4), (std::map<std::uint64_t, std::uint64_t>{{0, 6}, {2, 36}, {4, 9}, {6, 12}, {12, 1}}));
    EXPECT_EQ(m2_zero_count_table(3), (std::map<std::uint64_t, std::uint64_t>{{0, 8}, {2, 12}, {4, 6}, {6, 1}}));
}
