#include <symcode/weights.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace symcode;

namespace {

WeightSpectrum spectrum_of(std::size_t n, std::map<std::size_t, std::uint64_t> entries) {
    WeightSpectrum s{std::vector<std::uint64_t>(n + 1, 0)};
    for (auto [w, c] : entries) s.counts[w] = c;
    return s;
}

// Oracle: 2-dimensional subcodes counted through pairs of codewords, each subcode keyed by the
// sorted list of its codewords, without echelon enumeration.
std::map<std::size_t, std::uint64_t> pairwise_two_dim_spectrum(const LinearCode& code) {
    const Field& F = code.field();
    const unsigned q = code.q();
    std::vector<std::vector<Index>> words;
    const auto k = code.rows();
    std::vector<Index> msg(k, 0);
    for (std::uint64_t ord = 0; ord < ipow(q, static_cast<unsigned>(k)); ++ord) {
        std::uint64_t x = ord;
        for (std::size_t i = k; i-- > 0;) {
            msg[i] = static_cast<Index>(x % q);
            x /= q;
        }
        std::vector<Index> coeffs(msg.begin(), msg.end());
        words.push_back(encode(SymPoly(F, coeffs), code));
    }
    std::set<std::vector<std::vector<Index>>> seen;
    std::map<std::size_t, std::uint64_t> hist;
    for (std::size_t a = 1; a < words.size(); ++a)
        for (std::size_t b = a + 1; b < words.size(); ++b) {
            std::set<std::vector<Index>> span;
            for (Index s = 0; s < q; ++s)
                for (Index t = 0; t < q; ++t) {
                    std::vector<Index> w(code.length());
                    for (std::size_t j = 0; j < w.size(); ++j) w[j] = F.add(F.mul(s, words[a][j]), F.mul(t, words[b][j]));
                    span.insert(w);
                }
            if (span.size() != std::size_t{q} * q) continue;
            std::vector<std::vector<Index>> key(span.begin(), span.end());
            if (!seen.insert(key).second) continue;
            std::size_t support = 0;
            for (std::size_t j = 0; j < code.length(); ++j) {
                bool nz = false;
                for (const auto& w : key) nz |= w[j] != 0;
                support += nz;
            }
            ++hist[support];
        }
    return hist;
}

}  // namespace

TEST(WeightDistribution, MTwoExamples) {
    EXPECT_EQ(weight_distribution(make_code(Field(3), 2, SetKind::full)), spectrum_of(6, {{0, 1}, {2, 6}, {4, 12}, {6, 8}}));
    EXPECT_EQ(weight_distribution(make_code(Field(5), 2, SetKind::full)),
              spectrum_of(20, {{0, 1}, {12, 20}, {16, 60}, {18, 40}, {20, 4}}));
    // The (q-1)^2 words of the even case sit at weight q(q-2) = 8, not q(q-1)-1 = 11.
    EXPECT_EQ(weight_distribution(make_code(Field(2, 2), 2, SetKind::full)),
              spectrum_of(12, {{0, 1}, {6, 12}, {8, 9}, {10, 36}, {12, 6}}));
}

TEST(WeightDistribution, ClosedForms) {
    const auto a7 = closed_form_m2_distribution(7);
    EXPECT_EQ(a7, spectrum_of(42, {{0, 1}, {30, 42}, {36, 168}, {38, 126}, {42, 6}}));
    EXPECT_EQ(a7.total(), 343u);
    EXPECT_EQ(closed_form_m2_distribution(8), spectrum_of(56, {{0, 1}, {42, 56}, {48, 49}, {50, 392}, {56, 14}}));
    EXPECT_THROW(closed_form_m2_distribution(2), std::invalid_argument);
    for (unsigned q : {3u, 4u, 5u, 7u, 8u, 9u, 11u})
        EXPECT_EQ(weight_distribution(make_code(Field::of_order(q), 2, SetKind::full), 2), closed_form_m2_distribution(q)) << q;
}

TEST(WeightDistribution, RejectsNonInjective) {
    EXPECT_THROW(weight_distribution(make_code(Field(3), 3, SetKind::full)), std::invalid_argument);
}

TEST(Echelon, CountsAreGaussianBinomials) {
    for (unsigned q : {2u, 3u, 4u})
        for (unsigned k = 1; k <= 4; ++k)
            for (unsigned r = 0; r <= k; ++r) {
                const EchelonEnumerator en(q, r, k);
                EXPECT_EQ(en.count(), gaussian_binomial(k, r, q));
            }
    // Every enumerated matrix is in RREF with full row rank, and all are distinct.
    const Field F(3);
    const EchelonEnumerator en(3, 2, 4);
    std::set<std::vector<Index>> seen;
    for (std::uint64_t o = 0; o < en.count(); ++o) {
        Matrix m = en.matrix(o);
        Matrix reduced = m;
        EXPECT_EQ(row_reduce(F, reduced), 2u);
        EXPECT_EQ(reduced, m);
        seen.insert(m.data);
    }
    EXPECT_EQ(seen.size(), en.count());
}

TEST(HigherSpectra, CTwoQ5) {
    const auto code = make_code(Field(5), 2, SetKind::full);
    const auto s2 = higher_weight_spectrum(code, 2);
    EXPECT_EQ(s2.spectrum, spectrum_of(20, {{18, 10}, {20, 21}}));
    EXPECT_EQ(higher_weight_spectrum(code, 3).spectrum, spectrum_of(20, {{20, 1}}));
    const auto a = weight_distribution(code);
    const auto s1 = higher_weight_spectrum(code, 1);
    for (std::size_t w = 1; w <= 20; ++w) EXPECT_EQ(s1.spectrum[w] * 4, a[w]);
    EXPECT_THROW(higher_weight_spectrum(code, 4), std::invalid_argument);
}

TEST(HigherSpectra, MatchPairwiseOracle) {
    for (unsigned q : {3u, 4u}) {
        const auto code = make_code(Field::of_order(q), 2, SetKind::full);
        EXPECT_EQ(higher_weight_spectrum(code, 2).spectrum.nonzero(), pairwise_two_dim_spectrum(code)) << q;
    }
    const auto c = make_code(Field(3), 2, SetKind::orbit);
    EXPECT_EQ(higher_weight_spectrum(c, 2).spectrum.nonzero(), pairwise_two_dim_spectrum(c));
}

TEST(HigherSpectra, ClosedFormsAndTotals) {
    for (unsigned q : {3u, 4u, 5u, 7u, 8u}) {
        const auto code = make_code(Field::of_order(q), 2, SetKind::full);
        const auto all = all_higher_spectra(code);
        ASSERT_EQ(all.size(), 4u);
        for (unsigned r = 0; r <= 3; ++r) {
            EXPECT_EQ(all[r].spectrum, closed_form_m2_higher(q, r).spectrum) << "q=" << q << " r=" << r;
            EXPECT_EQ(all[r].spectrum.total(), gaussian_binomial(3, r, q));
        }
    }
}

TEST(Ghw, Examples) {
    EXPECT_EQ(generalized_hamming_weights(make_code(Field(5), 2, SetKind::full)).d, (std::vector<std::size_t>{12, 18, 20}));
    EXPECT_EQ(generalized_hamming_weights(make_code(Field(5), 3, SetKind::orbit)).d, (std::vector<std::size_t>{4, 7, 9, 10}));
    EXPECT_EQ(generalized_hamming_weights(make_code(Field(2, 2), 3, SetKind::full)).d, (std::vector<std::size_t>{6, 12, 18, 24}));
}

TEST(Ghw, WitnessesAttainWeights) {
    const auto code = make_code(Field(7), 3, SetKind::orbit);
    const auto g = generalized_hamming_weights(code, 2);
    for (std::size_t r = 0; r < g.d.size(); ++r) {
        const Matrix& basis = g.witnesses[r];
        EXPECT_EQ(rank(code.field(), basis), r + 1);
        std::vector<char> support(code.length(), 0);
        for (std::size_t i = 0; i < basis.rows; ++i) {
            const auto word = encode(SymPoly(code.field(), {basis.row(i).begin(), basis.row(i).end()}), code);
            for (std::size_t j = 0; j < word.size(); ++j) support[j] |= word[j] != 0;
        }
        EXPECT_EQ(static_cast<std::size_t>(std::count(support.begin(), support.end(), 1)), g.d[r]);
    }
}

TEST(Ghw, GeometricAgreesWithSupportSweep) {
    for (unsigned q : {3u, 4u, 5u, 7u})
        for (unsigned m = 1; m < q && m <= 3; ++m)
            for (auto kind : {SetKind::full, SetKind::orbit}) {
                const auto code = make_code(Field::of_order(q), m, kind);
                EXPECT_EQ(ghw_geometric(code), generalized_hamming_weights(code).d) << q << " " << m;
            }
}

TEST(Ghw, PlaneStatisticsQ5M3) {
    const auto code = make_code(Field(5), 3, SetKind::orbit);
    EXPECT_EQ(ghw_geometric(code), (std::vector<std::size_t>{4, 7, 9, 10}));
    const auto planes = subspace_incidences(code, 1);
    ASSERT_EQ(planes.size(), 156u);
    EXPECT_EQ(std::count(planes.begin(), planes.end(), 6u), 5);
    EXPECT_EQ(std::count(planes.begin(), planes.end(), 5u), 0);
    EXPECT_EQ(std::count(planes.begin(), planes.end(), 4u), 10);
    const auto lines = subspace_incidences(code, 2);
    EXPECT_EQ(*std::max_element(lines.begin(), lines.end()), 3u);
}

TEST(GhwUpperBound, Examples) {
    EXPECT_EQ(ghw_upper_bound(5, 3, 2, SetKind::orbit), 7u);
    EXPECT_EQ(ghw_upper_bound(5, 2, 1, SetKind::full), 12u);
    for (unsigned q : {4u, 5u, 7u})
        for (unsigned m = 1; m < q; ++m) {
            EXPECT_EQ(ghw_upper_bound(q, m, m, SetKind::full), factorial(m) * (binomial(q, m) - 1));
            EXPECT_EQ(ghw_upper_bound(q, m, m + 1, SetKind::orbit), binomial(q, m));
        }
    EXPECT_THROW(ghw_upper_bound(5, 2, 0, SetKind::full), std::invalid_argument);
    EXPECT_THROW(ghw_upper_bound(5, 5, 1, SetKind::full), std::invalid_argument);
}

TEST(Extension, Q7S2) {
    const auto code = make_code(Field(7), 2, SetKind::full);
    const auto spectra = all_higher_spectra(code);
    const auto p = extension_spectrum(spectra, 7, 49);
    EXPECT_EQ(p[30], 336u);
    EXPECT_EQ(p, closed_form_m2_extension(7, 49));
    // Sum check by independent summation of the spectra: Q^3 words in total.
    std::uint64_t total = 0;
    for (auto c : p.counts) total += c;
    EXPECT_EQ(total, 49u * 49u * 49u);
    EXPECT_EQ(extension_spectrum(spectra, 7, 7), weight_distribution(code));
    EXPECT_THROW(extension_spectrum(spectra, 7, 50), std::invalid_argument);
    EXPECT_THROW(extension_spectrum(spectra, 7, 1), std::invalid_argument);
}

TEST(Extension, SumIdentityQ5) {
    // The extended code has Q^k words in total; checked by summing P_w over w.
    const auto code = make_code(Field(5), 3, SetKind::orbit);
    const auto spectra = all_higher_spectra(code);
    const auto p = extension_spectrum(spectra, 5, 25);
    std::uint64_t total = 0;
    for (auto c : p.counts) total += c;
    EXPECT_EQ(total, ipow(25, 4));
    EXPECT_EQ(p[0], 1u);
}

TEST(Extension, ClosedFormNeedsOddQAtLeast7) {
    EXPECT_THROW(closed_form_m2_extension(5, 25), std::invalid_argument);
    EXPECT_THROW(closed_form_m2_extension(8, 64), std::invalid_argument);
    EXPECT_NO_THROW(closed_form_m2_extension(9, 729));
}
