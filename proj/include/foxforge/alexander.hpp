#pragma once

#include "foxforge/group_ring.hpp"
#include "foxforge/laurent.hpp"
#include "foxforge/presentation.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace foxforge {

/// Matrix of specialized Fox derivatives: entry (i, j) is the image of
/// d(r_i)/d(x_j) under x -> t^weight(x).
struct LaurentMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::vector<LaurentPoly>> entries;
    std::vector<long long> weights;

    const LaurentPoly& at(std::size_t i, std::size_t j) const { return entries[i][j]; }
};

/// Builds the matrix and asserts the specialized fundamental identity on
/// every row: sum_j entry(i, j) * (t^w_j - 1) == 0.
inline LaurentMatrix alexander_matrix(const Presentation& p, const std::vector<long long>& weights) {
    const AlphabetPtr& alpha = p.alphabet();
    if (static_cast<int>(weights.size()) != alpha->size())
        throw Error("alexander: weight map does not cover the alphabet");
    for (const Word& r : p.relators()) {
        long long sum = 0;
        for (const Letter& l : r.letters())
            sum += l.sign * weights[static_cast<std::size_t>(l.gen)];
        if (sum != 0)
            throw Error("alexander: weights do not kill relator " + r.str() +
                        " (signed weight-sum " + std::to_string(sum) + ")");
    }
    LaurentMatrix m;
    m.rows = p.relator_count();
    m.cols = static_cast<std::size_t>(alpha->size());
    m.weights = weights;
    m.entries.reserve(m.rows);
    for (const Word& r : p.relators()) {
        GroupRingElement elem = GroupRingElement::of_word(r);
        std::vector<LaurentPoly> row;
        row.reserve(m.cols);
        for (int j = 0; j < alpha->size(); ++j)
            row.push_back(specialize(fox_derivative(elem, j), weights));
        LaurentPoly identity_sum;
        for (int j = 0; j < alpha->size(); ++j) {
            LaurentPoly factor = LaurentPoly::t(weights[static_cast<std::size_t>(j)]) - LaurentPoly::one();
            identity_sum = identity_sum + row[static_cast<std::size_t>(j)] * factor;
        }
        if (!identity_sum.is_zero())
            throw Error("alexander: row identity failed for relator " + r.str());
        m.entries.push_back(std::move(row));
    }
    return m;
}

inline std::vector<long long> all_one_weights(const Presentation& p) {
    return std::vector<long long>(static_cast<std::size_t>(p.generator_count()), 1);
}

namespace detail {

/// Lexicographically next k-subset of {0..n-1}; returns false after the last.
inline bool next_subset(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] + (k - i) < n) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j)
                idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace detail

/// Normalized gcd over all k x k minors, row/column subsets enumerated in
/// lexicographic order with early exit once the running gcd hits 1.
/// k = 0 yields 1 (the empty minor); k > row count yields 0.
inline LaurentPoly minors_gcd(const LaurentMatrix& m, int k) {
    if (k < 0 || k > static_cast<int>(m.cols))
        throw Error("minors_gcd: size out of range");
    if (k == 0)
        return LaurentPoly::one();
    if (static_cast<std::size_t>(k) > m.rows)
        return LaurentPoly::zero();
    const std::size_t kk = static_cast<std::size_t>(k);
    std::vector<std::size_t> rows(kk);
    LaurentPoly g;
    for (std::size_t i = 0; i < kk; ++i)
        rows[i] = i;
    do {
        std::vector<std::size_t> cols(kk);
        for (std::size_t i = 0; i < kk; ++i)
            cols[i] = i;
        do {
            std::vector<std::vector<LaurentPoly>> sub(kk, std::vector<LaurentPoly>(kk));
            for (std::size_t i = 0; i < kk; ++i)
                for (std::size_t j = 0; j < kk; ++j)
                    sub[i][j] = m.entries[rows[i]][cols[j]];
            g = laurent_gcd(g, laurent_det(std::move(sub)));
            if (g.is_one())
                return g;
        } while (detail::next_subset(cols, m.cols));
    } while (detail::next_subset(rows, m.rows));
    return g;
}

struct AlexanderResult {
    LaurentMatrix matrix;
    LaurentPoly polynomial; // normalized
    int minor_size = 0;
};

/// First elementary ideal convention: the polynomial is the normalized gcd of
/// the (g-1) x (g-1) minors, g = generator count. With fewer relators than
/// minor_size the gcd is empty and the result is the zero polynomial, which is
/// reported as such rather than being normalized away.
inline AlexanderResult alexander_polynomial(const Presentation& p,
                                            const std::vector<long long>& weights) {
    AlexanderResult result;
    result.matrix = alexander_matrix(p, weights);
    result.minor_size = p.generator_count() - 1;
    result.polynomial = minors_gcd(result.matrix, result.minor_size);
    return result;
}

enum class Verdict { distinguished, inconclusive };

inline const char* to_string(Verdict v) {
    return v == Verdict::distinguished ? "distinguished" : "inconclusive";
}

/// Distinct normalized polynomials certify non-isomorphism; equality decides
/// nothing.
inline Verdict distinguish(const Presentation& p1, const std::vector<long long>& w1,
                           const Presentation& p2, const std::vector<long long>& w2) {
    LaurentPoly a = alexander_polynomial(p1, w1).polynomial;
    LaurentPoly b = alexander_polynomial(p2, w2).polynomial;
    return a == b ? Verdict::inconclusive : Verdict::distinguished;
}

} // namespace foxforge
