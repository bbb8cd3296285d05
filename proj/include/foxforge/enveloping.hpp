#pragma once

#include "foxforge/multipoly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace foxforge {

/// Class-2 nilpotent Lie algebra over Q with a non-central basis x_1..x_n and
/// a central basis y_1..y_r. Only [x_i, x_j] for i < j is stored; the reversed
/// bracket is derived by negation, every [x, y] and [y, y] vanishes, and
/// Jacobi is automatic because all double brackets are central.
class NilLie2 {
public:
    NilLie2(int x_count, int y_count) : x_count_(x_count), y_count_(y_count) {
        if (x_count < 1 || y_count < 0)
            throw Error("nil2: invalid basis sizes");
    }

    int x_count() const { return x_count_; }
    int y_count() const { return y_count_; }

    void set_bracket(int i, int j, std::vector<Rat> coeffs) {
        if (i < 0 || j < 0 || i >= x_count_ || j >= x_count_ || i >= j)
            throw Error("nil2: set_bracket requires 0 <= i < j < x_count");
        if (static_cast<int>(coeffs.size()) != y_count_)
            throw Error("nil2: bracket vector has wrong length");
        bool all_zero = true;
        for (const Rat& c : coeffs)
            if (c != 0)
                all_zero = false;
        if (all_zero)
            bracket_.erase({i, j});
        else
            bracket_[{i, j}] = std::move(coeffs);
    }

    /// [x_i, x_j] as a polynomial in the central variables; antisymmetric.
    MultiPoly bracket(int i, int j) const {
        if (i == j)
            return MultiPoly::zero(y_count_);
        int sign = 1;
        if (i > j) {
            std::swap(i, j);
            sign = -1;
        }
        auto it = bracket_.find({i, j});
        MultiPoly out = MultiPoly::zero(y_count_);
        if (it == bracket_.end())
            return out;
        for (int k = 0; k < y_count_; ++k)
            out = out + MultiPoly::variable(y_count_, k) * (it->second[static_cast<std::size_t>(k)] * sign);
        return out;
    }

private:
    int x_count_;
    int y_count_;
    std::map<std::pair<int, int>, std::vector<Rat>> bracket_;
};

/// Element of the universal enveloping algebra in PBW normal form: a finite
/// sum of ordered x-monomials (exponent vectors) with coefficients that are
/// polynomials in the central y variables.
class UElement {
public:
    UElement(int x_count, int y_count) : x_count_(x_count), y_count_(y_count) {}

    static UElement zero(const NilLie2& L) { return UElement(L.x_count(), L.y_count()); }

    static UElement central(const NilLie2& L, const MultiPoly& p) {
        UElement u(L.x_count(), L.y_count());
        u.add(std::vector<int>(static_cast<std::size_t>(L.x_count()), 0), p);
        return u;
    }

    int x_count() const { return x_count_; }
    int y_count() const { return y_count_; }
    const std::map<std::vector<int>, MultiPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const std::vector<int>& exps, const MultiPoly& coeff) {
        if (static_cast<int>(exps.size()) != x_count_)
            throw Error("u-element: exponent vector has wrong length");
        if (coeff.is_zero())
            return;
        auto it = terms_.find(exps);
        if (it == terms_.end()) {
            terms_.emplace(exps, coeff);
        } else {
            it->second = it->second + coeff;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    friend UElement operator+(const UElement& a, const UElement& b) {
        UElement r = a;
        for (const auto& [e, c] : b.terms_)
            r.add(e, c);
        return r;
    }

    friend UElement operator-(const UElement& a, const UElement& b) {
        UElement r = a;
        for (const auto& [e, c] : b.terms_)
            r.add(e, -c);
        return r;
    }

    friend bool operator==(const UElement& a, const UElement& b) {
        return a.x_count_ == b.x_count_ && a.y_count_ == b.y_count_ && a.terms_ == b.terms_;
    }

    std::string str() const {
        if (terms_.empty())
            return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first)
                out += " + ";
            first = false;
            std::string mono;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0)
                    continue;
                if (!mono.empty())
                    mono += "*";
                mono += "x" + std::to_string(i + 1);
                if (e[i] != 1)
                    mono += "^" + std::to_string(e[i]);
            }
            if (mono.empty())
                out += "(" + c.str() + ")";
            else
                out += mono + "*(" + c.str() + ")";
        }
        return out;
    }

private:
    int x_count_;
    int y_count_;
    std::map<std::vector<int>, MultiPoly> terms_;
};

namespace detail {

/// Straightens an arbitrary x-letter sequence: scanning for the first
/// adjacent descending pair x_b x_a (b > a) and rewriting it as
/// x_a x_b - [x_a, x_b] until the sequence is nondecreasing.
inline void straighten(const NilLie2& L, std::vector<int> seq, const MultiPoly& coeff, UElement& out) {
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        if (seq[i] > seq[i + 1]) {
            int a = seq[i + 1], b = seq[i];
            std::vector<int> swapped = seq;
            std::swap(swapped[i], swapped[i + 1]);
            straighten(L, std::move(swapped), coeff, out);
            std::vector<int> dropped;
            dropped.reserve(seq.size() - 2);
            for (std::size_t j = 0; j < seq.size(); ++j)
                if (j != i && j != i + 1)
                    dropped.push_back(seq[j]);
            MultiPoly c = coeff * L.bracket(a, b);
            if (!c.is_zero())
                straighten(L, std::move(dropped), -c, out);
            return;
        }
    }
    std::vector<int> exps(static_cast<std::size_t>(L.x_count()), 0);
    for (int g : seq)
        ++exps[static_cast<std::size_t>(g)];
    out.add(exps, coeff);
}

inline std::vector<int> exps_to_seq(const std::vector<int>& exps) {
    std::vector<int> seq;
    for (std::size_t i = 0; i < exps.size(); ++i)
        for (int k = 0; k < exps[i]; ++k)
            seq.push_back(static_cast<int>(i));
    return seq;
}

} // namespace detail

/// Normal form of a product of x-letters times a central polynomial.
inline UElement u_monomial(const NilLie2& L, const std::vector<int>& seq, const MultiPoly& coeff) {
    for (int g : seq)
        if (g < 0 || g >= L.x_count())
            throw Error("u_monomial: letter out of range");
    UElement out = UElement::zero(L);
    detail::straighten(L, seq, coeff, out);
    return out;
}

/// Product in U(L): x-sequences concatenate (y coefficients are central and
/// just multiply), then the straightening relation x_b x_a = x_a x_b -
/// [x_a, x_b] is applied exhaustively.
inline UElement u_multiply(const UElement& a, const UElement& b, const NilLie2& L) {
    if (a.x_count() != L.x_count() || b.x_count() != L.x_count() || a.y_count() != L.y_count() ||
        b.y_count() != L.y_count())
        throw Error("u_multiply: dimension mismatch");
    UElement out = UElement::zero(L);
    for (const auto& [ea, ca] : a.terms()) {
        std::vector<int> seq_a = detail::exps_to_seq(ea);
        for (const auto& [eb, cb] : b.terms()) {
            std::vector<int> seq = seq_a;
            for (int g : detail::exps_to_seq(eb))
                seq.push_back(g);
            out = out + u_monomial(L, seq, ca * cb);
        }
    }
    return out;
}

/// Hard cap on the alternating-sum size; the factorial blowup above this is
/// never needed here (the 12-dimensional family uses n = 6).
inline constexpr int kMaxAlternatingSum = 8;

/// I(x_1, ..., x_n) = sum over all permutations of sign(p) * x_{p(1)} ... x_{p(n)},
/// fully straightened.
inline UElement scheuneman_invariant(const NilLie2& L) {
    const int n = L.x_count();
    if (n > kMaxAlternatingSum)
        throw Error("scheuneman invariant: x-basis larger than the configured cap");
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    UElement out = UElement::zero(L);
    const MultiPoly one = MultiPoly::constant(L.y_count(), 1);
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j])
                    ++inversions;
        out = out + u_monomial(L, perm, inversions % 2 == 0 ? one : -one);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

struct CentralPart {
    MultiPoly polynomial;
    bool non_central_remainder = false;
};

/// Coefficient of the empty x-monomial, plus a flag for leftover terms.
inline CentralPart central_part(const UElement& u) {
    CentralPart out{MultiPoly::zero(u.y_count()), false};
    for (const auto& [e, c] : u.terms()) {
        bool empty = true;
        for (int k : e)
            if (k != 0)
                empty = false;
        if (empty)
            out.polynomial = c;
        else
            out.non_central_remainder = true;
    }
    return out;
}

/// Signed reference to one of the central basis elements.
struct AlphaSelection {
    int sign = 1;    // +1 or -1
    int y_index = 0; // 0-based
};

namespace detail {

inline AlphaSelection alpha_from_bracket(int slot, int p, int q) {
    // y1 = [t1,t2], y2 = [t1,t3], y3 = [t2,t3]
    auto basic = [](int a, int b) -> AlphaSelection {
        if (a > b)
            return AlphaSelection{-1, (b == 1 && a == 2) ? 0 : (b == 1 && a == 3) ? 1 : 2};
        return AlphaSelection{+1, (a == 1 && b == 2) ? 0 : (a == 1 && b == 3) ? 1 : 2};
    };
    if (p < 1 || p > 3 || q < 1 || q > 3 || p == q)
        throw Error("alpha: bracket indices must be distinct and in 1..3");
    AlphaSelection sel = basic(p, q);
    static const std::vector<std::vector<std::pair<int, int>>> allowed = {
        {{1, 2}, {2, 3}, {1, 3}}, // slot 1
        {{2, 1}, {2, 3}, {1, 3}}, // slot 2
        {{1, 2}, {3, 2}, {3, 1}}, // slot 3
    };
    for (const auto& [a, b] : allowed[static_cast<std::size_t>(slot)])
        if (a == p && b == q)
            return sel;
    throw Error("alpha: [t" + std::to_string(p) + ",t" + std::to_string(q) +
                "] is not in the allowed set for slot " + std::to_string(slot + 1));
}

} // namespace detail

/// Parses "[t2,t3]" for the given slot (0, 1 or 2), enforcing the allowed set.
inline AlphaSelection parse_alpha(int slot, const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    if (s.size() != 7 || s[0] != '[' || s[1] != 't' || s[3] != ',' || s[4] != 't' || s[6] != ']')
        throw Error("alpha: expected a bracket of the form [ti,tj], got '" + text + "'");
    int p = s[2] - '0', q = s[5] - '0';
    return detail::alpha_from_bracket(slot, p, q);
}

/// The 12-dimensional family: x-basis (t1, t2, t3, u1, u2, u3), central basis
/// y1 = [t1,t2], y2 = [t1,t3], y3 = [t2,t3], y4 = [u1,u2], y5 = [u1,u3],
/// y6 = [u2,u3], [t_i, u_i] = alpha_i, all cross brackets zero.
inline NilLie2 build_L_alpha(const AlphaSelection& a1, const AlphaSelection& a2,
                             const AlphaSelection& a3) {
    NilLie2 L(6, 6);
    auto unit = [](int k, int sign) {
        std::vector<Rat> v(6, Rat(0));
        v[static_cast<std::size_t>(k)] = sign;
        return v;
    };
    L.set_bracket(0, 1, unit(0, +1)); // [t1, t2] = y1
    L.set_bracket(0, 2, unit(1, +1)); // [t1, t3] = y2
    L.set_bracket(1, 2, unit(2, +1)); // [t2, t3] = y3
    L.set_bracket(3, 4, unit(3, +1)); // [u1, u2] = y4
    L.set_bracket(3, 5, unit(4, +1)); // [u1, u3] = y5
    L.set_bracket(4, 5, unit(5, +1)); // [u2, u3] = y6
    L.set_bracket(0, 3, unit(a1.y_index, a1.sign)); // [t1, u1]
    L.set_bracket(1, 4, unit(a2.y_index, a2.sign)); // [t2, u2]
    L.set_bracket(2, 5, unit(a3.y_index, a3.sign)); // [t3, u3]
    return L;
}

/// For a nonzero monomial c * y^e, the multiset of positive exponents (equal
/// to the multiplicities of the linear factors, which survive invertible
/// substitution and scaling). Everything else is undefined.
inline std::optional<std::vector<int>> hessian_signature(const MultiPoly& f) {
    if (!f.is_monomial())
        return std::nullopt;
    std::vector<int> sig;
    for (int e : f.terms().begin()->first)
        if (e > 0)
            sig.push_back(e);
    std::sort(sig.begin(), sig.end());
    return sig;
}

enum class AlgebraVerdict { distinguished, inconclusive };

inline const char* to_string(AlgebraVerdict v) {
    return v == AlgebraVerdict::distinguished ? "distinguished" : "inconclusive";
}

/// Compares the Hessian signatures of two cubic forms. Sound for
/// non-equivalence only; equality of signatures decides nothing.
inline AlgebraVerdict compare_forms(const MultiPoly& f, const MultiPoly& g) {
    auto sf = hessian_signature(hessian(f));
    auto sg = hessian_signature(hessian(g));
    if (sf && sg && *sf != *sg)
        return AlgebraVerdict::distinguished;
    return AlgebraVerdict::inconclusive;
}

/// Invariant -> central part -> Hessian -> signature. The invariant route is
/// only valid when I is purely central, so any non-central remainder forces
/// `inconclusive`.
inline AlgebraVerdict distinguish_algebras(const NilLie2& l1, const NilLie2& l2) {
    if (l1.x_count() != l2.x_count() || l1.y_count() != l2.y_count())
        throw Error("distinguish: algebras have different basis shapes");
    CentralPart c1 = central_part(scheuneman_invariant(l1));
    CentralPart c2 = central_part(scheuneman_invariant(l2));
    if (c1.non_central_remainder || c2.non_central_remainder)
        return AlgebraVerdict::inconclusive;
    return compare_forms(c1.polynomial, c2.polynomial);
}

} // namespace foxforge
