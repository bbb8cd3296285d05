#pragma once

#include "foxforge/laurent.hpp"
#include "foxforge/word.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace foxforge {

/// Element of the integral group ring of a free group: a finite formal sum of
/// reduced words with nonzero integer coefficients.
class GroupRingElement {
public:
    explicit GroupRingElement(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
        if (!alphabet_)
            throw Error("group ring: null alphabet");
    }

    static GroupRingElement zero(AlphabetPtr alphabet) {
        return GroupRingElement(std::move(alphabet));
    }

    static GroupRingElement of_word(const Word& w, Int coeff = 1) {
        GroupRingElement v(w.alphabet());
        v.add(w, coeff);
        return v;
    }

    static GroupRingElement unit(AlphabetPtr alphabet, Int coeff = 1) {
        return of_word(Word::identity(std::move(alphabet)), std::move(coeff));
    }

    const AlphabetPtr& alphabet() const { return alphabet_; }
    const std::map<Word, Int, WordOrder>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Word& w, const Int& coeff) {
        if (!compatible(alphabet_, w.alphabet()))
            throw Error("group ring: word over a different alphabet");
        if (coeff == 0)
            return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, coeff);
        } else {
            it->second += coeff;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
        return compatible(a.alphabet_, b.alphabet_) && a.terms_ == b.terms_;
    }

    friend GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b) {
        GroupRingElement r = a;
        for (const auto& [w, c] : b.terms_)
            r.add(w, c);
        return r;
    }

    friend GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b) {
        GroupRingElement r = a;
        for (const auto& [w, c] : b.terms_)
            r.add(w, -c);
        return r;
    }

    GroupRingElement operator-() const {
        GroupRingElement r(alphabet_);
        for (const auto& [w, c] : terms_)
            r.terms_.emplace(w, -c);
        return r;
    }

    /// Word products are reduced eagerly so term keys stay canonical.
    friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
        GroupRingElement r(a.alphabet_);
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_)
                r.add(wa * wb, ca * cb);
        return r;
    }

    friend GroupRingElement operator*(const GroupRingElement& a, const Int& s) {
        GroupRingElement r(a.alphabet_);
        if (s == 0)
            return r;
        for (const auto& [w, c] : a.terms_)
            r.terms_.emplace(w, c * s);
        return r;
    }

    /// Terms sorted by word length then letterwise, e.g.
    /// "-1*x1^-1 + 1*x1^-1*x2^-1".
    std::string str() const {
        if (terms_.empty())
            return "0";
        std::string out;
        bool first = true;
        for (const auto& [w, c] : terms_) {
            Int a = c;
            if (first) {
                if (a < 0) {
                    out += "-";
                    a = -a;
                }
            } else {
                out += a < 0 ? " - " : " + ";
                if (a < 0)
                    a = -a;
            }
            first = false;
            out += a.str();
            if (!w.is_identity())
                out += "*" + w.str();
        }
        return out;
    }

private:
    AlphabetPtr alphabet_;
    std::map<Word, Int, WordOrder> terms_;
};

/// The trivialization map: sum of coefficients.
inline Int augment(const GroupRingElement& v) {
    Int s = 0;
    for (const auto& [w, c] : v.terms())
        s += c;
    return s;
}

/// Fox derivative of a single word with respect to generator index g,
/// computed by peeling letters left to right: a positive occurrence of g at
/// position p contributes +prefix, a negative occurrence contributes
/// -(prefix * g^-1).
inline GroupRingElement fox_derivative_word(const Word& w, int gen) {
    GroupRingElement out(w.alphabet());
    Word prefix = Word::identity(w.alphabet());
    for (const Letter& l : w.letters()) {
        Word next = prefix * Word::letter(w.alphabet(), l.gen, l.sign);
        if (l.gen == gen) {
            if (l.sign > 0)
                out.add(prefix, 1);
            else
                out.add(next, -1); // prefix * g^-1
        }
        prefix = next;
    }
    return out;
}

/// Linear extension to the whole group ring.
inline GroupRingElement fox_derivative(const GroupRingElement& v, int gen) {
    if (gen < 0 || gen >= v.alphabet()->size())
        throw Error("fox derivative: generator not in alphabet");
    GroupRingElement out(v.alphabet());
    for (const auto& [w, c] : v.terms()) {
        GroupRingElement dw = fox_derivative_word(w, gen);
        out = out + dw * c;
    }
    return out;
}

inline GroupRingElement fox_derivative(const GroupRingElement& v, const Generator& g) {
    return fox_derivative(v, g.index);
}

/// v - augment(v) == sum_j d(v)/d(x_j) * (x_j - 1). Holds for every v; kept
/// as a test oracle.
inline bool fundamental_check(const GroupRingElement& v) {
    const AlphabetPtr& a = v.alphabet();
    GroupRingElement lhs = v - GroupRingElement::unit(a, augment(v));
    GroupRingElement rhs = GroupRingElement::zero(a);
    for (int j = 0; j < a->size(); ++j) {
        GroupRingElement xj_minus_1 = GroupRingElement::of_word(Word::letter(a, j)) -
                                      GroupRingElement::unit(a);
        rhs = rhs + fox_derivative(v, j) * xj_minus_1;
    }
    return lhs == rhs;
}

/// Ring map induced by generator -> t^weight, extended linearly.
inline LaurentPoly specialize(const GroupRingElement& v, const std::vector<long long>& weights) {
    if (static_cast<int>(weights.size()) != v.alphabet()->size())
        throw Error("specialize: weight map does not cover the alphabet");
    LaurentPoly out;
    for (const auto& [w, c] : v.terms()) {
        long long e = 0;
        for (const Letter& l : w.letters())
            e += l.sign * weights[static_cast<std::size_t>(l.gen)];
        out = out + LaurentPoly::monomial(e, c);
    }
    return out;
}

} // namespace foxforge
