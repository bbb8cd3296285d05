#pragma once

#include "foxforge/endomorphism.hpp"
#include "foxforge/syntax.hpp"
#include "foxforge/word.hpp"

#include <string>
#include <utility>
#include <vector>

namespace foxforge {

/// Finite group presentation: an ordered alphabet plus a list of freely
/// reduced, nonempty relator words over it.
class Presentation {
public:
    Presentation(AlphabetPtr alphabet, std::vector<Word> relators)
        : alphabet_(std::move(alphabet)), relators_(std::move(relators)) {
        if (!alphabet_)
            throw Error("presentation: null alphabet");
        for (const Word& r : relators_) {
            if (!compatible(r.alphabet(), alphabet_))
                throw Error("presentation: relator over a different alphabet");
            if (r.is_identity())
                throw Error("presentation: empty relator carries no information");
        }
    }

    const AlphabetPtr& alphabet() const { return alphabet_; }
    const std::vector<Word>& relators() const { return relators_; }
    int generator_count() const { return alphabet_->size(); }
    std::size_t relator_count() const { return relators_.size(); }

    friend bool operator==(const Presentation& a, const Presentation& b) {
        return compatible(a.alphabet_, b.alphabet_) && a.relators_ == b.relators_;
    }

private:
    AlphabetPtr alphabet_;
    std::vector<Word> relators_;
};

/// pres := "gens:" namelist ";" "rels:" rellist?
/// Relators may be separated by ';' or ','; a comma inside "[u,v]" belongs to
/// the commutator.
inline Presentation parse_presentation(const std::string& text) {
    using detail::Token;
    detail::Lexer lex(text);

    auto expect_keyword = [&](const char* kw) {
        Token t = lex.next();
        if (t.kind != Token::Kind::Name || t.text != kw)
            throw ParseError(std::string("expected '") + kw + ":'", t.line, t.column);
        Token colon = lex.next();
        if (!detail::is_punct(colon, ':'))
            throw ParseError(std::string("expected ':' after '") + kw + "'", colon.line, colon.column);
    };

    expect_keyword("gens");
    std::vector<std::string> names;
    for (;;) {
        Token t = lex.next();
        if (t.kind != Token::Kind::Name)
            throw ParseError("expected a generator name", t.line, t.column);
        names.push_back(t.text);
        if (detail::is_punct(lex.peek(), ',')) {
            lex.next();
            continue;
        }
        break;
    }
    {
        Token t = lex.next();
        if (!detail::is_punct(t, ';'))
            throw ParseError("expected ';' after the generator list", t.line, t.column);
    }
    AlphabetPtr alphabet = Alphabet::make(names);
    expect_keyword("rels");

    std::vector<Word> relators;
    if (lex.peek().kind != Token::Kind::End) {
        detail::WordParser parser(lex, alphabet);
        for (;;) {
            Token at = lex.peek();
            Word r = parser.parse_word();
            if (r.is_identity())
                throw ParseError("relator reduces to the empty word", at.line, at.column);
            relators.push_back(r);
            const Token& t = lex.peek();
            if (detail::is_punct(t, ';') || detail::is_punct(t, ',')) {
                lex.next();
                continue;
            }
            if (t.kind == Token::Kind::End)
                break;
            throw ParseError("expected ';', ',' or end of input after a relator", t.line, t.column);
        }
    }
    return Presentation(std::move(alphabet), std::move(relators));
}

/// Canonical emission: generators in alphabet order, '*' separators, '^-1'
/// for inverses, relators joined by ';'. parse(print(p)) == p.
inline std::string print_presentation(const Presentation& p) {
    std::string out = "gens: ";
    for (int i = 0; i < p.generator_count(); ++i) {
        if (i)
            out += ", ";
        out += p.alphabet()->name(i);
    }
    out += "; rels:";
    for (std::size_t i = 0; i < p.relator_count(); ++i) {
        out += i ? "; " : " ";
        out += p.relators()[i].str();
    }
    return out;
}

namespace families {

/// Generators e_i_j (i != j), ordered lexicographically by (i, j). The three
/// relation schemas are instantiated over all tuples of pairwise-distinct
/// indices, each relation A = B emitted as the relator A*B^-1:
///   e_ij e_kl = e_kl e_ij            (i, j, k, l distinct)
///   e_ij e_kj = e_kj e_ij            (i, j, k distinct)
///   (e_ij e_kj) e_ik = e_ik (e_ij e_kj)
/// Relator count: n(n-1)(n-2)(n-3) + 2n(n-1)(n-2).
inline Presentation mccool(int n) {
    if (n < 2)
        throw Error("mccool: requires n >= 2");
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j)
                names.push_back("e_" + std::to_string(i) + "_" + std::to_string(j));
    AlphabetPtr a = Alphabet::make(names);
    auto e = [&](int i, int j) {
        return Word::letter(a, a->index_of("e_" + std::to_string(i) + "_" + std::to_string(j)));
    };
    std::vector<Word> relators;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                for (int l = 1; l <= n; ++l) {
                    if (i == j || i == k || i == l || j == k || j == l || k == l)
                        continue;
                    Word A = e(i, j) * e(k, l);
                    Word B = e(k, l) * e(i, j);
                    relators.push_back(A * B.inverse());
                }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                if (i == j || i == k || j == k)
                    continue;
                Word A = e(i, j) * e(k, j);
                Word B = e(k, j) * e(i, j);
                relators.push_back(A * B.inverse());
            }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                if (i == j || i == k || j == k)
                    continue;
                Word A = e(i, j) * e(k, j) * e(i, k);
                Word B = e(i, k) * e(i, j) * e(k, j);
                relators.push_back(A * B.inverse());
            }
    return Presentation(a, std::move(relators));
}

namespace impl {

/// One defining relation of the pure braid group: the conjugate of a_kj by
/// a_rs^nu (r < s < j required), as the relator LHS * RHS^-1. The case split
/// on how (r, s) meets (k, j) picks the schema.
inline Word pure_braid_relator(const AlphabetPtr& alpha, int r, int s, int k, int j, int nu) {
    auto gen = [&](int p, int q) {
        return Word::letter(alpha, alpha->index_of("a_" + std::to_string(p) + "_" + std::to_string(q)));
    };
    Word ars = gen(r, s);
    Word akj = gen(k, j);
    Word lhs = ars.pow(-nu) * akj * ars.pow(nu);
    Word rhs = Word::identity(alpha);
    if (s == k) {
        // a_ik^-nu a_kj a_ik^nu = (a_ij a_kj)^nu a_kj (a_ij a_kj)^-nu, i = r
        Word w = gen(r, j) * akj;
        rhs = w.pow(nu) * akj * w.pow(-nu);
    } else if (r == k) {
        // a_km^-nu a_kj a_km^nu = (a_kj a_mj)^nu a_kj (a_kj a_mj)^-nu, m = s
        Word w = akj * gen(s, j);
        rhs = w.pow(nu) * akj * w.pow(-nu);
    } else if (r < k && k < s) {
        // a_im^-nu a_kj a_im^nu = [a_ij^-nu, a_mj^-nu]^nu a_kj [...]^-nu
        Word w = commutator(gen(r, j).pow(-nu), gen(s, j).pow(-nu));
        rhs = w.pow(nu) * akj * w.pow(-nu);
    } else {
        // disjoint or nested index pairs commute
        rhs = akj;
    }
    return lhs * rhs.inverse();
}

} // namespace impl

/// Generators a_i_j (i < j), ordered lexicographically. For every conjugated
/// generator a_kj and every a_rs with s < j, both nu = +1 and nu = -1
/// instances are emitted, grouped by (k, j), then (r, s), then nu.
inline Presentation pure_braid(int n) {
    if (n < 2)
        throw Error("pure_braid: requires n >= 2");
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            names.push_back("a_" + std::to_string(i) + "_" + std::to_string(j));
    AlphabetPtr a = Alphabet::make(names);
    std::vector<Word> relators;
    for (int k = 1; k <= n; ++k)
        for (int j = k + 1; j <= n; ++j)
            for (int r = 1; r <= n; ++r)
                for (int s = r + 1; s < j; ++s)
                    for (int nu : {+1, -1})
                        relators.push_back(impl::pure_braid_relator(a, r, s, k, j, nu));
    return Presentation(a, std::move(relators));
}

/// Rank-5 presentation of the complement factor used by the separation
/// example, over e_3_1, e_3_2, e_4_1, e_4_2, e_4_3.
inline Presentation paper_g() {
    AlphabetPtr a = Alphabet::make({"e_3_1", "e_3_2", "e_4_1", "e_4_2", "e_4_3"});
    auto e = [&](const char* name) { return Word::letter(a, a->index_of(name)); };
    Word e31 = e("e_3_1"), e32 = e("e_3_2"), e41 = e("e_4_1"), e42 = e("e_4_2"), e43 = e("e_4_3");
    std::vector<Word> relators = {
        e41.inverse() * e31.inverse() * e41 * e31,                    // r11
        e42.inverse() * e31.inverse() * e42 * e31,                    // r21
        e43.inverse() * e41.inverse() * e31.inverse() * e43 * e31 * e41, // r31
        e41.inverse() * e32.inverse() * e41 * e32,                    // r12
        e42.inverse() * e32.inverse() * e42 * e32,                    // r22
        e43.inverse() * e42.inverse() * e32.inverse() * e43 * e32 * e42, // r32
    };
    return Presentation(a, std::move(relators));
}

/// Rank-5 presentation of the matching pure-braid factor, over a_1_3, a_2_3,
/// a_1_4, a_2_4, a_3_4.
inline Presentation paper_h() {
    AlphabetPtr alpha = Alphabet::make({"a_1_3", "a_2_3", "a_1_4", "a_2_4", "a_3_4"});
    auto g = [&](const char* name) { return Word::letter(alpha, alpha->index_of(name)); };
    Word a13 = g("a_1_3"), a23 = g("a_2_3"), a14 = g("a_1_4"), a24 = g("a_2_4"), a34 = g("a_3_4");
    std::vector<Word> relators = {
        a13 * a14 * a13.inverse() * a34.inverse() * a14.inverse() * a34, // q11
        a13.inverse() * a24 * a13 * a14 * a34 * a14.inverse() * a34.inverse() * a24.inverse() *
            a34 * a14 * a34.inverse() * a14.inverse(),                   // q21
        a14.inverse() * a23.inverse() * a14 * a23,                       // q12
        a23 * a24 * a23.inverse() * a34.inverse() * a24.inverse() * a34, // q22
        a13.inverse() * a34 * a13 * a14 * a34.inverse() * a14.inverse(), // q31
        a23.inverse() * a34 * a23 * a24 * a34.inverse() * a24.inverse(), // q32
    };
    return Presentation(alpha, std::move(relators));
}

/// <a, t | [a, [a, t]]>
inline Presentation h_z() {
    AlphabetPtr alpha = Alphabet::make({"a", "t"});
    Word a = Word::letter(alpha, 0), t = Word::letter(alpha, 1);
    return Presentation(alpha, {commutator(a, commutator(a, t))});
}

/// The 5-generator, 8-relator commutator presentation of the index-2
/// subgroup. x^y denotes y^-1 x y.
inline Presentation index2_h() {
    AlphabetPtr alpha = Alphabet::make({"x1", "x2", "x3", "x4", "x5"});
    auto x = [&](int i) { return Word::letter(alpha, i - 1); };
    Word x1 = x(1), x2 = x(2), x3 = x(3), x4 = x(4), x5 = x(5);
    Word x1c = conjugate(x1, x5), x2c = conjugate(x2, x5);
    std::vector<Word> relators = {
        commutator(x1, x3),
        commutator(x2, x4),
        commutator(x1c, x3),
        commutator(x2c, x4),
        commutator(x1 * x3, x2),
        commutator(x2 * x4, x1),
        commutator(x1c * x3, x4),
        commutator(x2c * x4, x3),
    };
    return Presentation(alpha, std::move(relators));
}

} // namespace families

/// Dispatch by family name; n is required for the parametric families.
inline Presentation builtin_presentation(const std::string& family, int n = 0) {
    if (family == "mccool")
        return families::mccool(n);
    if (family == "pure_braid")
        return families::pure_braid(n);
    if (family == "paper_G")
        return families::paper_g();
    if (family == "paper_H")
        return families::paper_h();
    if (family == "h_z")
        return families::h_z();
    if (family == "index2_H")
        return families::index2_h();
    throw Error("unknown builtin presentation family '" + family + "'");
}

/// Relabels a word into a larger alphabet by generator name.
inline Word lift_word(const Word& w, const AlphabetPtr& target) {
    Word out = Word::identity(target);
    for (const Letter& l : w.letters()) {
        int idx = target->index_of(w.alphabet()->name(l.gen));
        if (idx < 0)
            throw Error("lift_word: generator '" + w.alphabet()->name(l.gen) +
                        "' missing from target alphabet");
        out = out * Word::letter(target, idx, l.sign);
    }
    return out;
}

/// Semidirect product of free groups: generators are fiber then base, and for
/// every base generator u_j (outer loop) and fiber generator x_i (inner loop)
/// the relator u_j x_i u_j^-1 * (action_j(x_i))^-1 is emitted.
inline Presentation semidirect(const AlphabetPtr& fiber, const AlphabetPtr& base,
                               const std::vector<Endomorphism>& action) {
    if (static_cast<int>(action.size()) != base->size())
        throw Error("semidirect: one action endomorphism per base generator required");
    for (const Endomorphism& e : action)
        if (!compatible(e.alphabet(), fiber))
            throw Error("semidirect: action endomorphism not over the fiber alphabet");
    std::vector<std::string> names = fiber->names();
    for (const std::string& nm : base->names()) {
        if (fiber->index_of(nm) >= 0)
            throw Error("semidirect: name collision between fiber and base: '" + nm + "'");
        names.push_back(nm);
    }
    AlphabetPtr combined = Alphabet::make(std::move(names));
    std::vector<Word> relators;
    for (int j = 0; j < base->size(); ++j) {
        Word uj = Word::letter(combined, fiber->size() + j);
        for (int i = 0; i < fiber->size(); ++i) {
            Word xi = Word::letter(combined, i);
            Word image = lift_word(action[static_cast<std::size_t>(j)].apply(
                             Word::letter(fiber, i)), combined);
            relators.push_back(uj * xi * uj.inverse() * image.inverse());
        }
    }
    return Presentation(combined, std::move(relators));
}

/// HNN-style doubling: generators g_1..g_m, primed copies named with a "_p"
/// suffix, and a stable letter t. Relators: both copies' relators, [g_i, g_j']
/// for all ordered pairs (i, j), then t g_i g_i' t^-1 g_i^-1 for each i. The
/// stable-letter relation is imposed only on generators; it extends
/// multiplicatively to the whole diagonal because t (g h) (g h)' t^-1 =
/// (t g g' t^-1)(t h h' t^-1) once the copies commute.
inline Presentation poison(const Presentation& g_pres) {
    const AlphabetPtr& g_alpha = g_pres.alphabet();
    std::vector<std::string> names = g_alpha->names();
    for (const std::string& nm : g_alpha->names()) {
        std::string primed = nm + "_p";
        if (g_alpha->index_of(primed) >= 0)
            throw Error("poison: name collision with primed copy '" + primed + "'");
        names.push_back(primed);
    }
    if (g_alpha->index_of("t") >= 0)
        throw Error("poison: input already uses the stable letter name 't'");
    names.push_back("t");
    AlphabetPtr alpha = Alphabet::make(std::move(names));
    const int m = g_alpha->size();
    Word t = Word::letter(alpha, 2 * m);
    std::vector<Word> relators;
    for (const Word& r : g_pres.relators())
        relators.push_back(lift_word(r, alpha));
    for (const Word& r : g_pres.relators()) {
        Word lifted = Word::identity(alpha);
        for (const Letter& l : r.letters())
            lifted = lifted * Word::letter(alpha, m + l.gen, l.sign);
        relators.push_back(lifted);
    }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            relators.push_back(commutator(Word::letter(alpha, i), Word::letter(alpha, m + j)));
    for (int i = 0; i < m; ++i) {
        Word gi = Word::letter(alpha, i), gip = Word::letter(alpha, m + i);
        relators.push_back(t * gi * gip * t.inverse() * gi.inverse());
    }
    return Presentation(alpha, std::move(relators));
}

} // namespace foxforge
