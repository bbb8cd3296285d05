#pragma once

#include "foxforge/word.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace foxforge {

/// Endomorphism of a free group, given by the images of the generators.
/// Equality is letterwise equality of the reduced images, which is exact and
/// decidable because the group is free.
class Endomorphism {
public:
    Endomorphism(AlphabetPtr alphabet, std::vector<Word> images)
        : alphabet_(std::move(alphabet)), images_(std::move(images)) {
        if (!alphabet_)
            throw Error("endomorphism: null alphabet");
        if (static_cast<int>(images_.size()) != alphabet_->size())
            throw Error("endomorphism: image count does not match rank");
        for (const Word& w : images_)
            if (!compatible(w.alphabet(), alphabet_))
                throw Error("endomorphism: image over a different alphabet");
    }

    static Endomorphism identity(const AlphabetPtr& alphabet) {
        std::vector<Word> images;
        images.reserve(static_cast<std::size_t>(alphabet->size()));
        for (int i = 0; i < alphabet->size(); ++i)
            images.push_back(Word::letter(alphabet, i));
        return Endomorphism(alphabet, std::move(images));
    }

    int rank() const { return alphabet_->size(); }
    const AlphabetPtr& alphabet() const { return alphabet_; }
    const std::vector<Word>& images() const { return images_; }
    const Word& image(int i) const { return images_.at(static_cast<std::size_t>(i)); }

    Word apply(const Word& w) const {
        if (!compatible(w.alphabet(), alphabet_))
            throw Error("endomorphism: word over a different alphabet");
        Word out = Word::identity(alphabet_);
        for (const Letter& l : w.letters())
            out = out * (l.sign > 0 ? images_[static_cast<std::size_t>(l.gen)]
                                    : images_[static_cast<std::size_t>(l.gen)].inverse());
        return out;
    }

    bool is_identity() const {
        for (int i = 0; i < rank(); ++i) {
            const Word& w = images_[static_cast<std::size_t>(i)];
            if (w.length() != 1 || w.letters()[0].gen != i || w.letters()[0].sign != 1)
                return false;
        }
        return true;
    }

    friend bool operator==(const Endomorphism& a, const Endomorphism& b) {
        return compatible(a.alphabet_, b.alphabet_) && a.images_ == b.images_;
    }

private:
    AlphabetPtr alphabet_;
    std::vector<Word> images_;
};

/// compose(e1, e2)(x) = e1(e2(x)): e2 acts first.
inline Endomorphism compose(const Endomorphism& e1, const Endomorphism& e2) {
    if (e1.rank() != e2.rank())
        throw Error("compose: rank mismatch");
    std::vector<Word> images;
    images.reserve(static_cast<std::size_t>(e2.rank()));
    for (const Word& w : e2.images())
        images.push_back(e1.apply(w));
    return Endomorphism(e1.alphabet(), std::move(images));
}

inline bool commutes(const Endomorphism& e1, const Endomorphism& e2) {
    return compose(e1, e2) == compose(e2, e1);
}

/// An endomorphism bundled with an explicit inverse. Inverses of free-group
/// automorphisms are never computed automatically here; every builtin ships a
/// hand-derived inverse and verification asserts both compositions are the
/// identity.
struct EndoPair {
    Endomorphism map;
    std::optional<Endomorphism> inverse;

    EndoPair(Endomorphism m) : map(std::move(m)) {}
    EndoPair(Endomorphism m, Endomorphism inv) : map(std::move(m)), inverse(std::move(inv)) {}
};

namespace builtin {

inline void check_index(int i, int n, const char* what) {
    if (i < 1 || i > n)
        throw Error(std::string(what) + ": index out of range");
}

/// sigma_i: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i.
inline Endomorphism sigma(int i, int n, const AlphabetPtr& alphabet) {
    check_index(i, n - 1, "sigma");
    std::vector<Word> images;
    for (int k = 0; k < n; ++k) {
        if (k == i - 1) {
            Word xi = Word::letter(alphabet, i - 1), xj = Word::letter(alphabet, i);
            images.push_back(xi * xj * xi.inverse());
        } else if (k == i) {
            images.push_back(Word::letter(alphabet, i - 1));
        } else {
            images.push_back(Word::letter(alphabet, k));
        }
    }
    return Endomorphism(alphabet, std::move(images));
}

/// sigma_i^-1: x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}.
inline Endomorphism sigma_inverse(int i, int n, const AlphabetPtr& alphabet) {
    check_index(i, n - 1, "sigma");
    std::vector<Word> images;
    for (int k = 0; k < n; ++k) {
        if (k == i - 1) {
            images.push_back(Word::letter(alphabet, i));
        } else if (k == i) {
            Word xi = Word::letter(alphabet, i - 1), xj = Word::letter(alphabet, i);
            images.push_back(xj.inverse() * xi * xj);
        } else {
            images.push_back(Word::letter(alphabet, k));
        }
    }
    return Endomorphism(alphabet, std::move(images));
}

/// a_rs (r < s):
///   x_r -> x_r x_s x_r x_s^-1 x_r^-1
///   x_i -> [x_r^-1, x_s^-1] x_i [x_r^-1, x_s^-1]^-1   for r < i < s
///   x_s -> x_r x_s x_r^-1
inline Endomorphism pure_braid_gen(int r, int s, int n, const AlphabetPtr& alphabet) {
    check_index(r, n, "a_rs");
    check_index(s, n, "a_rs");
    if (r >= s)
        throw Error("a_rs: requires r < s");
    Word xr = Word::letter(alphabet, r - 1), xs = Word::letter(alphabet, s - 1);
    Word k = commutator(xr.inverse(), xs.inverse());
    std::vector<Word> images;
    for (int i = 1; i <= n; ++i) {
        if (i == r) {
            images.push_back(xr * xs * xr * xs.inverse() * xr.inverse());
        } else if (i == s) {
            images.push_back(xr * xs * xr.inverse());
        } else if (r < i && i < s) {
            Word xi = Word::letter(alphabet, i - 1);
            images.push_back(k * xi * k.inverse());
        } else {
            images.push_back(Word::letter(alphabet, i - 1));
        }
    }
    return Endomorphism(alphabet, std::move(images));
}

/// a_rs^-1:
///   x_r -> x_s^-1 x_r x_s
///   x_i -> [x_r, x_s]^-1 x_i [x_r, x_s]   for r < i < s
///   x_s -> x_s^-1 x_r^-1 x_s x_r x_s
inline Endomorphism pure_braid_gen_inverse(int r, int s, int n, const AlphabetPtr& alphabet) {
    check_index(r, n, "a_rs");
    check_index(s, n, "a_rs");
    if (r >= s)
        throw Error("a_rs: requires r < s");
    Word xr = Word::letter(alphabet, r - 1), xs = Word::letter(alphabet, s - 1);
    Word k = commutator(xr, xs);
    std::vector<Word> images;
    for (int i = 1; i <= n; ++i) {
        if (i == r) {
            images.push_back(xs.inverse() * xr * xs);
        } else if (i == s) {
            images.push_back(xs.inverse() * xr.inverse() * xs * xr * xs);
        } else if (r < i && i < s) {
            Word xi = Word::letter(alphabet, i - 1);
            images.push_back(k.inverse() * xi * k);
        } else {
            images.push_back(Word::letter(alphabet, i - 1));
        }
    }
    return Endomorphism(alphabet, std::move(images));
}

/// eps_ij (i != j): x_i -> x_j^-1 x_i x_j.
inline Endomorphism eps(int i, int j, int n, const AlphabetPtr& alphabet) {
    check_index(i, n, "eps");
    check_index(j, n, "eps");
    if (i == j)
        throw Error("eps: requires i != j");
    std::vector<Word> images;
    for (int k = 1; k <= n; ++k) {
        if (k == i) {
            Word xi = Word::letter(alphabet, i - 1), xj = Word::letter(alphabet, j - 1);
            images.push_back(xj.inverse() * xi * xj);
        } else {
            images.push_back(Word::letter(alphabet, k - 1));
        }
    }
    return Endomorphism(alphabet, std::move(images));
}

inline Endomorphism eps_inverse(int i, int j, int n, const AlphabetPtr& alphabet) {
    check_index(i, n, "eps");
    check_index(j, n, "eps");
    if (i == j)
        throw Error("eps: requires i != j");
    std::vector<Word> images;
    for (int k = 1; k <= n; ++k) {
        if (k == i) {
            Word xi = Word::letter(alphabet, i - 1), xj = Word::letter(alphabet, j - 1);
            images.push_back(xj * xi * xj.inverse());
        } else {
            images.push_back(Word::letter(alphabet, k - 1));
        }
    }
    return Endomorphism(alphabet, std::move(images));
}

/// eps_ijk (i, j, k pairwise distinct): x_i -> x_i [x_j, x_k].
inline Endomorphism epsk(int i, int j, int k, int n, const AlphabetPtr& alphabet, bool inverse = false) {
    check_index(i, n, "epsk");
    check_index(j, n, "epsk");
    check_index(k, n, "epsk");
    if (i == j || j == k || i == k)
        throw Error("epsk: requires pairwise distinct indices");
    std::vector<Word> images;
    for (int l = 1; l <= n; ++l) {
        if (l == i) {
            Word xi = Word::letter(alphabet, i - 1);
            Word c = commutator(Word::letter(alphabet, j - 1), Word::letter(alphabet, k - 1));
            images.push_back(inverse ? xi * c.inverse() : xi * c);
        } else {
            images.push_back(Word::letter(alphabet, l - 1));
        }
    }
    return Endomorphism(alphabet, std::move(images));
}

/// Inner automorphism: x -> w^-1 x w.
inline Endomorphism conjugation(const Word& w) {
    const AlphabetPtr& a = w.alphabet();
    std::vector<Word> images;
    for (int i = 0; i < a->size(); ++i)
        images.push_back(w.inverse() * Word::letter(a, i) * w);
    return Endomorphism(a, std::move(images));
}

/// Fixes every generator except x_target, which becomes x_target * w.
inline Endomorphism right_multiplier(int target, const Word& w) {
    const AlphabetPtr& a = w.alphabet();
    if (target < 0 || target >= a->size())
        throw Error("right_multiplier: target index out of range");
    std::vector<Word> images;
    for (int i = 0; i < a->size(); ++i) {
        Word xi = Word::letter(a, i);
        images.push_back(i == target ? xi * w : xi);
    }
    return Endomorphism(a, std::move(images));
}

inline EndoPair sigma_pair(int i, int n) {
    AlphabetPtr a = Alphabet::free_rank(n);
    return EndoPair(sigma(i, n, a), sigma_inverse(i, n, a));
}

inline EndoPair pure_braid_pair(int r, int s, int n) {
    AlphabetPtr a = Alphabet::free_rank(n);
    return EndoPair(pure_braid_gen(r, s, n, a), pure_braid_gen_inverse(r, s, n, a));
}

inline EndoPair eps_pair(int i, int j, int n) {
    AlphabetPtr a = Alphabet::free_rank(n);
    return EndoPair(eps(i, j, n, a), eps_inverse(i, j, n, a));
}

inline EndoPair epsk_pair(int i, int j, int k, int n) {
    AlphabetPtr a = Alphabet::free_rank(n);
    return EndoPair(epsk(i, j, k, n, a), epsk(i, j, k, n, a, /*inverse=*/true));
}

inline EndoPair conjugation_pair(const Word& w) {
    return EndoPair(conjugation(w), conjugation(w.inverse()));
}

inline EndoPair right_multiplier_pair(int target, const Word& w) {
    return EndoPair(right_multiplier(target, w), right_multiplier(target, w.inverse()));
}

} // namespace builtin

struct BraidReport {
    bool is_candidate = false;
    std::vector<int> permutation;  // 0-based: x_i maps into a conjugate of x_{permutation[i]}
    std::vector<Word> conjugators; // image(x_i) = conjugators[i]^-1 * x_{permutation[i]} * conjugators[i]
};

/// Checks the two conditions characterizing braid automorphisms: every image
/// is a conjugate of a single generator via a permutation, and the product
/// x_1 x_2 ... x_n is fixed.
inline BraidReport braid_membership(const Endomorphism& e) {
    BraidReport report;
    const AlphabetPtr& a = e.alphabet();
    const int n = e.rank();
    std::vector<int> perm(static_cast<std::size_t>(n), -1);
    std::vector<Word> conjugators;
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    for (int i = 0; i < n; ++i) {
        CyclicReduction cr = cyclically_reduce(e.image(i));
        if (cr.core.length() != 1 || cr.core.letters()[0].sign != 1)
            return report;
        int target = cr.core.letters()[0].gen;
        if (hit[static_cast<std::size_t>(target)])
            return report;
        hit[static_cast<std::size_t>(target)] = true;
        perm[static_cast<std::size_t>(i)] = target;
        conjugators.push_back(cr.conjugator);
    }
    Word product = Word::identity(a);
    for (int i = 0; i < n; ++i)
        product = product * Word::letter(a, i);
    if (!(e.apply(product) == product))
        return report;
    report.is_candidate = true;
    report.permutation = std::move(perm);
    report.conjugators = std::move(conjugators);
    return report;
}

} // namespace foxforge
