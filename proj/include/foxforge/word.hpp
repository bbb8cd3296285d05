#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace foxforge {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Alphabet;
using AlphabetPtr = std::shared_ptr<const Alphabet>;

struct Generator {
    std::string name;
    int index = -1;
};

/// Ordered list of generator names. Words refer to letters by index, so an
/// alphabet pins both the symbols and their order for the lifetime of a word.
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
        for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
            if (names_[i].empty())
                throw Error("alphabet: empty generator name");
            if (!index_.emplace(names_[i], i).second)
                throw Error("alphabet: duplicate generator name '" + names_[i] + "'");
        }
    }

    static AlphabetPtr make(std::vector<std::string> names) {
        return std::make_shared<Alphabet>(std::move(names));
    }

    /// stem1, stem2, ..., stemN
    static AlphabetPtr free_rank(int n, const std::string& stem = "x") {
        if (n < 0)
            throw Error("alphabet: negative rank");
        std::vector<std::string> names;
        names.reserve(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i)
            names.push_back(stem + std::to_string(i));
        return make(std::move(names));
    }

    int size() const { return static_cast<int>(names_.size()); }

    const std::string& name(int i) const {
        if (i < 0 || i >= size())
            throw Error("alphabet: generator index out of range");
        return names_[static_cast<std::size_t>(i)];
    }

    Generator generator(int i) const { return Generator{name(i), i}; }

    /// -1 when the name is not present.
    int index_of(const std::string& name) const {
        auto it = index_.find(name);
        return it == index_.end() ? -1 : it->second;
    }

    const std::vector<std::string>& names() const { return names_; }

    bool same_names(const Alphabet& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
    std::map<std::string, int> index_;
};

inline bool compatible(const AlphabetPtr& a, const AlphabetPtr& b) {
    return a == b || (a && b && a->same_names(*b));
}

struct Letter {
    int gen;
    int sign; // +1 or -1

    friend bool operator==(const Letter&, const Letter&) = default;
};

/// Freely reduced word over a fixed alphabet. The empty word is the identity.
/// All operations are pure; words are safe to share across threads.
class Word {
public:
    explicit Word(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
        if (!alphabet_)
            throw Error("word: null alphabet");
    }

    /// Reduces the raw letter sequence (cancels adjacent g g^-1 pairs).
    Word(AlphabetPtr alphabet, const std::vector<Letter>& raw) : Word(std::move(alphabet)) {
        for (const Letter& l : raw)
            push_reduced(l);
    }

    static Word identity(AlphabetPtr alphabet) { return Word(std::move(alphabet)); }

    static Word letter(AlphabetPtr alphabet, int gen, int sign = +1) {
        Word w(std::move(alphabet));
        if (gen < 0 || gen >= w.alphabet_->size())
            throw Error("word: letter index out of range");
        if (sign != 1 && sign != -1)
            throw Error("word: letter sign must be +1 or -1");
        w.letters_.push_back(Letter{gen, sign});
        return w;
    }

    const AlphabetPtr& alphabet() const { return alphabet_; }
    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool is_identity() const { return letters_.empty(); }

    Word inverse() const {
        Word w(alphabet_);
        w.letters_.reserve(letters_.size());
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
            w.letters_.push_back(Letter{it->gen, -it->sign});
        return w;
    }

    friend bool operator==(const Word& a, const Word& b) {
        return compatible(a.alphabet_, b.alphabet_) && a.letters_ == b.letters_;
    }

    friend Word operator*(const Word& a, const Word& b) {
        if (!compatible(a.alphabet_, b.alphabet_))
            throw Error("word: product of words over different alphabets");
        Word w = a;
        for (const Letter& l : b.letters_)
            w.push_reduced(l);
        return w;
    }

    Word pow(long long k) const {
        Word base = k >= 0 ? *this : inverse();
        long long reps = k >= 0 ? k : -k;
        Word w(alphabet_);
        for (long long i = 0; i < reps; ++i)
            w = w * base;
        return w;
    }

    /// Exponent sum of a single generator across the word.
    long long exponent_sum(int gen) const {
        long long s = 0;
        for (const Letter& l : letters_)
            if (l.gen == gen)
                s += l.sign;
        return s;
    }

    std::string str() const {
        if (letters_.empty())
            return "1";
        std::string out;
        for (std::size_t i = 0; i < letters_.size(); ++i) {
            if (i)
                out += "*";
            out += alphabet_->name(letters_[i].gen);
            if (letters_[i].sign < 0)
                out += "^-1";
        }
        return out;
    }

private:
    void push_reduced(const Letter& l) {
        if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().sign == -l.sign)
            letters_.pop_back();
        else
            letters_.push_back(l);
    }

    AlphabetPtr alphabet_;
    std::vector<Letter> letters_;
};

inline Word reduce(AlphabetPtr alphabet, const std::vector<Letter>& raw) {
    return Word(std::move(alphabet), raw);
}

inline Word multiply(const Word& u, const Word& v) { return u * v; }

/// [a, b] = a^-1 b^-1 a b
inline Word commutator(const Word& a, const Word& b) {
    return a.inverse() * b.inverse() * a * b;
}

/// w conjugated: c^-1 w c
inline Word conjugate(const Word& w, const Word& c) { return c.inverse() * w * c; }

struct CyclicReduction {
    Word core;
    Word conjugator; // original = conjugator^-1 * core * conjugator
};

inline CyclicReduction cyclically_reduce(const Word& w) {
    const auto& ls = w.letters();
    std::size_t lo = 0, hi = ls.size();
    while (hi - lo >= 2 && ls[lo].gen == ls[hi - 1].gen && ls[lo].sign == -ls[hi - 1].sign) {
        ++lo;
        --hi;
    }
    Word core(w.alphabet());
    for (std::size_t i = lo; i < hi; ++i)
        core = core * Word::letter(w.alphabet(), ls[i].gen, ls[i].sign);
    // stripped tail letters, innermost first
    Word conj(w.alphabet());
    for (std::size_t i = hi; i < ls.size(); ++i)
        conj = conj * Word::letter(w.alphabet(), ls[i].gen, ls[i].sign);
    return CyclicReduction{core, conj};
}

/// Deterministic order used for group-ring keys and printing:
/// shorter words first, then letterwise by generator index, positive before
/// negative sign.
inline bool word_less(const Word& a, const Word& b) {
    if (a.length() != b.length())
        return a.length() < b.length();
    const auto& la = a.letters();
    const auto& lb = b.letters();
    for (std::size_t i = 0; i < la.size(); ++i) {
        if (la[i].gen != lb[i].gen)
            return la[i].gen < lb[i].gen;
        if (la[i].sign != lb[i].sign)
            return la[i].sign > lb[i].sign;
    }
    return false;
}

struct WordOrder {
    bool operator()(const Word& a, const Word& b) const { return word_less(a, b); }
};

} // namespace foxforge
