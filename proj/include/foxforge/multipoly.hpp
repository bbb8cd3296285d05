#pragma once

#include "foxforge/word.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace foxforge {

using Rat = boost::multiprecision::cpp_rational;

namespace detail {

/// Graded lexicographic, larger terms first, so map iteration order is the
/// print order.
struct GrlexGreater {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        long long da = 0, db = 0;
        for (int e : a)
            da += e;
        for (int e : b)
            db += e;
        if (da != db)
            return da > db;
        return a > b;
    }
};

} // namespace detail

/// Multivariate polynomial over the rationals with a fixed variable count.
/// Exponent vectors are componentwise >= 0; no zero coefficients are stored.
class MultiPoly {
public:
    explicit MultiPoly(int nvars) : nvars_(nvars) {
        if (nvars < 0)
            throw Error("multipoly: negative variable count");
    }

    static MultiPoly zero(int nvars) { return MultiPoly(nvars); }

    static MultiPoly constant(int nvars, Rat c) {
        MultiPoly p(nvars);
        if (c != 0)
            p.terms_[std::vector<int>(static_cast<std::size_t>(nvars), 0)] = std::move(c);
        return p;
    }

    static MultiPoly variable(int nvars, int i) {
        if (i < 0 || i >= nvars)
            throw Error("multipoly: variable index out of range");
        MultiPoly p(nvars);
        std::vector<int> e(static_cast<std::size_t>(nvars), 0);
        e[static_cast<std::size_t>(i)] = 1;
        p.terms_[std::move(e)] = 1;
        return p;
    }

    static MultiPoly monomial(int nvars, std::vector<int> exps, Rat c) {
        MultiPoly p(nvars);
        if (static_cast<int>(exps.size()) != nvars)
            throw Error("multipoly: exponent vector has wrong length");
        for (int e : exps)
            if (e < 0)
                throw Error("multipoly: negative exponent");
        if (c != 0)
            p.terms_[std::move(exps)] = std::move(c);
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, Rat, detail::GrlexGreater>& terms() const { return terms_; }

    bool is_monomial() const { return terms_.size() == 1; }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        a.check(b);
        MultiPoly r = a;
        for (const auto& [e, c] : b.terms_)
            r.add_term(e, c);
        return r;
    }

    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
        a.check(b);
        MultiPoly r = a;
        for (const auto& [e, c] : b.terms_)
            r.add_term(e, -c);
        return r;
    }

    MultiPoly operator-() const {
        MultiPoly r(nvars_);
        for (const auto& [e, c] : terms_)
            r.terms_[e] = -c;
        return r;
    }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check(b);
        MultiPoly r(a.nvars_);
        std::vector<int> e(static_cast<std::size_t>(a.nvars_));
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i)
                    e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    friend MultiPoly operator*(const MultiPoly& a, const Rat& s) {
        MultiPoly r(a.nvars_);
        if (s == 0)
            return r;
        for (const auto& [e, c] : a.terms_)
            r.terms_[e] = c * s;
        return r;
    }

    /// Partial derivative with respect to variable i.
    MultiPoly derivative(int i) const {
        if (i < 0 || i >= nvars_)
            throw Error("multipoly: variable index out of range");
        MultiPoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            int k = e[static_cast<std::size_t>(i)];
            if (k == 0)
                continue;
            std::vector<int> d = e;
            d[static_cast<std::size_t>(i)] = k - 1;
            r.add_term(d, c * k);
        }
        return r;
    }

    std::string str(const std::vector<std::string>& names) const {
        if (static_cast<int>(names.size()) != nvars_)
            throw Error("multipoly: wrong number of variable names");
        if (terms_.empty())
            return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            Rat a = c;
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
            std::string mono;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0)
                    continue;
                if (!mono.empty())
                    mono += "*";
                mono += names[i];
                if (e[i] != 1)
                    mono += "^" + std::to_string(e[i]);
            }
            if (mono.empty()) {
                out += rat_str(a);
            } else {
                if (a != 1)
                    out += rat_str(a) + "*";
                out += mono;
            }
        }
        return out;
    }

    std::string str(const std::string& stem = "y") const {
        std::vector<std::string> names;
        for (int i = 1; i <= nvars_; ++i)
            names.push_back(stem + std::to_string(i));
        return str(names);
    }

private:
    static std::string rat_str(const Rat& r) {
        if (boost::multiprecision::denominator(r) == 1)
            return boost::multiprecision::numerator(r).str();
        return boost::multiprecision::numerator(r).str() + "/" +
               boost::multiprecision::denominator(r).str();
    }

    void check(const MultiPoly& other) const {
        if (nvars_ != other.nvars_)
            throw Error("multipoly: mixed variable counts");
    }

    void add_term(const std::vector<int>& e, const Rat& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (c != 0)
                terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    int nvars_;
    std::map<std::vector<int>, Rat, detail::GrlexGreater> terms_;
};

/// f with variable i replaced by sum_j B[i][j] * variable j, expanded exactly.
inline MultiPoly substitute_linear(const MultiPoly& f, const std::vector<std::vector<Rat>>& B) {
    const int n = f.nvars();
    if (static_cast<int>(B.size()) != n)
        throw Error("substitute_linear: matrix dimension mismatch");
    for (const auto& row : B)
        if (static_cast<int>(row.size()) != n)
            throw Error("substitute_linear: matrix is not square");
    std::vector<MultiPoly> forms;
    forms.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        MultiPoly L(n);
        for (int j = 0; j < n; ++j)
            L = L + MultiPoly::variable(n, j) * B[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        forms.push_back(L);
    }
    // cache powers of each substituted form up to its max needed exponent
    std::vector<std::vector<MultiPoly>> powers(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        powers[static_cast<std::size_t>(i)].push_back(MultiPoly::constant(n, 1));
    MultiPoly out(n);
    for (const auto& [e, c] : f.terms()) {
        MultiPoly term = MultiPoly::constant(n, c);
        for (int i = 0; i < n; ++i) {
            auto& pw = powers[static_cast<std::size_t>(i)];
            while (static_cast<int>(pw.size()) <= e[static_cast<std::size_t>(i)])
                pw.push_back(pw.back() * forms[static_cast<std::size_t>(i)]);
            term = term * pw[static_cast<std::size_t>(e[static_cast<std::size_t>(i)])];
        }
        out = out + term;
    }
    return out;
}

/// Exact quotient in Q[y1..yn] when the division is exact; nullopt otherwise.
inline std::optional<MultiPoly> exact_div(const MultiPoly& p, const MultiPoly& d) {
    if (d.is_zero())
        return std::nullopt;
    MultiPoly rem = p;
    MultiPoly quot(p.nvars());
    const auto& dlead = *d.terms().begin();
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms().begin();
        std::vector<int> e(rlead.first.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            e[i] = rlead.first[i] - dlead.first[i];
            if (e[i] < 0)
                return std::nullopt;
        }
        MultiPoly m = MultiPoly::monomial(p.nvars(), e, rlead.second / dlead.second);
        quot = quot + m;
        rem = rem - m * d;
    }
    return quot;
}

/// Fraction-free determinant of a square matrix of polynomials.
inline MultiPoly poly_det(std::vector<std::vector<MultiPoly>> m, int nvars) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n)
            throw Error("poly_det: matrix is not square");
    if (n == 0)
        return MultiPoly::constant(nvars, 1);
    int sign = 1;
    MultiPoly prev_pivot = MultiPoly::constant(nvars, 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m[pivot][k].is_zero())
            ++pivot;
        if (pivot == n)
            return MultiPoly::zero(nvars);
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                MultiPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                auto q = exact_div(num, prev_pivot);
                if (!q)
                    throw Error("poly_det: non-exact Bareiss division");
                m[i][j] = *q;
            }
            m[i][k] = MultiPoly::zero(nvars);
        }
        prev_pivot = m[k][k];
    }
    MultiPoly det = m[n - 1][n - 1];
    if (sign < 0)
        det = -det;
    return det;
}

/// Symbolic determinant of the matrix of second partials, over all declared
/// variables in order.
inline MultiPoly hessian(const MultiPoly& f) {
    const int n = f.nvars();
    if (n < 1)
        throw Error("hessian: polynomial must have at least one variable");
    std::vector<MultiPoly> first;
    first.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        first.push_back(f.derivative(i));
    std::vector<std::vector<MultiPoly>> H;
    H.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::vector<MultiPoly> row;
        row.reserve(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j)
            row.push_back(first[static_cast<std::size_t>(i)].derivative(j));
        H.push_back(std::move(row));
    }
    return poly_det(std::move(H), n);
}

/// Determinant of a rational matrix (Gaussian elimination over Q).
inline Rat rat_det(std::vector<std::vector<Rat>> m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n)
            throw Error("rat_det: matrix is not square");
    Rat det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m[pivot][k] == 0)
            ++pivot;
        if (pivot == n)
            return 0;
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            det = -det;
        }
        det *= m[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            Rat factor = m[i][k] / m[k][k];
            for (std::size_t j = k; j < n; ++j)
                m[i][j] -= factor * m[k][j];
        }
    }
    return det;
}

} // namespace foxforge
