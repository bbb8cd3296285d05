#pragma once

#include "foxforge/word.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace foxforge {

using Int = boost::multiprecision::cpp_int;

/// Laurent polynomial over the integers in one variable t, stored as a sparse
/// exponent -> coefficient map with no zero coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly zero() { return LaurentPoly(); }

    static LaurentPoly constant(Int c) { return monomial(0, std::move(c)); }

    static LaurentPoly one() { return constant(1); }

    static LaurentPoly monomial(long long exp, Int coeff) {
        LaurentPoly p;
        if (coeff != 0)
            p.coeffs_[exp] = std::move(coeff);
        return p;
    }

    /// t^k
    static LaurentPoly t(long long k = 1) { return monomial(k, 1); }

    bool is_zero() const { return coeffs_.empty(); }

    bool is_one() const {
        return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
    }

    const std::map<long long, Int>& coeffs() const { return coeffs_; }

    Int coeff(long long exp) const {
        auto it = coeffs_.find(exp);
        return it == coeffs_.end() ? Int(0) : it->second;
    }

    long long min_exp() const {
        if (is_zero())
            throw Error("laurent: min_exp of zero polynomial");
        return coeffs_.begin()->first;
    }

    long long max_exp() const {
        if (is_zero())
            throw Error("laurent: max_exp of zero polynomial");
        return coeffs_.rbegin()->first;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (const auto& [e, c] : b.coeffs_)
            r.add_term(e, c);
        return r;
    }

    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (const auto& [e, c] : b.coeffs_)
            r.add_term(e, -c);
        return r;
    }

    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, c] : coeffs_)
            r.coeffs_[e] = -c;
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.coeffs_)
            for (const auto& [eb, cb] : b.coeffs_)
                r.add_term(ea + eb, ca * cb);
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const Int& s) {
        LaurentPoly r;
        if (s == 0)
            return r;
        for (const auto& [e, c] : a.coeffs_)
            r.coeffs_[e] = c * s;
        return r;
    }

    /// Multiply by the unit t^k.
    LaurentPoly shifted(long long k) const {
        LaurentPoly r;
        for (const auto& [e, c] : coeffs_)
            r.coeffs_[e + k] = c;
        return r;
    }

    /// Ascending exponent order, e.g. "1 - 3*t + 2*t^2".
    std::string str() const {
        if (is_zero())
            return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : coeffs_) {
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
            if (e == 0) {
                out += a.str();
            } else {
                if (a != 1)
                    out += a.str() + "*";
                out += "t";
                if (e != 1)
                    out += "^" + std::to_string(e);
            }
        }
        return out;
    }

private:
    void add_term(long long e, const Int& c) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            if (c != 0)
                coeffs_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0)
                coeffs_.erase(it);
        }
    }

    std::map<long long, Int> coeffs_;
};

/// Canonical form modulo the units +-t^k: minimum exponent 0 and positive
/// lowest coefficient. normalize(0) = 0.
inline LaurentPoly normalize(const LaurentPoly& p) {
    if (p.is_zero())
        return p;
    LaurentPoly q = p.shifted(-p.min_exp());
    if (q.coeffs().begin()->second < 0)
        return -q;
    return q;
}

namespace detail {

/// Dense coefficient vector of an ordinary polynomial, index = exponent.
inline std::vector<Int> to_dense(const LaurentPoly& p) {
    std::vector<Int> v(static_cast<std::size_t>(p.max_exp() - p.min_exp() + 1), Int(0));
    for (const auto& [e, c] : p.coeffs())
        v[static_cast<std::size_t>(e - p.min_exp())] = c;
    return v;
}

inline Int content(const std::vector<Int>& v) {
    Int g = 0;
    for (const Int& c : v)
        g = boost::multiprecision::gcd(g, c);
    return g;
}

/// gcd of primitive integer polynomials via rational Euclid, denominators
/// cleared and content stripped at the end.
inline std::vector<Int> primitive_gcd(std::vector<Int> a, std::vector<Int> b) {
    using boost::multiprecision::cpp_rational;
    auto degree = [](const std::vector<cpp_rational>& v) {
        for (std::size_t i = v.size(); i-- > 0;)
            if (v[i] != 0)
                return static_cast<long long>(i);
        return -1LL;
    };
    std::vector<cpp_rational> u(a.begin(), a.end()), w(b.begin(), b.end());
    if (degree(u) < degree(w))
        std::swap(u, w);
    while (degree(w) >= 0) {
        // u <- u mod w
        long long du = degree(u), dw = degree(w);
        while (du >= dw) {
            cpp_rational q = u[static_cast<std::size_t>(du)] / w[static_cast<std::size_t>(dw)];
            for (long long i = 0; i <= dw; ++i)
                u[static_cast<std::size_t>(du - dw + i)] -= q * w[static_cast<std::size_t>(i)];
            du = degree(u);
        }
        std::swap(u, w);
    }
    // clear denominators of u, strip content
    Int lcm_den = 1;
    for (const auto& r : u)
        lcm_den = boost::multiprecision::lcm(lcm_den, boost::multiprecision::denominator(r));
    std::vector<Int> out;
    out.reserve(u.size());
    for (const auto& r : u)
        out.push_back(boost::multiprecision::numerator(r) * (lcm_den / boost::multiprecision::denominator(r)));
    while (!out.empty() && out.back() == 0)
        out.pop_back();
    Int cont = content(out);
    if (cont != 0)
        for (Int& c : out)
            c /= cont;
    return out;
}

} // namespace detail

/// gcd in Z[t, t^-1] (a UFD whose units are +-t^k), returned normalized.
inline LaurentPoly laurent_gcd(const LaurentPoly& p, const LaurentPoly& q) {
    if (p.is_zero())
        return normalize(q);
    if (q.is_zero())
        return normalize(p);
    std::vector<Int> a = detail::to_dense(p);
    std::vector<Int> b = detail::to_dense(q);
    Int cont = boost::multiprecision::gcd(detail::content(a), detail::content(b));
    std::vector<Int> g = detail::primitive_gcd(a, b);
    LaurentPoly r;
    for (std::size_t i = 0; i < g.size(); ++i)
        r = r + LaurentPoly::monomial(static_cast<long long>(i), g[i] * cont);
    return normalize(r);
}

/// Exact quotient p / d when d divides p in Z[t, t^-1]; nullopt otherwise.
inline std::optional<LaurentPoly> exact_div(const LaurentPoly& p, const LaurentPoly& d) {
    if (d.is_zero())
        return std::nullopt;
    if (p.is_zero())
        return LaurentPoly::zero();
    std::vector<Int> num = detail::to_dense(p);
    std::vector<Int> den = detail::to_dense(d);
    if (num.size() < den.size())
        return std::nullopt;
    std::vector<Int> quot(num.size() - den.size() + 1, Int(0));
    for (std::size_t i = quot.size(); i-- > 0;) {
        Int lead = num[i + den.size() - 1];
        if (lead == 0)
            continue;
        if (lead % den.back() != 0)
            return std::nullopt;
        Int q = lead / den.back();
        quot[i] = q;
        for (std::size_t j = 0; j < den.size(); ++j)
            num[i + j] -= q * den[j];
    }
    for (const Int& c : num)
        if (c != 0)
            return std::nullopt;
    LaurentPoly r;
    for (std::size_t i = 0; i < quot.size(); ++i)
        r = r + LaurentPoly::monomial(static_cast<long long>(i), quot[i]);
    return r.shifted(p.min_exp() - d.min_exp());
}

inline bool divides(const LaurentPoly& d, const LaurentPoly& p) {
    if (p.is_zero())
        return true;
    return exact_div(p, d).has_value();
}

/// Determinant of a square matrix of Laurent polynomials. Rows are first
/// cleared to plain polynomials by unit factors (tracked and divided back),
/// then fraction-free Bareiss elimination runs in Z[t].
inline LaurentPoly laurent_det(std::vector<std::vector<LaurentPoly>> m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n)
            throw Error("laurent_det: matrix is not square");
    if (n == 0)
        return LaurentPoly::one();
    long long shift = 0;
    for (auto& row : m) {
        long long mn = 0;
        bool nonzero = false;
        for (const auto& e : row) {
            if (e.is_zero())
                continue;
            if (!nonzero || e.min_exp() < mn)
                mn = e.min_exp();
            nonzero = true;
        }
        if (nonzero && mn != 0) {
            for (auto& e : row)
                e = e.shifted(-mn);
            shift += mn;
        }
    }
    int sign = 1;
    LaurentPoly prev_pivot = LaurentPoly::one();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m[pivot][k].is_zero())
            ++pivot;
        if (pivot == n)
            return LaurentPoly::zero();
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                LaurentPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                auto q = exact_div(num, prev_pivot);
                if (!q)
                    throw Error("laurent_det: non-exact Bareiss division");
                m[i][j] = *q;
            }
            m[i][k] = LaurentPoly::zero();
        }
        prev_pivot = m[k][k];
    }
    LaurentPoly det = m[n - 1][n - 1];
    if (sign < 0)
        det = -det;
    return det.shifted(shift);
}

} // namespace foxforge
