#ifndef BCF_POLY_HPP
#define BCF_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bcf/error.hpp"
#include "bcf/numeric.hpp"

namespace bcf
{

// Sparse exponent vector: (variable, exponent) pairs sorted by variable, exponents > 0.
class Monomial
{
public:
    Monomial() = default;

    static Monomial variable(int v, int e = 1)
    {
        Monomial m;
        if (e > 0) {
            m.m_exps.emplace_back(v, e);
        } else if (e < 0) {
            throw Error(ErrorKind::PreconditionViolated, "negative exponent in a polynomial monomial");
        }
        return m;
    }

    const std::vector<std::pair<int, int>> &exponents() const noexcept
    {
        return m_exps;
    }
    bool is_one() const noexcept
    {
        return m_exps.empty();
    }
    int degree() const noexcept
    {
        int d = 0;
        for (const auto &[v, e] : m_exps) {
            d += e;
        }
        return d;
    }
    int exponent(int v) const noexcept
    {
        for (const auto &[w, e] : m_exps) {
            if (w == v) {
                return e;
            }
        }
        return 0;
    }

    friend Monomial operator*(const Monomial &a, const Monomial &b)
    {
        Monomial out;
        std::size_t i = 0;
        std::size_t j = 0;
        while (i < a.m_exps.size() || j < b.m_exps.size()) {
            if (j == b.m_exps.size() || (i < a.m_exps.size() && a.m_exps[i].first < b.m_exps[j].first)) {
                out.m_exps.push_back(a.m_exps[i++]);
            } else if (i == a.m_exps.size() || b.m_exps[j].first < a.m_exps[i].first) {
                out.m_exps.push_back(b.m_exps[j++]);
            } else {
                out.m_exps.emplace_back(a.m_exps[i].first, a.m_exps[i].second + b.m_exps[j].second);
                ++i;
                ++j;
            }
        }
        return out;
    }

    bool divides(const Monomial &o) const noexcept
    {
        for (const auto &[v, e] : m_exps) {
            if (o.exponent(v) < e) {
                return false;
            }
        }
        return true;
    }

    // Requires divisor.divides(*this).
    Monomial divided_by(const Monomial &divisor) const
    {
        Monomial out;
        for (const auto &[v, e] : m_exps) {
            const int r = e - divisor.exponent(v);
            if (r < 0) {
                throw Error(ErrorKind::PreconditionViolated, "monomial does not divide");
            }
            if (r > 0) {
                out.m_exps.emplace_back(v, r);
            }
        }
        return out;
    }

    Monomial without(int v) const
    {
        Monomial out;
        for (const auto &p : m_exps) {
            if (p.first != v) {
                out.m_exps.push_back(p);
            }
        }
        return out;
    }

    static Monomial gcd(const Monomial &a, const Monomial &b)
    {
        Monomial out;
        for (const auto &[v, e] : a.m_exps) {
            const int f = std::min(e, b.exponent(v));
            if (f > 0) {
                out.m_exps.emplace_back(v, f);
            }
        }
        return out;
    }

    friend bool operator==(const Monomial &a, const Monomial &b)
    {
        return a.m_exps == b.m_exps;
    }

private:
    std::vector<std::pair<int, int>> m_exps;
};

// Graded lexicographic order; among equal degrees the smaller variable index dominates.
struct GrlexLess {
    bool operator()(const Monomial &a, const Monomial &b) const noexcept
    {
        const int da = a.degree();
        const int db = b.degree();
        if (da != db) {
            return da < db;
        }
        const auto &ea = a.exponents();
        const auto &eb = b.exponents();
        std::size_t i = 0;
        for (; i < ea.size() && i < eb.size(); ++i) {
            if (ea[i].first != eb[i].first) {
                return ea[i].first > eb[i].first;
            }
            if (ea[i].second != eb[i].second) {
                return ea[i].second < eb[i].second;
            }
        }
        return i == ea.size() && i < eb.size();
    }
};

class Polynomial
{
public:
    using TermMap = std::map<Monomial, Rational, GrlexLess>;

    Polynomial() = default;
    Polynomial(const Rational &c)
    {
        if (c != 0) {
            m_terms.emplace(Monomial{}, c);
        }
    }
    Polynomial(long c) : Polynomial(Rational(c)) {}

    static Polynomial variable(int v)
    {
        return term(Monomial::variable(v), Rational(1));
    }
    static Polynomial term(const Monomial &m, const Rational &c)
    {
        Polynomial p;
        if (c != 0) {
            p.m_terms.emplace(m, c);
        }
        return p;
    }

    const TermMap &terms() const noexcept
    {
        return m_terms;
    }
    std::size_t size() const noexcept
    {
        return m_terms.size();
    }
    bool is_zero() const noexcept
    {
        return m_terms.empty();
    }
    bool is_constant() const noexcept
    {
        return m_terms.empty() || (m_terms.size() == 1 && m_terms.begin()->first.is_one());
    }
    bool is_monomial() const noexcept
    {
        return m_terms.size() == 1;
    }
    Rational constant_term() const
    {
        auto it = m_terms.find(Monomial{});
        return it == m_terms.end() ? Rational(0) : it->second;
    }
    const Monomial &leading_monomial() const
    {
        require_nonzero();
        return m_terms.rbegin()->first;
    }
    const Rational &leading_coefficient() const
    {
        require_nonzero();
        return m_terms.rbegin()->second;
    }

    std::set<int> variables() const
    {
        std::set<int> out;
        for (const auto &[m, c] : m_terms) {
            for (const auto &[v, e] : m.exponents()) {
                out.insert(v);
            }
        }
        return out;
    }

    int degree(int v) const noexcept
    {
        int d = 0;
        for (const auto &[m, c] : m_terms) {
            d = std::max(d, m.exponent(v));
        }
        return d;
    }

    int total_degree() const noexcept
    {
        return m_terms.empty() ? 0 : m_terms.rbegin()->first.degree();
    }

    // Coefficients as a polynomial in v: entry e multiplies v^e.
    std::vector<Polynomial> coefficients(int v) const
    {
        std::vector<Polynomial> out(static_cast<std::size_t>(degree(v)) + 1);
        for (const auto &[m, c] : m_terms) {
            out[static_cast<std::size_t>(m.exponent(v))].m_terms.emplace(m.without(v), c);
        }
        return out;
    }

    Polynomial coefficient(int v, int e) const
    {
        Polynomial out;
        for (const auto &[m, c] : m_terms) {
            if (m.exponent(v) == e) {
                out.m_terms.emplace(m.without(v), c);
            }
        }
        return out;
    }

    // Largest monomial dividing every term.
    Monomial monomial_content() const
    {
        if (m_terms.empty()) {
            return {};
        }
        Monomial g = m_terms.begin()->first;
        for (const auto &[m, c] : m_terms) {
            g = Monomial::gcd(g, m);
            if (g.is_one()) {
                break;
            }
        }
        return g;
    }

    Polynomial divided_by(const Monomial &m) const
    {
        Polynomial out;
        for (const auto &[t, c] : m_terms) {
            out.m_terms.emplace_hint(out.m_terms.end(), t.divided_by(m), c);
        }
        return out;
    }

    Polynomial operator-() const
    {
        Polynomial out = *this;
        for (auto &[m, c] : out.m_terms) {
            c = -c;
        }
        return out;
    }

    Polynomial &operator+=(const Polynomial &o)
    {
        for (const auto &[m, c] : o.m_terms) {
            add_term(m, c);
        }
        return *this;
    }
    Polynomial &operator-=(const Polynomial &o)
    {
        for (const auto &[m, c] : o.m_terms) {
            add_term(m, -c);
        }
        return *this;
    }
    Polynomial &operator*=(const Rational &s)
    {
        if (s == 0) {
            m_terms.clear();
            return *this;
        }
        for (auto &[m, c] : m_terms) {
            c *= s;
        }
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial &b)
    {
        a += b;
        return a;
    }
    friend Polynomial operator-(Polynomial a, const Polynomial &b)
    {
        a -= b;
        return a;
    }
    friend Polynomial operator*(const Polynomial &a, const Polynomial &b)
    {
        Polynomial out;
        for (const auto &[ma, ca] : a.m_terms) {
            for (const auto &[mb, cb] : b.m_terms) {
                out.add_term(ma * mb, ca * cb);
            }
        }
        return out;
    }
    friend Polynomial operator*(Polynomial a, const Rational &s)
    {
        a *= s;
        return a;
    }
    friend Polynomial operator*(const Rational &s, Polynomial a)
    {
        a *= s;
        return a;
    }
    Polynomial times(const Monomial &m) const
    {
        Polynomial out;
        for (const auto &[t, c] : m_terms) {
            out.m_terms.emplace_hint(out.m_terms.end(), t * m, c);
        }
        return out;
    }

    Polynomial pow(unsigned e) const
    {
        Polynomial result(1);
        Polynomial base = *this;
        while (e > 0) {
            if (e & 1U) {
                result = result * base;
            }
            e >>= 1U;
            if (e > 0) {
                base = base * base;
            }
        }
        return result;
    }

    // Exact quotient, or nullopt when the divisor does not divide.
    std::optional<Polynomial> divide_exact(const Polynomial &d) const
    {
        if (d.is_zero()) {
            throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
        }
        Polynomial r = *this;
        Polynomial q;
        const Monomial &ld = d.leading_monomial();
        const Rational &lc = d.leading_coefficient();
        while (!r.is_zero()) {
            const Monomial &lr = r.leading_monomial();
            if (!ld.divides(lr)) {
                return std::nullopt;
            }
            const Monomial qm = lr.divided_by(ld);
            const Rational qc = r.leading_coefficient() / lc;
            q.add_term(qm, qc);
            for (const auto &[m, c] : d.m_terms) {
                r.add_term(m * qm, -qc * c);
            }
        }
        return q;
    }

    Polynomial derivative(int v) const
    {
        Polynomial out;
        for (const auto &[m, c] : m_terms) {
            const int e = m.exponent(v);
            if (e == 0) {
                continue;
            }
            out.add_term(m.without(v) * Monomial::variable(v, e - 1), c * e);
        }
        return out;
    }

    template <typename Values>
    Rational evaluate(const Values &value_of) const
    {
        Rational total(0);
        for (const auto &[m, c] : m_terms) {
            Rational t = c;
            for (const auto &[v, e] : m.exponents()) {
                t *= bcf::pow(Rational(value_of(v)), e);
            }
            total += t;
        }
        return total;
    }

    Polynomial monic() const
    {
        if (is_zero()) {
            return *this;
        }
        return *this * Rational(1 / leading_coefficient());
    }

    friend bool operator==(const Polynomial &a, const Polynomial &b)
    {
        return a.m_terms == b.m_terms;
    }
    friend bool operator!=(const Polynomial &a, const Polynomial &b)
    {
        return !(a == b);
    }

    std::string to_string(const std::function<std::string(int)> &name) const
    {
        if (m_terms.empty()) {
            return "0";
        }
        std::string out;
        bool first = true;
        for (auto it = m_terms.rbegin(); it != m_terms.rend(); ++it) {
            const auto &[m, c] = *it;
            Rational mag = abs(c);
            if (first) {
                out += c < 0 ? "-" : "";
            } else {
                out += c < 0 ? " - " : " + ";
            }
            first = false;
            std::string mono;
            for (const auto &[v, e] : m.exponents()) {
                if (!mono.empty()) {
                    mono += '*';
                }
                mono += name(v);
                if (e != 1) {
                    mono += '^' + std::to_string(e);
                }
            }
            if (mono.empty()) {
                out += mag.get_str();
            } else if (mag == 1) {
                out += mono;
            } else {
                out += mag.get_str() + '*' + mono;
            }
        }
        return out;
    }

private:
    void add_term(const Monomial &m, const Rational &c)
    {
        if (c == 0) {
            return;
        }
        auto [it, inserted] = m_terms.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) {
                m_terms.erase(it);
            }
        }
    }

    void require_nonzero() const
    {
        if (m_terms.empty()) {
            throw Error(ErrorKind::PreconditionViolated, "leading term of the zero polynomial");
        }
    }

    TermMap m_terms;
};

Polynomial gcd(const Polynomial &a, const Polynomial &b);

namespace detail
{

inline Polynomial exact_quotient(const Polynomial &a, const Polynomial &b)
{
    auto q = a.divide_exact(b);
    if (!q) {
        throw Error(ErrorKind::PreconditionViolated, "expected exact polynomial division");
    }
    return std::move(*q);
}

// gcd of the coefficients of p viewed as a polynomial in v.
inline Polynomial content_in(const Polynomial &p, int v)
{
    Polynomial g;
    for (const auto &c : p.coefficients(v)) {
        if (c.is_zero()) {
            continue;
        }
        g = gcd(g, c);
        if (g.is_constant()) {
            return Polynomial(1);
        }
    }
    return g;
}

inline Polynomial primitive_in(const Polynomial &p, int v)
{
    if (p.is_zero()) {
        return p;
    }
    return exact_quotient(p, content_in(p, v));
}

inline Polynomial pseudo_remainder(Polynomial f, const Polynomial &g, int v)
{
    const int d = g.degree(v);
    const Polynomial lcg = g.coefficient(v, d);
    while (!f.is_zero()) {
        const int e = f.degree(v);
        if (e < d) {
            break;
        }
        const Polynomial lcf = f.coefficient(v, e);
        f = f * lcg - (lcf * g).times(Monomial::variable(v, e - d));
    }
    return f;
}

// gcd of two nonzero polynomials without monomial content.
inline Polynomial gcd_primitive(const Polynomial &a, const Polynomial &b)
{
    if (a.is_constant() || b.is_constant()) {
        return Polynomial(1);
    }
    if (a.divide_exact(b)) {
        return b.monic();
    }
    if (b.divide_exact(a)) {
        return a.monic();
    }
    const auto va = a.variables();
    const auto vb = b.variables();
    // A variable present on one side only: the gcd divides each of its coefficients there.
    for (int v : va) {
        if (!vb.count(v)) {
            Polynomial g = b;
            for (const auto &c : a.coefficients(v)) {
                if (c.is_zero()) {
                    continue;
                }
                g = gcd(g, c);
                if (g.is_constant()) {
                    return Polynomial(1);
                }
            }
            return g.monic();
        }
    }
    for (int v : vb) {
        if (!va.count(v)) {
            return gcd_primitive(b, a);
        }
    }
    int x = *va.begin();
    int best = std::max(a.degree(x), b.degree(x));
    for (int v : va) {
        const int d = std::max(a.degree(v), b.degree(v));
        if (d < best) {
            best = d;
            x = v;
        }
    }
    const Polynomial ca = content_in(a, x);
    const Polynomial cb = content_in(b, x);
    const Polynomial c = gcd(ca, cb);
    Polynomial f = exact_quotient(a, ca);
    Polynomial g = exact_quotient(b, cb);
    if (f.degree(x) < g.degree(x)) {
        std::swap(f, g);
    }
    while (!g.is_zero() && g.degree(x) > 0) {
        Polynomial r = pseudo_remainder(f, g, x);
        f = std::move(g);
        g = r.is_zero() ? r : primitive_in(r, x);
    }
    Polynomial h = g.is_zero() ? primitive_in(f, x) : Polynomial(1);
    return (c * h).monic();
}

} // namespace detail

// Monic greatest common divisor over Q; gcd(0, 0) = 0.
inline Polynomial gcd(const Polynomial &a, const Polynomial &b)
{
    if (a.is_zero()) {
        return b.monic();
    }
    if (b.is_zero()) {
        return a.monic();
    }
    const Monomial ma = a.monomial_content();
    const Monomial mb = b.monomial_content();
    const Monomial m = Monomial::gcd(ma, mb);
    const Polynomial g = detail::gcd_primitive(a.divided_by(ma), b.divided_by(mb));
    return g.times(m).monic();
}

} // namespace bcf

#endif
