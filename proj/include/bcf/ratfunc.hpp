#ifndef BCF_RATFUNC_HPP
#define BCF_RATFUNC_HPP

#include <functional>
#include <string>
#include <utility>

#include "bcf/error.hpp"
#include "bcf/numeric.hpp"
#include "bcf/poly.hpp"

namespace bcf
{

// Reduced quotient of polynomials over Q with a monic denominator, so equality is
// structural.
class RatFunc
{
public:
    RatFunc() : m_den(1) {}
    RatFunc(const Rational &c) : m_num(c), m_den(1) {}
    RatFunc(long c) : RatFunc(Rational(c)) {}
    RatFunc(Polynomial p) : m_num(std::move(p)), m_den(1) {}
    RatFunc(Polynomial num, Polynomial den) : m_num(std::move(num)), m_den(std::move(den))
    {
        normalize();
    }

    static RatFunc variable(int v)
    {
        return RatFunc(Polynomial::variable(v));
    }

    const Polynomial &numerator() const noexcept
    {
        return m_num;
    }
    const Polynomial &denominator() const noexcept
    {
        return m_den;
    }
    bool is_zero() const noexcept
    {
        return m_num.is_zero();
    }
    bool is_laurent() const noexcept
    {
        return m_den.is_monomial();
    }
    bool is_laurent_monomial() const noexcept
    {
        return m_num.is_monomial() && m_den.is_monomial();
    }

    RatFunc inverse() const
    {
        if (m_num.is_zero()) {
            throw Error(ErrorKind::DivisionByZero, "inverse of the zero function");
        }
        return RatFunc(m_den, m_num);
    }

    RatFunc pow(long e) const
    {
        if (e < 0) {
            return inverse().pow(-e);
        }
        return RatFunc(m_num.pow(static_cast<unsigned>(e)), m_den.pow(static_cast<unsigned>(e)), Reduced{});
    }

    RatFunc operator-() const
    {
        return RatFunc(-m_num, m_den, Reduced{});
    }

    friend RatFunc operator+(const RatFunc &a, const RatFunc &b)
    {
        if (a.m_den == b.m_den) {
            return RatFunc(a.m_num + b.m_num, a.m_den);
        }
        if (a.m_den.is_monomial() && b.m_den.is_monomial()) {
            // Common denominator over the monomial lcm keeps degrees down.
            const Monomial &ma = a.m_den.leading_monomial();
            const Monomial &mb = b.m_den.leading_monomial();
            const Monomial l = ma * mb.divided_by(Monomial::gcd(ma, mb));
            const Polynomial na = (a.m_num * Rational(1 / a.m_den.leading_coefficient())).times(l.divided_by(ma));
            const Polynomial nb = (b.m_num * Rational(1 / b.m_den.leading_coefficient())).times(l.divided_by(mb));
            return RatFunc(na + nb, Polynomial::term(l, Rational(1)));
        }
        return RatFunc(a.m_num * b.m_den + b.m_num * a.m_den, a.m_den * b.m_den);
    }
    friend RatFunc operator-(const RatFunc &a, const RatFunc &b)
    {
        return a + (-b);
    }
    friend RatFunc operator*(const RatFunc &a, const RatFunc &b)
    {
        return RatFunc(a.m_num * b.m_num, a.m_den * b.m_den);
    }
    friend RatFunc operator/(const RatFunc &a, const RatFunc &b)
    {
        if (b.is_zero()) {
            throw Error(ErrorKind::DivisionByZero, "division by the zero function");
        }
        return RatFunc(a.m_num * b.m_den, a.m_den * b.m_num);
    }
    RatFunc &operator+=(const RatFunc &o)
    {
        return *this = *this + o;
    }
    RatFunc &operator*=(const RatFunc &o)
    {
        return *this = *this * o;
    }

    // d/dv by the quotient rule.
    RatFunc derivative(int v) const
    {
        return RatFunc(m_num.derivative(v) * m_den - m_num * m_den.derivative(v), m_den * m_den);
    }

    template <typename Values>
    Rational evaluate(const Values &value_of) const
    {
        const Rational d = m_den.evaluate(value_of);
        if (d == 0) {
            throw Error(ErrorKind::DivisionByZero, "denominator vanishes at the evaluation point");
        }
        return m_num.evaluate(value_of) / d;
    }

    friend bool operator==(const RatFunc &a, const RatFunc &b)
    {
        return a.m_num == b.m_num && a.m_den == b.m_den;
    }
    friend bool operator!=(const RatFunc &a, const RatFunc &b)
    {
        return !(a == b);
    }

    std::string to_string(const std::function<std::string(int)> &name) const
    {
        if (m_den == Polynomial(1)) {
            return m_num.to_string(name);
        }
        return "(" + m_num.to_string(name) + ")/(" + m_den.to_string(name) + ")";
    }

private:
    struct Reduced {
    };
    // Parts already coprime with a monic denominator (powers and negation preserve this).
    RatFunc(Polynomial num, Polynomial den, Reduced) : m_num(std::move(num)), m_den(std::move(den))
    {
        if (m_num.is_zero()) {
            m_den = Polynomial(1);
        }
    }

    void normalize()
    {
        if (m_den.is_zero()) {
            throw Error(ErrorKind::DivisionByZero, "zero denominator");
        }
        if (m_num.is_zero()) {
            m_den = Polynomial(1);
            return;
        }
        const Monomial common = Monomial::gcd(m_num.monomial_content(), m_den.monomial_content());
        if (!common.is_one()) {
            m_num = m_num.divided_by(common);
            m_den = m_den.divided_by(common);
        }
        if (!m_den.is_monomial()) {
            const Monomial dm = m_den.monomial_content();
            Polynomial rest = m_den.divided_by(dm);
            if (auto q = m_num.divide_exact(rest)) {
                m_num = std::move(*q);
                m_den = Polynomial::term(dm, Rational(1));
            } else {
                const Polynomial g = gcd(m_num, rest);
                if (!g.is_constant()) {
                    m_num = detail::exact_quotient(m_num, g);
                    rest = detail::exact_quotient(rest, g);
                }
                m_den = rest.times(dm);
            }
        }
        const Rational lc = m_den.leading_coefficient();
        if (lc != 1) {
            const Rational inv = 1 / lc;
            m_num *= inv;
            m_den *= inv;
        }
    }

    Polynomial m_num;
    Polynomial m_den;
};

} // namespace bcf

#endif
