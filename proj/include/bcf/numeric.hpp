#ifndef BCF_NUMERIC_HPP
#define BCF_NUMERIC_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "bcf/error.hpp"

namespace bcf
{

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational &q)
{
    return q.get_den() == 1;
}

inline std::string to_string(const Rational &q)
{
    return q.get_str();
}

inline std::string to_string(const Integer &z)
{
    return z.get_str();
}

// Exact integer power of a nonzero rational; negative exponents invert.
inline Rational pow(const Rational &base, long e)
{
    Rational result(1);
    Rational b = base;
    if (e < 0) {
        if (b == 0) {
            throw Error(ErrorKind::DivisionByZero, "zero raised to a negative power");
        }
        b = 1 / b;
        e = -e;
    }
    while (e > 0) {
        if (e & 1) {
            result *= b;
        }
        b *= b;
        e >>= 1;
    }
    return result;
}

// Dense row-major matrix over an exact ring.
template <typename T>
class Matrix
{
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : m_rows(rows), m_cols(cols), m_data(rows * cols, T(0)) {}
    Matrix(std::initializer_list<std::initializer_list<T>> rows)
    {
        m_rows = rows.size();
        m_cols = m_rows == 0 ? 0 : rows.begin()->size();
        m_data.reserve(m_rows * m_cols);
        for (const auto &row : rows) {
            if (row.size() != m_cols) {
                throw Error(ErrorKind::BadShape, "ragged matrix literal");
            }
            m_data.insert(m_data.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = T(1);
        }
        return m;
    }

    template <typename U>
    static Matrix from(const std::vector<std::vector<U>> &rows)
    {
        const std::size_t cols = rows.empty() ? 0 : rows.front().size();
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) {
                throw Error(ErrorKind::BadShape, "ragged matrix rows");
            }
            for (std::size_t j = 0; j < cols; ++j) {
                m(i, j) = T(rows[i][j]);
            }
        }
        return m;
    }

    template <typename U>
    Matrix<U> cast() const
    {
        Matrix<U> out(m_rows, m_cols);
        for (std::size_t i = 0; i < m_rows; ++i) {
            for (std::size_t j = 0; j < m_cols; ++j) {
                out(i, j) = U((*this)(i, j));
            }
        }
        return out;
    }

    std::size_t rows() const noexcept
    {
        return m_rows;
    }
    std::size_t cols() const noexcept
    {
        return m_cols;
    }
    bool is_square() const noexcept
    {
        return m_rows == m_cols;
    }

    T &operator()(std::size_t i, std::size_t j)
    {
        return m_data[i * m_cols + j];
    }
    const T &operator()(std::size_t i, std::size_t j) const
    {
        return m_data[i * m_cols + j];
    }
    const T &at(std::size_t i, std::size_t j) const
    {
        if (i >= m_rows || j >= m_cols) {
            throw Error(ErrorKind::IndexOutOfRange, "matrix index out of range");
        }
        return (*this)(i, j);
    }

    std::vector<T> row(std::size_t i) const
    {
        return std::vector<T>(m_data.begin() + static_cast<std::ptrdiff_t>(i * m_cols),
                              m_data.begin() + static_cast<std::ptrdiff_t>((i + 1) * m_cols));
    }
    std::vector<T> col(std::size_t j) const
    {
        std::vector<T> out(m_rows);
        for (std::size_t i = 0; i < m_rows; ++i) {
            out[i] = (*this)(i, j);
        }
        return out;
    }

    Matrix transpose() const
    {
        Matrix out(m_cols, m_rows);
        for (std::size_t i = 0; i < m_rows; ++i) {
            for (std::size_t j = 0; j < m_cols; ++j) {
                out(j, i) = (*this)(i, j);
            }
        }
        return out;
    }

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
    {
        if (r0 + nr > m_rows || c0 + nc > m_cols) {
            throw Error(ErrorKind::BadShape, "block exceeds matrix bounds");
        }
        Matrix out(nr, nc);
        for (std::size_t i = 0; i < nr; ++i) {
            for (std::size_t j = 0; j < nc; ++j) {
                out(i, j) = (*this)(r0 + i, c0 + j);
            }
        }
        return out;
    }

    friend bool operator==(const Matrix &a, const Matrix &b)
    {
        return a.m_rows == b.m_rows && a.m_cols == b.m_cols && a.m_data == b.m_data;
    }
    friend bool operator!=(const Matrix &a, const Matrix &b)
    {
        return !(a == b);
    }

    Matrix &operator+=(const Matrix &o)
    {
        check_same_shape(o);
        for (std::size_t k = 0; k < m_data.size(); ++k) {
            m_data[k] += o.m_data[k];
        }
        return *this;
    }
    Matrix &operator-=(const Matrix &o)
    {
        check_same_shape(o);
        for (std::size_t k = 0; k < m_data.size(); ++k) {
            m_data[k] -= o.m_data[k];
        }
        return *this;
    }
    Matrix operator-() const
    {
        Matrix out = *this;
        for (auto &x : out.m_data) {
            x = -x;
        }
        return out;
    }
    friend Matrix operator+(Matrix a, const Matrix &b)
    {
        a += b;
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix &b)
    {
        a -= b;
        return a;
    }
    friend Matrix operator*(const Matrix &a, const Matrix &b)
    {
        if (a.m_cols != b.m_rows) {
            throw Error(ErrorKind::BadShape, "matrix product shape mismatch");
        }
        Matrix out(a.m_rows, b.m_cols);
        for (std::size_t i = 0; i < a.m_rows; ++i) {
            for (std::size_t k = 0; k < a.m_cols; ++k) {
                const T &aik = a(i, k);
                if (aik == 0) {
                    continue;
                }
                for (std::size_t j = 0; j < b.m_cols; ++j) {
                    out(i, j) += aik * b(k, j);
                }
            }
        }
        return out;
    }
    friend std::vector<T> operator*(const Matrix &a, const std::vector<T> &v)
    {
        if (a.m_cols != v.size()) {
            throw Error(ErrorKind::BadShape, "matrix-vector shape mismatch");
        }
        std::vector<T> out(a.m_rows, T(0));
        for (std::size_t i = 0; i < a.m_rows; ++i) {
            for (std::size_t j = 0; j < a.m_cols; ++j) {
                out[i] += a(i, j) * v[j];
            }
        }
        return out;
    }

    friend std::ostream &operator<<(std::ostream &os, const Matrix &m)
    {
        os << '[';
        for (std::size_t i = 0; i < m.m_rows; ++i) {
            os << (i ? ", [" : "[");
            for (std::size_t j = 0; j < m.m_cols; ++j) {
                os << (j ? ", " : "") << m(i, j);
            }
            os << ']';
        }
        return os << ']';
    }

private:
    void check_same_shape(const Matrix &o) const
    {
        if (m_rows != o.m_rows || m_cols != o.m_cols) {
            throw Error(ErrorKind::BadShape, "matrix shape mismatch");
        }
    }

    std::size_t m_rows = 0;
    std::size_t m_cols = 0;
    std::vector<T> m_data;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

template <typename T>
std::string to_string(const Matrix<T> &m)
{
    std::ostringstream os;
    os << m;
    return os.str();
}

namespace detail
{

// Fraction-free row reduction state shared by det/rank/solve.
struct Elimination {
    RatMatrix reduced;
    std::vector<std::size_t> pivot_cols;
    Rational det_factor{1};
};

inline Elimination row_reduce(RatMatrix a)
{
    Elimination out;
    std::size_t row = 0;
    for (std::size_t c = 0; c < a.cols() && row < a.rows(); ++c) {
        std::size_t p = row;
        while (p < a.rows() && a(p, c) == 0) {
            ++p;
        }
        if (p == a.rows()) {
            continue;
        }
        if (p != row) {
            for (std::size_t j = 0; j < a.cols(); ++j) {
                std::swap(a(p, j), a(row, j));
            }
            out.det_factor = -out.det_factor;
        }
        const Rational piv = a(row, c);
        out.det_factor *= piv;
        for (std::size_t j = c; j < a.cols(); ++j) {
            a(row, j) /= piv;
        }
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a(i, c) == 0) {
                continue;
            }
            const Rational f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j) {
                a(i, j) -= f * a(row, j);
            }
        }
        out.pivot_cols.push_back(c);
        ++row;
    }
    out.reduced = std::move(a);
    return out;
}

} // namespace detail

inline Rational determinant(const RatMatrix &a)
{
    if (!a.is_square()) {
        throw Error(ErrorKind::BadShape, "determinant of a non-square matrix");
    }
    auto e = detail::row_reduce(a);
    if (e.pivot_cols.size() < a.rows()) {
        return Rational(0);
    }
    return e.det_factor;
}

inline Integer determinant(const IntMatrix &a)
{
    const Rational d = determinant(a.cast<Rational>());
    return d.get_num();
}

inline std::size_t rank(const RatMatrix &a)
{
    return detail::row_reduce(a).pivot_cols.size();
}

inline std::size_t rank(const IntMatrix &a)
{
    return rank(a.cast<Rational>());
}

inline RatMatrix inverse(const RatMatrix &a)
{
    if (!a.is_square()) {
        throw Error(ErrorKind::BadShape, "inverse of a non-square matrix");
    }
    const std::size_t n = a.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            aug(i, j) = a(i, j);
        }
        aug(i, n + i) = 1;
    }
    auto e = detail::row_reduce(std::move(aug));
    if (e.pivot_cols.size() < n || e.pivot_cols[n - 1] != n - 1) {
        throw Error(ErrorKind::Singular, "matrix is singular");
    }
    return e.reduced.block(0, n, n, n);
}

// Unique solution of a x = b for invertible a.
inline std::vector<Rational> solve(const RatMatrix &a, const std::vector<Rational> &b)
{
    if (!a.is_square() || a.rows() != b.size()) {
        throw Error(ErrorKind::BadShape, "solve: shape mismatch");
    }
    const std::size_t n = a.rows();
    RatMatrix aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            aug(i, j) = a(i, j);
        }
        aug(i, n) = b[i];
    }
    auto e = detail::row_reduce(std::move(aug));
    if (e.pivot_cols.size() < n || e.pivot_cols[n - 1] != n - 1) {
        throw Error(ErrorKind::Singular, "matrix is singular");
    }
    return e.reduced.col(n);
}

inline bool all_integer(const RatMatrix &a)
{
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (!is_integer(a(i, j))) {
                return false;
            }
        }
    }
    return true;
}

} // namespace bcf

#endif
