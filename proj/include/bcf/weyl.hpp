#ifndef BCF_WEYL_HPP
#define BCF_WEYL_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bcf/cartan.hpp"
#include "bcf/error.hpp"
#include "bcf/numeric.hpp"

namespace bcf
{

using Word = std::vector<int>;

// A Weyl group element, faithfully represented by its action on fundamental-weight
// coordinates. `word` is the lexicographically least reduced word.
struct WeylElement {
    IntMatrix mat;
    Word word;

    std::size_t length() const noexcept
    {
        return word.size();
    }
    bool is_identity() const noexcept
    {
        return word.empty();
    }
    friend bool operator==(const WeylElement &a, const WeylElement &b)
    {
        return a.mat == b.mat;
    }
};

namespace detail
{

inline void check_letter(const CartanRealization &R, int i)
{
    if (i < 1 || i > R.r()) {
        throw Error(ErrorKind::IndexOutOfRange, "simple reflection index " + std::to_string(i));
    }
}

inline IntMatrix reflection_matrix(const CartanRealization &R, int i)
{
    check_letter(R, i);
    const std::size_t n = static_cast<std::size_t>(R.rtilde);
    const std::size_t col = static_cast<std::size_t>(i - 1);
    IntMatrix m = IntMatrix::identity(n);
    for (std::size_t a = 0; a < n; ++a) {
        m(a, col) -= R.cfull(a, col);
    }
    return m;
}

enum class RootSign { Positive, Negative };

// Sign of a real root given in fundamental-weight coordinates.
inline RootSign root_sign(const RatMatrix &cfull_inv, const std::vector<Integer> &beta)
{
    std::vector<Rational> b(beta.begin(), beta.end());
    const std::vector<Rational> x = cfull_inv * b;
    const bool nonneg = std::all_of(x.begin(), x.end(), [](const Rational &q) { return q >= 0; });
    const bool nonpos = std::all_of(x.begin(), x.end(), [](const Rational &q) { return q <= 0; });
    if (nonneg && !nonpos) {
        return RootSign::Positive;
    }
    if (nonpos && !nonneg) {
        return RootSign::Negative;
    }
    throw Error(ErrorKind::PreconditionViolated, "vector is not a root");
}

inline IntMatrix to_integer(const RatMatrix &m)
{
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!is_integer(m(i, j))) {
                throw Error(ErrorKind::PreconditionViolated, "matrix is not integral");
            }
            out(i, j) = m(i, j).get_num();
        }
    }
    return out;
}

} // namespace detail

// Length and lexicographically least reduced word, found by repeatedly stripping the
// smallest left descent (s_i with w^{-1}(alpha_i) negative).
inline std::pair<std::size_t, Word> length_and_reduce(const CartanRealization &R, const IntMatrix &mat)
{
    const RatMatrix cinv = inverse(R.cfull.cast<Rational>());
    IntMatrix winv = detail::to_integer(inverse(mat.cast<Rational>()));
    IntMatrix w = mat;
    const IntMatrix id = IntMatrix::identity(static_cast<std::size_t>(R.rtilde));
    Word word;
    while (w != id) {
        int descent = 0;
        for (int i = 1; i <= R.r() && descent == 0; ++i) {
            const auto beta = winv * simple_root(R, i);
            if (detail::root_sign(cinv, beta) == detail::RootSign::Negative) {
                descent = i;
            }
        }
        if (descent == 0) {
            throw Error(ErrorKind::PreconditionViolated, "matrix has no descent but is not the identity");
        }
        word.push_back(descent);
        const IntMatrix s = detail::reflection_matrix(R, descent);
        w = s * w;
        winv = winv * s;
    }
    return {word.size(), std::move(word)};
}

inline std::pair<std::size_t, Word> length_and_reduce(const CartanRealization &R, const WeylElement &w)
{
    return length_and_reduce(R, w.mat);
}

inline WeylElement identity_element(const CartanRealization &R)
{
    return {IntMatrix::identity(static_cast<std::size_t>(R.rtilde)), {}};
}

inline WeylElement simple_reflection(const CartanRealization &R, int i)
{
    return {detail::reflection_matrix(R, i), {i}};
}

inline WeylElement apply_word(const CartanRealization &R, const Word &word)
{
    IntMatrix m = IntMatrix::identity(static_cast<std::size_t>(R.rtilde));
    for (int i : word) {
        m = m * detail::reflection_matrix(R, i);
    }
    auto [len, reduced] = length_and_reduce(R, m);
    return {std::move(m), std::move(reduced)};
}

inline WeylElement multiply(const CartanRealization &R, const WeylElement &a, const WeylElement &b)
{
    IntMatrix m = a.mat * b.mat;
    auto [len, reduced] = length_and_reduce(R, m);
    return {std::move(m), std::move(reduced)};
}

inline WeylElement inverse(const CartanRealization &R, const WeylElement &w)
{
    Word rev(w.word.rbegin(), w.word.rend());
    return apply_word(R, rev);
}

inline bool is_reduced_word(const CartanRealization &R, const Word &word)
{
    return apply_word(R, word).length() == word.size();
}

// True when l(w s_i) > l(w), i.e. w(alpha_i) is a positive root.
inline bool is_right_ascent(const CartanRealization &R, const WeylElement &w, int i)
{
    detail::check_letter(R, i);
    const RatMatrix cinv = inverse(R.cfull.cast<Rational>());
    return detail::root_sign(cinv, w.mat * simple_root(R, i)) == detail::RootSign::Positive;
}

// Action on a weight given in fundamental-weight coordinates.
inline std::vector<Integer> act(const WeylElement &w, const std::vector<Integer> &lambda)
{
    return w.mat * lambda;
}

inline std::string word_to_string(const Word &w)
{
    std::string out;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) {
            out += ',';
        }
        out += std::to_string(w[k]);
    }
    return out;
}

} // namespace bcf

#endif
