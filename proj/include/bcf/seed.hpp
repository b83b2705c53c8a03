#ifndef BCF_SEED_HPP
#define BCF_SEED_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bcf/cartan.hpp"
#include "bcf/error.hpp"
#include "bcf/numeric.hpp"
#include "bcf/weyl.hpp"

namespace bcf
{

// A shuffle of a reduced word for u (negative letters) and one for v (positive letters).
struct DoubleWord {
    CartanRealization realization;
    Word letters;
    WeylElement u;
    WeylElement v;

    int m() const noexcept
    {
        return static_cast<int>(letters.size());
    }
    int rtilde() const noexcept
    {
        return realization.rtilde;
    }
    Word u_word() const
    {
        Word out;
        for (int l : letters) {
            if (l < 0) {
                out.push_back(-l);
            }
        }
        return out;
    }
    Word v_word() const
    {
        Word out;
        for (int l : letters) {
            if (l > 0) {
                out.push_back(l);
            }
        }
        return out;
    }
};

inline DoubleWord parse_double_word(const CartanRealization &R, const Word &letters)
{
    for (int l : letters) {
        if (l == 0 || l > R.r() || -l > R.r()) {
            throw Error(ErrorKind::IndexOutOfRange, "letter " + std::to_string(l) + " outside +-1..+-" + std::to_string(R.r()));
        }
    }
    DoubleWord w;
    w.realization = R;
    w.letters = letters;
    const Word uw = w.u_word();
    const Word vw = w.v_word();
    w.u = apply_word(R, uw);
    if (w.u.length() != uw.size()) {
        throw Error(ErrorKind::NotReduced, "negative letters do not form a reduced word");
    }
    w.v = apply_word(R, vw);
    if (w.v.length() != vw.size()) {
        throw Error(ErrorKind::NotReduced, "positive letters do not form a reduced word");
    }
    return w;
}

// Index bookkeeping for a double word. Labels of I are -rtilde..-1 and 1..m; labels
// m+1..m+rtilde name the torus slots, with weight k-m and sign +1. Label k < 0 has
// weight |k| and sign -1.
class WordIndex
{
public:
    explicit WordIndex(const DoubleWord &w) : m_letters(w.letters), m_m(w.m()), m_rt(w.rtilde()) {}

    int m() const noexcept
    {
        return m_m;
    }
    int rtilde() const noexcept
    {
        return m_rt;
    }
    std::size_t size() const noexcept
    {
        return static_cast<std::size_t>(m_m + m_rt);
    }

    std::vector<int> labels() const
    {
        std::vector<int> out;
        for (int k = -m_rt; k <= -1; ++k) {
            out.push_back(k);
        }
        for (int k = 1; k <= m_m; ++k) {
            out.push_back(k);
        }
        return out;
    }

    bool contains(int k) const noexcept
    {
        return (k >= -m_rt && k <= -1) || (k >= 1 && k <= m_m);
    }

    std::size_t position(int k) const
    {
        check(k);
        return k < 0 ? static_cast<std::size_t>(k + m_rt) : static_cast<std::size_t>(m_rt + k - 1);
    }

    int label_at(std::size_t pos) const
    {
        const int p = static_cast<int>(pos);
        return p < m_rt ? p - m_rt : p - m_rt + 1;
    }

    int weight(int k) const
    {
        if (k < 0) {
            check(k);
            return -k;
        }
        if (k > m_m) {
            if (k > m_m + m_rt) {
                throw Error(ErrorKind::IndexOutOfRange, "slot " + std::to_string(k));
            }
            return k - m_m;
        }
        check(k);
        return std::abs(m_letters[static_cast<std::size_t>(k - 1)]);
    }

    int eps(int k) const
    {
        if (k < 0) {
            return -1;
        }
        if (k > m_m) {
            return 1;
        }
        if (k == 0) {
            throw Error(ErrorKind::IndexOutOfRange, "index 0");
        }
        return m_letters[static_cast<std::size_t>(k - 1)] > 0 ? 1 : -1;
    }

    // k^+ within I, or m+1 when no later letter carries the same weight.
    int successor(int k) const
    {
        check(k);
        const int wt = weight(k);
        for (int l = std::max(k + 1, 1); l <= m_m; ++l) {
            if (weight(l) == wt) {
                return l;
            }
        }
        return m_m + 1;
    }

    // Like successor, but continuing into the torus slots: absent letters map to m + weight.
    int slot_successor(int k) const
    {
        const int s = successor(k);
        return s <= m_m ? s : m_m + weight(k);
    }

    bool frozen(int k) const
    {
        return k < 0 || successor(k) > m_m;
    }

private:
    void check(int k) const
    {
        if (!contains(k)) {
            throw Error(ErrorKind::IndexOutOfRange, "index " + std::to_string(k) + " not in I");
        }
    }

    Word m_letters;
    int m_m;
    int m_rt;
};

inline int successor(const DoubleWord &w, int k)
{
    return WordIndex(w).successor(k);
}

// Exchange data: labelled index set with frozen flags, exchange matrix, symmetrizers.
struct Seed {
    std::vector<int> labels;
    std::vector<bool> frozen;
    std::vector<int> weights;
    RatMatrix B;
    std::vector<int> d;
    std::optional<DoubleWord> origin;

    std::size_t size() const noexcept
    {
        return labels.size();
    }

    std::size_t position(int label) const
    {
        auto it = std::find(labels.begin(), labels.end(), label);
        if (it == labels.end()) {
            throw Error(ErrorKind::IndexOutOfRange, "label " + std::to_string(label) + " not in seed");
        }
        return static_cast<std::size_t>(it - labels.begin());
    }

    const Rational &b(int j, int k) const
    {
        return B(position(j), position(k));
    }

    std::vector<int> unfrozen() const
    {
        std::vector<int> out;
        for (std::size_t p = 0; p < labels.size(); ++p) {
            if (!frozen[p]) {
                out.push_back(labels[p]);
            }
        }
        return out;
    }
};

// Builds a seed from a raw exchange matrix; labels default to 1..n.
inline Seed make_seed(RatMatrix B, std::vector<bool> frozen, std::vector<int> d, std::vector<int> labels = {})
{
    const std::size_t n = B.rows();
    if (!B.is_square() || frozen.size() != n || d.size() != n) {
        throw Error(ErrorKind::BadShape, "seed data sizes disagree");
    }
    if (labels.empty()) {
        for (std::size_t p = 0; p < n; ++p) {
            labels.push_back(static_cast<int>(p + 1));
        }
    }
    if (labels.size() != n) {
        throw Error(ErrorKind::BadShape, "label count disagrees with matrix size");
    }
    Seed s;
    s.labels = std::move(labels);
    s.frozen = std::move(frozen);
    s.weights.assign(n, 0);
    s.B = std::move(B);
    s.d = std::move(d);
    return s;
}

namespace detail
{

inline int iv(bool b) noexcept
{
    return b ? 1 : 0;
}

} // namespace detail

// The bracket sum inside b_jk, before the factor C_{|i_k|,|i_j|} / 2.
inline int exchange_bracket(const WordIndex &ix, int j, int k)
{
    using detail::iv;
    const int m = ix.m();
    const int jp = ix.successor(j);
    const int kp = ix.successor(k);
    return ix.eps(j) * iv(j == kp) - ix.eps(k) * iv(jp == k) + ix.eps(j) * iv(k < j && j < kp && j > 0) -
           ix.eps(jp) * iv(k < jp && jp < kp && jp <= m) - ix.eps(k) * iv(j < k && k < jp && k > 0) +
           ix.eps(kp) * iv(j < kp && kp < jp && kp <= m);
}

inline Seed build_seed(const DoubleWord &w)
{
    const WordIndex ix(w);
    const auto &R = w.realization;
    Seed s;
    s.labels = ix.labels();
    const std::size_t n = s.labels.size();
    s.B = RatMatrix(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        const int j = s.labels[a];
        s.frozen.push_back(ix.frozen(j));
        s.weights.push_back(ix.weight(j));
        s.d.push_back(R.d(ix.weight(j)));
        for (std::size_t b = 0; b < n; ++b) {
            const int k = s.labels[b];
            const int bracket = exchange_bracket(ix, j, k);
            if (bracket != 0) {
                s.B(a, b) = make_rational(R.c(ix.weight(k), ix.weight(j)) * bracket, 2);
            }
        }
    }
    s.origin = w;
    return s;
}

// M_jk = C_{|i_k|,|i_j|} ([j^+, k^+ > m] + [j, k < 0]) / 2.
inline RatMatrix frozen_shift(const DoubleWord &w)
{
    const WordIndex ix(w);
    const auto labels = ix.labels();
    const std::size_t n = labels.size();
    const int m = ix.m();
    RatMatrix M(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        const int j = labels[a];
        for (std::size_t b = 0; b < n; ++b) {
            const int k = labels[b];
            const int count = detail::iv(ix.successor(j) > m && ix.successor(k) > m) + detail::iv(j < 0 && k < 0);
            if (count != 0) {
                M(a, b) = make_rational(w.realization.c(ix.weight(k), ix.weight(j)) * count, 2);
            }
        }
    }
    return M;
}

struct EnsembleMatrices {
    RatMatrix B;
    RatMatrix M;
    RatMatrix Btilde;
    Rational detBtilde;
};

inline EnsembleMatrices build_ensemble(const Seed &seed, const RatMatrix &M)
{
    if (M.rows() != seed.size() || M.cols() != seed.size()) {
        throw Error(ErrorKind::BadShape, "shift matrix does not match the seed");
    }
    EnsembleMatrices e;
    e.B = seed.B;
    e.M = M;
    e.Btilde = seed.B + M;
    if (!all_integer(e.Btilde)) {
        throw Error(ErrorKind::NonIntegerBtilde, "B + M has a non-integer entry");
    }
    e.detBtilde = determinant(e.Btilde);
    return e;
}

inline EnsembleMatrices build_ensemble(const Seed &seed)
{
    if (!seed.origin) {
        throw Error(ErrorKind::PreconditionViolated, "seed has no originating double word");
    }
    return build_ensemble(seed, frozen_shift(*seed.origin));
}

inline EnsembleMatrices build_ensemble(const DoubleWord &w)
{
    return build_ensemble(build_seed(w), frozen_shift(w));
}

// b_jk d_k == -b_kj d_j for all j, k.
inline bool is_skew_symmetrized(const Seed &s)
{
    for (std::size_t a = 0; a < s.size(); ++a) {
        for (std::size_t b = 0; b < s.size(); ++b) {
            if (s.B(a, b) * s.d[b] != -s.B(b, a) * s.d[a]) {
                return false;
            }
        }
    }
    return true;
}

inline std::size_t unfrozen_row_rank(const Seed &s)
{
    const auto rows = s.unfrozen();
    RatMatrix sub(rows.size(), s.size());
    for (std::size_t a = 0; a < rows.size(); ++a) {
        const std::size_t p = s.position(rows[a]);
        for (std::size_t b = 0; b < s.size(); ++b) {
            sub(a, b) = s.B(p, b);
        }
    }
    return rank(sub);
}

} // namespace bcf

#endif
