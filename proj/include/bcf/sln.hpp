#ifndef BCF_SLN_HPP
#define BCF_SLN_HPP

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bcf/cartan.hpp"
#include "bcf/error.hpp"
#include "bcf/factor.hpp"
#include "bcf/io.hpp"
#include "bcf/numeric.hpp"
#include "bcf/random.hpp"
#include "bcf/seed.hpp"
#include "bcf/weyl.hpp"

namespace bcf::sl
{

// An element of SL_n over Q.
class GroupPoint
{
public:
    explicit GroupPoint(RatMatrix mat) : m_mat(std::move(mat))
    {
        if (!m_mat.is_square() || m_mat.rows() < 2) {
            throw Error(ErrorKind::BadShape, "group point must be square of size >= 2");
        }
        if (determinant(m_mat) != 1) {
            throw Error(ErrorKind::PreconditionViolated, "determinant is not 1");
        }
    }
    std::size_t n() const noexcept
    {
        return m_mat.rows();
    }
    const RatMatrix &mat() const noexcept
    {
        return m_mat;
    }

private:
    RatMatrix m_mat;
};

struct GaussParts {
    RatMatrix lower;
    RatMatrix diag;
    RatMatrix upper;
};

inline void check_root_index(std::size_t n, int i)
{
    if (i == 0 || std::abs(i) >= static_cast<int>(n)) {
        throw Error(ErrorKind::IndexOutOfRange, "root index " + std::to_string(i) + " for SL_" + std::to_string(n));
    }
}

// x_i(t) for i > 0, x_{-|i|}(t) for i < 0.
inline RatMatrix elem(std::size_t n, int i, const Rational &t)
{
    check_root_index(n, i);
    RatMatrix g = RatMatrix::identity(n);
    const std::size_t a = static_cast<std::size_t>(std::abs(i) - 1);
    if (i > 0) {
        g(a, a + 1) = t;
    } else {
        g(a + 1, a) = t;
    }
    return g;
}

// alpha_j^vee(a) = diag(.., a, 1/a, ..) at positions j, j+1.
inline RatMatrix coroot(std::size_t n, int j, const Rational &a)
{
    check_root_index(n, j);
    if (a == 0) {
        throw Error(ErrorKind::DivisionByZero, "coroot at zero");
    }
    RatMatrix g = RatMatrix::identity(n);
    const std::size_t p = static_cast<std::size_t>(j - 1);
    g(p, p) = a;
    g(p + 1, p + 1) = 1 / a;
    return g;
}

enum class RepVariant { Bar, DoubleBar };

inline RatMatrix simple_rep(std::size_t n, int i, RepVariant variant)
{
    check_root_index(n, i);
    RatMatrix g = RatMatrix::identity(n);
    const std::size_t a = static_cast<std::size_t>(i - 1);
    const int s = variant == RepVariant::Bar ? 1 : -1;
    g(a, a) = 0;
    g(a + 1, a + 1) = 0;
    g(a, a + 1) = -s;
    g(a + 1, a) = s;
    return g;
}

// Representative along a reduced word.
inline RatMatrix weyl_rep(std::size_t n, const Word &word, RepVariant variant = RepVariant::Bar)
{
    RatMatrix g = RatMatrix::identity(n);
    for (int i : word) {
        g = g * simple_rep(n, i, variant);
    }
    return g;
}

inline RatMatrix weyl_rep(std::size_t n, const WeylElement &w, RepVariant variant = RepVariant::Bar)
{
    return weyl_rep(n, w.word, variant);
}

inline Word reversed(const Word &w)
{
    return Word(w.rbegin(), w.rend());
}

inline Rational leading_minor(const RatMatrix &g, std::size_t i)
{
    return determinant(g.block(0, 0, i, i));
}

// g = lower * diag * upper; NotInG0 names the first vanishing leading minor.
inline GaussParts gauss(const RatMatrix &g)
{
    const std::size_t n = g.rows();
    RatMatrix a = g;
    GaussParts out{RatMatrix::identity(n), RatMatrix::identity(n), RatMatrix::identity(n)};
    for (std::size_t c = 0; c < n; ++c) {
        if (a(c, c) == 0) {
            throw Error(ErrorKind::NotInG0, "leading minor " + std::to_string(c + 1) + " vanishes");
        }
        const Rational piv = a(c, c);
        out.diag(c, c) = piv;
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a(r, c) == 0) {
                continue;
            }
            const Rational f = a(r, c) / piv;
            out.lower(r, c) = f;
            for (std::size_t j = c; j < n; ++j) {
                a(r, j) -= f * a(c, j);
            }
        }
        for (std::size_t j = c + 1; j < n; ++j) {
            out.upper(c, j) = a(c, j) / piv;
        }
    }
    return out;
}

inline GaussParts gauss(const GroupPoint &g)
{
    return gauss(g.mat());
}

// Delta^{omega_i}_{w,w'}(g): leading i x i minor of wbar^{-1} g w'bar.
inline Rational minor(const RatMatrix &g, int i, const Word &w, const Word &wp)
{
    const std::size_t n = g.rows();
    if (i < 1 || i >= static_cast<int>(n)) {
        throw Error(ErrorKind::IndexOutOfRange, "minor index " + std::to_string(i));
    }
    // Signed permutation matrices are orthogonal.
    const RatMatrix h = weyl_rep(n, w).transpose() * g * weyl_rep(n, wp);
    return leading_minor(h, static_cast<std::size_t>(i));
}

inline RatMatrix h0(std::size_t n)
{
    RatMatrix h = RatMatrix::identity(n);
    for (std::size_t a = 1; a < n; a += 2) {
        h(a, a) = -1;
    }
    return h;
}

inline RatMatrix theta(const RatMatrix &g)
{
    const RatMatrix h = h0(g.rows());
    return h * inverse(g.transpose()) * h;
}

inline RatMatrix iota(const RatMatrix &g)
{
    const RatMatrix h = h0(g.rows());
    return h * inverse(g) * h;
}

inline RatMatrix sigma(const RatMatrix &g)
{
    return inverse(g.transpose());
}

enum class Involution { Theta, Iota, Sigma };

inline RatMatrix involution(const RatMatrix &g, Involution which)
{
    switch (which) {
        case Involution::Theta:
            return theta(g);
        case Involution::Iota:
            return iota(g);
        case Involution::Sigma:
            return sigma(g);
    }
    return g;
}

// zeta^{u,v}(x) = theta([ubar^{-1} x]_-^{-1} ubar^{-1} x (v^{-1})bar [x (v^{-1})bar]_+^{-1});
// u and v are given by reduced words.
inline RatMatrix twist(const Word &u, const Word &v, const RatMatrix &x)
{
    const std::size_t n = x.rows();
    const RatMatrix ubar_inv = weyl_rep(n, u).transpose();
    const RatMatrix vinv_bar = weyl_rep(n, reversed(v));
    const RatMatrix left = ubar_inv * x;
    const RatMatrix right = x * vinv_bar;
    try {
        const GaussParts gl = gauss(left);
        const GaussParts gr = gauss(right);
        return theta(inverse(gl.lower) * left * vinv_bar * inverse(gr.upper));
    } catch (const Error &e) {
        if (e.kind() == ErrorKind::NotInG0) {
            throw Error(ErrorKind::NotInCell, std::string("twist factorization failed: ") + e.what());
        }
        throw;
    }
}

// pi_-(x) = wbar^{-1} [x wbar^{-1}]_+ wbar.
inline RatMatrix pi_minus(const RatMatrix &x, const Word &w)
{
    const RatMatrix wbar = weyl_rep(x.rows(), w);
    const RatMatrix winv = wbar.transpose();
    try {
        return winv * gauss(x * winv).upper * wbar;
    } catch (const Error &e) {
        if (e.kind() == ErrorKind::NotInG0) {
            throw Error(ErrorKind::NotInCell, std::string("pi_- factorization failed: ") + e.what());
        }
        throw;
    }
}

// pi_+(x) = wbar [wbar^{-1} x]_- wbar^{-1}.
inline RatMatrix pi_plus(const RatMatrix &x, const Word &w)
{
    const RatMatrix wbar = weyl_rep(x.rows(), w);
    const RatMatrix winv = wbar.transpose();
    try {
        return wbar * gauss(winv * x).lower * winv;
    } catch (const Error &e) {
        if (e.kind() == ErrorKind::NotInG0) {
            throw Error(ErrorKind::NotInCell, std::string("pi_+ factorization failed: ") + e.what());
        }
        throw;
    }
}

inline std::size_t group_size(const CartanRealization &R)
{
    if (R.core.C != type_a_matrix(R.r()) || R.rtilde != R.r()) {
        throw Error(ErrorKind::PreconditionViolated, "the SL_n laboratory needs a type A realization");
    }
    return static_cast<std::size_t>(R.r() + 1);
}

// x_{i_1}(t_1) ... x_{i_m}(t_m) alpha_1^vee(t_{m+1}) ... alpha_r^vee(t_{m+r}).
inline RatMatrix build_tparam(const DoubleWord &w, const std::vector<Rational> &t)
{
    const std::size_t n = group_size(w.realization);
    const std::size_t m = w.letters.size();
    if (t.size() != m + n - 1) {
        throw Error(ErrorKind::BadShape, "expected " + std::to_string(m + n - 1) + " parameters");
    }
    RatMatrix x = RatMatrix::identity(n);
    for (std::size_t k = 0; k < m; ++k) {
        if (t[k] == 0) {
            throw Error(ErrorKind::PreconditionViolated, "parameters must be nonzero");
        }
        x = x * elem(n, w.letters[k], t[k]);
    }
    for (std::size_t j = 1; j < n; ++j) {
        x = x * coroot(n, static_cast<int>(j), t[m + j - 1]);
    }
    return x;
}

// x' = zeta^{u^{-1}, v^{-1}}(iota(x)).
inline RatMatrix chamber_point(const DoubleWord &w, const RatMatrix &x)
{
    return twist(reversed(w.u_word()), reversed(w.v_word()), iota(x));
}

// A_k(x') = Delta^{omega_{|i_k|}}_{u_{<=k}, v_{>k}}(x') for every k in I, in seed order.
inline std::vector<Rational> cluster_minors(const DoubleWord &w, const RatMatrix &xp)
{
    const WordIndex ix(w);
    std::vector<Rational> out;
    for (int k : ix.labels()) {
        Word u_le;
        Word v_gt;
        if (k < 0) {
            v_gt = reversed(w.v_word());
        } else {
            for (int l = 1; l <= ix.m(); ++l) {
                const int letter = w.letters[static_cast<std::size_t>(l - 1)];
                if (l <= k && letter < 0) {
                    u_le.push_back(-letter);
                }
                if (l > k && letter > 0) {
                    v_gt.push_back(letter);
                }
            }
            v_gt = reversed(v_gt);
        }
        out.push_back(minor(xp, ix.weight(k), u_le, v_gt));
    }
    return out;
}

namespace detail
{

inline Rational monomial(const std::vector<Rational> &values, const std::vector<Rational> &exponents)
{
    Rational p(1);
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (exponents[k] == 0) {
            continue;
        }
        if (!is_integer(exponents[k])) {
            throw Error(ErrorKind::NonIntegerExponent, "exponent " + exponents[k].get_str());
        }
        p *= pow(values[k], exponents[k].get_num().get_si());
    }
    return p;
}

inline Json rationals_json(const std::vector<Rational> &v)
{
    Json j = Json::array();
    for (const auto &q : v) {
        j.push_back(to_json(q));
    }
    return j;
}

inline Word word_from(const Word &w, std::size_t from, std::size_t to)
{
    return Word(w.begin() + static_cast<std::ptrdiff_t>(from), w.begin() + static_cast<std::ptrdiff_t>(to));
}

} // namespace detail

// y = prod_k wbar_{k+1} x_{-i_k}(p_k) wbar_{k+1}^{-1} with w_k = s_{i_n} ... s_{i_k};
// recovers p_k = Delta^{omega_{i_k}}_{w_k, w_{k+1}}(y).
inline CheckResult verify_group_fact(std::size_t n, const Word &word, const std::vector<Rational> &p)
{
    CheckResult res;
    res.check = "group-fact";
    res.instance = "SL" + std::to_string(n) + " " + describe(word);
    const auto R = preset("A" + std::to_string(n - 1));
    if (!is_reduced_word(R, word)) {
        throw Error(ErrorKind::NotReduced, "word is not reduced");
    }
    if (p.size() != word.size()) {
        throw Error(ErrorKind::BadShape, "one parameter per letter");
    }
    const std::size_t N = word.size();
    auto suffix = [&](std::size_t k) { return reversed(detail::word_from(word, k - 1, N)); }; // w_k, k = 1..N+1
    RatMatrix y = RatMatrix::identity(n);
    for (std::size_t k = 1; k <= N; ++k) {
        const RatMatrix wb = weyl_rep(n, suffix(k + 1));
        y = y * wb * elem(n, -word[k - 1], p[k - 1]) * wb.transpose();
    }
    std::vector<Rational> rec;
    for (std::size_t k = 1; k <= N; ++k) {
        rec.push_back(minor(y, word[k - 1], suffix(k), suffix(k + 1)));
    }
    res.pass = rec == p;
    res.witness = {{"p", detail::rationals_json(p)}, {"recovered", detail::rationals_json(rec)}};
    return res;
}

// x = x_{i_1}(t_1) ... x_{i_n}(t_n), y = pi_-(x); recovers t_k from minors of y.
inline CheckResult verify_uni_fact(std::size_t n, const Word &word, const std::vector<Rational> &t)
{
    CheckResult res;
    res.check = "uni-fact";
    res.instance = "SL" + std::to_string(n) + " " + describe(word);
    const auto R = preset("A" + std::to_string(n - 1));
    if (!is_reduced_word(R, word)) {
        throw Error(ErrorKind::NotReduced, "word is not reduced");
    }
    if (t.size() != word.size()) {
        throw Error(ErrorKind::BadShape, "one parameter per letter");
    }
    const std::size_t N = word.size();
    RatMatrix x = RatMatrix::identity(n);
    for (std::size_t k = 0; k < N; ++k) {
        x = x * elem(n, word[k], t[k]);
    }
    const RatMatrix y = pi_minus(x, word);
    auto suffix = [&](std::size_t k) { return reversed(detail::word_from(word, k - 1, N)); };
    std::vector<Rational> rec;
    for (std::size_t k = 1; k <= N; ++k) {
        const int ik = word[k - 1];
        const Rational a = minor(y, ik, suffix(k), {});
        const Rational b = minor(y, ik, suffix(k + 1), {});
        if (a == 0 || b == 0) {
            throw Error(ErrorKind::NotInCell, "vanishing minor in the unipotent factorization");
        }
        Rational v = 1 / (a * b);
        for (int j = 1; j <= R.rtilde; ++j) {
            if (j != ik && R.c(j, ik) != 0) {
                v *= pow(minor(y, j, suffix(k + 1), {}), -R.c(j, ik));
            }
        }
        rec.push_back(v);
    }
    res.pass = rec == t;
    res.witness = {{"t", detail::rationals_json(t)}, {"recovered", detail::rationals_json(rec)}};
    return res;
}

// Random g in SL_n with entries drawn from Rng, rescaling the first row by 1/det.
inline RatMatrix random_group_point(std::size_t n, Rng &rng, long bound = 100)
{
    while (true) {
        RatMatrix g(n, n);
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                g(a, b) = rng.positive_rational(bound);
                if (rng.coin()) {
                    g(a, b) = -g(a, b);
                }
            }
        }
        const Rational d = determinant(g);
        if (d == 0) {
            continue;
        }
        for (std::size_t b = 0; b < n; ++b) {
            g(0, b) /= d;
        }
        return g;
    }
}

// Delta_{u,v} Delta_{us_i,vs_i} = Delta_{us_i,v} Delta_{u,vs_i} + prod_{k != i} Delta^{omega_k}_{u,v}^{-C_ki}.
inline CheckResult verify_gendetid(std::size_t n, const Word &u, const Word &v, int i, std::size_t trials,
                                   std::uint64_t rng_seed)
{
    CheckResult res;
    res.check = "gendetid";
    res.instance = "SL" + std::to_string(n) + " u=(" + word_to_string(u) + ") v=(" + word_to_string(v) +
                   ") i=" + std::to_string(i);
    const auto R = preset("A" + std::to_string(n - 1));
    check_root_index(n, i);
    Word us = u;
    us.push_back(i);
    Word vs = v;
    vs.push_back(i);
    if (!is_reduced_word(R, u) || !is_reduced_word(R, v)) {
        throw Error(ErrorKind::NotReduced, "u and v must be given by reduced words");
    }
    if (!is_reduced_word(R, us) || !is_reduced_word(R, vs)) {
        throw Error(ErrorKind::PreconditionViolated, "needs l(u s_i) > l(u) and l(v s_i) > l(v)");
    }
    Json failures = Json::array();
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng(rng_seed, t);
        const RatMatrix g = random_group_point(n, rng);
        const Rational lhs = minor(g, i, u, v) * minor(g, i, us, vs);
        Rational rhs = minor(g, i, us, v) * minor(g, i, u, vs);
        Rational prod(1);
        for (int k = 1; k < static_cast<int>(n); ++k) {
            if (k != i && R.c(k, i) != 0) {
                prod *= pow(minor(g, k, u, v), -R.c(k, i));
            }
        }
        rhs += prod;
        if (lhs != rhs) {
            failures.push_back({{"trial", t}, {"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}});
        }
    }
    res.pass = failures.empty();
    res.witness = {{"trials", trials}, {"failures", failures}};
    return res;
}

// t_j = prod_k A_k(x')^{Psi_jk} (j <= m) and t_{m+j} = prod_{|i_k|=j} A_k(x')^{(eps_{k+}-eps_k)/2}.
inline CheckResult verify_thm_main(const DoubleWord &w, const std::vector<Rational> &t)
{
    CheckResult res;
    res.check = "thm-main";
    res.instance = describe(w.letters, "SL" + std::to_string(group_size(w.realization)));
    const RatMatrix x = build_tparam(w, t);
    const RatMatrix xp = chamber_point(w, x);
    const auto A = cluster_minors(w, xp);
    for (const auto &a : A) {
        if (a == 0) {
            throw Error(ErrorKind::NotInCell, "a cluster minor vanishes at x'");
        }
    }
    const RatMatrix ex = chamber_exponents(w);
    const std::size_t m = w.letters.size();
    Json tk_fail = Json::array();
    Json aom_fail = Json::array();
    for (std::size_t j = 0; j < ex.rows(); ++j) {
        const Rational got = detail::monomial(A, ex.row(j));
        if (got != t[j]) {
            (j < m ? tk_fail : aom_fail).push_back({{"row", j + 1}, {"expected", to_json(t[j])}, {"got", to_json(got)}});
        }
    }
    res.pass = tk_fail.empty() && aom_fail.empty();
    res.witness = {{"t", detail::rationals_json(t)},
                   {"A", detail::rationals_json(A)},
                   {"tkFailures", tk_fail},
                   {"aomFailures", aom_fail}};
    return res;
}

// X_j computed from t via t' = t^E and X = t'^D, against prod_k A_k(x')^{Btilde_jk}.
inline CheckResult verify_xtoa(const DoubleWord &w, const std::vector<Rational> &t)
{
    CheckResult res;
    res.check = "x-to-a";
    res.instance = describe(w.letters, "SL" + std::to_string(group_size(w.realization)));
    const RatMatrix x = build_tparam(w, t);
    const auto A = cluster_minors(w, chamber_point(w, x));
    const FactorMatrices f = build_def(w);
    std::vector<Rational> tp;
    for (std::size_t j = 0; j < f.Em.rows(); ++j) {
        tp.push_back(detail::monomial(t, f.Em.cast<Rational>().row(j)));
    }
    const RatMatrix Dq = f.Dm.cast<Rational>();
    const RatMatrix Bt = build_ensemble(w).Btilde;
    Json failures = Json::array();
    const auto labels = build_seed(w).labels;
    std::vector<Rational> X;
    for (std::size_t j = 0; j < Dq.rows(); ++j) {
        const Rational lhs = detail::monomial(tp, Dq.row(j));
        const Rational rhs = detail::monomial(A, Bt.row(j));
        X.push_back(lhs);
        if (lhs != rhs) {
            failures.push_back({{"j", labels[j]}, {"direct", to_json(lhs)}, {"minors", to_json(rhs)}});
        }
    }
    res.pass = failures.empty();
    res.witness = {{"X", detail::rationals_json(X)}, {"failures", failures}};
    return res;
}

struct NewlemSelection {
    std::optional<std::size_t> k; // position within the reduced word of v (resp. u)
    std::optional<int> j;
};

// With x' = zeta^{u,v}(x):
//   Delta^{omega_j}_{v_{>k},e}(pi_-(x)) = Delta^{omega_j}_{e,v_{<=k}}(x') / Delta^{omega_j}_{e,v}(x'),
//   Delta^{omega_j}_{e,u_{<k}}(pi_+(x)) = Delta^{omega_j}_{u_{>=k},e}(x') / Delta^{omega_j}_{u^{-1},e}(x'),
// where k indexes the reduced words of v and u, v_{>k} = s_{v_n} ... s_{v_{k+1}} and
// u_{>=k} = s_{u_n} ... s_{u_k}.
inline CheckResult verify_newlem(const DoubleWord &w, const std::vector<Rational> &t, NewlemSelection sel = {})
{
    CheckResult res;
    res.check = "newlem";
    res.instance = describe(w.letters, "SL" + std::to_string(group_size(w.realization)));
    const std::size_t n = group_size(w.realization);
    const RatMatrix x = build_tparam(w, t);
    const Word uw = w.u_word();
    const Word vw = w.v_word();
    const RatMatrix xp = twist(uw, vw, x);
    const RatMatrix ym = pi_minus(x, vw);
    const RatMatrix yp = pi_plus(x, uw);
    Json failures = Json::array();
    std::size_t checked = 0;
    auto wanted = [&](std::size_t k, int j) { return (!sel.k || *sel.k == k) && (!sel.j || *sel.j == j); };
    for (std::size_t k = 1; k <= vw.size(); ++k) {
        for (int j = 1; j < static_cast<int>(n); ++j) {
            if (!wanted(k, j)) {
                continue;
            }
            const Rational den = minor(xp, j, {}, vw);
            if (den == 0) {
                throw Error(ErrorKind::NotInCell, "vanishing denominator minor");
            }
            const Rational lhs = minor(ym, j, reversed(detail::word_from(vw, k, vw.size())), {});
            const Rational rhs = minor(xp, j, {}, detail::word_from(vw, 0, k)) / den;
            ++checked;
            if (lhs != rhs) {
                failures.push_back({{"side", "minus"}, {"k", k}, {"j", j}, {"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}});
            }
        }
    }
    for (std::size_t k = 1; k <= uw.size(); ++k) {
        for (int j = 1; j < static_cast<int>(n); ++j) {
            if (!wanted(k, j)) {
                continue;
            }
            const Rational den = minor(xp, j, reversed(uw), {});
            if (den == 0) {
                throw Error(ErrorKind::NotInCell, "vanishing denominator minor");
            }
            const Rational lhs = minor(yp, j, {}, detail::word_from(uw, 0, k - 1));
            const Rational rhs = minor(xp, j, reversed(detail::word_from(uw, k - 1, uw.size())), {}) / den;
            ++checked;
            if (lhs != rhs) {
                failures.push_back({{"side", "plus"}, {"k", k}, {"j", j}, {"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}});
            }
        }
    }
    res.pass = failures.empty();
    res.witness = {{"checked", checked}, {"failures", failures}};
    return res;
}

// Runs fn on fresh positive parameters, resampling up to 10 times on NotInCell.
inline CheckResult with_resample(std::size_t count, Rng &rng, const std::function<CheckResult(const std::vector<Rational> &)> &fn,
                                 long bound = 100)
{
    for (int attempt = 0;; ++attempt) {
        const auto t = rng.positive_rationals(count, bound);
        try {
            CheckResult r = fn(t);
            if (attempt > 0) {
                r.witness["resamples"] = attempt;
            }
            return r;
        } catch (const Error &e) {
            if (e.kind() != ErrorKind::NotInCell || attempt >= 9) {
                throw;
            }
        }
    }
}

} // namespace bcf::sl

#endif
