#ifndef BCF_MUTATION_HPP
#define BCF_MUTATION_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bcf/error.hpp"
#include "bcf/io.hpp"
#include "bcf/numeric.hpp"
#include "bcf/random.hpp"
#include "bcf/ratfunc.hpp"
#include "bcf/seed.hpp"

namespace bcf
{

namespace detail
{

inline long integral_exponent(const Rational &q)
{
    if (!is_integer(q) || !q.get_num().fits_slong_p()) {
        throw Error(ErrorKind::NonIntegerExponent, "exponent " + q.get_str() + " is not an integer");
    }
    return q.get_num().get_si();
}

inline std::size_t unfrozen_position(const Seed &s, int k)
{
    const std::size_t p = s.position(k);
    if (s.frozen[p]) {
        throw Error(ErrorKind::FrozenIndex, "index " + std::to_string(k) + " is frozen");
    }
    return p;
}

inline Rational power(const Rational &x, long e)
{
    return pow(x, e);
}

inline RatFunc power(const RatFunc &x, long e)
{
    return x.pow(e);
}

// A'_k from the current values and row k of B.
template <typename T>
T exchange(const Seed &s, std::size_t p, const std::vector<T> &A)
{
    T pos(1L);
    T neg(1L);
    for (std::size_t j = 0; j < s.size(); ++j) {
        const Rational &b = s.B(p, j);
        if (b > 0) {
            pos = pos * power(A[j], integral_exponent(b));
        } else if (b < 0) {
            neg = neg * power(A[j], integral_exponent(-b));
        }
    }
    return (pos + neg) / A[p];
}

template <typename T>
std::vector<T> x_transform(const Seed &s, std::size_t p, const std::vector<T> &X)
{
    std::vector<T> out = X;
    const T one(1L);
    const T shifted = one + X[p];
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i == p) {
            out[i] = one / X[p];
            continue;
        }
        const Rational &b = s.B(i, p);
        if (b == 0) {
            continue;
        }
        const long e = integral_exponent(b);
        T v = X[i] * power(shifted, -e);
        if (e > 0) {
            v = v * power(X[p], e);
        }
        out[i] = v;
    }
    return out;
}

} // namespace detail

// b'_ij = -b_ij on row/column k, else b_ij + (|b_ik| b_kj + b_ik |b_kj|) / 2.
inline Seed mutate_b(const Seed &s, int k)
{
    const std::size_t p = detail::unfrozen_position(s, k);
    Seed out = s;
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = 0; j < s.size(); ++j) {
            if (i == p || j == p) {
                out.B(i, j) = -s.B(i, j);
            } else {
                const Rational &bik = s.B(i, p);
                const Rational &bkj = s.B(p, j);
                out.B(i, j) = s.B(i, j) + (abs(bik) * bkj + bik * abs(bkj)) / 2;
            }
        }
    }
    return out;
}

// Seed with symbolic cluster variables A_i and X-coordinates X_i; variable ids are positions.
struct ClusterState {
    Seed seed;
    std::vector<RatFunc> A;
    std::vector<RatFunc> X;
    std::vector<int> history;
};

inline ClusterState initial_state(const Seed &s)
{
    ClusterState st;
    st.seed = s;
    for (std::size_t p = 0; p < s.size(); ++p) {
        st.A.push_back(RatFunc::variable(static_cast<int>(p)));
        st.X.push_back(RatFunc::variable(static_cast<int>(p)));
    }
    return st;
}

inline ClusterState mutate_a(const ClusterState &st, int k)
{
    const std::size_t p = detail::unfrozen_position(st.seed, k);
    ClusterState out = st;
    out.A[p] = detail::exchange(st.seed, p, st.A);
    out.seed = mutate_b(st.seed, k);
    out.history.push_back(k);
    return out;
}

inline ClusterState mutate_x(const ClusterState &st, int k)
{
    const std::size_t p = detail::unfrozen_position(st.seed, k);
    ClusterState out = st;
    out.X = detail::x_transform(st.seed, p, st.X);
    out.seed = mutate_b(st.seed, k);
    out.history.push_back(k);
    return out;
}

// Both coordinate systems and B at once.
inline ClusterState mutate(const ClusterState &st, int k)
{
    const std::size_t p = detail::unfrozen_position(st.seed, k);
    ClusterState out = st;
    out.A[p] = detail::exchange(st.seed, p, st.A);
    out.X = detail::x_transform(st.seed, p, st.X);
    out.seed = mutate_b(st.seed, k);
    out.history.push_back(k);
    return out;
}

inline std::vector<Rational> mutate_a_values(const Seed &s, int k, std::vector<Rational> A)
{
    const std::size_t p = detail::unfrozen_position(s, k);
    A[p] = detail::exchange(s, p, A);
    return A;
}

inline std::vector<Rational> mutate_x_values(const Seed &s, int k, const std::vector<Rational> &X)
{
    return detail::x_transform(s, detail::unfrozen_position(s, k), X);
}

// X_i = prod_j A_j^{Btilde_ij}.
template <typename T>
std::vector<T> ensemble_map(const RatMatrix &Btilde, const std::vector<T> &A)
{
    if (Btilde.rows() != A.size() || !Btilde.is_square()) {
        throw Error(ErrorKind::BadShape, "ensemble map size mismatch");
    }
    std::vector<T> X;
    for (std::size_t i = 0; i < A.size(); ++i) {
        T x(1L);
        for (std::size_t j = 0; j < A.size(); ++j) {
            const Rational &e = Btilde(i, j);
            if (e == 0) {
                continue;
            }
            if (!is_integer(e)) {
                throw Error(ErrorKind::NonIntegerBtilde, "ensemble map needs an integral exponent matrix");
            }
            x = x * detail::power(A[j], e.get_num().get_si());
        }
        X.push_back(std::move(x));
    }
    return X;
}

inline std::vector<RatFunc> ensemble_map(const EnsembleMatrices &e, const std::vector<RatFunc> &A)
{
    return ensemble_map(e.Btilde, A);
}

// {X_i, X_j} = b_ij d_j X_i X_j.
inline RatMatrix poisson_matrix(const Seed &s)
{
    RatMatrix P(s.size(), s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = 0; j < s.size(); ++j) {
            P(i, j) = s.B(i, j) * s.d[j];
        }
    }
    return P;
}

struct CommuteOptions {
    std::size_t trials = 20;
    std::uint64_t rng_seed = 1;
    long bound = 100;
    // Adds this amount to M at (k, k); nonzero values are a negative control.
    long corrupt_diagonal = 0;
};

// Compares mu_k . p_M with p'_M . mu_k at random positive rational points.
inline CheckResult verify_ensemble_commute(const DoubleWord &w, int k, const CommuteOptions &opt = {})
{
    CheckResult res;
    res.check = "ensemble-commute";
    res.instance = describe(w.letters) + " k=" + std::to_string(k);
    const Seed seed = build_seed(w);
    if (seed.unfrozen().empty()) {
        res.witness = {{"status", "vacuous"}, {"reason", "no unfrozen index"}};
        return res;
    }
    const std::size_t p = detail::unfrozen_position(seed, k);
    RatMatrix M = frozen_shift(w);
    M(p, p) += opt.corrupt_diagonal;
    const RatMatrix Bt = seed.B + M;
    const Seed mutated = mutate_b(seed, k);
    const RatMatrix Bt2 = mutated.B + M;
    Json failures = Json::array();
    for (std::size_t t = 0; t < opt.trials; ++t) {
        Rng rng(opt.rng_seed, t);
        const auto A = rng.positive_rationals(seed.size(), opt.bound);
        const auto lhs = mutate_x_values(seed, k, ensemble_map(Bt, A));
        const auto rhs = ensemble_map(Bt2, mutate_a_values(seed, k, A));
        for (std::size_t i = 0; i < seed.size(); ++i) {
            if (lhs[i] != rhs[i]) {
                failures.push_back(
                    {{"trial", t}, {"index", seed.labels[i]}, {"lhs", to_json(lhs[i])}, {"rhs", to_json(rhs[i])}});
                break;
            }
        }
    }
    res.pass = failures.empty();
    res.witness = {{"trials", opt.trials}, {"failures", failures}};
    return res;
}

// Symbolic form of the same diagram.
inline bool ensemble_commutes_symbolically(const DoubleWord &w, int k)
{
    const Seed seed = build_seed(w);
    const RatMatrix M = frozen_shift(w);
    const ClusterState st = initial_state(seed);
    const auto lhs = detail::x_transform(seed, detail::unfrozen_position(seed, k), ensemble_map(seed.B + M, st.A));
    const ClusterState after = mutate_a(st, k);
    const auto rhs = ensemble_map(after.seed.B + M, after.A);
    return lhs == rhs;
}

// Laurent monomials in P_k (id 2k-2) and Q_k (id 2k-1), k = 1..m, for the pullbacks of X_j.
struct PoissonModel {
    std::vector<int> labels;
    std::vector<RatFunc> pulled;               // m^* X_j as rational functions
    std::vector<std::vector<long>> exponents;  // same, as exponent vectors of length 2m
    std::vector<Rational> half_weights;        // d_{|i_k|} / 2 per letter k
};

inline PoissonModel poisson_model(const DoubleWord &w)
{
    const WordIndex ix(w);
    const int m = ix.m();
    const auto &R = w.realization;
    PoissonModel pm;
    pm.labels = ix.labels();
    for (int k = 1; k <= m; ++k) {
        pm.half_weights.push_back(make_rational(R.d(ix.weight(k)), 2));
    }
    for (int j : pm.labels) {
        std::vector<long> e(static_cast<std::size_t>(2 * m), 0);
        auto P = [&](int k) -> long & { return e[static_cast<std::size_t>(2 * k - 2)]; };
        auto Q = [&](int k) -> long & { return e[static_cast<std::size_t>(2 * k - 1)]; };
        const int jp = ix.successor(j);
        if (j > 0) {
            P(j) += 1;
            Q(j) -= ix.eps(j);
        }
        if (jp <= m) {
            P(jp) += 1;
            Q(jp) += ix.eps(jp);
        }
        for (int k = std::max(j + 1, 1); k < jp && k <= m; ++k) {
            P(k) += R.c(ix.weight(k), ix.weight(j));
        }
        RatFunc f(1L);
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] != 0) {
                f = f * RatFunc::variable(static_cast<int>(v)).pow(e[v]);
            }
        }
        pm.pulled.push_back(std::move(f));
        pm.exponents.push_back(std::move(e));
    }
    return pm;
}

// {f, g} with {P_k, Q_k} = (d_{|i_k|}/2) P_k Q_k, extended as a biderivation.
inline RatFunc pq_bracket(const PoissonModel &pm, const RatFunc &f, const RatFunc &g)
{
    RatFunc total(0L);
    for (std::size_t k = 0; k < pm.half_weights.size(); ++k) {
        const int pv = static_cast<int>(2 * k);
        const int qv = pv + 1;
        const RatFunc cross = f.derivative(pv) * g.derivative(qv) - f.derivative(qv) * g.derivative(pv);
        if (cross.is_zero()) {
            continue;
        }
        total += RatFunc(pm.half_weights[k]) * RatFunc::variable(pv) * RatFunc::variable(qv) * cross;
    }
    return total;
}

// Symbolic check of {X_j, X_k} / (X_j X_k) = b_jk d_k over all pairs, plus the
// exponent-vector shortcut for log-canonical brackets as a second route.
inline CheckResult verify_poisson_word(const DoubleWord &w)
{
    CheckResult res;
    res.check = "poisson";
    res.instance = describe(w.letters);
    const Seed seed = build_seed(w);
    const PoissonModel pm = poisson_model(w);
    const std::size_t n = seed.size();
    Json mismatches = Json::array();
    std::size_t pairs = 0;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            const Rational expected = seed.B(a, b) * seed.d[b];
            const RatFunc bracket = pq_bracket(pm, pm.pulled[a], pm.pulled[b]);
            const RatFunc ratio = bracket / (pm.pulled[a] * pm.pulled[b]);
            Rational shortcut(0);
            for (std::size_t k = 0; k < pm.half_weights.size(); ++k) {
                const long pa = pm.exponents[a][2 * k];
                const long qa = pm.exponents[a][2 * k + 1];
                const long pb = pm.exponents[b][2 * k];
                const long qb = pm.exponents[b][2 * k + 1];
                shortcut += pm.half_weights[k] * (pa * qb - qa * pb);
            }
            ++pairs;
            if (ratio != RatFunc(expected) || shortcut != expected) {
                mismatches.push_back({{"j", seed.labels[a]},
                                      {"k", seed.labels[b]},
                                      {"expected", to_json(expected)},
                                      {"symbolic", ratio.to_string([](int v) { return std::to_string(v); })},
                                      {"shortcut", to_json(shortcut)}});
            }
        }
    }
    res.pass = mismatches.empty();
    res.witness = {{"pairs", pairs}, {"mismatches", mismatches}};
    return res;
}

// Laurent check along a mutation sequence: returns the first offending step, or -1.
inline long first_non_laurent(const Seed &seed, const std::vector<int> &sequence)
{
    ClusterState st = initial_state(seed);
    for (std::size_t s = 0; s < sequence.size(); ++s) {
        st = mutate_a(st, sequence[s]);
        if (!st.A[st.seed.position(sequence[s])].is_laurent()) {
            return static_cast<long>(s);
        }
    }
    return -1;
}

struct LaurentOptions {
    std::size_t exhaustive_depth = 4;
    std::size_t random_sequences = 50;
    std::size_t random_length = 5;
    std::uint64_t rng_seed = 1;
};

// Every sequence of unfrozen indices up to exhaustive_depth (shared prefixes are
// mutated once), then random sequences of random_length.
inline CheckResult verify_laurent(const DoubleWord &w, const LaurentOptions &opt = {})
{
    CheckResult res;
    res.check = "laurent";
    res.instance = describe(w.letters);
    const Seed seed = build_seed(w);
    const auto unfrozen = seed.unfrozen();
    Json failures = Json::array();
    std::size_t sequences = 0;
    std::size_t variables = 0;
    if (unfrozen.empty()) {
        res.witness = {{"status", "vacuous"}, {"reason", "no unfrozen index"}};
        return res;
    }
    std::function<void(const ClusterState &, std::size_t)> walk = [&](const ClusterState &st, std::size_t depth) {
        if (depth == opt.exhaustive_depth) {
            return;
        }
        for (int k : unfrozen) {
            const ClusterState next = mutate_a(st, k);
            ++sequences;
            ++variables;
            if (!next.A[next.seed.position(k)].is_laurent()) {
                failures.push_back({{"sequence", next.history}});
                continue;
            }
            walk(next, depth + 1);
        }
    };
    walk(initial_state(seed), 0);
    for (std::size_t r = 0; r < opt.random_sequences; ++r) {
        Rng rng(opt.rng_seed, r);
        std::vector<int> seq;
        for (std::size_t s = 0; s < opt.random_length; ++s) {
            seq.push_back(rng.pick(unfrozen));
        }
        ++sequences;
        variables += seq.size();
        const long bad = first_non_laurent(seed, seq);
        if (bad >= 0) {
            failures.push_back({{"sequence", seq}, {"step", bad}});
        }
    }
    res.pass = failures.empty();
    res.witness = {{"sequences", sequences}, {"variables", variables}, {"failures", failures}};
    return res;
}

} // namespace bcf

#endif
