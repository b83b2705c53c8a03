#ifndef BCF_FACTOR_HPP
#define BCF_FACTOR_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "bcf/io.hpp"
#include "bcf/numeric.hpp"
#include "bcf/seed.hpp"

namespace bcf
{

// Chamber-ansatz exponent matrices. Rows/columns over I follow the seed order
// (-rtilde..-1, 1..m); torus slots are labelled 1..m+rtilde, with slot k > m of weight
// k-m and sign +1 (see WordIndex).
struct FactorMatrices {
    IntMatrix Psi; // m x |I|
    IntMatrix Dm;  // |I| x (m + rtilde)
    IntMatrix Em;  // (m + rtilde) x (m + rtilde)
    RatMatrix Fm;  // (m + rtilde) x |I|
};

inline Integer psi_entry(const WordIndex &ix, const CartanRealization &R, int j, int k)
{
    const int kp = ix.successor(k);
    const int ej = ix.eps(j);
    const int ek = ix.eps(k);
    const int ekp = ix.eps(kp);
    const int bracket = ej * (ekp - ek) * (kp < j ? 1 : 0) - (1 + ej * ek) * ((k < j && j < kp) ? 1 : 0);
    // bracket is always even
    return Integer(-ej * ek * ((j == k ? 1 : 0) + (j == kp ? 1 : 0)) + R.c(ix.weight(k), ix.weight(j)) * bracket / 2);
}

inline IntMatrix build_psi(const DoubleWord &w)
{
    const WordIndex ix(w);
    const auto labels = ix.labels();
    IntMatrix Psi(static_cast<std::size_t>(ix.m()), labels.size());
    for (int j = 1; j <= ix.m(); ++j) {
        for (std::size_t b = 0; b < labels.size(); ++b) {
            Psi(static_cast<std::size_t>(j - 1), b) = psi_entry(ix, w.realization, j, labels[b]);
        }
    }
    return Psi;
}

inline FactorMatrices build_def(const DoubleWord &w)
{
    const WordIndex ix(w);
    const auto &R = w.realization;
    const auto labels = ix.labels();
    const int m = ix.m();
    const std::size_t n = labels.size();
    const std::size_t slots = ix.size();
    FactorMatrices f;
    f.Psi = build_psi(w);

    f.Dm = IntMatrix(n, slots);
    for (std::size_t a = 0; a < n; ++a) {
        const int j = labels[a];
        const int jp = ix.slot_successor(j);
        for (int k = 1; k <= static_cast<int>(slots); ++k) {
            const int coeff = (jp == k ? 1 : 0) - (j == k ? 1 : 0);
            f.Dm(a, static_cast<std::size_t>(k - 1)) = coeff * ix.eps(k);
        }
    }

    f.Em = IntMatrix(slots, slots);
    for (int j = 1; j <= static_cast<int>(slots); ++j) {
        for (int k = 1; k <= static_cast<int>(slots); ++k) {
            int e = (j == k && j <= m) ? 1 : 0;
            if (j > m && k > m) {
                e += R.c(ix.weight(k), ix.weight(j));
            }
            f.Em(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(k - 1)) = e;
        }
    }

    f.Fm = RatMatrix(slots, n);
    for (int j = 1; j <= static_cast<int>(slots); ++j) {
        for (std::size_t b = 0; b < n; ++b) {
            const int k = labels[b];
            Rational v(0);
            if (j <= m) {
                v = f.Psi(static_cast<std::size_t>(j - 1), b);
            } else if (ix.weight(j) == ix.weight(k)) {
                v = make_rational(ix.eps(ix.successor(k)) - ix.eps(k), 2);
            }
            f.Fm(static_cast<std::size_t>(j - 1), b) = v;
        }
    }
    return f;
}

// Row j <= m: Psi; row m+j: (eps_{k+} - eps_k)/2 on indices of weight j.
inline RatMatrix chamber_exponents(const DoubleWord &w)
{
    const WordIndex ix(w);
    const auto labels = ix.labels();
    const int m = ix.m();
    RatMatrix out(ix.size(), labels.size());
    for (std::size_t b = 0; b < labels.size(); ++b) {
        const int k = labels[b];
        for (int j = 1; j <= m; ++j) {
            out(static_cast<std::size_t>(j - 1), b) = psi_entry(ix, w.realization, j, k);
        }
        const int kp = ix.successor(k);
        out(static_cast<std::size_t>(m + ix.weight(k) - 1), b) = make_rational(ix.eps(kp) - ix.eps(k), 2);
    }
    return out;
}

// D E F = B + M, entrywise and exactly.
inline CheckResult oracle_def(const DoubleWord &w, const std::string &type = {})
{
    CheckResult res;
    res.check = "def-oracle";
    res.instance = describe(w.letters, type);
    const auto f = build_def(w);
    const RatMatrix N = f.Dm.cast<Rational>() * f.Em.cast<Rational>() * f.Fm;
    const Seed seed = build_seed(w);
    const RatMatrix target = seed.B + frozen_shift(w);
    for (std::size_t a = 0; a < N.rows(); ++a) {
        for (std::size_t b = 0; b < N.cols(); ++b) {
            if (N(a, b) != target(a, b)) {
                res.pass = false;
                res.witness = {{"j", seed.labels[a]},
                               {"k", seed.labels[b]},
                               {"DEF", to_json(N(a, b))},
                               {"BplusM", to_json(target(a, b))}};
                return res;
            }
        }
    }
    res.witness = {{"size", N.rows()}};
    return res;
}

// Entries of Psi lie in {0, +-1, +-C_{|i_k|,|i_j|}}.
inline bool psi_values_ok(const DoubleWord &w, const IntMatrix &Psi)
{
    const WordIndex ix(w);
    const auto labels = ix.labels();
    for (int j = 1; j <= ix.m(); ++j) {
        for (std::size_t b = 0; b < labels.size(); ++b) {
            const Integer &v = Psi(static_cast<std::size_t>(j - 1), b);
            const int c = w.realization.c(ix.weight(labels[b]), ix.weight(j));
            if (v != 0 && v != 1 && v != -1 && v != c && v != -c) {
                return false;
            }
        }
    }
    return true;
}

inline Json to_json(const FactorMatrices &f)
{
    Json j;
    j["Psi"] = to_json(f.Psi);
    j["D"] = to_json(f.Dm);
    j["E"] = to_json(f.Em);
    j["F"] = to_json(f.Fm);
    return j;
}

} // namespace bcf

#endif
