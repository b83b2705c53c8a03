#ifndef BCF_RANDOM_HPP
#define BCF_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "bcf/cartan.hpp"
#include "bcf/numeric.hpp"
#include "bcf/weyl.hpp"

namespace bcf
{

// Deterministic stream per (seed, stream index). Bounded draws use rejection on raw
// 64-bit output, so sequences do not depend on the standard library's distributions.
class Rng
{
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
    {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32), 0x62636621U};
        m_engine.seed(seq);
    }

    // Uniform in [0, n), n > 0.
    std::uint64_t below(std::uint64_t n)
    {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = m_engine();
        } while (x >= limit);
        return x % n;
    }

    // Uniform in [lo, hi].
    long range(long lo, long hi)
    {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    bool coin()
    {
        return below(2) == 1;
    }

    // num/den with both drawn from 1..bound.
    Rational positive_rational(long bound = 100)
    {
        Rational q(range(1, bound), range(1, bound));
        q.canonicalize();
        return q;
    }

    std::vector<Rational> positive_rationals(std::size_t count, long bound = 100)
    {
        std::vector<Rational> out;
        out.reserve(count);
        for (std::size_t k = 0; k < count; ++k) {
            out.push_back(positive_rational(bound));
        }
        return out;
    }

    template <typename T>
    const T &pick(const std::vector<T> &items)
    {
        return items[static_cast<std::size_t>(below(items.size()))];
    }

private:
    std::mt19937_64 m_engine;
};

// Random reduced word of length at most `length`, grown by right ascents.
inline Word random_reduced_word(const CartanRealization &R, std::size_t length, Rng &rng)
{
    WeylElement w = identity_element(R);
    Word word;
    while (word.size() < length) {
        std::vector<int> ascents;
        for (int i = 1; i <= R.r(); ++i) {
            if (is_right_ascent(R, w, i)) {
                ascents.push_back(i);
            }
        }
        if (ascents.empty()) {
            break;
        }
        const int i = rng.pick(ascents);
        word.push_back(i);
        w = multiply(R, w, simple_reflection(R, i));
    }
    return word;
}

// Random shuffle of reduced words for u and v with total length at most max_length.
inline Word random_double_word(const CartanRealization &R, std::size_t max_length, Rng &rng)
{
    const std::size_t total = static_cast<std::size_t>(rng.range(0, static_cast<long>(max_length)));
    const std::size_t lu = static_cast<std::size_t>(rng.range(0, static_cast<long>(total)));
    const Word uw = random_reduced_word(R, lu, rng);
    const Word vw = random_reduced_word(R, total - lu, rng);
    Word out;
    std::size_t a = 0;
    std::size_t b = 0;
    while (a < uw.size() || b < vw.size()) {
        const std::size_t left = uw.size() - a;
        const std::size_t right = vw.size() - b;
        if (rng.below(left + right) < left) {
            out.push_back(-uw[a++]);
        } else {
            out.push_back(vw[b++]);
        }
    }
    return out;
}

// Random nondegenerate extension with entries in [-2, 2].
inline CartanRealization random_realization(const IntMatrix &C, Rng &rng)
{
    const CartanCore core = validate_core(C);
    const std::size_t nx = static_cast<std::size_t>(core.r) - rank(C);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        IntMatrix ext(nx, static_cast<std::size_t>(core.r));
        for (std::size_t a = 0; a < nx; ++a) {
            for (std::size_t j = 0; j < ext.cols(); ++j) {
                ext(a, j) = rng.range(-2, 2);
            }
        }
        try {
            return extend(core, ext);
        } catch (const Error &e) {
            if (e.kind() != ErrorKind::DegenerateRealization) {
                throw;
            }
        }
    }
    return extend(core);
}

} // namespace bcf

#endif
