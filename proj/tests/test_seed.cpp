#include <catch_amalgamated.hpp>

#include <functional>
#include <optional>
#include <string>

#include "bcf/seed.hpp"
#include "support.hpp"

using namespace bcf;
using bcf::testing::from_doubled;

namespace
{

// Straight-line rendering of the exchange-matrix entry formula, sharing no code with
// the library: weights/signs are read from flat arrays indexed by label.
RatMatrix transcribe_b(const CartanRealization &R, const Word &letters)
{
    const int m = static_cast<int>(letters.size());
    const int rt = R.rtilde;
    auto weight = [&](int k) { return k < 0 ? -k : std::abs(letters[static_cast<std::size_t>(k - 1)]); };
    auto sign = [&](int k) {
        if (k < 0) {
            return -1;
        }
        if (k > m) {
            return 1;
        }
        return letters[static_cast<std::size_t>(k - 1)] > 0 ? 1 : -1;
    };
    auto plus = [&](int k) {
        int l = k < 0 ? 1 : k + 1;
        for (; l <= m; ++l) {
            if (weight(l) == weight(k)) {
                return l;
            }
        }
        return m + 1;
    };
    std::vector<int> labels;
    for (int k = -rt; k <= m; ++k) {
        if (k != 0) {
            labels.push_back(k);
        }
    }
    const std::size_t n = labels.size();
    RatMatrix B(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            const int j = labels[a];
            const int k = labels[b];
            const int jp = plus(j);
            const int kp = plus(k);
            int s = 0;
            if (j == kp) {
                s += sign(j);
            }
            if (jp == k) {
                s -= sign(k);
            }
            if (k < j && j < kp && j > 0) {
                s += sign(j);
            }
            if (k < jp && jp < kp && jp <= m) {
                s -= sign(jp);
            }
            if (j < k && k < jp && k > 0) {
                s -= sign(k);
            }
            if (j < kp && kp < jp && kp <= m) {
                s += sign(kp);
            }
            B(a, b) = Rational(R.c(weight(k), weight(j)) * s, 2);
            B(a, b).canonicalize();
        }
    }
    return B;
}

std::optional<ErrorKind> kind_of(const std::function<void()> &fn)
{
    try {
        fn();
    } catch (const Error &e) {
        return e.kind();
    }
    return std::nullopt;
}

} // namespace

TEST_CASE("double word parsing")
{
    const auto aff = preset("A1affine");
    const auto w = parse_double_word(aff, {-1, -2, 1, 2});
    CHECK(w.u == apply_word(aff, {1, 2}));
    CHECK(w.v == apply_word(aff, {1, 2}));
    CHECK(w.m() == 4);

    const auto A2 = preset("A2");
    const auto w2 = parse_double_word(A2, {1, -1});
    CHECK(w2.u == simple_reflection(A2, 1));
    CHECK(w2.v == simple_reflection(A2, 1));

    try {
        parse_double_word(A2, {1, 1});
        FAIL("expected NotReduced");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::NotReduced);
        CHECK(std::string(e.what()).find("positive") != std::string::npos);
    }
    try {
        parse_double_word(A2, {-2, 1, -2});
        FAIL("expected NotReduced");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::NotReduced);
        CHECK(std::string(e.what()).find("negative") != std::string::npos);
    }
    CHECK(kind_of([&] { parse_double_word(A2, {3}); }) == ErrorKind::IndexOutOfRange);
    CHECK(kind_of([&] { parse_double_word(A2, {0}); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("successor")
{
    const auto aff = preset("A1affine");
    const auto w = parse_double_word(aff, {-1, -2, 1, 2});
    CHECK(successor(w, -1) == 1);
    CHECK(successor(w, -2) == 2);
    CHECK(successor(w, -3) == 5);
    CHECK(successor(w, 1) == 3);
    CHECK(successor(w, 3) == 5);
    CHECK(successor(w, 4) == 5);
    CHECK_THROWS_AS(successor(w, 0), Error);
    CHECK_THROWS_AS(successor(w, 5), Error);
    CHECK_THROWS_AS(successor(w, -4), Error);

    const auto empty = parse_double_word(aff, {});
    CHECK(successor(empty, -1) == 1);
}

TEST_CASE("affine A1 example: B, M and Btilde")
{
    const auto aff = preset("A1affine");
    const auto w = parse_double_word(aff, {-1, -2, 1, 2});
    const auto seed = build_seed(w);
    CHECK(seed.labels == std::vector<int>{-3, -2, -1, 1, 2, 3, 4});
    CHECK(seed.frozen == std::vector<bool>{true, true, true, false, false, true, true});

    const RatMatrix B = from_doubled({{0, 0, -1, 2, 0, -1, 0},
                                      {0, 0, 2, -4, 2, 0, 0},
                                      {1, -2, 0, 2, 0, 0, 0},
                                      {-2, 4, -2, 0, 0, -2, 0},
                                      {0, -2, 0, 0, 0, 4, -2},
                                      {1, 0, 0, 2, -4, 0, 2},
                                      {0, 0, 0, 0, 2, -2, 0}});
    const RatMatrix M = from_doubled({{0, 0, 1, 0, 0, 1, 0},
                                      {0, 2, -2, 0, 0, 0, 0},
                                      {1, -2, 2, 0, 0, 0, 0},
                                      {0, 0, 0, 0, 0, 0, 0},
                                      {0, 0, 0, 0, 0, 0, 0},
                                      {1, 0, 0, 0, 0, 2, -2},
                                      {0, 0, 0, 0, 0, -2, 2}});
    const RatMatrix Bt{{0, 0, 0, 1, 0, 0, 0},
                       {0, 1, 0, -2, 1, 0, 0},
                       {1, -2, 1, 1, 0, 0, 0},
                       {-1, 2, -1, 0, 0, -1, 0},
                       {0, -1, 0, 0, 0, 2, -1},
                       {1, 0, 0, 1, -2, 1, 0},
                       {0, 0, 0, 0, 1, -2, 1}};
    CHECK(seed.B == B);
    const auto ens = build_ensemble(seed);
    CHECK(ens.M == M);
    CHECK(ens.Btilde == Bt);
    CHECK(abs(ens.detBtilde) == 2);
    CHECK(determinant(seed.B) == 0);
    CHECK(is_skew_symmetrized(seed));
    CHECK(unfrozen_row_rank(seed) == 2);
}

TEST_CASE("empty word: B vanishes and Btilde is the Cartan matrix")
{
    for (const char *name : {"A2", "B2", "G2", "A1affine"}) {
        const auto R = preset(name);
        const auto w = parse_double_word(R, {});
        const auto ens = build_ensemble(w);
        const std::size_t n = static_cast<std::size_t>(R.rtilde);
        CHECK(ens.B == RatMatrix(n, n));
        for (std::size_t a = 0; a < n; ++a) {
            const int j = -static_cast<int>(n - a);
            for (std::size_t b = 0; b < n; ++b) {
                const int k = -static_cast<int>(n - b);
                CHECK(ens.M(a, b) == R.c(-k, -j));
            }
        }
        CHECK(ens.Btilde == ens.M);
        CHECK(ens.detBtilde != 0);
    }
}

TEST_CASE("A2 seeds agree with an independent transcription")
{
    const auto A2 = preset("A2");
    for (const Word &letters : {Word{1, -1, 2, -2}, Word{1, -1}, Word{-1, -2, 1, 2}, Word{2, 1, -1, 2, -2}}) {
        const auto w = parse_double_word(A2, letters);
        const auto seed = build_seed(w);
        CHECK(seed.B == transcribe_b(A2, letters));
        CHECK(is_skew_symmetrized(seed));
        const auto ens = build_ensemble(w);
        CHECK(all_integer(ens.Btilde));
        CHECK(ens.detBtilde != 0);
    }
    const auto aff = preset("A1affine");
    CHECK(build_seed(parse_double_word(aff, {-1, -2, 1, 2})).B == transcribe_b(aff, {-1, -2, 1, 2}));
    const auto G2 = preset("G2");
    const Word g2word{1, -2, 2, -1, 1, 2};
    CHECK(build_seed(parse_double_word(G2, g2word)).B == transcribe_b(G2, g2word));
}

TEST_CASE("swapping adjacent letters of opposite sign and different weight keeps B")
{
    // i and i' differ by commuting letters i_k, i_{k+1} with opposite signs and |i_k| != |i_{k+1}|;
    // the seeds agree after swapping the two labels.
    const auto A2 = preset("A2");
    const Word a{1, -2, 2, -1};
    const Word b{-2, 1, 2, -1};
    const auto sa = build_seed(parse_double_word(A2, a));
    const auto sb = build_seed(parse_double_word(A2, b));
    auto relabel = [](int k) { return k == 1 ? 2 : (k == 2 ? 1 : k); };
    for (int j : sa.labels) {
        for (int k : sa.labels) {
            CHECK(sa.b(j, k) == sb.b(relabel(j), relabel(k)));
        }
    }
}

TEST_CASE("frozen shift lives on frozen pairs")
{
    const auto B2 = preset("B2");
    const auto w = parse_double_word(B2, {1, -2, 2, -1, 1});
    const auto seed = build_seed(w);
    const auto M = frozen_shift(w);
    for (std::size_t a = 0; a < seed.size(); ++a) {
        for (std::size_t b = 0; b < seed.size(); ++b) {
            if (M(a, b) != 0) {
                CHECK(seed.frozen[a]);
                CHECK(seed.frozen[b]);
            }
            if (!(seed.frozen[a] && seed.frozen[b])) {
                CHECK(is_integer(seed.B(a, b)));
            }
            CHECK(is_integer(2 * seed.B(a, b)));
        }
    }
    CHECK(unfrozen_row_rank(seed) == seed.unfrozen().size());
}

TEST_CASE("ensemble size mismatch and missing origin")
{
    const auto A2 = preset("A2");
    const auto seed = build_seed(parse_double_word(A2, {1, -1}));
    CHECK(kind_of([&] { build_ensemble(seed, RatMatrix(2, 2)); }) == ErrorKind::BadShape);
    auto bare = make_seed(RatMatrix{{0, 1}, {-1, 0}}, {false, false}, {1, 1});
    CHECK(kind_of([&] { build_ensemble(bare); }) == ErrorKind::PreconditionViolated);
}
