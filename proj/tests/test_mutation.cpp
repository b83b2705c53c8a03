#include <catch_amalgamated.hpp>

#include "bcf/mutation.hpp"

using namespace bcf;

namespace
{

RatFunc var(const Seed &s, int label)
{
    return RatFunc::variable(static_cast<int>(s.position(label)));
}

DoubleWord word(const char *type, const Word &letters)
{
    return parse_double_word(preset(type), letters);
}

} // namespace

TEST_CASE("matrix mutation")
{
    const Seed s = make_seed(RatMatrix{{0, 1}, {-1, 0}}, {false, false}, {1, 1});
    CHECK(mutate_b(s, 1).B == RatMatrix{{0, -1}, {1, 0}});

    const Seed frozen = make_seed(RatMatrix{{0, 1}, {-1, 0}}, {false, true}, {1, 1});
    try {
        mutate_b(frozen, 2);
        FAIL("expected FrozenIndex");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::FrozenIndex);
    }

    const Seed aff = build_seed(word("A1affine", {-1, -2, 1, 2}));
    const Seed mutated = mutate_b(aff, 1);
    CHECK(mutated.d == aff.d);
    CHECK(mutated.frozen == aff.frozen);
    CHECK(is_skew_symmetrized(mutated));
}

TEST_CASE("matrix mutation is an involution on random word seeds")
{
    for (std::uint64_t t = 0; t < 40; ++t) {
        Rng rng(5, t);
        const char *types[] = {"A2", "B2", "G2", "A1affine", "A3"};
        const auto R = preset(types[t % 5]);
        const auto w = parse_double_word(R, random_double_word(R, 8, rng));
        const Seed s = build_seed(w);
        for (int k : s.unfrozen()) {
            CHECK(mutate_b(mutate_b(s, k), k).B == s.B);
            CHECK(is_skew_symmetrized(mutate_b(s, k)));
        }
    }
}

TEST_CASE("exchange relation")
{
    const Seed s = make_seed(RatMatrix{{0, 1}, {-1, 0}}, {false, true}, {1, 1});
    const ClusterState st = initial_state(s);
    const ClusterState next = mutate_a(st, 1);
    CHECK(next.A[0] == (var(s, 2) + RatFunc(1L)) / var(s, 1));
    CHECK(next.A[1] == st.A[1]);
    CHECK(next.history == std::vector<int>{1});
    const ClusterState back = mutate_a(next, 1);
    CHECK(back.A == st.A);
    CHECK(back.seed.B == s.B);
}

TEST_CASE("Laurent at depth two on an A2 word seed")
{
    const auto w = word("A2", {1, -1, 2, -2});
    const Seed s = build_seed(w);
    REQUIRE(s.unfrozen() == std::vector<int>{1, 3});
    ClusterState st = mutate_a(mutate_a(initial_state(s), 1), 3);
    for (const auto &a : st.A) {
        CHECK(a.is_laurent());
    }
    CHECK_FALSE(st.A[s.position(3)] == initial_state(s).A[s.position(3)]);
}

TEST_CASE("X-coordinate transformation")
{
    const Seed s = make_seed(RatMatrix{{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}, {true, false, true}, {1, 1, 1});
    const ClusterState st = initial_state(s);
    const ClusterState next = mutate_x(st, 2);
    const RatFunc X1 = var(s, 1);
    const RatFunc X2 = var(s, 2);
    CHECK(next.X[1] == RatFunc(1L) / X2);
    CHECK(next.X[2] == var(s, 3));
    CHECK(next.X[0] == X1 * X2 / (RatFunc(1L) + X2));
    CHECK(mutate_x(next, 2).X == st.X);
}

TEST_CASE("full mutation is an involution symbolically")
{
    for (const auto &w : {word("A1affine", {-1, -2, 1, 2}), word("B2", {1, -2, 2, -1}), word("G2", {2, -1, 1, 2})}) {
        const Seed s = build_seed(w);
        const ClusterState st = initial_state(s);
        for (int k : s.unfrozen()) {
            const ClusterState twice = mutate(mutate(st, k), k);
            CHECK(twice.A == st.A);
            CHECK(twice.X == st.X);
            CHECK(twice.seed.B == st.seed.B);
        }
    }
}

TEST_CASE("ensemble map")
{
    const auto A2 = preset("A2");
    const auto empty = parse_double_word(A2, {});
    const Seed es = build_seed(empty);
    const auto X = ensemble_map(build_ensemble(empty), initial_state(es).A);
    for (int j = 1; j <= 2; ++j) {
        RatFunc expect(1L);
        for (int k = 1; k <= 2; ++k) {
            expect *= var(es, -k).pow(A2.c(k, j));
        }
        CHECK(X[es.position(-j)] == expect);
    }

    const auto w = word("A1affine", {-1, -2, 1, 2});
    const Seed s = build_seed(w);
    const auto Xa = ensemble_map(build_ensemble(w), initial_state(s).A);
    CHECK(Xa[s.position(-3)] == var(s, 1));

    std::vector<Rational> ones(s.size(), Rational(1));
    for (const auto &x : ensemble_map(build_ensemble(w).Btilde, ones)) {
        CHECK(x == 1);
    }
}

TEST_CASE("ensemble map commutes with mutation")
{
    const auto aff = word("A1affine", {-1, -2, 1, 2});
    CommuteOptions opt;
    opt.trials = 20;
    opt.rng_seed = 3;
    const auto ok = verify_ensemble_commute(aff, 1, opt);
    CHECK(ok.pass);
    CHECK(ok.witness["failures"].empty());

    const auto vacuous = verify_ensemble_commute(word("A2", {}), 1, opt);
    CHECK(vacuous.pass);
    CHECK(vacuous.witness["status"] == "vacuous");

    opt.corrupt_diagonal = 1;
    const auto bad = verify_ensemble_commute(aff, 1, opt);
    CHECK_FALSE(bad.pass);
    CHECK(bad.witness["failures"].size() == opt.trials);

    for (const auto &w : {aff, word("A2", {1, -1, 2, -2}), word("B2", {-1, 2, 1, -2})}) {
        for (int k : build_seed(w).unfrozen()) {
            CHECK(ensemble_commutes_symbolically(w, k));
        }
    }
}

TEST_CASE("Poisson matrix")
{
    const Seed s = build_seed(word("B2", {1, -2, 2, -1, 1}));
    const RatMatrix P = poisson_matrix(s);
    for (std::size_t i = 0; i < s.size(); ++i) {
        CHECK(P(i, i) == 0);
        for (std::size_t j = 0; j < s.size(); ++j) {
            CHECK(P(i, j) == -P(j, i));
        }
    }
    for (int k : s.unfrozen()) {
        const RatMatrix Pm = poisson_matrix(mutate_b(s, k));
        CHECK(Pm == -Pm.transpose());
    }
    const Seed aff = build_seed(word("A1affine", {-1, -2, 1, 2}));
    const RatMatrix Pa = poisson_matrix(aff);
    CHECK(Pa(aff.position(1), aff.position(4)) == -Pa(aff.position(4), aff.position(1)));
}

TEST_CASE("log-canonical Poisson check")
{
    for (const auto &w : {word("A2", {1, -1}), word("A1affine", {-1, -2, 1, 2}), word("B2", {2, -1, 1, -2}),
                          word("G2", {-1, 2, 1, -2})}) {
        const auto res = verify_poisson_word(w);
        INFO(res.json().dump());
        CHECK(res.pass);
    }
    const auto w = word("A2", {1, -1});
    const auto pm = poisson_model(w);
    for (const auto &f : pm.pulled) {
        CHECK(pq_bracket(pm, f, f).is_zero());
    }
}

TEST_CASE("Laurent phenomenon on small word seeds")
{
    LaurentOptions opt;
    opt.exhaustive_depth = 3;
    opt.random_sequences = 5;
    for (const auto &w : {word("A2", {1, -1, 2, -2}), word("B2", {1, -2, 2, -1}), word("A1affine", {-1, -2, 1, 2})}) {
        const auto res = verify_laurent(w, opt);
        INFO(res.json().dump());
        CHECK(res.pass);
    }
}
