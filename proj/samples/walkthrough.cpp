// Affine A1 walkthrough: seed, ensemble matrices, one mutation, an SL3 chamber ansatz check.

#include <iostream>

#include "bcf/bcf.hpp"

int main()
{
    using namespace bcf;

    const auto R = preset("A1affine");
    const auto w = parse_double_word(R, {-1, -2, 1, 2});
    const Seed seed = build_seed(w);
    const auto e = build_ensemble(seed);
    std::cout << "extended Cartan matrix\n" << matrix_text(R.cfull);
    std::cout << "Btilde\n" << matrix_text(e.Btilde, seed.labels) << "det = " << e.detBtilde << "\n";

    ClusterState st = initial_state(seed);
    st = mutate(st, 1);
    auto name = [&](int id) { return "A" + std::to_string(seed.labels[static_cast<std::size_t>(id)]); };
    std::cout << "after mutating at 1: A1' = " << st.A[seed.position(1)].to_string(name) << "\n";

    const auto f = build_def(w);
    const bool def_ok = f.Dm.cast<Rational>() * f.Em.cast<Rational>() * f.Fm == e.Btilde;
    std::cout << "D E F = B + M: " << (def_ok ? "yes" : "no") << "\n";

    const auto sl3 = parse_double_word(preset("A2"), {1, -1, 2, -2});
    Rng rng(1, 0);
    const auto res = sl::verify_thm_main(sl3, rng.positive_rationals(6));
    std::cout << res.json().dump() << "\n";
    return def_ok && res.pass ? 0 : 1;
}
