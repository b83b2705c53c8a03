// bcf: command-line front end for the library.
//
// Exit codes: 0 success, 1 a verification failed, 2 invalid input.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bcf/bcf.hpp"

using namespace bcf;

namespace
{

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_invalid = 2;

struct Options {
    std::string preset;
    std::string matrix;
    std::string extension;
    std::string word;
    std::string seq;
    std::string format = "pretty";
    std::uint64_t rng_seed = 1;
    std::size_t trials = 20;
    std::size_t n = 3;
    std::string check = "all";
    std::string u;
    std::string v;
    int i = 1;
    std::size_t max_length = 12;
    std::size_t depth = 4;
    std::size_t random_sequences = 50;
};

std::vector<std::string> split(const std::string &s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        out.push_back(cur);
    }
    return out;
}

std::vector<int> parse_ints(const std::string &s, const std::string &what)
{
    std::vector<int> out;
    if (s.empty()) {
        return out;
    }
    for (const auto &tok : split(s, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != tok.size()) {
            throw Error(ErrorKind::ParseError, "bad " + what + " entry '" + tok + "'");
        }
        out.push_back(v);
    }
    return out;
}

// "2,-1;-1,2"
IntMatrix parse_matrix(const std::string &s)
{
    std::vector<std::vector<int>> rows;
    for (const auto &row : split(s, ';')) {
        rows.push_back(parse_ints(row, "matrix"));
    }
    if (rows.empty()) {
        throw Error(ErrorKind::ParseError, "empty matrix");
    }
    return IntMatrix::from(rows);
}

CartanRealization realization(const Options &o)
{
    if (!o.matrix.empty()) {
        std::optional<IntMatrix> ext;
        if (!o.extension.empty()) {
            ext = parse_matrix(o.extension);
        }
        return realize(parse_matrix(o.matrix), ext);
    }
    if (o.preset.empty()) {
        throw Error(ErrorKind::ParseError, "give --preset or --matrix");
    }
    if (!o.extension.empty()) {
        const auto C = preset_matrix(o.preset);
        if (!C) {
            throw Error(ErrorKind::ParseError, "unknown Cartan preset '" + o.preset + "'");
        }
        return realize(*C, parse_matrix(o.extension));
    }
    return preset(o.preset);
}

DoubleWord double_word(const Options &o)
{
    return parse_double_word(realization(o), parse_ints(o.word, "word"));
}

bool json_out(const Options &o)
{
    return o.format == "json";
}

std::string label_name(const std::vector<int> &labels, int id, char letter)
{
    return std::string(1, letter) + "[" + std::to_string(labels[static_cast<std::size_t>(id)]) + "]";
}

int emit_report(const Options &o, const Report &rep)
{
    if (json_out(o)) {
        std::cout << rep.json_lines();
    } else {
        for (const auto &r : rep.results) {
            std::cout << (r.pass ? "PASS " : "FAIL ") << r.check << " " << r.instance;
            if (r.witness.contains("status")) {
                std::cout << " (" << r.witness["status"].get<std::string>() << ")";
            }
            std::cout << "\n";
            if (!r.pass) {
                std::cout << "  " << r.witness.dump() << "\n";
            }
        }
        std::cout << rep.results.size() - rep.failures() << "/" << rep.results.size() << " checks passed\n";
    }
    return rep.pass() ? exit_ok : exit_failed;
}

int cartan_show(const Options &o)
{
    const auto R = realization(o);
    if (json_out(o)) {
        std::cout << to_json(R).dump() << "\n";
        return exit_ok;
    }
    std::cout << "r = " << R.r() << ", rtilde = " << R.rtilde << (R.auto_extension ? " (automatic extension)" : "")
              << "\nextended Cartan matrix:\n"
              << matrix_text(R.cfull) << "d = (" << word_to_string(R.dfull) << ")\n";
    return exit_ok;
}

int cartan_validate(const Options &o)
{
    try {
        const auto R = realization(o);
        if (json_out(o)) {
            std::cout << Json{{"valid", true}, {"r", R.r()}, {"rtilde", R.rtilde}, {"d", R.core.d}}.dump() << "\n";
        } else {
            std::cout << "valid: r = " << R.r() << ", rtilde = " << R.rtilde << ", d = ("
                      << word_to_string(R.core.d) << ")\n";
        }
        return exit_ok;
    } catch (const Error &e) {
        if (e.kind() == ErrorKind::ParseError) {
            throw;
        }
        if (json_out(o)) {
            std::cout << Json{{"valid", false}, {"kind", std::string(kind_name(e.kind()))}, {"reason", e.what()}}.dump()
                      << "\n";
        } else {
            std::cout << "invalid: " << e.what() << "\n";
        }
        return exit_failed;
    }
}

int seed_build(const Options &o)
{
    const auto seed = build_seed(double_word(o));
    if (json_out(o)) {
        std::cout << to_json(seed).dump() << "\n";
        return exit_ok;
    }
    std::cout << "I = (" << word_to_string(seed.labels) << ")\nfrozen: (";
    for (std::size_t p = 0; p < seed.size(); ++p) {
        std::cout << (p ? "," : "") << (seed.frozen[p] ? "f" : "u");
    }
    std::cout << ")\nB =\n" << matrix_text(seed.B, seed.labels) << "d = (" << word_to_string(seed.d) << ")\n";
    return exit_ok;
}

int seed_mutate(const Options &o)
{
    const auto w = double_word(o);
    const Seed seed = build_seed(w);
    ClusterState st = initial_state(seed);
    for (int k : parse_ints(o.seq, "sequence")) {
        st = mutate(st, k);
    }
    const auto &labels = seed.labels;
    if (json_out(o)) {
        Json j = to_json(st.seed);
        j["sequence"] = st.history;
        Json A = Json::array();
        Json X = Json::array();
        for (std::size_t p = 0; p < st.A.size(); ++p) {
            A.push_back(st.A[p].to_string([&](int id) { return label_name(labels, id, 'A'); }));
            X.push_back(st.X[p].to_string([&](int id) { return label_name(labels, id, 'X'); }));
        }
        j["A"] = std::move(A);
        j["X"] = std::move(X);
        std::cout << j.dump() << "\n";
        return exit_ok;
    }
    std::cout << "after (" << word_to_string(st.history) << "):\nB =\n" << matrix_text(st.seed.B, labels);
    for (std::size_t p = 0; p < st.A.size(); ++p) {
        std::cout << "A[" << labels[p] << "] = " << st.A[p].to_string([&](int id) { return label_name(labels, id, 'A'); })
                  << "\n";
    }
    for (std::size_t p = 0; p < st.X.size(); ++p) {
        std::cout << "X[" << labels[p] << "] = " << st.X[p].to_string([&](int id) { return label_name(labels, id, 'X'); })
                  << "\n";
    }
    return exit_ok;
}

int ensemble(const Options &o)
{
    const auto w = double_word(o);
    const Seed seed = build_seed(w);
    const auto e = build_ensemble(seed);
    if (json_out(o)) {
        std::cout << to_json(seed, e).dump() << "\n";
        return exit_ok;
    }
    std::cout << "B =\n"
              << matrix_text(e.B, seed.labels) << "M =\n"
              << matrix_text(e.M, seed.labels) << "Btilde =\n"
              << matrix_text(e.Btilde, seed.labels) << "det Btilde = " << e.detBtilde << "\n";
    return exit_ok;
}

int verify_def(const Options &o)
{
    Report rep;
    if (!o.word.empty()) {
        const auto w = double_word(o);
        rep.add(oracle_def(w, o.preset));
        return emit_report(o, rep);
    }
    const std::vector<std::string> types =
        o.preset.empty() ? std::vector<std::string>{"A2", "B2", "G2", "A1affine"} : std::vector<std::string>{o.preset};
    std::vector<CheckResult> results(o.trials);
    parallel_for(o.trials, [&](std::size_t t) {
        Rng rng(o.rng_seed, t);
        const std::string &name = types[t % types.size()];
        const auto C = preset_matrix(name);
        if (!C) {
            throw Error(ErrorKind::ParseError, "unknown Cartan preset '" + name + "'");
        }
        const auto R = random_realization(*C, rng);
        results[t] = oracle_def(parse_double_word(R, random_double_word(R, o.max_length, rng)), name);
    });
    for (auto &r : results) {
        rep.add(std::move(r));
    }
    return emit_report(o, rep);
}

std::vector<DoubleWord> words_or_defaults(const Options &o, const std::vector<std::pair<std::string, Word>> &defaults)
{
    std::vector<DoubleWord> out;
    if (!o.word.empty() || !o.preset.empty() || !o.matrix.empty()) {
        out.push_back(double_word(o));
        return out;
    }
    for (const auto &[type, letters] : defaults) {
        out.push_back(parse_double_word(preset(type), letters));
    }
    return out;
}

int verify_laurent_cmd(const Options &o)
{
    Report rep;
    LaurentOptions opt;
    opt.exhaustive_depth = o.depth;
    opt.random_sequences = o.random_sequences;
    opt.rng_seed = o.rng_seed;
    for (const auto &w : words_or_defaults(o, {{"A2", {1, 2, 1, -1, -2, -1}},
                                              {"B2", {1, 2, 1, -2, -1}},
                                              {"A1affine", {-1, -2, 1, 2}}})) {
        rep.add(verify_laurent(w, opt));
    }
    return emit_report(o, rep);
}

int verify_commute_cmd(const Options &o)
{
    Report rep;
    CommuteOptions opt;
    opt.trials = o.trials;
    opt.rng_seed = o.rng_seed;
    for (const auto &w : words_or_defaults(o, {{"A1affine", {-1, -2, 1, 2}}, {"A2", {1, -1, 2, -2}}})) {
        const auto unfrozen = build_seed(w).unfrozen();
        if (unfrozen.empty()) {
            rep.add(verify_ensemble_commute(w, 0, opt));
        }
        for (int k : unfrozen) {
            rep.add(verify_ensemble_commute(w, k, opt));
        }
    }
    return emit_report(o, rep);
}

int verify_poisson_cmd(const Options &o)
{
    Report rep;
    for (const auto &w :
         words_or_defaults(o, {{"A1affine", {-1, -2, 1, 2}}, {"A2", {1, -1, 2, -2}}, {"A2", {1, 2, 1, -1, -2, -1}}})) {
        rep.add(verify_poisson_word(w));
    }
    return emit_report(o, rep);
}

int verify_sln_cmd(const Options &o)
{
    const std::size_t n = o.n;
    if (n < 2) {
        throw Error(ErrorKind::IndexOutOfRange, "--n must be at least 2");
    }
    const auto R = preset("A" + std::to_string(n - 1));
    const Word letters = parse_ints(o.word, "word");
    const bool all = o.check == "all";
    Report rep;
    if (o.check == "gendetid") {
        rep.add(sl::verify_gendetid(n, parse_ints(o.u, "u"), parse_ints(o.v, "v"), o.i, o.trials, o.rng_seed));
        return emit_report(o, rep);
    }
    auto want = [&](const std::string &name) { return all || o.check == name; };
    const bool known = all || o.check == "thm-main" || o.check == "x-to-a" || o.check == "newlem" ||
                       o.check == "group-fact" || o.check == "uni-fact";
    if (!known) {
        throw Error(ErrorKind::ParseError, "unknown check '" + o.check + "'");
    }
    const auto w = parse_double_word(R, letters);
    const bool positive = w.u_word().empty();
    for (std::size_t t = 0; t < o.trials; ++t) {
        Rng rng(o.rng_seed, t);
        const std::size_t count = letters.size() + n - 1;
        if (want("thm-main")) {
            rep.add(sl::with_resample(count, rng, [&](const auto &v) { return sl::verify_thm_main(w, v); }));
        }
        if (want("x-to-a")) {
            rep.add(sl::with_resample(count, rng, [&](const auto &v) { return sl::verify_xtoa(w, v); }));
        }
        if (want("newlem")) {
            rep.add(sl::with_resample(count, rng, [&](const auto &v) { return sl::verify_newlem(w, v); }));
        }
        if (want("group-fact") && (positive || !all)) {
            rep.add(sl::verify_group_fact(n, letters, rng.positive_rationals(letters.size())));
        }
        if (want("uni-fact") && (positive || !all)) {
            rep.add(sl::with_resample(letters.size(), rng,
                                      [&](const auto &v) { return sl::verify_uni_fact(n, letters, v); }));
        }
    }
    return emit_report(o, rep);
}

int verify_affine_example(const Options &o)
{
    const auto R = preset("A1affine");
    const auto w = parse_double_word(R, {-1, -2, 1, 2});
    const Seed seed = build_seed(w);
    const auto e = build_ensemble(seed);
    auto half = [](long n) { return make_rational(n, 2); };
    const IntMatrix C{{2, -2, 1}, {-2, 2, 0}, {1, 0, 0}};
    const RatMatrix B{{0, 0, half(-1), 1, 0, half(-1), 0}, {0, 0, 1, -2, 1, 0, 0},  {half(1), -1, 0, 1, 0, 0, 0},
                      {-1, 2, -1, 0, 0, -1, 0},           {0, -1, 0, 0, 0, 2, -1}, {half(1), 0, 0, 1, -2, 0, 1},
                      {0, 0, 0, 0, 1, -1, 0}};
    const RatMatrix M{{0, 0, half(1), 0, 0, half(1), 0}, {0, 1, -1, 0, 0, 0, 0}, {half(1), -1, 1, 0, 0, 0, 0},
                      {0, 0, 0, 0, 0, 0, 0},             {0, 0, 0, 0, 0, 0, 0},  {half(1), 0, 0, 0, 0, 1, -1},
                      {0, 0, 0, 0, 0, -1, 1}};
    const RatMatrix Bt{{0, 0, 0, 1, 0, 0, 0},  {0, 1, 0, -2, 1, 0, 0},  {1, -2, 1, 1, 0, 0, 0}, {-1, 2, -1, 0, 0, -1, 0},
                       {0, -1, 0, 0, 0, 2, -1}, {1, 0, 0, 1, -2, 1, 0}, {0, 0, 0, 0, 1, -2, 1}};
    Report rep;
    auto add = [&](const std::string &what, bool ok, Json got) {
        CheckResult r;
        r.check = "affine-example";
        r.instance = "A1affine (-1,-2,1,2) " + what;
        r.pass = ok;
        r.witness = {{"computed", std::move(got)}};
        rep.add(std::move(r));
    };
    add("C", R.cfull == C, to_json(R.cfull));
    add("B", seed.B == B, to_json(seed.B));
    add("M", e.M == M, to_json(e.M));
    add("Btilde", e.Btilde == Bt, to_json(e.Btilde));
    add("|det Btilde| = 2", abs(e.detBtilde) == 2, to_json(e.detBtilde));
    return emit_report(o, rep);
}

void cartan_flags(CLI::App *cmd, Options &o)
{
    cmd->add_option("--preset", o.preset, "Cartan preset: An, B2, G2, A1affine");
    cmd->add_option("--matrix", o.matrix, "Cartan matrix, rows separated by ';', e.g. 2,-1;-1,2");
    cmd->add_option("--extension", o.extension, "extension rows for a degenerate Cartan matrix");
}

void word_flag(CLI::App *cmd, Options &o)
{
    cmd->add_option("--word", o.word, "double reduced word, comma separated, e.g. -1,-2,1,2")
        ->allow_extra_args(false);
}

void format_flag(CLI::App *cmd, Options &o)
{
    cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "pretty"}));
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Cluster ensembles on double Bruhat cells"};
    app.require_subcommand(1);
    Options o;

    auto *cartan = app.add_subcommand("cartan", "Cartan data")->require_subcommand(1);
    auto *cshow = cartan->add_subcommand("show", "print the extended Cartan matrix");
    auto *cvalidate = cartan->add_subcommand("validate", "validate a Cartan matrix");
    for (auto *c : {cshow, cvalidate}) {
        cartan_flags(c, o);
        format_flag(c, o);
    }

    auto *seed = app.add_subcommand("seed", "seeds of double reduced words")->require_subcommand(1);
    auto *sbuild = seed->add_subcommand("build", "build the seed of a word");
    auto *smutate = seed->add_subcommand("mutate", "mutate along a sequence of labels");
    smutate->add_option("--seq", o.seq, "mutation sequence of unfrozen labels, comma separated")->required();

    auto *ens = app.add_subcommand("ensemble", "print B, M, Btilde and det Btilde");
    for (auto *c : {sbuild, smutate, ens}) {
        cartan_flags(c, o);
        word_flag(c, o);
        format_flag(c, o);
    }

    auto *verify = app.add_subcommand("verify", "verification suites")->require_subcommand(1);
    auto *vdef = verify->add_subcommand("def-oracle", "D E F = B + M on random or given words");
    vdef->add_option("--max-length", o.max_length, "longest random word");
    auto *vlaurent = verify->add_subcommand("laurent", "Laurent property along mutation sequences");
    vlaurent->add_option("--depth", o.depth, "exhaustive sequence length");
    vlaurent->add_option("--random", o.random_sequences, "number of random sequences of length depth+1");
    auto *vcommute = verify->add_subcommand("ensemble-commute", "mutation commutes with the ensemble map");
    auto *vpoisson = verify->add_subcommand("poisson", "Poisson brackets of the X-coordinates");
    auto *vsln = verify->add_subcommand("sln", "SL_n identities");
    vsln->add_option("--n", o.n, "matrix size");
    vsln->add_option("--check", o.check, "all, thm-main, x-to-a, newlem, group-fact, uni-fact or gendetid");
    vsln->add_option("--u", o.u, "u word for gendetid");
    vsln->add_option("--v", o.v, "v word for gendetid");
    vsln->add_option("--i", o.i, "index for gendetid");
    auto *vexample = verify->add_subcommand("paper-example", "the affine A1 example");
    for (auto *c : {vdef, vlaurent, vcommute, vpoisson, vsln, vexample}) {
        format_flag(c, o);
        c->add_option("--rng-seed", o.rng_seed, "random seed");
        c->add_option("--trials", o.trials, "trial count")->check(CLI::PositiveNumber);
        if (c != vexample) {
            word_flag(c, o);
        }
        if (c != vexample && c != vsln) {
            cartan_flags(c, o);
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return exit_invalid;
    }

    try {
        if (cshow->parsed()) {
            return cartan_show(o);
        }
        if (cvalidate->parsed()) {
            return cartan_validate(o);
        }
        if (sbuild->parsed()) {
            return seed_build(o);
        }
        if (smutate->parsed()) {
            return seed_mutate(o);
        }
        if (ens->parsed()) {
            return ensemble(o);
        }
        if (vdef->parsed()) {
            if (vdef->count("--trials") == 0) {
                o.trials = 200;
            }
            return verify_def(o);
        }
        if (vlaurent->parsed()) {
            return verify_laurent_cmd(o);
        }
        if (vcommute->parsed()) {
            return verify_commute_cmd(o);
        }
        if (vpoisson->parsed()) {
            return verify_poisson_cmd(o);
        }
        if (vsln->parsed()) {
            if (vsln->count("--trials") == 0) {
                o.trials = 10;
            }
            return verify_sln_cmd(o);
        }
        if (vexample->parsed()) {
            return verify_affine_example(o);
        }
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invalid;
    }
    return exit_invalid;
}
