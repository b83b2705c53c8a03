#ifndef BCF_CARTAN_HPP
#define BCF_CARTAN_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "bcf/error.hpp"
#include "bcf/numeric.hpp"

namespace bcf
{

// A symmetrizable generalized Cartan matrix together with its minimal
// symmetrizers d_i (d_i C_ij = d_j C_ji).
struct CartanCore {
    int r = 0;
    IntMatrix C;
    std::vector<int> d;
};

// The nondegenerate extension of a Cartan matrix to dimension rtilde = 2r - rank(C).
// Weights are stored in fundamental-weight coordinates, so the simple root alpha_j is
// column j of cfull and pairing with the coroot alpha_i^vee reads coordinate i.
struct CartanRealization {
    CartanCore core;
    int rtilde = 0;
    IntMatrix extension; // (rtilde - r) x r
    IntMatrix cfull;     // rtilde x rtilde
    std::vector<int> dfull;
    int D = 1;
    bool auto_extension = false;

    int r() const noexcept
    {
        return core.r;
    }
    // 1-based access, matching the index conventions used throughout.
    int c(int i, int j) const
    {
        return static_cast<int>(cfull(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)).get_si());
    }
    int d(int i) const
    {
        return dfull.at(static_cast<std::size_t>(i - 1));
    }
};

inline CartanCore validate_core(const IntMatrix &C)
{
    if (!C.is_square() || C.rows() == 0) {
        throw Error(ErrorKind::BadShape, "Cartan matrix must be square and nonempty");
    }
    const std::size_t r = C.rows();
    for (std::size_t i = 0; i < r; ++i) {
        if (C(i, i) != 2) {
            throw Error(ErrorKind::NotGCM, "diagonal entry C_" + std::to_string(i + 1) + std::to_string(i + 1) + " != 2");
        }
        for (std::size_t j = 0; j < r; ++j) {
            if (i == j) {
                continue;
            }
            if (C(i, j) > 0) {
                throw Error(ErrorKind::NotGCM, "positive off-diagonal entry");
            }
            if ((C(i, j) == 0) != (C(j, i) == 0)) {
                throw Error(ErrorKind::NotGCM, "zero pattern is not symmetric");
            }
        }
    }

    // Propagate ratios d_j / d_i = C_ij / C_ji over each component of the Dynkin graph.
    std::vector<std::optional<Rational>> ratio(r);
    std::vector<int> component(r, -1);
    int ncomp = 0;
    for (std::size_t root = 0; root < r; ++root) {
        if (ratio[root]) {
            continue;
        }
        ratio[root] = Rational(1);
        component[root] = ncomp;
        std::queue<std::size_t> todo;
        todo.push(root);
        while (!todo.empty()) {
            const std::size_t i = todo.front();
            todo.pop();
            for (std::size_t j = 0; j < r; ++j) {
                if (j == i || C(i, j) == 0) {
                    continue;
                }
                Rational dj = *ratio[i] * Rational(C(i, j)) / Rational(C(j, i));
                if (!ratio[j]) {
                    ratio[j] = dj;
                    component[j] = ncomp;
                    todo.push(j);
                } else if (*ratio[j] != dj) {
                    throw Error(ErrorKind::NotSymmetrizable,
                                "inconsistent symmetrizer along a cycle through index " + std::to_string(j + 1));
                }
            }
        }
        ++ncomp;
    }

    CartanCore core;
    core.r = static_cast<int>(r);
    core.C = C;
    core.d.assign(r, 0);
    for (int comp = 0; comp < ncomp; ++comp) {
        Integer den_lcm = 1;
        for (std::size_t i = 0; i < r; ++i) {
            if (component[i] == comp) {
                mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), ratio[i]->get_den_mpz_t());
            }
        }
        Integer num_gcd = 0;
        for (std::size_t i = 0; i < r; ++i) {
            if (component[i] == comp) {
                Integer scaled = ratio[i]->get_num() * (den_lcm / ratio[i]->get_den());
                mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
            }
        }
        for (std::size_t i = 0; i < r; ++i) {
            if (component[i] == comp) {
                Integer scaled = ratio[i]->get_num() * (den_lcm / ratio[i]->get_den()) / num_gcd;
                core.d[i] = static_cast<int>(scaled.get_si());
            }
        }
    }
    return core;
}

inline CartanCore validate_core(const std::vector<std::vector<int>> &C)
{
    return validate_core(IntMatrix::from(C));
}

namespace detail
{

inline IntMatrix assemble_cfull(const CartanCore &core, const IntMatrix &ext, int D)
{
    const std::size_t r = static_cast<std::size_t>(core.r);
    const std::size_t rt = r + ext.rows();
    IntMatrix full(rt, rt);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            full(i, j) = core.C(i, j);
        }
    }
    for (std::size_t a = 0; a < ext.rows(); ++a) {
        for (std::size_t j = 0; j < r; ++j) {
            full(r + a, j) = ext(a, j);
            full(j, r + a) = Integer(D / core.d[j]) * ext(a, j);
        }
    }
    return full;
}

// Visits k-subsets of {0..n-1} in lexicographic order until fn returns true.
template <typename Fn>
bool for_each_combination(std::size_t n, std::size_t k, Fn &&fn)
{
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    if (k > n) {
        return false;
    }
    while (true) {
        if (fn(idx)) {
            return true;
        }
        std::size_t pos = k;
        while (pos > 0 && idx[pos - 1] == n - k + pos - 1) {
            --pos;
        }
        if (pos == 0) {
            return false;
        }
        ++idx[pos - 1];
        for (std::size_t q = pos; q < k; ++q) {
            idx[q] = idx[q - 1] + 1;
        }
    }
}

} // namespace detail

inline CartanRealization extend(const CartanCore &core, const std::optional<IntMatrix> &extension = std::nullopt)
{
    const int r = core.r;
    const int rk = static_cast<int>(rank(core.C));
    const int rt = 2 * r - rk;
    const std::size_t nx = static_cast<std::size_t>(rt - r);

    CartanRealization out;
    out.core = core;
    out.rtilde = rt;
    out.D = std::accumulate(core.d.begin(), core.d.end(), 1, [](int a, int b) { return std::lcm(a, b); });
    out.dfull = core.d;
    out.dfull.resize(static_cast<std::size_t>(rt), out.D);

    if (extension) {
        if (extension->rows() != nx || (nx > 0 && extension->cols() != static_cast<std::size_t>(r))) {
            throw Error(ErrorKind::BadShape, "extension must be " + std::to_string(nx) + "x" + std::to_string(r));
        }
        out.extension = nx > 0 ? *extension : IntMatrix(0, static_cast<std::size_t>(r));
        out.cfull = detail::assemble_cfull(core, out.extension, out.D);
        if (determinant(out.cfull) == 0) {
            throw Error(ErrorKind::DegenerateRealization, "supplied extension leaves the extended Cartan matrix singular");
        }
        return out;
    }

    out.auto_extension = nx > 0;
    const bool found = detail::for_each_combination(static_cast<std::size_t>(r), nx, [&](const std::vector<std::size_t> &cols) {
        IntMatrix ext(nx, static_cast<std::size_t>(r));
        for (std::size_t a = 0; a < nx; ++a) {
            ext(a, cols[a]) = 1;
        }
        IntMatrix full = detail::assemble_cfull(core, ext, out.D);
        if (determinant(full) == 0) {
            return false;
        }
        out.extension = std::move(ext);
        out.cfull = std::move(full);
        return true;
    });
    if (!found) {
        throw Error(ErrorKind::DegenerateRealization, "no unit-row extension is nondegenerate");
    }
    return out;
}

inline CartanRealization realize(const IntMatrix &C, const std::optional<IntMatrix> &extension = std::nullopt)
{
    return extend(validate_core(C), extension);
}

// <lambda | alpha_i^vee> for a weight in fundamental-weight coordinates.
template <typename T>
T pairing(const CartanRealization &R, const std::vector<T> &lambda, int i)
{
    if (lambda.size() != static_cast<std::size_t>(R.rtilde)) {
        throw Error(ErrorKind::BadShape, "weight must have rtilde coordinates");
    }
    if (i < 1 || i > R.rtilde) {
        throw Error(ErrorKind::IndexOutOfRange, "pairing index " + std::to_string(i));
    }
    return lambda[static_cast<std::size_t>(i - 1)];
}

// Simple root alpha_j in fundamental-weight coordinates.
inline std::vector<Integer> simple_root(const CartanRealization &R, int j)
{
    if (j < 1 || j > R.rtilde) {
        throw Error(ErrorKind::IndexOutOfRange, "root index " + std::to_string(j));
    }
    return R.cfull.col(static_cast<std::size_t>(j - 1));
}

inline std::vector<Integer> fundamental_weight(const CartanRealization &R, int j)
{
    if (j < 1 || j > R.rtilde) {
        throw Error(ErrorKind::IndexOutOfRange, "weight index " + std::to_string(j));
    }
    std::vector<Integer> w(static_cast<std::size_t>(R.rtilde), Integer(0));
    w[static_cast<std::size_t>(j - 1)] = 1;
    return w;
}

inline IntMatrix type_a_matrix(int r)
{
    IntMatrix C(static_cast<std::size_t>(r), static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
        C(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = 2;
        if (i + 1 < r) {
            C(static_cast<std::size_t>(i), static_cast<std::size_t>(i + 1)) = -1;
            C(static_cast<std::size_t>(i + 1), static_cast<std::size_t>(i)) = -1;
        }
    }
    return C;
}

// Named presets: A2, B2, G2, A1affine, and An for any n >= 1.
inline std::optional<IntMatrix> preset_matrix(const std::string &name)
{
    if (name == "B2") {
        return IntMatrix{{2, -2}, {-1, 2}};
    }
    if (name == "G2") {
        return IntMatrix{{2, -1}, {-3, 2}};
    }
    if (name == "A1affine") {
        return IntMatrix{{2, -2}, {-2, 2}};
    }
    if (name.size() >= 2 && name[0] == 'A' &&
        std::all_of(name.begin() + 1, name.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
        const int n = std::stoi(name.substr(1));
        if (n >= 1 && n <= 32) {
            return type_a_matrix(n);
        }
    }
    return std::nullopt;
}

inline CartanRealization preset(const std::string &name)
{
    auto C = preset_matrix(name);
    if (!C) {
        throw Error(ErrorKind::ParseError, "unknown Cartan preset '" + name + "'");
    }
    return realize(*C);
}

inline bool is_symmetrized(const CartanRealization &R)
{
    for (int i = 1; i <= R.rtilde; ++i) {
        for (int j = 1; j <= R.rtilde; ++j) {
            if (R.d(i) * R.c(i, j) != R.d(j) * R.c(j, i)) {
                return false;
            }
        }
    }
    return true;
}

} // namespace bcf

#endif
