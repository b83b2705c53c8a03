#ifndef BCF_TESTS_SUPPORT_HPP
#define BCF_TESTS_SUPPORT_HPP

#include <initializer_list>
#include <vector>

#include "bcf/numeric.hpp"

namespace bcf::testing
{

// Matrix literal given as twice its entries, so half-integers stay integral in source.
inline RatMatrix from_doubled(std::initializer_list<std::initializer_list<int>> rows)
{
    std::vector<std::vector<int>> twice;
    for (const auto &row : rows) {
        twice.emplace_back(row);
    }
    RatMatrix out = RatMatrix::from(twice);
    for (std::size_t i = 0; i < out.rows(); ++i) {
        for (std::size_t j = 0; j < out.cols(); ++j) {
            out(i, j) /= 2;
        }
    }
    return out;
}

} // namespace bcf::testing

#endif
