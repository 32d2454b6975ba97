#ifndef STREV_TESTS_SUPPORT_HPP
#define STREV_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "strev/canonical.hpp"

namespace testing_support {

using strev::ExactMatrix;
using strev::GaussianRational;
using strev::JordanBlock;
using strev::JordanSpec;

inline GaussianRational q(const std::string& s) { return strev::parse_scalar(s); }

/// Spec from (eigenvalue text, size) pairs.
inline JordanSpec spec(std::initializer_list<std::pair<const char*, int>> blocks) {
    std::vector<JordanBlock> out;
    for (const auto& [z, size] : blocks) out.push_back({q(z), size});
    return JordanSpec(std::move(out));
}

inline ExactMatrix mat(std::initializer_list<std::initializer_list<const char*>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    ExactMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (const char* e : row) m(i, j++) = q(e);
        ++i;
    }
    return m;
}

inline GaussianRational random_scalar(std::mt19937_64& rng, long span = 5) {
    std::uniform_int_distribution<long> num(-span, span);
    std::uniform_int_distribution<long> den(1, span);
    return {strev::BigRational(num(rng), den(rng)), strev::BigRational(num(rng), den(rng))};
}

inline GaussianRational random_nonzero(std::mt19937_64& rng) {
    for (;;) {
        GaussianRational z = random_scalar(rng);
        if (!z.is_zero()) return z;
    }
}

inline ExactMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
    ExactMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = random_scalar(rng, 3);
    return m;
}

/// Cofactor expansion along the first row; independent of elimination.
inline GaussianRational cofactor_det(const ExactMatrix& a) {
    const std::size_t n = a.rows();
    if (n == 0) return GaussianRational::one();
    if (n == 1) return a(0, 0);
    GaussianRational total;
    for (std::size_t j = 0; j < n; ++j) {
        if (a(0, j).is_zero()) continue;
        ExactMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, cc = 0; c < n; ++c)
                if (c != j) minor(r - 1, cc++) = a(r, c);
        GaussianRational term = a(0, j) * cofactor_det(minor);
        total = j % 2 == 0 ? total + term : total - term;
    }
    return total;
}

}  // namespace testing_support

#endif  // STREV_TESTS_SUPPORT_HPP
