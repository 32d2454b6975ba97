#include "strev/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace strev {

JordanSpec::JordanSpec(std::vector<JordanBlock> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty()) throw std::invalid_argument("Jordan spec needs at least one block");
    for (const auto& b : blocks_) {
        if (b.eigenvalue.is_zero()) throw std::invalid_argument("eigenvalue 0 does not describe an invertible matrix");
        if (b.size <= 0) throw std::invalid_argument("Jordan block size must be positive");
        n_ += b.size;
    }
    std::stable_sort(blocks_.begin(), blocks_.end(), [](const JordanBlock& a, const JordanBlock& b) {
        if (a.eigenvalue == b.eigenvalue) return a.size > b.size;
        return a.eigenvalue < b.eigenvalue;
    });
}

std::vector<GaussianRational> JordanSpec::eigenvalues() const {
    std::vector<GaussianRational> out;
    for (const auto& b : blocks_)
        if (out.empty() || !(out.back() == b.eigenvalue)) out.push_back(b.eigenvalue);
    return out;
}

Partition JordanSpec::structure_of(const GaussianRational& eigenvalue) const {
    std::vector<int> sizes;
    for (const auto& b : blocks_)
        if (b.eigenvalue == eigenvalue) sizes.push_back(b.size);
    return Partition(std::move(sizes));
}

std::size_t JordanSpec::offset_of(std::size_t k) const {
    std::size_t off = 0;
    for (std::size_t i = 0; i < k; ++i) off += static_cast<std::size_t>(blocks_.at(i).size);
    return off;
}

int WeyrStructure::dimension() const { return std::accumulate(sizes.begin(), sizes.end(), 0); }

ExactMatrix jordan_matrix(const JordanSpec& spec) {
    std::vector<ExactMatrix> blocks;
    blocks.reserve(spec.blocks().size());
    for (const auto& b : spec.blocks()) blocks.push_back(jordan_block(b.eigenvalue, static_cast<std::size_t>(b.size)));
    return direct_sum(std::span<const ExactMatrix>(blocks));
}

namespace {

std::vector<std::size_t> block_offsets(const std::vector<int>& sizes) {
    std::vector<std::size_t> off(sizes.size() + 1, 0);
    for (std::size_t i = 0; i < sizes.size(); ++i) off[i + 1] = off[i] + static_cast<std::size_t>(sizes[i]);
    return off;
}

void require_weakly_decreasing(const std::vector<int>& sizes) {
    if (sizes.empty()) throw std::invalid_argument("empty Weyr structure");
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] <= 0) throw std::invalid_argument("Weyr structure entries must be positive");
        if (i > 0 && sizes[i] > sizes[i - 1]) throw std::invalid_argument("Weyr structure must be weakly decreasing");
    }
}

}  // namespace

ExactMatrix basic_weyr_matrix(const WeyrStructure& w) {
    require_weakly_decreasing(w.sizes);
    const auto off = block_offsets(w.sizes);
    ExactMatrix out = ExactMatrix::scalar(off.back(), w.eigenvalue);
    // W_{i,i+1} = I_{n_i, n_{i+1}}: identity on top, zero rows below.
    for (std::size_t i = 0; i + 1 < w.sizes.size(); ++i)
        for (int d = 0; d < w.sizes[i + 1]; ++d) out(off[i] + d, off[i + 1] + d) = GaussianRational::one();
    return out;
}

ExactMatrix homogeneous_weyr(const GaussianRational& lambda, int k, int m) {
    if (lambda.is_zero()) throw std::invalid_argument("homogeneous Weyr matrix needs a nonzero eigenvalue");
    if (k <= 0 || m <= 0) throw std::invalid_argument("homogeneous Weyr matrix needs positive k and m");
    return basic_weyr_matrix({lambda, std::vector<int>(static_cast<std::size_t>(m), k)});
}

WeyrData weyr_of(const JordanSpec& spec) {
    const std::size_t n = static_cast<std::size_t>(spec.dimension());
    std::vector<std::size_t> images(n);
    std::vector<ExactMatrix> weyr_blocks;
    WeyrData data;

    std::size_t base = 0;  // start of the current eigenvalue's coordinates (same on both sides)
    for (const auto& lambda : spec.eigenvalues()) {
        Partition jordan = spec.structure_of(lambda);
        Partition weyr = conjugate(jordan);
        const auto col_off = block_offsets(weyr.parts());

        std::size_t row_start = base;
        for (std::size_t row = 0; row < jordan.length(); ++row) {
            const int len = jordan.parts()[row];
            for (int c = 0; c < len; ++c)
                images[row_start + static_cast<std::size_t>(c)] = base + col_off[static_cast<std::size_t>(c)] + row;
            row_start += static_cast<std::size_t>(len);
        }

        WeyrStructure ws{lambda, weyr.parts()};
        weyr_blocks.push_back(basic_weyr_matrix(ws));
        data.structures.push_back(std::move(ws));
        base += static_cast<std::size_t>(jordan.total());
    }

    data.perm = PermutationMap(std::move(images));
    data.weyr = direct_sum(std::span<const ExactMatrix>(weyr_blocks));
    if (permute_similarity(data.perm, jordan_matrix(spec)) != data.weyr)
        throw ConstructionError("duality permutation does not carry the Jordan form to the Weyr form");
    return data;
}

bool centralizer_pattern_check(const WeyrStructure& w, const ExactMatrix& k) {
    require_weakly_decreasing(w.sizes);
    const auto off = block_offsets(w.sizes);
    if (!k.is_square() || k.rows() != off.back())
        throw DimensionError("matrix " + ExactMatrix::shape(k) + " does not match Weyr structure of size " +
                             std::to_string(off.back()));
    const std::size_t r = w.sizes.size();
    auto entry = [&](std::size_t bi, std::size_t bj, std::size_t a, std::size_t b) -> const GaussianRational& {
        return k(off[bi] + a, off[bj] + b);
    };

    // Block upper triangular.
    for (std::size_t bi = 0; bi < r; ++bi)
        for (std::size_t bj = 0; bj < bi; ++bj)
            for (int a = 0; a < w.sizes[bi]; ++a)
                for (int b = 0; b < w.sizes[bj]; ++b)
                    if (!entry(bi, bj, a, b).is_zero()) return false;

    // K_{i,j} = [[K_{i+1,j+1}, *], [0, *]] for i <= j < r-1.
    for (std::size_t bi = 0; bi + 1 < r; ++bi) {
        for (std::size_t bj = bi; bj + 1 < r; ++bj) {
            const std::size_t rows_below = static_cast<std::size_t>(w.sizes[bi + 1]);
            const std::size_t cols_next = static_cast<std::size_t>(w.sizes[bj + 1]);
            for (std::size_t a = 0; a < static_cast<std::size_t>(w.sizes[bi]); ++a) {
                for (std::size_t b = 0; b < cols_next; ++b) {
                    if (a < rows_below) {
                        if (!(entry(bi, bj, a, b) == entry(bi + 1, bj + 1, a, b))) return false;
                    } else if (!entry(bi, bj, a, b).is_zero()) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

namespace {

constexpr int kMaxSampleAttempts = 64;

GaussianRational small_gaussian(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dist(-3, 3);
    long re = dist(rng);
    long im = dist(rng);
    return {BigRational(re), BigRational(im)};
}

ExactMatrix draw_centralizer(const WeyrStructure& w, std::mt19937_64& rng) {
    const auto off = block_offsets(w.sizes);
    const std::size_t r = w.sizes.size();
    ExactMatrix k(off.back(), off.back());
    // Fill block rows bottom-up so K_{i+1,j+1} exists when K_{i,j} copies it.
    for (std::size_t bi = r; bi-- > 0;) {
        for (std::size_t bj = r; bj-- > bi;) {
            const bool last_col = bj + 1 == r;
            const std::size_t rows_below = last_col ? 0 : static_cast<std::size_t>(w.sizes[bi + 1]);
            const std::size_t cols_next = last_col ? 0 : static_cast<std::size_t>(w.sizes[bj + 1]);
            for (std::size_t a = 0; a < static_cast<std::size_t>(w.sizes[bi]); ++a) {
                for (std::size_t b = 0; b < static_cast<std::size_t>(w.sizes[bj]); ++b) {
                    GaussianRational& dst = k(off[bi] + a, off[bj] + b);
                    if (b >= cols_next) {
                        dst = small_gaussian(rng);
                    } else if (a < rows_below) {
                        dst = k(off[bi + 1] + a, off[bj + 1] + b);
                    }  // else stays zero
                }
            }
        }
    }
    return k;
}

}  // namespace

ExactMatrix sample_centralizer(const WeyrStructure& w, std::uint64_t seed) {
    require_weakly_decreasing(w.sizes);
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < kMaxSampleAttempts; ++attempt) {
        ExactMatrix k = draw_centralizer(w, rng);
        if (!mat_det(k).is_zero()) return k;
    }
    throw ConstructionError("no invertible centralizer sample after " + std::to_string(kMaxSampleAttempts) +
                            " attempts");
}

ExactMatrix sample_weyr_centralizer(const std::vector<WeyrStructure>& structures, std::uint64_t seed) {
    std::vector<ExactMatrix> blocks;
    std::mt19937_64 master(seed);
    for (const auto& w : structures) blocks.push_back(sample_centralizer(w, master()));
    return direct_sum(std::span<const ExactMatrix>(blocks));
}

}  // namespace strev
