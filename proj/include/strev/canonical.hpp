#ifndef STREV_CANONICAL_HPP
#define STREV_CANONICAL_HPP

#include <cstdint>
#include <vector>

#include "strev/matrix.hpp"
#include "strev/partition.hpp"

namespace strev {

struct JordanBlock {
    GaussianRational eigenvalue;
    int size = 0;
    friend bool operator==(const JordanBlock&, const JordanBlock&) = default;
};

/// Multiset of Jordan blocks describing one conjugacy class of invertible
/// matrices. Blocks are kept in canonical order: eigenvalues ascending
/// (lexicographic on real then imaginary part), and for a fixed
/// eigenvalue, sizes descending.
class JordanSpec {
public:
    JordanSpec() = default;
    explicit JordanSpec(std::vector<JordanBlock> blocks);

    const std::vector<JordanBlock>& blocks() const noexcept { return blocks_; }
    int dimension() const noexcept { return n_; }
    /// Distinct eigenvalues in canonical order.
    std::vector<GaussianRational> eigenvalues() const;
    /// Jordan structure (Segre characteristic) of one eigenvalue; empty if absent.
    Partition structure_of(const GaussianRational& eigenvalue) const;
    /// Row offset of block k inside jordan_matrix(*this).
    std::size_t offset_of(std::size_t k) const;

    friend bool operator==(const JordanSpec&, const JordanSpec&) = default;

private:
    std::vector<JordanBlock> blocks_;
    int n_ = 0;
};

struct WeyrStructure {
    GaussianRational eigenvalue;
    std::vector<int> sizes;  // weakly decreasing
    int dimension() const;
    friend bool operator==(const WeyrStructure&, const WeyrStructure&) = default;
};

struct WeyrData {
    ExactMatrix weyr;
    std::vector<WeyrStructure> structures;  // one per distinct eigenvalue, canonical order
    PermutationMap perm;                    // permute_similarity(perm, jordan) == weyr
};

class ConstructionError : public std::logic_error {
public:
    explicit ConstructionError(const std::string& what) : std::logic_error(what) {}
};

ExactMatrix jordan_matrix(const JordanSpec& spec);

ExactMatrix basic_weyr_matrix(const WeyrStructure& w);

/// m x m block grid with lambda*I_k on the diagonal and I_k on the superdiagonal.
ExactMatrix homogeneous_weyr(const GaussianRational& lambda, int k, int m);

/// Weyr form of jordan_matrix(spec) with the duality permutation. The
/// permutation numbers Young-diagram cells row by row on the Jordan side
/// and column by column on the Weyr side. Throws ConstructionError if the
/// conjugation check fails.
WeyrData weyr_of(const JordanSpec& spec);

/// Block pattern test for membership in the centralizer of basic_weyr_matrix(w).
bool centralizer_pattern_check(const WeyrStructure& w, const ExactMatrix& k);

/// Random invertible matrix commuting with basic_weyr_matrix(w). Free
/// entries are a+bi with a, b in {-3..3}; singular draws are retried.
ExactMatrix sample_centralizer(const WeyrStructure& w, std::uint64_t seed);

/// Direct sum of per-eigenvalue centralizer samples, matching WeyrData::weyr.
ExactMatrix sample_weyr_centralizer(const std::vector<WeyrStructure>& structures, std::uint64_t seed);

}  // namespace strev

#endif  // STREV_CANONICAL_HPP
