#ifndef STREV_REVERSAL_HPP
#define STREV_REVERSAL_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "strev/canonical.hpp"
#include "strev/matrix.hpp"
#include "strev/partition.hpp"

namespace strev {

class PreconditionError : public std::invalid_argument {
public:
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// ---------------------------------------------------------------------------
// The Omega reverser family.
//
// Omega(lambda, n) is upper triangular with
//   x_{i,i} = (-1)^{n-i} lambda^{-2(n-i)}
//   x_{i,j} = (-1)^{n-i} C(n-i-1, j-i) lambda^{-2n+i+j}   (i < j < n)
//   last column e_n
// and satisfies Omega(lambda,n) J(lambda^{-1},n) = J(lambda,n)^{-1} Omega(lambda,n),
// Omega(lambda,n)^{-1} = Omega(lambda^{-1},n).
// ---------------------------------------------------------------------------

/// Entry formula above (1-based indices in the comment, 0-based in code).
ExactMatrix omega_closed(const GaussianRational& lambda, int n);

/// Same matrix from x_{n,n} = 1, zero last column above it, and
/// x_{i,j} = -lambda^{-2} x_{i+1,j+1} - lambda^{-1} x_{i+1,j}.
ExactMatrix omega_recurrence(const GaussianRational& lambda, int n);

/// Omega(lambda,n) * Omega(lambda^{-1},n) == I.
bool omega_inverse_law_check(const GaussianRational& lambda, int n);

/// Upper triangular Toeplitz matrix with first row x.
ExactMatrix toeplitz(std::span<const GaussianRational> x);

/// Toep(x) * Omega(lambda, n). Every GL reverser of J(+-1, n) has this shape.
ExactMatrix omega_general(const GaussianRational& lambda, std::span<const GaussianRational> x);

/// Omega(mu, n) for mu = +-1; an involution reversing J(mu, n).
ExactMatrix base_reverser_single(const GaussianRational& mu, int n);

/// [[0, Omega(lambda,n)], [Omega(lambda,n)^{-1}, 0]]; reverses
/// J(lambda,n) + J(lambda^{-1},n) and squares to the identity.
ExactMatrix base_reverser_pair(const GaussianRational& lambda, int n);

bool is_plus_minus_one(const GaussianRational& z);

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

struct BlockPair {
    std::size_t first = 0;   // index into spec.blocks(), eigenvalue lambda
    std::size_t second = 0;  // index of the matched lambda^{-1} block
};

struct ReversibilityReport {
    bool reversible = false;
    std::vector<BlockPair> pairs;
    std::vector<std::size_t> singletons;  // +-1 blocks
    std::optional<std::size_t> failure_witness;
};

/// Greedy matching of each (lambda, r), lambda != +-1, with an unmatched
/// (lambda^{-1}, r) in canonical block order.
ReversibilityReport pair_blocks(const JordanSpec& spec);

struct StrongReversibilityReport {
    ReversibilityReport reversibility;
    bool strongly_reversible = false;
    int p = 0;  // algebraic multiplicity of +1
    int q = 0;  // algebraic multiplicity of -1
    Partition dp;
    Partition dq;
    bool condition1 = false;  // some odd block size at +1 or -1
    /// e2_weight(dp) + e2_weight(dq) + (n - p - q)/2; present only when reversible.
    std::optional<long> condition2_value;
    bool condition2 = false;
};

StrongReversibilityReport is_strongly_reversible(const JordanSpec& spec);

/// Determinant that every involutive reverser of the spec is forced to take.
struct DetSignPrediction {
    enum class Kind { Forced, Free };
    Kind kind = Kind::Free;
    int sign = 0;  // +1 or -1 when Forced

    static DetSignPrediction forced(int s) { return {Kind::Forced, s}; }
    static DetSignPrediction free() { return {Kind::Free, 0}; }
    bool is_forced(int s) const { return kind == Kind::Forced && sign == s; }
    friend bool operator==(const DetSignPrediction&, const DetSignPrediction&) = default;
};

DetSignPrediction det_sign_of_involutive_reverser(const JordanSpec& spec);

std::string describe(const DetSignPrediction& d);

// ---------------------------------------------------------------------------
// Witnesses
// ---------------------------------------------------------------------------

struct WitnessBundle {
    ExactMatrix a;  // jordan_matrix(spec)
    ExactMatrix g;
    bool is_involution = false;
    GaussianRational determinant;
    bool reverses = false;
    std::vector<std::string> transcript;
};

/// Involution g with det 1 and g A g^{-1} = A^{-1}, assembled one block
/// (or one lambda/lambda^{-1} pair) at a time. Throws PreconditionError
/// unless the spec is strongly reversible, ConstructionError if the
/// assembled matrix fails verification.
WitnessBundle involutive_witness(const JordanSpec& spec);

/// g in SL(n) with g A g^{-1} = A^{-1}; an involution only when the spec
/// is strongly reversible.
WitnessBundle sl_reverser_witness(const JordanSpec& spec);

/// Reverser of the Weyr form of A built from block binomial coefficients,
/// one piece per +-1 eigenvalue and one antidiagonal piece per
/// lambda/lambda^{-1} eigenvalue pair.
ExactMatrix weyr_base_reverser(const JordanSpec& spec, const WeyrData& weyr);

/// Random GL reverser of jordan_matrix(spec): a Weyr centralizer sample
/// times weyr_base_reverser, pulled back through the duality permutation.
ExactMatrix reverser_sample(const JordanSpec& spec, std::uint64_t seed);

}  // namespace strev

#endif  // STREV_REVERSAL_HPP
