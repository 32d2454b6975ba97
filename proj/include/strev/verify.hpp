#ifndef STREV_VERIFY_HPP
#define STREV_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "strev/reversal.hpp"

namespace strev {

struct Residual {
    std::string check;  // "reverses" or "involution"
    std::size_t row = 0;
    std::size_t col = 0;
};

struct VerificationReport {
    bool reverses = false;
    bool involution = false;
    GaussianRational determinant;
    bool in_special = false;  // det g = 1
    std::vector<Residual> residuals;

    bool all() const { return reverses && involution && in_special; }
};

/// Exact check of g A g^{-1} = A^{-1}, g^2 = I and det g = 1. Throws
/// DimensionError on a shape mismatch and SingularMatrixError when a is
/// singular. A singular g is reported as not reversing.
VerificationReport check_witness(const ExactMatrix& a, const ExactMatrix& g);

struct SpecGenerator {
    enum class Mode { Exhaustive, Random };

    int max_n = 1;
    std::vector<GaussianRational> pool;
    Mode mode = Mode::Exhaustive;
    std::uint64_t seed = 0;
    int count = 0;           // Random mode only
    int max_block_size = 0;  // 0 means max_n

    static SpecGenerator exhaustive(int max_n, std::vector<GaussianRational> pool, int max_block_size = 0);
    static SpecGenerator random(int max_n, std::vector<GaussianRational> pool, std::uint64_t seed, int count,
                                int max_block_size = 0);

    /// Exhaustive mode yields every nonempty multiset of (eigenvalue, size)
    /// with total size <= max_n exactly once.
    std::vector<JordanSpec> generate() const;
    /// Calls f on each spec in the same order generate() would return them.
    void for_each(const std::function<void(const JordanSpec&)>& f) const;
};

/// Random reversible spec of dimension <= max_n: +-1 blocks and
/// lambda/lambda^{-1} pairs drawn from the pool.
JordanSpec random_reversible_spec(std::mt19937_64& rng, int max_n, const std::vector<GaussianRational>& pool);

/// Random nonzero scalar with small numerators and denominators.
GaussianRational random_nonzero_scalar(std::mt19937_64& rng);

struct FailureRecord {
    std::string check;
    std::optional<JordanSpec> spec;
    std::string detail;
};

struct CheckSummary {
    std::string name;
    long cases = 0;
    long strongly_reversible = 0;
    long reversible_only = 0;
    long not_reversible = 0;
    long matrices_checked = 0;
    std::vector<FailureRecord> failures;

    bool ok() const { return failures.empty(); }
    void fail(std::string check, std::optional<JordanSpec> spec, std::string detail);
    void merge(const CheckSummary& other);
};

using Classifier = std::function<StrongReversibilityReport(const JordanSpec&)>;

/// Reversibility decided by counting (lambda, r) against (lambda^{-1}, r),
/// without the pairing code.
bool reversible_by_counts(const JordanSpec& spec);

/// Involutive reversers of jordan_matrix(spec) that the harness can build
/// directly: every sign pattern x_1 = +-1 on +-1 blocks, every pair scaling
/// x_1 in {1, -1, i, -i} with y_1 = 1/x_1, and `mixes` random matrices that
/// couple equal-size blocks through a conjugated diagonal involution.
/// Empty if the spec is not reversible.
std::vector<ExactMatrix> harness_involutive_reversers(const JordanSpec& spec, std::uint64_t seed, int mixes = 2);

/// For every generated spec: a strongly reversible verdict must come with a
/// verified involutive witness; a reversible-only verdict must come with a
/// Forced(-1) prediction and det -1 on every harness reverser. Throws
/// PreconditionError if the pool is not closed under inversion.
CheckSummary exhaustive_theorem_check(const SpecGenerator& gen, const Classifier& classifier = is_strongly_reversible);

/// Involutive reversers of A = sum of k copies of J(1, 2m), sampled as
/// c (Omega(1,2m) (x) S) c^{-1} in the Weyr basis with S a random involution
/// in GL(k) and c a random centralizer element. Each must have det (-1)^{mk}.
CheckSummary weyr_det_argument_check(int k, int m, int trials, std::uint64_t seed);

// Per-case verdicts from the separate lemmas, computed straight from the
// block list. nullopt when the spec lies outside the lemma's domain.
std::optional<bool> semisimple_verdict(const JordanSpec& spec);
std::optional<bool> unipotent_verdict(const JordanSpec& spec);
std::optional<bool> minus_one_verdict(const JordanSpec& spec);
std::optional<bool> single_pair_verdict(const JordanSpec& spec);

/// Semisimple verdict against the classifier. Throws PreconditionError if
/// the generator allows blocks larger than 1.
CheckSummary semisimple_cross_check(const SpecGenerator& gen, const Classifier& classifier = is_strongly_reversible);

/// Every applicable per-case verdict against the classifier.
CheckSummary cross_path_check(const SpecGenerator& gen, const Classifier& classifier = is_strongly_reversible);

/// Closed form against recurrence, inverse law, involution law at +-1 and
/// the reversal identity for Toep(x) Omega, for n <= max_n.
CheckSummary omega_law_check(int max_n, int lambdas_per_n, std::uint64_t seed);

/// det(x_1 Omega(mu, n)) over x_1, mu in {+1, -1}, n <= max_n: +1 for
/// n = 0 mod 4, -1 for n = 2 mod 4, both signs reachable for odd n.
CheckSummary single_block_det_check(int max_n);

/// det of base_reverser_pair(lambda, n) is (-1)^n, n <= max_n.
CheckSummary pair_det_check(int max_n, int lambdas_per_n, std::uint64_t seed);

/// conjugate is an involution and matches the transpose construction.
CheckSummary partition_duality_check(int count, int max_total, std::uint64_t seed);

/// weyr_of conjugation and centralizer samples on random specs.
CheckSummary weyr_centralizer_check(int specs, int max_n, std::uint64_t seed);

/// reverser_sample outputs reverse A, and products of two commute with A.
CheckSummary coset_check(int specs, int max_n, std::uint64_t seed);

/// The full selftest suite used by the CLI.
std::vector<CheckSummary> run_selftest(int max_n, std::uint64_t seed,
                                       const Classifier& classifier = is_strongly_reversible);

/// The eigenvalue pool {1, -1, 2, 1/2, i, -i}.
std::vector<GaussianRational> default_pool();

}  // namespace strev

#endif  // STREV_VERIFY_HPP
