#ifndef STREV_PARTITION_HPP
#define STREV_PARTITION_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "strev/scalar.hpp"

namespace strev {

/// A part size d together with its multiplicity t_d.
struct PartMultiplicity {
    int size = 0;
    int multiplicity = 0;
    friend bool operator==(const PartMultiplicity&, const PartMultiplicity&) = default;
};

/// Integer partition held in both notations at once: the weakly
/// decreasing parts (n_1 >= n_2 >= ...) and the multiset view
/// [d_1^{t_1}, ..., d_s^{t_s}] with d_1 > ... > d_s. The empty partition
/// (of 0) is allowed; it describes an absent eigenvalue.
class Partition {
public:
    Partition() = default;
    /// Parts in any order; they are sorted into weakly decreasing order.
    explicit Partition(std::vector<int> parts);
    static Partition from_multiplicities(std::vector<PartMultiplicity> view);

    const std::vector<int>& parts() const noexcept { return parts_; }
    const std::vector<PartMultiplicity>& multiplicities() const noexcept { return view_; }
    int total() const noexcept { return total_; }
    bool empty() const noexcept { return parts_.empty(); }
    std::size_t length() const noexcept { return parts_.size(); }
    int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

private:
    void rebuild_view();

    std::vector<int> parts_;
    std::vector<PartMultiplicity> view_;
    int total_ = 0;
};

/// Part-size sets derived from a partition: all sizes, the even ones, the
/// odd ones, and the even ones congruent to 2 mod 4. e2_weight sums the
/// multiplicities of the sizes in e2_set.
struct PartitionSets {
    std::set<int> n_set;
    std::set<int> e_set;
    std::set<int> o_set;
    std::set<int> e2_set;
    long e2_weight = 0;
};

/// Dual partition from the multiset view:
/// [d_1^{t_1},...,d_s^{t_s}] -> [(t_1+...+t_s)^{d_s}, (t_1+...+t_{s-1})^{d_{s-1}-d_s}, ..., t_1^{d_1-d_2}].
Partition conjugate(const Partition& p);

/// Dual partition by transposing the Young diagram cell grid. Kept as a
/// separate code path so the two constructions can be cross-checked.
Partition conjugate_by_transpose(const Partition& p);

PartitionSets derive_sets(const Partition& p);

/// Exact binomial coefficient; zero when k lies outside [0, n].
BigInteger binomial(long n, long k);

/// Left-justified Young diagram, one "[]" per box, one line per part.
std::string young_ascii(const Partition& p);

std::string format_partition(const Partition& p);

}  // namespace strev

#endif  // STREV_PARTITION_HPP
