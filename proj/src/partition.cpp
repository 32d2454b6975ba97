#include "strev/partition.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace strev {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int v : parts_)
        if (v <= 0) throw std::invalid_argument("partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    rebuild_view();
}

Partition Partition::from_multiplicities(std::vector<PartMultiplicity> view) {
    std::vector<int> parts;
    for (const auto& [size, mult] : view) {
        if (size <= 0 || mult <= 0) throw std::invalid_argument("multiplicity view needs positive entries");
        parts.insert(parts.end(), static_cast<std::size_t>(mult), size);
    }
    Partition p(std::move(parts));
    // Both views must describe the same multiset.
    std::sort(view.begin(), view.end(), [](const auto& a, const auto& b) { return a.size > b.size; });
    for (std::size_t i = 1; i < view.size(); ++i)
        if (view[i].size == view[i - 1].size) throw std::invalid_argument("repeated part size in multiplicity view");
    return p;
}

void Partition::rebuild_view() {
    view_.clear();
    total_ = 0;
    for (int v : parts_) {
        total_ += v;
        if (!view_.empty() && view_.back().size == v) {
            ++view_.back().multiplicity;
        } else {
            view_.push_back({v, 1});
        }
    }
}

Partition conjugate(const Partition& p) {
    const auto& view = p.multiplicities();
    std::vector<PartMultiplicity> dual;
    // Walk from the smallest size upward; the running multiplicity sum
    // counts how many rows reach each column band.
    int running = 0;
    for (std::size_t k = 0; k < view.size(); ++k) running += view[k].multiplicity;
    for (std::size_t idx = view.size(); idx-- > 0;) {
        int next_size = idx + 1 < view.size() ? view[idx + 1].size : 0;
        int band = view[idx].size - next_size;
        if (band > 0) dual.push_back({running, band});
        running -= view[idx].multiplicity;
    }
    return Partition::from_multiplicities(std::move(dual));
}

Partition conjugate_by_transpose(const Partition& p) {
    const int rows = static_cast<int>(p.length());
    const int cols = p.largest();
    std::vector<std::vector<bool>> grid(rows, std::vector<bool>(cols, false));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < p.parts()[i]; ++j) grid[i][j] = true;

    std::vector<int> dual;
    for (int j = 0; j < cols; ++j) {
        int len = 0;
        for (int i = 0; i < rows; ++i) len += grid[i][j] ? 1 : 0;
        dual.push_back(len);
    }
    return Partition(std::move(dual));
}

PartitionSets derive_sets(const Partition& p) {
    PartitionSets s;
    for (const auto& [size, mult] : p.multiplicities()) {
        s.n_set.insert(size);
        if (size % 2 == 0) {
            s.e_set.insert(size);
            if (size % 4 == 2) {
                s.e2_set.insert(size);
                s.e2_weight += mult;
            }
        } else {
            s.o_set.insert(size);
        }
    }
    return s;
}

BigInteger binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    BigInteger out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

std::string young_ascii(const Partition& p) {
    std::string out;
    for (int part : p.parts()) {
        for (int j = 0; j < part; ++j) out += "[]";
        out += '\n';
    }
    return out;
}

std::string format_partition(const Partition& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i) out += ",";
        out += std::to_string(p.parts()[i]);
    }
    return out + ")";
}

}  // namespace strev
