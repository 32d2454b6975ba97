#include "strev/matrix.hpp"

#include <sstream>

namespace strev {

PermutationMap::PermutationMap(std::vector<std::size_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t v : images_) {
        if (v >= images_.size() || seen[v]) throw std::invalid_argument("not a permutation");
        seen[v] = true;
    }
}

PermutationMap PermutationMap::identity(std::size_t n) {
    std::vector<std::size_t> images(n);
    for (std::size_t i = 0; i < n; ++i) images[i] = i;
    return PermutationMap(std::move(images));
}

PermutationMap PermutationMap::from_one_based(std::span<const std::size_t> images) {
    std::vector<std::size_t> zero_based;
    zero_based.reserve(images.size());
    for (std::size_t v : images) {
        if (v == 0) throw std::invalid_argument("permutation images are 1-based");
        zero_based.push_back(v - 1);
    }
    return PermutationMap(std::move(zero_based));
}

std::vector<std::size_t> PermutationMap::one_based() const {
    std::vector<std::size_t> out = images_;
    for (auto& v : out) ++v;
    return out;
}

PermutationMap PermutationMap::inverse() const {
    std::vector<std::size_t> inv(images_.size());
    for (std::size_t j = 0; j < images_.size(); ++j) inv[images_[j]] = j;
    return PermutationMap(std::move(inv));
}

PermutationMap operator*(const PermutationMap& a, const PermutationMap& b) {
    if (a.size() != b.size()) throw DimensionError("composing permutations of different sizes");
    std::vector<std::size_t> out(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) out[j] = a(b(j));
    return PermutationMap(std::move(out));
}

int PermutationMap::sign() const {
    std::vector<bool> visited(images_.size(), false);
    int sign = 1;
    for (std::size_t start = 0; start < images_.size(); ++start) {
        if (visited[start]) continue;
        std::size_t len = 0;
        for (std::size_t j = start; !visited[j]; j = images_[j]) {
            visited[j] = true;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

ExactMatrix jordan_block(const GaussianRational& lambda, std::size_t m) {
    ExactMatrix out = ExactMatrix::scalar(m, lambda);
    for (std::size_t i = 0; i + 1 < m; ++i) out(i, i + 1) = GaussianRational::one();
    return out;
}

std::string format_matrix(const ExactMatrix& m, const std::string& indent) {
    std::vector<std::string> cells(m.rows() * m.cols());
    std::vector<std::size_t> width(m.cols(), 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            cells[i * m.cols() + j] = format_scalar(m(i, j));
            width[j] = std::max(width[j], cells[i * m.cols() + j].size());
        }
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << indent << "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const std::string& c = cells[i * m.cols() + j];
            os << (j == 0 ? "" : " ") << std::string(width[j] - c.size(), ' ') << c;
        }
        os << "]\n";
    }
    return os.str();
}

}  // namespace strev
