#include "strev/reversal.hpp"

#include <algorithm>
#include <sstream>

namespace strev {

namespace {

/// inv^0, inv^1, ..., inv^max
std::vector<GaussianRational> inverse_powers(const GaussianRational& lambda, int max) {
    if (lambda.is_zero()) throw PreconditionError("Omega needs a nonzero eigenvalue");
    std::vector<GaussianRational> pw(static_cast<std::size_t>(max) + 1);
    const GaussianRational inv = lambda.inverse();
    pw[0] = GaussianRational::one();
    for (std::size_t k = 1; k < pw.size(); ++k) pw[k] = pw[k - 1] * inv;
    return pw;
}

void require_positive(int n) {
    if (n <= 0) throw PreconditionError("matrix size must be positive");
}

int sign_pow(long e) { return e % 2 == 0 ? 1 : -1; }

std::string block_label(const JordanBlock& b) {
    return "J(" + format_scalar(b.eigenvalue) + "," + std::to_string(b.size) + ")";
}

std::string rows_label(std::size_t offset, int size) {
    return "rows " + std::to_string(offset + 1) + "-" + std::to_string(offset + static_cast<std::size_t>(size));
}

}  // namespace

ExactMatrix omega_closed(const GaussianRational& lambda, int n) {
    require_positive(n);
    const auto pw = inverse_powers(lambda, 2 * n);
    ExactMatrix x(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const int sign = sign_pow(n - i);
        for (int j = i; j < n; ++j) {
            // j == i reduces to (-1)^{n-i} lambda^{-2(n-i)} since C(n-i-1, 0) = 1.
            GaussianRational c(BigRational(binomial(n - i - 1, j - i) * sign));
            x(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
                c * pw[static_cast<std::size_t>(2 * n - i - j)];
        }
    }
    x(static_cast<std::size_t>(n - 1), static_cast<std::size_t>(n - 1)) = GaussianRational::one();
    return x;
}

ExactMatrix omega_recurrence(const GaussianRational& lambda, int n) {
    require_positive(n);
    const auto pw = inverse_powers(lambda, 2);
    const std::size_t sz = static_cast<std::size_t>(n);
    ExactMatrix x(sz, sz);
    x(sz - 1, sz - 1) = GaussianRational::one();
    for (std::size_t i = sz - 1; i-- > 0;) {
        for (std::size_t j = i; j + 1 < sz; ++j) {
            // x(i+1, i) is below the diagonal and therefore zero.
            x(i, j) = -(pw[2] * x(i + 1, j + 1)) - pw[1] * x(i + 1, j);
        }
    }
    return x;
}

bool omega_inverse_law_check(const GaussianRational& lambda, int n) {
    return (omega_closed(lambda, n) * omega_closed(lambda.inverse(), n)).is_identity();
}

ExactMatrix toeplitz(std::span<const GaussianRational> x) {
    const std::size_t n = x.size();
    ExactMatrix t(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) t(i, j) = x[j - i];
    return t;
}

ExactMatrix omega_general(const GaussianRational& lambda, std::span<const GaussianRational> x) {
    if (x.empty() || x[0].is_zero()) throw PreconditionError("Omega(lambda, x, n) needs x_1 != 0");
    return toeplitz(x) * omega_closed(lambda, static_cast<int>(x.size()));
}

bool is_plus_minus_one(const GaussianRational& z) {
    return z.is_real() && (z.re() == 1 || z.re() == -1);
}

ExactMatrix base_reverser_single(const GaussianRational& mu, int n) {
    if (!is_plus_minus_one(mu)) throw PreconditionError("single-block base reverser needs eigenvalue +1 or -1");
    return omega_closed(mu, n);
}

ExactMatrix base_reverser_pair(const GaussianRational& lambda, int n) {
    if (lambda.is_zero() || is_plus_minus_one(lambda))
        throw PreconditionError("pair base reverser needs an eigenvalue outside {0, 1, -1}");
    const std::size_t sz = static_cast<std::size_t>(n);
    ExactMatrix g(2 * sz, 2 * sz);
    g.set_block(0, sz, omega_closed(lambda, n));
    // Omega(lambda, n)^{-1} = Omega(lambda^{-1}, n)
    g.set_block(sz, 0, omega_closed(lambda.inverse(), n));
    return g;
}

ReversibilityReport pair_blocks(const JordanSpec& spec) {
    const auto& blocks = spec.blocks();
    ReversibilityReport rep;
    std::vector<bool> matched(blocks.size(), false);
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        if (is_plus_minus_one(blocks[k].eigenvalue)) {
            rep.singletons.push_back(k);
            continue;
        }
        if (matched[k]) continue;
        const GaussianRational target = blocks[k].eigenvalue.inverse();
        for (std::size_t j = k + 1; j < blocks.size(); ++j) {
            if (!matched[j] && blocks[j].size == blocks[k].size && blocks[j].eigenvalue == target) {
                matched[k] = matched[j] = true;
                rep.pairs.push_back({k, j});
                break;
            }
        }
        if (!matched[k] && !rep.failure_witness) rep.failure_witness = k;
    }
    rep.reversible = !rep.failure_witness.has_value();
    return rep;
}

StrongReversibilityReport is_strongly_reversible(const JordanSpec& spec) {
    StrongReversibilityReport rep;
    rep.reversibility = pair_blocks(spec);
    rep.dp = spec.structure_of(GaussianRational(1L));
    rep.dq = spec.structure_of(GaussianRational(-1L));
    rep.p = rep.dp.total();
    rep.q = rep.dq.total();

    const PartitionSets sp = derive_sets(rep.dp);
    const PartitionSets sq = derive_sets(rep.dq);
    rep.condition1 = !sp.o_set.empty() || !sq.o_set.empty();
    if (rep.reversibility.reversible) {
        // Pairs contribute in twos, so n - p - q is even here.
        const long value = sp.e2_weight + sq.e2_weight + (spec.dimension() - rep.p - rep.q) / 2;
        rep.condition2_value = value;
        rep.condition2 = value % 2 == 0;
    }
    rep.strongly_reversible = rep.reversibility.reversible && (rep.condition1 || rep.condition2);
    return rep;
}

DetSignPrediction det_sign_of_involutive_reverser(const JordanSpec& spec) {
    const auto rep = is_strongly_reversible(spec);
    if (!rep.reversibility.reversible) throw PreconditionError("spec is not reversible; no reverser exists");
    if (rep.condition1) return DetSignPrediction::free();
    return DetSignPrediction::forced(sign_pow(*rep.condition2_value));
}

std::string describe(const DetSignPrediction& d) {
    if (d.kind == DetSignPrediction::Kind::Free) return "Free";
    return d.sign > 0 ? "Forced(+1)" : "Forced(-1)";
}

namespace {

/// One diagonal piece (a +-1 block) or antidiagonal piece (a pair) of a
/// block-structured reverser in the Jordan basis.
struct Piece {
    bool pair = false;
    std::size_t first = 0;
    std::size_t second = 0;
    GaussianRational x1 = GaussianRational::one();  // scales the (first, first) or (first, second) block
    GaussianRational y1 = GaussianRational::one();  // scales the (second, first) block of a pair
};

int forced_piece_sign(const JordanSpec& spec, const Piece& p) {
    const int d = spec.blocks()[p.first].size;
    if (p.pair) return sign_pow(d);
    return sign_pow(static_cast<long>(d) * (d - 1) / 2);
}

std::vector<Piece> default_pieces(const JordanSpec& spec, const ReversibilityReport& rep) {
    std::vector<Piece> pieces;
    for (std::size_t k : rep.singletons) {
        Piece p;
        p.first = k;
        const int d = spec.blocks()[k].size;
        // det(x1 Omega(mu, d)) = x1^d (-1)^{d(d-1)/2}; for odd d pick x1 to make it +1.
        if (d % 2 == 1) p.x1 = GaussianRational(static_cast<long>(forced_piece_sign(spec, p)));
        pieces.push_back(p);
    }
    for (const auto& bp : rep.pairs) {
        Piece p;
        p.pair = true;
        p.first = bp.first;
        p.second = bp.second;
        pieces.push_back(p);
    }
    return pieces;
}

ExactMatrix assemble(const JordanSpec& spec, const std::vector<Piece>& pieces) {
    const std::size_t n = static_cast<std::size_t>(spec.dimension());
    ExactMatrix g(n, n);
    for (const auto& p : pieces) {
        const JordanBlock& b = spec.blocks()[p.first];
        const std::size_t o1 = spec.offset_of(p.first);
        if (!p.pair) {
            g.set_block(o1, o1, p.x1 * omega_closed(b.eigenvalue, b.size));
            continue;
        }
        const std::size_t o2 = spec.offset_of(p.second);
        g.set_block(o1, o2, p.x1 * omega_closed(b.eigenvalue, b.size));
        g.set_block(o2, o1, p.y1 * omega_closed(b.eigenvalue.inverse(), b.size));
    }
    return g;
}

std::string piece_note(const JordanSpec& spec, const Piece& p) {
    const JordanBlock& b = spec.blocks()[p.first];
    std::ostringstream os;
    if (!p.pair) {
        os << block_label(b) << " at " << rows_label(spec.offset_of(p.first), b.size) << ": "
           << format_scalar(p.x1) << " * Omega(" << format_scalar(b.eigenvalue) << "," << b.size << ")";
    } else {
        const JordanBlock& c = spec.blocks()[p.second];
        os << block_label(b) << " + " << block_label(c) << " at " << rows_label(spec.offset_of(p.first), b.size)
           << " / " << rows_label(spec.offset_of(p.second), c.size) << ": antidiagonal ["
           << format_scalar(p.x1) << " * Omega(" << format_scalar(b.eigenvalue) << "," << b.size << "), "
           << format_scalar(p.y1) << " * Omega(" << format_scalar(c.eigenvalue) << "," << c.size << ")]";
    }
    return os.str();
}

GaussianRational piece_det(const JordanSpec& spec, const Piece& p) {
    const int d = spec.blocks()[p.first].size;
    GaussianRational scale = p.pair ? p.x1 * p.y1 : p.x1;
    return GaussianRational(static_cast<long>(forced_piece_sign(spec, p))) * pow(scale, d);
}

WitnessBundle finish_bundle(const JordanSpec& spec, const std::vector<Piece>& pieces,
                            std::vector<std::string> transcript) {
    WitnessBundle w;
    w.a = jordan_matrix(spec);
    w.g = assemble(spec, pieces);
    for (const auto& p : pieces) transcript.push_back(piece_note(spec, p));
    w.transcript = std::move(transcript);

    w.determinant = mat_det(w.g);
    w.is_involution = (w.g * w.g).is_identity();
    if (!w.determinant.is_zero()) w.reverses = w.g * w.a * mat_inverse(w.g) == mat_inverse(w.a);
    return w;
}

}  // namespace

WitnessBundle involutive_witness(const JordanSpec& spec) {
    const auto rep = is_strongly_reversible(spec);
    if (!rep.reversibility.reversible) throw PreconditionError("spec is not reversible");
    if (!rep.strongly_reversible)
        throw PreconditionError("spec is not strongly reversible: every involutive reverser has determinant -1");

    std::vector<Piece> pieces = default_pieces(spec, rep.reversibility);
    GaussianRational total = GaussianRational::one();
    for (const auto& p : pieces) total *= piece_det(spec, p);

    std::vector<std::string> transcript;
    if (!total.is_one()) {
        auto odd = std::find_if(pieces.begin(), pieces.end(),
                                [&](const Piece& p) { return !p.pair && spec.blocks()[p.first].size % 2 == 1; });
        if (odd == pieces.end()) throw ConstructionError("determinant -1 but no odd +-1 block to flip");
        odd->x1 = -odd->x1;
        transcript.push_back("flipped x1 on " + block_label(spec.blocks()[odd->first]) +
                             " to turn the determinant from -1 to +1");
    }

    WitnessBundle w = finish_bundle(spec, pieces, std::move(transcript));
    if (!(w.reverses && w.is_involution && w.determinant.is_one())) {
        std::string msg = "involutive witness failed verification:";
        for (const auto& line : w.transcript) msg += "\n  " + line;
        throw ConstructionError(msg);
    }
    return w;
}

WitnessBundle sl_reverser_witness(const JordanSpec& spec) {
    const auto rep = is_strongly_reversible(spec);
    if (!rep.reversibility.reversible) throw PreconditionError("spec is not reversible");
    if (rep.strongly_reversible) {
        WitnessBundle w = involutive_witness(spec);
        w.transcript.insert(w.transcript.begin(), "strongly reversible: using the involutive witness");
        return w;
    }

    std::vector<Piece> pieces = default_pieces(spec, rep.reversibility);
    GaussianRational total = GaussianRational::one();
    for (const auto& p : pieces) total *= piece_det(spec, p);

    std::vector<std::string> transcript;
    if (!total.is_one()) {
        // Scaling a size-d piece by c multiplies the determinant by c^d. Look
        // for a piece where c^d = -1 with c in Q(i).
        bool fixed = false;
        for (auto& p : pieces) {
            const int d = spec.blocks()[p.first].size;
            const std::string label = block_label(spec.blocks()[p.first]);
            if (!p.pair && d % 4 == 2) {
                p.x1 = -GaussianRational::imag_unit();
                transcript.push_back("scaled " + label + " by -i (size 2 mod 4)");
            } else if (p.pair && d % 2 == 1) {
                p.y1 = GaussianRational(-1L);
                transcript.push_back("scaled the lambda^{-1} half of the pair at " + label + " by -1 (odd size)");
            } else if (p.pair && d % 4 == 2) {
                p.y1 = GaussianRational::imag_unit();
                transcript.push_back("scaled the lambda^{-1} half of the pair at " + label + " by i (size 2 mod 4)");
            } else {
                continue;
            }
            fixed = true;
            break;
        }
        if (!fixed) throw ConstructionError("no block admits a determinant-fixing scalar in Q(i)");
    }

    WitnessBundle w = finish_bundle(spec, pieces, std::move(transcript));
    if (!(w.reverses && w.determinant.is_one())) {
        std::string msg = "SL reverser failed verification:";
        for (const auto& line : w.transcript) msg += "\n  " + line;
        throw ConstructionError(msg);
    }
    return w;
}

namespace {

/// Omega(lambda, r) spread over a Weyr block grid: block (i, j) is the
/// scalar Omega(lambda, r)_{i,j} times I_{n_i x n_j}.
ExactMatrix block_omega(const GaussianRational& lambda, const std::vector<int>& sizes) {
    const int r = static_cast<int>(sizes.size());
    const ExactMatrix om = omega_closed(lambda, r);
    std::vector<std::size_t> off(sizes.size() + 1, 0);
    for (std::size_t i = 0; i < sizes.size(); ++i) off[i + 1] = off[i] + static_cast<std::size_t>(sizes[i]);
    ExactMatrix out(off.back(), off.back());
    for (std::size_t bi = 0; bi < sizes.size(); ++bi) {
        for (std::size_t bj = bi; bj < sizes.size(); ++bj) {
            const GaussianRational& c = om(bi, bj);
            if (c.is_zero()) continue;
            const int diag = std::min(sizes[bi], sizes[bj]);
            for (int d = 0; d < diag; ++d) out(off[bi] + d, off[bj] + d) = c;
        }
    }
    return out;
}

}  // namespace

ExactMatrix weyr_base_reverser(const JordanSpec& spec, const WeyrData& weyr) {
    const std::size_t n = static_cast<std::size_t>(spec.dimension());
    const auto& ws = weyr.structures;
    std::vector<std::size_t> off(ws.size() + 1, 0);
    for (std::size_t i = 0; i < ws.size(); ++i) off[i + 1] = off[i] + static_cast<std::size_t>(ws[i].dimension());

    ExactMatrix out(n, n);
    std::vector<bool> done(ws.size(), false);
    for (std::size_t i = 0; i < ws.size(); ++i) {
        if (done[i]) continue;
        const GaussianRational& lambda = ws[i].eigenvalue;
        if (is_plus_minus_one(lambda)) {
            out.set_block(off[i], off[i], block_omega(lambda, ws[i].sizes));
            done[i] = true;
            continue;
        }
        const GaussianRational target = lambda.inverse();
        std::size_t j = i + 1;
        while (j < ws.size() && !(ws[j].eigenvalue == target)) ++j;
        if (j == ws.size() || ws[j].sizes != ws[i].sizes)
            throw PreconditionError("eigenvalue " + format_scalar(lambda) + " has no matching inverse; not reversible");
        out.set_block(off[i], off[j], block_omega(lambda, ws[i].sizes));
        out.set_block(off[j], off[i], block_omega(target, ws[j].sizes));
        done[i] = done[j] = true;
    }
    return out;
}

ExactMatrix reverser_sample(const JordanSpec& spec, std::uint64_t seed) {
    if (!pair_blocks(spec).reversible) throw PreconditionError("spec is not reversible");
    const WeyrData weyr = weyr_of(spec);
    const ExactMatrix k = sample_weyr_centralizer(weyr.structures, seed);
    const ExactMatrix r_weyr = k * weyr_base_reverser(spec, weyr);
    ExactMatrix r = permute_similarity(weyr.perm.inverse(), r_weyr);

    const ExactMatrix a = jordan_matrix(spec);
    if (r * a != mat_inverse(a) * r) throw ConstructionError("sampled matrix does not reverse the Jordan form");
    return r;
}

}  // namespace strev
