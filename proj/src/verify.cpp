#include "strev/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace strev {

namespace {

GaussianRational signed_one(long e) { return GaussianRational(e % 2 == 0 ? 1L : -1L); }

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 step
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

GaussianRational small_gaussian_integer(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> dist(-3, 3);
    const long re = dist(rng);
    const long im = dist(rng);
    return {BigRational(re), BigRational(im)};
}

/// Q D Q^{-1} with D a random +-1 diagonal and Q a random invertible
/// Gaussian-integer matrix.
ExactMatrix random_involution(std::size_t t, std::mt19937_64& rng) {
    std::vector<GaussianRational> d(t);
    std::bernoulli_distribution coin(0.5);
    for (auto& v : d) v = GaussianRational(coin(rng) ? 1L : -1L);
    for (;;) {
        ExactMatrix q(t, t);
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t j = 0; j < t; ++j) q(i, j) = small_gaussian_integer(rng);
        if (mat_det(q).is_zero()) continue;
        return q * ExactMatrix::diagonal(std::span<const GaussianRational>(d)) * mat_inverse(q);
    }
}

ExactMatrix random_invertible(std::size_t t, std::mt19937_64& rng) {
    for (;;) {
        ExactMatrix q(t, t);
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t j = 0; j < t; ++j) q(i, j) = small_gaussian_integer(rng);
        if (!mat_det(q).is_zero()) return q;
    }
}

bool pool_closed_under_inversion(const std::vector<GaussianRational>& pool) {
    for (const auto& z : pool)
        if (std::find(pool.begin(), pool.end(), z.inverse()) == pool.end()) return false;
    return true;
}

}  // namespace

VerificationReport check_witness(const ExactMatrix& a, const ExactMatrix& g) {
    if (!a.is_square()) throw DimensionError("A must be square, got " + ExactMatrix::shape(a));
    if (g.rows() != a.rows() || g.cols() != a.cols())
        throw DimensionError("g is " + ExactMatrix::shape(g) + " but A is " + ExactMatrix::shape(a));
    const ExactMatrix a_inv = mat_inverse(a);

    VerificationReport rep;
    rep.determinant = mat_det(g);
    rep.in_special = rep.determinant.is_one();
    if (rep.determinant.is_zero()) {
        rep.residuals.push_back({"reverses", 0, 0});
    } else {
        // For invertible g, g A g^{-1} = A^{-1} is the same as g A = A^{-1} g.
        const auto diff = first_difference(g * a, a_inv * g);
        rep.reverses = !diff;
        if (diff) rep.residuals.push_back({"reverses", diff->first, diff->second});
    }
    const auto inv_diff = first_difference(g * g, ExactMatrix::identity(g.rows()));
    rep.involution = !inv_diff;
    if (inv_diff) rep.residuals.push_back({"involution", inv_diff->first, inv_diff->second});
    return rep;
}

// ---------------------------------------------------------------------------
// Spec generation
// ---------------------------------------------------------------------------

SpecGenerator SpecGenerator::exhaustive(int max_n, std::vector<GaussianRational> pool, int max_block_size) {
    SpecGenerator g;
    g.max_n = max_n;
    g.pool = std::move(pool);
    g.mode = Mode::Exhaustive;
    g.max_block_size = max_block_size;
    return g;
}

SpecGenerator SpecGenerator::random(int max_n, std::vector<GaussianRational> pool, std::uint64_t seed, int count,
                                    int max_block_size) {
    SpecGenerator g;
    g.max_n = max_n;
    g.pool = std::move(pool);
    g.mode = Mode::Random;
    g.seed = seed;
    g.count = count;
    g.max_block_size = max_block_size;
    return g;
}

std::vector<JordanSpec> SpecGenerator::generate() const {
    std::vector<JordanSpec> out;
    for_each([&](const JordanSpec& s) { out.push_back(s); });
    return out;
}

void SpecGenerator::for_each(const std::function<void(const JordanSpec&)>& f) const {
    if (max_n < 1) throw std::invalid_argument("max_n must be positive");
    if (pool.empty()) throw std::invalid_argument("eigenvalue pool is empty");
    for (std::size_t i = 0; i < pool.size(); ++i) {
        if (pool[i].is_zero()) throw std::invalid_argument("eigenvalue pool contains 0");
        for (std::size_t j = 0; j < i; ++j)
            if (pool[i] == pool[j]) throw std::invalid_argument("eigenvalue pool contains duplicates");
    }
    const int cap = max_block_size > 0 ? std::min(max_block_size, max_n) : max_n;

    if (mode == Mode::Random) {
        if (count < 0) throw std::invalid_argument("random generator count must be non-negative");
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        for (int c = 0; c < count; ++c) {
            int remaining = std::uniform_int_distribution<int>(1, max_n)(rng);
            std::vector<JordanBlock> blocks;
            while (remaining > 0) {
                const int size = std::uniform_int_distribution<int>(1, std::min(remaining, cap))(rng);
                blocks.push_back({pool[pick(rng)], size});
                remaining -= size;
            }
            f(JordanSpec(std::move(blocks)));
        }
        return;
    }

    struct Item {
        GaussianRational eigenvalue;
        int size;
    };
    std::vector<Item> items;
    for (const auto& z : pool)
        for (int s = 1; s <= cap; ++s) items.push_back({z, s});

    std::vector<JordanBlock> current;
    std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int budget) {
        if (idx == items.size()) {
            if (!current.empty()) f(JordanSpec(current));
            return;
        }
        rec(idx + 1, budget);
        const Item& it = items[idx];
        int used = 0;
        while (used + it.size <= budget) {
            current.push_back({it.eigenvalue, it.size});
            used += it.size;
            rec(idx + 1, budget - used);
        }
        current.resize(current.size() - static_cast<std::size_t>(used / it.size));
    };
    rec(0, max_n);
}

JordanSpec random_reversible_spec(std::mt19937_64& rng, int max_n, const std::vector<GaussianRational>& pool) {
    if (max_n < 1 || pool.empty()) throw PreconditionError("random reversible spec needs max_n >= 1 and a pool");
    int remaining = std::uniform_int_distribution<int>(1, max_n)(rng);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::vector<JordanBlock> blocks;
    for (int attempt = 0; remaining > 0 && attempt < 64; ++attempt) {
        const GaussianRational& z = pool[pick(rng)];
        if (is_plus_minus_one(z)) {
            const int size = std::uniform_int_distribution<int>(1, remaining)(rng);
            blocks.push_back({z, size});
            remaining -= size;
        } else if (remaining >= 2 && std::find(pool.begin(), pool.end(), z.inverse()) != pool.end()) {
            const int size = std::uniform_int_distribution<int>(1, remaining / 2)(rng);
            blocks.push_back({z, size});
            blocks.push_back({z.inverse(), size});
            remaining -= 2 * size;
        }
    }
    if (blocks.empty()) throw PreconditionError("pool admits no reversible spec of the requested size");
    return JordanSpec(std::move(blocks));
}

GaussianRational random_nonzero_scalar(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<long> den(1, 4);
    for (;;) {
        GaussianRational z(BigRational(num(rng), den(rng)), BigRational(num(rng), den(rng)));
        if (!z.is_zero()) return z;
    }
}

// ---------------------------------------------------------------------------
// Summaries
// ---------------------------------------------------------------------------

void CheckSummary::fail(std::string check, std::optional<JordanSpec> spec, std::string detail) {
    failures.push_back({std::move(check), std::move(spec), std::move(detail)});
}

void CheckSummary::merge(const CheckSummary& other) {
    cases += other.cases;
    strongly_reversible += other.strongly_reversible;
    reversible_only += other.reversible_only;
    not_reversible += other.not_reversible;
    matrices_checked += other.matrices_checked;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

// ---------------------------------------------------------------------------
// Harness reversers
// ---------------------------------------------------------------------------

bool reversible_by_counts(const JordanSpec& spec) {
    std::map<std::pair<GaussianRational, int>, int> count;
    for (const auto& b : spec.blocks()) ++count[{b.eigenvalue, b.size}];
    for (const auto& [key, c] : count) {
        const auto& [z, size] = key;
        if (z == GaussianRational(1L) || z == GaussianRational(-1L)) continue;
        auto it = count.find({z.inverse(), size});
        if (it == count.end() || it->second != c) return false;
    }
    return true;
}

namespace {

struct HarnessLayout {
    // Groups of +-1 blocks sharing (mu, d), and groups of pairs sharing (lambda, r).
    struct Group {
        GaussianRational eigenvalue;
        int size = 0;
        std::vector<std::size_t> first;   // offsets of the blocks (lambda side for pairs)
        std::vector<std::size_t> second;  // offsets of the lambda^{-1} blocks, pairs only
    };
    std::vector<Group> singles;
    std::vector<Group> pairs;
};

HarnessLayout layout_of(const JordanSpec& spec, const ReversibilityReport& rep) {
    HarnessLayout out;
    auto find_group = [](std::vector<HarnessLayout::Group>& gs, const GaussianRational& z, int size) {
        for (auto& g : gs)
            if (g.eigenvalue == z && g.size == size) return &g;
        gs.push_back({z, size, {}, {}});
        return &gs.back();
    };
    for (std::size_t k : rep.singletons) {
        const auto& b = spec.blocks()[k];
        find_group(out.singles, b.eigenvalue, b.size)->first.push_back(spec.offset_of(k));
    }
    for (const auto& bp : rep.pairs) {
        const auto& b = spec.blocks()[bp.first];
        auto* g = find_group(out.pairs, b.eigenvalue, b.size);
        g->first.push_back(spec.offset_of(bp.first));
        g->second.push_back(spec.offset_of(bp.second));
    }
    return out;
}

}  // namespace

std::vector<ExactMatrix> harness_involutive_reversers(const JordanSpec& spec, std::uint64_t seed, int mixes) {
    const ReversibilityReport rep = pair_blocks(spec);
    if (!rep.reversible) return {};
    const HarnessLayout lay = layout_of(spec, rep);
    const std::size_t n = static_cast<std::size_t>(spec.dimension());

    struct Slot {
        GaussianRational eigenvalue;
        int size;
        std::size_t o1, o2;
        bool pair;
    };
    std::vector<Slot> slots;
    for (const auto& g : lay.singles)
        for (std::size_t o : g.first) slots.push_back({g.eigenvalue, g.size, o, o, false});
    for (const auto& g : lay.pairs)
        for (std::size_t t = 0; t < g.first.size(); ++t)
            slots.push_back({g.eigenvalue, g.size, g.first[t], g.second[t], true});

    const std::vector<GaussianRational> units = {GaussianRational(1L), GaussianRational(-1L),
                                                 GaussianRational::imag_unit(), -GaussianRational::imag_unit()};

    std::vector<ExactMatrix> out;
    std::size_t combos = 1;
    for (const auto& s : slots) combos *= s.pair ? 4 : 2;
    for (std::size_t code = 0; code < combos; ++code) {
        ExactMatrix g(n, n);
        std::size_t rest = code;
        for (const auto& s : slots) {
            const std::size_t base = s.pair ? 4 : 2;
            const GaussianRational& x1 = units[rest % base];
            rest /= base;
            if (!s.pair) {
                g.set_block(s.o1, s.o1, x1 * omega_closed(s.eigenvalue, s.size));
            } else {
                g.set_block(s.o1, s.o2, x1 * omega_closed(s.eigenvalue, s.size));
                g.set_block(s.o2, s.o1, x1.inverse() * omega_closed(s.eigenvalue.inverse(), s.size));
            }
        }
        out.push_back(std::move(g));
    }

    std::mt19937_64 rng(seed);
    for (int m = 0; m < mixes; ++m) {
        ExactMatrix g(n, n);
        for (const auto& grp : lay.singles) {
            const std::size_t t = grp.first.size();
            const ExactMatrix s = random_involution(t, rng);
            const ExactMatrix om = omega_closed(grp.eigenvalue, grp.size);
            for (std::size_t a = 0; a < t; ++a)
                for (std::size_t b = 0; b < t; ++b)
                    if (!s(a, b).is_zero()) g.set_block(grp.first[a], grp.first[b], s(a, b) * om);
        }
        for (const auto& grp : lay.pairs) {
            const std::size_t t = grp.first.size();
            const ExactMatrix x = random_invertible(t, rng);
            const ExactMatrix x_inv = mat_inverse(x);
            const ExactMatrix om1 = omega_closed(grp.eigenvalue, grp.size);
            const ExactMatrix om2 = omega_closed(grp.eigenvalue.inverse(), grp.size);
            for (std::size_t a = 0; a < t; ++a) {
                for (std::size_t b = 0; b < t; ++b) {
                    if (!x(a, b).is_zero()) g.set_block(grp.first[a], grp.second[b], x(a, b) * om1);
                    if (!x_inv(a, b).is_zero()) g.set_block(grp.second[a], grp.first[b], x_inv(a, b) * om2);
                }
            }
        }
        out.push_back(std::move(g));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Theorem sweeps
// ---------------------------------------------------------------------------

CheckSummary exhaustive_theorem_check(const SpecGenerator& gen, const Classifier& classifier) {
    if (!pool_closed_under_inversion(gen.pool))
        throw PreconditionError("eigenvalue pool must be closed under inversion");
    CheckSummary sum;
    sum.name = "exhaustive_theorem_check";
    std::uint64_t index = 0;
    gen.for_each([&](const JordanSpec& spec) {
        ++sum.cases;
        const std::uint64_t spec_seed = mix_seed(gen.seed, index++);
        StrongReversibilityReport rep;
        try {
            rep = classifier(spec);
        } catch (const std::exception& e) {
            sum.fail("classifier", spec, e.what());
            return;
        }
        if (rep.reversibility.reversible != reversible_by_counts(spec)) {
            sum.fail("reversibility", spec, "pairing disagrees with the block counts");
            return;
        }
        if (!rep.reversibility.reversible) {
            ++sum.not_reversible;
            return;
        }
        const ExactMatrix a = jordan_matrix(spec);
        const DetSignPrediction pred = det_sign_of_involutive_reverser(spec);

        if (rep.strongly_reversible) {
            ++sum.strongly_reversible;
            if (pred.is_forced(-1)) sum.fail("det_sign", spec, "strongly reversible but predicted Forced(-1)");
            try {
                const WitnessBundle w = involutive_witness(spec);
                const VerificationReport vr = check_witness(a, w.g);
                ++sum.matrices_checked;
                if (!vr.all()) sum.fail("witness", spec, "involutive witness does not verify");
                if (w.a != a || w.reverses != vr.reverses || w.is_involution != vr.involution ||
                    w.determinant != vr.determinant)
                    sum.fail("witness", spec, "bundle flags disagree with re-verification");
            } catch (const std::exception& e) {
                sum.fail("witness", spec, e.what());
            }
            return;
        }

        ++sum.reversible_only;
        if (!pred.is_forced(-1)) sum.fail("det_sign", spec, "reversible only but predicted " + describe(pred));
        std::size_t idx = 0;
        for (const auto& h : harness_involutive_reversers(spec, spec_seed)) {
            const VerificationReport vr = check_witness(a, h);
            ++sum.matrices_checked;
            if (!vr.reverses || !vr.involution) {
                sum.fail("harness", spec, "harness matrix #" + std::to_string(idx) + " is not an involutive reverser");
            } else if (!(vr.determinant == GaussianRational(-1L))) {
                sum.fail("obstruction", spec,
                         "involutive reverser #" + std::to_string(idx) + " has det " + format_scalar(vr.determinant));
            }
            ++idx;
        }
    });
    return sum;
}

CheckSummary weyr_det_argument_check(int k, int m, int trials, std::uint64_t seed) {
    if (k <= 0 || m <= 0) throw PreconditionError("k and m must be positive");
    CheckSummary sum;
    sum.name = "weyr_det_argument_check(k=" + std::to_string(k) + ",m=" + std::to_string(m) + ")";
    const JordanSpec spec(std::vector<JordanBlock>(static_cast<std::size_t>(k), {GaussianRational(1L), 2 * m}));
    const ExactMatrix a = jordan_matrix(spec);
    const WeyrData weyr = weyr_of(spec);
    const PermutationMap back = weyr.perm.inverse();
    const ExactMatrix om = omega_closed(GaussianRational(1L), 2 * m);
    const GaussianRational expected = signed_one(static_cast<long>(m) * k);

    const DetSignPrediction pred = det_sign_of_involutive_reverser(spec);
    if (!pred.is_forced(expected.is_one() ? 1 : -1))
        sum.fail("det_sign", spec, "predictor says " + describe(pred));

    const std::size_t kk = static_cast<std::size_t>(k);
    const std::size_t r = static_cast<std::size_t>(2 * m);
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        ++sum.cases;
        // In the Weyr basis A is J(1, 2m) (x) I_k blockwise, so Omega (x) S reverses it.
        const ExactMatrix s = random_involution(kk, rng);
        ExactMatrix h0(r * kk, r * kk);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = i; j < r; ++j)
                if (!om(i, j).is_zero()) h0.set_block(i * kk, j * kk, om(i, j) * s);
        const ExactMatrix c = sample_weyr_centralizer(weyr.structures, rng());
        const ExactMatrix h = permute_similarity(back, c * h0 * mat_inverse(c));

        const VerificationReport vr = check_witness(a, h);
        ++sum.matrices_checked;
        if (!vr.reverses || !vr.involution) {
            sum.fail("weyr_sample", spec, "trial " + std::to_string(t) + " is not an involutive reverser");
        } else if (vr.determinant != expected) {
            sum.fail("weyr_det", spec,
                     "trial " + std::to_string(t) + " has det " + format_scalar(vr.determinant) + ", expected " +
                         format_scalar(expected));
        }
    }
    return sum;
}

// ---------------------------------------------------------------------------
// Per-case verdicts
// ---------------------------------------------------------------------------

std::optional<bool> semisimple_verdict(const JordanSpec& spec) {
    bool has_unit = false;
    for (const auto& b : spec.blocks()) {
        if (b.size != 1) return std::nullopt;
        if (b.eigenvalue == GaussianRational(1L) || b.eigenvalue == GaussianRational(-1L)) has_unit = true;
    }
    return reversible_by_counts(spec) && (has_unit || spec.dimension() % 4 != 2);
}

namespace {

std::optional<bool> single_eigenvalue_verdict(const JordanSpec& spec, const GaussianRational& mu) {
    bool odd = false;
    long two_mod_four = 0;
    for (const auto& b : spec.blocks()) {
        if (b.eigenvalue != mu) return std::nullopt;
        if (b.size % 2 == 1) odd = true;
        if (b.size % 4 == 2) ++two_mod_four;
    }
    return odd || two_mod_four % 2 == 0;
}

}  // namespace

std::optional<bool> unipotent_verdict(const JordanSpec& spec) {
    return single_eigenvalue_verdict(spec, GaussianRational(1L));
}

std::optional<bool> minus_one_verdict(const JordanSpec& spec) {
    return single_eigenvalue_verdict(spec, GaussianRational(-1L));
}

std::optional<bool> single_pair_verdict(const JordanSpec& spec) {
    const GaussianRational lambda = spec.blocks().front().eigenvalue;
    if (lambda == GaussianRational(1L) || lambda == GaussianRational(-1L)) return std::nullopt;
    const GaussianRational inv = lambda.inverse();
    long mult = 0;
    for (const auto& b : spec.blocks()) {
        if (b.eigenvalue == lambda) {
            mult += b.size;
        } else if (b.eigenvalue != inv) {
            return std::nullopt;
        }
    }
    return reversible_by_counts(spec) && mult % 2 == 0;
}

CheckSummary semisimple_cross_check(const SpecGenerator& gen, const Classifier& classifier) {
    if (gen.max_block_size != 1 && gen.max_n > 1)
        throw PreconditionError("semisimple cross-check needs a generator restricted to size-1 blocks");
    CheckSummary sum;
    sum.name = "semisimple_cross_check";
    gen.for_each([&](const JordanSpec& spec) {
        ++sum.cases;
        const auto lemma = semisimple_verdict(spec);
        const bool theorem = classifier(spec).strongly_reversible;
        if (!lemma || *lemma != theorem)
            sum.fail("semisimple", spec, std::string("classifier says ") + (theorem ? "true" : "false"));
    });
    return sum;
}

CheckSummary cross_path_check(const SpecGenerator& gen, const Classifier& classifier) {
    CheckSummary sum;
    sum.name = "cross_path_check";
    using Verdict = std::optional<bool> (*)(const JordanSpec&);
    const std::vector<std::pair<const char*, Verdict>> lemmas = {{"semisimple", semisimple_verdict},
                                                                  {"unipotent", unipotent_verdict},
                                                                  {"minus_one", minus_one_verdict},
                                                                  {"single_pair", single_pair_verdict}};
    gen.for_each([&](const JordanSpec& spec) {
        const bool theorem = classifier(spec).strongly_reversible;
        for (const auto& [name, verdict] : lemmas) {
            const auto v = verdict(spec);
            if (!v) continue;
            ++sum.cases;
            if (*v != theorem)
                sum.fail(name, spec,
                         std::string("lemma says ") + (*v ? "true" : "false") + ", classifier says " +
                             (theorem ? "true" : "false"));
        }
    });
    return sum;
}

// ---------------------------------------------------------------------------
// Module invariant suites
// ---------------------------------------------------------------------------

CheckSummary omega_law_check(int max_n, int lambdas_per_n, std::uint64_t seed) {
    CheckSummary sum;
    sum.name = "omega_law_check";
    std::mt19937_64 rng(seed);
    for (int n = 1; n <= max_n; ++n) {
        const std::string tag = "n=" + std::to_string(n);
        for (long mu : {1L, -1L}) {
            ++sum.cases;
            if (!(omega_closed(GaussianRational(mu), n) * omega_closed(GaussianRational(mu), n)).is_identity())
                sum.fail("involution", std::nullopt, tag + " mu=" + std::to_string(mu));
        }
        for (int t = 0; t < lambdas_per_n; ++t) {
            ++sum.cases;
            const GaussianRational lambda = random_nonzero_scalar(rng);
            const std::string where = tag + " lambda=" + format_scalar(lambda);
            const ExactMatrix om = omega_closed(lambda, n);
            if (om != omega_recurrence(lambda, n)) sum.fail("recurrence", std::nullopt, where);
            if (!omega_inverse_law_check(lambda, n)) sum.fail("inverse_law", std::nullopt, where);

            std::vector<GaussianRational> x(static_cast<std::size_t>(n));
            x[0] = random_nonzero_scalar(rng);
            for (std::size_t i = 1; i < x.size(); ++i) x[i] = small_gaussian_integer(rng);
            const ExactMatrix g = omega_general(lambda, x);
            const ExactMatrix j_inv_arg = jordan_block(lambda.inverse(), static_cast<std::size_t>(n));
            const ExactMatrix j = jordan_block(lambda, static_cast<std::size_t>(n));
            if (g * j_inv_arg != mat_inverse(j) * g) sum.fail("reversal_identity", std::nullopt, where);
            sum.matrices_checked += 1;
        }
    }
    return sum;
}

CheckSummary single_block_det_check(int max_n) {
    CheckSummary sum;
    sum.name = "single_block_det_check";
    for (int n = 1; n <= max_n; ++n) {
        for (long mu : {1L, -1L}) {
            ++sum.cases;
            std::set<long> signs;
            for (long x1 : {1L, -1L}) {
                std::vector<GaussianRational> x(static_cast<std::size_t>(n));
                x[0] = GaussianRational(x1);
                const ExactMatrix g = omega_general(GaussianRational(mu), x);
                const GaussianRational d = mat_det(g);
                ++sum.matrices_checked;
                if (!(g * g).is_identity()) sum.fail("involution", std::nullopt, "n=" + std::to_string(n));
                if (d == GaussianRational(1L)) {
                    signs.insert(1);
                } else if (d == GaussianRational(-1L)) {
                    signs.insert(-1);
                } else {
                    sum.fail("det_value", std::nullopt, "n=" + std::to_string(n) + " det " + format_scalar(d));
                }
            }
            std::set<long> expected;
            if (n % 4 == 0) expected = {1};
            if (n % 4 == 2) expected = {-1};
            if (n % 2 == 1) expected = {1, -1};
            if (signs != expected)
                sum.fail("det_table", std::nullopt, "n=" + std::to_string(n) + " mu=" + std::to_string(mu));
        }
    }
    return sum;
}

CheckSummary pair_det_check(int max_n, int lambdas_per_n, std::uint64_t seed) {
    CheckSummary sum;
    sum.name = "pair_det_check";
    std::mt19937_64 rng(seed);
    for (int n = 1; n <= max_n; ++n) {
        for (int t = 0; t < lambdas_per_n; ++t) {
            GaussianRational lambda = random_nonzero_scalar(rng);
            if (is_plus_minus_one(lambda)) lambda = GaussianRational(2L);
            ++sum.cases;
            const JordanSpec spec({{lambda, n}, {lambda.inverse(), n}});
            const ExactMatrix g = base_reverser_pair(lambda, n);
            const ExactMatrix a = direct_sum({jordan_block(lambda, static_cast<std::size_t>(n)),
                                              jordan_block(lambda.inverse(), static_cast<std::size_t>(n))});
            const VerificationReport vr = check_witness(a, g);
            ++sum.matrices_checked;
            if (!vr.reverses || !vr.involution) sum.fail("pair_reverser", spec, "not an involutive reverser");
            if (vr.determinant != signed_one(n))
                sum.fail("pair_det", spec, "det " + format_scalar(vr.determinant));
        }
    }
    return sum;
}

CheckSummary partition_duality_check(int count, int max_total, std::uint64_t seed) {
    CheckSummary sum;
    sum.name = "partition_duality_check";
    std::mt19937_64 rng(seed);
    for (int c = 0; c < count; ++c) {
        ++sum.cases;
        int remaining = std::uniform_int_distribution<int>(1, std::max(1, max_total))(rng);
        std::vector<int> parts;
        while (remaining > 0) {
            const int p = std::uniform_int_distribution<int>(1, remaining)(rng);
            parts.push_back(p);
            remaining -= p;
        }
        const Partition p(parts);
        const Partition d = conjugate(p);
        if (!(conjugate(d) == p)) sum.fail("involution", std::nullopt, format_partition(p));
        if (!(d == conjugate_by_transpose(p))) sum.fail("transpose", std::nullopt, format_partition(p));
        if (d.total() != p.total() || d.length() != static_cast<std::size_t>(p.largest()))
            sum.fail("shape", std::nullopt, format_partition(p));
    }
    return sum;
}

CheckSummary weyr_centralizer_check(int specs, int max_n, std::uint64_t seed) {
    CheckSummary sum;
    sum.name = "weyr_centralizer_check";
    std::mt19937_64 rng(seed);
    const auto gen = SpecGenerator::random(max_n, default_pool(), rng(), specs);
    gen.for_each([&](const JordanSpec& spec) {
        ++sum.cases;
        try {
            const WeyrData w = weyr_of(spec);
            if (permute_similarity(w.perm, jordan_matrix(spec)) != w.weyr)
                sum.fail("duality", spec, "permutation does not conjugate Jordan to Weyr");
            for (const auto& ws : w.structures) {
                const ExactMatrix bw = basic_weyr_matrix(ws);
                const ExactMatrix k = sample_centralizer(ws, rng());
                ++sum.matrices_checked;
                if (k * bw != bw * k) sum.fail("commute", spec, "sample does not commute");
                if (!centralizer_pattern_check(ws, k)) sum.fail("pattern", spec, "sample fails the block pattern");
                if (mat_det(k).is_zero()) sum.fail("invertible", spec, "sample is singular");
            }
        } catch (const std::exception& e) {
            sum.fail("weyr_of", spec, e.what());
        }
    });
    return sum;
}

CheckSummary coset_check(int specs, int max_n, std::uint64_t seed) {
    CheckSummary sum;
    sum.name = "coset_check";
    std::mt19937_64 rng(seed);
    const auto pool = default_pool();
    for (int c = 0; c < specs; ++c) {
        ++sum.cases;
        const JordanSpec spec = random_reversible_spec(rng, max_n, pool);
        try {
            const ExactMatrix a = jordan_matrix(spec);
            const ExactMatrix a_inv = mat_inverse(a);
            const ExactMatrix r1 = reverser_sample(spec, rng());
            const ExactMatrix r2 = reverser_sample(spec, rng());
            sum.matrices_checked += 2;
            if (r1 * a != a_inv * r1 || r2 * a != a_inv * r2) sum.fail("reverses", spec, "sample does not reverse A");
            const ExactMatrix prod = r1 * r2;
            if (prod * a != a * prod) sum.fail("coset", spec, "r1 r2 does not commute with A");
            const ExactMatrix scaled = random_nonzero_scalar(rng) * r1;
            if (scaled * a != a_inv * scaled) sum.fail("scaling", spec, "scalar multiple does not reverse A");
        } catch (const std::exception& e) {
            sum.fail("reverser_sample", spec, e.what());
        }
    }
    return sum;
}

std::vector<GaussianRational> default_pool() {
    return {GaussianRational(1L),  GaussianRational(-1L),         GaussianRational(2L),
            GaussianRational(1, 2), GaussianRational::imag_unit(), -GaussianRational::imag_unit()};
}

std::vector<CheckSummary> run_selftest(int max_n, std::uint64_t seed, const Classifier& classifier) {
    if (max_n < 1) throw PreconditionError("max_n must be positive");
    std::vector<CheckSummary> out;
    const auto pool = default_pool();

    auto theorem = SpecGenerator::exhaustive(max_n, pool);
    theorem.seed = seed;
    out.push_back(exhaustive_theorem_check(theorem, classifier));

    out.push_back(semisimple_cross_check(SpecGenerator::exhaustive(max_n, pool, 1), classifier));

    CheckSummary cross;
    cross.name = "cross_path_check";
    const std::vector<std::vector<GaussianRational>> domains = {
        {GaussianRational(1L)},
        {GaussianRational(-1L)},
        {GaussianRational(2L), GaussianRational(1, 2)},
        {GaussianRational::imag_unit(), -GaussianRational::imag_unit()}};
    for (const auto& d : domains) cross.merge(cross_path_check(SpecGenerator::exhaustive(max_n, d), classifier));
    out.push_back(cross);

    CheckSummary weyr_det;
    weyr_det.name = "weyr_det_argument_check";
    for (int k = 1; 2 * k <= max_n; ++k)
        for (int m = 1; 2 * k * m <= max_n; ++m)
            weyr_det.merge(weyr_det_argument_check(k, m, 5, mix_seed(seed, static_cast<std::uint64_t>(k * 64 + m))));
    out.push_back(weyr_det);

    out.push_back(omega_law_check(max_n, 3, mix_seed(seed, 1)));
    out.push_back(single_block_det_check(max_n));
    out.push_back(pair_det_check(max_n, 2, mix_seed(seed, 2)));
    out.push_back(partition_duality_check(100, std::max(max_n, 1), mix_seed(seed, 3)));
    out.push_back(weyr_centralizer_check(20, max_n, mix_seed(seed, 4)));
    out.push_back(coset_check(20, max_n, mix_seed(seed, 5)));
    return out;
}

}  // namespace strev
