#include "strev/cli.hpp"

#include <CLI11.hpp>

#include "strev/io.hpp"

namespace strev {

namespace {

constexpr int kExitInternal = 4;

struct Options {
    std::string input;
    std::string matrix_a;
    std::string matrix_g;
    bool involutive = false;
    bool sl_only = false;
    std::string format = "text";
    int max_n = 6;
    std::uint64_t seed = 1;
};

OutputFormat parse_format(const std::string& s) { return s == "json" ? OutputFormat::Json : OutputFormat::Text; }

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string indent_lines(const std::string& text, const std::string& pad) {
    std::string out;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        out += pad + text.substr(start, end - start) + "\n";
        start = end + 1;
    }
    return out;
}

JordanSpec load_spec(const std::string& path) { return spec_from_json(load_json_file(path)); }

/// A matrix file, or the "a"/"g" member of a witness document.
ExactMatrix load_matrix(const std::string& path, const char* member) {
    const Json j = load_json_file(path);
    if (j.is_object() && !j.contains("entries") && j.contains(member)) return matrix_from_json(j.at(member));
    return matrix_from_json(j);
}

void print_diagram(std::ostream& out, const std::string& label, const Partition& p) {
    out << label << " = " << format_partition(p) << "\n";
    if (!p.empty()) out << indent_lines(young_ascii(p), "  ");
}

// ---------------------------------------------------------------------------

int cmd_classify(const Options& o, std::ostream& out) {
    const JordanSpec spec = load_spec(o.input);
    const StrongReversibilityReport rep = is_strongly_reversible(spec);
    const ReversibilityReport& rv = rep.reversibility;
    const int code = !rv.reversible ? 2 : rep.strongly_reversible ? 0 : 1;
    const char* verdict = code == 0 ? "strongly_reversible" : code == 1 ? "reversible" : "not_reversible";
    std::optional<DetSignPrediction> det;
    if (rv.reversible) det = det_sign_of_involutive_reverser(spec);

    if (parse_format(o.format) == OutputFormat::Json) {
        Json j = {{"spec", to_json(spec)},
                  {"verdict", verdict},
                  {"reversibility", to_json(spec, rv)},
                  {"strong", to_json(rep)}};
        j["det_sign"] = det ? Json(describe(*det)) : Json(nullptr);
        out << j.dump(2) << "\n";
        return code;
    }

    out << "spec: " << format_spec(spec) << "  (n = " << spec.dimension() << ")\n";
    out << "reversible: " << yes_no(rv.reversible) << "\n";
    if (rv.failure_witness) {
        const JordanBlock& b = spec.blocks()[*rv.failure_witness];
        out << "unmatched block: (" << format_scalar(b.eigenvalue) << "," << b.size << ") has no partner ("
            << format_scalar(b.eigenvalue.inverse()) << "," << b.size << ")\n";
    }
    for (const auto& p : rv.pairs) {
        const JordanBlock& a = spec.blocks()[p.first];
        const JordanBlock& b = spec.blocks()[p.second];
        out << "pair: (" << format_scalar(a.eigenvalue) << "," << a.size << ") with (" << format_scalar(b.eigenvalue)
            << "," << b.size << ")\n";
    }
    out << "p = " << rep.p << ", q = " << rep.q << "\n";
    print_diagram(out, "d(p)", rep.dp);
    print_diagram(out, "d(q)", rep.dq);
    out << "condition 1 (odd block at +1 or -1): " << yes_no(rep.condition1) << "\n";
    if (rep.condition2_value) {
        out << "condition 2 value: " << *rep.condition2_value << " (" << (rep.condition2 ? "even" : "odd") << ")\n";
    }
    if (det) out << "det of every involutive reverser: " << describe(*det) << "\n";
    out << "strongly reversible: " << yes_no(rep.strongly_reversible) << "\n";
    out << "verdict: " << verdict << "\n";
    return code;
}

std::string square_note(const ExactMatrix& g) {
    const ExactMatrix sq = g * g;
    const GaussianRational c = sq(0, 0);
    if (sq == ExactMatrix::scalar(g.rows(), c)) {
        if (c.is_one()) return "g^2 = I";
        if (c == -GaussianRational::one()) return "g^2 = -I";
        return "g^2 = " + format_scalar(c) + " I";
    }
    return "g^2 is not a scalar matrix";
}

int cmd_witness(const Options& o, std::ostream& out, std::ostream& err) {
    const JordanSpec spec = load_spec(o.input);
    const StrongReversibilityReport rep = is_strongly_reversible(spec);
    if (!rep.reversibility.reversible) {
        const JordanBlock& b = spec.blocks()[*rep.reversibility.failure_witness];
        err << "not reversible: block (" << format_scalar(b.eigenvalue) << "," << b.size << ") has no partner ("
            << format_scalar(b.eigenvalue.inverse()) << "," << b.size << ")\n";
        return 2;
    }
    const bool involutive = !o.sl_only;
    if (involutive && !rep.strongly_reversible) {
        const DetSignPrediction det = det_sign_of_involutive_reverser(spec);
        err << "no involutive reverser in SL(" << spec.dimension() << "): every involutive reverser has determinant -1 ("
            << describe(det) << "; condition 2 value " << *rep.condition2_value
            << " is odd and no +-1 eigenvalue has an odd block). Use --sl-only for a non-involutive reverser.\n";
        return 1;
    }

    const WitnessBundle w = involutive ? involutive_witness(spec) : sl_reverser_witness(spec);
    const VerificationReport vr = check_witness(w.a, w.g);
    const std::string note = square_note(w.g);

    if (parse_format(o.format) == OutputFormat::Json) {
        Json j = to_json(w);
        j["mode"] = involutive ? "involutive" : "sl";
        j["spec"] = to_json(spec);
        j["report"] = to_json(vr);
        j["notes"] = Json::array({note});
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "spec: " << format_spec(spec) << "\n";
    out << "mode: " << (involutive ? "involutive" : "sl") << "\n";
    out << "A =\n" << format_matrix(w.a, "  ");
    out << "g =\n" << format_matrix(w.g, "  ");
    out << "reverses: " << yes_no(vr.reverses) << ", involution: " << yes_no(vr.involution)
        << ", det g = " << format_scalar(vr.determinant) << "\n";
    out << note << "\n";
    out << "construction:\n";
    for (const auto& line : w.transcript) out << "  " << line << "\n";
    return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const ExactMatrix a = load_matrix(o.matrix_a, "a");
    const ExactMatrix g = load_matrix(o.matrix_g, "g");
    const VerificationReport vr = check_witness(a, g);
    const int code = vr.all() ? 0 : 1;
    if (parse_format(o.format) == OutputFormat::Json) {
        out << to_json(vr).dump(2) << "\n";
        return code;
    }
    out << "reverses (g A g^-1 = A^-1): " << yes_no(vr.reverses) << "\n";
    out << "involution (g^2 = I): " << yes_no(vr.involution) << "\n";
    out << "det g = " << format_scalar(vr.determinant) << (vr.in_special ? " (in SL)" : " (not in SL)") << "\n";
    for (const auto& r : vr.residuals)
        out << "first mismatch for " << r.check << " at (" << r.row + 1 << "," << r.col + 1 << ")\n";
    return code;
}

int cmd_weyr(const Options& o, std::ostream& out) {
    const JordanSpec spec = load_spec(o.input);
    const WeyrData w = weyr_of(spec);
    if (parse_format(o.format) == OutputFormat::Json) {
        Json j = to_json(w, spec);
        j["spec"] = to_json(spec);
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "spec: " << format_spec(spec) << "\n";
    for (const auto& ws : w.structures) {
        const Partition jordan = spec.structure_of(ws.eigenvalue);
        const Partition weyr(ws.sizes);
        out << "eigenvalue " << format_scalar(ws.eigenvalue) << ": Jordan structure " << format_partition(jordan)
            << ", Weyr structure " << format_partition(weyr) << "\n";
        print_diagram(out, "  Jordan diagram", jordan);
        print_diagram(out, "  Weyr diagram", weyr);
    }
    out << "Weyr matrix =\n" << format_matrix(w.weyr, "  ");
    out << "duality permutation (Jordan index -> Weyr index, one-based):";
    const auto img = w.perm.one_based();
    for (std::size_t i = 0; i < img.size(); ++i) out << " " << i + 1 << "->" << img[i];
    out << "\n";
    return 0;
}

}  // namespace

int run_selftest_command(int max_n, std::uint64_t seed, OutputFormat format, std::ostream& out,
                         const Classifier& classifier) {
    const std::vector<CheckSummary> summaries = run_selftest(max_n, seed, classifier);
    std::size_t failures = 0;
    for (const auto& s : summaries) failures += s.failures.size();

    if (format == OutputFormat::Json) {
        Json arr = Json::array();
        for (const auto& s : summaries) arr.push_back(to_json(s));
        out << Json{{"max_n", max_n}, {"seed", seed}, {"failures", failures}, {"summaries", std::move(arr)}}.dump(2)
            << "\n";
    } else {
        for (const auto& s : summaries) {
            out << (s.ok() ? "PASS " : "FAIL ") << s.name << ": cases=" << s.cases
                << " matrices=" << s.matrices_checked;
            if (s.strongly_reversible + s.reversible_only + s.not_reversible > 0)
                out << " strongly_reversible=" << s.strongly_reversible << " reversible_only=" << s.reversible_only
                    << " not_reversible=" << s.not_reversible;
            out << " failures=" << s.failures.size() << "\n";
            for (std::size_t i = 0; i < s.failures.size() && i < 5; ++i) {
                const auto& f = s.failures[i];
                out << "  " << f.check << (f.spec ? " " + format_spec(*f.spec) : std::string()) << ": " << f.detail
                    << "\n";
            }
        }
        out << (failures == 0 ? "selftest passed" : "selftest FAILED") << " (max_n " << max_n << ", seed " << seed
            << ")\n";
    }
    return failures == 0 ? 0 : 1;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact reversibility and strong reversibility in SL(n, C) from Jordan data over Q(i)", "strev"};
    app.require_subcommand(1, 1);

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    };

    CLI::App* classify = app.add_subcommand("classify", "Decide reversibility and strong reversibility");
    classify->add_option("--input", o.input, "Jordan spec JSON file")->required();
    add_format(classify);

    CLI::App* witness = app.add_subcommand("witness", "Construct a reverser of the Jordan form");
    witness->add_option("--input", o.input, "Jordan spec JSON file")->required();
    auto* inv = witness->add_flag("--involutive", o.involutive, "Involutive reverser in SL(n) (default)");
    auto* sl = witness->add_flag("--sl-only", o.sl_only, "Reverser in SL(n), not necessarily an involution");
    inv->excludes(sl);
    add_format(witness);

    CLI::App* verify = app.add_subcommand("verify", "Check g A g^-1 = A^-1, g^2 = I and det g = 1 exactly");
    verify->add_option("--matrix-a", o.matrix_a, "Matrix JSON file for A (or a witness document)")->required();
    verify->add_option("--matrix-g", o.matrix_g, "Matrix JSON file for g (or a witness document)")->required();
    add_format(verify);

    CLI::App* weyr = app.add_subcommand("weyr", "Show Weyr structures, the Weyr matrix and the duality permutation");
    weyr->add_option("--input", o.input, "Jordan spec JSON file")->required();
    add_format(weyr);

    CLI::App* selftest = app.add_subcommand("selftest", "Run the exhaustive and randomized check suite");
    selftest->add_option("--max-n", o.max_n, "Largest dimension swept")->check(CLI::Range(1, 12));
    selftest->add_option("--seed", o.seed, "Seed for randomized checks");
    add_format(selftest);

    std::vector<std::string> argv_store;
    argv_store.reserve(args.size() + 1);
    argv_store.emplace_back("strev");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*classify) return cmd_classify(o, out);
        if (*witness) return cmd_witness(o, out, err);
        if (*verify) return cmd_verify(o, out);
        if (*weyr) return cmd_weyr(o, out);
        return run_selftest_command(o.max_n, o.seed, parse_format(o.format), out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace strev
