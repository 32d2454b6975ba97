#include "strev/io.hpp"

#include <fstream>
#include <sstream>

namespace strev {

namespace {

Json block_json(const JordanBlock& b) { return {{"eigenvalue", format_scalar(b.eigenvalue)}, {"size", b.size}}; }

const Json& require(const Json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string(what) + " needs a \"" + key + "\" field");
    return j.at(key);
}

std::size_t require_size(const Json& j, const char* key, const char* what) {
    const Json& v = require(j, key, what);
    if (!v.is_number_integer() || v.get<long long>() < 0)
        throw InputError(std::string(what) + " field \"" + key + "\" must be a non-negative integer");
    return v.get<std::size_t>();
}

}  // namespace

Json to_json(const GaussianRational& z) { return format_scalar(z); }

GaussianRational scalar_from_json(const Json& j) {
    if (j.is_string()) return parse_scalar(j.get<std::string>());
    if (j.is_number_integer()) return GaussianRational(j.get<long>());
    throw InputError("scalar must be a string in the scalar grammar or an integer, got " + j.dump());
}

Json to_json(const ExactMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(format_scalar(m(i, j)));
        rows.push_back(std::move(row));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

ExactMatrix matrix_from_json(const Json& j) {
    const std::size_t rows = require_size(j, "rows", "matrix");
    const std::size_t cols = require_size(j, "cols", "matrix");
    const Json& entries = require(j, "entries", "matrix");
    if (!entries.is_array() || entries.size() != rows)
        throw InputError("matrix \"entries\" must be an array of " + std::to_string(rows) + " rows");
    ExactMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const Json& row = entries[i];
        if (!row.is_array() || row.size() != cols)
            throw InputError("matrix row " + std::to_string(i + 1) + " must have " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) {
            try {
                m(i, c) = scalar_from_json(row[c]);
            } catch (const ParseError& e) {
                throw ParseError("entry (" + std::to_string(i + 1) + "," + std::to_string(c + 1) + "): " + e.what(),
                                 e.position());
            }
        }
    }
    return m;
}

Json to_json(const JordanSpec& spec) {
    Json blocks = Json::array();
    for (const auto& b : spec.blocks()) blocks.push_back(block_json(b));
    return {{"blocks", std::move(blocks)}};
}

JordanSpec spec_from_json(const Json& j) {
    const Json& blocks = require(j, "blocks", "Jordan spec");
    if (!blocks.is_array()) throw InputError("Jordan spec \"blocks\" must be an array");
    std::vector<JordanBlock> out;
    for (const Json& b : blocks) {
        const Json& size = require(b, "size", "Jordan block");
        if (!size.is_number_integer()) throw InputError("Jordan block size must be an integer");
        out.push_back({scalar_from_json(require(b, "eigenvalue", "Jordan block")), size.get<int>()});
    }
    return JordanSpec(std::move(out));
}

Json to_json(const Partition& p) { return p.parts(); }

Partition partition_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("partition must be an integer array");
    std::vector<int> parts;
    for (const Json& v : j) {
        if (!v.is_number_integer()) throw InputError("partition entries must be integers");
        parts.push_back(v.get<int>());
    }
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i] > parts[i - 1]) throw InputError("partition must be weakly decreasing");
    return Partition(std::move(parts));
}

Json to_json(const JordanSpec& spec, const ReversibilityReport& r) {
    Json pairs = Json::array();
    for (const auto& p : r.pairs)
        pairs.push_back(Json::array({block_json(spec.blocks()[p.first]), block_json(spec.blocks()[p.second])}));
    Json singles = Json::array();
    for (std::size_t k : r.singletons) singles.push_back(block_json(spec.blocks()[k]));
    Json out = {{"reversible", r.reversible}, {"pairs", std::move(pairs)}, {"singletons", std::move(singles)}};
    out["failure_witness"] = r.failure_witness ? block_json(spec.blocks()[*r.failure_witness]) : Json(nullptr);
    return out;
}

Json to_json(const StrongReversibilityReport& r) {
    Json out = {{"strongly_reversible", r.strongly_reversible},
                {"p", r.p},
                {"q", r.q},
                {"dp", to_json(r.dp)},
                {"dq", to_json(r.dq)},
                {"condition1", r.condition1},
                {"condition2", r.condition2}};
    out["condition2_value"] = r.condition2_value ? Json(*r.condition2_value) : Json(nullptr);
    return out;
}

Json to_json(const VerificationReport& r) {
    Json residuals = Json::array();
    for (const auto& res : r.residuals)
        residuals.push_back({{"check", res.check}, {"row", res.row + 1}, {"col", res.col + 1}});
    return {{"reverses", r.reverses},
            {"involution", r.involution},
            {"determinant", format_scalar(r.determinant)},
            {"in_special", r.in_special},
            {"residuals", std::move(residuals)}};
}

Json to_json(const WitnessBundle& w) {
    return {{"a", to_json(w.a)},
            {"g", to_json(w.g)},
            {"is_involution", w.is_involution},
            {"determinant", format_scalar(w.determinant)},
            {"reverses", w.reverses},
            {"transcript", w.transcript}};
}

Json to_json(const CheckSummary& s) {
    Json failures = Json::array();
    for (const auto& f : s.failures) {
        Json rec = {{"check", f.check}, {"detail", f.detail}};
        rec["spec"] = f.spec ? to_json(*f.spec) : Json(nullptr);
        failures.push_back(std::move(rec));
    }
    return {{"name", s.name},
            {"cases", s.cases},
            {"strongly_reversible", s.strongly_reversible},
            {"reversible_only", s.reversible_only},
            {"not_reversible", s.not_reversible},
            {"matrices_checked", s.matrices_checked},
            {"failure_count", s.failures.size()},
            {"failures", std::move(failures)}};
}

Json to_json(const WeyrData& w, const JordanSpec& spec) {
    Json structures = Json::array();
    for (const auto& ws : w.structures) {
        structures.push_back({{"eigenvalue", format_scalar(ws.eigenvalue)},
                              {"jordan", to_json(spec.structure_of(ws.eigenvalue))},
                              {"weyr", ws.sizes}});
    }
    return {{"structures", std::move(structures)}, {"weyr", to_json(w.weyr)}, {"permutation", w.perm.one_based()}};
}

std::string format_spec(const JordanSpec& spec) {
    std::string out = "[";
    for (std::size_t k = 0; k < spec.blocks().size(); ++k) {
        if (k) out += ",";
        out += "(" + format_scalar(spec.blocks()[k].eigenvalue) + "," + std::to_string(spec.blocks()[k].size) + ")";
    }
    return out + "]";
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return Json::parse(buf.str());
    } catch (const Json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

}  // namespace strev
