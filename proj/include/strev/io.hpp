#ifndef STREV_IO_HPP
#define STREV_IO_HPP

#include <json.hpp>
#include <string>

#include "strev/verify.hpp"

namespace strev {

using Json = nlohmann::json;

/// Malformed or unreadable input document.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

Json to_json(const GaussianRational& z);
GaussianRational scalar_from_json(const Json& j);

/// {"rows": n, "cols": m, "entries": [["scalar", ...], ...]}
Json to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const Json& j);

/// {"blocks": [{"eigenvalue": "scalar", "size": k}, ...]}
Json to_json(const JordanSpec& spec);
JordanSpec spec_from_json(const Json& j);

/// Weakly decreasing integer array.
Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json to_json(const JordanSpec& spec, const ReversibilityReport& r);
Json to_json(const StrongReversibilityReport& r);
Json to_json(const VerificationReport& r);
Json to_json(const WitnessBundle& w);
Json to_json(const CheckSummary& s);
Json to_json(const WeyrData& w, const JordanSpec& spec);

/// "[(1,2),(1/2,3)]"
std::string format_spec(const JordanSpec& spec);

/// Reads and parses a JSON file; InputError on I/O or syntax problems.
Json load_json_file(const std::string& path);

}  // namespace strev

#endif  // STREV_IO_HPP
