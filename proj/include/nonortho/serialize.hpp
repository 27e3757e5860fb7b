#pragma once

#include <json.hpp>
#include <string>

#include "nonortho/codec.hpp"
#include "nonortho/report.hpp"
#include "nonortho/treesearch.hpp"

namespace nonortho {

// States and codewords share one wire schema:
//   {"n": int, "amplitudes": [{"alpha": int, "p": 0|1, "q": 0|1,
//                              "re": float, "im": float}, ...]}
// listing only nonzero entries, sorted by (alpha, p, q).

nlohmann::json state_to_json(const StateVector& v);
nlohmann::json codeword_to_json(const Codeword& cw);

/// Parses the shared schema back into a codeword; entries must form a valid
/// codeword (one pair per subspace, uniform real amplitude 1/sqrt(n)).
Codeword codeword_from_json(const nlohmann::json& j);

/// Parses the shared schema into a dense state; the result must be
/// normalized within 1e-8.
StateVector state_from_json(const nlohmann::json& j);

// Trees: {"root": id, "edges": [{"from": id, "label": [p, q], "to": id}, ...]}
nlohmann::json tree_to_json(const OrderedTree& tree);
OrderedTree tree_from_json(const nlohmann::json& j);

/// Search result record:
///   {"n", "target", "fidelity", "oracle_variant", "queries"}
nlohmann::json search_result_json(int n, const BitString& target, double fidelity,
                                  std::string_view oracle_variant, int queries);

nlohmann::json space_to_json(const SpaceReport& r);

/// Shortest round-trip decimal rendering, for deterministic CSV output.
std::string format_double(double value);

}  // namespace nonortho
