#pragma once

// Text, JSON and LaTeX encodings.

#include <string>
#include <vector>

#include <json.hpp>

#include "akfock/abacus.hpp"
#include "akfock/canonical_basis.hpp"
#include "akfock/runner.hpp"

namespace akfock {

using Json = nlohmann::ordered_json;

/// Accepts [[2,1],[1,1,1]]; a flat list such as [3,1] or [] is a single
/// component. Throws std::invalid_argument on malformed input.
Multipartition parse_multipartition(const std::string& text);
/// Comma-separated integers, e.g. "2,1".
std::vector<int> parse_int_list(const std::string& text);

Json to_json(const Multipartition& m);
Json to_json(const LaurentPoly& p);
Json to_json(const FockVector& v);
Json to_json(const OperatorWord& w);
Json to_json(const AbacusDisplay& a);
Json to_json(const StripResult& s);
Json to_json(const RunnerReport& r);
Json to_json(const DecompositionMatrix& m, bool eval_at_1);

/// One term per line, "coefficient  label".
std::string format_vector_text(const FockVector& v);
std::string format_matrix_text(const DecompositionMatrix& m, bool eval_at_1);
std::string format_matrix_latex(const DecompositionMatrix& m, bool eval_at_1);
std::string format_report_text(const RunnerReport& r);

}  // namespace akfock
