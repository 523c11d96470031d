#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qsteer/pauli.hpp"
#include "qsteer/tolerances.hpp"

// JSON operator documents, the interchange format of the CLI. Exactly one
// of "matrix" (4x4 of [re, im] pairs; bare numbers accepted for real
// entries) or "pauli" ({a, b, T}) must be present; "label" is optional.

namespace qsteer {

struct OperatorDocument {
  std::optional<Mat4c> matrix;
  std::optional<PauliForm> pauli;
  std::string label;
};

/// Throws DocumentError on schema violations.
OperatorDocument parse_operator_document(const nlohmann::json& j);

/// Accepts a single document or an array of documents.
std::vector<OperatorDocument> parse_operator_documents(const std::string& text);

/// Materialize the operator; validates Hermiticity and trace (after
/// normalization when requested).
TwoQubitOperator to_operator(const OperatorDocument& doc, bool normalize,
                             const Tolerances& tol = {});

/// Matrix-form document for an operator.
nlohmann::ordered_json document_json(const TwoQubitOperator& op,
                                     const std::string& label);

}  // namespace qsteer
