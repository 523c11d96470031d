#include "qsteer/operator_doc.hpp"

#include "qsteer/errors.hpp"

namespace qsteer {

using nlohmann::json;

namespace {

cd parse_entry(const json& e) {
  if (e.is_number()) return cd(e.get<double>(), 0.0);
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number())
    return cd(e[0].get<double>(), e[1].get<double>());
  throw DocumentError("matrix entries must be numbers or [re, im] pairs");
}

Vec3 parse_vec3(const json& v, const char* name) {
  if (!v.is_array() || v.size() != 3)
    throw DocumentError(std::string(name) + " must be a 3-vector");
  Vec3 out;
  for (int i = 0; i < 3; ++i) {
    if (!v[i].is_number())
      throw DocumentError(std::string(name) + " entries must be numbers");
    out[i] = v[i].get<double>();
  }
  return out;
}

}  // namespace

OperatorDocument parse_operator_document(const json& j) {
  if (!j.is_object()) throw DocumentError("operator document must be an object");
  OperatorDocument doc;
  const bool has_matrix = j.contains("matrix");
  const bool has_pauli = j.contains("pauli");
  if (has_matrix == has_pauli)
    throw DocumentError("exactly one of \"matrix\" or \"pauli\" is required");
  if (j.contains("label")) {
    if (!j["label"].is_string()) throw DocumentError("label must be a string");
    doc.label = j["label"].get<std::string>();
  }
  if (has_matrix) {
    const json& m = j["matrix"];
    if (!m.is_array() || m.size() != 4)
      throw DocumentError("matrix must have 4 rows");
    Mat4c mat;
    for (int i = 0; i < 4; ++i) {
      if (!m[i].is_array() || m[i].size() != 4)
        throw DocumentError("matrix rows must have 4 entries");
      for (int k = 0; k < 4; ++k) mat(i, k) = parse_entry(m[i][k]);
    }
    doc.matrix = mat;
  } else {
    const json& p = j["pauli"];
    if (!p.is_object() || !p.contains("a") || !p.contains("b") ||
        !p.contains("T"))
      throw DocumentError("pauli form needs fields a, b and T");
    PauliForm pf;
    pf.a = parse_vec3(p["a"], "a");
    pf.b = parse_vec3(p["b"], "b");
    const json& t = p["T"];
    if (!t.is_array() || t.size() != 3)
      throw DocumentError("T must be a 3x3 matrix");
    for (int i = 0; i < 3; ++i) {
      if (!t[i].is_array() || t[i].size() != 3)
        throw DocumentError("T rows must have 3 entries");
      for (int k = 0; k < 3; ++k) {
        if (!t[i][k].is_number())
          throw DocumentError("T entries must be numbers");
        pf.T(i, k) = t[i][k].get<double>();
      }
    }
    doc.pauli = pf;
  }
  return doc;
}

std::vector<OperatorDocument> parse_operator_documents(
    const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw DocumentError(std::string("invalid JSON: ") + e.what());
  }
  std::vector<OperatorDocument> docs;
  if (j.is_array()) {
    if (j.empty()) throw DocumentError("empty document array");
    for (const json& item : j) docs.push_back(parse_operator_document(item));
  } else {
    docs.push_back(parse_operator_document(j));
  }
  return docs;
}

TwoQubitOperator to_operator(const OperatorDocument& doc, bool normalize,
                             const Tolerances& tol) {
  TwoQubitOperator op =
      doc.matrix ? TwoQubitOperator{*doc.matrix} : reconstruct(*doc.pauli);
  if (normalize) op = normalized(op, tol);
  require_hermitian(op, tol);
  require_unit_trace(op, tol);
  return op;
}

nlohmann::ordered_json document_json(const TwoQubitOperator& op,
                                     const std::string& label) {
  nlohmann::ordered_json j;
  j["label"] = label;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int i = 0; i < 4; ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int k = 0; k < 4; ++k) {
      const cd e = op.m(i, k);
      row.push_back({e.real(), e.imag()});
    }
    rows.push_back(row);
  }
  j["matrix"] = rows;
  return j;
}

}  // namespace qsteer
