#pragma once

#include <string>

#include <json.hpp>

#include "qsteer/classify.hpp"
#include "qsteer/mesh.hpp"
#include "qsteer/witness.hpp"

// Full per-operator report: classification by both routes, ellipsoid
// geometry, witness properties and the provenance of each decision.
// JSON serialization uses ordered keys so reports are byte-stable.

namespace qsteer {

struct ClassificationReport {
  std::string label;
  ClassLabel cls;        // determinant-route classification (primary)
  ClassLabel cls_ell;    // ellipsoid-route classification (cross-check)
  bool routes_agree = true;
  bool block_positive = false;
  double max_r = 0.0;
  EllipsoidRep rep;
  std::array<double, 3> axes{};
  ClassInvariants inv;
  WitnessProperties wit;
};

ClassificationReport build_report(const TwoQubitOperator& b,
                                  const std::string& label,
                                  const Tolerances& tol = {});

/// One-line verdict, e.g. "Class C, optimal witness".
std::string report_summary(const ClassificationReport& r);

nlohmann::ordered_json report_json(const ClassificationReport& r);

/// Aligned key/value listing for terminal output.
std::string report_table(const ClassificationReport& r);

nlohmann::ordered_json conjecture_json(const ConjectureReport& r);

nlohmann::ordered_json mesh_json(const MeshScene& scene,
                                 const ClassificationReport& r);

std::string mesh_obj(const MeshScene& scene);

}  // namespace qsteer
