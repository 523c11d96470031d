#include "qsteer/report.hpp"

#include <cmath>
#include <sstream>

namespace qsteer {

using nlohmann::ordered_json;

namespace {

ordered_json vec_json(const Vec3& v) {
  return ordered_json::array({v.x, v.y, v.z});
}

ordered_json finite_or_null(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

}  // namespace

ClassificationReport build_report(const TwoQubitOperator& b,
                                  const std::string& label,
                                  const Tolerances& tol) {
  ClassificationReport r;
  r.label = label;
  r.rep = ellipsoid_of(b, tol);
  r.cls = classify_by_determinants(b, tol);
  r.cls_ell = classify_by_ellipsoid(r.rep, tol);
  r.routes_agree = r.cls.value == r.cls_ell.value;
  r.max_r = max_radius(r.rep);
  r.block_positive =
      is_inside_bloch_sphere(r.rep, tol) != SphereContainment::Outside;
  const auto ax = semiaxes(r.rep);
  for (int k = 0; k < 3; ++k) r.axes[k] = ax[k].length;
  r.inv = compute_invariants(r.rep, b, tol);
  r.wit = analyze_witness(b, tol);
  return r;
}

std::string report_summary(const ClassificationReport& r) {
  switch (r.cls.value) {
    case OperatorClass::NotBlockPositive:
      return "not block positive";
    case OperatorClass::A:
      return "Class A, separable state";
    case OperatorClass::B:
      return "Class B, entangled state";
    case OperatorClass::C:
    case OperatorClass::D: {
      std::string s = "Class " + to_string(r.cls.value) + ", ";
      if (r.wit.optimal)
        s += "optimal witness";
      else if (r.wit.weakly_optimal)
        s += "weakly optimal witness";
      else
        s += "witness";
      return s;
    }
  }
  return "?";
}

ordered_json report_json(const ClassificationReport& r) {
  ordered_json j;
  j["label"] = r.label;
  j["class"] = to_string(r.cls.value);
  j["marginal"] = r.cls.marginal;
  j["summary"] = report_summary(r);
  j["block_positive"] = r.block_positive;

  ordered_json inv;
  inv["c"] = vec_json(r.rep.c);
  inv["c_norm"] = r.inv.c_norm;
  inv["gamma_b"] = finite_or_null(r.inv.gamma_b);
  inv["chi"] = r.rep.chi;
  inv["det_T_tilde"] = r.rep.det_T_tilde;
  inv["u"] = r.inv.u;
  inv["q"] = r.inv.q;
  inv["r"] = r.inv.r;
  inv["lhs_minus"] = r.inv.lhs_minus;
  inv["lhs_plus"] = r.inv.lhs_plus;
  inv["det_B"] = r.inv.det_B;
  inv["det_B_TB"] = r.inv.det_B_TB;
  inv["max_radius"] = r.max_r;
  inv["semiaxes"] = ordered_json::array({r.axes[0], r.axes[1], r.axes[2]});
  inv["degenerate"] = r.rep.degenerate;
  inv["singular_b"] = r.rep.singular_b;
  j["invariants"] = inv;

  ordered_json wit;
  wit["is_witness"] = r.wit.is_witness;
  wit["optimal"] = r.wit.optimal;
  wit["weakly_optimal"] = r.wit.weakly_optimal;
  wit["in_EW4"] = r.wit.in_ew4;
  wit["negative_eigenvalue"] = r.wit.negative_eigenvalue;
  j["witness"] = wit;

  ordered_json prov;
  prov["block_positive"] = "ellipsoid containment (max radius vs unit sphere)";
  prov["class"] = "determinant signs (det B, det B^TB)";
  prov["ellipsoid_route"] =
      r.routes_agree ? "agrees"
                     : ((r.cls.marginal || r.cls_ell.marginal)
                            ? "differs inside the marginal dead band"
                            : "disagrees");
  prov["ellipsoid_route_class"] = to_string(r.cls_ell.value);
  prov["optimal"] = "ellipsoid geometry (unit sphere, right-handed)";
  prov["weakly_optimal"] = "sphere contact (max radius within tolerance of 1)";
  prov["in_EW4"] = "matrix symmetries (W = W^T = W^TB)";
  j["provenance"] = prov;
  return j;
}

std::string report_table(const ClassificationReport& r) {
  std::ostringstream os;
  const auto row = [&](const std::string& k, const std::string& v) {
    os << "  " << k;
    for (size_t i = k.size(); i < 18; ++i) os << ' ';
    os << v << '\n';
  };
  const auto num = [](double v) {
    std::ostringstream s;
    s.precision(12);
    s << v;
    return s.str();
  };
  os << (r.label.empty() ? "(operator)" : r.label) << ": "
     << report_summary(r) << '\n';
  row("class", to_string(r.cls.value) + (r.cls.marginal ? " (marginal)" : ""));
  row("block positive", r.block_positive ? "yes" : "no");
  row("witness", r.wit.is_witness ? "yes" : "no");
  if (r.wit.is_witness) {
    row("optimal", r.wit.optimal ? "yes" : "no");
    row("weakly optimal", r.wit.weakly_optimal ? "yes" : "no");
    row("in EW4", r.wit.in_ew4 ? "yes" : "no");
  }
  row("chi", r.rep.chi > 0 ? "+1" : (r.rep.chi < 0 ? "-1" : "0"));
  row("centre", "(" + num(r.rep.c.x) + ", " + num(r.rep.c.y) + ", " +
                    num(r.rep.c.z) + ")");
  row("semiaxes", num(r.axes[0]) + ", " + num(r.axes[1]) + ", " +
                      num(r.axes[2]));
  row("max radius", num(r.max_r));
  row("det B", num(r.inv.det_B));
  row("det B^TB", num(r.inv.det_B_TB));
  row("min eigenvalue", num(r.wit.negative_eigenvalue));
  return os.str();
}

ordered_json conjecture_json(const ConjectureReport& r) {
  ordered_json j;
  j["seed"] = r.seed;
  j["n_witnesses"] = r.n_witnesses;
  j["n_states"] = r.n_states;
  ordered_json estar;
  estar["c"] = vec_json(r.estar_c);
  estar["semiaxes"] = ordered_json::array(
      {r.estar_semiaxes[0], r.estar_semiaxes[1], r.estar_semiaxes[2]});
  estar["chi"] = r.estar_chi;
  estar["class"] = r.estar_class;
  j["estar"] = estar;
  j["attempts"] = r.attempts;
  ordered_json stars = ordered_json::array();
  for (const ConjectureStarReport& s : r.stars) {
    ordered_json sj;
    sj["chi"] = s.chi;
    ordered_json members = ordered_json::array();
    for (const ConjectureMemberStats& m : s.members) {
      ordered_json mj;
      mj["chi"] = m.chi;
      mj["n_members"] = m.n_members;
      mj["n_covered_by_star"] = m.n_covered_by_star;
      mj["n_detected_states"] = m.n_detected_states;
      members.push_back(mj);
    }
    sj["members"] = members;
    sj["n_uncovered_states"] = s.n_uncovered_states;
    sj["n_finer_candidates"] = s.n_finer_candidates;
    if (s.has_example) {
      ordered_json ex;
      ex["member_pauli"]["a"] = vec_json(s.example_member.a);
      ex["member_pauli"]["b"] = vec_json(s.example_member.b);
      ordered_json t = ordered_json::array();
      for (int i = 0; i < 3; ++i)
        t.push_back(ordered_json::array({s.example_member.T(i, 0),
                                         s.example_member.T(i, 1),
                                         s.example_member.T(i, 2)}));
      ex["member_pauli"]["T"] = t;
      ordered_json rows = ordered_json::array();
      for (int i = 0; i < 4; ++i) {
        ordered_json row = ordered_json::array();
        for (int k = 0; k < 4; ++k) {
          const cd e = s.example_state.m(i, k);
          row.push_back(ordered_json::array({e.real(), e.imag()}));
        }
        rows.push_back(row);
      }
      ex["state_matrix"] = rows;
      ex["tr_member"] = s.example_tr_member;
      ex["tr_star"] = s.example_tr_star;
      sj["example_uncovered"] = ex;
    } else {
      sj["example_uncovered"] = nullptr;
    }
    stars.push_back(sj);
  }
  j["stars"] = stars;
  return j;
}

ordered_json mesh_json(const MeshScene& scene, const ClassificationReport& r) {
  ordered_json j;
  ordered_json verts = ordered_json::array();
  ordered_json faces = ordered_json::array();
  ordered_json segs = ordered_json::array();
  const auto add = [&](const TriMesh& m, int base) {
    for (const Vec3& v : m.vertices)
      verts.push_back(ordered_json::array({v.x, v.y, v.z}));
    for (const auto& f : m.faces)
      faces.push_back(
          ordered_json::array({f[0] + base, f[1] + base, f[2] + base}));
    for (const auto& s : m.segments)
      segs.push_back(ordered_json::array({s[0] + base, s[1] + base}));
  };
  const int n_ell_v = static_cast<int>(scene.ellipsoid.vertices.size());
  const int n_ell_f = static_cast<int>(scene.ellipsoid.faces.size());
  add(scene.ellipsoid, 0);
  add(scene.sphere, n_ell_v);
  j["vertices"] = verts;
  j["faces"] = faces;
  j["segments"] = segs;
  ordered_json meta;
  meta["class"] = to_string(r.cls.value);
  meta["chi"] = r.rep.chi;
  meta["c"] = vec_json(r.rep.c);
  meta["semiaxes"] = ordered_json::array({r.axes[0], r.axes[1], r.axes[2]});
  meta["primitive"] = scene.primitive;
  ordered_json objects;
  objects["ellipsoid"]["vertices"] = ordered_json::array({0, n_ell_v});
  objects["ellipsoid"]["faces"] = ordered_json::array({0, n_ell_f});
  objects["bloch_sphere"]["vertices"] = ordered_json::array(
      {n_ell_v, static_cast<int>(scene.sphere.vertices.size())});
  objects["bloch_sphere"]["faces"] = ordered_json::array(
      {n_ell_f, static_cast<int>(scene.sphere.faces.size())});
  meta["objects"] = objects;
  j["meta"] = meta;
  return j;
}

std::string mesh_obj(const MeshScene& scene) {
  std::ostringstream os;
  os.precision(17);
  const auto emit = [&](const TriMesh& m, const char* name, int base) {
    os << "o " << name << '\n';
    for (const Vec3& v : m.vertices)
      os << "v " << v.x << ' ' << v.y << ' ' << v.z << '\n';
    for (const auto& f : m.faces)
      os << "f " << f[0] + base + 1 << ' ' << f[1] + base + 1 << ' '
         << f[2] + base + 1 << '\n';
    for (const auto& s : m.segments)
      os << "l " << s[0] + base + 1 << ' ' << s[1] + base + 1 << '\n';
    if (m.faces.empty() && m.segments.empty() && m.vertices.size() == 1)
      os << "p " << base + 1 << '\n';
  };
  emit(scene.ellipsoid, "ellipsoid", 0);
  emit(scene.sphere, "bloch_sphere",
       static_cast<int>(scene.ellipsoid.vertices.size()));
  return os.str();
}

}  // namespace qsteer
