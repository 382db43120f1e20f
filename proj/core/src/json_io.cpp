#include "qsh/json_io.hpp"

#include <stdexcept>

namespace qsh {

Json to_json(const Rational& r) { return rat_to_string(r); }

Json to_json(const Quat& q) {
  return Json::array({rat_to_string(q.w), rat_to_string(q.x), rat_to_string(q.y),
                      rat_to_string(q.z)});
}

Json to_json(const QMat& m) {
  Json entries = Json::array();
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) entries.push_back(to_json(m.at(r, c)));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Json to_json(const QVec& v) {
  Json out = Json::array();
  for (const Quat& q : v) out.push_back(to_json(q));
  return out;
}

Json to_json(const RatVec& v) {
  Json out = Json::array();
  for (const Rational& r : v) out.push_back(rat_to_string(r));
  return out;
}

Json to_json(const RatMat& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows; ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols; ++c) row.push_back(rat_to_string(m.at(r, c)));
    rows.push_back(row);
  }
  return rows;
}

static std::string variant_name(FormVariant v) {
  switch (v) {
    case FormVariant::SkewHermitian: return "skew-hermitian";
    case FormVariant::DarbouxEven: return "darboux-even";
    case FormVariant::DarbouxOdd: return "darboux-odd";
    case FormVariant::DarbouxSigned: return "darboux-signed";
  }
  return "?";
}

Json to_json(const SkewForm& form) {
  Json j{{"n", form.n()}, {"variant", variant_name(form.variant())}};
  if (form.variant() == FormVariant::DarbouxSigned) {
    j["p"] = form.p();
    j["q"] = form.q();
  }
  return j;
}

Json to_json(const Subspace& s) {
  Json basis = Json::array();
  for (const RatVec& row : s.basis()) basis.push_back(to_json(row));
  return Json{{"ambient_dim", s.ambient_dim()}, {"basis", basis}};
}

Json to_json(const LiePresentation& p) {
  Json c = Json::array();
  for (int i = 0; i < p.dim; ++i) {
    Json ci = Json::array();
    for (int j = 0; j < p.dim; ++j)
      ci.push_back(to_json(p.c[static_cast<size_t>(i)][static_cast<size_t>(j)]));
    c.push_back(ci);
  }
  Json j{{"dim", p.dim}, {"c", c}};
  if (!p.labels.empty()) j["labels"] = p.labels;
  return j;
}

Json to_json(const TauElement& tau) {
  Json j{{"n", tau.n},
         {"a", to_json(tau.a)},
         {"A", to_json(tau.A)},
         {"d", rat_to_string(tau.d)}};
  if (!tau.C.empty() && !tau.symmetric())
    j["C"] = to_json(tau.C);
  else
    j["C"] = nullptr;
  return j;
}

Json to_json(const AmbientElement& e) {
  return Json{{"n", e.n},          {"a", to_json(e.a)}, {"X", to_json(e.X)},
              {"Y", to_json(e.Y)}, {"c", rat_to_string(e.c)}, {"d", rat_to_string(e.d)},
              {"A", to_json(e.A)}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  throw std::invalid_argument("expected a rational string");
}

Quat quat_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4)
    throw std::invalid_argument("quaternion must be a 4-element array");
  return Quat(rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2]),
              rational_from_json(j[3]));
}

QMat qmat_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    throw std::invalid_argument("matrix needs rows, cols, entries");
  int rows = j.at("rows").get<int>();
  int cols = j.at("cols").get<int>();
  const Json& entries = j.at("entries");
  if (!entries.is_array() || static_cast<int>(entries.size()) != rows * cols)
    throw std::invalid_argument("matrix entry count does not match shape");
  QMat m(rows, cols);
  int idx = 0;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = quat_from_json(entries[static_cast<size_t>(idx++)]);
  return m;
}

QVec qvec_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("vector must be an array");
  QVec v;
  for (const Json& e : j) v.push_back(quat_from_json(e));
  return v;
}

SkewForm skewform_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("variant"))
    throw std::invalid_argument("form needs n and variant");
  int n = j.at("n").get<int>();
  std::string v = j.at("variant").get<std::string>();
  if (v == "skew-hermitian") return SkewForm::skew_hermitian(n);
  if (v == "darboux-even") return SkewForm::darboux_even(n);
  if (v == "darboux-odd") return SkewForm::darboux_odd(n);
  if (v == "darboux-signed") {
    int p = j.at("p").get<int>();
    int q = j.at("q").get<int>();
    SkewForm f = SkewForm::darboux_signed(p, q);
    if (f.n() != n) throw std::invalid_argument("darboux-signed: n != 2(p+q)");
    return f;
  }
  throw std::invalid_argument("unknown form variant: " + v);
}

Subspace subspace_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("ambient_dim") || !j.contains("basis"))
    throw std::invalid_argument("subspace needs ambient_dim and basis");
  int ambient = j.at("ambient_dim").get<int>();
  Subspace s(ambient);
  for (const Json& row : j.at("basis")) {
    RatVec v;
    for (const Json& x : row) v.push_back(rational_from_json(x));
    if (static_cast<int>(v.size()) != ambient)
      throw std::invalid_argument("subspace basis row of wrong length");
    s.insert(std::move(v));
  }
  return s;
}

LiePresentation presentation_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("c"))
    throw std::invalid_argument("presentation needs dim and c");
  LiePresentation p;
  p.dim = j.at("dim").get<int>();
  const Json& c = j.at("c");
  if (static_cast<int>(c.size()) != p.dim)
    throw std::invalid_argument("structure constants of wrong shape");
  p.c.assign(static_cast<size_t>(p.dim),
             std::vector<RatVec>(static_cast<size_t>(p.dim), RatVec(static_cast<size_t>(p.dim))));
  for (int i = 0; i < p.dim; ++i) {
    if (static_cast<int>(c[static_cast<size_t>(i)].size()) != p.dim)
      throw std::invalid_argument("structure constants of wrong shape");
    for (int jdx = 0; jdx < p.dim; ++jdx) {
      const Json& row = c[static_cast<size_t>(i)][static_cast<size_t>(jdx)];
      if (static_cast<int>(row.size()) != p.dim)
        throw std::invalid_argument("structure constants of wrong shape");
      for (int k = 0; k < p.dim; ++k)
        p.c[static_cast<size_t>(i)][static_cast<size_t>(jdx)][static_cast<size_t>(k)] =
            rational_from_json(row[static_cast<size_t>(k)]);
    }
  }
  if (j.contains("labels")) p.labels = j.at("labels").get<std::vector<std::string>>();
  return p;
}

TauElement tau_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("tau must be an object");
  for (const char* key : {"n", "form", "a", "A", "d"})
    if (!j.contains(key)) throw std::invalid_argument(std::string("tau needs field ") + key);
  TauElement tau;
  tau.n = j.at("n").get<int>();
  if (tau.n < 1) throw std::invalid_argument("tau.n must be positive");
  SkewForm form = skewform_from_json(j.at("form"));
  if (form.n() != tau.n) throw std::invalid_argument("tau.n does not match form");
  tau.a = quat_from_json(j.at("a"));
  if (!tau.a.is_imaginary()) throw std::invalid_argument("tau.a must lie in sp(1)");
  tau.A = qmat_from_json(j.at("A"));
  if (tau.A.rows() != tau.n || tau.A.cols() != tau.n)
    throw std::invalid_argument("tau.A has wrong shape");
  const QMat& jj = form.matrix();
  if (!(conj_transpose(tau.A) * jj + jj * tau.A).is_zero())
    throw std::invalid_argument("tau.A is not in so*(2n) for the chosen form");
  tau.d = rational_from_json(j.at("d"));
  if (j.contains("C") && !j.at("C").is_null()) {
    tau.C = qvec_from_json(j.at("C"));
    if (static_cast<int>(tau.C.size()) != tau.n)
      throw std::invalid_argument("tau.C has wrong length");
  }
  return tau;
}

AmbientElement ambient_from_json(const Json& j) {
  for (const char* key : {"n", "a", "X", "Y", "c", "d", "A"})
    if (!j.contains(key)) throw std::invalid_argument(std::string("ambient element needs ") + key);
  AmbientElement e;
  e.n = j.at("n").get<int>();
  e.a = quat_from_json(j.at("a"));
  e.X = qvec_from_json(j.at("X"));
  e.Y = qvec_from_json(j.at("Y"));
  e.c = rational_from_json(j.at("c"));
  e.d = rational_from_json(j.at("d"));
  e.A = qmat_from_json(j.at("A"));
  if (static_cast<int>(e.X.size()) != e.n || static_cast<int>(e.Y.size()) != e.n ||
      e.A.rows() != e.n || e.A.cols() != e.n)
    throw std::invalid_argument("ambient element blocks do not match n");
  return e;
}

static Json axioms_json(const AxiomReport& a) {
  return Json{{"sigma_automorphism", a.sigma_automorphism},
              {"l_equals_bracket_mm", a.l_equals_bracket_mm},
              {"no_ideal_in_l", a.no_ideal_in_l},
              {"quaternion_relations", a.quaternion_relations},
              {"q0_l_invariant", a.q0_l_invariant},
              {"omega_skew", a.omega_skew},
              {"omega_nondegenerate", a.omega_nondegenerate},
              {"omega_hermitian", a.omega_hermitian},
              {"omega_l_invariant", a.omega_l_invariant},
              {"omega_cocycle", a.omega_cocycle}};
}

Json verification_record(const Tila& t, const CoordinateLabels* labels) {
  AxiomReport axioms = t.report;
  TraceFormReport trace = ambient_trace_form_on_m(t);
  LeviReport levi = levi_structure(t, labels);
  CentralElementReport central = central_element_analysis(t);
  RatMat b = killing_form(t.g);

  Json j;
  j["dim_g"] = t.g.dim;
  j["dim_m"] = t.dim_m;
  j["dim_l"] = t.dim_l;
  j["axioms"] = axioms_json(axioms);
  j["killing"] = Json{{"intrinsic_rank", rank(b)},
                      {"ambient_m_rank", trace.rank},
                      {"degenerate", trace.degenerate}};
  Json levi_j{{"semisimple_dim", levi.semisimple_dim},
              {"radical_dim", levi.radical_dim},
              {"radical_abelian", levi.radical_abelian}};
  levi_j["r_qh_dim"] = levi.r_qh_dim >= 0 ? Json(levi.r_qh_dim) : Json(nullptr);
  levi_j["r_deg_dim"] = levi.r_deg_dim >= 0 ? Json(levi.r_deg_dim) : Json(nullptr);
  j["levi"] = levi_j;
  switch (central.status) {
    case CentralElementReport::Status::Ok:
      j["Z0"] = to_json(central.z0);
      j["z0_status"] = "ok";
      break;
    case CentralElementReport::Status::NotApplicable:
      j["Z0"] = nullptr;
      j["z0_status"] = "not-applicable";
      break;
    case CentralElementReport::Status::NoAdRealization:
      j["Z0"] = nullptr;
      j["z0_status"] = "no-ad-realization";
      break;
  }
  j["pass"] = axioms.all();
  return j;
}

static std::string kind_name(BlockKind k) {
  switch (k) {
    case BlockKind::J1Zero: return "j1-zero";
    case BlockKind::J2Zero: return "j2-zero";
    case BlockKind::J1bJ: return "j1-bj";
    case BlockKind::BetaPair: return "beta-pair";
  }
  return "?";
}

Json to_json(const NormalizedTriple& t) {
  Json blocks = Json::array();
  for (const NormalBlock& b : t.blocks) {
    Json jb{{"family", kind_name(b.kind)}};
    if (b.kind == BlockKind::J2Zero || b.kind == BlockKind::J1bJ) jb["kappa"] = b.kappa;
    if (b.kind == BlockKind::J1bJ) jb["b"] = rat_to_string(b.b);
    if (b.kind == BlockKind::BetaPair)
      jb["beta"] = Json::array({rat_to_string(b.beta_re), rat_to_string(b.beta_im)});
    blocks.push_back(jb);
  }
  return Json{{"a", to_json(t.a)}, {"d", rat_to_string(t.d)}, {"blocks", blocks}};
}

Json to_json(const ClassOutcome& o) {
  return Json{{"tag", o.matched_tag}, {"normalized", to_json(o.normalized)}};
}

}  // namespace qsh
