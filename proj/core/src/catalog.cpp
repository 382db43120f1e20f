#include "qsh/catalog.hpp"

#include <sstream>
#include <stdexcept>

namespace qsh {

std::string format_tag(const CaseTag& tag) {
  std::ostringstream os;
  switch (tag.family) {
    case Family::NsEven: os << "ns-even:" << tag.n << "," << tag.p << "," << tag.q; break;
    case Family::NsOdd: os << "ns-odd:" << tag.n << "," << tag.p << "," << tag.q; break;
    case Family::M1: os << "m1:" << tag.n; break;
    case Family::M2: os << "m2:" << tag.n << "," << tag.p << "," << tag.q; break;
    case Family::M3: os << "m3:" << tag.n; break;
  }
  return os.str();
}

static void check_constraints(const CaseTag& tag) {
  if (tag.n < 2) throw std::invalid_argument("constraint violated: n > 1");
  if (tag.p < 0) throw std::invalid_argument("constraint violated: 0 <= p");
  if (tag.q < 0) throw std::invalid_argument("constraint violated: 0 <= q");
  switch (tag.family) {
    case Family::NsEven:
      if (tag.n % 2 != 0) throw std::invalid_argument("constraint violated: n even");
      if (tag.p + tag.q > tag.n / 2)
        throw std::invalid_argument("constraint violated: p+q <= n/2");
      break;
    case Family::NsOdd:
      if (tag.n % 2 != 1) throw std::invalid_argument("constraint violated: n odd");
      if (tag.p + tag.q > (tag.n - 1) / 2)
        throw std::invalid_argument("constraint violated: p+q <= (n-1)/2");
      break;
    case Family::M1:
      break;
    case Family::M2:
      if (tag.p + tag.q != tag.n) throw std::invalid_argument("constraint violated: p+q = n");
      break;
    case Family::M3:
      if (tag.n % 2 != 0) throw std::invalid_argument("constraint violated: n even");
      break;
  }
}

CaseTag parse_tag(const std::string& s) {
  size_t colon = s.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("bad tag: " + s);
  std::string head = s.substr(0, colon);
  std::string rest = s.substr(colon + 1);
  if (head == "torsion")
    throw std::invalid_argument("torsion:n is driven by the torsion command");
  CaseTag tag;
  int want = 0;
  if (head == "ns-even") {
    tag.family = Family::NsEven;
    want = 3;
  } else if (head == "ns-odd") {
    tag.family = Family::NsOdd;
    want = 3;
  } else if (head == "m1") {
    tag.family = Family::M1;
    want = 1;
  } else if (head == "m2") {
    tag.family = Family::M2;
    want = 3;
  } else if (head == "m3") {
    tag.family = Family::M3;
    want = 1;
  } else {
    throw std::invalid_argument("unknown family: " + head);
  }
  std::vector<int> nums;
  std::istringstream is(rest);
  std::string piece;
  while (std::getline(is, piece, ',')) {
    size_t used = 0;
    int v;
    try {
      v = std::stoi(piece, &used);
    } catch (...) {
      throw std::invalid_argument("bad tag parameter: " + piece);
    }
    if (used != piece.size()) throw std::invalid_argument("bad tag parameter: " + piece);
    nums.push_back(v);
  }
  if (static_cast<int>(nums.size()) != want)
    throw std::invalid_argument("tag needs " + std::to_string(want) + " parameters: " + s);
  tag.n = nums[0];
  if (want == 3) {
    tag.p = nums[1];
    tag.q = nums[2];
  }
  check_constraints(tag);
  return tag;
}

namespace {

// Slot layout of H^n for the non-semisimple families. Even: (X1 p, Y1 q,
// Z1 c | Y2 p, X2 q, Z2 c); odd inserts the central slot Z3 between the
// halves. A maps X1 -> Y2 and X2 -> Y1 identically, everything else to zero.
struct NsLayout {
  std::vector<int> x_slots, y_slots, z_slots;
  QMat A;
};

NsLayout ns_layout(const CaseTag& tag) {
  NsLayout lay;
  int n = tag.n, p = tag.p, q = tag.q;
  bool odd = tag.family == Family::NsOdd;
  int h = odd ? (n - 1) / 2 : n / 2;
  int c = h - (p + q);
  int second = odd ? h + 1 : h;  // start of the second half
  lay.A = QMat(n, n);
  for (int i = 0; i < p; ++i) {
    lay.x_slots.push_back(i);
    lay.y_slots.push_back(second + i);
    lay.A.at(second + i, i) = kOne;  // X1 -> Y2
  }
  for (int i = 0; i < q; ++i) {
    lay.x_slots.push_back(second + p + i);
    lay.y_slots.push_back(p + i);
    lay.A.at(p + i, second + p + i) = kOne;  // X2 -> Y1
  }
  for (int i = 0; i < c; ++i) {
    lay.z_slots.push_back(p + q + i);
    lay.z_slots.push_back(second + p + q + i);
  }
  if (odd) lay.z_slots.push_back(h);  // central slot
  return lay;
}

// Block boundaries of the displayed (n+2) x (n+2) partition.
std::vector<int> block_offsets(const std::vector<int>& sizes) {
  std::vector<int> off{0};
  for (int s : sizes) off.push_back(off.back() + s);
  return off;
}

// Coordinate space of matrices supported on the given block positions
// (1-based block indices as displayed).
Subspace position_space(int n, const std::vector<int>& sizes,
                        const std::vector<std::pair<int, int>>& blocks) {
  int coord = ambient_coord_dim(n);
  std::vector<int> off = block_offsets(sizes);
  Subspace s(coord);
  for (auto [br, bc] : blocks) {
    for (int r = off[static_cast<size_t>(br - 1)]; r < off[static_cast<size_t>(br)]; ++r)
      for (int c = off[static_cast<size_t>(bc - 1)]; c < off[static_cast<size_t>(bc)]; ++c)
        for (int axis = 0; axis < 4; ++axis) {
          RatVec v(static_cast<size_t>(coord));
          v[static_cast<size_t>(4 * (r * (n + 2) + c) + axis)] = 1;
          s.insert(std::move(v));
        }
  }
  return s;
}

Subspace slot_span(const TauElement& tau, const SkewForm& form, const std::vector<int>& slots) {
  Subspace s(ambient_coord_dim(tau.n));
  for (int slot : slots)
    for (int axis = 0; axis < 4; ++axis) {
      QVec x = qvec_zero(tau.n);
      x[static_cast<size_t>(slot)] = Quat::unit(axis);
      s.insert(realify(lift_complement(tau, form, x)));
    }
  return s;
}

CoordinateLabels ns_labels(const CaseTag& tag, const TauElement& tau, const SkewForm& form,
                           const NsLayout& lay) {
  int n = tag.n, p = tag.p, q = tag.q;
  bool odd = tag.family == Family::NsOdd;
  int h = odd ? (n - 1) / 2 : n / 2;
  int c = h - (p + q);
  std::vector<int> sizes;
  if (odd)
    sizes = {1, p, q, c, 1, p, q, c, 1};
  else
    sizes = {1, p, q, c, p, q, c, 1};
  std::vector<std::pair<int, int>> hpos, rpos;
  if (!odd) {
    hpos = {{3, 2}, {5, 6}, {3, 6}, {5, 2}, {8, 1}};
    rpos = {{3, 4}, {7, 6}, {4, 6}, {3, 7}, {4, 2}, {5, 7}, {7, 2}, {5, 4}};
  } else {
    hpos = {{3, 2}, {6, 7}, {3, 7}, {6, 2}, {9, 1}};
    rpos = {{3, 4}, {8, 7}, {4, 7}, {3, 8}, {4, 2}, {6, 8},
            {8, 2}, {6, 4}, {5, 2}, {6, 5}, {3, 5}, {5, 7}};
  }
  CoordinateLabels labels;
  labels.qh = slot_span(tau, form, lay.y_slots).sum(position_space(n, sizes, hpos));
  labels.deg = slot_span(tau, form, lay.z_slots).sum(position_space(n, sizes, rpos));
  return labels;
}

}  // namespace

ExpectedReport expected_report(const CaseTag& tag) {
  check_constraints(tag);
  ExpectedReport e;
  int n = tag.n, p = tag.p, q = tag.q;
  int s = p + q;
  e.dim_m = 4 * n;
  switch (tag.family) {
    case Family::NsEven:
    case Family::NsOdd: {
      bool odd = tag.family == Family::NsOdd;
      int h = odd ? (n - 1) / 2 : n / 2;
      int c = h - s;
      if (s == 0) {
        e.dim_l = 0;
        e.dim_g = 4 * n;
        e.semisimple_dim = 0;
        e.radical_dim = 4 * n;
        e.r_qh_dim = 0;
        e.r_deg_dim = 4 * n;
        e.ambient_degenerate = true;
        e.radical_abelian = true;
        e.linear_model = true;
        e.iso_target = "linear model";
        break;
      }
      int m = s + 1;
      e.dim_l = 3 + 4 * s * s + 8 * c * s + (odd ? 4 * s : 0);
      e.dim_g = 4 * n + e.dim_l;
      e.semisimple_dim = m * (2 * m + 1);
      e.r_qh_dim = m * (2 * m - 1) - 1;
      e.r_deg_dim = odd ? (8 * c + 4) * m : 8 * c * m;
      e.radical_dim = e.r_qh_dim + e.r_deg_dim;
      e.ambient_degenerate = true;
      e.radical_abelian = odd ? false : (c == 0);
      std::ostringstream os;
      os << "sp(" << p + 1 << "," << q << ") x| r";
      e.iso_target = os.str();
      break;
    }
    case Family::M1: {
      e.dim_l = 1 + so_star_dim(n);
      e.dim_g = (n + 1) * (2 * n + 1);
      e.semisimple_dim = e.dim_g;
      e.radical_dim = 0;
      e.r_qh_dim = 0;
      e.r_deg_dim = 0;
      e.ambient_degenerate = false;
      e.radical_abelian = true;
      std::ostringstream os;
      os << "so*(" << 2 * n + 2 << ")";
      e.iso_target = os.str();
      break;
    }
    case Family::M2: {
      e.dim_l = 3 + n * n;
      e.dim_g = (n + 2) * (n + 2) - 1;
      e.semisimple_dim = e.dim_g;
      e.radical_dim = 0;
      e.r_qh_dim = 0;
      e.r_deg_dim = 0;
      e.ambient_degenerate = false;
      e.radical_abelian = true;
      std::ostringstream os;
      os << "su(" << 2 + p << "," << q << ")";
      e.iso_target = os.str();
      break;
    }
    case Family::M3: {
      e.dim_l = 3 + n * n;
      e.dim_g = (n + 2) * (n + 2) - 1;
      e.semisimple_dim = e.dim_g;
      e.radical_dim = 0;
      e.r_qh_dim = 0;
      e.r_deg_dim = 0;
      e.ambient_degenerate = false;
      e.radical_abelian = true;
      std::ostringstream os;
      os << "sl(" << n / 2 + 1 << ",H)";
      e.iso_target = os.str();
      break;
    }
  }
  return e;
}

CatalogCase make_case(const CaseTag& tag) {
  check_constraints(tag);
  int n = tag.n;
  CatalogCase cc{tag,
                 TauElement{},
                 SkewForm::skew_hermitian(n),
                 expected_report(tag),
                 false,
                 {}};
  cc.tau.n = n;
  cc.tau.A = QMat(n, n);
  switch (tag.family) {
    case Family::NsEven:
    case Family::NsOdd: {
      NsLayout lay = ns_layout(tag);
      cc.form = tag.family == Family::NsEven ? SkewForm::darboux_even(n)
                                             : SkewForm::darboux_odd(n);
      cc.tau.a = Quat();
      cc.tau.A = lay.A;
      cc.tau.d = 0;
      cc.has_labels = true;
      cc.labels = ns_labels(tag, cc.tau, cc.form, lay);
      break;
    }
    case Family::M1:
      cc.form = SkewForm::skew_hermitian(n);
      cc.tau.a = kI;
      cc.tau.d = -1;
      break;
    case Family::M2: {
      cc.form = SkewForm::skew_hermitian(n);
      cc.tau.a = Quat();
      cc.tau.d = -1;
      for (int i = 0; i < tag.p; ++i) cc.tau.A.at(i, i) = kJ;
      for (int i = 0; i < tag.q; ++i) cc.tau.A.at(tag.p + i, tag.p + i) = -kJ;
      break;
    }
    case Family::M3: {
      cc.form = SkewForm::darboux_even(n);
      cc.tau.a = Quat();
      cc.tau.d = 1;
      for (int i = 0; i < n / 2; ++i) cc.tau.A.at(i, i) = kOne;
      for (int i = 0; i < n / 2; ++i) cc.tau.A.at(n / 2 + i, n / 2 + i) = -kOne;
      break;
    }
  }
  if (!symtest(cc.tau).pass) throw std::logic_error("catalog tau fails symtest");
  return cc;
}

std::string format_torsion_tag(int n) { return "torsion:" + std::to_string(n); }

int parse_torsion_tag(const std::string& s) {
  if (s.rfind("torsion:", 0) != 0) throw std::invalid_argument("bad torsion tag: " + s);
  std::string rest = s.substr(8);
  size_t used = 0;
  int n = 0;
  try {
    n = std::stoi(rest, &used);
  } catch (...) {
    throw std::invalid_argument("bad torsion tag: " + s);
  }
  if (used != rest.size()) throw std::invalid_argument("bad torsion tag: " + s);
  if (n < 2) throw std::invalid_argument("constraint violated: n >= 2");
  return n;
}

std::vector<CaseTag> admissible_tags(int n) {
  if (n < 2) throw std::invalid_argument("constraint violated: n > 1");
  std::vector<CaseTag> out;
  if (n % 2 == 0) {
    for (int p = 0; p <= n / 2; ++p)
      for (int q = 0; p + q <= n / 2; ++q) out.push_back({Family::NsEven, n, p, q});
  } else {
    for (int p = 0; p <= (n - 1) / 2; ++p)
      for (int q = 0; p + q <= (n - 1) / 2; ++q) out.push_back({Family::NsOdd, n, p, q});
  }
  out.push_back({Family::M1, n, 0, 0});
  for (int p = 0; p <= n; ++p) out.push_back({Family::M2, n, p, n - p});
  if (n % 2 == 0) out.push_back({Family::M3, n, 0, 0});
  return out;
}

TorsionExample torsion_example(int n) {
  if (n < 2) throw std::invalid_argument("torsion example needs n >= 2");
  TorsionExample ex{TauElement{}, SkewForm::skew_hermitian(n), {}};
  ex.tauhat.n = n;
  ex.tauhat.a = kI;
  ex.tauhat.d = 3;
  ex.tauhat.A = QMat(n, n);
  ex.tauhat.A.at(0, 0) = Rational(2) * kJ;
  ex.tauhat.C = qvec_zero(n);
  ex.tauhat.C[0] = Quat(2, 0, 0, -2);

  // displayed lifted complement, parametrized by X1 in H and X2 in H^(n-1)
  auto lifted = [n](const Quat& x1, const QVec& x2) {
    QMat m(n + 2, n + 2);
    Rational t = 2 * (x1.x - x1.y);  // 2(x2 - x3) in the display's naming
    m.at(0, 0) = conj(x1) * (kK - kOne) + Quat(0, t, 0, 0);
    m.at(0, 1) = Rational(2) * conj(x1) + kI * conj(x1) * kJ;
    for (int k = 0; k < n - 1; ++k) m.at(0, 2 + k) = kI * conj(x2[static_cast<size_t>(k)]) * kJ;
    m.at(0, n + 1) = Quat::scalar(t);
    m.at(1, 0) = x1;
    for (int k = 0; k < n - 1; ++k)
      m.at(1, 2 + k) = (kI - kJ) * conj(x2[static_cast<size_t>(k)]) * kJ;
    m.at(1, n + 1) = Rational(2) * (kJ * x1) - x1 * kI;
    for (int r = 0; r < n - 1; ++r) {
      m.at(2 + r, 0) = x2[static_cast<size_t>(r)];
      m.at(2 + r, 1) = -(x2[static_cast<size_t>(r)] * (kOne + kK));
      m.at(2 + r, n + 1) = -(x2[static_cast<size_t>(r)] * kI);
    }
    m.at(n + 1, 1) = -(conj(x1) * kJ);
    for (int k = 0; k < n - 1; ++k) m.at(n + 1, 2 + k) = -(conj(x2[static_cast<size_t>(k)]) * kJ);
    m.at(n + 1, n + 1) = (kOne + kK) * x1 + Quat(0, t, 0, 0);
    return m;
  };
  for (int axis = 0; axis < 4; ++axis)
    ex.m_basis.push_back(lifted(Quat::unit(axis), qvec_zero(n - 1)));
  for (int s = 0; s < n - 1; ++s)
    for (int axis = 0; axis < 4; ++axis) {
      QVec x2 = qvec_zero(n - 1);
      x2[static_cast<size_t>(s)] = Quat::unit(axis);
      ex.m_basis.push_back(lifted(Quat(), x2));
    }
  return ex;
}

}  // namespace qsh
