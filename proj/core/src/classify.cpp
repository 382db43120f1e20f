#include "qsh/classify.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace qsh {

int NormalBlock::size() const {
  switch (kind) {
    case BlockKind::J1Zero: return 1;
    case BlockKind::J1bJ: return 1;
    case BlockKind::J2Zero: return 2;
    case BlockKind::BetaPair: return 2;
  }
  return 0;
}

// Right multiplication by s as a 4x4 real matrix over (1, i, j, k).
static RatMat right_mul_matrix(const Quat& s) {
  RatMat m(4, 4);
  for (int col = 0; col < 4; ++col) {
    Quat image = Quat::unit(col) * s;
    m.at(0, col) = image.w;
    m.at(1, col) = image.x;
    m.at(2, col) = image.y;
    m.at(3, col) = image.z;
  }
  return m;
}

static RatMat left_mul_matrix(const Quat& s) {
  RatMat m(4, 4);
  for (int col = 0; col < 4; ++col) {
    Quat image = s * Quat::unit(col);
    m.at(0, col) = image.w;
    m.at(1, col) = image.x;
    m.at(2, col) = image.y;
    m.at(3, col) = image.z;
  }
  return m;
}

RatMat block_residual(const NormalBlock& block, const Quat& a, const Rational& d) {
  if (!a.is_imaginary()) throw std::invalid_argument("block_residual: Re(a) = 0 required");
  // all conditions have the shape  x d + L x R - x a^2 (+ extra)
  Quat a2 = a * a;  // real scalar, a in sp(1)
  RatMat id = RatMat::identity(4);
  RatMat base = d * id - right_mul_matrix(a2);
  switch (block.kind) {
    case BlockKind::J1Zero:
      return base;
    case BlockKind::J2Zero:
      // size-1 condition at 0 plus the nilpotent condition x a = 0,
      // evaluated on the diagonal of the block: x d - x a^2 + 2 x a
      return base + Rational(2) * right_mul_matrix(a);
    case BlockKind::J1bJ: {
      // x d + 2b j x a - x a^2 + b^2 x
      Quat bj(0, 0, 2 * block.b, 0);
      return base + left_mul_matrix(bj) * right_mul_matrix(a) + (block.b * block.b) * id;
    }
    case BlockKind::BetaPair: {
      // x d + 2 beta x a - x a^2 - beta^2 x
      Quat beta(block.beta_re, block.beta_im, 0, 0);
      Quat beta2 = beta * beta;
      return base + left_mul_matrix(Rational(2) * beta) * right_mul_matrix(a) -
             left_mul_matrix(beta2);
    }
  }
  throw std::invalid_argument("unknown normal-form family");
}

bool block_admits(const NormalBlock& block, const Quat& a, const Rational& d) {
  return block_residual(block, a, d).is_zero();
}

BlockSolution block_solution(const NormalBlock& block) {
  BlockSolution s;
  switch (block.kind) {
    case BlockKind::J1Zero:
      s.mu_free = true;  // d = -mu^2
      return s;
    case BlockKind::J2Zero:
      s.fixed_d = 0;
      return s;
    case BlockKind::J1bJ:
      if (block.b <= 0) {
        s.empty = true;
        return s;
      }
      s.fixed_d = -(block.b * block.b);
      return s;
    case BlockKind::BetaPair:
      if (block.beta_im != 0 || block.beta_re <= 0) {
        s.empty = true;
        return s;
      }
      s.fixed_d = block.beta_re * block.beta_re;
      return s;
  }
  s.empty = true;
  return s;
}

static int kind_rank(BlockKind k) {
  switch (k) {
    case BlockKind::J1Zero: return 0;
    case BlockKind::J2Zero: return 1;
    case BlockKind::J1bJ: return 2;
    case BlockKind::BetaPair: return 3;
  }
  return 4;
}

static bool block_less(const NormalBlock& lhs, const NormalBlock& rhs) {
  if (kind_rank(lhs.kind) != kind_rank(rhs.kind)) return kind_rank(lhs.kind) < kind_rank(rhs.kind);
  if (lhs.kappa != rhs.kappa) return lhs.kappa > rhs.kappa;  // +1 before -1
  if (lhs.b != rhs.b) return lhs.b < rhs.b;
  if (lhs.beta_re != rhs.beta_re) return lhs.beta_re < rhs.beta_re;
  return lhs.beta_im < rhs.beta_im;
}

std::string NormalizedTriple::key() const {
  std::ostringstream os;
  os << "a=" << rat_to_string(a.w) << "," << rat_to_string(a.x) << "," << rat_to_string(a.y)
     << "," << rat_to_string(a.z) << ";d=" << rat_to_string(d) << ";";
  for (const NormalBlock& b : blocks) {
    switch (b.kind) {
      case BlockKind::J1Zero: os << "J1(0)"; break;
      case BlockKind::J2Zero: os << "J2(0," << (b.kappa > 0 ? "+" : "-") << ")"; break;
      case BlockKind::J1bJ:
        os << "J1(" << rat_to_string(b.b) << "j," << (b.kappa > 0 ? "+" : "-") << ")";
        break;
      case BlockKind::BetaPair:
        os << "Pair(" << rat_to_string(b.beta_re) << "+" << rat_to_string(b.beta_im) << "i)";
        break;
    }
    os << " ";
  }
  return os.str();
}

NormalizedTriple normalize(const Quat& a, std::vector<NormalBlock> blocks, const Rational& d) {
  if (!a.is_imaginary()) throw std::invalid_argument("normalize: Re(a) = 0 required");
  std::optional<Rational> mu = rat_sqrt(norm2(a));
  if (!mu) throw std::invalid_argument("normalize: |a| must be rational");

  NormalizedTriple out;
  out.blocks = std::move(blocks);
  // conjugation rotates a onto the ray >= 0 times i; only |a| survives
  out.a = Quat(0, *mu, 0, 0);
  out.d = d;

  Rational scale = 0;  // e^{2t}, 0 marks "none chosen"
  if (*mu != 0) {
    scale = 1 / *mu;
  } else {
    // leading continuous parameter, smallest first for determinism
    Rational lead = 0;
    for (const NormalBlock& b : out.blocks) {
      Rational param = 0;
      if (b.kind == BlockKind::J1bJ) param = b.b;
      if (b.kind == BlockKind::BetaPair && b.beta_im == 0) param = b.beta_re;
      if (param > 0 && (lead == 0 || param < lead)) lead = param;
    }
    if (lead > 0) scale = 1 / lead;
  }

  if (scale != 0) {
    // e^{2t} = scale, so d picks up e^{4t} = scale^2
    out.a = Quat(0, scale * *mu, 0, 0);
    out.d = d * scale * scale;
    for (NormalBlock& b : out.blocks) {
      b.b *= scale;
      b.beta_re *= scale;
      b.beta_im *= scale;
    }
  } else if (out.d != 0) {
    // no rotation or parameter freedom left: d scales into {-1, 0, 1}
    out.d = out.d > 0 ? Rational(1) : Rational(-1);
  }
  std::sort(out.blocks.begin(), out.blocks.end(), block_less);
  return out;
}

std::optional<CaseTag> match_tag(int n, const NormalizedTriple& t) {
  int total = 0;
  for (const NormalBlock& b : t.blocks) total += b.size();
  if (total != n) return std::nullopt;
  bool all_j1zero = true, all_j1bj = true, all_pairs = true, ns_mix = true;
  int p2 = 0, q2 = 0, pb = 0, qb = 0;
  for (const NormalBlock& b : t.blocks) {
    if (b.kind != BlockKind::J1Zero) all_j1zero = false;
    if (b.kind != BlockKind::J1bJ || b.b != 1) all_j1bj = false;
    if (b.kind != BlockKind::BetaPair || b.beta_re != 1 || b.beta_im != 0) all_pairs = false;
    if (b.kind == BlockKind::J2Zero)
      (b.kappa > 0 ? p2 : q2)++;
    else if (b.kind != BlockKind::J1Zero)
      ns_mix = false;
    if (b.kind == BlockKind::J1bJ) (b.kappa > 0 ? pb : qb)++;
  }
  Quat zero;
  if (all_j1zero && t.a == kI && t.d == -1) return CaseTag{Family::M1, n, 0, 0};
  if (ns_mix && t.a == zero && t.d == 0) {
    Family fam = (n % 2 == 0) ? Family::NsEven : Family::NsOdd;
    return CaseTag{fam, n, p2, q2};
  }
  if (all_j1bj && !t.blocks.empty() && t.a == zero && t.d == -1)
    return CaseTag{Family::M2, n, pb, qb};
  if (all_pairs && !t.blocks.empty() && t.a == zero && t.d == 1 && n % 2 == 0)
    return CaseTag{Family::M3, n, 0, 0};
  return std::nullopt;
}

std::vector<Rational> Grid::values() const {
  std::vector<Rational> out;
  for (int den = 1; den <= height; ++den)
    for (int num = -height; num <= height; ++num) {
      Rational v(num, den);
      v.canonicalize();
      if (v < -range || v > range) continue;
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct Atom {
  NormalBlock block;
  std::vector<std::pair<Rational, Rational>> admits;  // surviving (mu, d) grid points
};

// multisets of atom indices with sizes summing to n
void enumerate_multisets(const std::vector<Atom>& atoms, int n, int start,
                         std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < static_cast<int>(atoms.size()); ++i) {
    int s = atoms[static_cast<size_t>(i)].block.size();
    if (s > n) continue;
    cur.push_back(i);
    enumerate_multisets(atoms, n - s, i, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<NormalBlock> catalog_blocks(const CaseTag& tag) {
  std::vector<NormalBlock> blocks;
  switch (tag.family) {
    case Family::NsEven:
    case Family::NsOdd: {
      int h = tag.family == Family::NsOdd ? (tag.n - 1) / 2 : tag.n / 2;
      int c = h - (tag.p + tag.q);
      for (int i = 0; i < tag.p; ++i) blocks.push_back({BlockKind::J2Zero, +1, 0, 0, 0});
      for (int i = 0; i < tag.q; ++i) blocks.push_back({BlockKind::J2Zero, -1, 0, 0, 0});
      int singles = 2 * c + (tag.family == Family::NsOdd ? 1 : 0);
      for (int i = 0; i < singles; ++i) blocks.push_back({BlockKind::J1Zero, +1, 0, 0, 0});
      break;
    }
    case Family::M1:
      for (int i = 0; i < tag.n; ++i) blocks.push_back({BlockKind::J1Zero, +1, 0, 0, 0});
      break;
    case Family::M2:
      for (int i = 0; i < tag.p; ++i) blocks.push_back({BlockKind::J1bJ, +1, 1, 0, 0});
      for (int i = 0; i < tag.q; ++i) blocks.push_back({BlockKind::J1bJ, -1, 1, 0, 0});
      break;
    case Family::M3:
      for (int i = 0; i < tag.n / 2; ++i) blocks.push_back({BlockKind::BetaPair, +1, 0, 1, 0});
      break;
  }
  return blocks;
}

std::vector<ClassOutcome> classify_scan(int n, const Grid& grid, int threads) {
  if (n < 2) throw std::invalid_argument("classify_scan needs n > 1");
  std::vector<Rational> vals = grid.values();
  std::vector<Rational> pos, nonneg;
  for (const Rational& v : vals) {
    if (v > 0) pos.push_back(v);
    if (v >= 0) nonneg.push_back(v);
  }

  // atoms, each with its grid-restricted solution set
  std::vector<Atom> atoms;
  auto add_atom = [&](NormalBlock b) {
    Atom atom{b, {}};
    for (const Rational& mu : nonneg) {
      Quat a(0, mu, 0, 0);
      for (const Rational& d : vals)
        if (block_admits(b, a, d)) atom.admits.emplace_back(mu, d);
    }
    if (!atom.admits.empty()) atoms.push_back(std::move(atom));
  };
  add_atom({BlockKind::J1Zero, +1, 0, 0, 0});
  add_atom({BlockKind::J2Zero, +1, 0, 0, 0});
  add_atom({BlockKind::J2Zero, -1, 0, 0, 0});
  for (const Rational& b : pos) {
    add_atom({BlockKind::J1bJ, +1, b, 0, 0});
    add_atom({BlockKind::J1bJ, -1, b, 0, 0});
  }
  for (const Rational& re : pos)
    for (const Rational& im : nonneg) add_atom({BlockKind::BetaPair, +1, 0, re, im});

  std::vector<std::vector<int>> multisets;
  std::vector<int> cur;
  enumerate_multisets(atoms, n, 0, cur, multisets);

  auto scan_range = [&](size_t lo, size_t hi) {
    std::map<std::string, NormalizedTriple> found;
    for (size_t m = lo; m < hi; ++m) {
      const std::vector<int>& ids = multisets[m];
      // glue: (mu, d) admitted by every block
      std::vector<std::pair<Rational, Rational>> glue = atoms[static_cast<size_t>(ids[0])].admits;
      for (size_t t = 1; t < ids.size() && !glue.empty(); ++t) {
        const auto& other = atoms[static_cast<size_t>(ids[t])].admits;
        std::vector<std::pair<Rational, Rational>> next;
        for (const auto& pr : glue)
          if (std::find(other.begin(), other.end(), pr) != other.end()) next.push_back(pr);
        glue = std::move(next);
      }
      for (const auto& [mu, d] : glue) {
        std::vector<NormalBlock> blocks;
        for (int id : ids) blocks.push_back(atoms[static_cast<size_t>(id)].block);
        NormalizedTriple norm = normalize(Quat(0, mu, 0, 0), std::move(blocks), d);
        found.emplace(norm.key(), std::move(norm));
      }
    }
    return found;
  };

  unsigned hw = threads > 0 ? static_cast<unsigned>(threads)
                            : std::max(1u, std::thread::hardware_concurrency());
  hw = std::min<unsigned>(hw, 8);
  std::map<std::string, NormalizedTriple> merged;
  if (hw <= 1 || multisets.size() < 64) {
    merged = scan_range(0, multisets.size());
  } else {
    std::vector<std::future<std::map<std::string, NormalizedTriple>>> futs;
    size_t chunk = (multisets.size() + hw - 1) / hw;
    for (unsigned t = 0; t < hw; ++t) {
      size_t lo = std::min(multisets.size(), static_cast<size_t>(t) * chunk);
      size_t hi = std::min(multisets.size(), lo + chunk);
      if (lo < hi) futs.push_back(std::async(std::launch::async, scan_range, lo, hi));
    }
    for (auto& f : futs) merged.merge(f.get());
  }

  std::vector<ClassOutcome> out;
  for (auto& [key, norm] : merged) {
    ClassOutcome o{std::move(norm), "unmatched"};
    if (std::optional<CaseTag> tag = match_tag(n, o.normalized)) o.matched_tag = format_tag(*tag);
    out.push_back(std::move(o));
  }
  return out;  // map iteration is already sorted by key
}

}  // namespace qsh
