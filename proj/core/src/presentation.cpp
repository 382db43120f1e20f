#include "qsh/presentation.hpp"

#include <stdexcept>

namespace qsh {

RatVec LiePresentation::bracket(const RatVec& u, const RatVec& v) const {
  if (u.size() != static_cast<size_t>(dim) || v.size() != static_cast<size_t>(dim))
    throw std::invalid_argument("bracket operands of wrong dimension");
  RatVec out(static_cast<size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    if (u[static_cast<size_t>(i)] == 0) continue;
    for (int j = 0; j < dim; ++j) {
      if (v[static_cast<size_t>(j)] == 0) continue;
      Rational f = u[static_cast<size_t>(i)] * v[static_cast<size_t>(j)];
      const RatVec& cij = c[static_cast<size_t>(i)][static_cast<size_t>(j)];
      for (int k = 0; k < dim; ++k)
        if (cij[static_cast<size_t>(k)] != 0) out[static_cast<size_t>(k)] += f * cij[static_cast<size_t>(k)];
    }
  }
  return out;
}

RatMat LiePresentation::ad(int i) const {
  RatMat m(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int k = 0; k < dim; ++k) m.at(k, j) = c[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)];
  return m;
}

RatMat LiePresentation::ad(const RatVec& v) const {
  RatMat m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    if (v[static_cast<size_t>(i)] == 0) continue;
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) {
        const Rational& x = c[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)];
        if (x != 0) m.at(k, j) += v[static_cast<size_t>(i)] * x;
      }
  }
  return m;
}

bool LiePresentation::well_formed() const {
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k)
        if (c[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)] !=
            -c[static_cast<size_t>(j)][static_cast<size_t>(i)][static_cast<size_t>(k)])
          return false;
  // Jacobi on basis triples
  RatVec ei(static_cast<size_t>(dim)), ej(static_cast<size_t>(dim)), ek(static_cast<size_t>(dim));
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      for (int k = j + 1; k < dim; ++k) {
        RatVec s(static_cast<size_t>(dim));
        const RatVec& cij = c[static_cast<size_t>(i)][static_cast<size_t>(j)];
        const RatVec& cjk = c[static_cast<size_t>(j)][static_cast<size_t>(k)];
        const RatVec& cki = c[static_cast<size_t>(k)][static_cast<size_t>(i)];
        for (int t = 0; t < dim; ++t) {
          if (cij[static_cast<size_t>(t)] != 0) {
            const RatVec& ctk = c[static_cast<size_t>(t)][static_cast<size_t>(k)];
            for (int u = 0; u < dim; ++u)
              if (ctk[static_cast<size_t>(u)] != 0) s[static_cast<size_t>(u)] += cij[static_cast<size_t>(t)] * ctk[static_cast<size_t>(u)];
          }
          if (cjk[static_cast<size_t>(t)] != 0) {
            const RatVec& cti = c[static_cast<size_t>(t)][static_cast<size_t>(i)];
            for (int u = 0; u < dim; ++u)
              if (cti[static_cast<size_t>(u)] != 0) s[static_cast<size_t>(u)] += cjk[static_cast<size_t>(t)] * cti[static_cast<size_t>(u)];
          }
          if (cki[static_cast<size_t>(t)] != 0) {
            const RatVec& ctj = c[static_cast<size_t>(t)][static_cast<size_t>(j)];
            for (int u = 0; u < dim; ++u)
              if (ctj[static_cast<size_t>(u)] != 0) s[static_cast<size_t>(u)] += cki[static_cast<size_t>(t)] * ctj[static_cast<size_t>(u)];
          }
        }
        if (!is_zero(s)) return false;
      }
  return true;
}

LiePresentation presentation_with_complement(const Subspace& s, const Subspace& t,
                                             const std::vector<RatVec>& complement,
                                             const BracketFn& bracket) {
  if (!s.contains(t)) throw std::invalid_argument("T not contained in S");
  // [S, T] subset T, verified on basis pairs
  for (const RatVec& u : s.basis())
    for (const RatVec& v : t.basis())
      if (!t.contains(bracket(u, v))) throw std::invalid_argument("not an ideal of S");
  if (static_cast<int>(complement.size()) + t.dim() != s.dim())
    throw std::invalid_argument("complement has wrong dimension");

  std::vector<RatVec> generators(complement);
  for (const RatVec& v : t.basis()) generators.push_back(v);
  SpanSolver solver(generators);

  const int n = static_cast<int>(complement.size());
  LiePresentation p;
  p.dim = n;
  p.c.assign(static_cast<size_t>(n), std::vector<RatVec>(static_cast<size_t>(n), RatVec(static_cast<size_t>(n))));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      RatVec w = bracket(complement[static_cast<size_t>(i)], complement[static_cast<size_t>(j)]);
      std::optional<RatVec> coeff = solver.coefficients(w);
      if (!coeff) throw std::invalid_argument("bracket leaves S");
      for (int k = 0; k < n; ++k) {
        p.c[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)] = (*coeff)[static_cast<size_t>(k)];
        p.c[static_cast<size_t>(j)][static_cast<size_t>(i)][static_cast<size_t>(k)] = -(*coeff)[static_cast<size_t>(k)];
      }
    }
  return p;
}

LiePresentation quotient_presentation(const Subspace& s, const Subspace& t,
                                      const BracketFn& bracket) {
  // complement = rows of S whose S-coordinates are non-pivot for T
  std::vector<RatVec> srows = s.basis();
  // T in S-coordinates
  SpanSolver coords(srows);
  RatMat tmat(t.dim(), s.dim());
  for (int r = 0; r < t.dim(); ++r) {
    std::optional<RatVec> cc = coords.coefficients(t.basis()[static_cast<size_t>(r)]);
    if (!cc) throw std::invalid_argument("T not contained in S");
    for (int c2 = 0; c2 < s.dim(); ++c2) tmat.at(r, c2) = (*cc)[static_cast<size_t>(c2)];
  }
  Subspace tcoords = Subspace::span(s.dim(), [&] {
    std::vector<RatVec> rows;
    for (int r = 0; r < t.dim(); ++r) {
      RatVec row(static_cast<size_t>(s.dim()));
      for (int c2 = 0; c2 < s.dim(); ++c2) row[static_cast<size_t>(c2)] = tmat.at(r, c2);
      rows.push_back(std::move(row));
    }
    return rows;
  }());
  std::vector<bool> pivot(static_cast<size_t>(s.dim()), false);
  for (const RatVec& row : tcoords.basis())
    for (int c2 = 0; c2 < s.dim(); ++c2)
      if (row[static_cast<size_t>(c2)] != 0) {
        pivot[static_cast<size_t>(c2)] = true;
        break;
      }
  std::vector<RatVec> complement;
  for (int r = 0; r < s.dim(); ++r)
    if (!pivot[static_cast<size_t>(r)]) complement.push_back(srows[static_cast<size_t>(r)]);
  return presentation_with_complement(s, t, complement, bracket);
}

RatMat killing_form(const LiePresentation& p) {
  const int n = p.dim;
  RatMat b(n, n);
  // B_ij = sum_{k,l} c[i][l][k] c[j][k][l]
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Rational s = 0;
      for (int l = 0; l < n; ++l) {
        const RatVec& cil = p.c[static_cast<size_t>(i)][static_cast<size_t>(l)];
        for (int k = 0; k < n; ++k) {
          if (cil[static_cast<size_t>(k)] == 0) continue;
          const Rational& other = p.c[static_cast<size_t>(j)][static_cast<size_t>(k)][static_cast<size_t>(l)];
          if (other != 0) s += cil[static_cast<size_t>(k)] * other;
        }
      }
      b.at(i, j) = s;
      b.at(j, i) = s;
    }
  return b;
}

Subspace whole_space(const LiePresentation& p) {
  std::vector<RatVec> rows;
  for (int i = 0; i < p.dim; ++i) {
    RatVec v(static_cast<size_t>(p.dim));
    v[static_cast<size_t>(i)] = 1;
    rows.push_back(std::move(v));
  }
  return Subspace::span(p.dim, rows);
}

Subspace derived_subspace(const LiePresentation& p, const Subspace& u, const Subspace& v) {
  Subspace out(p.dim);
  for (const RatVec& a : u.basis())
    for (const RatVec& b : v.basis()) out.insert(p.bracket(a, b));
  return out;
}

bool is_solvable(const LiePresentation& p, const Subspace& u) {
  Subspace cur = u;
  for (int step = 0; step <= p.dim; ++step) {
    if (cur.dim() == 0) return true;
    Subspace next = derived_subspace(p, cur, cur);
    if (next.dim() == cur.dim()) return false;  // stabilized nonzero
    cur = next;
  }
  return false;
}

Subspace radical(const LiePresentation& p) {
  Subspace derived = derived_subspace(p, whole_space(p), whole_space(p));
  RatMat b = killing_form(p);
  // constraints: B(x, w) = 0 for w spanning [g, g]
  RatMat cons(derived.dim(), p.dim);
  for (int r = 0; r < derived.dim(); ++r) {
    RatVec bw = mat_vec(b, derived.basis()[static_cast<size_t>(r)]);
    for (int c2 = 0; c2 < p.dim; ++c2) cons.at(r, c2) = bw[static_cast<size_t>(c2)];
  }
  Subspace rad = Subspace::span(p.dim, kernel_basis(cons));
  // internal consistency: must be a solvable ideal
  for (int i = 0; i < p.dim; ++i) {
    RatVec ei(static_cast<size_t>(p.dim));
    ei[static_cast<size_t>(i)] = 1;
    for (const RatVec& x : rad.basis())
      if (!rad.contains(p.bracket(ei, x))) throw std::logic_error("radical not an ideal");
  }
  if (!is_solvable(p, rad)) throw std::logic_error("radical not solvable");
  return rad;
}

Subspace max_ideal_in(const LiePresentation& p, const Subspace& l) {
  Subspace cur = l;
  while (true) {
    // next = {x in cur : [g, x] subset cur}
    // basis-wise: columns = coefficients over cur-basis, constraints from each ad(e_i)
    const int d = cur.dim();
    if (d == 0) return cur;
    std::vector<RatVec> constraints;
    for (int i = 0; i < p.dim; ++i) {
      RatVec ei(static_cast<size_t>(p.dim));
      ei[static_cast<size_t>(i)] = 1;
      for (int g = 0; g < d; ++g) {
        RatVec res = cur.reduce(p.bracket(ei, cur.basis()[static_cast<size_t>(g)]));
        constraints.push_back(std::move(res));  // linear in the cur-coefficients
      }
    }
    // x = sum_g y_g cur_g must satisfy: residues combine to zero.
    // Rows indexed by (i, coordinate), columns by g.
    RatMat m(p.dim * p.dim, d);
    for (int i = 0; i < p.dim; ++i)
      for (int g = 0; g < d; ++g) {
        const RatVec& res = constraints[static_cast<size_t>(i) * d + static_cast<size_t>(g)];
        for (int t = 0; t < p.dim; ++t) m.at(i * p.dim + t, g) = res[static_cast<size_t>(t)];
      }
    std::vector<RatVec> null = kernel_basis(m);
    Subspace next(p.dim);
    for (const RatVec& y : null) {
      RatVec x(static_cast<size_t>(p.dim));
      for (int g = 0; g < d; ++g) {
        if (y[static_cast<size_t>(g)] == 0) continue;
        for (int t = 0; t < p.dim; ++t)
          x[static_cast<size_t>(t)] += y[static_cast<size_t>(g)] * cur.basis()[static_cast<size_t>(g)][static_cast<size_t>(t)];
      }
      next.insert(std::move(x));
    }
    if (next.dim() == cur.dim()) return next;
    cur = next;
  }
}

}  // namespace qsh
