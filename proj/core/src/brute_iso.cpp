#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "nilalg/algebra.hpp"

// Exhaustive isomorphism search over F_p. Works on the transport convention:
// we look for rows F_0..F_{n-1} (F_i = image of the source basis vector e_i
// in target coordinates) with bracket_a(F_i, F_j) = sum_k cb[i][j][k] F_k.
// Any isomorphism maps A^k(b) onto A^k(a) and Ann(b) onto Ann(a), so row i
// is confined to the intersection of the corresponding target subspaces;
// rows are then placed most-constrained-first, and every bracket relation
// whose support is available is turned into a linear system on the next row
// instead of being enumerated.

namespace nilalg {

namespace {

using I64 = std::int64_t;
using FpVec = std::vector<I64>;
using FpMat = std::vector<FpVec>;

I64 mod_pos(I64 v, I64 p) {
  I64 r = v % p;
  return r < 0 ? r + p : r;
}

I64 inv_mod(I64 v, I64 p) {
  I64 acc = 1, base = mod_pos(v, p), e = p - 2;
  while (e > 0) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return acc;
}

// RREF in place; returns pivot columns.
std::vector<std::size_t> rref_mod(FpMat& m, I64 p) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols && lead < m.size(); ++col) {
    std::size_t piv = lead;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[lead]);
    I64 inv = inv_mod(m[lead][col], p);
    for (std::size_t c = col; c < cols; ++c) m[lead][c] = m[lead][c] * inv % p;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == lead || m[r][col] == 0) continue;
      I64 f = m[r][col];
      for (std::size_t c = col; c < cols; ++c)
        m[r][c] = mod_pos(m[r][c] - f * m[lead][c], p);
    }
    pivots.push_back(col);
    ++lead;
  }
  m.resize(pivots.size());
  return pivots;
}

// Solution set of M x = rhs as particular point + nullspace basis; empty
// optional when inconsistent.
struct AffineSolutions {
  FpVec point;
  FpMat null_basis;
};

std::optional<AffineSolutions> solve_affine(FpMat m, FpVec rhs, I64 p, std::size_t n) {
  FpMat aug;
  aug.reserve(m.size());
  for (std::size_t r = 0; r < m.size(); ++r) {
    FpVec row = m[r];
    row.push_back(mod_pos(rhs[r], p));
    aug.push_back(std::move(row));
  }
  if (aug.empty()) {
    AffineSolutions sol;
    sol.point.assign(n, 0);
    for (std::size_t c = 0; c < n; ++c) {
      FpVec v(n, 0);
      v[c] = 1;
      sol.null_basis.push_back(std::move(v));
    }
    return sol;
  }
  std::vector<std::size_t> pivots = rref_mod(aug, p);
  for (std::size_t k = 0; k < pivots.size(); ++k)
    if (pivots[k] == n) return std::nullopt;  // 0 = 1 row
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivots)
    if (c < n) is_pivot[c] = true;
  AffineSolutions sol;
  sol.point.assign(n, 0);
  for (std::size_t k = 0; k < pivots.size(); ++k) sol.point[pivots[k]] = aug[k][n];
  for (std::size_t freec = 0; freec < n; ++freec) {
    if (is_pivot[freec]) continue;
    FpVec v(n, 0);
    v[freec] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k)
      v[pivots[k]] = mod_pos(-aug[k][freec], p);
    sol.null_basis.push_back(std::move(v));
  }
  return sol;
}

struct Search {
  I64 p = 0;
  std::size_t n = 0;
  std::vector<std::vector<FpVec>> ca;  // target bracket table, all (i,j)
  std::vector<std::vector<FpVec>> cb;  // source bracket table, all (i,j)
  std::vector<FpMat> row_checks;       // per row: H with S_i = {x : Hx = 0}
  std::vector<std::size_t> order;      // row placement order
  std::uint64_t budget = 0;
  std::uint64_t nodes = 0;

  std::vector<FpVec> rows;   // chosen images, indexed by row
  std::vector<bool> placed;
  FpMat echelon;             // incremental echelon of chosen rows

  FpVec bracket(const FpVec& x, const FpVec& y) const {
    FpVec acc(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (y[j] == 0) continue;
        I64 w = x[i] * y[j] % p;
        const FpVec& c = ca[i][j];
        for (std::size_t k = 0; k < n; ++k)
          if (c[k] != 0) acc[k] = (acc[k] + w * c[k]) % p;
      }
    }
    return acc;
  }

  // Reduce v against the incremental echelon; true if it extends the span.
  bool extends_rank(const FpVec& v, FpVec* reduced) const {
    FpVec w = v;
    for (const FpVec& e : echelon) {
      std::size_t lead = 0;
      while (lead < n && e[lead] == 0) ++lead;
      if (lead == n) continue;
      I64 f = w[lead];
      if (f == 0) continue;
      for (std::size_t c = lead; c < n; ++c) w[c] = mod_pos(w[c] - f * e[c], p);
    }
    bool nonzero = std::any_of(w.begin(), w.end(), [](I64 x) { return x != 0; });
    if (nonzero && reduced) {
      // normalize leading entry to 1
      std::size_t lead = 0;
      while (w[lead] == 0) ++lead;
      I64 inv = inv_mod(w[lead], p);
      for (std::size_t c = lead; c < n; ++c) w[c] = w[c] * inv % p;
      *reduced = std::move(w);
    }
    return nonzero;
  }

  bool verify_all() const {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        FpVec lhs = bracket(rows[i], rows[j]);
        FpVec rhs(n, 0);
        for (std::size_t k = 0; k < n; ++k) {
          I64 c = cb[i][j][k];
          if (c == 0) continue;
          for (std::size_t m = 0; m < n; ++m) rhs[m] = (rhs[m] + c * rows[k][m]) % p;
        }
        if (lhs != rhs) return false;
      }
    return true;
  }

  // Linear system on the row being placed, collected from membership
  // constraints and every bracket relation whose support is now complete.
  bool build_system(std::size_t r, FpMat& m, FpVec& rhs) const {
    for (const FpVec& h : row_checks[r]) {
      m.push_back(h);
      rhs.push_back(0);
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        bool involves_r = (i == r || j == r || cb[i][j][r] != 0);
        if (!involves_r) continue;
        bool ready = true;
        for (std::size_t k = 0; k < n && ready; ++k)
          if (k != r && cb[i][j][k] != 0 && !placed[k]) ready = false;
        if (i != r && !placed[i]) ready = false;
        if (j != r && !placed[j]) ready = false;
        if (!ready) continue;

        if (i != r && j != r) {
          // c^r F_r = [F_i,F_j] - sum_{k placed} c^k F_k, full n rows.
          FpVec v = bracket(rows[i], rows[j]);
          for (std::size_t k = 0; k < n; ++k) {
            I64 c = cb[i][j][k];
            if (c == 0 || k == r) continue;
            for (std::size_t mr = 0; mr < n; ++mr)
              v[mr] = mod_pos(v[mr] - c * rows[k][mr], p);
          }
          I64 cr = cb[i][j][r];
          for (std::size_t mr = 0; mr < n; ++mr) {
            FpVec row(n, 0);
            row[mr] = mod_pos(cr, p);
            m.push_back(std::move(row));
            rhs.push_back(v[mr]);
          }
        } else {
          // One argument is the new row: (±L_{F_other} - c^r I) F_r = v.
          std::size_t other = (i == r) ? j : i;
          I64 sign = (i == r) ? -1 : 1;  // [F_r,F_other] = -[F_other,F_r]
          FpVec v(n, 0);
          for (std::size_t k = 0; k < n; ++k) {
            I64 c = cb[i][j][k];
            if (c == 0 || k == r) continue;
            for (std::size_t mr = 0; mr < n; ++mr)
              v[mr] = (v[mr] + c * rows[k][mr]) % p;
          }
          I64 cr = cb[i][j][r];
          for (std::size_t mr = 0; mr < n; ++mr) {
            FpVec row(n, 0);
            for (std::size_t c = 0; c < n; ++c) {
              // (L_{F_other})_{mr,c} = [F_other, e_c]_mr
              I64 l = 0;
              for (std::size_t s = 0; s < n; ++s)
                if (rows[other][s] != 0 && ca[s][c][mr] != 0)
                  l = (l + rows[other][s] * ca[s][c][mr]) % p;
              row[c] = mod_pos(sign * l, p);
            }
            row[r] = mod_pos(row[r] - cr, p);
            m.push_back(std::move(row));
            rhs.push_back(v[mr]);
          }
        }
      }
    return true;
  }

  bool dfs(std::size_t depth) {
    if (depth == n) return verify_all();
    std::size_t r = order[depth];
    FpMat m;
    FpVec rhs;
    build_system(r, m, rhs);
    auto sol = solve_affine(std::move(m), std::move(rhs), p, n);
    if (!sol) return false;

    const std::size_t free_dims = sol->null_basis.size();
    std::vector<std::size_t> counter(free_dims, 0);
    FpVec cand(n, 0);
    for (;;) {
      if (++nodes > budget)
        fail(Errc::SearchSpaceTooLarge, "brute_iso exceeded node budget");
      // candidate = point + sum counter_k * null_k
      cand = sol->point;
      for (std::size_t k = 0; k < free_dims; ++k) {
        I64 coeff = static_cast<I64>(counter[k]);
        if (coeff == 0) continue;
        for (std::size_t c = 0; c < n; ++c)
          cand[c] = (cand[c] + coeff * sol->null_basis[k][c]) % p;
      }
      FpVec reduced;
      if (extends_rank(cand, &reduced)) {
        rows[r] = cand;
        placed[r] = true;
        echelon.push_back(reduced);
        if (dfs(depth + 1)) return true;
        echelon.pop_back();
        placed[r] = false;
      }
      // odometer over the free coefficients
      std::size_t k = 0;
      while (k < free_dims) {
        if (++counter[k] < static_cast<std::size_t>(p)) break;
        counter[k] = 0;
        ++k;
      }
      if (k == free_dims) break;
    }
    return false;
  }
};

std::vector<std::vector<FpVec>> bracket_table(const Algebra& alg) {
  const std::size_t n = alg.dim();
  std::vector<std::vector<FpVec>> t(n, std::vector<FpVec>(n, FpVec(n, 0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec v = alg.bracket_basis(i, j);
      for (std::size_t k = 0; k < n; ++k) t[i][j][k] = v[k].residue_value();
    }
  return t;
}

FpMat to_fp_rows(const Subspace& s) {
  FpMat m;
  for (std::size_t r = 0; r < s.dim(); ++r) {
    Vec v = s.basis_vector(r);
    FpVec row(v.size());
    for (std::size_t c = 0; c < v.size(); ++c) row[c] = v[c].residue_value();
    m.push_back(std::move(row));
  }
  return m;
}

// Check matrix H with rowspace(B) = {x : Hx = 0}.
FpMat check_matrix(const FpMat& basis, std::size_t n, I64 p) {
  FpMat m = basis;
  std::vector<std::size_t> pivots = rref_mod(m, p);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  FpMat h;
  for (std::size_t freec = 0; freec < n; ++freec) {
    if (is_pivot[freec]) continue;
    FpVec v(n, 0);
    v[freec] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = mod_pos(-m[k][freec], p);
    h.push_back(std::move(v));
  }
  return h;
}

}  // namespace

std::optional<LinearMap> brute_iso(const Algebra& a, const Algebra& b, std::uint64_t budget) {
  if (a.field() != b.field()) fail(Errc::MixedFields, "brute_iso");
  if (a.field().kind != FieldKind::Prime)
    fail(Errc::InvalidField, "brute_iso requires a prime field");
  if (a.dim() != b.dim()) return std::nullopt;
  const std::size_t n = a.dim();
  const I64 p = a.field().p;
  if (n == 0) return LinearMap{Matrix::identity(a.field(), 0)};

  PowerFiltration pfa = power_filtration(a);
  PowerFiltration pfb = power_filtration(b);
  if (pfa.dims() != pfb.dims() || pfa.nilpotent != pfb.nilpotent) return std::nullopt;
  Subspace ann_a = annihilator(a);
  Subspace ann_b = annihilator(b);
  if (ann_a.dim() != ann_b.dim()) return std::nullopt;

  Search s;
  s.p = p;
  s.n = n;
  s.ca = bracket_table(a);
  s.cb = bracket_table(b);
  s.budget = budget;
  s.rows.assign(n, FpVec(n, 0));
  s.placed.assign(n, false);

  // Constraint subspace per source basis vector, as a check matrix.
  std::vector<std::size_t> constraint_dim(n, n);
  s.row_checks.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec ei = unit_vec(b.field(), n, i);
    Subspace constraint = Subspace::full(a.field(), n);
    for (std::size_t lvl = 1; lvl < pfb.terms.size(); ++lvl)
      if (pfb.terms[lvl].contains_vector(ei)) constraint = intersect(constraint, pfa.terms[lvl]);
    if (ann_b.contains_vector(ei)) constraint = intersect(constraint, ann_a);
    constraint_dim[i] = constraint.dim();
    s.row_checks[i] = check_matrix(to_fp_rows(constraint), n, p);
  }

  s.order.resize(n);
  std::iota(s.order.begin(), s.order.end(), 0);
  std::stable_sort(s.order.begin(), s.order.end(),
                   [&](std::size_t x, std::size_t y) { return constraint_dim[x] < constraint_dim[y]; });

  if (!s.dfs(0)) return std::nullopt;

  Matrix m(a.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < n; ++r) m.at(r, i) = Scalar::residue(s.rows[i][r], p);
  return LinearMap{std::move(m)};
}

}  // namespace nilalg
