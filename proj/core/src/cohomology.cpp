#include "nilalg/cohomology.hpp"

#include <sstream>
#include <stdexcept>

namespace nilalg {

std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n) {
  // lexicographic rank of (i,j), i < j, 0-based
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::pair<std::size_t, std::size_t> pair_from_index(std::size_t idx, std::size_t n) {
  std::size_t i = 0;
  std::size_t block = n - 1;
  while (idx >= block) {
    idx -= block;
    ++i;
    --block;
  }
  return {i, i + 1 + idx};
}

SkewForm SkewForm::delta(const FieldSpec& f, std::size_t dim, std::size_t i, std::size_t j) {
  SkewForm t(f, dim);
  t.set(i, j, Scalar::one(f));
  return t;
}

SkewForm SkewForm::from_coords(const FieldSpec& f, std::size_t dim, const Vec& coords) {
  if (coords.size() != pair_count(dim)) fail(Errc::DimensionMismatch, "skew form coords");
  SkewForm t(f, dim);
  for (std::size_t idx = 0; idx < coords.size(); ++idx) {
    if (coords[idx].is_zero()) continue;
    auto [i, j] = pair_from_index(idx, dim);
    t.set(i, j, coords[idx]);
  }
  return t;
}

void SkewForm::set(std::size_t i, std::size_t j, const Scalar& c) {
  if (i >= j || j >= dim_) fail(Errc::DimensionMismatch, "SkewForm::set requires i < j < dim");
  if (c.field() != field_) fail(Errc::MixedFields, "SkewForm::set");
  if (c.is_zero())
    coeffs_.erase({i, j});
  else
    coeffs_[{i, j}] = c;
}

Scalar SkewForm::coeff(std::size_t i, std::size_t j) const {
  if (i == j) return Scalar::zero(field_);
  bool flip = i > j;
  auto it = coeffs_.find(flip ? std::pair{j, i} : std::pair{i, j});
  if (it == coeffs_.end()) return Scalar::zero(field_);
  return flip ? -it->second : it->second;
}

Scalar SkewForm::eval(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_) fail(Errc::DimensionMismatch, "SkewForm::eval");
  Scalar acc = Scalar::zero(field_);
  for (const auto& [key, c] : coeffs_) {
    const auto [i, j] = key;
    acc += c * (x[i] * y[j] - x[j] * y[i]);
  }
  return acc;
}

Matrix SkewForm::gram() const {
  Matrix g(field_, dim_, dim_);
  for (const auto& [key, c] : coeffs_) {
    const auto [i, j] = key;
    g.at(i, j) = c;
    g.at(j, i) = -c;
  }
  return g;
}

Vec SkewForm::coords() const {
  Vec v = zero_vec(field_, pair_count(dim_));
  for (const auto& [key, c] : coeffs_) v[pair_index(key.first, key.second, dim_)] = c;
  return v;
}

SkewForm SkewForm::operator+(const SkewForm& o) const {
  if (field_ != o.field_ || dim_ != o.dim_) fail(Errc::MixedFields, "SkewForm +");
  SkewForm r = *this;
  for (const auto& [key, c] : o.coeffs_) {
    Scalar s = r.coeff(key.first, key.second) + c;
    r.set(key.first, key.second, s);
  }
  return r;
}

SkewForm SkewForm::operator-(const SkewForm& o) const {
  if (field_ != o.field_ || dim_ != o.dim_) fail(Errc::MixedFields, "SkewForm -");
  SkewForm r = *this;
  for (const auto& [key, c] : o.coeffs_) {
    Scalar s = r.coeff(key.first, key.second) - c;
    r.set(key.first, key.second, s);
  }
  return r;
}

SkewForm operator*(const Scalar& c, const SkewForm& t) {
  SkewForm r(t.field_, t.dim_);
  if (c.is_zero()) return r;
  for (const auto& [key, v] : t.coeffs_) r.set(key.first, key.second, c * v);
  return r;
}

bool SkewForm::operator==(const SkewForm& o) const {
  return field_ == o.field_ && dim_ == o.dim_ && coeffs_ == o.coeffs_;
}

std::string SkewForm::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : coeffs_) {
    std::string cs = c.str();
    bool negated = false;
    Scalar minus_c = -c;
    if (!first && cs.size() && cs[0] == '-') {
      // prefer "a - b" over "a + -b" for plain negative leading coefficients
      std::string ms = minus_c.str();
      if (ms.empty() || ms[0] != '-') {
        negated = true;
        cs = ms;
      }
    }
    if (!first) os << (negated ? " - " : " + ");
    if (first && c == -Scalar::one(field_)) {
      os << "-";
    } else if (!(c.is_one() || (!first && negated && minus_c.is_one()))) {
      bool needs_parens = cs.find('+') != std::string::npos ||
                          cs.find('-', 1) != std::string::npos ||
                          cs.find(" mod ") != std::string::npos;
      if (needs_parens)
        os << "(" << cs << ")*";
      else
        os << cs << "*";
    }
    os << "D" << key.first + 1 << key.second + 1;
    first = false;
  }
  return os.str();
}

namespace {

std::vector<Vec> basis_vectors(const FieldSpec& f, std::size_t n) {
  std::vector<Vec> e;
  for (std::size_t k = 0; k < n; ++k) e.push_back(unit_vec(f, n, k));
  return e;
}

// Adds the Delta-coordinate row of (u,v) |-> theta(u,v) to acc.
void accumulate_theta_row(Vec& acc, const Vec& u, const Vec& v, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const bool ui = !u[i].is_zero(), vi = !v[i].is_zero();
    if (!ui && !vi) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool t1 = ui && !v[j].is_zero();
      const bool t2 = vi && !u[j].is_zero();
      if (!t1 && !t2) continue;
      Scalar w = u[i] * v[j] - u[j] * v[i];
      if (!w.is_zero()) acc[pair_index(i, j, n)] += w;
    }
  }
}

// Cached basis brackets for the quadruple loops.
struct BracketCache {
  const Algebra& a;
  std::size_t n;
  std::vector<Vec> t;
  std::vector<bool> nonzero;
  explicit BracketCache(const Algebra& alg) : a(alg), n(alg.dim()), t(n * n), nonzero(n * n) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        t[i * n + j] = a.bracket_basis(i, j);
        nonzero[i * n + j] = !is_zero_vec(t[i * n + j]);
      }
  }
  const Vec& at(std::size_t i, std::size_t j) const { return t[i * n + j]; }
  bool nz(std::size_t i, std::size_t j) const { return nonzero[i * n + j]; }
};

// psi_theta(v, e_y, e_z) = theta([v,e_y],e_z) + theta([e_y,e_z],v)
// + theta([e_z,v],e_y) as a row over the Delta coordinates; v is a basis
// bracket (the row vanishes identically when v = 0).
void accumulate_psi_row(Vec& acc, const BracketCache& bc, const Vec& v, std::size_t y,
                        std::size_t z) {
  const std::size_t n = bc.n;
  if (is_zero_vec(v)) return;
  Vec ey = unit_vec(bc.a.field(), n, y);
  Vec ez = unit_vec(bc.a.field(), n, z);
  accumulate_theta_row(acc, bc.a.bracket(v, ey), ez, n);
  if (bc.nz(y, z)) accumulate_theta_row(acc, bc.at(y, z), v, n);
  accumulate_theta_row(acc, bc.a.bracket(ez, v), ey, n);
}

void guard_unlinearized(const Algebra& a, const Subspace& space, std::uint64_t seed,
                        int samples = 200) {
  const std::size_t n = a.dim();
  Rng rng(seed);
  for (std::size_t b = 0; b < space.dim(); ++b) {
    SkewForm theta = SkewForm::from_coords(a.field(), n, space.basis_vector(b));
    Rng local = rng.fork();
    for (int s = 0; s < samples; ++s) {
      Vec x = local.vector(a.field(), n);
      Vec y = local.vector(a.field(), n);
      Vec xy = a.bracket(x, y);
      Scalar lhs = theta.eval(a.bracket(xy, x), y);
      Scalar rhs = theta.eval(a.bracket(xy, y), x);
      if (lhs != rhs)
        throw std::logic_error(
            "cocycle guard failed: linearized solution violates the unlinearized condition");
    }
  }
}

}  // namespace

Subspace z2(const Algebra& a, CocycleFlavor flavor, std::uint64_t seed) {
  const std::size_t n = a.dim();
  const FieldSpec& f = a.field();
  const std::size_t nc = pair_count(n);
  std::vector<Vec> e = basis_vectors(f, n);
  BracketCache bc(a);

  std::vector<Vec> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          // psi([x,y],z,t) + psi([x,t],z,y) + psi([z,y],x,t) + psi([z,t],x,y)
          if (!bc.nz(i, j) && !bc.nz(i, l) && !bc.nz(k, j) && !bc.nz(k, l)) continue;
          Vec row = zero_vec(f, nc);
          accumulate_psi_row(row, bc, bc.at(i, j), k, l);
          accumulate_psi_row(row, bc, bc.at(i, l), k, j);
          accumulate_psi_row(row, bc, bc.at(k, j), i, l);
          accumulate_psi_row(row, bc, bc.at(k, l), i, j);
          if (!is_zero_vec(row)) rows.push_back(std::move(row));
        }
  Subspace bl = rows.empty() ? Subspace::full(f, nc)
                             : nullspace(Matrix::from_rows(f, rows, nc));

  if (flavor == CocycleFlavor::M) {
    std::vector<Vec> mrows;
    for (std::size_t w = 0; w < n; ++w)
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          for (std::size_t z = 0; z < n; ++z) {
            // theta([w,y],[x,z]) - theta([[w,x],y],z) - theta([[x,y],z],w)
            // - theta([[y,z],w],x) - theta([[z,w],x],y)
            bool first = bc.nz(w, y) && bc.nz(x, z);
            if (!first && !bc.nz(w, x) && !bc.nz(x, y) && !bc.nz(y, z) && !bc.nz(z, w)) continue;
            Vec row = zero_vec(f, nc);
            if (first) accumulate_theta_row(row, bc.at(w, y), bc.at(x, z), n);
            Vec neg = zero_vec(f, nc);
            if (bc.nz(w, x)) accumulate_theta_row(neg, a.bracket(bc.at(w, x), e[y]), e[z], n);
            if (bc.nz(x, y)) accumulate_theta_row(neg, a.bracket(bc.at(x, y), e[z]), e[w], n);
            if (bc.nz(y, z)) accumulate_theta_row(neg, a.bracket(bc.at(y, z), e[w]), e[x], n);
            if (bc.nz(z, w)) accumulate_theta_row(neg, a.bracket(bc.at(z, w), e[x]), e[y], n);
            row = sub(row, neg);
            if (!is_zero_vec(row)) mrows.push_back(std::move(row));
          }
    Subspace m = mrows.empty() ? Subspace::full(f, nc)
                               : nullspace(Matrix::from_rows(f, mrows, nc));
    Subspace result = intersect(bl, m);
    guard_unlinearized(a, result, seed);
    return result;
  }

  guard_unlinearized(a, bl, seed);
  return bl;
}

Subspace b2(const Algebra& a) {
  const std::size_t n = a.dim();
  const std::size_t nc = pair_count(n);
  std::vector<Vec> gens;
  for (std::size_t k = 0; k < n; ++k) {
    Vec row = zero_vec(a.field(), nc);
    for (const auto& [key, coeffs] : a.constants())
      if (!coeffs[k].is_zero()) row[pair_index(key.first, key.second, n)] = coeffs[k];
    gens.push_back(std::move(row));
  }
  return Subspace::span(a.field(), nc, gens);
}

std::vector<SkewForm> CohomologySpace::h2_basis_forms() const {
  std::vector<SkewForm> forms;
  for (std::size_t k = 0; k < h2_complement.dim(); ++k)
    forms.push_back(SkewForm::from_coords(algebra.field(), algebra.dim(),
                                          h2_complement.basis_vector(k)));
  return forms;
}

CohomologySpace h2(const Algebra& a, CocycleFlavor flavor, std::uint64_t seed) {
  CohomologySpace s;
  s.algebra = a;
  s.flavor = flavor;
  s.z2 = z2(a, flavor, seed);
  s.b2 = b2(a);
  // Over a Malcev algebra B2 lies inside Z2_M; on non-Malcev input the
  // M-flavor quotient is taken by the part of B2 that is an M-cocycle, so
  // the dimension stays an isomorphism invariant.
  if (flavor == CocycleFlavor::M && !s.z2.contains_subspace(s.b2))
    s.b2 = intersect(s.b2, s.z2);
  s.h2_complement = complement_in(s.b2, s.z2);
  return s;
}

Vec class_of(const CohomologySpace& space, const SkewForm& theta) {
  Vec coords = theta.coords();
  if (!space.z2.contains_vector(coords))
    fail(Errc::NotACocycle, "class_of: form is not a cocycle of this flavor");
  // Decompose over (b2 basis | complement basis); return complement part.
  const std::size_t kb = space.b2.dim(), kc = space.h2_complement.dim();
  const std::size_t nc = coords.size();
  Matrix m(space.algebra.field(), nc, kb + kc + 1);
  for (std::size_t r = 0; r < kb; ++r)
    for (std::size_t c = 0; c < nc; ++c) m.at(c, r) = space.b2.basis().at(r, c);
  for (std::size_t r = 0; r < kc; ++r)
    for (std::size_t c = 0; c < nc; ++c) m.at(c, kb + r) = space.h2_complement.basis().at(r, c);
  for (std::size_t c = 0; c < nc; ++c) m.at(c, kb + kc) = coords[c];
  RrefResult rr = rref(m);
  Vec out = zero_vec(space.algebra.field(), kc);
  // Uniqueness holds because b2 + complement is a direct sum spanning z2.
  for (std::size_t r = 0; r < rr.rank; ++r) {
    std::size_t pc = rr.pivot_cols[r];
    if (pc == kb + kc) throw std::logic_error("class_of: inconsistent decomposition");
    if (pc >= kb) out[pc - kb] = rr.reduced.at(r, kb + kc);
  }
  return out;
}

bool is_in_h2m(const CohomologySpace& bl_space, const SkewForm& theta, std::uint64_t seed) {
  Vec coords = theta.coords();
  if (!bl_space.z2.contains_vector(coords))
    fail(Errc::NotACocycle, "is_in_h2m: form is not a BL cocycle");
  Subspace zm = z2(bl_space.algebra, CocycleFlavor::M, seed);
  return sum(zm, bl_space.b2).contains_vector(coords);
}

Subspace theta_perp(const Algebra& a, const SkewForm& theta) {
  if (theta.dim() != a.dim() || theta.field() != a.field())
    fail(Errc::DimensionMismatch, "theta_perp");
  return nullspace(theta.gram());
}

Algebra extend(const Algebra& a, const std::vector<SkewForm>& thetas, std::uint64_t seed) {
  if (thetas.empty()) fail(Errc::DimensionMismatch, "extend requires at least one cocycle");
  const std::size_t n = a.dim();
  const std::size_t s = thetas.size();
  Subspace zbl = z2(a, CocycleFlavor::BL, seed);
  for (const SkewForm& t : thetas) {
    if (t.dim() != n || t.field() != a.field()) fail(Errc::DimensionMismatch, "extend cocycle");
    if (!zbl.contains_vector(t.coords()))
      fail(Errc::NotACocycle, "extend: form is not a BL cocycle");
  }
  Algebra out(a.field(), n + s);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec coeffs = zero_vec(a.field(), n + s);
      Vec base = a.bracket_basis(i, j);
      for (std::size_t k = 0; k < n; ++k) coeffs[k] = base[k];
      for (std::size_t l = 0; l < s; ++l) coeffs[n + l] = thetas[l].coeff(i, j);
      out.set_bracket(i, j, std::move(coeffs));
    }
  return out;
}

SubspaceTests subspace_tests(const Algebra& a, const std::vector<SkewForm>& thetas,
                             std::uint64_t seed) {
  if (thetas.empty()) fail(Errc::DimensionMismatch, "subspace_tests requires cocycles");
  const std::size_t n = a.dim();
  CohomologySpace bl = h2(a, CocycleFlavor::BL, seed);
  for (const SkewForm& t : thetas)
    if (!bl.z2.contains_vector(t.coords()))
      fail(Errc::NotACocycle, "subspace_tests: form is not a BL cocycle");

  SubspaceTests res;

  // Classes independent in H2  <=>  dim(span(thetas) + B2) = s + dim B2.
  std::vector<Vec> gens;
  for (const SkewForm& t : thetas) gens.push_back(t.coords());
  Subspace theta_span = Subspace::span(a.field(), pair_count(n), gens);
  res.classes_independent =
      sum(theta_span, bl.b2).dim() == thetas.size() + bl.b2.dim() &&
      theta_span.dim() == thetas.size();

  Subspace joint = theta_perp(a, thetas[0]);
  for (std::size_t k = 1; k < thetas.size(); ++k)
    joint = intersect(joint, theta_perp(a, thetas[k]));
  res.joint_perp_ann_zero = intersect(joint, annihilator(a)).dim() == 0;

  res.all_classes_in_h2m = true;
  for (const SkewForm& t : thetas)
    if (!is_in_h2m(bl, t, seed)) {
      res.all_classes_in_h2m = false;
      break;
    }

  res.in_ts = res.classes_independent && res.joint_perp_ann_zero;
  res.in_us = res.in_ts && !res.all_classes_in_h2m;
  res.has_ann_component = res.joint_perp_ann_zero && !res.classes_independent;
  return res;
}

SkewForm act(const Algebra& a, const LinearMap& phi, const SkewForm& theta) {
  if (theta.dim() != a.dim() || theta.field() != a.field())
    fail(Errc::DimensionMismatch, "act");
  if (!is_isomorphism(phi, a, a)) fail(Errc::NotAutomorphism, "act: map is not an automorphism");
  const std::size_t n = a.dim();
  SkewForm out(a.field(), n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec fi = phi.matrix.col(i);
    for (std::size_t j = i + 1; j < n; ++j) {
      Scalar v = theta.eval(fi, phi.matrix.col(j));
      if (!v.is_zero()) out.set(i, j, v);
    }
  }
  return out;
}

Scalar l58_delta(const SkewForm& theta) {
  if (theta.dim() != 5) fail(Errc::DimensionMismatch, "l58_delta expects a 5-dimensional form");
  // 1-based: C23*C45 - C24*C35 + C25*C34
  return theta.coeff(1, 2) * theta.coeff(3, 4) - theta.coeff(1, 3) * theta.coeff(2, 4) +
         theta.coeff(1, 4) * theta.coeff(2, 3);
}

Fingerprint fingerprint(const Algebra& a, std::uint64_t seed) {
  Fingerprint fp;
  fp.dim = a.dim();
  PowerFiltration pf = power_filtration(a);
  fp.power_dims = pf.dims();
  fp.nilpotent = pf.nilpotent;
  fp.nilindex = pf.nilindex;
  fp.ann_dim = annihilator(a).dim();
  fp.der_dim = derivations(a).dim;
  fp.h2bl_dim = h2(a, CocycleFlavor::BL, seed).h2_dim();
  fp.h2m_dim = h2(a, CocycleFlavor::M, seed).h2_dim();
  fp.flags = identity_flags(a, seed);
  return fp;
}

}  // namespace nilalg
