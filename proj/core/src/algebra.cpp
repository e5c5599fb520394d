#include "nilalg/algebra.hpp"

#include <sstream>

namespace nilalg {

void Algebra::set_bracket(std::size_t i, std::size_t j, Vec coeffs) {
  if (i >= j || j >= dim_) fail(Errc::DimensionMismatch, "set_bracket requires i < j < dim");
  if (coeffs.size() != dim_) fail(Errc::DimensionMismatch, "bracket coefficient length");
  for (const Scalar& c : coeffs)
    if (c.field() != field_) fail(Errc::MixedFields, "bracket coefficient field");
  if (is_zero_vec(coeffs))
    constants_.erase({i, j});
  else
    constants_[{i, j}] = std::move(coeffs);
}

void Algebra::set_bracket_unit(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
  Vec coeffs = zero_vec(field_, dim_);
  auto it = constants_.find({i, j});
  if (it != constants_.end()) coeffs = it->second;
  if (k >= dim_) fail(Errc::DimensionMismatch, "set_bracket_unit target index");
  coeffs[k] = c;
  set_bracket(i, j, std::move(coeffs));
}

Vec Algebra::bracket_basis(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) fail(Errc::DimensionMismatch, "bracket_basis index");
  if (i == j) return zero_vec(field_, dim_);
  bool flip = i > j;
  auto it = constants_.find(flip ? Key{j, i} : Key{i, j});
  if (it == constants_.end()) return zero_vec(field_, dim_);
  Vec v = it->second;
  if (flip)
    for (Scalar& s : v) s = -s;
  return v;
}

Vec Algebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_) fail(Errc::DimensionMismatch, "bracket operands");
  Vec acc = zero_vec(field_, dim_);
  for (const auto& [key, coeffs] : constants_) {
    const auto [i, j] = key;
    Scalar w = x[i] * y[j] - x[j] * y[i];
    if (w.is_zero()) continue;
    for (std::size_t k = 0; k < dim_; ++k)
      if (!coeffs[k].is_zero()) acc[k] += w * coeffs[k];
  }
  return acc;
}

bool Algebra::operator==(const Algebra& o) const {
  return field_ == o.field_ && dim_ == o.dim_ && constants_ == o.constants_;
}

Vec jacobian(const Algebra& a, const Vec& x, const Vec& y, const Vec& z) {
  Vec r = a.bracket(a.bracket(x, y), z);
  r = add(r, a.bracket(a.bracket(y, z), x));
  r = add(r, a.bracket(a.bracket(z, x), y));
  return r;
}

const char* identity_name(IdentityKind k) {
  switch (k) {
    case IdentityKind::Lie: return "Lie";
    case IdentityKind::Malcev: return "Malcev";
    case IdentityKind::BinaryLie: return "BinaryLie";
    case IdentityKind::CD: return "CD";
  }
  return "?";
}

namespace {

// Unlinearized Malcev identity: J(x,y,[x,z]) - [J(x,y,z),x].
Vec malcev_direct(const Algebra& a, const Vec& x, const Vec& y, const Vec& z) {
  return sub(jacobian(a, x, y, a.bracket(x, z)), a.bracket(jacobian(a, x, y, z), x));
}

std::vector<Vec> basis_vectors(const Algebra& a) {
  std::vector<Vec> e;
  e.reserve(a.dim());
  for (std::size_t k = 0; k < a.dim(); ++k) e.push_back(unit_vec(a.field(), a.dim(), k));
  return e;
}

// Cached basis brackets; the basis-tuple scans would otherwise spend their
// time in map lookups and temporary vectors.
struct BasisTable {
  const Algebra& a;
  std::size_t n;
  std::vector<Vec> t;
  std::vector<bool> nonzero;

  explicit BasisTable(const Algebra& alg) : a(alg), n(alg.dim()), t(n * n), nonzero(n * n) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        t[i * n + j] = a.bracket_basis(i, j);
        nonzero[i * n + j] = !is_zero_vec(t[i * n + j]);
      }
  }
  const Vec& at(std::size_t i, std::size_t j) const { return t[i * n + j]; }
  bool nz(std::size_t i, std::size_t j) const { return nonzero[i * n + j]; }

  // [v, e_k]
  Vec apply(const Vec& v, std::size_t k) const {
    Vec acc = zero_vec(a.field(), n);
    for (std::size_t m = 0; m < n; ++m) {
      if (v[m].is_zero() || !nz(m, k)) continue;
      const Vec& row = at(m, k);
      for (std::size_t c = 0; c < n; ++c)
        if (!row[c].is_zero()) acc[c] += v[m] * row[c];
    }
    return acc;
  }
};

// Linearized Malcev identity on basis tuples: [[w,y],[x,z]] - [[[w,x],y],z]
// - [[[x,y],z],w] - [[[y,z],w],x] - [[[z,w],x],y].
Vec malcev_linear_basis(const BasisTable& bt, std::size_t w, std::size_t x, std::size_t y,
                        std::size_t z) {
  const Algebra& a = bt.a;
  Vec r = zero_vec(a.field(), bt.n);
  if (bt.nz(w, y) && bt.nz(x, z)) r = a.bracket(bt.at(w, y), bt.at(x, z));
  if (bt.nz(w, x)) r = sub(r, bt.apply(bt.apply(bt.at(w, x), y), z));
  if (bt.nz(x, y)) r = sub(r, bt.apply(bt.apply(bt.at(x, y), z), w));
  if (bt.nz(y, z)) r = sub(r, bt.apply(bt.apply(bt.at(y, z), w), x));
  if (bt.nz(z, w)) r = sub(r, bt.apply(bt.apply(bt.at(z, w), x), y));
  return r;
}

// J(v, e_k, e_l) for a vector first argument.
Vec jacobian_vec_basis(const BasisTable& bt, const Vec& v, std::size_t k, std::size_t l) {
  Vec r = bt.apply(bt.apply(v, k), l);
  if (bt.nz(k, l)) r = add(r, bt.a.bracket(bt.at(k, l), v));
  r = sub(r, bt.apply(bt.apply(v, l), k));
  return r;
}

// Linearized binary Lie identity on basis tuples: J([x,y],z,t) +
// J([x,t],z,y) + J([z,y],x,t) + J([z,t],x,y).
Vec binary_lie_linear_basis(const BasisTable& bt, std::size_t x, std::size_t y, std::size_t z,
                            std::size_t t) {
  Vec r = zero_vec(bt.a.field(), bt.n);
  if (bt.nz(x, y)) r = add(r, jacobian_vec_basis(bt, bt.at(x, y), z, t));
  if (bt.nz(x, t)) r = add(r, jacobian_vec_basis(bt, bt.at(x, t), z, y));
  if (bt.nz(z, y)) r = add(r, jacobian_vec_basis(bt, bt.at(z, y), x, t));
  if (bt.nz(z, t)) r = add(r, jacobian_vec_basis(bt, bt.at(z, t), x, y));
  return r;
}

// CD identity on basis tuples: [[[x,y],a],b] - [[[x,y],b],a] - [[[x,a],b],y]
// + [[[x,b],a],y] - [x,[[y,a],b]] + [x,[[y,b],a]].
Vec cd_form_basis(const BasisTable& bt, std::size_t x, std::size_t y, std::size_t a,
                  std::size_t b) {
  const Algebra& alg = bt.a;
  Vec r = zero_vec(alg.field(), bt.n);
  if (bt.nz(x, y)) {
    r = add(r, bt.apply(bt.apply(bt.at(x, y), a), b));
    r = sub(r, bt.apply(bt.apply(bt.at(x, y), b), a));
  }
  if (bt.nz(x, a)) r = sub(r, bt.apply(bt.apply(bt.at(x, a), b), y));
  if (bt.nz(x, b)) r = add(r, bt.apply(bt.apply(bt.at(x, b), a), y));
  Vec ex = unit_vec(alg.field(), bt.n, x);
  if (bt.nz(y, a)) r = sub(r, alg.bracket(ex, bt.apply(bt.at(y, a), b)));
  if (bt.nz(y, b)) r = add(r, alg.bracket(ex, bt.apply(bt.at(y, b), a)));
  return r;
}

}  // namespace

IdentityResult check_identity(const Algebra& a, IdentityKind kind, std::uint64_t seed,
                              int guard_samples) {
  const std::size_t n = a.dim();
  std::vector<Vec> e = basis_vectors(a);
  BasisTable bt(a);
  IdentityResult res;

  if (kind == IdentityKind::Lie) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          if (!bt.nz(i, j) && !bt.nz(j, k) && !bt.nz(k, i)) continue;
          if (!is_zero_vec(jacobian(a, e[i], e[j], e[k]))) {
            res.holds = false;
            res.witness = {e[i], e[j], e[k]};
            return res;
          }
        }
    return res;
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Vec v;
          switch (kind) {
            case IdentityKind::Malcev: v = malcev_linear_basis(bt, i, j, k, l); break;
            case IdentityKind::BinaryLie: v = binary_lie_linear_basis(bt, i, j, k, l); break;
            case IdentityKind::CD: v = cd_form_basis(bt, i, j, k, l); break;
            default: break;
          }
          if (!is_zero_vec(v)) {
            res.holds = false;
            res.witness = {e[i], e[j], e[k], e[l]};
            return res;
          }
        }

  // Randomized guard on the unlinearized identity (Malcev and BinaryLie
  // only; the Lie and CD forms above are already the identities themselves).
  if (kind == IdentityKind::Malcev || kind == IdentityKind::BinaryLie) {
    Rng rng(seed);
    for (int s = 0; s < guard_samples; ++s) {
      if (kind == IdentityKind::Malcev) {
        Vec x = rng.vector(a.field(), n), y = rng.vector(a.field(), n),
            z = rng.vector(a.field(), n);
        if (!is_zero_vec(malcev_direct(a, x, y, z))) {
          res.holds = false;
          res.witness = {x, y, z};
          res.from_guard = true;
          return res;
        }
      } else {
        Vec x = rng.vector(a.field(), n), y = rng.vector(a.field(), n);
        if (!is_zero_vec(jacobian(a, a.bracket(x, y), x, y))) {
          res.holds = false;
          res.witness = {x, y};
          res.from_guard = true;
          return res;
        }
      }
    }
  }
  return res;
}

std::vector<std::size_t> PowerFiltration::dims() const {
  std::vector<std::size_t> d;
  d.reserve(terms.size());
  for (const Subspace& s : terms) d.push_back(s.dim());
  return d;
}

PowerFiltration power_filtration(const Algebra& a) {
  PowerFiltration pf;
  const FieldSpec& f = a.field();
  const std::size_t n = a.dim();
  pf.terms.push_back(Subspace::full(f, n));

  for (;;) {
    const std::size_t next = pf.terms.size() + 1;  // computing A^next
    std::vector<Vec> gens;
    for (std::size_t p = 1; p < next; ++p) {
      const Subspace& lhs = pf.terms[p - 1];
      const Subspace& rhs = pf.terms[next - p - 1];
      for (std::size_t r = 0; r < lhs.dim(); ++r)
        for (std::size_t s = 0; s < rhs.dim(); ++s) {
          Vec v = a.bracket(lhs.basis_vector(r), rhs.basis_vector(s));
          if (!is_zero_vec(v)) gens.push_back(std::move(v));
        }
    }
    Subspace term = Subspace::span(f, n, gens);
    pf.terms.push_back(term);
    if (term.dim() == 0) {
      pf.nilpotent = true;
      pf.nilindex = pf.terms.size();
      return pf;
    }
    // A^{2k} = A^k forces A^m = A^k for all m >= k, so the chain never
    // reaches zero. A plain A^{k+1} = A^k plateau is not conclusive.
    std::size_t m = pf.terms.size();
    if (m % 2 == 0 && pf.terms[m - 1] == pf.terms[m / 2 - 1]) {
      pf.nilpotent = false;
      return pf;
    }
  }
}

Subspace annihilator(const Algebra& a) {
  const std::size_t n = a.dim();
  // Stack the right-bracket-by-e_j matrices: x is annihilating iff
  // [x, e_j] = 0 for all j.
  Matrix m(a.field(), n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      Vec bij = a.bracket_basis(i, j);  // [e_i, e_j]
      for (std::size_t k = 0; k < n; ++k) m.at(j * n + k, i) = bij[k];
    }
  return nullspace(m);
}

DerivationSpace derivations(const Algebra& a) {
  const std::size_t n = a.dim();
  const FieldSpec& f = a.field();
  // Unknowns: D_{mk} (row-major), D e_k = sum_m D_{mk} e_m.
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec cij = a.bracket_basis(i, j);
      for (std::size_t m = 0; m < n; ++m) {
        Vec row = zero_vec(f, n * n);
        // D([e_i,e_j])_m = sum_k c_ij^k D_{mk}
        for (std::size_t k = 0; k < n; ++k)
          if (!cij[k].is_zero()) row[m * n + k] += cij[k];
        // -[D e_i, e_j]_m = -sum_k D_{ki} [e_k,e_j]_m
        for (std::size_t k = 0; k < n; ++k) {
          Vec bkj = a.bracket_basis(k, j);
          if (!bkj[m].is_zero()) row[k * n + i] -= bkj[m];
        }
        // -[e_i, D e_j]_m = -sum_k D_{kj} [e_i,e_k]_m
        for (std::size_t k = 0; k < n; ++k) {
          Vec bik = a.bracket_basis(i, k);
          if (!bik[m].is_zero()) row[k * n + j] -= bik[m];
        }
        rows.push_back(std::move(row));
      }
    }
  Matrix system = Matrix::from_rows(f, rows, n * n);
  Subspace sol = nullspace(system);
  DerivationSpace ds;
  ds.dim = sol.dim();
  for (std::size_t b = 0; b < sol.dim(); ++b) {
    Vec flat = sol.basis_vector(b);
    Matrix dm(f, n, n);
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t k = 0; k < n; ++k) dm.at(m, k) = flat[m * n + k];
    ds.basis.push_back(LinearMap{std::move(dm)});
  }
  return ds;
}

Algebra transport(const Algebra& a, const LinearMap& p) {
  const std::size_t n = a.dim();
  if (p.matrix.rows() != n || p.matrix.cols() != n)
    fail(Errc::DimensionMismatch, "transport map shape");
  Matrix inv = p.matrix.inverse();  // SingularMap if not invertible
  Algebra out(a.field(), n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec fi = p.matrix.col(i);
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec fj = p.matrix.col(j);
      Vec prod = a.bracket(fi, fj);
      out.set_bracket(i, j, inv.apply(prod));
    }
  }
  return out;
}

bool is_isomorphism(const LinearMap& p, const Algebra& a, const Algebra& b) {
  if (a.field() != b.field()) fail(Errc::MixedFields, "is_isomorphism");
  if (a.dim() != b.dim()) return false;
  if (p.matrix.rows() != a.dim() || p.matrix.cols() != a.dim())
    fail(Errc::DimensionMismatch, "is_isomorphism map shape");
  return transport(a, p) == b;
}

IdentityFlags identity_flags(const Algebra& a, std::uint64_t seed) {
  IdentityFlags fl;
  fl.lie = check_identity(a, IdentityKind::Lie, seed).holds;
  fl.malcev = check_identity(a, IdentityKind::Malcev, seed).holds;
  fl.binary_lie = check_identity(a, IdentityKind::BinaryLie, seed).holds;
  fl.cd = check_identity(a, IdentityKind::CD, seed).holds;
  return fl;
}

bool Fingerprint::operator==(const Fingerprint& o) const {
  return dim == o.dim && power_dims == o.power_dims && nilpotent == o.nilpotent &&
         nilindex == o.nilindex && ann_dim == o.ann_dim && der_dim == o.der_dim &&
         h2bl_dim == o.h2bl_dim && h2m_dim == o.h2m_dim && flags == o.flags;
}

std::string Fingerprint::str() const {
  std::ostringstream os;
  os << "dim=" << dim << " powers=(";
  for (std::size_t k = 0; k < power_dims.size(); ++k)
    os << (k ? "," : "") << power_dims[k];
  os << ") nilpotent=" << (nilpotent ? "yes" : "no");
  if (nilpotent) os << " nilindex=" << nilindex;
  os << " ann=" << ann_dim << " der=" << der_dim << " h2bl=" << h2bl_dim
     << " h2m=" << h2m_dim << " lie=" << flags.lie << " malcev=" << flags.malcev
     << " bl=" << flags.binary_lie << " cd=" << flags.cd;
  return os.str();
}

}  // namespace nilalg
