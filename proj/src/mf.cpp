#include "lgmf/mf.hpp"

#include <algorithm>
#include <set>

#include "lgmf/errors.hpp"

namespace lgmf {

namespace {

Potential restrict_potential(const MultiPoly& w, const Ring& ring, const std::vector<std::string>& vars) {
  Ring sub = sub_ring(ring, vars);
  return Potential{w.to_ring(sub), {}};
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

MultiPoly one(const Ring& r) { return MultiPoly::constant(r, Rational(1)); }

}  // namespace

std::vector<std::string> MatrixFactorization::internal_vars() const {
  std::vector<std::string> out;
  for (const auto& n : ring->names)
    if (!contains(left_vars, n) && !contains(right_vars, n)) out.push_back(n);
  return out;
}

Potential MatrixFactorization::left_potential() const { return restrict_potential(w_left, ring, left_vars); }
Potential MatrixFactorization::right_potential() const { return restrict_potential(w_right, ring, right_vars); }

bool operator==(const MatrixFactorization& a, const MatrixFactorization& b) {
  return same_ring(a.ring, b.ring) && a.left_vars == b.left_vars && a.right_vars == b.right_vars &&
         a.w_left == b.w_left && a.w_right == b.w_right && a.gens == b.gens && a.diff == b.diff;
}

ValidationReport validate(const MatrixFactorization& m) {
  ValidationReport r;
  auto fail = [&](std::string kind, std::size_t i, std::size_t j, std::string msg) {
    r.ok = false;
    r.kind = std::move(kind);
    r.row = i;
    r.col = j;
    r.message = std::move(msg);
    return r;
  };
  const std::size_t n = m.gens.size();
  if (m.diff.rows() != n || m.diff.cols() != n) return fail("shape", 0, 0, "differential is not rank x rank");
  if (!same_ring(m.diff.ring(), m.ring)) return fail("shape", 0, 0, "differential lives in another ring");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& e = m.diff(i, j);
      if (e.is_zero()) continue;
      if (m.gens[i].parity == m.gens[j].parity)
        return fail("parity", i, j, "entry (" + std::to_string(i) + "," + std::to_string(j) + ") is even");
      Rational want = Rational(1) + m.gens[j].degree - m.gens[i].degree;
      auto deg = e.homogeneous_degree();
      if (!deg || *deg != want)
        return fail("homogeneity", i, j,
                    "entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " + e.to_string() +
                        " is not homogeneous of degree " + want.to_string());
    }
  PolyMatrix sq = m.diff * m.diff;
  MultiPoly w = m.potential();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      MultiPoly want = (i == j) ? w : MultiPoly(m.ring);
      if (sq(i, j) != want)
        return fail("square", i, j,
                    "d^2 entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " + sq(i, j).to_string() +
                        ", expected " + want.to_string());
    }
  return r;
}

std::vector<int> PermLabel::J() const {
  std::vector<int> j;
  for (int k = 0; k <= l; ++k) j.push_back(((m + k) % d + d) % d);
  std::sort(j.begin(), j.end());
  return j;
}

std::string PermLabel::to_string() const { return std::to_string(m) + ":" + std::to_string(l); }

PermLabel make_label(int d, int m, int l) {
  if (d < 2) throw DomainError("permutation label needs d >= 2");
  if (l < 0 || l > d - 2) throw DomainError("label l=" + std::to_string(l) + " out of range for d=" + std::to_string(d));
  return PermLabel{d, ((m % d) + d) % d, l};
}

std::vector<PermLabel> all_labels(int d) {
  std::vector<PermLabel> out;
  for (int l = 0; l <= d - 2; ++l)
    for (int m = 0; m < d; ++m) out.push_back(PermLabel{d, m, l});
  return out;
}

Ring permutation_ring(int d) { return make_ring({"x", "y"}, {Rational(1, d), Rational(1, d)}, d); }

MatrixFactorization make_permutation_mf(int d, const std::vector<int>& J) {
  if (d < 2) throw DomainError("permutation factorization needs d >= 2");
  std::set<int> js;
  for (int j : J) {
    if (j < 0 || j >= d) throw DomainError("index " + std::to_string(j) + " out of range for d=" + std::to_string(d));
    js.insert(j);
  }
  if (js.empty()) throw DomainError("permutation factorization needs a nonempty J");
  Ring r = permutation_ring(d);
  auto x = MultiPoly::variable(r, 0), y = MultiPoly::variable(r, 1);
  MultiPoly d1 = one(r), d0 = one(r);
  for (int j = 0; j < d; ++j) {
    MultiPoly f = x - y.scaled(CycloNumber::zeta(d, j));
    if (js.count(j)) d1 = d1 * f;
    else d0 = d0 * f;
  }
  Potential wl{x.pow(d), {}}, wr{y.pow(d), {}};
  auto pl = Potential{wl.poly.to_ring(sub_ring(r, {"x"})), {}};
  auto pr = Potential{wr.poly.to_ring(sub_ring(r, {"y"})), {}};
  return koszul_mf(d1, d0, pl, pr);
}

MatrixFactorization make_permutation_mf(const PermLabel& label) { return make_permutation_mf(label.d, label.J()); }

MatrixFactorization koszul_mf(const MultiPoly& a, const MultiPoly& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch("koszul_mf operands");
  MultiPoly w = a * b;
  return koszul_mf(a, b, make_potential(w), Potential{MultiPoly(sub_ring(a.ring(), {})), {}});
}

MatrixFactorization koszul_mf(const MultiPoly& a, const MultiPoly& b, const Potential& w_left,
                              const Potential& w_right) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch("koszul_mf operands");
  if (a.is_zero() || b.is_zero()) throw DomainError("koszul_mf needs nonzero factors");
  auto da = a.homogeneous_degree();
  auto db = b.homogeneous_degree();
  if (!da || !db) throw DomainError("koszul_mf factors must be homogeneous");
  if (*da + *db != Rational(2)) throw DomainError("koszul_mf factors must multiply to degree 2");
  MatrixFactorization m;
  m.ring = a.ring();
  m.left_vars = w_left.ring()->names;
  m.right_vars = w_right.ring() ? w_right.ring()->names : std::vector<std::string>{};
  for (const auto& v : m.right_vars)
    if (contains(m.left_vars, v)) throw DomainError("variable '" + v + "' is both left and right");
  m.w_left = w_left.poly.to_ring(m.ring);
  m.w_right = w_right.poly.ring() ? w_right.poly.to_ring(m.ring) : MultiPoly(m.ring);
  if (a * b != m.w_left - m.w_right) throw DomainError("koszul_mf factors do not multiply to W_left - W_right");
  m.gens = {{0, Rational(0)}, {1, *da - Rational(1)}};
  m.diff = PolyMatrix(m.ring, 2, 2);
  m.diff(0, 1) = a;
  m.diff(1, 0) = b;
  return m;
}

MatrixFactorization direct_sum(const MatrixFactorization& m, const MatrixFactorization& n) {
  if (!same_variables(m.ring, n.ring) || m.left_vars != n.left_vars || m.right_vars != n.right_vars)
    throw DomainError("direct_sum: factorizations live over different rings");
  Ring r = with_order(m.ring, static_cast<int>(lcm_ll(m.ring->cyclo_order, n.ring->cyclo_order)));
  if (m.w_left.to_ring(r) != n.w_left.to_ring(r) || m.w_right.to_ring(r) != n.w_right.to_ring(r))
    throw DomainError("direct_sum: potential mismatch");
  MatrixFactorization s = m;
  s.ring = r;
  s.w_left = m.w_left.to_ring(r);
  s.w_right = m.w_right.to_ring(r);
  s.gens.insert(s.gens.end(), n.gens.begin(), n.gens.end());
  const std::size_t a = m.rank(), b = n.rank();
  s.diff = PolyMatrix(r, a + b, a + b);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < a; ++j) s.diff(i, j) = m.diff(i, j).to_ring(r);
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < b; ++j) s.diff(a + i, a + j) = n.diff(i, j).to_ring(r);
  return s;
}

MatrixFactorization shift(const MatrixFactorization& m) {
  MatrixFactorization s = m;
  for (auto& g : s.gens) g.parity ^= 1;
  s.diff = -m.diff;
  return s;
}

MatrixFactorization dual(const MatrixFactorization& m) {
  MatrixFactorization s = m;
  std::swap(s.w_left, s.w_right);
  std::swap(s.left_vars, s.right_vars);
  for (auto& g : s.gens) g.degree = -g.degree;
  const std::size_t n = m.rank();
  s.diff = PolyMatrix(m.ring, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& e = m.diff(i, j);
      if (e.is_zero()) continue;
      s.diff(j, i) = m.gens[j].parity ? -e : e;
    }
  return s;
}

MatrixFactorization parity_conjugate(const MatrixFactorization& m) {
  MatrixFactorization s = m;
  for (std::size_t i = 0; i < m.rank(); ++i)
    for (std::size_t j = 0; j < m.rank(); ++j)
      if (m.gens[i].parity != m.gens[j].parity) s.diff(i, j) = -m.diff(i, j);
  return s;
}

namespace {

std::string fresh_name(const std::string& base, const std::set<std::string>& taken) {
  static const char* pool[] = {"u", "v", "w", "t", "s", "r"};
  if (!taken.count(base)) return base;
  for (const char* p : pool)
    if (!taken.count(p)) return p;
  for (int k = 1;; ++k) {
    std::string c = base + std::to_string(k);
    if (!taken.count(c)) return c;
  }
}

}  // namespace

MatrixFactorization rename_outer(const MatrixFactorization& m, const std::vector<std::string>& left,
                                 const std::vector<std::string>& right) {
  if (left.size() != m.left_vars.size() || right.size() != m.right_vars.size())
    throw DomainError("rename_outer: wrong number of names");
  std::vector<std::string> names = m.ring->names;
  std::set<std::string> taken(names.begin(), names.end());
  taken.insert(left.begin(), left.end());
  taken.insert(right.begin(), right.end());
  for (auto& n : names) {
    auto li = std::find(m.left_vars.begin(), m.left_vars.end(), n);
    auto ri = std::find(m.right_vars.begin(), m.right_vars.end(), n);
    if (li != m.left_vars.end()) {
      n = left[li - m.left_vars.begin()];
    } else if (ri != m.right_vars.end()) {
      n = right[ri - m.right_vars.begin()];
    } else if (std::find(left.begin(), left.end(), n) != left.end() ||
               std::find(right.begin(), right.end(), n) != right.end()) {
      // internal variable in the way of a new outer name
      n = fresh_name(n, taken);
      taken.insert(n);
    }
  }
  MatrixFactorization s = m;
  s.ring = make_ring(names, m.ring->weights, m.ring->cyclo_order);
  s.left_vars = left;
  s.right_vars = right;
  s.w_left = rename_variables(m.w_left, names).to_ring(s.ring);
  s.w_right = rename_variables(m.w_right, names).to_ring(s.ring);
  s.diff = PolyMatrix(s.ring, m.rank(), m.rank());
  for (std::size_t i = 0; i < m.rank(); ++i)
    for (std::size_t j = 0; j < m.rank(); ++j)
      if (!m.diff(i, j).is_zero()) s.diff(i, j) = rename_variables(m.diff(i, j), names).to_ring(s.ring);
  return s;
}

MatrixFactorization tensor(const MatrixFactorization& m, const MatrixFactorization& n) {
  if (m.right_vars.size() != n.left_vars.size()) throw DomainError("tensor: middle variable blocks differ");
  // rename N: its left block becomes M's right block, everything else fresh
  std::set<std::string> taken(m.ring->names.begin(), m.ring->names.end());
  std::vector<std::string> names = n.ring->names;
  for (auto& name : names) {
    auto li = std::find(n.left_vars.begin(), n.left_vars.end(), name);
    if (li != n.left_vars.end()) {
      name = m.right_vars[li - n.left_vars.begin()];
    } else {
      name = fresh_name(name, taken);
      taken.insert(name);
    }
  }
  std::vector<std::string> n_right;
  for (const auto& v : n.right_vars) n_right.push_back(names[n.ring->index_of(v)]);

  Ring nr = make_ring(names, n.ring->weights, n.ring->cyclo_order);
  Ring joint = union_ring(m.ring, nr);
  // middle potential must agree
  {
    Potential mid_m = m.right_potential();
    MultiPoly mid_n = rename_variables(n.w_left, names).to_ring(joint);
    if (mid_m.poly.to_ring(joint) != mid_n) throw DomainError("tensor: middle potentials differ");
  }
  auto lift_n = [&](const MultiPoly& p) { return rename_variables(p, names).to_ring(joint); };

  MatrixFactorization t;
  t.ring = joint;
  t.left_vars = m.left_vars;
  t.right_vars = n_right;
  t.w_left = m.w_left.to_ring(joint);
  t.w_right = lift_n(n.w_right);
  const std::size_t a = m.rank(), b = n.rank();
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j)
      t.gens.push_back({m.gens[i].parity ^ n.gens[j].parity, m.gens[i].degree + n.gens[j].degree});
  t.diff = PolyMatrix(joint, a * b, a * b);
  std::vector<MultiPoly> dm(a * a), dn(b * b);
  for (std::size_t i = 0; i < a * a; ++i) dm[i] = m.diff(i / a, i % a).to_ring(joint);
  for (std::size_t i = 0; i < b * b; ++i) dn[i] = lift_n(n.diff(i / b, i % b));
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) {
      const std::size_t col = i * b + j;
      for (std::size_t i2 = 0; i2 < a; ++i2)
        if (!dm[i2 * a + i].is_zero()) t.diff(i2 * b + j, col) += dm[i2 * a + i];
      for (std::size_t j2 = 0; j2 < b; ++j2) {
        const auto& e = dn[j2 * b + j];
        if (e.is_zero()) continue;
        t.diff(i * b + j2, col) += m.gens[i].parity ? -e : e;
      }
    }
  return t;
}

}  // namespace lgmf
