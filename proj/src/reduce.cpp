#include "lgmf/reduce.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "lgmf/complex.hpp"
#include "lgmf/errors.hpp"

namespace lgmf {

namespace {

struct Work {
  Ring ring;
  std::vector<Generator> gens;
  std::vector<MultiPoly> d;  // n x n, row-major
  std::vector<char> alive;
  std::size_t n = 0;

  MultiPoly& at(std::size_t i, std::size_t j) { return d[i * n + j]; }
};

bool is_unit(const MultiPoly& p) { return !p.is_zero() && p.is_constant(); }

// Splits off contractible pairs until no unit entry connects two live generators.
std::size_t eliminate_units(Work& w) {
  std::size_t pivots = 0;
  for (;;) {
    std::vector<std::size_t> row_nnz(w.n, 0), col_nnz(w.n, 0);
    for (std::size_t i = 0; i < w.n; ++i) {
      if (!w.alive[i]) continue;
      for (std::size_t j = 0; j < w.n; ++j)
        if (w.alive[j] && !w.at(i, j).is_zero()) {
          ++row_nnz[i];
          ++col_nnz[j];
        }
    }
    std::size_t best_a = w.n, best_b = w.n, best_score = SIZE_MAX;
    for (std::size_t a = 0; a < w.n; ++a) {
      if (!w.alive[a]) continue;
      for (std::size_t b = 0; b < w.n; ++b) {
        if (!w.alive[b] || !is_unit(w.at(a, b))) continue;
        std::size_t score = row_nnz[a] + col_nnz[b];
        if (score < best_score) {
          best_score = score;
          best_a = a;
          best_b = b;
        }
      }
    }
    if (best_a == w.n) return pivots;
    const std::size_t a = best_a, b = best_b;
    const CycloNumber uinv = w.at(a, b).constant_term().inverse();
    std::vector<std::size_t> rows, cols;
    for (std::size_t r = 0; r < w.n; ++r)
      if (w.alive[r] && r != a && !w.at(r, b).is_zero()) rows.push_back(r);
    for (std::size_t s = 0; s < w.n; ++s)
      if (w.alive[s] && s != b && !w.at(a, s).is_zero()) cols.push_back(s);
    for (std::size_t r : rows) {
      MultiPoly f = w.at(r, b).scaled(uinv);
      for (std::size_t s : cols) w.at(r, s) -= f * w.at(a, s);
    }
    w.alive[a] = 0;
    w.alive[b] = 0;
    ++pivots;
  }
}

MatrixFactorization assemble(const MatrixFactorization& src, const Ring& outer, const std::vector<Generator>& gens,
                             const std::function<const MultiPoly&(std::size_t, std::size_t)>& entry,
                             const std::vector<std::size_t>& keep) {
  MatrixFactorization out;
  out.ring = outer;
  out.left_vars = src.left_vars;
  out.right_vars = src.right_vars;
  out.w_left = src.w_left.to_ring(outer);
  out.w_right = src.w_right.to_ring(outer);
  for (auto k : keep) out.gens.push_back(gens[k]);
  out.diff = PolyMatrix(outer, keep.size(), keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j) {
      const auto& e = entry(keep[i], keep[j]);
      if (!e.is_zero()) out.diff(i, j) = e.to_ring(outer);
    }
  return out;
}

std::vector<std::string> outer_names(const MatrixFactorization& m, const std::vector<std::string>& eliminate) {
  std::vector<std::string> keep;
  for (const auto& v : m.ring->names)
    if (std::find(eliminate.begin(), eliminate.end(), v) == eliminate.end()) keep.push_back(v);
  return keep;
}

struct Attempt {
  MatrixFactorization mf;
  std::size_t pivots = 0;
};

Attempt reduce_at(const MatrixFactorization& m, const std::vector<std::string>& eliminate, const Rational& cutoff) {
  const Ring& ring = m.ring;
  std::vector<std::size_t> idx;
  for (const auto& v : eliminate) idx.push_back(static_cast<std::size_t>(ring->index_of(v)));
  Ring inner = sub_ring(ring, eliminate);
  // inner variables in ring order, matching split() keys ordered by idx
  std::sort(idx.begin(), idx.end());

  long long scale = ring->degree_scale;
  for (const auto& g : m.gens) scale = lcm_ll(scale, g.degree.denominator().get_si());
  const long long factor = scale / ring->degree_scale;
  auto units = [&](const Rational& q) { return (q * Rational(scale)).numerator().get_si(); };
  std::vector<long long> gdeg;
  for (const auto& g : m.gens) gdeg.push_back(units(g.degree));
  const long long lowest = *std::min_element(gdeg.begin(), gdeg.end());
  const long long top = lowest + units(cutoff);
  const long long margin = top - scale;  // survivors above this may be truncation artifacts

  // expanded basis: (base generator, inner monomial)
  Work w;
  w.ring = ring;
  std::map<std::pair<std::size_t, std::vector<std::uint16_t>>, std::size_t> index;
  std::vector<std::pair<std::size_t, std::vector<std::uint16_t>>> basis;
  for (std::size_t g = 0; g < m.rank(); ++g) {
    for (long long k = 0; gdeg[g] + k * factor <= top; ++k) {
      for (const auto& mono : monomials_of_degree(*inner, k)) {
        std::vector<std::uint16_t> e(mono.exps.begin(), mono.exps.end());
        index.emplace(std::make_pair(g, e), basis.size());
        basis.emplace_back(g, e);
        w.gens.push_back({m.gens[g].parity, Rational(gdeg[g] + k * factor, scale)});
      }
    }
  }
  w.n = basis.size();
  w.d.assign(w.n * w.n, MultiPoly(ring));
  w.alive.assign(w.n, 1);
  for (std::size_t gp = 0; gp < m.rank(); ++gp)
    for (std::size_t g = 0; g < m.rank(); ++g) {
      const auto& e = m.diff(gp, g);
      if (e.is_zero()) continue;
      auto parts = e.split(idx);
      for (std::size_t col = 0; col < w.n; ++col) {
        if (basis[col].first != g) continue;
        for (const auto& [kappa, c] : parts) {
          std::vector<std::uint16_t> tgt = basis[col].second;
          for (std::size_t t = 0; t < tgt.size(); ++t) tgt[t] = static_cast<std::uint16_t>(tgt[t] + kappa[t]);
          auto it = index.find({gp, tgt});
          if (it != index.end()) w.at(it->second, col) += c;
        }
      }
    }

  Attempt out;
  out.pivots = eliminate_units(w);
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < w.n; ++i)
    if (w.alive[i] && units(w.gens[i].degree) <= margin) keep.push_back(i);
  Ring outer = sub_ring(ring, outer_names(m, eliminate));
  out.mf = assemble(m, outer, w.gens, [&](std::size_t i, std::size_t j) -> const MultiPoly& { return w.at(i, j); }, keep);
  return out;
}

std::vector<std::pair<int, Rational>> signature(const MatrixFactorization& m) {
  std::vector<std::pair<int, Rational>> s;
  for (const auto& g : m.gens) s.emplace_back(g.parity, g.degree);
  std::sort(s.begin(), s.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first < b.first : a.second < b.second;
  });
  return s;
}

}  // namespace

MatrixFactorization split_units(const MatrixFactorization& m, std::size_t* pivots) {
  Work w;
  w.ring = m.ring;
  w.gens = m.gens;
  w.n = m.rank();
  w.d.reserve(w.n * w.n);
  for (std::size_t i = 0; i < w.n; ++i)
    for (std::size_t j = 0; j < w.n; ++j) w.d.push_back(m.diff(i, j));
  w.alive.assign(w.n, 1);
  std::size_t p = eliminate_units(w);
  if (pivots) *pivots = p;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < w.n; ++i)
    if (w.alive[i]) keep.push_back(i);
  return assemble(m, m.ring, w.gens, [&](std::size_t i, std::size_t j) -> const MultiPoly& { return w.at(i, j); }, keep);
}

MatrixFactorization canonicalize(const MatrixFactorization& m) {
  std::vector<std::size_t> order(m.rank());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (m.gens[a].parity != m.gens[b].parity) return m.gens[a].parity < m.gens[b].parity;
    return m.gens[a].degree < m.gens[b].degree;
  });
  MatrixFactorization c = m;
  c.gens.clear();
  for (auto k : order) c.gens.push_back(m.gens[k]);
  c.diff = PolyMatrix(m.ring, m.rank(), m.rank());
  for (std::size_t i = 0; i < m.rank(); ++i)
    for (std::size_t j = 0; j < m.rank(); ++j) c.diff(i, j) = m.diff(order[i], order[j]);
  for (std::size_t j = 0; j < c.rank(); ++j) {
    if (c.gens[j].parity != 1) continue;
    for (std::size_t i = 0; i < c.rank(); ++i) {
      if (c.diff(i, j).is_zero()) continue;
      CycloNumber lambda = c.diff(i, j).leading_term().coeff.inverse();
      if (lambda.is_one()) break;
      CycloNumber inv = lambda.inverse();
      for (std::size_t r = 0; r < c.rank(); ++r) c.diff(r, j) = c.diff(r, j).scaled(lambda);
      for (std::size_t s = 0; s < c.rank(); ++s) c.diff(j, s) = c.diff(j, s).scaled(inv);
      break;
    }
  }
  return c;
}

ReduceResult reduce_detailed(const MatrixFactorization& m, std::vector<std::string> eliminate, const Rational& cutoff,
                             const Rational& max_cutoff) {
  auto internal = m.internal_vars();
  if (eliminate.empty()) eliminate = internal;
  for (const auto& v : eliminate)
    if (std::find(internal.begin(), internal.end(), v) == internal.end())
      throw DomainError("reduce: '" + v + "' is not an internal variable");
  auto input = validate(m);
  if (!input.ok) throw DomainError("reduce: invalid input factorization: " + input.message);

  ReduceResult res;
  if (eliminate.empty() || m.rank() == 0) {
    res.mf = canonicalize(split_units(m, &res.pivots));
    res.cutoff = cutoff;
    return res;
  }
  for (Rational c = cutoff; c <= max_cutoff; c = c * Rational(2)) {
    Attempt a = reduce_at(m, eliminate, c);
    Attempt b = reduce_at(m, eliminate, c + Rational(1));
    if (validate(a.mf).ok && validate(b.mf).ok && signature(a.mf) == signature(b.mf)) {
      res.mf = canonicalize(a.mf);
      res.cutoff = c;
      res.pivots = a.pivots;
      return res;
    }
    note_cutoff_escalation();
  }
  throw CutoffError("reduce did not stabilize up to cutoff " + max_cutoff.to_string());
}

MatrixFactorization reduce(const MatrixFactorization& m, std::vector<std::string> eliminate, const Rational& cutoff) {
  return reduce_detailed(m, std::move(eliminate), cutoff).mf;
}

}  // namespace lgmf
