#include "lgmf/groebner.hpp"

#include <algorithm>
#include <set>

#include "lgmf/errors.hpp"

namespace lgmf {

namespace {

Ring common_ring(const std::vector<MultiPoly>& gens) {
  Ring r;
  for (const auto& g : gens) {
    if (!g.ring()) continue;
    if (!r) r = g.ring();
    else if (!same_ring(r, g.ring())) throw RingMismatch("'" + r->describe() + "' vs '" + g.ring()->describe() + "'");
  }
  if (!r) throw DomainError("empty generator list");
  return r;
}

// Index of the first basis element whose leading monomial divides m, or -1.
int find_divisor(const Monomial& m, const std::vector<MultiPoly>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i].leading_term().mono.divides(m)) return static_cast<int>(i);
  return -1;
}

// Full reduction; basis elements are assumed monic.
MultiPoly reduce_full(MultiPoly p, const std::vector<MultiPoly>& basis) {
  const Ring ring = p.ring();
  std::vector<Term> rest;
  while (!p.is_zero()) {
    const Term lt = p.leading_term();
    int k = find_divisor(lt.mono, basis);
    if (k < 0) {
      rest.push_back(lt);
      p.drop_leading();
      continue;
    }
    const auto& g = basis[k];
    p -= g.times_monomial(mono_div(lt.mono, g.leading_term().mono), lt.coeff / g.leading_term().coeff);
  }
  return MultiPoly::from_terms(ring, std::move(rest));
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g) {
  const auto& rs = *f.ring();
  Monomial l = mono_lcm(rs, f.leading_term().mono, g.leading_term().mono);
  auto a = f.times_monomial(mono_div(l, f.leading_term().mono), f.leading_term().coeff.inverse());
  auto b = g.times_monomial(mono_div(l, g.leading_term().mono), g.leading_term().coeff.inverse());
  return a - b;
}

}  // namespace

GroebnerBasis groebner_basis(const std::vector<MultiPoly>& generators) {
  GroebnerBasis gb;
  gb.ring = common_ring(generators);
  std::vector<MultiPoly> basis;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    MultiPoly r = reduce_full(g.to_ring(gb.ring), basis);
    if (!r.is_zero()) basis.push_back(r.monic());
  }

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  auto pair_less = [](const Pair& a, const Pair& b) {
    int c = mono_compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    return std::make_pair(a.j, a.i) < std::make_pair(b.j, b.i);
  };
  std::vector<Pair> pairs;
  std::set<std::pair<std::size_t, std::size_t>> done;
  const auto& rs = *gb.ring;
  auto add_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i)
      pairs.push_back({i, j, mono_lcm(rs, basis[i].leading_term().mono, basis[j].leading_term().mono)});
  };
  for (std::size_t j = 1; j < basis.size(); ++j) add_pairs(j);

  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), pair_less);
    Pair p = *it;
    pairs.erase(it);
    done.insert({p.i, p.j});
    const auto& li = basis[p.i].leading_term().mono;
    const auto& lj = basis[p.j].leading_term().mono;
    if (mono_coprime(li, lj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == p.i || k == p.j) continue;
      if (!basis[k].leading_term().mono.divides(p.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      chain = done.count(key(p.i, k)) && done.count(key(p.j, k));
    }
    if (chain) continue;
    MultiPoly r = reduce_full(s_polynomial(basis[p.i], basis[p.j]), basis);
    if (r.is_zero()) continue;
    basis.push_back(r.monic());
    add_pairs(basis.size() - 1);
  }

  // minimalize then interreduce
  std::vector<MultiPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& mi = basis[i].leading_term().mono;
      const auto& mj = basis[j].leading_term().mono;
      redundant = mj.divides(mi) && (!(mi == mj) || j < i);
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MultiPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    const Term lt = minimal[i].leading_term();
    std::vector<Term> tail(minimal[i].terms().begin() + 1, minimal[i].terms().end());
    MultiPoly t = reduce_full(MultiPoly::from_terms(gb.ring, std::move(tail)), others);
    minimal[i] = MultiPoly::monomial(gb.ring, lt.mono, lt.coeff) + t;
  }
  std::sort(minimal.begin(), minimal.end(), [](const MultiPoly& a, const MultiPoly& b) {
    return mono_compare(a.leading_term().mono, b.leading_term().mono) < 0;
  });
  gb.polys = std::move(minimal);
  return gb;
}

MultiPoly normal_form(const MultiPoly& f, const GroebnerBasis& gb) {
  if (!same_ring(f.ring(), gb.ring))
    throw RingMismatch("'" + f.ring()->describe() + "' vs '" + gb.ring->describe() + "'");
  return reduce_full(f, gb.polys);
}

MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& generators) {
  if (generators.empty()) throw DomainError("normal_form needs at least one generator");
  std::vector<MultiPoly> all = generators;
  all.push_back(f);
  common_ring(all);
  return normal_form(f, groebner_basis(generators));
}

Division divide(const MultiPoly& f, const std::vector<MultiPoly>& divisors) {
  std::vector<MultiPoly> all = divisors;
  all.push_back(f);
  const Ring ring = common_ring(all);
  Division out;
  for (std::size_t i = 0; i < divisors.size(); ++i) out.quotients.emplace_back(ring);
  std::vector<Term> rest;
  MultiPoly p = f;
  while (!p.is_zero()) {
    const Term lt = p.leading_term();
    bool divided = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      const auto& g = divisors[i];
      if (g.is_zero() || !g.leading_term().mono.divides(lt.mono)) continue;
      Monomial q = mono_div(lt.mono, g.leading_term().mono);
      CycloNumber c = lt.coeff / g.leading_term().coeff;
      out.quotients[i] += MultiPoly::monomial(ring, q, c);
      p -= g.times_monomial(q, c);
      divided = true;
      break;
    }
    if (!divided) {
      rest.push_back(lt);
      p.drop_leading();
    }
  }
  out.remainder = MultiPoly::from_terms(ring, std::move(rest));
  return out;
}

bool is_standard(const Monomial& m, const GroebnerBasis& gb) { return find_divisor(m, gb.polys) < 0; }

QuotientBasis quotient_basis(const GroebnerBasis& gb) {
  QuotientBasis out;
  const auto& rs = *gb.ring;
  const std::size_t n = rs.size();
  if (gb.polys.empty()) return out;
  // finite iff every variable has a pure power among the leading monomials
  std::vector<int> bound(n, -1);
  for (const auto& g : gb.polys) {
    const auto& m = g.leading_term().mono;
    int var = -1, count = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (m.exps[i]) {
        var = static_cast<int>(i);
        ++count;
      }
    if (count == 0) {  // unit ideal
      out.finite = true;
      return out;
    }
    if (count == 1 && (bound[var] < 0 || m.exps[var] < bound[var])) bound[var] = m.exps[var];
  }
  if (std::any_of(bound.begin(), bound.end(), [](int b) { return b < 0; })) return out;
  out.finite = true;
  Exponents cur(n, 0);
  for (;;) {
    Monomial m = make_monomial(rs, cur);
    if (is_standard(m, gb)) out.monomials.push_back(m);
    std::size_t i = 0;
    while (i < n) {
      if (++cur[i] < bound[i]) break;
      cur[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
  std::sort(out.monomials.begin(), out.monomials.end(),
            [](const Monomial& a, const Monomial& b) { return mono_compare(a, b) < 0; });
  return out;
}

QuotientBasis quotient_basis(const std::vector<MultiPoly>& generators) {
  return quotient_basis(groebner_basis(generators));
}

}  // namespace lgmf
