#include "lgmf/ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "lgmf/errors.hpp"

namespace lgmf {

int RingSpec::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  return -1;
}

long long RingSpec::scale(const Rational& degree) const {
  Rational s = degree * Rational(degree_scale);
  if (!s.is_integer()) throw DomainError("degree " + degree.to_string() + " is off the grading lattice");
  return s.numerator().get_si();
}

std::string RingSpec::describe() const {
  std::ostringstream os;
  os << "ring";
  for (std::size_t i = 0; i < names.size(); ++i) os << " " << names[i] << ":" << weights[i];
  os << " cyclo " << cyclo_order;
  return os.str();
}

Ring make_ring(std::vector<std::string> names, std::vector<Rational> weights, int cyclo_order) {
  if (names.size() != weights.size()) throw DomainError("ring: names and weights differ in length");
  if (cyclo_order < 1) throw DomainError("ring: cyclotomic order must be positive");
  for (std::size_t i = 0; i < names.size(); ++i) {
    const auto& n = names[i];
    if (n.empty() || n == "z") throw DomainError("ring: invalid variable name '" + n + "'");
    if (!(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_'))
      throw DomainError("ring: invalid variable name '" + n + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (names[j] == n) throw DomainError("ring: duplicate variable '" + n + "'");
    if (weights[i].sign() < 0) throw DomainError("ring: negative weight for '" + n + "'");
  }
  auto r = std::make_shared<RingSpec>();
  r->names = std::move(names);
  r->weights = std::move(weights);
  r->cyclo_order = cyclo_order;
  long long scale = 1;
  for (const auto& w : r->weights) {
    Rational d = w * Rational(2);
    scale = lcm_ll(scale, d.denominator().get_si());
  }
  r->degree_scale = scale;
  for (const auto& w : r->weights) {
    Rational d = w * Rational(2) * Rational(scale);
    r->scaled_degree.push_back(d.numerator().get_si());
  }
  return r;
}

bool same_variables(const Ring& a, const Ring& b) {
  if (a == b) return true;
  return a->names == b->names && a->weights == b->weights;
}

bool same_ring(const Ring& a, const Ring& b) {
  if (a == b) return true;
  return same_variables(a, b) && a->cyclo_order == b->cyclo_order;
}

Ring with_order(const Ring& r, int cyclo_order) {
  if (r->cyclo_order == cyclo_order) return r;
  return make_ring(r->names, r->weights, cyclo_order);
}

Ring union_ring(const Ring& a, const Ring& b) {
  auto names = a->names;
  auto weights = a->weights;
  for (std::size_t i = 0; i < b->names.size(); ++i) {
    int k = a->index_of(b->names[i]);
    if (k >= 0) {
      if (a->weights[k] != b->weights[i])
        throw RingMismatch("variable '" + b->names[i] + "' carries different weights");
      continue;
    }
    names.push_back(b->names[i]);
    weights.push_back(b->weights[i]);
  }
  return make_ring(names, weights, static_cast<int>(lcm_ll(a->cyclo_order, b->cyclo_order)));
}

Ring sub_ring(const Ring& r, const std::vector<std::string>& keep) {
  std::vector<std::string> names;
  std::vector<Rational> weights;
  for (std::size_t i = 0; i < r->names.size(); ++i) {
    if (std::find(keep.begin(), keep.end(), r->names[i]) == keep.end()) continue;
    names.push_back(r->names[i]);
    weights.push_back(r->weights[i]);
  }
  return make_ring(names, weights, r->cyclo_order);
}

bool Monomial::is_one() const {
  return std::all_of(exps.begin(), exps.end(), [](auto e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i] > other.exps[i]) return false;
  return true;
}

Monomial monomial_one(const RingSpec& r) {
  Monomial m;
  m.exps.assign(r.size(), 0);
  return m;
}

Monomial make_monomial(const RingSpec& r, Exponents exps) {
  if (exps.size() != r.size()) throw DomainError("exponent vector length does not match ring");
  Monomial m;
  m.exps = std::move(exps);
  for (std::size_t i = 0; i < r.size(); ++i) m.deg += r.scaled_degree[i] * m.exps[i];
  return m;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.exps.resize(a.exps.size());
  for (std::size_t i = 0; i < a.exps.size(); ++i) m.exps[i] = a.exps[i] + b.exps[i];
  m.deg = a.deg + b.deg;
  return m;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.exps.resize(a.exps.size());
  for (std::size_t i = 0; i < a.exps.size(); ++i) m.exps[i] = a.exps[i] - b.exps[i];
  m.deg = a.deg - b.deg;
  return m;
}

Monomial mono_lcm(const RingSpec& r, const Monomial& a, const Monomial& b) {
  Exponents e(a.exps.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exps[i], b.exps[i]);
  return make_monomial(r, std::move(e));
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.exps.size(); ++i)
    if (a.exps[i] && b.exps[i]) return false;
  return true;
}

int mono_compare(const Monomial& a, const Monomial& b) {
  if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
  for (std::size_t i = 0; i < a.exps.size(); ++i)
    if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i] ? -1 : 1;
  return 0;
}

namespace {
void enumerate(const RingSpec& r, std::size_t var, long long remaining, Exponents& cur,
               std::vector<Monomial>& out) {
  if (var == r.size()) {
    if (remaining == 0) out.push_back(make_monomial(r, cur));
    return;
  }
  const long long w = r.scaled_degree[var];
  if (w == 0) {
    cur[var] = 0;
    enumerate(r, var + 1, remaining, cur, out);
    return;
  }
  for (long long e = remaining / w; e >= 0; --e) {
    cur[var] = static_cast<std::uint16_t>(e);
    enumerate(r, var + 1, remaining - e * w, cur, out);
  }
  cur[var] = 0;
}
}  // namespace

std::vector<Monomial> monomials_of_degree(const RingSpec& r, long long scaled_deg) {
  std::vector<Monomial> out;
  if (scaled_deg < 0) return out;
  Exponents cur(r.size(), 0);
  enumerate(r, 0, scaled_deg, cur, out);
  return out;
}

}  // namespace lgmf
