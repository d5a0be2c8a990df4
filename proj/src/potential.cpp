#include "lgmf/potential.hpp"

#include <algorithm>
#include <cctype>

#include "lgmf/errors.hpp"

namespace lgmf {

Potential make_potential(MultiPoly poly, std::string name) {
  if (!poly.ring()) throw DomainError("potential without a ring");
  if (!poly.is_zero()) {
    auto deg = poly.homogeneous_degree();
    if (!deg) throw DomainError("potential is not quasi-homogeneous: " + poly.to_string());
    if (*deg != Rational(2))
      throw DomainError("potential has degree " + deg->to_string() + ", expected 2: " + poly.to_string());
  }
  return Potential{std::move(poly), std::move(name)};
}

std::vector<MultiPoly> jacobian(const Potential& w) {
  std::vector<MultiPoly> out;
  for (std::size_t i = 0; i < w.ring()->size(); ++i) out.push_back(w.poly.derivative(i));
  return out;
}

GroebnerBasis jacobian_basis(const Potential& w) {
  auto j = jacobian(w);
  if (j.empty()) throw DomainError("potential has no variables");
  return groebner_basis(j);
}

bool is_potential(const Potential& w) {
  if (w.is_zero() || w.ring()->size() == 0) return false;
  return quotient_basis(jacobian_basis(w)).finite;
}

std::size_t milnor_number(const Potential& w) {
  if (w.is_zero() || w.ring()->size() == 0) throw DomainError("not a potential: zero polynomial");
  auto qb = quotient_basis(jacobian_basis(w));
  if (!qb.finite) throw DomainError("not a potential: " + w.poly.to_string() + " has a non-isolated singularity");
  return qb.monomials.size();
}

Rational central_charge(const Potential& w) {
  Rational c(0);
  for (const auto& q : w.ring()->weights) c += Rational(3) * (Rational(1) - Rational(2) * q);
  return c;
}

MultiPoly determinant(const std::vector<std::vector<MultiPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  MultiPoly acc(m[0][0].ring());
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<MultiPoly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<MultiPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    MultiPoly t = m[0][j] * determinant(minor);
    acc = (j % 2 == 0) ? acc + t : acc - t;
  }
  return acc;
}

MultiPoly hessian(const Potential& w) {
  const std::size_t n = w.ring()->size();
  auto grad = jacobian(w);
  std::vector<std::vector<MultiPoly>> h(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h[i].push_back(grad[i].derivative(j));
  return determinant(h);
}

CycloNumber residue(const MultiPoly& f, const Potential& w) {
  if (!same_variables(f.ring(), w.ring()))
    throw RingMismatch("'" + f.ring()->describe() + "' vs '" + w.ring()->describe() + "'");
  Ring ring = with_order(w.ring(), static_cast<int>(lcm_ll(f.ring()->cyclo_order, w.ring()->cyclo_order)));
  Potential wr{w.poly.to_ring(ring), w.name};
  auto gb = jacobian_basis(wr);
  auto qb = quotient_basis(gb);
  if (!qb.finite) throw DomainError("not a potential: " + w.poly.to_string());
  const Monomial& socle = qb.monomials.back();
  MultiPoly hess_nf = normal_form(hessian(wr), gb);
  CycloNumber h = hess_nf.coefficient(socle);
  if (h.is_zero() || hess_nf.size() != 1) throw DomainError("hessian does not span the socle");
  MultiPoly nf = normal_form(f.to_ring(ring), gb);
  CycloNumber c = nf.coefficient(socle);
  return c / h * CycloNumber(ring->cyclo_order, Rational(static_cast<long long>(qb.monomials.size())));
}

MultiPoly rename_variables(const MultiPoly& p, const std::vector<std::string>& names) {
  const auto& r = *p.ring();
  if (names.size() != r.size()) throw DomainError("rename: wrong number of names");
  Ring target = make_ring(names, r.weights, r.cyclo_order);
  std::vector<Term> terms;
  for (const auto& t : p.terms()) terms.push_back({make_monomial(*target, t.mono.exps), t.coeff});
  return MultiPoly::from_terms(target, std::move(terms));
}

Potential rename_variables(const Potential& w, const std::vector<std::string>& names) {
  return Potential{rename_variables(w.poly, names), w.name};
}

Potential catalog_potential(const std::string& name) {
  auto colon = name.find(':');
  if (colon == std::string::npos) throw DomainError("unknown catalog potential '" + name + "'");
  std::string family = name.substr(0, colon);
  std::string arg = name.substr(colon + 1);
  std::string text;
  if (family == "A" || family == "D") {
    if (arg.empty() || !std::all_of(arg.begin(), arg.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw DomainError("bad catalog index in '" + name + "'");
    int n = std::stoi(arg);
    if (family == "A") {
      if (n < 1) throw DomainError("A:n needs n >= 1");
      text = "x^" + std::to_string(n + 1) + " + y^2";
    } else {
      if (n < 3) throw DomainError("D:n needs n >= 3");
      text = "x^" + std::to_string(n - 1) + " + x*y^2";
    }
  } else if (family == "E") {
    if (arg == "6") text = "x^3 + y^4";
    else if (arg == "6p") text = "x^3 + y^3";
    else if (arg == "7") text = "x^3 + x*y^3";
    else if (arg == "8") text = "x^3 + y^5";
    else throw DomainError("unknown catalog potential '" + name + "'");
  } else {
    throw DomainError("unknown catalog potential '" + name + "'");
  }
  return make_potential(parse_with_inferred_ring(text), name);
}

Potential potential_from_text(const std::string& text) {
  if (text.find(':') != std::string::npos) return catalog_potential(text);
  if (scan_variables(text).empty()) {
    // constants: only zero is allowed, as the empty right-hand potential
    MultiPoly c = parse_poly(text, make_ring({}, {}));
    if (!c.is_zero()) throw DomainError("a nonzero constant is not a potential");
    return Potential{c, {}};
  }
  return make_potential(parse_with_inferred_ring(text), {});
}

}  // namespace lgmf
