#include "lgmf/qdim.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "lgmf/errors.hpp"

namespace lgmf {

MultiPoly qdim_supertrace(const MatrixFactorization& m) {
  PolyMatrix p = PolyMatrix::identity(m.ring, m.rank());
  auto apply = [&](const std::vector<std::string>& vars) {
    for (const auto& v : vars) p = p * m.diff.derivative(static_cast<std::size_t>(m.ring->index_of(v)));
  };
  apply(m.left_vars);
  apply(m.right_vars);
  MultiPoly str(m.ring);
  for (std::size_t i = 0; i < m.rank(); ++i) {
    if (m.gens[i].parity == 0) str += p(i, i);
    else str -= p(i, i);
  }
  return str;
}

namespace {

// Res over `side` of f, keeping only the part constant in `other`; the
// remaining dependence on `params` is carried along.
MultiPoly side_residue(const MultiPoly& f, const Ring& ring, const std::vector<std::string>& side,
                       const std::vector<std::string>& other, const std::vector<std::string>& params,
                       const Potential& w) {
  Ring pring = sub_ring(ring, params);
  Ring sring = sub_ring(ring, side);
  std::vector<std::size_t> split_vars;
  for (const auto& n : other) split_vars.push_back(static_cast<std::size_t>(ring->index_of(n)));
  for (const auto& n : params) split_vars.push_back(static_cast<std::size_t>(ring->index_of(n)));
  const std::size_t n_other = other.size();
  const long long n = static_cast<long long>(side.size());
  const bool negate = (n * (n + 1) / 2) % 2 == 1;

  std::vector<Term> out;
  for (const auto& [key, coeff] : f.split(split_vars)) {
    if (std::any_of(key.begin(), key.begin() + n_other, [](auto e) { return e != 0; })) continue;
    CycloNumber r;
    if (side.empty()) {
      r = coeff.constant_term();
    } else {
      r = residue(coeff.to_ring(sring), w);
    }
    if (r.is_zero()) continue;
    Exponents e(key.begin() + n_other, key.end());
    out.push_back({make_monomial(*pring, std::move(e)), negate ? -r : r});
  }
  return MultiPoly::from_terms(pring, std::move(out));
}

}  // namespace

std::pair<MultiPoly, MultiPoly> qdim_parametric(const MatrixFactorization& m) {
  MultiPoly str = qdim_supertrace(m);
  auto params = m.internal_vars();
  // residue needs the coefficient field of the potential and the MF to agree
  Potential v = m.left_potential(), w = m.right_potential();
  v.poly = v.poly.to_ring(with_order(v.ring(), m.ring->cyclo_order));
  w.poly = w.poly.to_ring(with_order(w.ring(), m.ring->cyclo_order));
  return {side_residue(str, m.ring, m.left_vars, m.right_vars, params, v),
          side_residue(str, m.ring, m.right_vars, m.left_vars, params, w)};
}

QdimPair qdim(const MatrixFactorization& m) {
  if (!m.internal_vars().empty()) throw DomainError("qdim: factorization has internal variables; reduce first");
  auto rep = validate(m);
  if (!rep.ok) throw DomainError("qdim: invalid factorization: " + rep.message);
  if (!m.left_vars.empty() && !is_potential(m.left_potential()))
    throw DomainError("qdim: left side is not a potential");
  if (!m.right_vars.empty() && !is_potential(m.right_potential()))
    throw DomainError("qdim: right side is not a potential");
  auto [l, r] = qdim_parametric(m);
  QdimPair q;
  q.left = l.constant_term().lift(m.ring->cyclo_order);
  q.right = r.constant_term().lift(m.ring->cyclo_order);
  q.both_nonzero = !q.left.is_zero() && !q.right.is_zero();
  return q;
}

OrbifoldReport verify_orbifold(const MatrixFactorization& m, const Potential& v, const Potential& w) {
  OrbifoldReport rep;
  auto val = validate(m);
  if (!val.ok) {
    rep.message = "invalid factorization: " + val.message;
    return rep;
  }
  if (!m.internal_vars().empty()) {
    rep.message = "factorization has internal variables";
    return rep;
  }
  try {
    if (v.poly.to_ring(m.ring) != m.w_left) {
      rep.message = "left potential differs from V";
      return rep;
    }
    if (w.poly.to_ring(m.ring) != m.w_right) {
      rep.message = "right potential differs from W";
      return rep;
    }
  } catch (const DomainError& e) {
    rep.message = std::string("potentials do not live on the factorization's variables: ") + e.what();
    return rep;
  }
  try {
    rep.qdims = qdim(m);
  } catch (const DomainError& e) {
    rep.message = e.what();
    return rep;
  }
  rep.valid = true;
  rep.witness = rep.qdims.both_nonzero;
  rep.message = rep.witness ? "orbifold equivalence witnessed" : "a quantum dimension vanishes";
  return rep;
}

std::string orbifold_report_json(const OrbifoldReport& r) {
  nlohmann::json j;
  j["valid"] = r.valid;
  j["witness"] = r.witness;
  j["qdim_left"] = r.qdims.left.to_string();
  j["qdim_right"] = r.qdims.right.to_string();
  j["qdim_left_abs"] = std::abs(r.qdims.left.embed());
  j["qdim_right_abs"] = std::abs(r.qdims.right.embed());
  j["message"] = r.message;
  return j.dump(2) + "\n";
}

}  // namespace lgmf
