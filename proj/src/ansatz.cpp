#include "lgmf/ansatz.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include "lgmf/errors.hpp"
#include "lgmf/mf_io.hpp"

namespace lgmf {

namespace {

std::string fresh(const std::string& base, const std::set<std::string>& taken) {
  static const char* pool[] = {"u", "v", "w", "t", "s", "r", "p", "q"};
  if (!taken.count(base)) return base;
  for (const char* p : pool)
    if (!taken.count(p)) return p;
  for (int k = 1;; ++k)
    if (!taken.count(base + std::to_string(k))) return base + std::to_string(k);
}

struct Slot {
  std::size_t i, j;
  Rational degree;
  std::vector<Monomial> monos;  // over the outer ring
};

}  // namespace

AnsatzSystem make_ansatz(const Potential& v, const Potential& w, int rank, const std::vector<Rational>& ladder,
                         bool gauge) {
  if (rank <= 0 || rank % 2) throw DomainError("ansatz: rank must be a positive even number");
  if (ladder.size() != static_cast<std::size_t>(rank)) throw DomainError("ansatz: ladder length must equal the rank");
  if (v.poly.is_zero() && w.poly.is_zero()) throw DomainError("ansatz: V - W is zero");

  // outer variables: V's, then W's (renamed away from V's)
  std::vector<std::string> left = v.ring()->names;
  std::set<std::string> taken(left.begin(), left.end());
  std::vector<std::string> right;
  for (const auto& n : w.ring()->names) {
    std::string r = fresh(n, taken);
    taken.insert(r);
    right.push_back(r);
  }
  Potential wr = rename_variables(w, right);
  const int order = static_cast<int>(lcm_ll(v.ring()->cyclo_order, w.ring()->cyclo_order));
  Ring outer = union_ring(v.ring(), wr.ring());
  outer = with_order(outer, order);

  const std::size_t n = ladder.size();
  const std::size_t half = n / 2;
  auto parity = [&](std::size_t k) { return k < half ? 0 : 1; };

  std::vector<Slot> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (parity(i) == parity(j)) continue;
      Slot s{i, j, Rational(1) + ladder[j] - ladder[i], {}};
      Rational scaled = s.degree * Rational(outer->degree_scale);
      if (scaled.is_integer() && scaled.sign() >= 0)
        s.monos = monomials_of_degree(*outer, scaled.numerator().get_si());
      if (!s.monos.empty()) slots.push_back(std::move(s));
    }
  if (slots.empty()) throw DomainError("ansatz: degree ladder forces every entry to vanish");

  // gauge: spanning forest over generators, cheapest slots first
  std::set<std::pair<std::size_t, std::size_t>> fixed_slot;
  if (gauge) {
    std::vector<int> comp(n);
    for (std::size_t k = 0; k < n; ++k) comp[k] = static_cast<int>(k);
    auto find = [&](int k) {
      while (comp[k] != k) k = comp[k] = comp[comp[k]];
      return k;
    };
    std::vector<const Slot*> order_slots;
    for (const auto& s : slots) order_slots.push_back(&s);
    std::stable_sort(order_slots.begin(), order_slots.end(),
                     [](const Slot* a, const Slot* b) { return a->degree < b->degree; });
    for (const Slot* s : order_slots) {
      int a = find(static_cast<int>(s->i)), b = find(static_cast<int>(s->j));
      if (a == b) continue;
      comp[a] = b;
      fixed_slot.insert({s->i, s->j});
    }
  }

  // unknown names
  std::string prefix = "a";
  while (std::any_of(taken.begin(), taken.end(), [&](const std::string& t) { return t.rfind(prefix, 0) == 0; }))
    prefix += "a";
  std::size_t count = 0;
  for (const auto& s : slots) count += s.monos.size() - (fixed_slot.count({s.i, s.j}) ? 1 : 0);

  AnsatzSystem sys;
  std::vector<std::string> names = outer->names;
  std::vector<Rational> weights = outer->weights;
  for (std::size_t k = 0; k < count; ++k) {
    sys.unknowns.push_back(prefix + std::to_string(k));
    names.push_back(sys.unknowns.back());
    weights.push_back(Rational(0));
  }
  Ring ring = make_ring(names, weights, order);
  sys.unknown_ring = sub_ring(ring, sys.unknowns);
  sys.ladder = ladder;

  MatrixFactorization& m = sys.mf;
  m.ring = ring;
  m.left_vars = left;
  m.right_vars = right;
  m.w_left = v.poly.to_ring(ring);
  m.w_right = wr.poly.to_ring(ring);
  for (std::size_t k = 0; k < n; ++k) m.gens.push_back({parity(k), ladder[k]});
  m.diff = PolyMatrix(ring, n, n);
  std::size_t next = 0;
  const std::size_t n_outer = outer->size();
  for (const auto& s : slots) {
    std::vector<Term> terms;
    bool gauged = fixed_slot.count({s.i, s.j}) > 0;
    for (std::size_t k = 0; k < s.monos.size(); ++k) {
      Exponents e(ring->size(), 0);
      std::copy(s.monos[k].exps.begin(), s.monos[k].exps.end(), e.begin());
      if (k == 0 && gauged) {
        terms.push_back({make_monomial(*ring, std::move(e)), CycloNumber(order, Rational(1))});
        continue;
      }
      e[n_outer + next++] = 1;
      terms.push_back({make_monomial(*ring, std::move(e)), CycloNumber(order, Rational(1))});
    }
    m.diff(s.i, s.j) = MultiPoly::from_terms(ring, std::move(terms));
  }
  rebuild_equations(sys);
  return sys;
}

void rebuild_equations(AnsatzSystem& s) {
  const auto& m = s.mf;
  const std::size_t n = m.rank();
  PolyMatrix sq = m.diff * m.diff;
  MultiPoly w = m.w_left - m.w_right;
  std::vector<std::size_t> outer_idx;
  for (const auto& name : m.ring->names)
    if (std::find(s.unknowns.begin(), s.unknowns.end(), name) == s.unknowns.end())
      outer_idx.push_back(static_cast<std::size_t>(m.ring->index_of(name)));
  s.residuals.clear();
  s.equations.clear();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      MultiPoly r = i == j ? sq(i, j) - w : sq(i, j);
      if (r.is_zero()) continue;
      s.residuals.push_back(r);
      for (const auto& [key, coeff] : r.split(outer_idx)) {
        MultiPoly e = coeff.to_ring(s.unknown_ring);
        // the diagonal blocks of d^2 repeat each other
        bool seen = std::any_of(s.equations.begin(), s.equations.end(),
                                [&](const MultiPoly& f) { return f == e || f == -e; });
        if (!seen) s.equations.push_back(std::move(e));
      }
    }
}

MatrixFactorization substitute_unknowns(const AnsatzSystem& s, const std::vector<CycloNumber>& values) {
  if (values.size() != s.unknowns.size()) throw DomainError("substitute: wrong number of values");
  const auto& m = s.mf;
  long long order = m.ring->cyclo_order;
  for (const auto& v : values) order = lcm_ll(order, v.order());
  std::vector<std::string> outer;
  for (const auto& name : m.ring->names)
    if (std::find(s.unknowns.begin(), s.unknowns.end(), name) == s.unknowns.end()) outer.push_back(name);
  Ring target = with_order(sub_ring(m.ring, outer), static_cast<int>(order));
  std::vector<std::size_t> idx;
  for (const auto& u : s.unknowns) idx.push_back(static_cast<std::size_t>(m.ring->index_of(u)));
  std::vector<CycloNumber> vals;
  for (const auto& v : values) vals.push_back(v.lift(static_cast<int>(order)));

  auto subst = [&](const MultiPoly& p) {
    MultiPoly out(target);
    for (const auto& [key, coeff] : p.split(idx)) {
      CycloNumber c(static_cast<int>(order), Rational(1));
      for (std::size_t k = 0; k < key.size(); ++k)
        if (key[k]) c *= vals[k].pow(key[k]);
      if (c.is_zero()) continue;
      out += coeff.to_ring(target).scaled(c);
    }
    return out;
  };
  MatrixFactorization r;
  r.ring = target;
  r.left_vars = m.left_vars;
  r.right_vars = m.right_vars;
  r.w_left = m.w_left.to_ring(target);
  r.w_right = m.w_right.to_ring(target);
  r.gens = m.gens;
  r.diff = PolyMatrix(target, m.rank(), m.rank());
  for (std::size_t i = 0; i < m.rank(); ++i)
    for (std::size_t j = 0; j < m.rank(); ++j)
      if (!m.diff(i, j).is_zero()) r.diff(i, j) = subst(m.diff(i, j));
  return r;
}

std::string export_system(const AnsatzSystem& s) {
  std::ostringstream os;
  os << "system v1\n";
  os << "unknowns";
  for (const auto& u : s.unknowns) os << " " << u;
  os << "\nladder";
  for (const auto& q : s.ladder) os << " " << q;
  os << "\nresiduals " << s.residuals.size() << "\n";
  for (const auto& r : s.residuals) os << r.to_string() << "\n";
  os << "equations " << s.equations.size() << "\n";
  os << write_mf(s.mf);
  return os.str();
}

void export_system(const AnsatzSystem& s, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write '" + path + "'");
  out << export_system(s);
  if (!out) throw DomainError("write failed for '" + path + "'");
}

AnsatzSystem import_system(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  auto next = [&]() {
    if (!std::getline(is, line)) throw ParseError("truncated system document");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
  };
  if (next() != "system v1") throw ParseError("not a 'system v1' document");
  AnsatzSystem s;
  {
    std::istringstream ls(next());
    std::string word;
    ls >> word;
    if (word != "unknowns") throw ParseError("expected 'unknowns' line");
    while (ls >> word) s.unknowns.push_back(word);
  }
  {
    std::istringstream ls(next());
    std::string word;
    ls >> word;
    if (word != "ladder") throw ParseError("expected 'ladder' line");
    while (ls >> word) s.ladder.push_back(Rational::parse(word));
  }
  std::size_t nres = 0, neq = 0;
  std::string word;
  {
    std::istringstream ls(next());
    if (!(ls >> word >> nres) || word != "residuals") throw ParseError("expected 'residuals' line");
  }
  std::vector<std::string> residual_text;
  for (std::size_t k = 0; k < nres; ++k) residual_text.push_back(next());
  {
    std::istringstream ls(next());
    if (!(ls >> word >> neq) || word != "equations") throw ParseError("expected 'equations' line");
  }
  std::string rest((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
  s.mf = read_mf(rest);
  // read_mf infers outer variables from the potentials, which is what we want
  for (const auto& u : s.unknowns)
    if (s.mf.ring->index_of(u) < 0) throw ParseError("unknown '" + u + "' missing from the template ring");
  s.unknown_ring = sub_ring(s.mf.ring, s.unknowns);
  rebuild_equations(s);
  if (s.residuals.size() != nres || s.equations.size() != neq)
    throw ParseError("system counts do not match the template");
  for (std::size_t k = 0; k < nres; ++k)
    if (parse_poly(residual_text[k], s.mf.ring) != s.residuals[k])
      throw ParseError("residual " + std::to_string(k) + " does not match the template");
  return s;
}

AnsatzSystem import_system_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return import_system(ss.str());
}

}  // namespace lgmf
