#include "lgmf/poly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

#include "lgmf/errors.hpp"

namespace lgmf {

namespace {

bool term_greater(const Term& a, const Term& b) { return mono_compare(a.mono, b.mono) > 0; }

CycloNumber to_order(const CycloNumber& c, int order) {
  if (c.order() == order) return c;
  return c.lift(order);
}

}  // namespace

MultiPoly::MultiPoly(Ring ring) : ring_(std::move(ring)) {}

MultiPoly MultiPoly::constant(const Ring& ring, const CycloNumber& c) {
  MultiPoly p(ring);
  if (!c.is_zero()) p.terms_.push_back({monomial_one(*ring), to_order(c, ring->cyclo_order)});
  return p;
}

MultiPoly MultiPoly::constant(const Ring& ring, const Rational& c) {
  return constant(ring, CycloNumber(ring->cyclo_order, c));
}

MultiPoly MultiPoly::variable(const Ring& ring, std::size_t index) {
  if (index >= ring->size()) throw DomainError("variable index out of range");
  Exponents e(ring->size(), 0);
  e[index] = 1;
  MultiPoly p(ring);
  p.terms_.push_back({make_monomial(*ring, e), CycloNumber(ring->cyclo_order, Rational(1))});
  return p;
}

MultiPoly MultiPoly::variable(const Ring& ring, std::string_view name) {
  int i = ring->index_of(name);
  if (i < 0) throw DomainError("unknown variable '" + std::string(name) + "'");
  return variable(ring, static_cast<std::size_t>(i));
}

MultiPoly MultiPoly::monomial(const Ring& ring, const Monomial& m, const CycloNumber& c) {
  MultiPoly p(ring);
  if (!c.is_zero()) p.terms_.push_back({m, to_order(c, ring->cyclo_order)});
  return p;
}

MultiPoly MultiPoly::from_terms(const Ring& ring, std::vector<Term> terms) {
  MultiPoly p(ring);
  if (terms.empty()) return p;
  std::sort(terms.begin(), terms.end(), term_greater);
  const int order = ring->cyclo_order;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += to_order(t.coeff, order);
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
      p.terms_.push_back({std::move(t.mono), to_order(t.coeff, order)});
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
  return p;
}

void MultiPoly::check_ring(const MultiPoly& o) const {
  if (!same_ring(ring_, o.ring_)) {
    throw RingMismatch("'" + ring_->describe() + "' vs '" + o.ring_->describe() + "'");
  }
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

CycloNumber MultiPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return CycloNumber(ring_->cyclo_order);
}

CycloNumber MultiPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& k) { return mono_compare(t.mono, k) > 0; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return CycloNumber(ring_->cyclo_order);
}

Rational MultiPoly::degree() const {
  if (terms_.empty()) return Rational(0);
  return ring_->unscale(terms_.front().mono.deg);
}

bool MultiPoly::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.deg != terms_.front().mono.deg) return false;
  return true;
}

std::optional<Rational> MultiPoly::homogeneous_degree() const {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return degree();
}

MultiPoly MultiPoly::homogeneous_part(long long scaled_deg) const {
  MultiPoly p(ring_);
  for (const auto& t : terms_)
    if (t.mono.deg == scaled_deg) p.terms_.push_back(t);
  return p;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

namespace {
template <bool Subtract>
void merge(const MultiPoly& a, const MultiPoly& b, std::vector<Term>& out) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  out.reserve(ta.size() + tb.size());
  std::size_t i = 0, j = 0;
  while (i < ta.size() || j < tb.size()) {
    int c = (i == ta.size()) ? -1 : (j == tb.size()) ? 1 : mono_compare(ta[i].mono, tb[j].mono);
    if (c > 0) {
      out.push_back(ta[i++]);
    } else if (c < 0) {
      out.push_back(tb[j]);
      if constexpr (Subtract) out.back().coeff = -out.back().coeff;
      ++j;
    } else {
      CycloNumber s = Subtract ? ta[i].coeff - tb[j].coeff : ta[i].coeff + tb[j].coeff;
      if (!s.is_zero()) out.push_back({ta[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
}
}  // namespace

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() && a.ring_ == nullptr) return b;
  if (b.is_zero() && b.ring_ == nullptr) return a;
  a.check_ring(b);
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  MultiPoly r(a.ring_);
  merge<false>(a, b, r.terms_);
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero() && b.ring_ == nullptr) return a;
  if (a.is_zero() && a.ring_ == nullptr) return -b;
  a.check_ring(b);
  if (b.is_zero()) return a;
  MultiPoly r(a.ring_);
  merge<true>(a, b, r.terms_);
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.ring_ == nullptr) return a;
  if (b.ring_ == nullptr) return b;
  a.check_ring(b);
  if (a.is_zero() || b.is_zero()) return MultiPoly(a.ring_);
  if (a.terms_.size() == 1) return b.times_monomial(a.terms_[0].mono, a.terms_[0].coeff);
  if (b.terms_.size() == 1) return a.times_monomial(b.terms_[0].mono, b.terms_[0].coeff);
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prod.push_back({mono_mul(s.mono, t.mono), s.coeff * t.coeff});
  return MultiPoly::from_terms(a.ring_, std::move(prod));
}

MultiPoly MultiPoly::scaled(const CycloNumber& c) const {
  if (c.is_zero()) return MultiPoly(ring_);
  if (c.is_one()) return *this;
  MultiPoly p(ring_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono, to_order(t.coeff * c, ring_->cyclo_order)});
  return p;
}

MultiPoly MultiPoly::times_monomial(const Monomial& m, const CycloNumber& c) const {
  if (c.is_zero()) return MultiPoly(ring_);
  MultiPoly p(ring_);
  p.terms_.reserve(terms_.size());
  const bool unit = c.is_one();
  for (const auto& t : terms_)
    p.terms_.push_back({mono_mul(t.mono, m), unit ? t.coeff : to_order(t.coeff * c, ring_->cyclo_order)});
  return p;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(ring_, Rational(1));
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    auto e = t.mono.exps[var];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.exps[var] = static_cast<std::uint16_t>(e - 1);
    m.deg -= ring_->scaled_degree[var];
    out.push_back({std::move(m), t.coeff.scaled(Rational(e))});
  }
  MultiPoly p(ring_);
  p.terms_ = std::move(out);
  std::sort(p.terms_.begin(), p.terms_.end(), term_greater);
  return p;
}

void MultiPoly::drop_leading() {
  if (!terms_.empty()) terms_.erase(terms_.begin());
}

MultiPoly MultiPoly::monic() const {
  if (terms_.empty()) return *this;
  return scaled(terms_.front().coeff.inverse());
}

std::vector<std::size_t> MultiPoly::support_vars() const {
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < ring_->size(); ++i) {
    for (const auto& t : terms_) {
      if (t.mono.exps[i]) {
        vars.push_back(i);
        break;
      }
    }
  }
  return vars;
}

MultiPoly MultiPoly::to_ring(const Ring& target) const {
  if (same_ring(ring_, target)) return *this;
  std::vector<int> map(ring_->size(), -1);
  for (std::size_t i = 0; i < ring_->size(); ++i) map[i] = target->index_of(ring_->names[i]);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponents e(target->size(), 0);
    for (std::size_t i = 0; i < ring_->size(); ++i) {
      if (t.mono.exps[i] == 0) continue;
      if (map[i] < 0) throw RingMismatch("variable '" + ring_->names[i] + "' missing from " + target->describe());
      e[map[i]] = t.mono.exps[i];
    }
    out.push_back({make_monomial(*target, std::move(e)), t.coeff});
  }
  return from_terms(target, std::move(out));
}

std::map<std::vector<std::uint16_t>, MultiPoly> MultiPoly::split(const std::vector<std::size_t>& vars) const {
  std::map<std::vector<std::uint16_t>, std::vector<Term>> buckets;
  for (const auto& t : terms_) {
    std::vector<std::uint16_t> key;
    key.reserve(vars.size());
    Monomial rest = t.mono;
    for (auto v : vars) {
      key.push_back(t.mono.exps[v]);
      rest.deg -= static_cast<long long>(rest.exps[v]) * ring_->scaled_degree[v];
      rest.exps[v] = 0;
    }
    buckets[key].push_back({std::move(rest), t.coeff});
  }
  std::map<std::vector<std::uint16_t>, MultiPoly> out;
  for (auto& [k, ts] : buckets) out.emplace(k, from_terms(ring_, std::move(ts)));
  return out;
}

MultiPoly MultiPoly::substitute(std::size_t var, const MultiPoly& value) const {
  check_ring(value);
  MultiPoly result(ring_);
  std::vector<MultiPoly> powers{constant(ring_, Rational(1))};
  for (const auto& t : terms_) {
    const unsigned e = t.mono.exps[var];
    while (powers.size() <= e) powers.push_back(powers.back() * value);
    Monomial rest = t.mono;
    rest.exps[var] = 0;
    rest.deg -= static_cast<long long>(e) * ring_->scaled_degree[var];
    result += powers[e].times_monomial(rest, t.coeff);
  }
  return result;
}

std::complex<double> MultiPoly::evaluate(std::span<const std::complex<double>> point) const {
  if (point.size() != ring_->size()) throw DomainError("evaluation point has wrong dimension");
  std::complex<double> acc = 0;
  for (const auto& t : terms_) {
    std::complex<double> v = t.coeff.embed();
    for (std::size_t i = 0; i < point.size(); ++i)
      for (unsigned k = 0; k < t.mono.exps[i]; ++k) v *= point[i];
    acc += v;
  }
  return acc;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.ring_ && b.ring_ && !same_variables(a.ring_, b.ring_)) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono)) return false;
    if (a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    auto cs = t.coeff.coeffs();
    for (std::size_t k = 0; k < cs.size(); ++k) {
      const Rational& c = cs[k];
      if (c.is_zero()) continue;
      Rational mag = c.sign() < 0 ? -c : c;
      if (first) {
        if (c.sign() < 0) os << "-";
      } else {
        os << (c.sign() < 0 ? " - " : " + ");
      }
      first = false;
      std::vector<std::string> factors;
      const bool has_more = k > 0 || !t.mono.is_one();
      if (!mag.is_one() || !has_more) factors.push_back(mag.to_string());
      if (k == 1) factors.push_back("z");
      if (k > 1) factors.push_back("z^" + std::to_string(k));
      for (std::size_t i = 0; i < ring_->size(); ++i) {
        auto e = t.mono.exps[i];
        if (e == 0) continue;
        factors.push_back(e == 1 ? ring_->names[i] : ring_->names[i] + "^" + std::to_string(e));
      }
      for (std::size_t f = 0; f < factors.size(); ++f) os << (f ? "*" : "") << factors[f];
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  Parser(std::string_view text, Ring ring) : s_(text), ring_(std::move(ring)) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  Ring ring_;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    MultiPoly acc = term();
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  MultiPoly term() {
    MultiPoly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        MultiPoly d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc = acc.scaled(d.constant_term().inverse());
      } else {
        return acc;
      }
    }
  }

  MultiPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  MultiPoly power() {
    MultiPoly base = primary();
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected integer exponent");
      unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
      if (e > 10000) fail("exponent too large");
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  MultiPoly primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return MultiPoly::constant(ring_, Rational::parse(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string_view name = s_.substr(start, pos_ - start);
      if (name == "z") return MultiPoly::constant(ring_, CycloNumber::zeta(ring_->cyclo_order, 1));
      int idx = ring_->index_of(name);
      if (idx < 0) fail("unknown variable '" + std::string(name) + "'");
      return MultiPoly::variable(ring_, static_cast<std::size_t>(idx));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

// Gaussian elimination over Q on an augmented system; returns pivot columns.
std::vector<int> row_reduce(std::vector<std::vector<Rational>>& m, std::size_t cols) {
  std::vector<int> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    Rational inv = m[row][c].inverse();
    for (auto& v : m[row]) v *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][c].is_zero()) continue;
      Rational f = m[i][c];
      for (std::size_t k = c; k < m[i].size(); ++k) m[i][k] -= f * m[row][k];
    }
    pivots.push_back(static_cast<int>(c));
    ++row;
  }
  return pivots;
}

}  // namespace

MultiPoly parse_poly(std::string_view text, const Ring& ring) { return Parser(text, ring).parse(); }

std::vector<std::string> scan_variables(std::string_view text) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < text.size();) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isalpha(c) || c == '_') {
      std::size_t start = i;
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
      std::string name(text.substr(start, i - start));
      if (name != "z" && std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
    } else {
      ++i;
    }
  }
  return out;
}

std::vector<Rational> infer_weights(const MultiPoly& p) {
  const std::size_t n = p.ring()->size();
  if (p.is_zero()) throw DomainError("cannot infer weights of the zero polynomial");
  std::vector<std::vector<Rational>> base;
  for (const auto& t : p.terms()) {
    std::vector<Rational> row(n + 1);
    for (std::size_t i = 0; i < n; ++i) row[i] = Rational(t.mono.exps[i]);
    row[n] = Rational(2);
    base.push_back(std::move(row));
  }
  auto solve = [&](std::vector<std::vector<Rational>> m) -> std::optional<std::pair<std::vector<int>, std::vector<std::vector<Rational>>>> {
    auto piv = row_reduce(m, n);
    for (const auto& row : m) {
      bool zero = true;
      for (std::size_t i = 0; i < n; ++i) zero = zero && row[i].is_zero();
      if (zero && !row[n].is_zero()) return std::nullopt;
    }
    return std::make_pair(piv, m);
  };
  auto sys = base;
  for (int round = 0; round < 3; ++round) {
    auto res = solve(sys);
    if (!res) throw DomainError("polynomial is not quasi-homogeneous: " + p.to_string());
    auto& [piv, m] = *res;
    if (piv.size() == n) {
      std::vector<Rational> q(n);
      for (std::size_t r = 0; r < piv.size(); ++r) q[piv[r]] = m[r][n] / Rational(2);
      for (std::size_t i = 0; i < n; ++i)
        if (q[i].sign() <= 0) throw DomainError("inferred weights are not positive for " + p.to_string());
      return q;
    }
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < n; ++i)
      if (std::find(piv.begin(), piv.end(), static_cast<int>(i)) == piv.end()) free.push_back(i);
    // tie free variables together; second round ties them to the first variable
    for (std::size_t k = 0; k < free.size(); ++k) {
      std::vector<Rational> row(n + 1);
      std::size_t other = (round == 0 && k + 1 < free.size()) ? free[k + 1] : 0;
      if (other == free[k]) continue;
      row[free[k]] = Rational(1);
      row[other] = Rational(-1);
      sys.push_back(row);
    }
  }
  throw DomainError("weights are underdetermined for " + p.to_string());
}

MultiPoly parse_with_inferred_ring(std::string_view text, int cyclo_order) {
  auto names = scan_variables(text);
  std::vector<Rational> tmp(names.size(), Rational(1, 2));
  Ring provisional = make_ring(names, tmp, cyclo_order);
  MultiPoly p = parse_poly(text, provisional);
  Ring ring = make_ring(names, infer_weights(p), cyclo_order);
  return p.to_ring(ring);
}

}  // namespace lgmf
