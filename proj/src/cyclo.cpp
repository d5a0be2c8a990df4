#include "lgmf/cyclo.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace lgmf {

namespace {

// exact division of integer polynomials by a monic divisor
std::vector<long long> divide_monic(std::vector<long long> num, const std::vector<long long>& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) return {0};
  std::vector<long long> q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    long long c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

// polynomial remainder modulo a monic integer polynomial, rational coefficients
void reduce_mod(std::vector<Rational>& p, const std::vector<long long>& modulus) {
  const std::size_t deg = modulus.size() - 1;
  for (std::size_t i = p.size(); i-- > deg;) {
    if (p[i].is_zero()) continue;
    Rational c = p[i];
    for (std::size_t j = 0; j <= deg; ++j) {
      if (modulus[j] != 0) p[i - deg + j] -= c * Rational(modulus[j]);
    }
  }
  if (p.size() > deg) p.resize(deg);
}

std::unique_ptr<CycloField> build_field(int n) {
  auto f = std::make_unique<CycloField>();
  f->order = n;
  f->phi_poly = cyclotomic_polynomial(n);
  f->degree = static_cast<int>(f->phi_poly.size()) - 1;
  const int deg = f->degree;
  // t^deg = -(phi_0 + ... + phi_{deg-1} t^{deg-1})
  std::vector<long long> cur(deg, 0);
  for (int k = deg; k <= 2 * deg - 2; ++k) {
    std::vector<long long> next(deg, 0);
    if (k == deg) {
      for (int j = 0; j < deg; ++j) next[j] = -f->phi_poly[j];
    } else {
      // multiply previous by t and reduce
      long long top = cur[deg - 1];
      for (int j = deg - 1; j > 0; --j) next[j] = cur[j - 1];
      next[0] = 0;
      for (int j = 0; j < deg; ++j) next[j] -= top * f->phi_poly[j];
    }
    f->high_powers.push_back(next);
    cur = next;
  }
  return f;
}

}  // namespace

std::vector<long long> cyclotomic_polynomial(int n) {
  if (n <= 0) throw std::invalid_argument("cyclotomic order must be positive");
  static std::mutex mu;
  static std::map<int, std::vector<long long>> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  std::vector<long long> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int k = 1; k < n; ++k) {
    if (n % k == 0) p = divide_monic(p, cyclotomic_polynomial(k));
  }
  std::lock_guard lock(mu);
  cache.emplace(n, p);
  return p;
}

const CycloField& cyclo_field(int order) {
  if (order <= 0) throw std::invalid_argument("cyclotomic order must be positive");
  thread_local int last_order = 0;
  thread_local const CycloField* last = nullptr;
  if (order == last_order) return *last;
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CycloField>> fields;
  std::lock_guard lock(mu);
  auto it = fields.find(order);
  if (it == fields.end()) it = fields.emplace(order, build_field(order)).first;
  last_order = order;
  last = it->second.get();
  return *last;
}

namespace {
const CycloField* rational_field() {
  static const CycloField* f = &cyclo_field(1);
  return f;
}
}  // namespace

CycloNumber::CycloNumber() : field_(rational_field()), coeffs_(1) {}

CycloNumber::CycloNumber(int order) : field_(&cyclo_field(order)), coeffs_(field_->degree) {}

CycloNumber::CycloNumber(int order, const Rational& value)
    : field_(order == 1 ? rational_field() : &cyclo_field(order)), coeffs_(field_->degree) {
  coeffs_[0] = value;
}

CycloNumber::CycloNumber(int order, Coeffs coeffs) : field_(&cyclo_field(order)) {
  std::vector<Rational> wide(coeffs.begin(), coeffs.end());
  if (static_cast<int>(wide.size()) < field_->degree) wide.resize(field_->degree);
  reduce_mod(wide, field_->phi_poly);
  coeffs_.assign(wide.begin(), wide.end());
}

CycloNumber CycloNumber::zeta(int order, long long power) {
  long long p = ((power % order) + order) % order;
  Coeffs c(static_cast<std::size_t>(p) + 1);
  c[p] = Rational(1);
  return CycloNumber(order, std::move(c));
}

bool CycloNumber::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

bool CycloNumber::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return false;
  return true;
}

bool CycloNumber::is_one() const { return is_rational() && coeffs_[0].is_one(); }

CycloNumber CycloNumber::lift(int m) const {
  const int n = order();
  if (m == n) return *this;
  if (is_rational()) return CycloNumber(m, coeffs_[0]);
  if (m % n != 0) throw std::invalid_argument("cannot lift Q(zeta_" + std::to_string(n) +
                                              ") into Q(zeta_" + std::to_string(m) + ")");
  const int step = m / n;
  Coeffs wide(static_cast<std::size_t>(step) * (coeffs_.size() - 1) + 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) wide[k * step] = coeffs_[k];
  return CycloNumber(m, std::move(wide));
}

namespace {
int common_order(const CycloNumber& a, const CycloNumber& b) {
  if (a.order() == b.order()) return a.order();
  if (a.is_rational()) return b.order();
  if (b.is_rational()) return a.order();
  return static_cast<int>(lcm_ll(a.order(), b.order()));
}
}  // namespace

CycloNumber& CycloNumber::operator+=(const CycloNumber& o) {
  if (o.order() != order()) return *this = *this + o;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!o.coeffs_[i].is_zero()) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& o) {
  if (o.order() != order()) return *this = *this - o;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!o.coeffs_[i].is_zero()) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CycloNumber operator+(const CycloNumber& a, const CycloNumber& b) {
  if (a.order() != b.order()) {
    int m = common_order(a, b);
    return a.lift(m) + b.lift(m);
  }
  CycloNumber r = a;
  r += b;
  return r;
}

CycloNumber operator-(const CycloNumber& a, const CycloNumber& b) {
  if (a.order() != b.order()) {
    int m = common_order(a, b);
    return a.lift(m) - b.lift(m);
  }
  CycloNumber r = a;
  r -= b;
  return r;
}

CycloNumber CycloNumber::operator-() const {
  CycloNumber r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycloNumber CycloNumber::scaled(const Rational& s) const {
  CycloNumber r = *this;
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

CycloNumber operator*(const CycloNumber& a, const CycloNumber& b) {
  if (a.order() != b.order()) {
    int m = common_order(a, b);
    return a.lift(m) * b.lift(m);
  }
  const CycloField& f = *a.field_;
  const int deg = f.degree;
  if (deg == 1) {
    CycloNumber r = a;
    r.coeffs_[0] = a.coeffs_[0] * b.coeffs_[0];
    return r;
  }
  if (b.is_rational()) return a.scaled(b.coeffs_[0]);
  if (a.is_rational()) return b.scaled(a.coeffs_[0]);
  boost::container::small_vector<Rational, 8> wide(2 * deg - 1);
  for (int i = 0; i < deg; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (int j = 0; j < deg; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      wide[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  CycloNumber r = a;
  for (int k = 0; k < deg; ++k) r.coeffs_[k] = wide[k];
  for (int h = deg; h <= 2 * deg - 2; ++h) {
    if (wide[h].is_zero()) continue;
    const auto& row = f.high_powers[h - deg];
    for (int k = 0; k < deg; ++k)
      if (row[k] != 0) r.coeffs_[k] += wide[h] * Rational(row[k]);
  }
  return r;
}

CycloNumber CycloNumber::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in Q(zeta_" + std::to_string(order()) + ")");
  if (is_rational()) return CycloNumber(order(), coeffs_[0].inverse());
  // Solve (mult-by-this) x = 1 by Gaussian elimination over Q.
  const int deg = field_->degree;
  std::vector<std::vector<Rational>> m(deg, std::vector<Rational>(deg + 1));
  CycloNumber basis = CycloNumber(order(), Rational(1));
  const CycloNumber t = zeta(order(), 1);
  for (int j = 0; j < deg; ++j) {
    CycloNumber col = *this * basis;
    for (int i = 0; i < deg; ++i) m[i][j] = col.coeffs_[i];
    basis = basis * t;
  }
  m[0][deg] = Rational(1);
  for (int c = 0; c < deg; ++c) {
    int piv = c;
    while (piv < deg && m[piv][c].is_zero()) ++piv;
    if (piv == deg) throw std::logic_error("singular multiplication matrix in cyclotomic inverse");
    std::swap(m[piv], m[c]);
    Rational inv = m[c][c].inverse();
    for (int k = c; k <= deg; ++k) m[c][k] *= inv;
    for (int i = 0; i < deg; ++i) {
      if (i == c || m[i][c].is_zero()) continue;
      Rational fct = m[i][c];
      for (int k = c; k <= deg; ++k) m[i][k] -= fct * m[c][k];
    }
  }
  CycloNumber r(order());
  for (int i = 0; i < deg; ++i) r.coeffs_[i] = m[i][deg];
  return r;
}

CycloNumber operator/(const CycloNumber& a, const CycloNumber& b) { return a * b.inverse(); }

CycloNumber CycloNumber::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  CycloNumber result(order(), Rational(1));
  CycloNumber base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool operator==(const CycloNumber& a, const CycloNumber& b) {
  if (a.order() != b.order()) {
    int m = common_order(a, b);
    return a.lift(m) == b.lift(m);
  }
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    if (a.coeffs_[i] != b.coeffs_[i]) return false;
  return true;
}

std::complex<double> CycloNumber::embed() const {
  const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  long double re = 0, im = 0;
  const int n = order();
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    long double c = coeffs_[k].to_long_double();
    long double ang = two_pi * static_cast<long double>(k) / static_cast<long double>(n);
    re += c * std::cos(ang);
    im += c * std::sin(ang);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

std::complex<double> embed_numeric(const CycloNumber& a) { return a.embed(); }

std::string CycloNumber::to_string() const {
  std::ostringstream os;
  int nonzero = 0;
  for (const auto& c : coeffs_) nonzero += !c.is_zero();
  if (nonzero == 0) return "0";
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (!mag.is_one()) os << mag << "*";
    os << "z";
    if (k > 1) os << "^" << k;
  }
  if (nonzero > 1) return "(" + os.str() + ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycloNumber& c) { return os << c.to_string(); }

}  // namespace lgmf
