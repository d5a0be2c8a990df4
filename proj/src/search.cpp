#include "lgmf/search.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Dense>
#include <json.hpp>

#include "lgmf/errors.hpp"
#include "lgmf/parallel.hpp"

namespace lgmf {

namespace {

using cd = std::complex<double>;

// polynomial with embedded coefficients, for the inner loop
struct NumPoly {
  std::vector<cd> coeffs;
  std::vector<std::vector<std::pair<int, int>>> powers;  // (var, exponent)

  explicit NumPoly(const MultiPoly& p) {
    for (const auto& t : p.terms()) {
      coeffs.push_back(t.coeff.embed());
      std::vector<std::pair<int, int>> pw;
      for (std::size_t i = 0; i < t.mono.exps.size(); ++i)
        if (t.mono.exps[i]) pw.push_back({static_cast<int>(i), t.mono.exps[i]});
      powers.push_back(std::move(pw));
    }
  }

  cd operator()(const Eigen::VectorXcd& x) const {
    cd acc = 0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      cd v = coeffs[k];
      for (auto [i, e] : powers[k])
        for (int r = 0; r < e; ++r) v *= x[i];
      acc += v;
    }
    return acc;
  }
};

struct Compiled {
  std::vector<NumPoly> f;
  std::vector<std::vector<std::pair<int, NumPoly>>> jac;  // per equation, nonzero partials

  explicit Compiled(const AnsatzSystem& s) {
    for (const auto& e : s.equations) {
      f.emplace_back(e);
      std::vector<std::pair<int, NumPoly>> row;
      for (std::size_t v = 0; v < s.unknowns.size(); ++v) {
        MultiPoly d = e.derivative(v);
        if (!d.is_zero()) row.emplace_back(static_cast<int>(v), NumPoly(d));
      }
      jac.push_back(std::move(row));
    }
  }

  Eigen::VectorXcd eval(const Eigen::VectorXcd& x) const {
    Eigen::VectorXcd r(f.size());
    for (std::size_t k = 0; k < f.size(); ++k) r[k] = f[k](x);
    return r;
  }

  Eigen::MatrixXcd jacobian(const Eigen::VectorXcd& x) const {
    Eigen::MatrixXcd j = Eigen::MatrixXcd::Zero(f.size(), x.size());
    for (std::size_t k = 0; k < f.size(); ++k)
      for (const auto& [v, p] : jac[k]) j(k, v) = p(x);
    return j;
  }
};

struct Attempt {
  bool converged = false;
  Eigen::VectorXcd x;
  double residual = 0;
};

// Damped Gauss-Newton from x; coordinates flagged in `fixed` stay put.
Attempt refine(const Compiled& c, Eigen::VectorXcd x, const std::vector<bool>& fixed, const SearchOptions& opt,
               const std::chrono::steady_clock::time_point& deadline) {
  Attempt a;
  a.x = std::move(x);
  Eigen::VectorXcd r = c.eval(a.x);
  double norm = r.norm();
  double lambda = 1e-3;
  for (int it = 0; it < opt.max_iterations && norm > opt.tol * 1e-2; ++it) {
    if ((it & 15) == 0 && std::chrono::steady_clock::now() > deadline) break;
    Eigen::MatrixXcd j = c.jacobian(a.x);
    for (std::size_t v = 0; v < fixed.size(); ++v)
      if (fixed[v]) j.col(static_cast<Eigen::Index>(v)).setZero();
    Eigen::MatrixXcd jh = j.adjoint();
    Eigen::MatrixXcd lhs = jh * j;
    Eigen::VectorXcd rhs = -(jh * r);
    bool improved = false;
    for (int tries = 0; tries < 12 && !improved; ++tries) {
      Eigen::MatrixXcd damped = lhs;
      damped.diagonal().array() += lambda;
      Eigen::VectorXcd step = damped.ldlt().solve(rhs);
      Eigen::VectorXcd x2 = a.x + step;
      Eigen::VectorXcd r2 = c.eval(x2);
      double n2 = r2.norm();
      if (std::isfinite(n2) && n2 < norm) {
        a.x = x2;
        r = r2;
        norm = n2;
        lambda = std::max(lambda / 3, 1e-15);
        improved = true;
      } else {
        lambda *= 4;
      }
    }
    if (!improved) break;
  }
  a.residual = norm;
  a.converged = norm < opt.tol;
  return a;
}

Attempt levenberg_marquardt(const Compiled& c, std::size_t n, std::uint64_t seed, std::size_t index,
                            const SearchOptions& opt, const std::chrono::steady_clock::time_point& deadline) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXcd x(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) x[i] = cd(normal(rng), normal(rng));
  return refine(c, std::move(x), std::vector<bool>(n, false), opt, deadline);
}

// Solutions usually come in families (leftover basis changes), and a random
// point of a family is not cyclotomic. Pin unknowns one at a time to 0, to a
// recognized value or to 1 while the rest can still be solved for.
Attempt snap(const Compiled& c, const Attempt& a, const SearchOptions& opt,
             const std::chrono::steady_clock::time_point& deadline) {
  const std::size_t n = static_cast<std::size_t>(a.x.size());
  Attempt cur = a;
  std::vector<bool> fixed(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<cd> cands = {0.0};
    for (int order = 1; order <= opt.max_order; ++order)
      if (auto v = recognize_cyclotomic(cur.x[i], order, 1e-4)) {
        cands.push_back(v->embed());
        break;
      }
    cands.push_back(1.0);
    fixed[i] = true;
    bool kept = false;
    for (cd v : cands) {
      Eigen::VectorXcd y = cur.x;
      y[i] = v;
      Attempt t = refine(c, std::move(y), fixed, opt, deadline);
      if (t.converged) {
        cur = std::move(t);
        kept = true;
        break;
      }
    }
    fixed[i] = kept;
  }
  return cur;
}

}  // namespace

std::optional<CycloNumber> recognize_cyclotomic(cd x, int n, double tol) {
  if (std::abs(x) < tol) return CycloNumber(n, Rational(0));
  std::vector<CycloNumber> base = {CycloNumber(n, Rational(1))};
  for (int j = 1; 2 * j < n; ++j) base.push_back(CycloNumber::zeta(n, j) + CycloNumber::zeta(n, n - j));
  static const Rational scales[] = {Rational(1), Rational(2), Rational(3), Rational(1, 2),
                                    Rational(1, 3), Rational(1, 4), Rational(3, 2), Rational(2, 3)};
  std::vector<CycloNumber> mags;
  for (const auto& r : scales)
    for (const auto& c : base) mags.push_back(c.scaled(r));
  const double scale = std::max(1.0, std::abs(x));
  for (const auto& c : mags) {
    cd cv = c.embed();
    if (std::abs(std::abs(cv) - std::abs(x)) > tol * scale) continue;
    for (int k = 0; k < n; ++k) {
      CycloNumber cand = c * CycloNumber::zeta(n, k);
      if (std::abs(cand.embed() - x) <= tol * scale) return cand;
    }
  }
  return std::nullopt;
}

SearchResult search(const AnsatzSystem& sys, const SearchOptions& opt) {
  if (opt.attempts < 1) throw DomainError("search: attempts must be at least 1");
  if (!(opt.tol > 0)) throw DomainError("search: tolerance must be positive");
  const std::size_t n = sys.unknowns.size();
  Compiled c(sys);
  auto [ql, qr] = qdim_parametric(sys.mf);
  NumPoly nql(ql.to_ring(sys.unknown_ring)), nqr(qr.to_ring(sys.unknown_ring));

  const auto start = std::chrono::steady_clock::now();
  const auto deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                    std::chrono::duration<double>(opt.budget_seconds));
  std::vector<std::optional<Attempt>> runs(static_cast<std::size_t>(opt.attempts));
  parallel_for(
      runs.size(),
      [&](std::size_t k) {
        if (std::chrono::steady_clock::now() > deadline) return;
        runs[k] = levenberg_marquardt(c, n, opt.seed, k, opt, deadline);
      },
      opt.jobs);

  SearchResult res;
  for (std::size_t k = 0; k < runs.size(); ++k) {
    if (!runs[k]) {
      res.budget_exhausted = true;
      continue;
    }
    ++res.attempts_run;
    const Attempt& a = *runs[k];
    if (!a.converged) continue;
    bool dup = false;
    for (const auto& s : res.solutions) {
      double dist = 0;
      for (std::size_t i = 0; i < n; ++i) dist = std::max(dist, std::abs(s.values[i] - a.x[i]));
      if (dist < 1e-6) dup = true;
    }
    if (dup) continue;
    SearchSolution s;
    s.attempt = k;
    s.values.assign(a.x.data(), a.x.data() + n);
    s.residual = a.residual;
    s.qdim_left = nql(a.x);
    s.qdim_right = nqr(a.x);
    auto reconstruct = [&](const std::vector<cd>& values) {
      for (int order = 1; order <= opt.max_order && !s.exact; ++order) {
        std::vector<CycloNumber> vals;
        for (std::size_t i = 0; i < n; ++i) {
          auto v = recognize_cyclotomic(values[i], order, opt.match_tol);
          if (!v) break;
          vals.push_back(*v);
        }
        if (vals.size() != n) continue;
        auto mf = substitute_unknowns(sys, vals);
        if (!validate(mf).ok) continue;
        s.report = verify_orbifold(mf, mf.left_potential(), mf.right_potential());
        s.exact = s.report.valid;
        if (s.exact) {
          s.exact_values = vals;
          s.mf = mf;
        }
      }
    };
    reconstruct(s.values);
    if (!s.exact && opt.snap) {
      Attempt t = snap(c, a, opt, deadline);
      if (t.converged) {
        std::vector<cd> vals(t.x.data(), t.x.data() + n);
        reconstruct(vals);
        if (s.exact) {
          s.values = vals;
          s.residual = t.residual;
          s.qdim_left = nql(t.x);
          s.qdim_right = nqr(t.x);
          s.snapped = true;
        }
      }
    }
    res.solutions.push_back(std::move(s));
  }
  return res;
}

std::string search_result_json(const AnsatzSystem& sys, const SearchResult& r) {
  nlohmann::json j;
  j["attempts_run"] = r.attempts_run;
  j["budget_exhausted"] = r.budget_exhausted;
  j["unknowns"] = sys.unknowns;
  j["equations"] = sys.equations.size();
  auto& sols = j["solutions"] = nlohmann::json::array();
  auto cjson = [](cd v) { return nlohmann::json::array({v.real(), v.imag()}); };
  for (const auto& s : r.solutions) {
    nlohmann::json o;
    o["attempt"] = s.attempt;
    o["residual"] = s.residual;
    auto& vals = o["values"] = nlohmann::json::array();
    for (auto v : s.values) vals.push_back(cjson(v));
    o["qdim_left"] = cjson(s.qdim_left);
    o["qdim_right"] = cjson(s.qdim_right);
    o["exact"] = s.exact;
    if (s.snapped) o["snapped"] = true;
    if (s.exact) {
      auto& ev = o["exact_values"] = nlohmann::json::array();
      for (const auto& v : s.exact_values) ev.push_back(v.to_string());
      o["cyclo_order"] = s.mf->ring->cyclo_order;
      o["witness"] = s.report.witness;
      o["exact_qdim_left"] = s.report.qdims.left.to_string();
      o["exact_qdim_right"] = s.report.qdims.right.to_string();
    }
    sols.push_back(std::move(o));
  }
  return j.dump(2) + "\n";
}

}  // namespace lgmf
