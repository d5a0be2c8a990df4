// One line per acceptance criterion; exit status 1 if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "lgmf/ansatz.hpp"
#include "lgmf/cft.hpp"
#include "lgmf/complex.hpp"
#include "lgmf/decompose.hpp"
#include "lgmf/mf_io.hpp"
#include "lgmf/qdim.hpp"
#include "lgmf/reduce.hpp"
#include "lgmf/search.hpp"

using namespace lgmf;

namespace {

constexpr double kQdimTol = 1e-9;
constexpr double kResidualTol = 1e-10;
constexpr double kUnitBudgetSeconds = 30;
constexpr double kAdBudgetSeconds = 600;

int failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(int n, bool ok, const std::string& what, const std::string& detail) {
  if (!ok) ++failures;
  std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << "  " << what << "  [" << detail << "]"
            << std::endl;
}

void info(const std::string& what, const std::string& detail) {
  std::cout << "info: " << what << "  [" << detail << "]" << std::endl;
}

// Runs a criterion body; an exception counts as a failure with its message.
void guarded(int n, const std::string& what, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(n, false, what, std::string("exception: ") + e.what());
  }
}

std::string fmt(double v, int prec = 3) {
  std::ostringstream os;
  os.precision(prec);
  os << std::fixed << v;
  return os.str();
}

std::string sci(double v) {
  std::ostringstream os;
  os.precision(2);
  os << std::scientific << v;
  return os.str();
}

MatrixFactorization full_j(int d) {
  std::vector<int> J;
  for (int j = 0; j < d; ++j) J.push_back(j);
  return make_permutation_mf(d, J);
}

bool abs_one(const CycloNumber& c) {
  return c.is_rational() && (c.rational_part() == Rational(1) || c.rational_part() == Rational(-1));
}

bool all_hom_stabilized = true;

void unit_endomorphisms() {
  guarded(1, "Hom(I,I) = (d-1, 0) for d = 3..6", [] {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string dims;
    for (int d = 3; d <= 6; ++d) {
      auto p = make_permutation_mf(make_label(d, 0, 0));
      auto h = hom_dims(p, p);
      // the general complex as well, not only the Koszul model hom_dims picks
      auto g = cohomology_dims(hom_complex(p, p));
      all_hom_stabilized &= h.stabilized && g.stabilized;
      ok &= h.even == std::size_t(d - 1) && h.odd == 0 && h.stabilized && g == h && g.stabilized;
      dims += (d > 3 ? " " : "") + std::string("d=") + std::to_string(d) + ":(" + std::to_string(h.even) + "," +
              std::to_string(h.odd) + (h.stabilized ? ")" : ",unstable)");
    }
    double t = seconds_since(t0);
    ok &= t < kUnitBudgetSeconds;
    report(1, ok, "Hom(I,I) = (d-1, 0) for d = 3..6", dims + " (Koszul model and full complex agree); " + fmt(t) + " s < " + fmt(kUnitBudgetSeconds, 0) + " s");
  });
}

void fusion_rules() {
  guarded(2, "fusion tables match the closed-form rule, d = 4, 5, 6", [] {
    auto t0 = std::chrono::steady_clock::now();
    std::string printed, bottom;
    std::size_t bad_printed = 0, bad_bottom = 0;
    for (int d = 4; d <= 6; ++d) {
      auto td = std::chrono::steady_clock::now();
      auto rows = fusion_table(d, fusion_rule);
      double secs = seconds_since(td);
      std::size_t bad = 0;
      for (const auto& r : rows) bad += !r.match;
      bad_printed += bad;
      printed += (d > 4 ? " " : "") + std::string("d=") + std::to_string(d) + ":" + std::to_string(bad) + "/" +
                 std::to_string(rows.size()) + "(" + fmt(secs, 1) + "s)";
      // same computed tables (memoized), other anchoring of the label
      auto alt = fusion_table(d, fusion_rule_bottom_anchored);
      std::size_t bad_alt = 0;
      for (const auto& r : alt) bad_alt += !r.match;
      bad_bottom += bad_alt;
      bottom += (d > 4 ? " " : "") + std::string("d=") + std::to_string(d) + ":" + std::to_string(bad_alt) + "/" +
                std::to_string(alt.size());
    }
    report(2, bad_printed == 0, "fusion tables match the closed-form rule, d = 4, 5, 6",
           "mismatches " + printed + "; total " + fmt(seconds_since(t0), 1) + " s");
    info("same tables against the rule anchored at the other end of J",
         "mismatches " + bottom + (bad_bottom == 0 ? "; all pairs agree" : ""));
  });
}

void dictionary() {
  guarded(3, "LG/CFT dictionary, d = 3 and 5", [] {
    bool ok = true;
    std::string detail;
    for (int d : {3, 5}) {
      auto r = verify_correspondence(d, kQdimTol);
      ok &= r.mismatches() == 0 && r.qdim_mismatches() == 0 && !r.rows.empty();
      detail += (d > 3 ? "; " : "") + std::string("d=") + std::to_string(d) + ": " + std::to_string(r.rows.size()) +
                " pairs, " + std::to_string(r.mismatches()) + " fusion / " + std::to_string(r.qdim_mismatches()) +
                " qdim mismatches";
    }
    report(3, ok, "LG/CFT dictionary, d = 3 and 5", detail);
  });
}

void quantum_dimensions() {
  guarded(4, "quantum dimensions", [] {
    bool ok = true;
    std::string detail;
    double worst = 0;
    for (int d : {3, 5, 7}) {
      auto q = qdim(make_permutation_mf(make_label(d, (d - 1) / 2, 1)));
      double err = std::abs(std::abs(q.left.embed()) - 2 * std::cos(std::numbers::pi / d));
      worst = std::max(worst, err);
      ok &= err < kQdimTol;
    }
    detail = "max |qdim_l(P[(d-1)/2:1])| - 2cos(pi/d) error " + sci(worst) + " (tol 1e-9)";
    bool unit_ok = true, zero_ok = true;
    for (int d = 3; d <= 7; ++d) {
      auto u = qdim(make_permutation_mf(make_label(d, 0, 0)));
      unit_ok &= abs_one(u.left) && abs_one(u.right);
      auto z = qdim(full_j(d));
      zero_ok &= z.left.is_zero() && z.right.is_zero();
    }
    ok &= unit_ok && zero_ok;
    detail += std::string("; |qdim(P[0:0])| = (1,1) exactly: ") + (unit_ok ? "yes" : "no") +
              "; contractible -> (0,0) exactly: " + (zero_ok ? "yes" : "no") + " (d = 3..7)";
    report(4, ok, "quantum dimensions", detail);
  });
}

void residues() {
  guarded(5, "residue and Milnor engine", [] {
    bool res_ok = true;
    for (int d = 2; d <= 9; ++d) {
      auto w = potential_from_text("x^" + std::to_string(d));
      auto r = residue(parse_poly("x^" + std::to_string(d - 2), w.ring()), w);
      res_ok &= r.is_rational() && r.rational_part() == Rational(1, d);
    }
    bool mu_ok = true;
    std::vector<std::string> catalog;
    for (int d = 2; d <= 9; ++d) {
      mu_ok &= milnor_number(catalog_potential("A:" + std::to_string(d - 1))) == std::size_t(d - 1);
      catalog.push_back("A:" + std::to_string(d - 1));
    }
    for (int n = 4; n <= 10; ++n) {
      mu_ok &= milnor_number(catalog_potential("D:" + std::to_string(n))) == std::size_t(n);
      catalog.push_back("D:" + std::to_string(n));
    }
    mu_ok &= milnor_number(catalog_potential("E:7")) == 7 && milnor_number(catalog_potential("E:8")) == 8;
    for (auto e : {"D:3", "E:6", "E:6p", "E:7", "E:8"}) catalog.push_back(e);
    bool hess_ok = true;
    for (const auto& name : catalog) {
      auto w = catalog_potential(name);
      auto r = residue(hessian(w), w);
      hess_ok &= r.is_rational() && r.rational_part() == Rational(static_cast<long long>(milnor_number(w)));
    }
    report(5, res_ok && mu_ok && hess_ok, "residue and Milnor engine",
           std::string("res(x^(d-2), x^d) = 1/d, d <= 9: ") + (res_ok ? "yes" : "no") +
               "; mu(A_{d-1}, D_{d+1}, E7, E8): " + (mu_ok ? "yes" : "no") + "; res(Hess W) = mu on " +
               std::to_string(catalog.size()) + " catalog potentials: " + (hess_ok ? "yes" : "no"));
  });
}

void group_law() {
  guarded(6, "Z_d action, d = 5", [] {
    const int d = 5;
    int bad = 0;
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        auto r = reduce_detailed(tensor(make_permutation_mf(make_label(d, a, 0)), make_permutation_mf(make_label(d, b, 0))));
        auto back = rename_outer(r.mf, {"x"}, {"y"});
        bad += !(back == make_permutation_mf(make_label(d, a + b, 0)));
      }
    report(6, bad == 0, "Z_d action, d = 5",
           "reduce(P[a:0] (x) P[b:0]) = P[a+b:0] on " + std::to_string(d * d - bad) + "/" + std::to_string(d * d) +
               " pairs");
  });
}

std::string qdim_text(const std::complex<double>& q) {
  return "(" + fmt(q.real(), 6) + (q.imag() < 0 ? " - " : " + ") + fmt(std::abs(q.imag()), 6) + "i)";
}

void orbifolds() {
  guarded(7, "orbifold machinery", [] {
    bool unit_ok = true;
    for (int d = 3; d <= 9; ++d) {
      auto xd = potential_from_text("x^" + std::to_string(d));
      auto yd = potential_from_text("y^" + std::to_string(d));
      unit_ok &= verify_orbifold(make_permutation_mf(make_label(d, 0, 0)), xd, yd).witness;
    }
    auto sys = make_ansatz(potential_from_text("x^3"), potential_from_text("y^3"), 2, {Rational(0), Rational(1, 3)});
    SearchOptions opt;
    opt.attempts = 8;
    opt.tol = kResidualTol;
    auto r = search(sys, opt);
    const SearchSolution* hit = nullptr;
    for (const auto& s : r.solutions)
      if (s.residual < kResidualTol && s.exact && s.report.witness) {
        hit = &s;
        break;
      }
    std::string detail = std::string("witness(P[0:0]) for d = 3..9: ") + (unit_ok ? "yes" : "no") +
                         "; x^3 vs y^3 rank 2: " + std::to_string(r.solutions.size()) + " solutions";
    if (hit)
      detail += ", residual " + sci(hit->residual) + ", exact over Q(zeta_" +
                std::to_string(hit->mf->ring->cyclo_order) + "), qdims " + hit->report.qdims.left.to_string() + ", " +
                hit->report.qdims.right.to_string();
    report(7, unit_ok && hit != nullptr, "orbifold machinery", detail);
  });

  // informational only
  try {
    auto t0 = std::chrono::steady_clock::now();
    auto sys = make_ansatz(catalog_potential("A:3"), catalog_potential("D:3"), 4,
                           {Rational(0), Rational(-1, 2), Rational(-1, 2), Rational(0)});
    SearchOptions opt;
    opt.attempts = 32;
    opt.budget_seconds = kAdBudgetSeconds;
    auto r = search(sys, opt);
    std::size_t exact = 0, numeric = 0;
    const SearchSolution* first = nullptr;
    for (const auto& s : r.solutions) {
      if (std::abs(s.qdim_left) > 1e-6 && std::abs(s.qdim_right) > 1e-6) ++numeric;
      if (s.exact && s.report.witness) {
        ++exact;
        if (!first) first = &s;
      }
    }
    std::string detail = std::to_string(sys.unknown_count()) + " unknowns, " + std::to_string(sys.equation_count()) +
                         " equations, " + std::to_string(r.attempts_run) + " attempts, " +
                         std::to_string(numeric) + " numeric / " + std::to_string(exact) + " exact witnesses, " +
                         fmt(seconds_since(t0), 1) + " s";
    if (first)
      detail += "; first exact: qdims " + first->report.qdims.left.to_string() + ", " +
                first->report.qdims.right.to_string() + " over Q(zeta_" + std::to_string(first->mf->ring->cyclo_order) +
                "), numerically " + qdim_text(first->qdim_left) + ", " + qdim_text(first->qdim_right);
    info(std::string("A:3 vs D:3 rank-4 search ") + (exact ? "found an orbifold equivalence" : "found nothing exact"),
         detail);
  } catch (const std::exception& e) {
    info("A:3 vs D:3 rank-4 search", std::string("exception: ") + e.what());
  }
}

void structure() {
  guarded(8, "structural properties", [] {
    // every constructor produces a valid factorization that serializes byte-identically
    std::vector<MatrixFactorization> built;
    for (int d = 3; d <= 7; ++d) {
      for (const auto& lab : all_labels(d)) built.push_back(make_permutation_mf(lab));
      built.push_back(full_j(d));
    }
    auto ring = make_ring({"x", "y"}, {Rational(1, 3), Rational(1, 3)});
    built.push_back(koszul_mf(parse_poly("x + y", ring), parse_poly("x^2 - x*y + y^2", ring)));
    auto a = make_permutation_mf(make_label(5, 1, 2));
    auto b = make_permutation_mf(make_label(5, 3, 1));
    built.push_back(direct_sum(a, b));
    built.push_back(shift(a));
    built.push_back(dual(a));
    built.push_back(parity_conjugate(a));
    built.push_back(tensor(a, b));
    built.push_back(tensor(tensor(a, b), a));
    built.push_back(rename_outer(a, {"u"}, {"v"}));
    built.push_back(split_units(direct_sum(full_j(5), a)));
    built.push_back(canonicalize(direct_sum(b, a)));
    built.push_back(reduce(tensor(a, b)));
    built.push_back(fuse_mf(make_label(6, 2, 3), make_label(6, 1, 2)));
    auto sys = make_ansatz(potential_from_text("x^3"), potential_from_text("y^3"), 2, {Rational(0), Rational(1, 3)});
    auto z = CycloNumber::zeta(6, 1);
    built.push_back(substitute_unknowns(sys, {CycloNumber(6, Rational(1)), -z, z * z, z}));
    std::size_t valid = 0, round_trip = 0;
    for (const auto& m : built) {
      valid += validate(m).ok;
      auto text = write_mf(m);
      auto back = read_mf(text);
      round_trip += back == m && write_mf(back) == text;
    }
    bool system_rt = export_system(import_system(export_system(sys))) == export_system(sys);

    // d^2 = (W_1 - W_3) id on random pairs
    std::mt19937 rng(20240607);
    int pairs = 0, square_ok = 0;
    for (int d = 3; d <= 7; ++d) {
      auto labels = all_labels(d);
      std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
      for (int k = 0; k < 6; ++k) {
        auto t = tensor(make_permutation_mf(labels[pick(rng)]), make_permutation_mf(labels[pick(rng)]));
        auto sq = t.diff * t.diff;
        auto expect = PolyMatrix::identity(t.ring, t.rank()).scaled(t.w_left - t.w_right);
        ++pairs;
        square_ok += sq == expect;
      }
    }

    bool stable = all_hom_stabilized && cutoff_escalations() == 0;
    bool ok = valid == built.size() && round_trip == built.size() && system_rt && square_ok == pairs && stable;
    report(8, ok, "structural properties",
           "validate " + std::to_string(valid) + "/" + std::to_string(built.size()) + "; byte round trips " +
               std::to_string(round_trip) + "/" + std::to_string(built.size()) + (system_rt ? " + system" : "") +
               "; tensor squares " + std::to_string(square_ok) + "/" + std::to_string(pairs) +
               "; cutoff escalations over the run " + std::to_string(cutoff_escalations()) +
               (all_hom_stabilized ? "" : ", unstable hom dims"));
  });
}

}  // namespace

int main() {
  unit_endomorphisms();
  fusion_rules();
  dictionary();
  quantum_dimensions();
  residues();
  group_law();
  orbifolds();
  structure();  // last: reads the process-wide escalation counter
  std::cout << (failures ? std::to_string(failures) + " criteria failed" : std::string("all criteria passed"))
            << std::endl;
  return failures ? 1 : 0;
}
