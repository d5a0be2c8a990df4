#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <numbers>

#include "lgmf/ansatz.hpp"
#include "lgmf/errors.hpp"
#include "lgmf/mf_io.hpp"
#include "lgmf/qdim.hpp"
#include "lgmf/reduce.hpp"
#include "lgmf/search.hpp"

using namespace lgmf;

namespace {

Potential pot(const std::string& text) { return potential_from_text(text); }

MatrixFactorization full_j(int d) {
  std::vector<int> J;
  for (int j = 0; j < d; ++j) J.push_back(j);
  return make_permutation_mf(d, J);
}

}  // namespace

TEST_CASE("qdim of the unit and of contractibles") {
  for (int d = 3; d <= 9; ++d) {
    auto q = qdim(make_permutation_mf(make_label(d, 0, 0)));
    CHECK(std::abs(q.left.embed()) == doctest::Approx(1));
    CHECK(std::abs(q.right.embed()) == doctest::Approx(1));
    CHECK(q.left.is_rational());
    CHECK(q.both_nonzero);
    auto z = qdim(full_j(d));
    CHECK(z.left.is_zero());
    CHECK(z.right.is_zero());
    CHECK(!z.both_nonzero);
    CHECK(reduce(full_j(d)).rank() == 0);
  }
}

TEST_CASE("qdim of l = 1 objects is 2cos(pi/d)") {
  for (int d : {3, 5, 7}) {
    auto q = qdim(make_permutation_mf(make_label(d, (d - 1) / 2, 1)));
    CHECK(std::abs(std::abs(q.left.embed()) - 2 * std::cos(std::numbers::pi / d)) < 1e-12);
  }
}

TEST_CASE("|qdim_left| does not depend on m") {
  for (int d = 3; d <= 7; ++d)
    for (int l = 0; l <= d - 2; ++l) {
      double ref = std::abs(qdim(make_permutation_mf(make_label(d, 0, l))).left.embed());
      double expect = std::sin((l + 1) * std::numbers::pi / d) / std::sin(std::numbers::pi / d);
      CHECK(ref == doctest::Approx(expect).epsilon(1e-12));
      for (int m = 1; m < d; ++m)
        CHECK(std::abs(qdim(make_permutation_mf(make_label(d, m, l))).left.embed()) == doctest::Approx(ref).epsilon(1e-12));
    }
}

TEST_CASE("qdim is additive and ignores contractible summands") {
  int d = 5;
  auto a = make_permutation_mf(make_label(d, 1, 2));
  auto b = make_permutation_mf(make_label(d, 3, 1));
  auto qa = qdim(a), qb = qdim(b), qs = qdim(direct_sum(a, b));
  CHECK(qs.left == qa.left + qb.left);
  CHECK(qs.right == qa.right + qb.right);
  auto qc = qdim(direct_sum(a, full_j(d)));
  CHECK(qc.left == qa.left);
  CHECK(qc.right == qa.right);
}

TEST_CASE("qdim rejects bad input") {
  auto p = make_permutation_mf(make_label(4, 0, 1));
  auto bad = p;
  bad.diff(0, 1) = bad.diff(0, 1) + bad.diff(0, 1);
  CHECK_THROWS_AS(qdim(bad), DomainError);
  auto t = tensor(p, p);
  CHECK_THROWS_AS(qdim(t), DomainError);
}

TEST_CASE("verify_orbifold") {
  for (int d = 3; d <= 9; ++d) {
    std::string xd = "x^" + std::to_string(d), yd = "y^" + std::to_string(d);
    auto r = verify_orbifold(make_permutation_mf(make_label(d, 0, 0)), pot(xd), pot(yd));
    CHECK(r.valid);
    CHECK(r.witness);
    auto f = verify_orbifold(full_j(d), pot(xd), pot(yd));
    CHECK(f.valid);
    CHECK(!f.witness);
    CHECK(f.qdims.left.is_zero());
    CHECK(f.qdims.right.is_zero());
  }
  auto p = make_permutation_mf(make_label(5, 0, 0));
  auto bad = p;
  bad.diff(1, 0) = bad.diff(1, 0).scaled(CycloNumber(5, Rational(2)));
  auto r = verify_orbifold(bad, pot("x^5"), pot("y^5"));
  CHECK(!r.valid);
  CHECK(!r.witness);
  auto wrong = verify_orbifold(p, pot("x^5"), pot("2*y^5"));
  CHECK(!wrong.valid);
  CHECK(orbifold_report_json(verify_orbifold(p, pot("x^5"), pot("y^5"))).find("\"witness\": true") != std::string::npos);
}

TEST_CASE("ansatz x^3 vs y^3") {
  auto s = make_ansatz(pot("x^3"), pot("y^3"), 2, {Rational(0), Rational(1, 3)});
  CHECK(s.unknown_count() == 4);
  // gauge fixes the x coefficient of the linear entry: x + a*y
  CHECK(s.mf.diff(1, 0).to_string() == "x + y*a3");
  bool cubic = false;
  for (const auto& e : s.equations) {
    CHECK(e.ring()->size() == 4);
    cubic |= e.to_string() == "a2*a3 + 1";
  }
  CHECK(cubic);
  // a generic substitution fails, a root of unity works
  auto z = CycloNumber::zeta(6, 1);  // a3^3 = -1
  std::vector<CycloNumber> vals = {CycloNumber(6, Rational(1)), -z, z * z, z};
  auto m = substitute_unknowns(s, vals);
  CHECK(validate(m).ok);
  CHECK(verify_orbifold(m, pot("x^3"), pot("y^3")).witness);
  vals[3] = CycloNumber(6, Rational(2));
  CHECK(!validate(substitute_unknowns(s, vals)).ok);
}

TEST_CASE("ansatz consistency with permutation factorizations") {
  for (int d : {3, 4, 5}) {
    auto p = make_permutation_mf(make_label(d, 0, 1));
    std::string xd = "x^" + std::to_string(d), yd = "y^" + std::to_string(d);
    auto s = make_ansatz(pot(xd), pot(yd), 2, {p.gens[0].degree, p.gens[1].degree}, false);
    // read the coefficients of P off its entries, slot by slot
    std::vector<CycloNumber> vals(s.unknown_count(), CycloNumber(d, Rational(0)));
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        const auto& tmpl = s.mf.diff(i, j);
        for (const auto& t : tmpl.terms()) {
          Exponents outer(t.mono.exps.begin(), t.mono.exps.begin() + 2);
          std::size_t k = 0;
          while (t.mono.exps[2 + k] == 0) ++k;
          vals[k] = p.diff(i, j).coefficient(make_monomial(*p.ring, outer));
        }
      }
    auto m = substitute_unknowns(s, vals);
    CHECK(validate(m).ok);
    CHECK(m.diff(0, 1).to_string() == p.diff(0, 1).to_string());
  }
}

TEST_CASE("ansatz one-sided and infeasible ladders") {
  auto s = make_ansatz(pot("x^3"), pot("0"), 2, {Rational(0), Rational(1, 3)});
  CHECK(s.mf.right_vars.empty());
  std::vector<CycloNumber> vals(s.unknown_count(), CycloNumber(1, Rational(0)));
  // x * x^2: only the leading coefficient of the quadratic survives
  vals[0] = CycloNumber(1, Rational(1));
  auto m = substitute_unknowns(s, vals);
  CHECK(validate(m).ok);
  CHECK(m.diff(0, 1).to_string() == "x^2");
  CHECK(m.diff(1, 0).to_string() == "x");
  CHECK_THROWS_AS(make_ansatz(pot("x^3"), pot("y^3"), 2, {Rational(0), Rational(1, 7)}), DomainError);
  CHECK_THROWS_AS(make_ansatz(pot("x^3"), pot("y^3"), 3, {Rational(0), Rational(1), Rational(2)}), DomainError);
  CHECK_THROWS_AS(make_ansatz(pot("x^3"), pot("y^3"), 2, {Rational(0)}), DomainError);
}

TEST_CASE("ansatz renames clashing right variables") {
  auto s = make_ansatz(pot("A:3"), pot("D:3"), 2, {Rational(0), Rational(0)});
  CHECK(s.mf.left_vars == std::vector<std::string>{"x", "y"});
  CHECK(s.mf.right_vars == std::vector<std::string>{"u", "v"});
}

TEST_CASE("system export round trips") {
  std::vector<AnsatzSystem> systems = {
      make_ansatz(pot("x^3"), pot("y^3"), 2, {Rational(0), Rational(1, 3)}),
      make_ansatz(pot("x^4"), pot("y^4"), 2, {Rational(0), Rational(0)}),
      make_ansatz(pot("x^3"), pot("0"), 2, {Rational(0), Rational(1, 3)}, false),
  };
  for (const auto& s : systems) {
    auto text = export_system(s);
    auto back = import_system(text);
    CHECK(back.unknowns == s.unknowns);
    CHECK(back.ladder == s.ladder);
    CHECK(back.equations.size() == s.equations.size());
    for (std::size_t k = 0; k < s.equations.size(); ++k) CHECK(back.equations[k] == s.equations[k]);
    CHECK(export_system(back) == text);
  }
  std::string path = "lgmf_test_system.txt";
  export_system(systems[0], path);
  CHECK(export_system(import_system_file(path)) == export_system(systems[0]));
  std::remove(path.c_str());
  CHECK_THROWS_AS(import_system("system v2\n"), ParseError);
}

TEST_CASE("cyclotomic recognition") {
  auto z = CycloNumber::zeta(12, 5);
  auto r = recognize_cyclotomic(z.embed(), 12, 1e-8);
  REQUIRE(r);
  CHECK(*r == z);
  auto g = CycloNumber::zeta(10, 1) + CycloNumber::zeta(10, 9);  // 2cos(pi/5)
  auto rg = recognize_cyclotomic((g * CycloNumber::zeta(10, 3)).embed(), 10, 1e-8);
  REQUIRE(rg);
  CHECK(*rg == g * CycloNumber::zeta(10, 3));
  CHECK(!recognize_cyclotomic({0.3, 0.1}, 12, 1e-8));
}

TEST_CASE("search recovers cube roots of unity") {
  auto s = make_ansatz(pot("x^3"), pot("y^3"), 2, {Rational(0), Rational(1, 3)});
  SearchOptions o;
  o.attempts = 6;
  o.seed = 7;
  auto r = search(s, o);
  CHECK(r.attempts_run == 6);
  REQUIRE(!r.solutions.empty());
  for (const auto& sol : r.solutions) {
    CHECK(sol.residual < 1e-10);
    CHECK(sol.exact);
    CHECK(sol.report.witness);
    auto a3 = sol.values.back();
    CHECK(std::abs(a3 * a3 * a3 + 1.0) < 1e-8);
    CHECK(std::abs(sol.qdim_left - sol.report.qdims.left.embed()) < 1e-8);
  }
  // same seed, same answer, whatever the worker count
  o.jobs = 3;
  auto r2 = search(s, o);
  CHECK(search_result_json(s, r2) == search_result_json(s, r));
  o.attempts = 0;
  CHECK_THROWS_AS(search(s, o), DomainError);
}

TEST_CASE("search on an obstructed system finds nothing") {
  // x^3 vs y^4 at rank 2: the ladder leaves d^2 unable to produce y^4
  auto s = make_ansatz(pot("x^3"), pot("y^4"), 2, {Rational(0), Rational(1, 3)});
  SearchOptions o;
  o.attempts = 4;
  auto r = search(s, o);
  CHECK(r.solutions.empty());
}

TEST_CASE("search finds an exact A3 / D3 witness after snapping") {
  auto s = make_ansatz(pot("A:3"), pot("D:3"), 4, {Rational(0), Rational(-1, 2), Rational(-1, 2), Rational(0)});
  SearchOptions o;
  o.attempts = 2;
  auto r = search(s, o);
  REQUIRE(!r.solutions.empty());
  const auto& sol = r.solutions.front();
  REQUIRE(sol.exact);
  CHECK(sol.snapped);
  CHECK(sol.report.witness);
  CHECK(std::abs(sol.report.qdims.left.embed()) == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(std::abs(sol.report.qdims.right.embed()) == doctest::Approx(std::sqrt(2.0)));
  o.snap = false;
  auto raw = search(s, o);
  REQUIRE(!raw.solutions.empty());
  CHECK(!raw.solutions.front().exact);
}
