#include <doctest.h>

#include <random>

#include "lgmf/errors.hpp"
#include "lgmf/mf.hpp"
#include "lgmf/mf_io.hpp"

using namespace lgmf;

TEST_CASE("permutation factorizations validate") {
  for (int d = 2; d <= 7; ++d)
    for (const auto& lab : all_labels(d)) {
      auto m = make_permutation_mf(lab);
      CAPTURE(d);
      CAPTURE(lab.to_string());
      CHECK(validate(m).ok);
      CHECK(m.gens[1].degree == Rational(2 * (lab.l + 1), d) - Rational(1));
    }
  auto p2 = make_permutation_mf(2, {0});
  CHECK(p2.diff(0, 1).to_string() == "x - y");
  CHECK(p2.diff(1, 0).to_string() == "x + y");
  auto p5 = make_permutation_mf(5, {1, 2});
  CHECK(validate(p5).ok);
  auto full = make_permutation_mf(5, {0, 1, 2, 3, 4});
  CHECK(validate(full).ok);
  CHECK(full.diff(1, 0).is_constant());
  CHECK_THROWS_AS(make_permutation_mf(5, {}), DomainError);
  CHECK_THROWS_AS(make_permutation_mf(5, {5}), DomainError);
}

TEST_CASE("validation reports violations") {
  auto m = make_permutation_mf(5, {0});
  auto bad = m;
  bad.diff(0, 1) += MultiPoly::constant(m.ring, Rational(1));
  auto r = validate(bad);
  CHECK(!r.ok);
  CHECK(r.kind == "homogeneity");
  CHECK(r.row == 0);
  CHECK(r.col == 1);
  auto sq = m;
  sq.diff(1, 0) = parse_poly("x^3*y", m.ring);
  sq.diff(0, 1) = parse_poly("x", m.ring);
  auto r2 = validate(sq);
  CHECK(!r2.ok);
  CHECK(r2.kind == "square");
  auto par = m;
  par.gens[1].parity = 0;
  CHECK(validate(par).kind == "parity");
}

TEST_CASE("structural operations") {
  auto p = make_permutation_mf(make_label(5, 1, 2));
  CHECK(shift(shift(p)) == p);
  CHECK(validate(shift(p)).ok);
  auto q = make_permutation_mf(make_label(5, 3, 0));
  auto s = direct_sum(p, q);
  CHECK(validate(s).ok);
  CHECK(s.diff(0, 1) == p.diff(0, 1));
  CHECK(s.diff(3, 2) == q.diff(1, 0));
  CHECK(s.diff(0, 3).is_zero());
  CHECK(s.diff(2, 1).is_zero());
  auto dv = dual(p);
  CHECK(validate(dv).ok);
  CHECK(dv.potential() == -p.potential());
  CHECK(parity_conjugate(dual(dual(p))) == p);
}

TEST_CASE("koszul factorizations") {
  Ring r = permutation_ring(5);
  auto x = MultiPoly::variable(r, 0), y = MultiPoly::variable(r, 1);
  MultiPoly cof(r);
  for (int k = 0; k < 5; ++k) cof += x.pow(4 - k) * y.pow(k);
  auto k = koszul_mf(x - y, cof, Potential{MultiPoly::variable(sub_ring(r, {"x"}), 0).pow(5), {}},
                     Potential{MultiPoly::variable(sub_ring(r, {"y"}), 0).pow(5), {}});
  CHECK(k == make_permutation_mf(5, {0}));
  Ring r1 = make_ring({"x"}, {Rational(1, 2)});
  auto xx = koszul_mf(MultiPoly::variable(r1, 0), MultiPoly::variable(r1, 0));
  CHECK(validate(xx).ok);
  CHECK(xx.w_left.to_string() == "x^2");
  CHECK_THROWS_AS(koszul_mf(MultiPoly::variable(r1, 0), MultiPoly::variable(r1, 0).pow(2)), DomainError);
}

TEST_CASE("tensor squares correctly") {
  // two Koszul pairs over separate variables: a 4x4 sign test
  Ring r = make_ring({"x", "y", "u", "v"}, {Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)});
  auto a = koszul_mf(parse_poly("x - y", r), parse_poly("x + y", r));
  auto b = koszul_mf(parse_poly("u", r), parse_poly("v", r));
  // b is over (W2 = 0): treat as factorization with empty middle
  a.right_vars.clear();
  a.left_vars = {"x", "y"};
  a.w_left = parse_poly("x^2 - y^2", r);
  b.left_vars.clear();
  b.right_vars = {"u", "v"};
  b.w_left = MultiPoly(r);
  b.w_right = parse_poly("-u*v", r);
  auto t = tensor(a, b);
  CHECK(t.rank() == 4);
  CHECK(validate(t).ok);

  std::mt19937 rng(3);
  for (int d : {3, 4, 5, 6}) {
    auto labels = all_labels(d);
    for (int trial = 0; trial < 6; ++trial) {
      auto p = make_permutation_mf(labels[rng() % labels.size()]);
      auto q = make_permutation_mf(labels[rng() % labels.size()]);
      auto pq = tensor(p, q);
      CHECK(pq.ring->names == std::vector<std::string>{"x", "y", "u"});
      CHECK(pq.internal_vars() == std::vector<std::string>{"y"});
      CHECK(validate(pq).ok);
      CHECK(pq.potential() == parse_poly("x^" + std::to_string(d) + " - u^" + std::to_string(d), pq.ring));
    }
  }
}

TEST_CASE("serialization round trips") {
  auto p = make_permutation_mf(5, {0});
  std::string text = write_mf(p);
  CHECK(text.rfind("mf v1\nring x:1/5 y:1/5 cyclo 5\nwleft x^5\nwright y^5\ngens 0:0 1:-3/5\nd 0 1 = x - y\n", 0) == 0);
  for (const auto& m : {p, make_permutation_mf(make_label(7, 2, 3)), tensor(p, make_permutation_mf(5, {1, 2})),
                        shift(dual(make_permutation_mf(4, {1})))}) {
    auto back = read_mf(write_mf(m));
    CHECK(write_mf(back) == write_mf(m));
    CHECK(back == m);
  }
  auto q = make_permutation_mf(5, {1});
  CHECK(write_mf(q).find("d 0 1 = x - z*y\n") != std::string::npos);
  CHECK_THROWS_AS(read_mf("mf v2\n"), ParseError);
}
