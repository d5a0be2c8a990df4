#include <doctest.h>

#include <cmath>
#include <random>

#include "lgmf/cyclo.hpp"
#include "lgmf/errors.hpp"
#include "lgmf/poly.hpp"
#include "lgmf/rational.hpp"

using namespace lgmf;

TEST_CASE("rational overflow promotes and demotes") {
  Rational big(INT64_MAX);
  Rational r = big * big;
  CHECK(r.to_string() == "85070591730234615847396907784232501249");
  Rational back = r / big;
  CHECK(back == big);
  CHECK(Rational(6, -4).to_string() == "-3/2");
  CHECK(Rational::parse("10/4") == Rational(5, 2));
}

TEST_CASE("cyclotomic embedding") {
  CHECK(std::abs(CycloNumber::zeta(4).embed() - std::complex<double>(0, 1)) < 1e-14);
  auto s = CycloNumber::zeta(3, 1) + CycloNumber::zeta(3, 2);
  CHECK(s == CycloNumber(3, Rational(-1)));
  CHECK(std::abs(s.embed() - std::complex<double>(-1, 0)) < 1e-12);
  auto g = CycloNumber::zeta(5, 1) + CycloNumber::zeta(5, 4);
  CHECK(std::abs(g.embed().real() - 2 * std::cos(2 * M_PI / 5)) < 1e-14);
  CHECK(std::abs(g.embed().real() - 0.6180339887) < 1e-10);
  CHECK(std::abs(g.embed().imag()) < 1e-14);
}

TEST_CASE("cyclotomic field axioms on random operands") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dist(-1000, 1000);
  for (int n : {1, 3, 4, 5, 7, 8, 9, 12, 15}) {
    auto rnd = [&] {
      CycloNumber::Coeffs c;
      for (int k = 0; k < cyclo_field(n).degree; ++k) c.push_back(Rational(dist(rng), 1 + (dist(rng) & 7)));
      return CycloNumber(n, c);
    };
    for (int trial = 0; trial < 10; ++trial) {
      auto a = rnd(), b = rnd(), c = rnd();
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
      auto e = a.embed() * b.embed();
      CHECK(std::abs((a * b).embed() - e) < 1e-12 * std::max(1.0, std::abs(e)));
    }
  }
}

TEST_CASE("mixed orders lift to the lcm") {
  auto a = CycloNumber::zeta(3) * CycloNumber::zeta(4);
  CHECK(a.order() == 12);
  CHECK(a == CycloNumber::zeta(12, 7));
  CHECK(CycloNumber::zeta(6, 2) == CycloNumber::zeta(3, 1));
}

TEST_CASE("polynomial parsing and printing") {
  Ring r = make_ring({"x", "y"}, {Rational(1, 5), Rational(1, 5)}, 5);
  auto p = parse_poly("(x - z^3*y)^2 + 1/5", r);
  CHECK(p.to_string() == "x^2 - 2*z^3*x*y + z*y^2 + 1/5");
  CHECK(parse_poly(p.to_string(), r) == p);
  CHECK(parse_poly("x - z*y", r).to_string() == "x - z*y");
  CHECK_THROWS_AS(parse_poly("x + w", r), ParseError);
  CHECK_THROWS_AS(parse_poly("x / y", r), ParseError);
  auto q = parse_poly("x^4 + z*x^3*y", r);
  CHECK(q.to_string() == "x^4 + z*x^3*y");
  CHECK(!p.homogeneous_degree());
  CHECK(*(p - MultiPoly::constant(r, Rational(1, 5))).homogeneous_degree() == Rational(4, 5));
}

TEST_CASE("weighted degree is additive") {
  Ring r = make_ring({"x", "y"}, {Rational(1, 3), Rational(1, 6)}, 1);
  auto f = parse_poly("x + y^2", r);
  auto g = parse_poly("x^2*y - 3*y^5", r);
  CHECK(f.is_homogeneous());
  CHECK(g.is_homogeneous());
  CHECK(*(f * g).homogeneous_degree() == *f.homogeneous_degree() + *g.homogeneous_degree());
}

TEST_CASE("weight inference") {
  auto p = parse_with_inferred_ring("x^3 + x*y^3");
  CHECK(p.ring()->weights[0] == Rational(1, 3));
  CHECK(p.ring()->weights[1] == Rational(2, 9));
  auto q = parse_with_inferred_ring("x^3 + y^5");
  CHECK(q.ring()->weights[1] == Rational(1, 5));
  CHECK_THROWS_AS(parse_with_inferred_ring("x^3 + x^2"), DomainError);
}

TEST_CASE("ring mismatch is reported") {
  Ring a = make_ring({"x"}, {Rational(1, 3)});
  Ring b = make_ring({"y"}, {Rational(1, 3)});
  CHECK_THROWS_AS(MultiPoly::variable(a, 0) + MultiPoly::variable(b, 0), RingMismatch);
  CHECK_THROWS_AS(make_ring({"z"}, {Rational(1)}), DomainError);
}
