#ifndef LGMF_CFT_HPP
#define LGMF_CFT_HPP

#include <string>
#include <vector>

#include "lgmf/decompose.hpp"
#include "lgmf/mf.hpp"

namespace lgmf {

/// Simple object [l, m, s] of su(2)_{d-2} x u(1)_{2d} x u(1)_4 with l+m+s even.
struct SimpleLabel {
  int d = 0;
  int l = 0;
  int m = 0;  // mod 2d
  int s = 0;  // mod 4

  std::string to_string() const;  // "[l,m,s]"
  friend bool operator==(const SimpleLabel& a, const SimpleLabel& b) {
    return a.d == b.d && a.l == b.l && a.m == b.m && a.s == b.s;
  }
  friend bool operator<(const SimpleLabel& a, const SimpleLabel& b);
};

/// Reduces m mod 2d and s mod 4; throws on l out of range or odd l+m+s.
SimpleLabel make_simple(int d, int l, int m, int s);
/// Sorted by (l, m, s).
std::vector<SimpleLabel> simples(int d);

enum class Sector { NS, R, Neither };
Sector sector(const SimpleLabel& a);
std::string to_string(Sector s);

/// Truncated Clebsch-Gordan range at level k.
std::vector<int> su2_fusion(int k, int l, int lp);
/// Componentwise fusion; result sorted.
std::vector<SimpleLabel> fuse(const SimpleLabel& a, const SimpleLabel& b);
SimpleLabel conjugate(const SimpleLabel& a);
/// sin((l+1) pi/d) / sin(pi/d)
double qdim_label(const SimpleLabel& a);

/// [l, m, 0] -> P_{(m-l)/2 : l}. Throws DomainError for s != 0 (the
/// factorization images of s = 2 and Ramond labels are not fixed here).
PermLabel to_perm(const SimpleLabel& a);
SimpleLabel from_perm(const PermLabel& p);
/// Text for reports: "P[m:l]", "P[m:l][1]" for s = 2 (convention-dependent),
/// "-" for Ramond labels.
std::string perm_image(const SimpleLabel& a);

/// Named algebra objects of the su(2) factor, as label lists.
struct AlgebraObject {
  std::string name;
  int d = 0;
  std::vector<SimpleLabel> summands;
};
/// "D" (needs even d >= 4), "E6" (d = 12), "E7" (d = 18), "E8" (d = 30);
/// d is ignored for the exceptional ones.
AlgebraObject algebra_object(const std::string& name, int d = 0);

struct CorrespondenceRow {
  SimpleLabel a, b;
  Decomposition cft;  // fuse(a, b) mapped through to_perm
  Decomposition mf;   // decompose(reduce(tensor))
  bool match = false;
};

struct QdimRow {
  PermLabel p;
  double mf = 0;     // |qdim_left(P)|
  double label = 0;  // qdim_label(from_perm(P))
  bool match = false;
};

struct CorrespondenceReport {
  int d = 0;
  std::vector<CorrespondenceRow> rows;
  std::vector<QdimRow> qdims;
  std::size_t mismatches() const;
  std::size_t qdim_mismatches() const;
};

/// All ordered pairs of s = 0 NS labels, both sides computed independently.
CorrespondenceReport verify_correspondence(int d, double qdim_tol = 1e-9);

std::string correspondence_tsv(const CorrespondenceReport& r);
std::string correspondence_json(const CorrespondenceReport& r);

}  // namespace lgmf

#endif  // LGMF_CFT_HPP
