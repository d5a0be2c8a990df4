#include "lgmf/cft.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "lgmf/errors.hpp"
#include "lgmf/parallel.hpp"
#include "lgmf/qdim.hpp"

namespace lgmf {

namespace {
int mod(int a, int n) { return ((a % n) + n) % n; }
}  // namespace

std::string SimpleLabel::to_string() const {
  return "[" + std::to_string(l) + "," + std::to_string(m) + "," + std::to_string(s) + "]";
}

bool operator<(const SimpleLabel& a, const SimpleLabel& b) {
  return std::tie(a.d, a.l, a.m, a.s) < std::tie(b.d, b.l, b.m, b.s);
}

SimpleLabel make_simple(int d, int l, int m, int s) {
  if (d < 3) throw DomainError("simple label: d must be at least 3");
  if (l < 0 || l > d - 2) throw DomainError("simple label: l out of range 0.." + std::to_string(d - 2));
  SimpleLabel a{d, l, mod(m, 2 * d), mod(s, 4)};
  if ((a.l + a.m + a.s) % 2) throw DomainError("simple label " + a.to_string() + ": l+m+s must be even");
  return a;
}

std::vector<SimpleLabel> simples(int d) {
  std::vector<SimpleLabel> out;
  for (int l = 0; l <= d - 2; ++l)
    for (int m = 0; m < 2 * d; ++m)
      for (int s = 0; s < 4; ++s)
        if ((l + m + s) % 2 == 0) out.push_back(make_simple(d, l, m, s));
  return out;
}

Sector sector(const SimpleLabel& a) {
  const bool lm_even = (a.l + a.m) % 2 == 0, s_even = a.s % 2 == 0;
  if (lm_even && s_even) return Sector::NS;
  if (!lm_even && !s_even) return Sector::R;
  return Sector::Neither;
}

std::string to_string(Sector s) {
  switch (s) {
    case Sector::NS: return "NS";
    case Sector::R: return "R";
    default: return "neither";
  }
}

std::vector<int> su2_fusion(int k, int l, int lp) {
  if (k < 0 || l < 0 || lp < 0 || l > k || lp > k) throw DomainError("su2 fusion: labels out of range for level");
  std::vector<int> out;
  for (int x = std::abs(l - lp); x <= std::min(l + lp, 2 * k - l - lp); x += 2) out.push_back(x);
  return out;
}

std::vector<SimpleLabel> fuse(const SimpleLabel& a, const SimpleLabel& b) {
  if (a.d != b.d) throw DomainError("fuse: labels for different d");
  std::vector<SimpleLabel> out;
  for (int l : su2_fusion(a.d - 2, a.l, b.l)) out.push_back(make_simple(a.d, l, a.m + b.m, a.s + b.s));
  std::sort(out.begin(), out.end());
  return out;
}

SimpleLabel conjugate(const SimpleLabel& a) { return make_simple(a.d, a.l, -a.m, -a.s); }

double qdim_label(const SimpleLabel& a) {
  const double pi = std::numbers::pi;
  return std::sin((a.l + 1) * pi / a.d) / std::sin(pi / a.d);
}

PermLabel to_perm(const SimpleLabel& a) {
  if (a.s != 0) throw DomainError("to_perm: label " + a.to_string() + " has s != 0; its factorization image is not fixed");
  if ((a.l + a.m) % 2) throw DomainError("to_perm: l+m odd");
  return make_label(a.d, mod((a.m - a.l) / 2, a.d), a.l);
}

SimpleLabel from_perm(const PermLabel& p) { return make_simple(p.d, p.l, p.l + 2 * p.m, 0); }

std::string perm_image(const SimpleLabel& a) {
  if (sector(a) != Sector::NS) return "-";
  if (a.s == 0) return "P[" + to_perm(a).to_string() + "]";
  return "P[" + to_perm(make_simple(a.d, a.l, a.m, 0)).to_string() + "][1]";
}

AlgebraObject algebra_object(const std::string& name, int d) {
  std::vector<int> ls;
  if (name == "D") {
    if (d < 4 || d % 2) throw DomainError("algebra object D needs even d >= 4");
    ls = {0, d - 2};
  } else if (name == "E6") {
    d = 12;
    ls = {0, 6};
  } else if (name == "E7") {
    d = 18;
    ls = {0, 8, 16};
  } else if (name == "E8") {
    d = 30;
    ls = {0, 10, 18, 28};
  } else {
    throw DomainError("unknown algebra object '" + name + "'");
  }
  AlgebraObject a{name, d, {}};
  for (int l : ls) a.summands.push_back(make_simple(d, l, 0, 0));
  return a;
}

std::size_t CorrespondenceReport::mismatches() const {
  return std::count_if(rows.begin(), rows.end(), [](const auto& r) { return !r.match; });
}

std::size_t CorrespondenceReport::qdim_mismatches() const {
  return std::count_if(qdims.begin(), qdims.end(), [](const auto& r) { return !r.match; });
}

CorrespondenceReport verify_correspondence(int d, double qdim_tol) {
  CorrespondenceReport rep;
  rep.d = d;
  std::vector<SimpleLabel> ns;
  for (const auto& a : simples(d))
    if (a.s == 0 && sector(a) == Sector::NS) ns.push_back(a);
  gram(d);
  const std::size_t n = ns.size();
  rep.rows.resize(n * n);
  parallel_for(rep.rows.size(), [&](std::size_t k) {
    auto& row = rep.rows[k];
    row.a = ns[k / n];
    row.b = ns[k % n];
    row.cft.d = d;
    for (const auto& c : fuse(row.a, row.b)) row.cft.mult[to_perm(c)] += 1;
    row.mf = fuse_decompose(to_perm(row.a), to_perm(row.b));
    row.match = row.cft == row.mf;
  });
  auto labels = all_labels(d);
  rep.qdims.resize(labels.size());
  parallel_for(labels.size(), [&](std::size_t k) {
    auto& q = rep.qdims[k];
    q.p = labels[k];
    q.mf = std::abs(qdim(make_permutation_mf(q.p)).left.embed());
    q.label = qdim_label(from_perm(q.p));
    q.match = std::abs(q.mf - q.label) <= qdim_tol;
  });
  return rep;
}

std::string correspondence_tsv(const CorrespondenceReport& r) {
  std::ostringstream os;
  os << "a\tb\tcft\tmf\tmatch\n";
  for (const auto& row : r.rows)
    os << row.a.to_string() << "\t" << row.b.to_string() << "\t" << row.cft.to_string() << "\t" << row.mf.to_string()
       << "\t" << (row.match ? "yes" : "no") << "\n";
  os.precision(12);
  os << "# qdim\n";
  for (const auto& q : r.qdims)
    os << "P[" << q.p.to_string() << "]\t" << q.mf << "\t" << q.label << "\t" << (q.match ? "yes" : "no") << "\n";
  os << "mismatches: " << r.mismatches() << "\n";
  os << "qdim mismatches: " << r.qdim_mismatches() << "\n";
  return os.str();
}

std::string correspondence_json(const CorrespondenceReport& r) {
  nlohmann::json j;
  j["d"] = r.d;
  j["mismatches"] = r.mismatches();
  j["qdim_mismatches"] = r.qdim_mismatches();
  auto& rows = j["rows"] = nlohmann::json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"a", row.a.to_string()},
                    {"b", row.b.to_string()},
                    {"cft", row.cft.to_string()},
                    {"mf", row.mf.to_string()},
                    {"match", row.match}});
  auto& qd = j["qdims"] = nlohmann::json::array();
  for (const auto& q : r.qdims)
    qd.push_back({{"label", q.p.to_string()}, {"mf", q.mf}, {"cft", q.label}, {"match", q.match}});
  return j.dump(2) + "\n";
}

}  // namespace lgmf
