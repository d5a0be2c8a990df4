#include "lgmf/decompose.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>

#include <json.hpp>

#include "lgmf/errors.hpp"
#include "lgmf/parallel.hpp"
#include "lgmf/reduce.hpp"

namespace lgmf {

namespace {

constexpr long long kPrime = 2147483647;  // 2^31 - 1

long long mod_p(long long v) {
  v %= kPrime;
  return v < 0 ? v + kPrime : v;
}

long long pow_mod(long long b, long long e) {
  long long r = 1;
  b = mod_p(b);
  while (e) {
    if (e & 1) r = r * b % kPrime;
    b = b * b % kPrime;
    e >>= 1;
  }
  return r;
}

// Stabilized hom dims, doubling the cutoff a few times before giving up.
CohomologyDims stable_hom_dims(const MatrixFactorization& a, const MatrixFactorization& b) {
  for (Rational c(4); c <= Rational(16); c = c * Rational(2)) {
    auto h = hom_dims(a, b, c);
    if (h.stabilized) return h;
    note_cutoff_escalation();
  }
  throw CutoffError("hom dimensions did not stabilize");
}

// Unique integer solution of G n = h, certified by full column rank mod p and
// an exact integer check of every equation.
std::vector<long long> solve_integer_system(const std::vector<std::vector<long long>>& g,
                                            const std::vector<long long>& h, std::size_t cols) {
  std::vector<std::vector<long long>> piv_rows;
  std::vector<std::size_t> piv_cols;
  for (std::size_t r = 0; r < g.size() && piv_cols.size() < cols; ++r) {
    std::vector<long long> row(cols + 1);
    for (std::size_t c = 0; c < cols; ++c) row[c] = mod_p(g[r][c]);
    row[cols] = mod_p(h[r]);
    for (std::size_t k = 0; k < piv_cols.size(); ++k) {
      long long f = row[piv_cols[k]];
      if (!f) continue;
      for (std::size_t c = 0; c <= cols; ++c) row[c] = mod_p(row[c] - f * piv_rows[k][c]);
    }
    std::size_t lead = 0;
    while (lead < cols && row[lead] == 0) ++lead;
    if (lead == cols) continue;
    long long inv = pow_mod(row[lead], kPrime - 2);
    for (auto& v : row) v = v * inv % kPrime;
    for (std::size_t k = 0; k < piv_rows.size(); ++k) {
      long long f = piv_rows[k][lead];
      if (!f) continue;
      for (std::size_t c = 0; c <= cols; ++c) piv_rows[k][c] = mod_p(piv_rows[k][c] - f * row[c]);
    }
    piv_rows.push_back(std::move(row));
    piv_cols.push_back(lead);
  }
  if (piv_cols.size() < cols) throw DomainError("decompose: graded Gram system is singular");
  std::vector<long long> n(cols);
  for (std::size_t k = 0; k < cols; ++k) {
    long long v = piv_rows[k][cols];
    n[piv_cols[k]] = v > kPrime / 2 ? v - kPrime : v;
  }
  for (std::size_t r = 0; r < g.size(); ++r) {
    long long s = 0;
    for (std::size_t c = 0; c < cols; ++c) s += g[r][c] * n[c];
    if (s != h[r]) throw DomainError("decompose: hom dimensions admit no integer solution");
  }
  return n;
}

}  // namespace

std::size_t Decomposition::rank() const {
  long long r = 0;
  for (const auto& [lab, k] : mult) r += 2 * k;
  return static_cast<std::size_t>(r);
}

std::string Decomposition::to_string() const {
  if (mult.empty()) return "0";
  // canonical order: m then l
  std::vector<std::pair<PermLabel, long long>> items(mult.begin(), mult.end());
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    return std::make_pair(a.first.m, a.first.l) < std::make_pair(b.first.m, b.first.l);
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [lab, k] : items) {
    if (k == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (k != 1) os << k << "*";
    os << "P[" << lab.m << ":" << lab.l << "]";
  }
  return first ? "0" : os.str();
}

Decomposition operator+(const Decomposition& a, const Decomposition& b) {
  if (a.d != b.d && !a.mult.empty() && !b.mult.empty()) throw DomainError("decompositions for different d");
  Decomposition s = a;
  if (!s.d) s.d = b.d;
  for (const auto& [lab, k] : b.mult) s.mult[lab] += k;
  return s;
}

const std::vector<std::vector<CohomologyDims>>& gram(int d) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<std::vector<std::vector<CohomologyDims>>>> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(d);
    if (it != cache.end()) return *it->second;
  }
  auto labels = all_labels(d);
  const std::size_t n = labels.size();
  std::vector<MatrixFactorization> simples;
  for (const auto& l : labels) simples.push_back(make_permutation_mf(l));
  auto g = std::make_unique<std::vector<std::vector<CohomologyDims>>>(n, std::vector<CohomologyDims>(n));
  parallel_for(n * n, [&](std::size_t k) { (*g)[k / n][k % n] = stable_hom_dims(simples[k / n], simples[k % n]); });
  std::lock_guard<std::mutex> lock(mutex);
  return *cache.emplace(d, std::move(g)).first->second;
}

Decomposition decompose(const MatrixFactorization& x_in, int d) {
  if (x_in.left_vars != std::vector<std::string>{"x"} || x_in.right_vars != std::vector<std::string>{"y"} ||
      !x_in.internal_vars().empty())
    throw DomainError("decompose: expects a finite-rank factorization over x, y");
  {
    auto ref = make_permutation_mf(d, {0});
    Ring joint = union_ring(ref.ring, x_in.ring);
    if (x_in.potential().to_ring(joint) != ref.potential().to_ring(joint))
      throw DomainError("decompose: not a factorization of x^d - y^d for d=" + std::to_string(d));
  }
  MatrixFactorization x = split_units(x_in);
  Decomposition out;
  out.d = d;
  if (x.rank() == 0) return out;

  const auto labels = all_labels(d);
  const auto& g = gram(d);
  const std::size_t n = labels.size();
  std::vector<CohomologyDims> h(n);
  std::vector<MatrixFactorization> simples;
  for (const auto& l : labels) simples.push_back(make_permutation_mf(l));
  parallel_for(n, [&](std::size_t a) { h[a] = stable_hom_dims(simples[a], x); });

  std::set<Rational> shifts;
  for (const auto& gen : x.gens)
    if (gen.parity == 0) shifts.insert(gen.degree);
  const std::vector<Rational> delta(shifts.begin(), shifts.end());
  const std::size_t cols = n * delta.size();

  std::vector<std::vector<long long>> rows;
  std::vector<long long> rhs;
  for (std::size_t a = 0; a < n; ++a) {
    std::set<Rational> qs;
    for (const auto& [q, v] : h[a].by_degree) qs.insert(q);
    for (std::size_t b = 0; b < n; ++b)
      for (const auto& [q, v] : g[a][b].by_degree)
        for (const auto& s : delta) qs.insert(q + s);
    for (const auto& q : qs)
      for (int p = 0; p < 2; ++p) {
        std::vector<long long> row(cols, 0);
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t k = 0; k < delta.size(); ++k) {
            auto it = g[a][b].by_degree.find(q - delta[k]);
            if (it != g[a][b].by_degree.end())
              row[b * delta.size() + k] = static_cast<long long>(p ? it->second.second : it->second.first);
          }
        auto it = h[a].by_degree.find(q);
        long long r = it == h[a].by_degree.end() ? 0 : static_cast<long long>(p ? it->second.second : it->second.first);
        if (r == 0 && std::all_of(row.begin(), row.end(), [](long long v) { return v == 0; })) continue;
        rows.push_back(std::move(row));
        rhs.push_back(r);
      }
  }
  auto sol = solve_integer_system(rows, rhs, cols);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t k = 0; k < delta.size(); ++k) {
      long long v = sol[b * delta.size() + k];
      if (v < 0) throw DomainError("decompose: negative multiplicity for " + labels[b].to_string());
      if (v) out.mult[labels[b]] += v;
    }
  if (out.rank() != x.rank())
    throw DomainError("decompose: rank accounting failed (" + std::to_string(out.rank()) + " vs " +
                      std::to_string(x.rank()) + ")");
  return out;
}

MatrixFactorization fuse_mf(const PermLabel& a, const PermLabel& b) {
  if (a.d != b.d) throw DomainError("fuse: labels for different d");
  auto t = tensor(make_permutation_mf(a), make_permutation_mf(b));
  auto r = reduce(t);
  return rename_outer(r, {"x"}, {"y"});
}

Decomposition fuse_decompose(const PermLabel& a, const PermLabel& b) {
  if (a.d != b.d) throw DomainError("fuse: labels for different d");
  static std::mutex mutex;
  static std::map<std::pair<PermLabel, PermLabel>, Decomposition> memo;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = memo.find({a, b});
    if (it != memo.end()) return it->second;
  }
  Decomposition out = decompose(fuse_mf(a, b), a.d);
  std::lock_guard<std::mutex> lock(mutex);
  memo.emplace(std::make_pair(a, b), out);
  return out;
}

namespace {
Decomposition rule(const PermLabel& a, const PermLabel& b, int sign) {
  if (a.d != b.d) throw DomainError("fusion rule: labels for different d");
  const int d = a.d;
  Decomposition out;
  out.d = d;
  const int lo = std::abs(a.l - b.l);
  const int hi = std::min(a.l + b.l, 2 * d - 4 - a.l - b.l);
  for (int k = lo; k <= hi; k += 2) out.mult[make_label(d, a.m + b.m + sign * (a.l + b.l - k) / 2, k)] += 1;
  return out;
}
}  // namespace

Decomposition fusion_rule(const PermLabel& a, const PermLabel& b) { return rule(a, b, -1); }
Decomposition fusion_rule_bottom_anchored(const PermLabel& a, const PermLabel& b) { return rule(a, b, +1); }

std::vector<FusionRow> fusion_table(int d, Decomposition (*expected)(const PermLabel&, const PermLabel&)) {
  auto labels = all_labels(d);
  std::sort(labels.begin(), labels.end(),
            [](const PermLabel& a, const PermLabel& b) { return std::make_pair(a.m, a.l) < std::make_pair(b.m, b.l); });
  gram(d);
  std::vector<FusionRow> rows(labels.size() * labels.size());
  const std::size_t n = labels.size();
  parallel_for(rows.size(), [&](std::size_t k) {
    auto& row = rows[k];
    row.a = labels[k / n];
    row.b = labels[k % n];
    row.computed = fuse_decompose(row.a, row.b);
    row.expected = expected(row.a, row.b);
    row.match = row.computed == row.expected;
  });
  return rows;
}

std::string fusion_table_tsv(const std::vector<FusionRow>& rows) {
  std::ostringstream os;
  os << "m\tl\tm'\tl'\tdecomposition\texpected\tmatch\n";
  for (const auto& r : rows)
    os << r.a.m << "\t" << r.a.l << "\t" << r.b.m << "\t" << r.b.l << "\t" << r.computed.to_string() << "\t"
       << r.expected.to_string() << "\t" << (r.match ? "yes" : "no") << "\n";
  return os.str();
}

std::string fusion_table_json(const std::vector<FusionRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    auto summands = [](const Decomposition& dec) {
      nlohmann::json s = nlohmann::json::array();
      for (const auto& [lab, k] : dec.mult) s.push_back({{"m", lab.m}, {"l", lab.l}, {"mult", k}});
      return s;
    };
    arr.push_back({{"m", r.a.m},
                   {"l", r.a.l},
                   {"m2", r.b.m},
                   {"l2", r.b.l},
                   {"decomposition", summands(r.computed)},
                   {"expected", summands(r.expected)},
                   {"match", r.match}});
  }
  return arr.dump(2) + "\n";
}

}  // namespace lgmf
