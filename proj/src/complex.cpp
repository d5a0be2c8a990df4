#include "lgmf/complex.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>

#include "lgmf/errors.hpp"
#include "lgmf/linalg.hpp"
#include "lgmf/parallel.hpp"

namespace lgmf {

namespace {

using Key = std::vector<std::uint16_t>;  // generator index followed by exponents

struct Slice {
  std::vector<std::pair<std::size_t, Monomial>> basis;
  std::map<Key, int> index;
  std::size_t count[2] = {0, 0};
};

class SliceEngine {
 public:
  explicit SliceEngine(const GradedComplex& c) : c_(c) {
    const long long rs = c.ring->degree_scale;
    long long s = rs;
    for (const auto& g : c.gens) s = lcm_ll(s, g.degree.denominator().get_si());
    scale_ = s;
    factor_ = s / rs;
    for (const auto& g : c.gens) gen_deg_.push_back((g.degree * Rational(s)).numerator().get_si());
    for (const auto& w : c.ring->scaled_degree)
      if (w <= 0) throw DomainError("complex ring has a variable of non-positive weight");
  }

  long long scale() const { return scale_; }
  long long to_units(const Rational& q) const {
    Rational v = q * Rational(scale_);
    if (!v.is_integer()) throw DomainError("degree off the complex lattice");
    return v.numerator().get_si();
  }
  const std::vector<long long>& gen_degrees() const { return gen_deg_; }

  // All slice degrees in [lo, hi] that can carry basis elements.
  std::vector<long long> degrees(long long lo, long long hi) const {
    std::vector<long long> out;
    for (long long g : gen_deg_)
      for (long long q = g; q <= hi; q += factor_)
        if (q >= lo) out.push_back(q);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::shared_ptr<const Slice> slice(long long q) {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = slices_.find(q);
      if (it != slices_.end()) return it->second;
    }
    auto s = std::make_shared<Slice>();
    for (std::size_t i = 0; i < c_.gens.size(); ++i) {
      long long rest = q - gen_deg_[i];
      if (rest < 0 || rest % factor_ != 0) continue;
      for (const auto& m : standard(rest / factor_)) {
        Key k;
        k.push_back(static_cast<std::uint16_t>(i));
        k.insert(k.end(), m.exps.begin(), m.exps.end());
        s->index.emplace(std::move(k), static_cast<int>(s->basis.size()));
        s->basis.emplace_back(i, m);
        ++s->count[c_.gens[i].parity];
      }
    }
    std::lock_guard<std::mutex> lock(mutex_);
    return slices_.emplace(q, std::move(s)).first->second;
  }

  // Image of basis element (gen, mono) as a sparse row over `target`.
  SparseRow image(std::size_t gen, const Monomial& mono, const Slice& target) const {
    std::vector<std::pair<int, CycloNumber>> row;
    const CycloNumber one(c_.ring->cyclo_order, Rational(1));
    for (std::size_t k = 0; k < c_.gens.size(); ++k) {
      const auto& e = c_.diff(k, gen);
      if (e.is_zero()) continue;
      MultiPoly p = e.times_monomial(mono, one);
      if (c_.quotient) p = normal_form(p, *c_.quotient);
      for (const auto& t : p.terms()) {
        Key key;
        key.push_back(static_cast<std::uint16_t>(k));
        key.insert(key.end(), t.mono.exps.begin(), t.mono.exps.end());
        auto it = target.index.find(key);
        if (it == target.index.end()) throw DomainError("differential leaves its degree slice");
        row.emplace_back(it->second, t.coeff);
      }
    }
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseRow out;
    for (auto& [col, v] : row) {
      if (!out.empty() && out.back().first == col) {
        out.back().second += v;
        if (out.back().second.is_zero()) out.pop_back();
      } else {
        out.emplace_back(col, std::move(v));
      }
    }
    return out;
  }

  // Ranks of delta out of slice q, by source parity.
  std::pair<std::size_t, std::size_t> out_ranks(long long q) {
    auto src = slice(q);
    auto dst = slice(q + scale_);
    RowEchelon e[2];
    for (const auto& [gen, mono] : src->basis) e[c_.gens[gen].parity].add(image(gen, mono, *dst));
    return {e[0].rank(), e[1].rank()};
  }

 private:
  const GradedComplex& c_;
  long long scale_ = 1, factor_ = 1;
  std::vector<long long> gen_deg_;
  std::map<long long, std::shared_ptr<const Slice>> slices_;
  std::map<long long, std::vector<Monomial>> standard_;
  std::mutex mutex_;

  const std::vector<Monomial>& standard(long long ring_scaled) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = standard_.find(ring_scaled);
    if (it != standard_.end()) return it->second;
    auto all = monomials_of_degree(*c_.ring, ring_scaled);
    std::vector<Monomial> keep;
    for (auto& m : all)
      if (!c_.quotient || is_standard(m, *c_.quotient)) keep.push_back(std::move(m));
    return standard_.emplace(ring_scaled, std::move(keep)).first->second;
  }
};

Ring joint_ring(const Ring& a, const Ring& b) {
  for (std::size_t i = 0; i < a->size(); ++i) {
    int k = b->index_of(a->names[i]);
    if (k < 0) throw RingMismatch("variable '" + a->names[i] + "' missing from " + b->describe());
    if (b->weights[k] != a->weights[i]) throw RingMismatch("variable '" + a->names[i] + "' carries different weights");
  }
  return with_order(b, static_cast<int>(lcm_ll(a->cyclo_order, b->cyclo_order)));
}

}  // namespace

GradedComplex hom_complex(const MatrixFactorization& m, const MatrixFactorization& n) {
  if (!m.internal_vars().empty()) throw DomainError("hom_complex: source must have finite rank (no internal variables)");
  Ring r = joint_ring(m.ring, n.ring);
  if (m.potential().to_ring(r) != n.potential().to_ring(r))
    throw DomainError("hom_complex: factorizations of different potentials");
  const std::size_t a = m.rank(), b = n.rank();
  GradedComplex c;
  c.ring = r;
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < a; ++j)
      c.gens.push_back({n.gens[i].parity ^ m.gens[j].parity, n.gens[i].degree - m.gens[j].degree});
  c.diff = PolyMatrix(r, a * b, a * b);
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < a; ++j) {
      const std::size_t col = i * a + j;
      const bool odd = c.gens[col].parity;
      for (std::size_t k = 0; k < b; ++k)
        if (!n.diff(k, i).is_zero()) c.diff(k * a + j, col) += n.diff(k, i).to_ring(r);
      for (std::size_t l = 0; l < a; ++l) {
        const auto& e = m.diff(j, l);
        if (e.is_zero()) continue;
        MultiPoly t = e.to_ring(r);
        c.diff(i * a + l, col) += odd ? t : -t;
      }
    }
  return c;
}

GradedComplex koszul_hom_complex(const MatrixFactorization& k, const MatrixFactorization& x) {
  if (k.rank() != 2 || k.gens[0].parity != 0 || k.gens[1].parity != 1 || !k.diff(0, 0).is_zero() ||
      !k.diff(1, 1).is_zero())
    throw DomainError("koszul_hom_complex: source is not a rank-2 Koszul factorization");
  if (!k.internal_vars().empty()) throw DomainError("koszul_hom_complex: source has internal variables");
  Ring r = joint_ring(k.ring, x.ring);
  if (k.potential().to_ring(r) != x.potential().to_ring(r))
    throw DomainError("koszul_hom_complex: factorizations of different potentials");
  GradedComplex c;
  c.ring = r;
  for (const auto& g : x.gens) c.gens.push_back({g.parity ^ 1, g.degree - k.gens[1].degree});
  c.diff = x.diff.to_ring(r);
  c.quotient = groebner_basis({k.diff(0, 1).to_ring(r)});
  return c;
}

namespace {

// Per-slice cohomology for all slices up to max generator degree + cutoff.
std::map<Rational, std::pair<std::size_t, std::size_t>> slice_cohomology(const GradedComplex& c, const Rational& cutoff) {
  std::map<Rational, std::pair<std::size_t, std::size_t>> out;
  if (c.gens.empty()) return out;
  SliceEngine eng(c);
  const auto& gd = eng.gen_degrees();
  const long long lo = *std::min_element(gd.begin(), gd.end());
  const long long hi = *std::max_element(gd.begin(), gd.end()) + eng.to_units(cutoff);
  auto qs = eng.degrees(lo, hi);
  // ranks out of every slice in range and out of the slices one step below
  std::vector<long long> need = qs;
  for (long long q : qs) need.push_back(q - eng.scale());
  std::sort(need.begin(), need.end());
  need.erase(std::unique(need.begin(), need.end()), need.end());
  std::vector<std::pair<std::size_t, std::size_t>> ranks(need.size());
  parallel_for(need.size(), [&](std::size_t i) { ranks[i] = eng.out_ranks(need[i]); });
  auto rank_of = [&](long long q) { return ranks[std::lower_bound(need.begin(), need.end(), q) - need.begin()]; };
  for (long long q : qs) {
    auto s = eng.slice(q);
    auto out_r = rank_of(q);
    auto in_r = rank_of(q - eng.scale());
    std::size_t he = s->count[0] - out_r.first - in_r.second;
    std::size_t ho = s->count[1] - out_r.second - in_r.first;
    if (he || ho) out[Rational(q, eng.scale())] = {he, ho};
  }
  return out;
}

Rational max_degree(const GradedComplex& c) {
  Rational m = c.gens.front().degree;
  for (const auto& g : c.gens) m = std::max(m, g.degree);
  return m;
}

CohomologyDims summarize(const std::map<Rational, std::pair<std::size_t, std::size_t>>& slices, const Rational& top,
                         const Rational& cutoff) {
  CohomologyDims out;
  out.cutoff = cutoff;
  for (const auto& [q, v] : slices) {
    if (q > top) continue;
    out.even += v.first;
    out.odd += v.second;
    out.by_degree[q] = v;
  }
  return out;
}

}  // namespace

CohomologyDims cohomology_dims_at(const GradedComplex& c, const Rational& cutoff) {
  if (c.gens.empty()) return summarize({}, Rational(0), cutoff);
  return summarize(slice_cohomology(c, cutoff), max_degree(c) + cutoff, cutoff);
}

CohomologyDims cohomology_dims(const GradedComplex& c, const Rational& cutoff) {
  if (c.gens.empty()) {
    auto z = summarize({}, Rational(0), cutoff);
    z.stabilized = true;
    return z;
  }
  // one computation covers both truncations: the smaller is a prefix
  auto slices = slice_cohomology(c, cutoff + Rational(1));
  CohomologyDims a = summarize(slices, max_degree(c) + cutoff, cutoff);
  CohomologyDims b = summarize(slices, max_degree(c) + cutoff + Rational(1), cutoff);
  a.stabilized = (a.even == b.even && a.odd == b.odd && a.by_degree == b.by_degree);
  return a;
}

CohomologyDims hom_dims(const MatrixFactorization& m, const MatrixFactorization& n, const Rational& cutoff) {
  const bool koszul = m.rank() == 2 && m.gens[0].parity == 0 && m.gens[1].parity == 1 && m.diff(0, 0).is_zero() &&
                      m.diff(1, 1).is_zero() && !m.diff(0, 1).is_zero() && m.internal_vars().empty();
  return cohomology_dims(koszul ? koszul_hom_complex(m, n) : hom_complex(m, n), cutoff);
}

bool check_square_zero(const GradedComplex& c) {
  if (c.gens.empty()) return true;
  PolyMatrix sq = c.diff * c.diff;
  if (!c.quotient) return sq.is_zero();
  for (std::size_t i = 0; i < sq.rows(); ++i)
    for (std::size_t j = 0; j < sq.cols(); ++j)
      if (!normal_form(sq(i, j), *c.quotient).is_zero()) return false;
  return true;
}

std::pair<std::size_t, std::size_t> slice_dims(const GradedComplex& c, const Rational& degree) {
  SliceEngine eng(c);
  if (!(degree * Rational(eng.scale())).is_integer()) return {0, 0};
  auto s = eng.slice(eng.to_units(degree));
  return {s->count[0], s->count[1]};
}

namespace {
std::atomic<std::size_t> escalations{0};
}

std::size_t cutoff_escalations() { return escalations.load(); }
void note_cutoff_escalation() { ++escalations; }

}  // namespace lgmf
