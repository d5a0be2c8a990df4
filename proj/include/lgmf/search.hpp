#ifndef LGMF_SEARCH_HPP
#define LGMF_SEARCH_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lgmf/ansatz.hpp"
#include "lgmf/qdim.hpp"

namespace lgmf {

struct SearchOptions {
  int attempts = 16;
  double tol = 1e-10;            // on the 2-norm of the equation vector
  double budget_seconds = 60;    // wall clock; later attempts are skipped once spent
  std::uint64_t seed = 1;
  int jobs = 0;                  // 0: default_jobs()
  int max_iterations = 300;
  int max_order = 24;            // largest zeta order tried in reconstruction
  double match_tol = 1e-8;
  bool snap = true;              // pin unknowns to nice values before giving up on exactness
};

struct SearchSolution {
  std::size_t attempt = 0;
  std::vector<std::complex<double>> values;
  double residual = 0;
  std::complex<double> qdim_left, qdim_right;  // numeric, from the parametric formula
  bool exact = false;                          // reconstructed and re-verified
  bool snapped = false;                        // exact only after pinning unknowns
  std::vector<CycloNumber> exact_values;
  std::optional<MatrixFactorization> mf;       // when exact
  OrbifoldReport report;                       // when exact
};

struct SearchResult {
  std::vector<SearchSolution> solutions;  // distinct, in attempt order
  int attempts_run = 0;
  bool budget_exhausted = false;
};

/// Randomized damped Newton (Levenberg-Marquardt) over C on the equations of
/// the system. Attempt k draws its start from (seed, k), so results do not
/// depend on the number of workers unless the time budget cuts attempts off.
/// No completeness claim: an empty result says nothing.
SearchResult search(const AnsatzSystem& sys, const SearchOptions& opt = {});

/// Matches x against r * c * zeta_n^k with c in {1, 2cos(2 j pi / n)} and r a
/// small rational (1, 2, 3, 1/2, 1/3, 1/4, 3/2, 2/3), or zero.
std::optional<CycloNumber> recognize_cyclotomic(std::complex<double> x, int n, double tol);

std::string search_result_json(const AnsatzSystem& sys, const SearchResult& r);

}  // namespace lgmf

#endif  // LGMF_SEARCH_HPP
