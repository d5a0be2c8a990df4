#ifndef LGMF_PARALLEL_HPP
#define LGMF_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace lgmf {

/// Worker count used by parallel_for; initialized from LGMF_JOBS, default 1.
int default_jobs();
void set_default_jobs(int jobs);

/// Runs body(i) for i in [0, n); exceptions from workers are rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body, int jobs = 0);

}  // namespace lgmf

#endif  // LGMF_PARALLEL_HPP
