#ifndef LGMF_MF_IO_HPP
#define LGMF_MF_IO_HPP

#include <string>

#include "lgmf/mf.hpp"

namespace lgmf {

/// Line-oriented text form ("mf v1", ring, wleft, wright, gens, nonzero entries).
std::string write_mf(const MatrixFactorization& m);
/// Inverse of write_mf. Left and right variables are those occurring in
/// wleft and wright; the rest are internal.
MatrixFactorization read_mf(const std::string& text);

Ring parse_ring_line(const std::string& line);

}  // namespace lgmf

#endif  // LGMF_MF_IO_HPP
