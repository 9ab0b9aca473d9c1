#ifndef HOUGHTON_IO_HPP
#define HOUGHTON_IO_HPP

#include <iosfwd>
#include <string>

#include "houghton/cover.hpp"
#include "houghton/cubical_complex.hpp"

namespace houghton {

/// Line-based complex format:
///   houghton-complex v1 n=<n>
///   v <id> <canonical encoding>
///   c <base-id> <dirmask bits, char j = ray j+1>
/// Vertices in id order; cubes by (base, mask); the 0-cube lines are implied
/// by the v lines and not written.
void export_complex(std::ostream& os, const CubicalComplex& X);
std::string export_complex_string(const CubicalComplex& X);

/// Rebuilds a complex from the format above, re-validating canonical form,
/// cube closure and edge consistency. Errors name the offending line.
CubicalComplex import_complex(std::istream& is);
CubicalComplex import_complex_string(const std::string& text);

/// Nerve export: same line style with labelled vertices:
///   houghton-nerve v1 n=<n>
///   v <id> <piece label>
///   label <id> type=<i> alpha=<a>
///   s <id> <id> ...        (maximal faces)
void export_nerve(std::ostream& os, const Nerve& L, int n);
Nerve import_nerve(std::istream& is);

/// Debug dump: `deg <k> <rows> <cols>` then `r c value` triples.
void dump_matrix(std::ostream& os, int degree, const SparseMat<std::int64_t>& M);

} // namespace houghton

#endif
