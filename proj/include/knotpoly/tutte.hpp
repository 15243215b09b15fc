#ifndef KNOTPOLY_TUTTE_HPP
#define KNOTPOLY_TUTTE_HPP

#include "knotpoly/bivar_poly.hpp"
#include "knotpoly/multigraph.hpp"

namespace knotpoly {

/// Tutte polynomial by direct enumeration of all 2^e spanning subgraphs.
/// Exponential; guarded at e <= 24 (throws TooLarge beyond).
BivarPoly tutte_oracle(const Multigraph& g);

/// Tutte polynomial by recursive deletion-contraction with bridge/loop base
/// rules and memoization on a canonical graph key. Throws ResourceLimit when
/// the recursion budget is exceeded.
BivarPoly tutte_delcon(const Multigraph& g);

} // namespace knotpoly

#endif
