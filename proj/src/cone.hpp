#pragma once

// Double description engine for polyhedral cones {x : <c_i, x> >= 0}.
// Internal to the library.

#include <boost/dynamic_bitset.hpp>

#include <vector>

#include "genmult/exact_linalg.hpp"

namespace genmult::detail {

using Bitset = boost::dynamic_bitset<>;

struct ConeRay {
  IntVector coords;  // primitive
  Bitset zeros;      // constraint indices tight on this ray
};

struct ConeDescription {
  std::vector<IntVector> lineality;
  std::vector<ConeRay> rays;
};

/// Extreme rays (modulo lineality) of {x in Q^dim : <c, x> >= 0 for c in
/// constraints}. Constraints are inserted in lexicographic order; the
/// `zeros` bitsets index the constraints in their original order.
ConeDescription extreme_rays(const std::vector<IntVector>& constraints, std::size_t dim);

/// a / content(a), keeping the sign of every entry.
IntVector divide_by_content(IntVector a);

}  // namespace genmult::detail
