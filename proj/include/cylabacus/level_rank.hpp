#pragma once

#include "cylabacus/abacus.hpp"

namespace cylabacus {

// Reading convention for the level-rank transpose, fixed by regression tests
// against the worked example and by the charge-negation and anchor-independence
// properties (the three other orientation candidates fail them):
//   * the stacked abacus is sampled on a strip of `rank` consecutive columns
//     whose rightmost index is `anchor`, a multiple of `rank`;
//   * strip columns map left-to-right to dual rows 1..rank;
//   * strip row r maps to dual position beta = r - (anchor/rank)*level;
//   * bead and gap are exchanged.
struct DualityConvention {
  int anchor = 0;
};

// x-abacus -> rank-abacus.  Sum of charges is negated.  anchor must be a
// multiple of rank; the result is anchor-independent.
Abacus dualize(const Abacus& a, int rank, int anchor = 0);

// Inverse transpose: same reading with the roles of level and rank exchanged,
// so dualize_inverse(dualize(a, e), a.level()) == a.
Abacus dualize_inverse(const Abacus& dual, int level, int anchor = 0);

ChargedMultipartition dualize(const ChargedMultipartition& mp, int rank);
ChargedMultipartition dualize_inverse(const ChargedMultipartition& mp, int level);

}  // namespace cylabacus
