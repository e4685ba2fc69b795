#include "cylabacus/level_rank.hpp"

namespace cylabacus {
namespace {

// floor division for possibly negative numerators
int fdiv(int a, int b) { return (a - mod_euclid(a, b)) / b; }

}  // namespace

Abacus dualize(const Abacus& a, int rank, int anchor) {
  const int l = a.level();
  if (l < 2 || rank < 2)
    throw std::invalid_argument("level and rank must be at least 2");
  if (mod_euclid(anchor, rank) != 0)
    throw std::invalid_argument("anchor must be a multiple of rank");

  const int m_lo = a.min_tail();      // beads everywhere at or below
  const int m_hi = a.max_bead() + 1;  // gaps everywhere at or above
  const int row_shift = (anchor / rank) * l;

  // Strip cell for dual position (beta, j): column anchor - rank + j of the
  // stack, row beta + row_shift.  Everything left of m_lo is a bead (so the
  // dual cell is a gap) once the sampled copy index k is large enough, and
  // symmetrically at the other end; K_hi/K_lo below are conservative bounds.
  const int k_hi = fdiv(anchor - m_lo + rank - 1, rank);        // >= ceil((anchor-m_lo)/rank)
  const int k_lo = fdiv(anchor - rank + 1 - m_hi, rank);        // <= (col-m_hi)/rank for all strip cols
  const int hi = l * k_hi + 1 - row_shift;   // all beta >= hi are gaps
  const int lo = l * (k_lo + 1) - row_shift;  // all beta <= lo are beads

  std::vector<AbacusRow> rows(rank);
  for (int j = 1; j <= rank; ++j) {
    AbacusRow& r = rows[j - 1];
    r.tail = lo;
    for (int beta = lo + 1; beta < hi; ++beta)
      if (!stacked_lookup(a, rank, anchor - rank + j, beta + row_shift))
        r.exceptions.push_back(beta);
  }
  return Abacus(std::move(rows));
}

Abacus dualize_inverse(const Abacus& dual, int level, int anchor) {
  return dualize(dual, level, anchor);
}

ChargedMultipartition dualize(const ChargedMultipartition& mp, int rank) {
  return multipartition_of(dualize(abacus_from(mp), rank));
}

ChargedMultipartition dualize_inverse(const ChargedMultipartition& mp, int level) {
  return multipartition_of(dualize_inverse(abacus_from(mp), level));
}

}  // namespace cylabacus
