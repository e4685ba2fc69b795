#pragma once

#include <vector>

#include "cylabacus/abacus.hpp"

namespace cylabacus {

// One yoked pair: the entry of row `upper_row` at position `upper` matched
// with the entry of row `upper_row - 1` at position `lower`.
struct YokePair {
  int upper = 0;
  int lower = 0;
  int upper_row = 2;

  bool operator==(const YokePair&) const = default;
};

// Chain k joins the k-th leftmost same-color entries of every adjacent row
// pair; pairs run bottom to top (upper_row = 2 .. x+1).
struct YokeChain {
  int k = 1;
  std::vector<YokePair> pairs;

  bool operator==(const YokeChain&) const = default;
};

// White chains 1..count on the extended abacus: chain k pairs the k-th
// leftmost gap of each row with the k-th leftmost gap of the row below.
std::vector<YokeChain> white_yokes(const ExtendedAbacus& ap, int count);

// Bound past which white chains cannot flip direction: beyond every bead the
// k-th gap of row j sits exactly at row_charge(j) + k, so once the charges
// are weakly increasing every chain k > max_bead + 1 - min_charge runs
// upper >= lower automatically.  Checks stop here (plus a few spot checks).
int white_yoke_horizon(const ExtendedAbacus& ap);

struct BlackYokes {
  // Rightmost position beta0 such that every column <= beta0 is full; those
  // columns are yoked vertically and are not materialized here.
  int beta0 = 0;
  // Chain k matches the k-th leftmost beads right of beta0 between adjacent
  // rows; a pair is present only where both rows have a k-th such bead.
  std::vector<YokeChain> chains;
};

// Requires the row charges of A' to be weakly increasing (extend() of an
// in-window abacus guarantees this); throws std::invalid_argument otherwise.
BlackYokes black_yokes(const ExtendedAbacus& ap);

// Charge in the window D(s) plus the interleaving inequalities
//   lambda^(j)_k >= lambda^(j+1)_{k + s_{j+1} - s_j}   for j < x, all k, and
//   lambda^(x)_k >= lambda^(1)_{k + e + s_1 - s_x}     (the wrap).
// False when the charge leaves the window.
bool is_cylindric_def(const ChargedMultipartition& mp, int e);

// Cylindric, and no value alpha > 0 whose rows of length alpha realize every
// residue mod e at their right ends.
bool is_flotw(const ChargedMultipartition& mp, int e);

// Every white pair up to the horizon (plus spot checks) runs upper >= lower;
// false when the charge leaves the window.
bool is_cylindric_yoke(const Abacus& a, int e);

// Every black pair runs upper <= lower.  Unlike the white test this is only
// defined inside the window and throws std::invalid_argument outside it.
bool is_cylindric_black(const Abacus& a, int e);

}  // namespace cylabacus
