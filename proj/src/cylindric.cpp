#include "cylabacus/cylindric.hpp"

#include <algorithm>
#include <stdexcept>

namespace cylabacus {

namespace {

// First `count` gaps of a row, leftmost first.
std::vector<int> leftmost_gaps(const Abacus& a, int j, int count) {
  std::vector<int> gaps;
  gaps.reserve(count);
  for (int beta = a.row(j).tail + 1; (int)gaps.size() < count; ++beta) {
    if (!a.contains(beta, j)) gaps.push_back(beta);
  }
  return gaps;
}

// Beads strictly right of beta0, leftmost first (finite: tail <= beta0 once
// the columns up to beta0 are full).
std::vector<int> beads_right_of(const Abacus& a, int j, int beta0) {
  std::vector<int> beads;
  const AbacusRow& row = a.row(j);
  for (int beta = beta0 + 1; beta <= row.tail; ++beta) beads.push_back(beta);
  for (auto it = row.exceptions.rbegin(); it != row.exceptions.rend(); ++it) {
    if (*it > beta0 && *it > row.tail) beads.push_back(*it);
  }
  return beads;
}

bool charges_weakly_increasing(const Abacus& a) {
  for (int j = 1; j < a.level(); ++j) {
    if (a.row_charge(j) > a.row_charge(j + 1)) return false;
  }
  return true;
}

// Window test that tolerates level 1 (the wrap bound s_1 <= s_1 + e is
// vacuous there).
bool window_ok(const Charge& s, int e) {
  if (s.size() < 2) return true;
  return in_window_D(s, e);
}

void require_rank(int e) {
  if (e < 2) throw std::invalid_argument("rank must be >= 2");
}

}  // namespace

std::vector<YokeChain> white_yokes(const ExtendedAbacus& ap, int count) {
  if (count < 0) throw std::invalid_argument("count must be >= 0");
  const Abacus& a = ap.rows;
  std::vector<std::vector<int>> gaps;
  for (int j = 1; j <= a.level(); ++j) gaps.push_back(leftmost_gaps(a, j, count));
  std::vector<YokeChain> chains;
  for (int k = 1; k <= count; ++k) {
    YokeChain chain{k, {}};
    for (int j = 1; j < a.level(); ++j) {
      chain.pairs.push_back({gaps[j][k - 1], gaps[j - 1][k - 1], j + 1});
    }
    chains.push_back(std::move(chain));
  }
  return chains;
}

int white_yoke_horizon(const ExtendedAbacus& ap) {
  const Abacus& a = ap.rows;
  int min_charge = a.row_charge(1);
  for (int j = 2; j <= a.level(); ++j) min_charge = std::min(min_charge, a.row_charge(j));
  return a.max_bead() + 1 - min_charge;
}

BlackYokes black_yokes(const ExtendedAbacus& ap) {
  const Abacus& a = ap.rows;
  if (!charges_weakly_increasing(a)) {
    throw std::invalid_argument("black yokes need weakly increasing row charges");
  }
  BlackYokes out;
  // In normal form the full region ends at the smallest tail; scan onward
  // anyway so the answer never depends on the representation.
  out.beta0 = a.min_tail();
  for (;;) {
    bool full = true;
    for (int j = 1; j <= a.level() && full; ++j) full = a.contains(out.beta0 + 1, j);
    if (!full) break;
    ++out.beta0;
  }
  std::vector<std::vector<int>> beads;
  int max_count = 0;
  for (int j = 1; j <= a.level(); ++j) {
    beads.push_back(beads_right_of(a, j, out.beta0));
    max_count = std::max(max_count, (int)beads.back().size());
  }
  for (int k = 1; k <= max_count; ++k) {
    YokeChain chain{k, {}};
    for (int j = 1; j < a.level(); ++j) {
      if (k <= (int)beads[j].size() && k <= (int)beads[j - 1].size()) {
        chain.pairs.push_back({beads[j][k - 1], beads[j - 1][k - 1], j + 1});
      }
    }
    if (!chain.pairs.empty()) out.chains.push_back(std::move(chain));
  }
  return out;
}

bool is_cylindric_def(const ChargedMultipartition& mp, int e) {
  require_rank(e);
  const Charge& s = mp.charge;
  if (!window_ok(s, e)) return false;
  int x = mp.level();
  int max_len = 0;
  for (const Partition& p : mp.components) max_len = std::max(max_len, p.length());
  for (int j = 1; j <= x; ++j) {
    int next = (j < x) ? j + 1 : 1;
    int shift = (j < x) ? s.entry(j + 1) - s.entry(j) : e + s.entry(1) - s.entry(x);
    const Partition& upper = mp.component(j);
    const Partition& lower = mp.component(next);
    for (int k = 1; k <= max_len + e; ++k) {
      if (upper.part(k) < lower.part(k + shift)) return false;
    }
  }
  return true;
}

bool is_flotw(const ChargedMultipartition& mp, int e) {
  if (!is_cylindric_def(mp, e)) return false;
  std::set<int> values;
  for (const Partition& p : mp.components) values.insert(p.parts().begin(), p.parts().end());
  for (int alpha : values) {
    if ((int)residue_set(mp, e, alpha).size() == e) return false;
  }
  return true;
}

bool is_cylindric_yoke(const Abacus& a, int e) {
  require_rank(e);
  if (!window_ok(a.charge(), e)) return false;
  ExtendedAbacus ap = extend(a, e);
  // Spot-check a few chains past the horizon as well.
  int count = white_yoke_horizon(ap) + 3;
  for (const YokeChain& chain : white_yokes(ap, count)) {
    for (const YokePair& pair : chain.pairs) {
      if (pair.upper < pair.lower) return false;
    }
  }
  return true;
}

bool is_cylindric_black(const Abacus& a, int e) {
  require_rank(e);
  if (!window_ok(a.charge(), e)) {
    throw std::invalid_argument("black cylindricity is only defined inside the window");
  }
  BlackYokes by = black_yokes(extend(a, e));
  for (const YokeChain& chain : by.chains) {
    for (const YokePair& pair : chain.pairs) {
      if (pair.upper > pair.lower) return false;
    }
  }
  return true;
}

}  // namespace cylabacus
