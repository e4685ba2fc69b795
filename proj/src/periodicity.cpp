#include "cylabacus/periodicity.hpp"

#include <algorithm>

namespace cylabacus {

namespace {

// Lowest row with a bead in the column, or 0 when the column is empty.
int lowest_row_in_column(const Abacus& a, int beta) {
  for (int j = 1; j <= a.level(); ++j) {
    if (a.contains(beta, j)) return j;
  }
  return 0;
}

bool has_exceptions(const Abacus& a) {
  for (const AbacusRow& row : a.rows()) {
    if (!row.exceptions.empty()) return true;
  }
  return false;
}

}  // namespace

std::optional<Period> first_period(const Abacus& a, int e) {
  if (e < 2) throw std::invalid_argument("period length must be >= 2");
  Period p;
  int beta = a.max_bead();
  int prev_row = a.level() + 1;
  for (int i = 0; i < e; ++i, --beta) {
    int j = lowest_row_in_column(a, beta);
    if (j == 0 || j > prev_row) return std::nullopt;
    p.beads.emplace_back(beta, j);
    prev_row = j;
  }
  return p;
}

Abacus strip_period(const Abacus& a, const Period& p) {
  int e = (int)p.beads.size();
  if (e < 2 || first_period(a, e) != p) {
    throw std::invalid_argument("not the first period of this abacus");
  }
  Abacus cur = a;
  for (auto [beta, j] : p.beads) cur = cur.without(beta, j);
  return cur;
}

std::vector<Period> periods(const Abacus& a, int e, int count) {
  if (count < 0) throw std::invalid_argument("count must be >= 0");
  std::vector<Period> out;
  Abacus cur = a;
  for (int i = 0; i < count; ++i) {
    auto p = first_period(cur, e);
    if (!p) break;
    cur = strip_period(cur, *p);
    out.push_back(std::move(*p));
  }
  return out;
}

bool is_totally_periodic(const Abacus& a, int e) {
  if (e < 2) throw std::invalid_argument("period length must be >= 2");
  // Loud cap on the strip loop.  Legitimate runs are bounded by the bead
  // content of the active window: strips only ever touch columns between the
  // smallest tail (less e per split) and the maximum bead, so a multiple of
  // exceptions + level * (window/e + e) covers them with room to spare.
  long long exc = 0;
  for (const AbacusRow& row : a.rows()) exc += (long long)row.exceptions.size();
  long long spread = std::max(0, a.max_bead() - a.min_tail());
  long long x = a.level();
  long long cap = 64 + 4 * (exc + x * e + x * (spread / e + 2));
  Abacus cur = a;
  for (long long iter = 0; has_exceptions(cur); ++iter) {
    if (iter > cap) throw GuardError("period stripping exceeded its iteration cap");
    auto p = first_period(cur, e);
    if (!p) return false;
    cur = strip_period(cur, *p);
  }
  return true;
}

}  // namespace cylabacus
