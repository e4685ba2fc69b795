#pragma once

#include <random>
#include <string>
#include <vector>

#include "cylabacus/core.hpp"
#include "cylabacus/notation.hpp"

namespace cylabacus::testing {

inline ChargedMultipartition inst(const std::string& mp, const std::string& s) {
  return ChargedMultipartition(parse_multipartition(mp), parse_charge(s));
}

inline Partition random_partition(std::mt19937& rng, int max_size) {
  std::uniform_int_distribution<int> size_dist(0, max_size);
  int budget = size_dist(rng);
  std::vector<int> parts;
  int cap = budget;
  while (budget > 0) {
    std::uniform_int_distribution<int> part_dist(1, cap);
    int p = std::min(part_dist(rng), budget);
    parts.push_back(p);
    cap = p;
    budget -= p;
  }
  return Partition(std::move(parts));
}

inline Charge random_charge(std::mt19937& rng, int len, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  std::vector<int> s(len);
  for (int& v : s) v = dist(rng);
  return Charge(std::move(s));
}

inline ChargedMultipartition random_instance(std::mt19937& rng, int level,
                                             int max_size, int charge_lo,
                                             int charge_hi) {
  Multipartition mp(level);
  for (auto& p : mp) p = random_partition(rng, max_size);
  return ChargedMultipartition(std::move(mp),
                               random_charge(rng, level, charge_lo, charge_hi));
}

}  // namespace cylabacus::testing
