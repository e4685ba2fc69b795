#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cylabacus/core.hpp"

namespace cylabacus {

// All partitions of n in descending lexicographic order: (n) first, (1^n) last.
std::vector<Partition> partitions_of(int n);

// All x-tuples of partitions with total size <= n, each exactly once: total
// size ascending, then size split lexicographically, then per-component
// descending-lex.
std::vector<Multipartition> enumerate_multipartitions(int x, int n);

// Partition-count convolution; equals enumerate_multipartitions(x, n).size().
uint64_t count_multipartitions(int x, int n);

struct EnumerationDomain {
  int level = 2;
  int rank = 2;
  int max_size = 4;
  int charge_min = 0;
  int charge_max = 0;
  // Box charges by default; with in_window the first entry ranges over
  // [charge_min, charge_max] and the rest stay weakly increasing within
  // first + rank.
  bool in_window = false;
};

std::vector<Charge> enumerate_charges(const EnumerationDomain& d);
uint64_t domain_cardinality(const EnumerationDomain& d);

struct VerificationReport {
  EnumerationDomain domain;
  uint64_t instances = 0;
  // One serialized JSON object per violation, including a repro command.
  std::vector<std::string> counterexamples;
  double millis = 0.0;

  bool pass() const { return counterexamples.empty(); }
};

// Definition, white-yoke and black-yoke cylindricity agree on every instance
// whose charge lies in the window (others are skipped).
VerificationReport verify_cylindric_equivalence(const EnumerationDomain& d, int jobs = 1);

// Crystal sources are exactly the totally periodic abaci.
VerificationReport verify_periodicity_source(const EnumerationDomain& d, int jobs = 1);

// Cylindricity transports through duality: an instance is cylindric iff its
// dual is totally level-periodic iff its dual is a source in the level-rank
// swapped crystal.  Charges outside the window are skipped.
VerificationReport verify_duality_transport(const EnumerationDomain& d, int jobs = 1);

struct PredicateCounts {
  int n = 0;
  uint64_t cylindric = 0;
  uint64_t flotw = 0;
  uint64_t source = 0;
};

// Per total size, over all (charge, multipartition) pairs of the domain;
// cylindric and flotw count only charges inside the window.
std::vector<PredicateCounts> count_predicates(const EnumerationDomain& d, int jobs = 1);

}  // namespace cylabacus
