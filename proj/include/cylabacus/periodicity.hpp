#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cylabacus/abacus.hpp"

namespace cylabacus {

// Raised when an internal iteration cap trips; turns a latent non-termination
// bug into an error instead of a hang.
struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// e beads in consecutive columns walked down from the global maximum:
// beta_1 = max bead, beta_i = beta_{i-1} - 1, j_i the lowest row with a bead
// in column beta_i, and j_1 >= j_2 >= ... >= j_e.
struct Period {
  std::vector<std::pair<int, int>> beads;  // (beta, j)

  bool operator==(const Period&) const = default;
};

// The unique greedy period, or nullopt when a column is empty or the row
// sequence would have to increase.
std::optional<Period> first_period(const Abacus& a, int e);

// Bead-set difference; p must be first_period(a) (throws otherwise).
Abacus strip_period(const Abacus& a, const Period& p);

// First `count` periods by iterated stripping; shorter when extraction fails.
std::vector<Period> periods(const Abacus& a, int e, int count);

// Strip periods until the associated multipartition is empty (true; an empty
// multipartition has no removable box, hence stays periodic forever) or no
// period exists (false).
bool is_totally_periodic(const Abacus& a, int e);

}  // namespace cylabacus
