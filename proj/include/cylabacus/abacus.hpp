#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "cylabacus/core.hpp"

namespace cylabacus {

// One row of beads on Z: every position <= tail is a bead, plus finitely many
// exceptions above the tail.  Normal form keeps `tail` maximal, so the
// exception list is strictly descending with no entry <= tail + 1.
struct AbacusRow {
  int tail = 0;
  std::vector<int> exceptions;

  bool operator==(const AbacusRow&) const = default;
};

// Bead set A of Z x {1..x}: left-cofinite and right-finite in every row.
// Rows are numbered from 1 at the bottom.
class Abacus {
 public:
  Abacus() = default;
  explicit Abacus(std::vector<AbacusRow> rows);  // normalizes each row

  int level() const { return (int)rows_.size(); }
  const AbacusRow& row(int j) const;
  const std::vector<AbacusRow>& rows() const { return rows_; }

  bool contains(int beta, int j) const;
  int row_charge(int j) const;  // tail + number of exceptions
  Charge charge() const;
  int row_max_bead(int j) const;
  int max_bead() const;  // over all rows
  int min_tail() const;

  // Same abacus without the bead (beta, j); the bead must exist.
  Abacus without(int beta, int j) const;

  bool operator==(const Abacus&) const = default;

 private:
  std::vector<AbacusRow> rows_;
};

// Bead (beta, j) <-> part value beta - s_j + k - 1 at 1-based index k; the
// charge of a row is where its rightmost bead lands after pushing all beads
// left.  Zero parts are dropped on the way back.
Abacus abacus_from(const ChargedMultipartition& mp);
ChargedMultipartition multipartition_of(const Abacus& a);

// x+1 rows: rows 1..x are A, and (beta, x+1) is a bead iff (beta - e, 1) is.
struct ExtendedAbacus {
  Abacus rows;
  int rank = 2;
};
ExtendedAbacus extend(const Abacus& a, int e);

// Membership in the doubly infinite stack of copies of A where the copy
// holding rows kx+1..(k+1)x is shifted k*e steps to the right:
// lookup(beta, r) with r = j + kx equals contains(beta - k*e, j).
bool stacked_lookup(const Abacus& a, int e, int beta, int r);

enum class Orientation { horizontal, vertical };

struct RenderOptions {
  int lo = 0;
  int hi = 0;
  Orientation orientation = Orientation::horizontal;
  bool ascii = false;
};

// Horizontal: one line per row, top row printed first, bead = filled marker,
// divider between positions 0 and 1.  Vertical: one line per position (top =
// hi), columns 1..x left to right, with bead/gap markers swapped.
std::string render(const Abacus& a, const RenderOptions& opt);

// {"rows": x, "tail": [...], "exceptions": [[desc]...]}
void to_json(nlohmann::json& j, const Abacus& a);
void from_json(const nlohmann::json& j, Abacus& a);

}  // namespace cylabacus
