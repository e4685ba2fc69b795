#pragma once

#include <set>
#include <stdexcept>
#include <vector>

namespace cylabacus {

// Weakly decreasing list of positive integers.  part(k) is 1-based and reads 0
// past the end, so quantifiers over "all rows" can be evaluated literally.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  int part(int k) const {
    return (k >= 1 && k <= (int)parts_.size()) ? parts_[k - 1] : 0;
  }
  int length() const { return (int)parts_.size(); }
  int size() const;  // sum of parts
  bool empty() const { return parts_.empty(); }
  const std::vector<int>& parts() const { return parts_; }

  // Cell edits used by the crystal operators.  `a` is the 1-based row of an
  // addable (resp. removable) cell; preconditions are checked.
  Partition with_added_cell(int a) const;
  Partition with_removed_cell(int a) const;

  bool operator==(const Partition&) const = default;
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

 private:
  std::vector<int> parts_;
};

using Multipartition = std::vector<Partition>;

int total_size(const Multipartition& mp);

// Integer vector s = (s_1, ..., s_x); entry(j) is 1-based.
class Charge {
 public:
  Charge() = default;
  explicit Charge(std::vector<int> entries) : entries_(std::move(entries)) {}

  int entry(int j) const;
  int size() const { return (int)entries_.size(); }
  int sum() const;
  const std::vector<int>& entries() const { return entries_; }

  bool operator==(const Charge&) const = default;

 private:
  std::vector<int> entries_;
};

struct ChargedMultipartition {
  Multipartition components;
  Charge charge;

  ChargedMultipartition() = default;
  ChargedMultipartition(Multipartition mp, Charge s);

  int level() const { return (int)components.size(); }
  const Partition& component(int j) const { return components[j - 1]; }

  bool operator==(const ChargedMultipartition&) const = default;
};

// Cell (row a, column b) of component j; all 1-based.
struct Box {
  int row = 1;
  int col = 1;
  int component = 1;

  bool operator==(const Box&) const = default;
};

// Nonnegative representative of v mod m.
int mod_euclid(int v, int m);

// b - a + s_j for a box (a, b, j).
int content(const Box& box, const Charge& s);
int residue(const Box& box, const Charge& s, int e);

// Residues mod e of the cells (k, alpha, j) over all parts equal to alpha.
std::set<int> residue_set(const ChargedMultipartition& mp, int e, int alpha);

// True iff s_1 <= s_2 <= ... <= s_x <= s_1 + e.  Requires length >= 2, e >= 2.
bool in_window_D(const Charge& s, int e);

}  // namespace cylabacus
