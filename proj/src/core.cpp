#include "cylabacus/core.hpp"

#include <numeric>
#include <string>

namespace cylabacus {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i - 1] < parts_[i])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::with_added_cell(int a) const {
  if (a < 1 || a > length() + 1 || (a >= 2 && parts_[a - 2] <= part(a)))
    throw std::invalid_argument("cell not addable");
  std::vector<int> p = parts_;
  if (a == length() + 1)
    p.push_back(1);
  else
    ++p[a - 1];
  return Partition(std::move(p));
}

Partition Partition::with_removed_cell(int a) const {
  if (a < 1 || a > length() || part(a) <= part(a + 1))
    throw std::invalid_argument("cell not removable");
  std::vector<int> p = parts_;
  if (--p[a - 1] == 0) p.pop_back();
  return Partition(std::move(p));
}

int total_size(const Multipartition& mp) {
  int n = 0;
  for (const auto& p : mp) n += p.size();
  return n;
}

int Charge::entry(int j) const {
  if (j < 1 || j > size())
    throw std::invalid_argument("charge entry index out of range");
  return entries_[j - 1];
}

int Charge::sum() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0);
}

ChargedMultipartition::ChargedMultipartition(Multipartition mp, Charge s)
    : components(std::move(mp)), charge(std::move(s)) {
  if ((int)components.size() != charge.size())
    throw std::invalid_argument("component count differs from charge length");
  if (components.empty())
    throw std::invalid_argument("need at least one component");
}

int mod_euclid(int v, int m) {
  int r = v % m;
  return r < 0 ? r + m : r;
}

int content(const Box& box, const Charge& s) {
  return box.col - box.row + s.entry(box.component);
}

int residue(const Box& box, const Charge& s, int e) {
  if (e < 2) throw std::invalid_argument("rank must be at least 2");
  return mod_euclid(content(box, s), e);
}

std::set<int> residue_set(const ChargedMultipartition& mp, int e, int alpha) {
  if (e < 2) throw std::invalid_argument("rank must be at least 2");
  if (alpha < 1) throw std::invalid_argument("part value must be positive");
  std::set<int> out;
  for (int j = 1; j <= mp.level(); ++j) {
    const Partition& p = mp.component(j);
    for (int k = 1; k <= p.length(); ++k)
      if (p.part(k) == alpha)
        out.insert(mod_euclid(alpha - k + mp.charge.entry(j), e));
  }
  return out;
}

bool in_window_D(const Charge& s, int e) {
  if (s.size() < 2) throw std::invalid_argument("charge must have length >= 2");
  if (e < 2) throw std::invalid_argument("rank must be at least 2");
  for (int j = 1; j < s.size(); ++j)
    if (s.entry(j) > s.entry(j + 1)) return false;
  return s.entry(s.size()) <= s.entry(1) + e;
}

}  // namespace cylabacus
