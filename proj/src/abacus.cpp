#include "cylabacus/abacus.hpp"

#include <algorithm>
#include <functional>

#include "json.hpp"

namespace cylabacus {
namespace {

AbacusRow normalized(AbacusRow r) {
  std::sort(r.exceptions.begin(), r.exceptions.end(), std::greater<int>());
  r.exceptions.erase(std::unique(r.exceptions.begin(), r.exceptions.end()),
                     r.exceptions.end());
  while (!r.exceptions.empty() && r.exceptions.back() <= r.tail)
    r.exceptions.pop_back();
  while (!r.exceptions.empty() && r.exceptions.back() == r.tail + 1) {
    ++r.tail;
    r.exceptions.pop_back();
  }
  return r;
}

}  // namespace

Abacus::Abacus(std::vector<AbacusRow> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw std::invalid_argument("abacus needs at least one row");
  for (auto& r : rows_) r = normalized(std::move(r));
}

const AbacusRow& Abacus::row(int j) const {
  if (j < 1 || j > level()) throw std::invalid_argument("row index out of range");
  return rows_[j - 1];
}

bool Abacus::contains(int beta, int j) const {
  const AbacusRow& r = row(j);
  if (beta <= r.tail) return true;
  return std::binary_search(r.exceptions.begin(), r.exceptions.end(), beta,
                            std::greater<int>());
}

int Abacus::row_charge(int j) const {
  const AbacusRow& r = row(j);
  return r.tail + (int)r.exceptions.size();
}

Charge Abacus::charge() const {
  std::vector<int> s(level());
  for (int j = 1; j <= level(); ++j) s[j - 1] = row_charge(j);
  return Charge(std::move(s));
}

int Abacus::row_max_bead(int j) const {
  const AbacusRow& r = row(j);
  return r.exceptions.empty() ? r.tail : r.exceptions.front();
}

int Abacus::max_bead() const {
  int m = row_max_bead(1);
  for (int j = 2; j <= level(); ++j) m = std::max(m, row_max_bead(j));
  return m;
}

int Abacus::min_tail() const {
  int m = rows_[0].tail;
  for (const auto& r : rows_) m = std::min(m, r.tail);
  return m;
}

Abacus Abacus::without(int beta, int j) const {
  if (!contains(beta, j)) throw std::invalid_argument("no bead at that position");
  std::vector<AbacusRow> rows = rows_;
  AbacusRow& r = rows[j - 1];
  if (beta > r.tail) {
    r.exceptions.erase(
        std::find(r.exceptions.begin(), r.exceptions.end(), beta));
  } else {
    for (int b = beta + 1; b <= r.tail; ++b) r.exceptions.push_back(b);
    r.tail = beta - 1;
  }
  return Abacus(std::move(rows));
}

Abacus abacus_from(const ChargedMultipartition& mp) {
  std::vector<AbacusRow> rows(mp.level());
  for (int j = 1; j <= mp.level(); ++j) {
    const Partition& p = mp.component(j);
    const int s = mp.charge.entry(j);
    AbacusRow& r = rows[j - 1];
    r.tail = s - p.length();
    for (int k = 1; k <= p.length(); ++k)
      r.exceptions.push_back(p.part(k) + s - k + 1);
  }
  return Abacus(std::move(rows));
}

ChargedMultipartition multipartition_of(const Abacus& a) {
  Multipartition mp(a.level());
  for (int j = 1; j <= a.level(); ++j) {
    const AbacusRow& r = a.row(j);
    const int s = a.row_charge(j);
    // In normal form every exception sits strictly above the pushed-left
    // configuration, so exactly the exceptions yield the nonzero parts.
    std::vector<int> parts;
    for (int k = 1; k <= (int)r.exceptions.size(); ++k)
      parts.push_back(r.exceptions[k - 1] - s + k - 1);
    mp[j - 1] = Partition(std::move(parts));
  }
  return ChargedMultipartition(std::move(mp), a.charge());
}

ExtendedAbacus extend(const Abacus& a, int e) {
  if (e < 2) throw std::invalid_argument("rank must be at least 2");
  std::vector<AbacusRow> rows = a.rows();
  AbacusRow top = a.row(1);
  top.tail += e;
  for (int& b : top.exceptions) b += e;
  rows.push_back(std::move(top));
  return ExtendedAbacus{Abacus(std::move(rows)), e};
}

bool stacked_lookup(const Abacus& a, int e, int beta, int r) {
  const int x = a.level();
  const int j = 1 + mod_euclid(r - 1, x);
  const int k = (r - j) / x;
  return a.contains(beta - k * e, j);
}

std::string render(const Abacus& a, const RenderOptions& opt) {
  if (opt.lo > opt.hi) throw std::invalid_argument("empty render window");
  const char* bead = opt.ascii ? "#" : "●";
  const char* gap = opt.ascii ? "." : "○";
  std::string out;
  if (opt.orientation == Orientation::horizontal) {
    for (int j = a.level(); j >= 1; --j) {
      for (int beta = opt.lo; beta <= opt.hi; ++beta) {
        if (beta > opt.lo) out += (beta == 1) ? '|' : ' ';
        out += a.contains(beta, j) ? bead : gap;
      }
      out += '\n';
    }
  } else {
    const int width = 2 * a.level() - 1;
    for (int beta = opt.hi; beta >= opt.lo; --beta) {
      for (int j = 1; j <= a.level(); ++j) {
        if (j > 1) out += ' ';
        out += a.contains(beta, j) ? gap : bead;  // colors swapped
      }
      out += '\n';
      if (beta == 1 && opt.lo <= 0) out += std::string(width, '-') + '\n';
    }
  }
  return out;
}

void to_json(nlohmann::json& j, const Abacus& a) {
  std::vector<int> tails;
  std::vector<std::vector<int>> exceptions;
  for (const auto& r : a.rows()) {
    tails.push_back(r.tail);
    exceptions.push_back(r.exceptions);
  }
  j = nlohmann::json{
      {"rows", a.level()}, {"tail", tails}, {"exceptions", exceptions}};
}

void from_json(const nlohmann::json& j, Abacus& a) {
  const int x = j.at("rows").get<int>();
  const auto tails = j.at("tail").get<std::vector<int>>();
  const auto exceptions = j.at("exceptions").get<std::vector<std::vector<int>>>();
  if ((int)tails.size() != x || (int)exceptions.size() != x)
    throw std::invalid_argument("row count mismatch in abacus JSON");
  std::vector<AbacusRow> rows(x);
  for (int i = 0; i < x; ++i) rows[i] = AbacusRow{tails[i], exceptions[i]};
  a = Abacus(std::move(rows));
}

}  // namespace cylabacus
