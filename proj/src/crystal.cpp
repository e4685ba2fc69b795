#include "cylabacus/crystal.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

#include "cylabacus/notation.hpp"

namespace cylabacus {

namespace {

void require_rank(int e) {
  if (e < 2) throw std::invalid_argument("rank must be >= 2");
}

// Indices of the good boxes after cancelling "+-" pairs: the rightmost
// surviving removable and the leftmost surviving addable, -1 when absent.
struct GoodBoxes {
  int removable = -1;
  int addable = -1;
};

GoodBoxes reduce(const std::vector<ResidueBox>& word) {
  GoodBoxes good;
  std::vector<int> open;  // indices of not-yet-cancelled addables
  for (int i = 0; i < (int)word.size(); ++i) {
    if (word[i].kind == BoxKind::addable) {
      open.push_back(i);
    } else if (!open.empty()) {
      open.pop_back();
    } else {
      good.removable = i;  // unmatched removables precede all survivors
    }
  }
  if (!open.empty()) good.addable = open.front();
  return good;
}

ChargedMultipartition with_edit(const ChargedMultipartition& mp, const Box& box, bool add) {
  Multipartition next = mp.components;
  Partition& p = next[box.component - 1];
  p = add ? p.with_added_cell(box.row) : p.with_removed_cell(box.row);
  return {std::move(next), mp.charge};
}

}  // namespace

std::vector<ResidueBox> boundary_boxes(const ChargedMultipartition& mp, int e, int i) {
  require_rank(e);
  if (i < 0 || i >= e) throw std::invalid_argument("residue out of range");
  std::vector<ResidueBox> word;
  for (int j = 1; j <= mp.level(); ++j) {
    const Partition& p = mp.component(j);
    for (int a = 1; a <= p.length(); ++a) {
      if (p.part(a) > p.part(a + 1)) {
        Box box{a, p.part(a), j};
        int c = content(box, mp.charge);
        if (mod_euclid(c, e) == i) word.push_back({box, c, i, BoxKind::removable});
      }
    }
    for (int a = 1; a <= p.length() + 1; ++a) {
      if (a == 1 || p.part(a - 1) > p.part(a)) {
        Box box{a, p.part(a) + 1, j};
        int c = content(box, mp.charge);
        if (mod_euclid(c, e) == i) word.push_back({box, c, i, BoxKind::addable});
      }
    }
  }
  std::stable_sort(word.begin(), word.end(), [](const ResidueBox& l, const ResidueBox& r) {
    if (l.content != r.content) return l.content > r.content;
    return l.box.component < r.box.component;
  });
  return word;
}

std::optional<ChargedMultipartition> e_tilde(const ChargedMultipartition& mp, int e, int i) {
  std::vector<ResidueBox> word = boundary_boxes(mp, e, i);
  GoodBoxes good = reduce(word);
  if (good.removable < 0) return std::nullopt;
  return with_edit(mp, word[good.removable].box, false);
}

std::optional<ChargedMultipartition> f_tilde(const ChargedMultipartition& mp, int e, int i) {
  std::vector<ResidueBox> word = boundary_boxes(mp, e, i);
  GoodBoxes good = reduce(word);
  if (good.addable < 0) return std::nullopt;
  return with_edit(mp, word[good.addable].box, true);
}

bool is_source(const ChargedMultipartition& mp, int e) {
  require_rank(e);
  for (int i = 0; i < e; ++i) {
    if (e_tilde(mp, e, i)) return false;
  }
  return true;
}

CrystalGraph crystal_component(const ChargedMultipartition& mp, int e, int depth) {
  require_rank(e);
  if (depth < 0) throw std::invalid_argument("depth must be >= 0");
  std::map<std::string, Multipartition> found;
  std::deque<std::pair<Multipartition, int>> queue;
  found.emplace(format_multipartition(mp.components), mp.components);
  queue.emplace_back(mp.components, 0);
  while (!queue.empty()) {
    auto [cur, dist] = queue.front();
    queue.pop_front();
    if (dist == depth) continue;
    ChargedMultipartition node{cur, mp.charge};
    for (int i = 0; i < e; ++i) {
      for (auto& next : {e_tilde(node, e, i), f_tilde(node, e, i)}) {
        if (!next) continue;
        auto [it, fresh] = found.emplace(format_multipartition(next->components), next->components);
        if (fresh) queue.emplace_back(it->second, dist + 1);
      }
    }
  }

  CrystalGraph g;
  g.charge = mp.charge;
  g.rank = e;
  std::vector<std::pair<std::string, const Multipartition*>> keyed;
  for (const auto& [key, value] : found) keyed.emplace_back(key, &value);
  std::sort(keyed.begin(), keyed.end(), [](const auto& l, const auto& r) {
    int ls = total_size(*l.second), rs = total_size(*r.second);
    return ls != rs ? ls < rs : l.first < r.first;
  });
  std::map<std::string, int> index;
  for (const auto& [key, value] : keyed) {
    index.emplace(key, (int)g.nodes.size());
    g.nodes.push_back(*value);
  }
  for (int v = 0; v < (int)g.nodes.size(); ++v) {
    ChargedMultipartition node{g.nodes[v], mp.charge};
    for (int i = 0; i < e; ++i) {
      auto next = f_tilde(node, e, i);
      if (!next) continue;
      auto it = index.find(format_multipartition(next->components));
      if (it != index.end()) g.edges.push_back({v, it->second, i});
    }
  }
  return g;
}

std::string to_dot(const CrystalGraph& g) {
  std::ostringstream out;
  out << "digraph crystal {\n  rankdir=TB;\n";
  for (int v = 0; v < (int)g.nodes.size(); ++v) {
    out << "  n" << v << " [label=\"" << format_multipartition(g.nodes[v]) << "\"];\n";
  }
  for (const auto& edge : g.edges) {
    out << "  n" << edge.from << " -> n" << edge.to << " [label=\"" << edge.residue << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

void to_json(nlohmann::json& j, const CrystalGraph& g) {
  j = nlohmann::json::object();
  j["charge"] = g.charge.entries();
  j["rank"] = g.rank;
  j["nodes"] = nlohmann::json::array();
  for (const Multipartition& node : g.nodes) j["nodes"].push_back(format_multipartition(node));
  j["edges"] = nlohmann::json::array();
  for (const auto& edge : g.edges) j["edges"].push_back({edge.from, edge.to, edge.residue});
}

}  // namespace cylabacus
