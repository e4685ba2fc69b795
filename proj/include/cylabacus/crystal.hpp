#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cylabacus/core.hpp"

namespace cylabacus {

enum class BoxKind { addable, removable };

struct ResidueBox {
  Box box;
  int content = 0;
  int residue = 0;
  BoxKind kind = BoxKind::addable;

  bool operator==(const ResidueBox&) const = default;
};

// Addable and removable boxes of residue i in reading order: content
// descending, ties by component ascending.  This order plus the reduction in
// e_tilde/f_tilde is the one convention (of the four content/component
// combinations) under which sources coincide with totally periodic abaci on
// the exhaustive small domain; the calibration test pins that uniqueness.
std::vector<ResidueBox> boundary_boxes(const ChargedMultipartition& mp, int e, int i);

// Signature reduction over the reading word (addable = '+', removable = '-'):
// cancel adjacent "+-" pairs until none remain, leaving -...-+...+.  e_tilde
// removes the rightmost surviving '-', f_tilde adds the leftmost surviving
// '+'; nullopt when none survives.
std::optional<ChargedMultipartition> e_tilde(const ChargedMultipartition& mp, int e, int i);
std::optional<ChargedMultipartition> f_tilde(const ChargedMultipartition& mp, int e, int i);

// True iff e_tilde yields nothing at every residue.
bool is_source(const ChargedMultipartition& mp, int e);

// Component of mp under e_tilde/f_tilde, truncated at BFS depth; nodes are
// deduplicated by value and sorted by (size, text) so output is canonical.
struct CrystalGraph {
  struct Edge {
    int from = 0;  // indices into nodes
    int to = 0;
    int residue = 0;
  };

  Charge charge;
  int rank = 2;
  std::vector<Multipartition> nodes;
  std::vector<Edge> edges;  // from -> to under f_tilde(residue)
};

CrystalGraph crystal_component(const ChargedMultipartition& mp, int e, int depth);

std::string to_dot(const CrystalGraph& g);
void to_json(nlohmann::json& j, const CrystalGraph& g);

}  // namespace cylabacus
