#pragma once

#include <optional>
#include <vector>

#include "starsim/oracle.hpp"

namespace starsim {

/// Edge color in [1, d]. The edges of one color form a forest; directing each
/// edge from the smaller to the larger label makes every tree an arborescence
/// whose root is its smallest-labelled vertex.
using ForestColor = int;

struct ParentEdge {
  std::optional<Label> parent;  // nullopt: v is a root (or isolated) in H_c
  cplx weight{};                // H[v][parent] when parent is set
};

enum class EdgeDirection { ToParent, ToChild };

struct IncidentEdge {
  Label neighbor;
  cplx weight;  // H[x][neighbor]
  EdgeDirection direction;
};

/// Color of the existing edge {x, y}: the position of the smaller endpoint in
/// the larger endpoint's row. Throws when the edge is absent.
ForestColor edge_color(const MatrixOracle& oracle, Label x, Label y);

/// Parent of v in forest c, with exactly one query: the c-th neighbor of v
/// when that neighbor exists and has a smaller label, else v is a root.
ParentEdge parent_in_forest(const MatrixOracle& oracle, Label v, ForestColor c);

/// All edges of forest c incident on x, in ascending neighbor order, using at
/// most 2d queries: one row scan plus one verification query per larger
/// neighbor (the edge to a larger neighbor y belongs to H_c iff x sits at
/// position c of y's row).
std::vector<IncidentEdge> incident_edges(const MatrixOracle& oracle, Label x, ForestColor c);

}  // namespace starsim
