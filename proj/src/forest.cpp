#include "starsim/forest.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace starsim {

ForestColor edge_color(const MatrixOracle& oracle, Label x, Label y) {
  if (x == y) throw std::invalid_argument("edge_color: not an edge");
  const Label hi = std::max(x, y);
  const Label lo = std::min(x, y);
  // The higher endpoint proposes the color: the position of the lower
  // endpoint in its row.
  for (int i = 1; i <= oracle.sparsity(); ++i) {
    const OracleEntry e = oracle.query(hi, i);
    if (e.column == hi) break;  // padding: row exhausted
    if (e.column == lo) return i;
  }
  throw std::invalid_argument("edge_color: edge {" + std::to_string(x) + ", " +
                              std::to_string(y) + "} is absent");
}

ParentEdge parent_in_forest(const MatrixOracle& oracle, Label v, ForestColor c) {
  const OracleEntry e = oracle.query(v, c);
  if (e.column == v || e.column > v) return ParentEdge{};  // padding or larger neighbor
  return ParentEdge{e.column, e.weight};
}

std::vector<IncidentEdge> incident_edges(const MatrixOracle& oracle, Label x, ForestColor c) {
  if (c < 1 || c > oracle.sparsity()) throw std::invalid_argument("incident_edges: bad color");
  std::vector<IncidentEdge> out;
  for (int i = 1; i <= oracle.sparsity(); ++i) {
    const OracleEntry e = oracle.query(x, i);
    if (e.column == x) break;  // padding: rest of the row is empty
    if (e.column < x) {
      // The edge to a smaller neighbor is x's own proposal: in H_c iff i == c.
      if (i == c) out.push_back(IncidentEdge{e.column, e.weight, EdgeDirection::ToParent});
    } else {
      // A larger neighbor y proposes the color; verify x sits at position c
      // of y's row.
      const OracleEntry back = oracle.query(e.column, c);
      if (back.column == x)
        out.push_back(IncidentEdge{e.column, e.weight, EdgeDirection::ToChild});
    }
  }
  // Row order is arbitrary; fix the report order by neighbor label.
  std::sort(out.begin(), out.end(),
            [](const IncidentEdge& a, const IncidentEdge& b) { return a.neighbor < b.neighbor; });
  return out;
}

}  // namespace starsim
