#include "starsim/coloring.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace starsim {

int initial_color_width(std::size_t n) { return label_bits(n); }

int next_color_width(int width) {
  if (width < 1) throw std::invalid_argument("next_color_width: width must be positive");
  const int ceil_log = (width <= 1) ? 0 : std::bit_width(static_cast<unsigned>(width - 1));
  return ceil_log + 1;
}

int color_rounds(std::size_t n) {
  int w = initial_color_width(n);
  int iterations = 0;
  for (;;) {
    const int next = next_color_width(w);
    ++iterations;  // the confirming application counts too
    if (next == w) break;
    w = next;
  }
  return iterations + 1;  // one extra round at the stationary width
}

std::vector<int> color_width_schedule(std::size_t n) {
  const int rounds = color_rounds(n);
  std::vector<int> widths(static_cast<std::size_t>(rounds) + 1);
  widths[0] = initial_color_width(n);
  for (int j = 1; j <= rounds; ++j) widths[j] = next_color_width(widths[j - 1]);
  return widths;
}

ColorState reduce_color(ColorState own, ColorState parent) {
  if (own.width != parent.width)
    throw std::invalid_argument("reduce_color: width mismatch");
  const std::uint64_t diff = own.bits ^ parent.bits;
  if (diff == 0)
    throw std::invalid_argument("reduce_color: own and parent colors collide");
  const int k = std::countr_zero(diff);
  const std::uint64_t b = (own.bits >> k) & 1u;
  return ColorState{2u * static_cast<std::uint64_t>(k) + b, next_color_width(own.width)};
}

ColorState reduce_root_color(ColorState own) {
  // A root pretends to differ from its (absent) parent at position 0.
  return ColorState{own.bits & 1u, next_color_width(own.width)};
}

AncestorChain fetch_ancestor_chain(const MatrixOracle& oracle, Label v, ForestColor c,
                                   int max_len) {
  if (max_len < 1) throw std::invalid_argument("fetch_ancestor_chain: max_len must be positive");
  AncestorChain chain;
  chain.labels.push_back(v);
  while (chain.labels.size() < static_cast<std::size_t>(max_len)) {
    const ParentEdge pe = parent_in_forest(oracle, chain.labels.back(), c);
    if (!pe.parent) {
      chain.reached_root = true;
      break;
    }
    chain.labels.push_back(*pe.parent);
    chain.weights.push_back(pe.weight);
  }
  return chain;
}

int color_from_chain(const AncestorChain& chain, std::size_t n) {
  const int rounds = color_rounds(n);
  const std::size_t need = static_cast<std::size_t>(rounds) + 1;
  // Use at most rounds + 1 positions; a root beyond that cutoff is
  // indistinguishable from a truncated chain and treated as such.
  const std::size_t len = std::min(chain.labels.size(), need);
  const bool rooted = chain.reached_root && chain.labels.size() <= need;
  if (!rooted && len < need)
    throw std::invalid_argument("color_from_chain: chain too short to replay");

  const int w0 = initial_color_width(n);
  std::vector<ColorState> cur(len);
  for (std::size_t i = 0; i < len; ++i)
    cur[i] = ColorState{chain.labels[i], w0};

  // Round j can recolor position i only when position i+1 held a valid color
  // before the round, so without a root the usable prefix shrinks by one per
  // round; with a root every position survives via the root rule.
  for (int j = 1; j <= rounds; ++j) {
    const std::size_t usable = rooted ? len : len - static_cast<std::size_t>(j);
    std::vector<ColorState> next(usable);
    for (std::size_t i = 0; i < usable; ++i) {
      if (i + 1 < cur.size())
        next[i] = reduce_color(cur[i], cur[i + 1]);
      else
        next[i] = reduce_root_color(cur[i]);
    }
    cur = std::move(next);
  }
  return static_cast<int>(cur.front().bits);
}

int vertex_color(const MatrixOracle& oracle, Label v, ForestColor c) {
  const AncestorChain chain =
      fetch_ancestor_chain(oracle, v, c, color_rounds(oracle.dim()) + 1);
  return color_from_chain(chain, oracle.dim());
}

std::vector<ParentEdge> forest_parents(const MatrixOracle& oracle, ForestColor c) {
  std::vector<ParentEdge> parents(oracle.dim());
  for (Label v = 0; v < oracle.dim(); ++v) parents[v] = parent_in_forest(oracle, v, c);
  return parents;
}

std::vector<std::vector<ColorState>> recolor_rounds(const std::vector<ParentEdge>& parents,
                                                    std::size_t n) {
  if (parents.size() != n) throw std::invalid_argument("recolor_rounds: parent array size");
  const int rounds = color_rounds(n);
  std::vector<std::vector<ColorState>> history;
  history.reserve(static_cast<std::size_t>(rounds) + 1);

  std::vector<ColorState> cur(n);
  const int w0 = initial_color_width(n);
  for (Label v = 0; v < n; ++v) cur[v] = ColorState{v, w0};
  history.push_back(cur);

  for (int j = 1; j <= rounds; ++j) {
    std::vector<ColorState> next(n);
    for (Label v = 0; v < n; ++v) {
      if (parents[v].parent)
        next[v] = reduce_color(cur[v], cur[*parents[v].parent]);
      else
        next[v] = reduce_root_color(cur[v]);
    }
    cur = std::move(next);
    history.push_back(cur);
  }
  return history;
}

std::vector<int> forest_colors(const std::vector<ParentEdge>& parents, std::size_t n) {
  const auto history = recolor_rounds(parents, n);
  std::vector<int> colors(n);
  for (Label v = 0; v < n; ++v) colors[v] = static_cast<int>(history.back()[v].bits);
  return colors;
}

}  // namespace starsim
