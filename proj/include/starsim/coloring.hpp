#pragma once

#include <cstdint>
#include <vector>

#include "starsim/forest.hpp"

namespace starsim {

/// A vertex color mid-reduction: `width` bits holding the value `bits`.
struct ColorState {
  std::uint64_t bits;
  int width;
};

/// Width of the starting colors (the vertex labels themselves).
int initial_color_width(std::size_t n);

/// Width after one reduction round: ceil(log2(width)) + 1. Stationary at 3
/// (and below).
int next_color_width(int width);

/// Number of reduction rounds: iterate the width recurrence until it stops
/// changing (counting the confirming step), plus one final round. Bounded by
/// log_star(n) + 2 in practice.
int color_rounds(std::size_t n);

/// Widths around each round: schedule[0] is the initial width, schedule[j]
/// the width after round j, for j in [1, color_rounds(n)].
std::vector<int> color_width_schedule(std::size_t n);

/// One reduction step for a vertex with a parent: k = lowest bit position at
/// which own and parent differ, b = that bit of own; the new color is 2k + b
/// at the next width. Both inputs must share a width and differ, else throws.
ColorState reduce_color(ColorState own, ColorState parent);

/// Reduction step for a root: k = 0 and b = the lowest bit of own.
ColorState reduce_root_color(ColorState own);

/// A prefix of the ancestor line of a vertex in one forest. labels[0] is the
/// vertex itself, labels[i+1] the parent of labels[i], and weights[i] =
/// H[labels[i]][labels[i+1]]. reached_root says labels.back() is known to be
/// a root of its tree.
struct AncestorChain {
  std::vector<Label> labels;
  std::vector<cplx> weights;
  bool reached_root = false;
};

/// Fetch up to max_len labels of v's ancestor line in forest c, stopping
/// early at a root; at most max_len - 1 queries.
AncestorChain fetch_ancestor_chain(const MatrixOracle& oracle, Label v, ForestColor c,
                                   int max_len);

/// Final color of chain.labels[0], replayed locally. Each round consumes one
/// chain position, so an unrooted chain must hold at least
/// color_rounds(n) + 1 labels.
int color_from_chain(const AncestorChain& chain, std::size_t n);

/// Final color of v in forest c, in [0, 5], using at most color_rounds(n)
/// queries.
int vertex_color(const MatrixOracle& oracle, Label v, ForestColor c);

/// Parent links of every vertex in forest c: one query per vertex.
std::vector<ParentEdge> forest_parents(const MatrixOracle& oracle, ForestColor c);

/// Colors of every vertex after each round, computed globally from a parent
/// array. result[0] holds the initial label colors, result[j] the colors
/// after round j; result.back() is the final coloring.
std::vector<std::vector<ColorState>> recolor_rounds(const std::vector<ParentEdge>& parents,
                                                    std::size_t n);

/// Final colors of every vertex of a forest, from its parent array.
std::vector<int> forest_colors(const std::vector<ParentEdge>& parents, std::size_t n);

}  // namespace starsim
