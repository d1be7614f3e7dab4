#include "starsim/galaxy.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <stdexcept>

namespace starsim {

int term_count(int d) { return 6 * d + 1; }

TermId term_from_index(int index, int d) {
  if (index < 0 || index >= term_count(d)) throw std::invalid_argument("term index out of range");
  if (index == 6 * d) return TermId::diagonal();
  return TermId::galaxy(index / 6 + 1, index % 6);
}

int term_to_index(TermId id, int d) {
  if (id.is_diagonal()) return 6 * d;
  if (id.c < 1 || id.c > d || id.t < 0 || id.t > 5)
    throw std::invalid_argument("bad galaxy address");
  return (id.c - 1) * 6 + id.t;
}

std::uint64_t unit_query_cost(std::size_t n, int d) {
  return static_cast<std::uint64_t>(color_rounds(n)) + 2u * static_cast<std::uint64_t>(d) + 1u;
}

namespace {

// Drop the front link of a chain: the remainder describes the parent.
AncestorChain chain_tail(const AncestorChain& chain) {
  AncestorChain out;
  out.labels.assign(chain.labels.begin() + 1, chain.labels.end());
  out.weights.assign(chain.weights.empty() ? chain.weights.end() : chain.weights.begin() + 1,
                     chain.weights.end());
  out.reached_root = chain.reached_root;
  return out;
}

// Prepend a child in front of a chain, keeping at most max_len labels. When
// the truncation cuts off the root, the chain degrades to a plain prefix.
AncestorChain chain_with_child(Label child, cplx weight_to_parent, const AncestorChain& chain,
                               std::size_t max_len) {
  AncestorChain out;
  out.labels.reserve(chain.labels.size() + 1);
  out.labels.push_back(child);
  out.labels.insert(out.labels.end(), chain.labels.begin(), chain.labels.end());
  out.weights.reserve(chain.weights.size() + 1);
  out.weights.push_back(weight_to_parent);
  out.weights.insert(out.weights.end(), chain.weights.begin(), chain.weights.end());
  out.reached_root = chain.reached_root;
  if (out.labels.size() > max_len) {
    out.labels.resize(max_len);
    out.weights.resize(max_len - 1);
    out.reached_root = false;
  }
  return out;
}

// The star centered on the front vertex of `chain`: scan its forest
// neighborhood and keep the children whose final color is t. Child colors
// replay from the center's chain, so no further ancestor queries are needed.
StarInfo star_around_center(const MatrixOracle& oracle, const AncestorChain& chain, TermId g) {
  const std::size_t n = oracle.dim();
  const std::size_t chain_cap = static_cast<std::size_t>(color_rounds(n)) + 1;
  const Label center = chain.labels.front();
  StarInfo star;
  star.center = center;
  for (const IncidentEdge& e : incident_edges(oracle, center, g.c)) {
    if (e.direction != EdgeDirection::ToChild) continue;
    // The child's weight toward its parent is the conjugate of the row entry
    // just read from the center.
    const cplx child_weight = std::conj(e.weight);
    const AncestorChain cc = chain_with_child(e.neighbor, child_weight, chain, chain_cap);
    if (color_from_chain(cc, n) == g.t) {
      star.leaves.push_back(e.neighbor);
      star.weights.push_back(child_weight);
    }
  }
  double sq = 0.0;
  for (const cplx& w : star.weights) sq += std::norm(w);
  star.s = std::sqrt(sq);
  return star;
}

}  // namespace

StarInfo star_info(const MatrixOracle& oracle, Label x, TermId g) {
  if (g.is_diagonal()) throw std::invalid_argument("star_info: diagonal term has no stars");
  if (g.c < 1 || g.c > oracle.sparsity() || g.t < 0 || g.t > 5)
    throw std::invalid_argument("star_info: bad galaxy address");
  const std::size_t n = oracle.dim();
  // One link beyond the color budget: if x turns out to be a leaf, the tail
  // of this chain is already the center's chain.
  const AncestorChain chain = fetch_ancestor_chain(oracle, x, g.c, color_rounds(n) + 2);
  if (color_from_chain(chain, n) == g.t) {
    if (chain.labels.size() == 1) {
      // A root carrying the galaxy's own color: isolated, nothing points here.
      StarInfo star;
      star.center = x;
      return star;
    }
    return star_around_center(oracle, chain_tail(chain), g);
  }
  return star_around_center(oracle, chain, g);
}

void apply_star_rotation(const StarInfo& star, double cos_a, double sin_a, StateVector& state) {
  if (star.empty()) return;
  // Amplitudes along |center> and |phi> = (1/s) sum_i w_i |leaf_i> rotate by
  // the 2x2 block [[cos, -i sin], [-i sin, cos]]; the orthogonal complement
  // of the leaf span is untouched.
  cplx beta{};
  for (std::size_t i = 0; i < star.leaves.size(); ++i)
    beta += std::conj(star.weights[i]) * state[star.leaves[i]];
  beta /= star.s;
  const cplx a = state[star.center];
  const cplx minus_i_sin{0.0, -sin_a};
  const cplx a_next = cos_a * a + minus_i_sin * beta;
  const cplx b_next = minus_i_sin * a + cos_a * beta;
  state[star.center] = a_next;
  const cplx delta = (b_next - beta) / star.s;
  for (std::size_t i = 0; i < star.leaves.size(); ++i)
    state[star.leaves[i]] += delta * star.weights[i];
}

void apply_star_exponential(const StarInfo& star, double t, StateVector& state) {
  if (star.empty()) return;
  const double angle = star.s * t;
  apply_star_rotation(star, std::cos(angle), std::sin(angle), state);
}

GalaxyDecomposition GalaxyDecomposition::build(const MatrixOracle& oracle) {
  GalaxyDecomposition dec;
  dec.n_ = oracle.dim();
  dec.d_ = oracle.sparsity();
  dec.parents_.resize(static_cast<std::size_t>(dec.d_));
  dec.colors_.resize(static_cast<std::size_t>(dec.d_));
  dec.stars_.resize(static_cast<std::size_t>(6 * dec.d_));

  for (int c = 1; c <= dec.d_; ++c) {
    auto& parents = dec.parents_[static_cast<std::size_t>(c - 1)];
    parents = forest_parents(oracle, c);
    auto& colors = dec.colors_[static_cast<std::size_t>(c - 1)];
    colors = forest_colors(parents, dec.n_);

    // Invert the parent map: vertex v with a parent is a leaf of galaxy
    // (c, color(v)), attached to the star centered on its parent. Scanning v
    // in ascending order keeps each star's leaves sorted.
    std::array<std::map<Label, std::size_t>, 6> center_index;
    for (Label v = 0; v < dec.n_; ++v) {
      if (!parents[v].parent) continue;
      const int t = colors[v];
      auto& stars = dec.stars_[static_cast<std::size_t>((c - 1) * 6 + t)];
      auto [it, inserted] = center_index[static_cast<std::size_t>(t)].try_emplace(
          *parents[v].parent, stars.size());
      if (inserted) {
        StarInfo star;
        star.center = *parents[v].parent;
        stars.push_back(std::move(star));
      }
      StarInfo& star = stars[it->second];
      star.leaves.push_back(v);
      star.weights.push_back(parents[v].weight);
    }
    // Deterministic star order within each galaxy, and the combined weights.
    for (int t = 0; t < 6; ++t) {
      auto& stars = dec.stars_[static_cast<std::size_t>((c - 1) * 6 + t)];
      std::sort(stars.begin(), stars.end(),
                [](const StarInfo& a, const StarInfo& b) { return a.center < b.center; });
      for (StarInfo& star : stars) {
        double sq = 0.0;
        for (const cplx& w : star.weights) sq += std::norm(w);
        star.s = std::sqrt(sq);
      }
    }
  }

  dec.diag_.resize(dec.n_);
  for (Label v = 0; v < dec.n_; ++v) dec.diag_[v] = oracle.query_diagonal(v);
  return dec;
}

const std::vector<ParentEdge>& GalaxyDecomposition::parents(ForestColor c) const {
  if (c < 1 || c > d_) throw std::invalid_argument("parents: color out of range");
  return parents_[static_cast<std::size_t>(c - 1)];
}

const std::vector<int>& GalaxyDecomposition::colors(ForestColor c) const {
  if (c < 1 || c > d_) throw std::invalid_argument("colors: color out of range");
  return colors_[static_cast<std::size_t>(c - 1)];
}

const std::vector<StarInfo>& GalaxyDecomposition::stars(TermId galaxy) const {
  if (galaxy.is_diagonal()) throw std::invalid_argument("stars: diagonal term has no stars");
  return stars_[static_cast<std::size_t>(term_to_index(galaxy, d_))];
}

void GalaxyDecomposition::apply_term_exponential(const MatrixOracle& oracle, TermId term,
                                                 double t, StateVector& state) const {
  if (state.size() != n_) throw std::invalid_argument("apply_term_exponential: state size");
  if (term.is_diagonal()) {
    oracle.charge_template(2);
    for (Label v = 0; v < n_; ++v)
      if (diag_[v] != 0.0) state[v] *= std::polar(1.0, -diag_[v] * t);
    return;
  }
  oracle.charge_template(2 * unit_query_cost(n_, d_));
  for (const StarInfo& star : stars(term)) apply_star_exponential(star, t, state);
}

SparseHermitian GalaxyDecomposition::term_matrix(TermId term) const {
  SparseHermitian out(n_, d_);
  if (term.is_diagonal()) {
    for (Label v = 0; v < n_; ++v) out.set_diagonal(v, diag_[v]);
    return out;
  }
  for (const StarInfo& star : stars(term))
    for (std::size_t i = 0; i < star.leaves.size(); ++i)
      out.add_edge(star.leaves[i], star.center, star.weights[i]);
  return out;
}

}  // namespace starsim
