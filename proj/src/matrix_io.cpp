#include "starsim/matrix_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "starsim/rng.hpp"

namespace starsim {

using nlohmann::json;

std::string matrix_to_json(const SparseHermitian& h) {
  json entries = json::array();
  for (Label x = 0; x < h.dim(); ++x)
    for (const SparseEntry& e : h.row(x))
      if (e.col > x) entries.push_back(json::array({x, e.col, e.w.real(), e.w.imag()}));
  json out;
  out["n"] = h.dim();
  out["d"] = h.sparsity();
  out["entries"] = std::move(entries);
  out["diagonal"] = h.diagonal();
  return out.dump(2) + "\n";
}

SparseHermitian matrix_from_json(const std::string& text) {
  json in;
  try {
    in = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("matrix parse error: ") + e.what());
  }
  if (!in.is_object() || !in.contains("n") || !in.contains("entries"))
    throw std::invalid_argument("matrix file must carry \"n\" and \"entries\"");
  if (!in["n"].is_number_unsigned() || in["n"].get<std::size_t>() == 0)
    throw std::invalid_argument("\"n\" must be a positive integer");
  const auto n = in["n"].get<std::size_t>();
  if (!in["entries"].is_array()) throw std::invalid_argument("\"entries\" must be an array");

  struct RawEdge {
    Label x, y;
    cplx w;
  };
  std::vector<RawEdge> edges;
  std::vector<std::size_t> degree(n, 0);
  for (const json& item : in["entries"]) {
    if (!item.is_array() || item.size() != 4 || !item[0].is_number_unsigned() ||
        !item[1].is_number_unsigned() || !item[2].is_number() || !item[3].is_number())
      throw std::invalid_argument("each entry must be [x, y, re, im]");
    const auto x = item[0].get<std::size_t>();
    const auto y = item[1].get<std::size_t>();
    if (x >= n || y >= n) throw std::invalid_argument("entry label out of range");
    if (x >= y) throw std::invalid_argument("entries must satisfy x < y");
    edges.push_back(RawEdge{static_cast<Label>(x), static_cast<Label>(y),
                            cplx{item[2].get<double>(), item[3].get<double>()}});
    ++degree[x];
    ++degree[y];
  }

  int d = 1;
  if (in.contains("d")) {
    if (!in["d"].is_number_unsigned() || in["d"].get<int>() < 1)
      throw std::invalid_argument("\"d\" must be a positive integer");
    d = in["d"].get<int>();
  } else {
    for (std::size_t deg : degree) d = std::max(d, static_cast<int>(deg));
  }

  SparseHermitian h(n, d);
  for (const RawEdge& e : edges) h.add_edge(e.x, e.y, e.w);
  if (in.contains("diagonal")) {
    if (!in["diagonal"].is_array() || in["diagonal"].size() != n)
      throw std::invalid_argument("\"diagonal\" must list one real value per vertex");
    for (std::size_t v = 0; v < n; ++v) {
      if (!in["diagonal"][v].is_number())
        throw std::invalid_argument("\"diagonal\" must list one real value per vertex");
      h.set_diagonal(static_cast<Label>(v), in["diagonal"][v].get<double>());
    }
  }
  if (auto violation = validate(h))
    throw std::invalid_argument("matrix file is not a valid instance: " + *violation);
  return h;
}

SparseHermitian load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open matrix file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return matrix_from_json(text);
}

void save_matrix(const SparseHermitian& h, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write matrix file: " + path);
  out << matrix_to_json(h);
  if (!out) throw std::runtime_error("failed writing matrix file: " + path);
}

SparseHermitian generate_instance(const GeneratorOptions& opts) {
  if (opts.n < 2) throw std::invalid_argument("generator: need dimension at least 2");
  if (opts.ring) {
    if (opts.n < 3) throw std::invalid_argument("generator: a ring needs dimension at least 3");
    SparseHermitian h(opts.n, 2);
    std::vector<std::pair<Label, Label>> edges;
    for (std::size_t v = 0; v + 1 < opts.n; ++v)
      edges.emplace_back(static_cast<Label>(v), static_cast<Label>(v + 1));
    edges.emplace_back(0, static_cast<Label>(opts.n - 1));
    std::sort(edges.begin(), edges.end());
    for (const auto& [x, y] : edges) h.add_edge(x, y, cplx{1.0, 0.0});
    return h;
  }

  if (opts.d < 1 || static_cast<std::size_t>(opts.d) >= opts.n)
    throw std::invalid_argument("generator: sparsity must lie in [1, n-1]");
  if (opts.density < 0.0 || opts.density > 1.0)
    throw std::invalid_argument("generator: density must lie in [0, 1]");
  if (opts.n > 8192)
    throw std::invalid_argument("generator: dimension above 8192 not supported");

  std::mt19937_64 gen(opts.seed);

  // All candidate pairs, shuffled; greedily keep those that respect the
  // degree cap until the target edge count is reached.
  std::vector<std::pair<Label, Label>> candidates;
  candidates.reserve(opts.n * (opts.n - 1) / 2);
  for (Label x = 0; x + 1 < opts.n; ++x)
    for (Label y = x + 1; y < opts.n; ++y) candidates.emplace_back(x, y);
  for (std::size_t i = candidates.size(); i > 1; --i)
    std::swap(candidates[i - 1], candidates[uniform_index(gen, i)]);

  const auto target = static_cast<std::size_t>(
      std::llround(opts.density * static_cast<double>(opts.n) * opts.d / 2.0));
  std::vector<int> degree(opts.n, 0);
  std::vector<std::pair<Label, Label>> chosen;
  for (const auto& [x, y] : candidates) {
    if (chosen.size() >= target) break;
    if (degree[x] >= opts.d || degree[y] >= opts.d) continue;
    chosen.emplace_back(x, y);
    ++degree[x];
    ++degree[y];
  }
  std::sort(chosen.begin(), chosen.end());

  SparseHermitian h(opts.n, opts.d);
  for (const auto& [x, y] : chosen) h.add_edge(x, y, disk_weight(gen));
  if (opts.random_diagonal)
    for (Label v = 0; v < opts.n; ++v) h.set_diagonal(v, uniform_symmetric(gen));
  return h;
}

}  // namespace starsim
