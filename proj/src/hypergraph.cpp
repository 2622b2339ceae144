#include "hampow/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hampow {

std::size_t Bitset::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool Bitset::intersects(const Bitset& o) const {
  std::size_t k = std::min(words_.size(), o.words_.size());
  for (std::size_t i = 0; i < k; ++i)
    if (words_[i] & o.words_[i]) return true;
  return false;
}

bool Bitset::is_subset_of(const Bitset& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t other = i < o.words_.size() ? o.words_[i] : 0;
    if (words_[i] & ~other) return false;
  }
  return true;
}

Bitset& Bitset::operator|=(const Bitset& o) {
  for (std::size_t i = 0; i < words_.size() && i < o.words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

Bitset& Bitset::operator&=(const Bitset& o) {
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] &= i < o.words_.size() ? o.words_[i] : 0;
  return *this;
}

std::vector<std::size_t> Bitset::set_bits() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

namespace {

void validate_edge(const Edge& e, int n, int r, const std::string& context) {
  if (static_cast<int>(e.size()) != r)
    throw std::invalid_argument(context + ": edge has " + std::to_string(e.size()) +
                                " vertices, expected " + std::to_string(r));
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0 || e[i] >= n)
      throw std::invalid_argument(context + ": vertex " + std::to_string(e[i]) +
                                  " out of range [0," + std::to_string(n) + ")");
    if (i > 0 && e[i] == e[i - 1])
      throw std::invalid_argument(context + ": repeated vertex " + std::to_string(e[i]));
  }
}

}  // namespace

Hypergraph::Hypergraph(int n, int r, std::vector<Edge> edges) : n_(n), r_(r) {
  if (r < 2) throw std::invalid_argument("uniformity r must be >= 2");
  if (n < r) throw std::invalid_argument("need n >= r");
  for (auto& e : edges) {
    std::sort(e.begin(), e.end());
    validate_edge(e, n, r, "edge");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  edge_masks_.reserve(edges_.size());
  incidence_.assign(n_, {});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    Bitset m(static_cast<std::size_t>(n_));
    for (int v : edges_[i]) {
      m.set(static_cast<std::size_t>(v));
      incidence_[v].push_back(i);
    }
    edge_masks_.push_back(std::move(m));
  }
}

bool Hypergraph::has_edge(std::span<const int> sorted_vertices) const {
  return edge_index(sorted_vertices) != npos;
}

std::size_t Hypergraph::edge_index(std::span<const int> sorted_vertices) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), sorted_vertices,
                             [](const Edge& e, std::span<const int> key) {
                               return std::lexicographical_compare(e.begin(), e.end(), key.begin(),
                                                                   key.end());
                             });
  if (it == edges_.end() || !std::equal(it->begin(), it->end(), sorted_vertices.begin(),
                                        sorted_vertices.end()))
    return npos;
  return static_cast<std::size_t>(it - edges_.begin());
}

long Hypergraph::degree_of_set(std::span<const int> vertex_set) const {
  if (vertex_set.empty()) throw std::invalid_argument("degree_of_set: empty set");
  if (static_cast<int>(vertex_set.size()) > r_)
    throw std::invalid_argument("degree_of_set: |S| exceeds uniformity");
  Bitset s(static_cast<std::size_t>(n_));
  for (int v : vertex_set) {
    if (v < 0 || v >= n_) throw std::invalid_argument("degree_of_set: vertex out of range");
    s.set(static_cast<std::size_t>(v));
  }
  if (s.count() != vertex_set.size())
    throw std::invalid_argument("degree_of_set: repeated vertex");
  long deg = 0;
  for (const auto& m : edge_masks_)
    if (s.is_subset_of(m)) ++deg;
  return deg;
}

long Hypergraph::max_degree(int d) const {
  if (d < 1 || d > r_) throw std::invalid_argument("max_degree: d out of range [1,r]");
  // Only d-sets contained in at least one edge have nonzero degree.
  std::map<std::vector<int>, long> counts;
  std::vector<int> subset(static_cast<std::size_t>(d));
  for (const auto& e : edges_) {
    std::vector<std::size_t> pick(static_cast<std::size_t>(d));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      for (int i = 0; i < d; ++i) subset[static_cast<std::size_t>(i)] = e[pick[static_cast<std::size_t>(i)]];
      ++counts[subset];
      int i = d - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == e.size() - static_cast<std::size_t>(d - i)) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < d; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  long best = 0;
  for (const auto& [k, c] : counts) best = std::max(best, c);
  return best;
}

EdgeSubset::EdgeSubset(const Hypergraph& parent)
    : parent_(&parent), mask_(parent.edge_count()) {}

EdgeSubset::EdgeSubset(const Hypergraph& parent, const std::vector<std::size_t>& edge_indices)
    : parent_(&parent), mask_(parent.edge_count()) {
  for (auto i : edge_indices) {
    if (i >= parent.edge_count()) throw std::invalid_argument("EdgeSubset: edge index out of range");
    mask_.set(i);
  }
}

int EdgeSubset::support_size() const {
  Bitset support(static_cast<std::size_t>(parent_->vertex_count()));
  for (auto i : mask_.set_bits()) support |= parent_->edge_mask(i);
  return static_cast<int>(support.count());
}

long EdgeSubset::component_count() const {
  auto idx = mask_.set_bits();
  return component_count_of(*parent_, idx);
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

std::vector<std::vector<std::size_t>> group_edges(const Hypergraph& parent,
                                                  std::span<const std::size_t> edge_indices) {
  UnionFind uf(edge_indices.size());
  std::vector<long> seen(static_cast<std::size_t>(parent.vertex_count()), -1);
  for (std::size_t i = 0; i < edge_indices.size(); ++i) {
    for (int v : parent.edge(edge_indices[i])) {
      auto& slot = seen[static_cast<std::size_t>(v)];
      if (slot >= 0) uf.unite(i, static_cast<std::size_t>(slot));
      slot = static_cast<long>(i);
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < edge_indices.size(); ++i) groups[uf.find(i)].push_back(edge_indices[i]);
  std::vector<std::vector<std::size_t>> out;
  out.reserve(groups.size());
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

}  // namespace

std::vector<std::vector<std::size_t>> components(const Hypergraph& h) {
  std::vector<std::size_t> all(h.edge_count());
  std::iota(all.begin(), all.end(), 0);
  return group_edges(h, all);
}

std::vector<std::vector<std::size_t>> components(const EdgeSubset& subset) {
  auto idx = subset.mask().set_bits();
  return group_edges(subset.parent(), idx);
}

long component_count_of(const Hypergraph& parent, std::span<const std::size_t> edge_indices) {
  if (edge_indices.empty()) return 0;
  UnionFind uf(edge_indices.size());
  std::vector<long> seen(static_cast<std::size_t>(parent.vertex_count()), -1);
  for (std::size_t i = 0; i < edge_indices.size(); ++i) {
    for (int v : parent.edge(edge_indices[i])) {
      auto& slot = seen[static_cast<std::size_t>(v)];
      if (slot >= 0) uf.unite(i, static_cast<std::size_t>(slot));
      slot = static_cast<long>(i);
    }
  }
  long roots = 0;
  for (std::size_t i = 0; i < edge_indices.size(); ++i)
    if (uf.find(i) == i) ++roots;
  return roots;
}

Hypergraph Hypergraph::parse(std::istream& in, const std::string& origin) {
  auto fail = [&origin](long line, const std::string& msg) -> void {
    throw std::runtime_error(origin + ":" + std::to_string(line) + ": " + msg);
  };

  std::string line;
  long line_no = 0;
  long n = -1, r = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view sv(line);
    auto first = sv.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || sv[first] == '#') continue;
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n >> r)) fail(line_no, "malformed header, expected \"n r\"");
      std::string rest;
      if (ls >> rest) fail(line_no, "trailing tokens after header");
      if (r < 2 || n < r) fail(line_no, "invalid header values n=" + std::to_string(n) +
                                            " r=" + std::to_string(r));
      continue;
    }
    Edge e;
    long v;
    while (ls >> v) e.push_back(static_cast<int>(v));
    if (!ls.eof()) fail(line_no, "non-integer token in edge line");
    if (static_cast<long>(e.size()) != r)
      fail(line_no, "edge has " + std::to_string(e.size()) + " vertices, expected " +
                        std::to_string(r));
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0 || e[i] >= n)
        fail(line_no, "vertex " + std::to_string(e[i]) + " out of range [0," +
                          std::to_string(n) + ")");
      if (i > 0 && e[i] <= e[i - 1]) fail(line_no, "vertices must be strictly increasing");
    }
    edges.push_back(std::move(e));
  }
  if (n < 0) throw std::runtime_error(origin + ": missing header line");
  return Hypergraph(static_cast<int>(n), static_cast<int>(r), std::move(edges));
}

Hypergraph Hypergraph::read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse(in, path);
}

void Hypergraph::write(std::ostream& out) const {
  out << n_ << " " << r_ << "\n";
  for (const auto& e : edges_) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << "\n";
  }
}

void Hypergraph::write_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write(out);
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace hampow
