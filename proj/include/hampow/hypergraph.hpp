#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace hampow {

// Dynamic bitset over vertex or edge indices.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  std::size_t size() const { return nbits_; }
  void set(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  std::size_t count() const;
  bool intersects(const Bitset& o) const;
  bool is_subset_of(const Bitset& o) const;
  Bitset& operator|=(const Bitset& o);
  Bitset& operator&=(const Bitset& o);

  friend bool operator==(const Bitset& a, const Bitset& b) {
    return a.nbits_ == b.nbits_ && a.words_ == b.words_;
  }

  std::vector<std::size_t> set_bits() const;

 private:
  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

using Edge = std::vector<int>;  // strictly increasing vertex indices, size r

// Immutable r-uniform hypergraph on vertices [0, n). Edges are stored
// deduplicated in lexicographic order; each also carries a vertex-membership
// bit row for intersection tests.
class Hypergraph {
 public:
  Hypergraph(int n, int r, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int uniformity() const { return r_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_[i]; }
  const Bitset& edge_mask(std::size_t i) const { return edge_masks_[i]; }

  // Edge indices incident to v, ascending.
  const std::vector<std::size_t>& incident_edges(int v) const { return incidence_[v]; }

  bool has_edge(std::span<const int> sorted_vertices) const;
  // Position in canonical edge order, or npos.
  std::size_t edge_index(std::span<const int> sorted_vertices) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  // |{e : S subseteq e}| for 1 <= |S| <= r.
  long degree_of_set(std::span<const int> vertex_set) const;
  // max over all d-subsets, 1 <= d <= r.
  long max_degree(int d) const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.n_ == b.n_ && a.r_ == b.r_ && a.edges_ == b.edges_;
  }

  static Hypergraph read_file(const std::string& path);
  static Hypergraph parse(std::istream& in, const std::string& origin);
  void write_file(const std::string& path) const;
  void write(std::ostream& out) const;

 private:
  int n_;
  int r_;
  std::vector<Edge> edges_;
  std::vector<Bitset> edge_masks_;
  std::vector<std::vector<std::size_t>> incidence_;
};

// View of a sub-collection of a hypergraph's edges, by canonical edge index.
class EdgeSubset {
 public:
  explicit EdgeSubset(const Hypergraph& parent);
  EdgeSubset(const Hypergraph& parent, const std::vector<std::size_t>& edge_indices);

  const Hypergraph& parent() const { return *parent_; }
  std::size_t size() const { return mask_.count(); }
  const Bitset& mask() const { return mask_; }
  std::vector<std::size_t> indices() const { return mask_.set_bits(); }

  int support_size() const;       // |V(P)|
  long component_count() const;   // 0 for the empty subset

 private:
  const Hypergraph* parent_;
  Bitset mask_;
};

// Maximal groups of edges connected through shared vertices. Vertices covered
// by no edge belong to no component.
std::vector<std::vector<std::size_t>> components(const Hypergraph& h);
std::vector<std::vector<std::size_t>> components(const EdgeSubset& subset);

// Component count of an edge index set within a parent hypergraph.
long component_count_of(const Hypergraph& parent, std::span<const std::size_t> edge_indices);

}  // namespace hampow
