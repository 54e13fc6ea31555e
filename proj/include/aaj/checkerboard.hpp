#pragma once

// Checkerboard (Tait) graphs and the statistics read off their simplifications.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aaj/diagram.hpp"

namespace aaj {

enum class EdgeKind { A, B };

struct TaitEdge {
  int u = 0, v = 0;  // vertex indices
  int crossing = 0;
  EdgeKind kind = EdgeKind::A;
};

struct TaitGraph {
  std::vector<int> vertex_faces;  // vertex -> face id of faces(d)
  std::vector<TaitEdge> edges;    // one per crossing, crossing order
  std::optional<int> dealternator;
  bool shaded = false;

  int vertex_count() const { return static_cast<int>(vertex_faces.size()); }
  /// -1 when the face belongs to the other class.
  int vertex_of_face(int face) const;
  int count(EdgeKind k) const;
};

struct TaitPair {
  TaitGraph g, gbar;
};

/// G is the class carrying more A-edges, the shaded class on a tie.
TaitPair tait_graphs(const LinkDiagram& d);
/// G is the class in which every edge other than `dealternator` is an A-edge
/// (or the class where the dealternator sits as a B-edge when that is not
/// decisive); the dealternator is marked in both graphs.
TaitPair tait_graphs(const LinkDiagram& d, int dealternator);

bool has_cut_vertex(const TaitGraph& g);

// ---- simplification ---------------------------------------------------------

struct SimpleEdge {
  int u = 0, v = 0;  // u < v
  int multiplicity = 1;
  bool dealternator = false;
};

struct SimplifiedGraph {
  int vertex_count = 0;
  std::vector<SimpleEdge> edges;  // sorted by (u, v)
  int loops_removed = 0;
  std::vector<std::vector<int>> mult;  // symmetric multiplicity matrix

  bool adjacent(int a, int b) const { return mult[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] > 0; }
  int multiplicity(int a, int b) const { return mult[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
};

SimplifiedGraph simplify(const TaitGraph& g);
/// Simplifies an abstract multigraph on vertices 0..n-1; `marked` is the index
/// of the dealternator edge if any.
SimplifiedGraph simplify_edges(int n, const std::vector<std::pair<int, int>>& edges,
                               std::optional<std::size_t> marked = std::nullopt);

struct GraphStats {
  int v = 0, e = 0, mu = 0, tau = 0, beta1 = 0;
  friend bool operator==(const GraphStats&, const GraphStats&) = default;
};

/// SplitError when the graph is disconnected.
GraphStats graph_stats(const SimplifiedGraph& g);

struct AAPathStats {
  int P = 0, P0 = 0, P1 = 0, P2 = 0, Q = 0, S = 0;
  friend bool operator==(const AAPathStats&, const AAPathStats&) = default;
};

/// Counts relative to the marked pair; IndexError on a bad vertex.
AAPathStats aa_path_stats(const SimplifiedGraph& g, int x1, int x2);

/// Adjacency dump with multiplicities and edge kinds, one line per vertex.
std::string dump(const TaitGraph& g);

}  // namespace aaj
