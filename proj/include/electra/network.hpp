#pragma once

#include "electra/algebra.hpp"
#include "electra/matrix.hpp"
#include "electra/wiring.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace electra {

struct EmbeddingError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A local move whose pattern does not match the given site.
struct TransformationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Contraction of a boundary-boundary edge or of a self-loop.
struct IllegalMoveError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  int u, v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A graph embedded in a disk.
///
/// Vertices 0..n-1 are the boundary vertices V_1..V_n in clockwise order;
/// n..n+interior-1 are interior. Edge e has darts 2e (at u) and 2e+1 (at v).
/// rotation[w] lists the darts at w in clockwise order. At a boundary vertex
/// V_i the list is linear: it starts next to the circle arc toward V_(i+1)
/// and ends next to the arc toward V_(i-1).
class CircularPlanarGraph {
 public:
  CircularPlanarGraph() = default;
  /// Throws EmbeddingError if the rotation system is inconsistent or not a
  /// disk embedding (Euler characteristic check with the circle arcs added).
  CircularPlanarGraph(int n, int interior, std::vector<Edge> edges, std::vector<std::vector<int>> rotation);

  /// n boundary vertices and nothing else.
  static CircularPlanarGraph empty(int n);

  int n() const { return n_; }
  int interior() const { return interior_; }
  int vertex_count() const { return n_ + interior_; }
  bool is_boundary(int v) const { return v < n_; }

  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::vector<int>>& rotation() const { return rotation_; }
  const std::vector<int>& rotation(int v) const { return rotation_.at(static_cast<std::size_t>(v)); }

  static int edge_of(int dart) { return dart / 2; }
  static int twin(int dart) { return dart ^ 1; }
  /// Vertex the dart sits at.
  int tail(int dart) const;
  /// Vertex the dart points to.
  int head(int dart) const { return tail(twin(dart)); }
  int degree(int v) const { return static_cast<int>(rotation(v).size()); }

  /// Next dart clockwise at the same vertex; nullopt past the end of a boundary list.
  std::optional<int> cw_next(int dart) const;
  std::optional<int> ccw_prev(int dart) const;

  /// Faces traced with the face on the right of each dart, circle arcs included.
  std::size_t face_count() const;

  friend bool operator==(const CircularPlanarGraph&, const CircularPlanarGraph&) = default;

 private:
  int n_ = 0;
  int interior_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> rotation_;
  std::vector<std::size_t> position_;  ///< index of each dart inside its rotation list
};

/// A graph with a positive rational conductance on every edge.
struct Network {
  CircularPlanarGraph graph;
  std::vector<Rational> conductance;

  /// Throws std::invalid_argument unless there is one positive conductance per edge.
  Network(CircularPlanarGraph g, std::vector<Rational> c);
};

/// Every edge gets conductance 1.
Network unit_network(const CircularPlanarGraph& g);

using ResponseMatrix = RationalMatrix;

/// M = -(L_BB - L_BI L_II^-1 L_IB). Self-loops are ignored and parallel
/// edges add. Interior vertices with no path to the boundary are dropped and
/// listed in `pruned` when it is non-null.
ResponseMatrix response_matrix(const Network& net, std::vector<int>* pruned = nullptr);

/// Two disjoint lists of boundary vertices (0-based) such that
/// p_1..p_k, q_k..q_1 read clockwise.
struct CircularPair {
  std::vector<int> p, q;
  friend bool operator==(const CircularPair&, const CircularPair&) = default;
  friend auto operator<=>(const CircularPair&, const CircularPair&) = default;
};

/// "(1 2;4 3)", 1-based.
std::string to_string(const CircularPair& c);

/// Representative of {(P;Q), (reverse Q; reverse P)}, the smaller of the two.
/// Throws std::invalid_argument if the pair is not circular for order n.
CircularPair normalize(const CircularPair& c, int n);

/// All normalized circular pairs of sizes 1..floor(n/2): by size, then by
/// vertex set, then by starting vertex.
std::vector<CircularPair> circular_pairs(int n);

Rational circular_minor(const ResponseMatrix& m, const CircularPair& c);

/// Vertex-disjoint paths p_i -> q_i whose internal vertices are all interior.
bool has_connection(const CircularPlanarGraph& g, const CircularPair& c);

/// Connected pairs in circular_pairs order.
using ConnectionSet = std::vector<CircularPair>;
ConnectionSet pi_set(const CircularPlanarGraph& g);

struct ResponseAxiomReport {
  bool pass = true;
  bool symmetric = true;
  bool zero_row_sums = true;
  bool minors_nonnegative = true;
  bool positivity_matches_connections = true;
  std::size_t pairs_checked = 0;
  std::vector<std::string> violations;
};

ResponseAxiomReport verify_response_axioms(const Network& net);

/// Replaces the interior degree-3 hub by a triangle on its neighbours
/// v1, v2, v3 (in clockwise order at the hub), with conductances
/// g1 g2 / S on v1v2, g2 g3 / S on v2v3 and g3 g1 / S on v3v1. The three new
/// edges are appended in that order. The hub is removed and later interior
/// vertices shift down by one.
Network y_delta(const Network& net, int hub);

/// Replaces a triangular face a, b, c by an interior hub, appended as the
/// last vertex. The spoke to a gets (xy + yz + zx) / (conductance of bc),
/// and so on. Spokes are appended in the order a, b, c.
Network delta_y(const Network& net, int a, int b, int c);

enum class Reduction {
  self_loop,  ///< site: the loop edge
  spike,      ///< site: an interior vertex of degree 1
  parallel,   ///< site: an edge with a parallel twin bounding a 2-sided face
  series,     ///< site: an interior vertex of degree 2
};

Network reduce(const Network& net, Reduction rule, int site);

CircularPlanarGraph delete_edge(const CircularPlanarGraph& g, int e);
/// Merges the endpoints of e. The boundary endpoint survives if there is
/// one, else the smaller index. Throws IllegalMoveError for loops and for
/// edges joining two boundary vertices.
CircularPlanarGraph contract_edge(const CircularPlanarGraph& g, int e);

Network delete_edge(const Network& net, int e);
Network contract_edge(const Network& net, int e);

/// Every deletion and every legal contraction loses some connected pair.
bool is_critical(const CircularPlanarGraph& g);

struct MedialResult {
  std::optional<Matching> matching;  ///< set iff the medial graph is lensless
  std::string diagnostic;            ///< names the violation otherwise
};

/// Traces the geodesics of the medial graph through the rotation system.
MedialResult medial_matching(const CircularPlanarGraph& g);

/// A critical graph whose medial matching is m, one edge per crossing.
/// Throws PreconditionError naming a dividing line if m is not full.
CircularPlanarGraph recover_graph(const Matching& m);

struct ClosureReport {
  bool deletion_exact = false;      ///< response with conductance 0 equals the deletion's
  bool contraction_checked = false;
  std::vector<Rational> ladder;     ///< conductances tried on the edge
  std::vector<Rational> gaps;       ///< max-entry distance to the contraction's response
  bool gaps_decreasing = false;
  bool final_gap_small = false;     ///< last gap < 1/1000
  std::string note;
  bool pass = false;
};

ClosureReport closure_limit_check(const Network& net, int e);

}  // namespace electra
