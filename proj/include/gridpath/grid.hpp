#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gridpath {

// Error codes shared across the library. Each operation documents which
// codes it can raise.
enum class Errc {
  degree_violation,
  disconnected,
  wrong_endpoints,
  out_of_bounds,
  revisit,
  wrong_terminal,
  parse_error,
  not_switchable,
  structure_violation,
  frame_unavailable,
  cap_exceeded,
  dims_mismatch,
  replay_divergence,
  no_such_canonical,
  not_simple,
  no_simple_path,
  not_almost_canonical,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& msg);

const char* errc_name(Errc code);

/// Grid of m rows and n columns. Vertices are lattice points, cells are the
/// unit faces. |G| = rows*cols, the vertex count.
struct GridDims {
  int rows = 0;  // m
  int cols = 0;  // n

  int size() const { return rows * cols; }
  bool operator==(const GridDims&) const = default;
  GridDims transposed() const { return {cols, rows}; }
};

/// Lattice point. x is the column in [0, n), y is the row in [0, m).
/// (0,0) is the top-left corner and y grows downward.
struct Vertex {
  int x = 0;
  int y = 0;

  bool operator==(const Vertex&) const = default;
  auto operator<=>(const Vertex&) const = default;
};

inline Vertex corner_s(GridDims) { return {0, 0}; }
inline Vertex corner_t(GridDims d) { return {d.cols - 1, d.rows - 1}; }
inline Vertex corner_alpha(GridDims d) { return {0, d.rows - 1}; }   // bottom-left
inline Vertex corner_beta(GridDims d) { return {d.cols - 1, 0}; }    // top-right

inline bool in_grid(GridDims d, Vertex v) {
  return v.x >= 0 && v.x < d.cols && v.y >= 0 && v.y < d.rows;
}
inline bool is_internal(GridDims d, Vertex v) {
  return v.x >= 1 && v.x <= d.cols - 2 && v.y >= 1 && v.y <= d.rows - 2;
}

std::string to_string(Vertex v);
std::string to_string(GridDims d);

/// Undirected unit grid edge, stored with a < b.
struct Edge {
  Vertex a, b;

  Edge() = default;
  Edge(Vertex u, Vertex v) : a(u < v ? u : v), b(u < v ? v : u) {}
  bool operator==(const Edge&) const = default;
  auto operator<=>(const Edge&) const = default;
  bool horizontal() const { return a.y == b.y; }
};

/// Edge set of a grid graph held as bit vectors, one per row for horizontal
/// edges and one per column for vertical edges. This is the working storage
/// for paths; a square-switch touches O(1) bits.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(GridDims d);

  GridDims dims() const { return dims_; }

  // Horizontal edge (x,y)-(x+1,y); x in [0, cols-1).
  bool horiz(int x, int y) const { return hbits_[static_cast<size_t>(y) * hstride_ + x]; }
  void set_horiz(int x, int y, bool on) { hbits_[static_cast<size_t>(y) * hstride_ + x] = on; }
  // Vertical edge (x,y)-(x,y+1); y in [0, rows-1).
  bool vert(int x, int y) const { return vbits_[static_cast<size_t>(x) * vstride_ + y]; }
  void set_vert(int x, int y, bool on) { vbits_[static_cast<size_t>(x) * vstride_ + y] = on; }

  bool has(Edge e) const;
  void set(Edge e, bool on);

  int count() const;
  int degree(Vertex v) const;
  // Neighbors of v along edges of this set, in D,L,R,U probe order.
  std::vector<Vertex> neighbors(Vertex v) const;

  bool operator==(const EdgeSet&) const = default;

 private:
  GridDims dims_;
  size_t hstride_ = 0, vstride_ = 0;
  std::vector<bool> hbits_, vbits_;
};

/// A straight run between two vertices that share a row or a column.
struct Segment {
  Vertex u, v;
  int length() const { return std::abs(u.x - v.x) + std::abs(u.y - v.y); }
};

class HamPath;

/// True when every grid edge strictly between the segment endpoints belongs
/// to the path.
bool segment_on_path(const HamPath& path, Segment seg);

/// A validated s,t Hamiltonian path. Immutable after construction; carries
/// the s->t vertex ordering computed during validation.
class HamPath {
 public:
  /// Validates a candidate edge set. Raises degree_violation, disconnected
  /// or wrong_endpoints.
  static HamPath validate(EdgeSet edges);

  GridDims dims() const { return edges_.dims(); }
  const EdgeSet& edges() const { return edges_; }
  const std::vector<Vertex>& order() const { return order_; }

  /// Visit position of v along the path, 0 for s.
  int position(Vertex v) const { return pos_[static_cast<size_t>(v.y) * dims().cols + v.x]; }

  bool has(Edge e) const { return edges_.has(e); }
  bool operator==(const HamPath& o) const { return edges_ == o.edges_; }

 private:
  HamPath(EdgeSet e, std::vector<Vertex> order, std::vector<int> pos)
      : edges_(std::move(e)), order_(std::move(order)), pos_(std::move(pos)) {}

  EdgeSet edges_;
  std::vector<Vertex> order_;
  std::vector<int> pos_;
};

/// Walks a move string over {U,D,L,R} from s and validates the result.
/// Raises out_of_bounds, revisit, wrong_terminal.
HamPath from_moves(GridDims dims, const std::string& moves);

/// Canonical serialization: the move string of the s->t walk.
std::string to_moves(const HamPath& path);

/// Maps v(x,y) -> v(n-1-x, m-1-y) and re-reads the result as an s,t path of
/// the same grid (s and t swap roles). Involution.
HamPath rotate180(const HamPath& path);

/// Maps v(x,y) -> v(y,x), giving a path on the transposed grid. Involution.
HamPath transpose(const HamPath& path);

}  // namespace gridpath
