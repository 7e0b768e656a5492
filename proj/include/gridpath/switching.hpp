#pragma once

#include <array>
#include <vector>

#include "gridpath/grid.hpp"

namespace gridpath {

enum class Orientation { row, col };

/// Directed internal grid line with its two parallel neighbors. The main
/// track tr lies between la and the zipline, the side track tr' between the
/// zipline and lb. Directions serialize as E (row, west->east), W (row,
/// east->west), S (col, north->south), N (col, south->north).
struct Zipline {
  Orientation orient = Orientation::row;
  int index = 0;        // row or column index of l_z
  bool toward_hi = true;  // E for rows, S for columns
  int la_index = 0;     // one of index-1, index+1

  int lb_index() const { return 2 * index - la_index; }
  char direction_char() const {
    if (orient == Orientation::row) return toward_hi ? 'E' : 'W';
    return toward_hi ? 'S' : 'N';
  }

  bool operator==(const Zipline&) const = default;
};

/// Conventional frames used by the zips and trace files: E pairs with la one
/// row above, N with la one column east (W below, S west).
Zipline make_zipline(GridDims dims, Orientation orient, int index, char direction);

/// Unit cell identified by its top-left corner (x,y); x in [0,n-1),
/// y in [0,m-1).
struct Cell {
  int x = 0;
  int y = 0;
  bool operator==(const Cell&) const = default;

  Edge top() const { return Edge({x, y}, {x + 1, y}); }
  Edge bottom() const { return Edge({x, y + 1}, {x + 1, y + 1}); }
  Edge left() const { return Edge({x, y}, {x, y + 1}); }
  Edge right() const { return Edge({x + 1, y}, {x + 1, y + 1}); }
};

/// 2x2 cell block centered on a zipline node, with the track/side roles
/// resolved from the directed zipline. Construction requires all nine nodes
/// in the grid and the center on l_z.
class Square {
 public:
  Square(GridDims dims, Vertex center, Zipline zip);

  Vertex center() const { return center_; }
  const Zipline& zipline() const { return zip_; }

  Cell far_cell_side_track() const;   // the cell whose switch seeds the cycle
  Cell near_cell_main_track() const;  // the diagonally opposite cell

  // p5 and p6: center and the far node adjacent to it on l_z.
  Vertex p5() const { return center_; }
  Vertex p6() const;

  /// True when vertex v lies in the closed band of the main track spanned by
  /// la and l_z.
  bool in_main_track(Vertex v) const;

 private:
  Vertex center_;
  Zipline zip_;
};

/// A replayable square-switch: the frame plus the exact edge exchange.
/// `removed` and `added` always describe the application to the current
/// path. A record with `reverse` set undoes the square-switch named by its
/// frame: the forward switch is valid on the path the application produces.
/// (The inverse of a square-switch preserves Hamiltonicity and simplicity
/// but is generally not itself a square-switch in any frame.)
struct SwitchRecord {
  Vertex center;
  Zipline zipline;
  std::array<Edge, 4> removed;
  std::array<Edge, 4> added;
  bool reverse = false;
};

/// True iff two parallel sides of the cell are path edges and the other two
/// are non-edges.
bool is_switchable_cell(const HamPath& path, Cell cell);
bool is_switchable_cell(const EdgeSet& edges, Cell cell);

struct Component {
  bool is_cycle = false;
  std::vector<Vertex> vertices;
};

struct PathCycleCover {
  std::vector<Component> components;
};

/// Components of the edge set after exchanging the cell's parallel edge
/// pair. Raises not_switchable when the cell is not switchable.
PathCycleCover path_cycle_cover_after_cell_switch(const HamPath& path, Cell cell);

/// Definition of a switchable square: the far cell of the side track and the
/// near cell of the main track are switchable with their path edges
/// perpendicular to the zipline, and switching the far cell alone yields one
/// cycle inside the main track plus one s,t path through the remaining
/// nodes.
bool is_switchable_square(const HamPath& path, const Square& sq);

/// O(1)+cycle-walk variant used inside zips; equivalent to the full check.
bool is_switchable_square_fast(const EdgeSet& edges, const Square& sq);

/// Exchanges the four path edges of the far side-track cell and near
/// main-track cell for their four non-edges. Raises not_switchable.
struct SquareSwitchResult {
  HamPath path;
  SwitchRecord record;
};
SquareSwitchResult square_switch(const HamPath& path, const Square& sq);

/// In-place exchange on a working edge set; no validation. The caller must
/// have established switchability.
SwitchRecord apply_square_switch(EdgeSet& edges, const Square& sq);

/// Applies the exact inverse exchange of a record.
void apply_inverse_switch(EdgeSet& edges, const SwitchRecord& rec);

/// All eight frames (orientation x direction x la side) for a center.
std::vector<Zipline> all_frames(GridDims dims, Vertex center);

}  // namespace gridpath
