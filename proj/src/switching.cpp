#include "gridpath/switching.hpp"

#include <algorithm>

namespace gridpath {

Zipline make_zipline(GridDims dims, Orientation orient, int index, char direction) {
  Zipline z;
  z.orient = orient;
  z.index = index;
  const int limit = orient == Orientation::row ? dims.rows : dims.cols;
  if (index < 1 || index > limit - 2)
    fail(Errc::structure_violation, "zipline index " + std::to_string(index) + " not internal");
  switch (direction) {
    case 'E':
      if (orient != Orientation::row) fail(Errc::parse_error, "direction E needs a row zipline");
      z.toward_hi = true;
      z.la_index = index - 1;  // row above
      break;
    case 'W':
      if (orient != Orientation::row) fail(Errc::parse_error, "direction W needs a row zipline");
      z.toward_hi = false;
      z.la_index = index + 1;
      break;
    case 'S':
      if (orient != Orientation::col) fail(Errc::parse_error, "direction S needs a col zipline");
      z.toward_hi = true;
      z.la_index = index - 1;  // column west
      break;
    case 'N':
      if (orient != Orientation::col) fail(Errc::parse_error, "direction N needs a col zipline");
      z.toward_hi = false;
      z.la_index = index + 1;  // column east
      break;
    default:
      fail(Errc::parse_error, std::string("bad zipline direction '") + direction + "'");
  }
  return z;
}

Square::Square(GridDims dims, Vertex center, Zipline zip) : center_(center), zip_(zip) {
  if (center.x < 1 || center.x > dims.cols - 2 || center.y < 1 || center.y > dims.rows - 2)
    fail(Errc::structure_violation,
         "square center " + to_string(center) + " too close to the boundary");
  const int on_line = zip.orient == Orientation::row ? center.y : center.x;
  if (on_line != zip.index)
    fail(Errc::structure_violation, "square center not on the zipline");
  if (std::abs(zip.la_index - zip.index) != 1)
    fail(Errc::structure_violation, "la must neighbor the zipline");
}

Cell Square::far_cell_side_track() const {
  if (zip_.orient == Orientation::row) {
    const int far_x = zip_.toward_hi ? center_.x : center_.x - 1;
    const int side_y = zip_.la_index == zip_.index - 1 ? center_.y : center_.y - 1;
    return {far_x, side_y};
  }
  const int far_y = zip_.toward_hi ? center_.y : center_.y - 1;
  const int side_x = zip_.la_index == zip_.index - 1 ? center_.x : center_.x - 1;
  return {side_x, far_y};
}

Cell Square::near_cell_main_track() const {
  if (zip_.orient == Orientation::row) {
    const int near_x = zip_.toward_hi ? center_.x - 1 : center_.x;
    const int main_y = zip_.la_index == zip_.index - 1 ? center_.y - 1 : center_.y;
    return {near_x, main_y};
  }
  const int near_y = zip_.toward_hi ? center_.y - 1 : center_.y;
  const int main_x = zip_.la_index == zip_.index - 1 ? center_.x - 1 : center_.x;
  return {main_x, near_y};
}

Vertex Square::p6() const {
  if (zip_.orient == Orientation::row)
    return {zip_.toward_hi ? center_.x + 1 : center_.x - 1, center_.y};
  return {center_.x, zip_.toward_hi ? center_.y + 1 : center_.y - 1};
}

bool Square::in_main_track(Vertex v) const {
  const int lo = std::min(zip_.index, zip_.la_index);
  const int hi = std::max(zip_.index, zip_.la_index);
  const int coord = zip_.orient == Orientation::row ? v.y : v.x;
  return coord >= lo && coord <= hi;
}

namespace {

// The cell's path-edge pair when it is switchable: 0 = horizontal pair,
// 1 = vertical pair, -1 = not switchable.
int switchable_pair(const EdgeSet& e, Cell c) {
  const bool top = e.has(c.top()), bottom = e.has(c.bottom());
  const bool left = e.has(c.left()), right = e.has(c.right());
  if (top && bottom && !left && !right) return 0;
  if (left && right && !top && !bottom) return 1;
  return -1;
}

void exchange_cell(EdgeSet& e, Cell c, int pair) {
  // pair: which parallel pair currently lies on the path.
  e.set(c.top(), pair != 0);
  e.set(c.bottom(), pair != 0);
  e.set(c.left(), pair != 1);
  e.set(c.right(), pair != 1);
}

// Required path-pair orientation inside a switched square: perpendicular to
// the zipline (1 = vertical pair for row ziplines, 0 = horizontal for
// column ziplines).
int perpendicular_pair(const Zipline& z) { return z.orient == Orientation::row ? 1 : 0; }

}  // namespace

bool is_switchable_cell(const EdgeSet& edges, Cell cell) {
  return switchable_pair(edges, cell) >= 0;
}

bool is_switchable_cell(const HamPath& path, Cell cell) {
  return is_switchable_cell(path.edges(), cell);
}

PathCycleCover path_cycle_cover_after_cell_switch(const HamPath& path, Cell cell) {
  const int pair = switchable_pair(path.edges(), cell);
  if (pair < 0) fail(Errc::not_switchable, "cell is not switchable");
  EdgeSet e = path.edges();
  exchange_cell(e, cell, pair);

  PathCycleCover cover;
  const GridDims d = e.dims();
  std::vector<bool> seen(static_cast<size_t>(d.size()), false);
  auto id = [&](Vertex v) { return static_cast<size_t>(v.y) * d.cols + v.x; };
  for (int y = 0; y < d.rows; ++y) {
    for (int x = 0; x < d.cols; ++x) {
      const Vertex v0{x, y};
      if (seen[id(v0)]) continue;
      if (e.degree(v0) == 2) continue;  // start components from their endpoints first
      Component comp;
      Vertex cur = v0, prev{-1, -1};
      while (true) {
        seen[id(cur)] = true;
        comp.vertices.push_back(cur);
        Vertex next{-1, -1};
        bool found = false;
        for (Vertex nb : e.neighbors(cur)) {
          if (nb == prev) continue;
          next = nb;
          found = true;
          break;
        }
        if (!found) break;
        prev = cur;
        cur = next;
      }
      cover.components.push_back(std::move(comp));
    }
  }
  // Remaining unseen vertices lie on cycles.
  for (int y = 0; y < d.rows; ++y) {
    for (int x = 0; x < d.cols; ++x) {
      const Vertex v0{x, y};
      if (seen[id(v0)]) continue;
      Component comp;
      comp.is_cycle = true;
      Vertex cur = v0, prev{-1, -1};
      do {
        seen[id(cur)] = true;
        comp.vertices.push_back(cur);
        Vertex next{-1, -1};
        for (Vertex nb : e.neighbors(cur)) {
          if (nb == prev) continue;
          next = nb;
          break;
        }
        prev = cur;
        cur = next;
      } while (!(cur == v0));
      cover.components.push_back(std::move(comp));
    }
  }
  return cover;
}

bool is_switchable_square(const HamPath& path, const Square& sq) {
  const EdgeSet& e = path.edges();
  const int want = perpendicular_pair(sq.zipline());
  const Cell far = sq.far_cell_side_track();
  const Cell near = sq.near_cell_main_track();
  if (switchable_pair(e, far) != want || switchable_pair(e, near) != want) return false;

  const auto cover = path_cycle_cover_after_cell_switch(path, far);
  if (cover.components.size() != 2) return false;
  const Component* cycle = nullptr;
  const Component* walk = nullptr;
  for (const auto& c : cover.components) (c.is_cycle ? cycle : walk) = &c;
  if (!cycle || !walk) return false;
  for (Vertex v : cycle->vertices)
    if (!sq.in_main_track(v)) return false;
  const GridDims d = path.dims();
  const Vertex s = corner_s(d), t = corner_t(d);
  const Vertex front = walk->vertices.front(), back = walk->vertices.back();
  if (!((front == s && back == t) || (front == t && back == s))) return false;
  return true;
}

bool is_switchable_square_fast(const EdgeSet& e, const Square& sq) {
  const int want = perpendicular_pair(sq.zipline());
  const Cell far = sq.far_cell_side_track();
  const Cell near = sq.near_cell_main_track();
  if (switchable_pair(e, far) != want || switchable_pair(e, near) != want) return false;

  // Walk the would-be cycle: after switching the far cell, edge (p5,p6)
  // appears and the cycle through it must close inside the main track.
  const Vertex p5 = sq.p5(), p6 = sq.p6();
  const GridDims d = e.dims();
  const Edge far_removed[2] = {want == 1 ? far.left() : far.top(),
                               want == 1 ? far.right() : far.bottom()};
  auto alive = [&](Vertex a, Vertex b) {
    const Edge ed(a, b);
    if (ed == far_removed[0] || ed == far_removed[1]) return false;
    return e.has(ed);
  };
  auto probe = [&](Vertex v, Vertex skip, Vertex& next) {
    int hits = 0;
    const Vertex around[4] = {{v.x, v.y + 1}, {v.x - 1, v.y}, {v.x + 1, v.y}, {v.x, v.y - 1}};
    for (const Vertex nb : around) {
      if (!in_grid(d, nb) || nb == skip || !alive(v, nb)) continue;
      next = nb;
      ++hits;
    }
    return hits;
  };
  // p5 keeps exactly one pre-existing edge after the far-cell exchange.
  Vertex cur{-1, -1};
  if (probe(p5, Vertex{-1, -1}, cur) != 1) return false;
  Vertex prev = p5;
  const int budget = 2 * (d.rows + d.cols) + 8;
  for (int steps = 0; steps < budget; ++steps) {
    if (!sq.in_main_track(cur)) return false;
    if (cur == p6) return true;  // cycle closes through the new (p5,p6) edge
    Vertex next{-1, -1};
    if (probe(cur, prev, next) != 1) return false;
    prev = cur;
    cur = next;
  }
  return false;
}

SwitchRecord apply_square_switch(EdgeSet& e, const Square& sq) {
  const int want = perpendicular_pair(sq.zipline());
  const Cell far = sq.far_cell_side_track();
  const Cell near = sq.near_cell_main_track();
  SwitchRecord rec;
  rec.center = sq.center();
  rec.zipline = sq.zipline();
  if (want == 1) {
    rec.removed = {far.left(), far.right(), near.left(), near.right()};
    rec.added = {far.top(), far.bottom(), near.top(), near.bottom()};
  } else {
    rec.removed = {far.top(), far.bottom(), near.top(), near.bottom()};
    rec.added = {far.left(), far.right(), near.left(), near.right()};
  }
  for (const Edge& ed : rec.removed) e.set(ed, false);
  for (const Edge& ed : rec.added) e.set(ed, true);
  return rec;
}

void apply_inverse_switch(EdgeSet& e, const SwitchRecord& rec) {
  for (const Edge& ed : rec.added) e.set(ed, false);
  for (const Edge& ed : rec.removed) e.set(ed, true);
}

SquareSwitchResult square_switch(const HamPath& path, const Square& sq) {
  if (!is_switchable_square(path, sq))
    fail(Errc::not_switchable, "square at " + to_string(sq.center()) + " is not switchable");
  EdgeSet e = path.edges();
  SwitchRecord rec = apply_square_switch(e, sq);
  return {HamPath::validate(std::move(e)), std::move(rec)};
}

std::vector<Zipline> all_frames(GridDims dims, Vertex center) {
  std::vector<Zipline> out;
  for (Orientation orient : {Orientation::row, Orientation::col}) {
    const int index = orient == Orientation::row ? center.y : center.x;
    const int limit = orient == Orientation::row ? dims.rows : dims.cols;
    if (index < 1 || index > limit - 2) continue;
    for (bool toward_hi : {true, false}) {
      for (int la : {index - 1, index + 1}) {
        Zipline z;
        z.orient = orient;
        z.index = index;
        z.toward_hi = toward_hi;
        z.la_index = la;
        out.push_back(z);
      }
    }
  }
  return out;
}

}  // namespace gridpath
