#include "gridpath/grid.hpp"

#include <algorithm>

namespace gridpath {

void fail(Errc code, const std::string& msg) {
  throw Error(code, std::string(errc_name(code)) + ": " + msg);
}

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::degree_violation: return "DegreeViolation";
    case Errc::disconnected: return "Disconnected";
    case Errc::wrong_endpoints: return "WrongEndpoints";
    case Errc::out_of_bounds: return "OutOfBounds";
    case Errc::revisit: return "Revisit";
    case Errc::wrong_terminal: return "WrongTerminal";
    case Errc::parse_error: return "ParseError";
    case Errc::not_switchable: return "NotSwitchable";
    case Errc::structure_violation: return "StructureViolation";
    case Errc::frame_unavailable: return "FrameUnavailable";
    case Errc::cap_exceeded: return "CapExceeded";
    case Errc::dims_mismatch: return "DimsMismatch";
    case Errc::replay_divergence: return "ReplayDivergence";
    case Errc::no_such_canonical: return "NoSuchCanonical";
    case Errc::not_simple: return "NotSimple";
    case Errc::no_simple_path: return "NoSimplePath";
    case Errc::not_almost_canonical: return "NotAlmostCanonical";
  }
  return "UnknownError";
}

std::string to_string(Vertex v) {
  return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

std::string to_string(GridDims d) {
  return std::to_string(d.rows) + "x" + std::to_string(d.cols);
}

EdgeSet::EdgeSet(GridDims d) : dims_(d) {
  if (d.rows < 1 || d.cols < 1) fail(Errc::parse_error, "grid dims must be positive");
  hstride_ = static_cast<size_t>(std::max(d.cols - 1, 0));
  vstride_ = static_cast<size_t>(std::max(d.rows - 1, 0));
  hbits_.assign(static_cast<size_t>(d.rows) * hstride_, false);
  vbits_.assign(static_cast<size_t>(d.cols) * vstride_, false);
}

bool EdgeSet::has(Edge e) const {
  if (e.horizontal()) return horiz(e.a.x, e.a.y);
  return vert(e.a.x, e.a.y);
}

void EdgeSet::set(Edge e, bool on) {
  if (e.horizontal())
    set_horiz(e.a.x, e.a.y, on);
  else
    set_vert(e.a.x, e.a.y, on);
}

int EdgeSet::count() const {
  int c = 0;
  for (bool b : hbits_) c += b;
  for (bool b : vbits_) c += b;
  return c;
}

int EdgeSet::degree(Vertex v) const {
  int d = 0;
  if (v.x > 0 && horiz(v.x - 1, v.y)) ++d;
  if (v.x < dims_.cols - 1 && horiz(v.x, v.y)) ++d;
  if (v.y > 0 && vert(v.x, v.y - 1)) ++d;
  if (v.y < dims_.rows - 1 && vert(v.x, v.y)) ++d;
  return d;
}

std::vector<Vertex> EdgeSet::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  if (v.y < dims_.rows - 1 && vert(v.x, v.y)) out.push_back({v.x, v.y + 1});
  if (v.x > 0 && horiz(v.x - 1, v.y)) out.push_back({v.x - 1, v.y});
  if (v.x < dims_.cols - 1 && horiz(v.x, v.y)) out.push_back({v.x + 1, v.y});
  if (v.y > 0 && vert(v.x, v.y - 1)) out.push_back({v.x, v.y - 1});
  return out;
}

HamPath HamPath::validate(EdgeSet edges) {
  const GridDims d = edges.dims();
  const Vertex s = corner_s(d), t = corner_t(d);
  const int total = d.size();

  if (total == 1) {
    // 1x1 grid: the empty path on the single vertex.
    if (edges.count() != 0) fail(Errc::degree_violation, "1x1 grid admits no edges");
    return HamPath(std::move(edges), {s}, {0});
  }

  if (edges.degree(s) != 1 || edges.degree(t) != 1)
    fail(Errc::wrong_endpoints, "s and t must have degree 1, got " +
                                    std::to_string(edges.degree(s)) + " and " +
                                    std::to_string(edges.degree(t)));
  for (int y = 0; y < d.rows; ++y) {
    for (int x = 0; x < d.cols; ++x) {
      const Vertex v{x, y};
      if (v == s || v == t) continue;
      const int deg = edges.degree(v);
      if (deg != 2)
        fail(Errc::degree_violation,
             "vertex " + to_string(v) + " has degree " + std::to_string(deg) + ", expected 2");
    }
  }
  if (edges.count() != total - 1)
    fail(Errc::degree_violation, "edge count " + std::to_string(edges.count()) +
                                     " != " + std::to_string(total - 1));

  // Walk from s. With the degree profile above, the walk either visits all
  // vertices and ends at t, or stops early (leftover components are cycles).
  std::vector<Vertex> order;
  std::vector<int> pos(static_cast<size_t>(total), -1);
  order.reserve(static_cast<size_t>(total));
  Vertex cur = s, prev{-1, -1};
  auto step = [&](Vertex v, Vertex skip, Vertex& next) {
    if (v.y < d.rows - 1 && edges.vert(v.x, v.y) && !(Vertex{v.x, v.y + 1} == skip)) {
      next = {v.x, v.y + 1};
      return true;
    }
    if (v.x > 0 && edges.horiz(v.x - 1, v.y) && !(Vertex{v.x - 1, v.y} == skip)) {
      next = {v.x - 1, v.y};
      return true;
    }
    if (v.x < d.cols - 1 && edges.horiz(v.x, v.y) && !(Vertex{v.x + 1, v.y} == skip)) {
      next = {v.x + 1, v.y};
      return true;
    }
    if (v.y > 0 && edges.vert(v.x, v.y - 1) && !(Vertex{v.x, v.y - 1} == skip)) {
      next = {v.x, v.y - 1};
      return true;
    }
    return false;
  };
  for (int i = 0; i < total; ++i) {
    pos[static_cast<size_t>(cur.y) * d.cols + cur.x] = i;
    order.push_back(cur);
    if (i == total - 1) break;
    Vertex next{-1, -1};
    const bool found = step(cur, prev, next);
    if (!found) {
      if (cur == t) fail(Errc::disconnected, "walk ended at t after " +
                                                  std::to_string(i + 1) + " of " +
                                                  std::to_string(total) + " vertices");
      fail(Errc::wrong_endpoints, "walk ended at " + to_string(cur));
    }
    prev = cur;
    cur = next;
  }
  if (cur != t) {
    // All vertices consumed but terminal is off; with degrees s,t = 1 this
    // cannot happen unless the walk closed early, which degree checks forbid.
    fail(Errc::wrong_endpoints, "walk terminated at " + to_string(cur) + ", not t");
  }
  for (int p : pos)
    if (p < 0) fail(Errc::disconnected, "edge set contains a cycle component");
  return HamPath(std::move(edges), std::move(order), std::move(pos));
}

HamPath from_moves(GridDims dims, const std::string& moves) {
  if (static_cast<int>(moves.size()) != dims.size() - 1)
    fail(Errc::parse_error, "move string length " + std::to_string(moves.size()) +
                                ", expected " + std::to_string(dims.size() - 1));
  EdgeSet edges(dims);
  std::vector<bool> seen(static_cast<size_t>(dims.size()), false);
  Vertex cur = corner_s(dims);
  seen[0] = true;
  for (char c : moves) {
    Vertex next = cur;
    switch (c) {
      case 'U': next.y -= 1; break;
      case 'D': next.y += 1; break;
      case 'L': next.x -= 1; break;
      case 'R': next.x += 1; break;
      default: fail(Errc::parse_error, std::string("bad move character '") + c + "'");
    }
    if (!in_grid(dims, next)) fail(Errc::out_of_bounds, "walk leaves grid at " + to_string(next));
    const size_t idx = static_cast<size_t>(next.y) * dims.cols + next.x;
    if (seen[idx]) fail(Errc::revisit, "walk revisits " + to_string(next));
    seen[idx] = true;
    edges.set(Edge(cur, next), true);
    cur = next;
  }
  if (cur != corner_t(dims)) fail(Errc::wrong_terminal, "walk ends at " + to_string(cur));
  return HamPath::validate(std::move(edges));
}

std::string to_moves(const HamPath& path) {
  const auto& ord = path.order();
  std::string out;
  out.reserve(ord.size());
  for (size_t i = 1; i < ord.size(); ++i) {
    const int dx = ord[i].x - ord[i - 1].x;
    const int dy = ord[i].y - ord[i - 1].y;
    out += dx == 1 ? 'R' : dx == -1 ? 'L' : dy == 1 ? 'D' : 'U';
  }
  return out;
}

bool segment_on_path(const HamPath& path, Segment seg) {
  if (seg.u.x != seg.v.x && seg.u.y != seg.v.y)
    fail(Errc::parse_error, "segment endpoints share neither a row nor a column");
  if (seg.u.x == seg.v.x) {
    for (int y = std::min(seg.u.y, seg.v.y); y < std::max(seg.u.y, seg.v.y); ++y)
      if (!path.edges().vert(seg.u.x, y)) return false;
    return true;
  }
  for (int x = std::min(seg.u.x, seg.v.x); x < std::max(seg.u.x, seg.v.x); ++x)
    if (!path.edges().horiz(x, seg.u.y)) return false;
  return true;
}

HamPath rotate180(const HamPath& path) {
  const GridDims d = path.dims();
  EdgeSet out(d);
  for (int y = 0; y < d.rows; ++y)
    for (int x = 0; x + 1 < d.cols; ++x)
      if (path.edges().horiz(x, y)) out.set_horiz(d.cols - 2 - x, d.rows - 1 - y, true);
  for (int x = 0; x < d.cols; ++x)
    for (int y = 0; y + 1 < d.rows; ++y)
      if (path.edges().vert(x, y)) out.set_vert(d.cols - 1 - x, d.rows - 2 - y, true);
  return HamPath::validate(std::move(out));
}

HamPath transpose(const HamPath& path) {
  const GridDims d = path.dims();
  EdgeSet out(d.transposed());
  for (int y = 0; y < d.rows; ++y)
    for (int x = 0; x + 1 < d.cols; ++x)
      if (path.edges().horiz(x, y)) out.set_vert(y, x, true);
  for (int x = 0; x < d.cols; ++x)
    for (int y = 0; y + 1 < d.rows; ++y)
      if (path.edges().vert(x, y)) out.set_horiz(y, x, true);
  return HamPath::validate(std::move(out));
}

}  // namespace gridpath
