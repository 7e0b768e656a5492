#include "gridpath/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "gridpath/analysis.hpp"
#include "gridpath/reconfig.hpp"
#include "gridpath/switching.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gridpath {

namespace {

constexpr int kHardCap = 64;  // visited sets live in one 64-bit word

struct Board {
  GridDims dims;
  int total;
  Vertex t;

  explicit Board(GridDims d) : dims(d), total(d.size()), t(corner_t(d)) {}
  int id(Vertex v) const { return v.y * dims.cols + v.x; }
};

struct Walker {
  Vertex cur;
  uint64_t visited;
  std::string moves;
};

// Move probes in lexicographic order of the move characters.
constexpr char kMoveChar[4] = {'D', 'L', 'R', 'U'};
constexpr int kDx[4] = {0, -1, 1, 0};
constexpr int kDy[4] = {1, 0, 0, -1};

// Prunes states that cannot extend to an s,t Hamiltonian path: every
// unvisited vertex must stay reachable from the current vertex, and every
// unvisited vertex except t needs two free contacts (one for t).
bool viable(const Board& b, Vertex cur, uint64_t visited) {
  const int total = b.total;
  uint64_t reached = 0;
  uint64_t frontier = 0;
  for (int dir = 0; dir < 4; ++dir) {
    const Vertex nb{cur.x + kDx[dir], cur.y + kDy[dir]};
    if (!in_grid(b.dims, nb)) continue;
    const uint64_t bit = 1ULL << b.id(nb);
    if (!(visited & bit)) frontier |= bit;
  }
  if (frontier == 0) return false;
  reached = frontier;
  while (frontier) {
    uint64_t next = 0;
    uint64_t f = frontier;
    while (f) {
      const int idx = std::countr_zero(f);
      f &= f - 1;
      const Vertex v{idx % b.dims.cols, idx / b.dims.cols};
      for (int dir = 0; dir < 4; ++dir) {
        const Vertex nb{v.x + kDx[dir], v.y + kDy[dir]};
        if (!in_grid(b.dims, nb)) continue;
        const uint64_t bit = 1ULL << b.id(nb);
        if ((visited & bit) || (reached & bit)) continue;
        reached |= bit;
        next |= bit;
      }
    }
    frontier = next;
  }
  // All unvisited vertices reachable?
  const uint64_t all = total == 64 ? ~0ULL : (1ULL << total) - 1;
  const uint64_t unvisited = all & ~visited;
  if ((reached & unvisited) != unvisited) return false;

  // Contact-degree prune.
  uint64_t u = unvisited;
  const uint64_t curbit = 1ULL << b.id(cur);
  while (u) {
    const int idx = std::countr_zero(u);
    u &= u - 1;
    const Vertex v{idx % b.dims.cols, idx / b.dims.cols};
    int free_deg = 0;
    for (int dir = 0; dir < 4; ++dir) {
      const Vertex nb{v.x + kDx[dir], v.y + kDy[dir]};
      if (!in_grid(b.dims, nb)) continue;
      const uint64_t bit = 1ULL << b.id(nb);
      if (!(visited & bit) || bit == curbit) ++free_deg;
    }
    const int need = v == b.t ? 1 : 2;
    if (free_deg < need) return false;
  }
  return true;
}

void dfs(const Board& b, Walker& w, std::vector<std::string>& out) {
  if (static_cast<int>(w.moves.size()) == b.total - 1) {
    if (w.cur == b.t) out.push_back(w.moves);
    return;
  }
  for (int dir = 0; dir < 4; ++dir) {
    const Vertex nb{w.cur.x + kDx[dir], w.cur.y + kDy[dir]};
    if (!in_grid(b.dims, nb)) continue;
    const uint64_t bit = 1ULL << b.id(nb);
    if (w.visited & bit) continue;
    if (nb == b.t && static_cast<int>(w.moves.size()) != b.total - 2) continue;
    const Vertex prev = w.cur;
    w.cur = nb;
    w.visited |= bit;
    w.moves.push_back(kMoveChar[dir]);
    if (nb == b.t || viable(b, w.cur, w.visited)) dfs(b, w, out);
    w.moves.pop_back();
    w.visited &= ~bit;
    w.cur = prev;
  }
}

void check_cap(GridDims dims, const EnumOptions& opt) {
  if (dims.size() > kHardCap)
    fail(Errc::cap_exceeded, "grids beyond " + std::to_string(kHardCap) + " vertices unsupported");
  if (dims.size() > opt.cap && !opt.force)
    fail(Errc::cap_exceeded, "grid " + to_string(dims) + " exceeds the enumeration cap " +
                                 std::to_string(opt.cap) + " (use force)");
}

bool parity_admits_path(GridDims d) {
  // A corner-to-corner Hamiltonian path two-colors the grid; both dims even
  // puts s and t on the same color with an even vertex count.
  return !(d.rows % 2 == 0 && d.cols % 2 == 0);
}

std::vector<std::string> enumerate_moves(GridDims dims, bool parallel) {
  const Board b(dims);
  if (!parity_admits_path(dims)) return {};
  if (dims.size() == 1) return {std::string()};

  // Seed states: expand partial walks breadth-first until the frontier is
  // wide enough to feed the parallel loop.
  std::vector<Walker> frontier{{corner_s(dims), 1ULL, ""}};
  const size_t want = parallel ? 64 : 1;
  while (frontier.size() < want) {
    std::vector<Walker> next;
    bool grew = false;
    for (const Walker& w : frontier) {
      if (static_cast<int>(w.moves.size()) >= b.total - 1 ||
          static_cast<int>(w.moves.size()) > b.total / 2) {
        next.push_back(w);
        continue;
      }
      for (int dir = 0; dir < 4; ++dir) {
        const Vertex nb{w.cur.x + kDx[dir], w.cur.y + kDy[dir]};
        if (!in_grid(b.dims, nb)) continue;
        const uint64_t bit = 1ULL << b.id(nb);
        if (w.visited & bit) continue;
        if (nb == b.t && static_cast<int>(w.moves.size()) != b.total - 2) continue;
        Walker w2{nb, w.visited | bit, w.moves + kMoveChar[dir]};
        if (nb == b.t || viable(b, w2.cur, w2.visited)) {
          next.push_back(std::move(w2));
          grew = true;
        }
      }
    }
    if (!grew) break;
    frontier = std::move(next);
    if (frontier.empty()) return {};
  }

  std::vector<std::vector<std::string>> buckets(frontier.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (size_t i = 0; i < frontier.size(); ++i) {
    Walker w = frontier[i];
    if (static_cast<int>(w.moves.size()) == b.total - 1) {
      if (w.cur == b.t) buckets[i].push_back(w.moves);
    } else {
      dfs(b, w, buckets[i]);
    }
  }
  std::vector<std::string> out;
  for (auto& bucket : buckets)
    for (auto& s : bucket) out.push_back(std::move(s));
  // Frontier expansion preserves lexicographic order, but sort anyway so the
  // contract is independent of the seeding depth.
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<HamPath> enumerate_st_hamiltonian(GridDims dims, const EnumOptions& opt) {
  check_cap(dims, opt);
  std::vector<HamPath> out;
  for (const auto& mv : enumerate_moves(dims, opt.parallel)) out.push_back(from_moves(dims, mv));
  return out;
}

std::vector<HamPath> enumerate_st_hamiltonian_serial(GridDims dims, const EnumOptions& opt) {
  check_cap(dims, opt);
  std::vector<HamPath> out;
  for (const auto& mv : enumerate_moves(dims, false)) out.push_back(from_moves(dims, mv));
  return out;
}

bool simple_by_bend_count(const HamPath& path) {
  const GridDims d = path.dims();
  const auto& ord = path.order();
  const int n = d.cols, m = d.rows;
  size_t i = 0;
  while (i < ord.size()) {
    const Vertex v = ord[i];
    if (!(v.x >= 1 && v.x <= n - 2 && v.y >= 1 && v.y <= m - 2)) {
      ++i;
      continue;
    }
    size_t j = i;
    int turns = 0;
    while (j < ord.size() && ord[j].x >= 1 && ord[j].x <= n - 2 && ord[j].y >= 1 &&
           ord[j].y <= m - 2) {
      const int ax = ord[j].x - ord[j - 1].x, ay = ord[j].y - ord[j - 1].y;
      const int bx = ord[j + 1].x - ord[j].x, by = ord[j + 1].y - ord[j].y;
      if (ax != bx || ay != by) ++turns;
      ++j;
    }
    const Vertex a = ord[i - 1], b = ord[j];
    auto code = [&](Vertex p) {
      if (p.x == 0) return 0;      // W
      if (p.x == n - 1) return 1;  // E
      if (p.y == 0) return 2;      // N
      return 3;                    // S
    };
    const int ca = code(a), cb = code(b);
    int minimum;
    if (ca == cb)
      minimum = 2;
    else if ((ca < 2) == (cb < 2))
      minimum = 0;  // W/E or N/S pair
    else
      minimum = 1;
    if (turns != minimum) return false;
    i = j;
  }
  return true;
}

std::vector<HamPath> enumerate_simple(GridDims dims, const EnumOptions& opt) {
  std::vector<HamPath> all = enumerate_st_hamiltonian(dims, opt);
  std::vector<HamPath> out;
  for (auto& p : all) {
    const bool a = is_simple(p);
    const bool b = simple_by_bend_count(p);
    if (a != b)
      fail(Errc::structure_violation,
           "simplicity deciders disagree on " + to_moves(p) + " (" + to_string(dims) + ")");
    if (a) out.push_back(std::move(p));
  }
  return out;
}

int HPGraph::node_index(const std::string& moves) const {
  const auto it = std::lower_bound(nodes.begin(), nodes.end(), moves);
  if (it == nodes.end() || *it != moves) return -1;
  return static_cast<int>(it - nodes.begin());
}

namespace {

HPGraph build_graph(GridDims dims, const EnumOptions& opt,
                    [[maybe_unused]] bool parallel) {
  HPGraph g;
  g.dims = dims;
  g.paths = enumerate_simple(dims, opt);
  g.nodes.reserve(g.paths.size());
  for (const auto& p : g.paths) g.nodes.push_back(to_moves(p));
  // enumerate order is lexicographic already
  const int nn = static_cast<int>(g.paths.size());
  std::vector<std::vector<std::pair<int, int>>> found(static_cast<size_t>(std::max(nn, 1)));

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (int i = 0; i < nn; ++i) {
    const HamPath& p = g.paths[static_cast<size_t>(i)];
    for (int cy = 1; cy <= dims.rows - 2; ++cy) {
      for (int cx = 1; cx <= dims.cols - 2; ++cx) {
        for (const Zipline& z : all_frames(dims, Vertex{cx, cy})) {
          const Square sq(dims, Vertex{cx, cy}, z);
          if (!is_switchable_square(p, sq)) continue;
          EdgeSet e = p.edges();
          apply_square_switch(e, sq);
          HamPath q = HamPath::validate(std::move(e));
          if (!is_simple(q)) continue;
          const int j = g.node_index(to_moves(q));
          if (j < 0)
            fail(Errc::structure_violation,
                 "switched simple path missing from the enumeration");
          if (j != i) found[static_cast<size_t>(i)].push_back({std::min(i, j), std::max(i, j)});
        }
      }
    }
  }

  // Deterministic merge. Edges are the undirected closure of the directed
  // switch relation: a square-switch mapping u to v joins the pair even when
  // the inverse exchange is not itself a square-switch.
  std::vector<std::pair<int, int>> all;
  for (const auto& v : found) all.insert(all.end(), v.begin(), v.end());
  std::sort(all.begin(), all.end());
  for (size_t i = 0; i < all.size();) {
    size_t j = i;
    while (j < all.size() && all[j] == all[i]) ++j;
    g.edges.push_back(all[i]);
    i = j;
  }
  g.adj.assign(static_cast<size_t>(nn), {});
  for (const auto& [a, b] : g.edges) {
    g.adj[static_cast<size_t>(a)].push_back(b);
    g.adj[static_cast<size_t>(b)].push_back(a);
  }
  return g;
}

}  // namespace

HPGraph build_hp_graph(GridDims dims, const EnumOptions& opt) {
  return build_graph(dims, opt, opt.parallel);
}

HPGraph build_hp_graph_serial(GridDims dims, const EnumOptions& opt) {
  return build_graph(dims, opt, false);
}

std::vector<int> bfs_distances(const HPGraph& g, int from) {
  std::vector<int> dist(g.nodes.size(), -1);
  if (from < 0 || from >= static_cast<int>(g.nodes.size())) return dist;
  std::vector<int> queue{from};
  dist[static_cast<size_t>(from)] = 0;
  for (size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    for (int w : g.adj[static_cast<size_t>(v)]) {
      if (dist[static_cast<size_t>(w)] >= 0) continue;
      dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

GraphStats graph_stats(const HPGraph& g, bool with_pairs, [[maybe_unused]] bool parallel) {
  GraphStats st;
  const int nn = static_cast<int>(g.nodes.size());
  if (nn == 0) return st;

  std::vector<int> ecc(static_cast<size_t>(nn), 0);
  std::vector<int> comp(static_cast<size_t>(nn), -1);
  int components = 0;
  for (int i = 0; i < nn; ++i) {
    if (comp[static_cast<size_t>(i)] >= 0) continue;
    const auto dist = bfs_distances(g, i);
    for (int v = 0; v < nn; ++v)
      if (dist[static_cast<size_t>(v)] >= 0) comp[static_cast<size_t>(v)] = components;
    ++components;
  }
  st.components = components;

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (int i = 0; i < nn; ++i) {
    const auto dist = bfs_distances(g, i);
    int e = 0;
    for (int v = 0; v < nn; ++v) e = std::max(e, dist[static_cast<size_t>(v)]);
    ecc[static_cast<size_t>(i)] = e;
  }
  st.diameter = *std::max_element(ecc.begin(), ecc.end());

  st.degree_histogram.assign(1, 0);
  for (int i = 0; i < nn; ++i) {
    const int deg = static_cast<int>(g.adj[static_cast<size_t>(i)].size());
    st.max_degree = std::max(st.max_degree, deg);
    if (deg >= static_cast<int>(st.degree_histogram.size()))
      st.degree_histogram.resize(static_cast<size_t>(deg) + 1, 0);
    ++st.degree_histogram[static_cast<size_t>(deg)];
  }

  // Distance between the two canonical nodes, when both exist.
  if (g.dims.rows % 2 == 1 && g.dims.cols % 2 == 1 && g.dims.rows >= 2 && g.dims.cols >= 2) {
    const int a = g.node_index(to_moves(make_canonical(g.dims, CanonicalKind::ns)));
    const int b = g.node_index(to_moves(make_canonical(g.dims, CanonicalKind::ew)));
    if (a >= 0 && b >= 0) st.ns_ew_distance = bfs_distances(g, a)[static_cast<size_t>(b)];
  }

  if (with_pairs) {
    int worst = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(max : worst) if (parallel)
#endif
    for (int i = 0; i < nn; ++i) {
      for (int j = 0; j < nn; ++j) {
        if (i == j) continue;
        const SwitchTrace tr =
            reconfigure(g.paths[static_cast<size_t>(i)], g.paths[static_cast<size_t>(j)],
                        CheckLevel::fast);
        worst = std::max(worst, tr.switch_count());
      }
    }
    st.max_algo_trace = worst;
  }
  return st;
}

std::string export_edge_list(const HPGraph& g) {
  std::string out;
  for (const auto& [a, b] : g.edges) {
    out += g.nodes[static_cast<size_t>(a)];
    out += ' ';
    out += g.nodes[static_cast<size_t>(b)];
    out += '\n';
  }
  return out;
}

}  // namespace gridpath
