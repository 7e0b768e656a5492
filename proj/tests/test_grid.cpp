#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "gridpath/analysis.hpp"
#include "gridpath/grid.hpp"
#include "gridpath/oracle.hpp"

using namespace gridpath;

namespace {

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::parse_error;
}

}  // namespace

TEST_CASE("from_moves basics") {
  CHECK(to_moves(from_moves(GridDims{1, 2}, "R")) == "R");
  CHECK(to_moves(from_moves(GridDims{1, 3}, "RR")) == "RR");
  CHECK(to_moves(from_moves(GridDims{3, 3}, "RRDLLDRR")) == "RRDLLDRR");

  CHECK(code_of([] { from_moves(GridDims{1, 3}, "RL"); }) == Errc::revisit);
  CHECK(code_of([] { from_moves(GridDims{1, 3}, "RU"); }) == Errc::out_of_bounds);
  CHECK(code_of([] { from_moves(GridDims{3, 3}, "RRDDLLUR"); }) == Errc::wrong_terminal);
  CHECK(code_of([] { from_moves(GridDims{3, 3}, "RRDLL"); }) == Errc::parse_error);
  CHECK(code_of([] { from_moves(GridDims{3, 3}, "RRDLLDRX"); }) == Errc::parse_error);
}

TEST_CASE("validate accepts and rejects edge sets") {
  // 1x2: the single horizontal edge.
  EdgeSet tiny(GridDims{1, 2});
  tiny.set_horiz(0, 0, true);
  CHECK(to_moves(HamPath::validate(tiny)) == "R");

  // 3x3 boustrophedon by explicit edges.
  EdgeSet b(GridDims{3, 3});
  for (int y = 0; y < 3; ++y)
    for (int x = 0; x < 2; ++x) b.set_horiz(x, y, true);
  b.set_vert(2, 0, true);
  b.set_vert(0, 1, true);
  CHECK(to_moves(HamPath::validate(b)) == "RRDLLDRR");

  // 4-cycle plus 4-path covering 3x3 minus center fails connectivity-wise:
  // a square 4-cycle around the center plus an L path through the rest has
  // degree faults, so build the documented shape: path s..t of 5 vertices
  // along the boundary, plus a 4-cycle in the remaining block.
  EdgeSet c(GridDims{3, 3});
  // path: (0,0)-(1,0)-(2,0)-(2,1)-(2,2)
  c.set_horiz(0, 0, true);
  c.set_horiz(1, 0, true);
  c.set_vert(2, 0, true);
  c.set_vert(2, 1, true);
  // cycle: (0,1)-(1,1)-(1,2)-(0,2)-(0,1)
  c.set_horiz(0, 1, true);
  c.set_vert(1, 1, true);
  c.set_horiz(0, 2, true);
  c.set_vert(0, 1, true);
  CHECK(code_of([&] { HamPath::validate(c); }) == Errc::disconnected);

  // Degree violation: a T junction.
  EdgeSet t(GridDims{2, 3});
  t.set_horiz(0, 0, true);
  t.set_horiz(1, 0, true);
  t.set_vert(1, 0, true);
  t.set_horiz(0, 1, true);
  t.set_horiz(1, 1, true);
  CHECK(code_of([&] { HamPath::validate(t); }) == Errc::degree_violation);

  // Wrong endpoints: path from s to (0,1) on a 2x2 grid.
  EdgeSet w(GridDims{2, 2});
  w.set_horiz(0, 0, true);
  w.set_vert(1, 0, true);
  w.set_horiz(0, 1, true);
  CHECK(code_of([&] { HamPath::validate(w); }) == Errc::wrong_endpoints);
}

TEST_CASE("1x1 degenerate path") {
  EdgeSet e(GridDims{1, 1});
  const HamPath p = HamPath::validate(e);
  CHECK(to_moves(p).empty());
  CHECK(p.order().size() == 1);
}

TEST_CASE("rotate180 fixes the canonical boustrophedon") {
  const HamPath ew = from_moves(GridDims{3, 3}, "RRDLLDRR");
  CHECK(rotate180(ew) == ew);
  const HamPath ns = from_moves(GridDims{3, 3}, "DDRUURDD");
  CHECK(rotate180(ns) == ns);
}

TEST_CASE("transpose maps column filling to row filling") {
  // N-S canonical on 5x3 -> E-W canonical on 3x5.
  const HamPath ns = from_moves(GridDims{5, 3}, "DDDDRUUUURDDDD");
  const HamPath t = transpose(ns);
  CHECK(t.dims() == GridDims{3, 5});
  CHECK(to_moves(t) == "RRRRDLLLLDRRRR");
}

TEST_CASE("involutions and simplicity preservation over enumerated paths") {
  for (GridDims d : {GridDims{4, 5}, GridDims{3, 4}}) {
    for (const auto& p : enumerate_st_hamiltonian(d)) {
      CHECK(rotate180(rotate180(p)) == p);
      CHECK(transpose(transpose(p)) == p);
      CHECK(p.edges().count() == d.size() - 1);
      const bool s = is_simple(p);
      CHECK(is_simple(rotate180(p)) == s);
      CHECK(is_simple(transpose(p)) == s);
      CHECK(from_moves(d, to_moves(p)) == p);
    }
  }
}

TEST_CASE("rotate180 swaps the alpha/beta visit order") {
  for (const auto& p : enumerate_st_hamiltonian(GridDims{4, 5})) {
    const Vertex alpha = corner_alpha(p.dims()), beta = corner_beta(p.dims());
    const bool a_first = p.position(alpha) < p.position(beta);
    const HamPath r = rotate180(p);
    const bool a_first_r = r.position(corner_alpha(r.dims())) < r.position(corner_beta(r.dims()));
    CHECK(a_first == a_first_r);  // rotation preserves the order; reversal flips it back
  }
}
