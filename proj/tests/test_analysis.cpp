#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "gridpath/analysis.hpp"
#include "gridpath/oracle.hpp"
#include "gridpath/reconfig.hpp"

using namespace gridpath;

namespace {

// Almost canonical 5x5 path with one unit W cookie, one unit E cookie, and
// corner cookies at both ends of the separator in column 2.
const char* kAlmost5x5 = "RDLDRDLDRRUUUURRDLDRDLDR";

int count_kind(const SubpathDecomposition& d, SubpathKind k) {
  return static_cast<int>(
      std::count_if(d.parts.begin(), d.parts.end(),
                    [&](const InternalSubpath& p) { return p.kind == k; }));
}

}  // namespace

TEST_CASE("canonical 5x5 decomposes into three straight separators") {
  const HamPath p = make_canonical(GridDims{5, 5}, CanonicalKind::ew);
  const auto d = decompose(p);
  CHECK(d.eta_count == 3);
  CHECK(d.mu_count == 0);
  CHECK(d.nu_count == 0);
  for (const auto& part : d.parts) CHECK(part.kind == SubpathKind::straight_sep);
  CHECK(is_simple(p, d));
}

TEST_CASE("3x3 DDRUURDD has one straight separator in column 1") {
  const HamPath p = from_moves(GridDims{3, 3}, "DDRUURDD");
  const auto d = decompose(p);
  REQUIRE(d.parts.size() == 1);
  CHECK(d.parts[0].kind == SubpathKind::straight_sep);
  CHECK(d.parts[0].entry.x == 1);
  CHECK(d.parts[0].exit.x == 1);
}

TEST_CASE("a three-bend internal subpath is unclassifiable") {
  // First non-simple Hamiltonian path of the 5x5 enumeration.
  for (const auto& p : enumerate_st_hamiltonian(GridDims{5, 5})) {
    if (is_simple(p)) continue;
    const auto d = decompose(p);
    CHECK(count_kind(d, SubpathKind::unclassifiable) > 0);
    CHECK_FALSE(is_simple(p, d));
    return;
  }
  FAIL("5x5 should contain non-simple Hamiltonian paths");
}

TEST_CASE("almost canonical 5x5 fixture decomposes as expected") {
  const HamPath p = from_moves(GridDims{5, 5}, kAlmost5x5);
  const auto d = decompose(p);
  CHECK(d.eta_count == 1);
  CHECK(count_kind(d, SubpathKind::cookie_w) == 1);
  CHECK(count_kind(d, SubpathKind::cookie_e) == 1);
  CHECK(count_kind(d, SubpathKind::corner_cookie) == 2);
  for (const auto& part : d.parts) {
    if (part.kind == SubpathKind::cookie_w || part.kind == SubpathKind::cookie_e)
      CHECK(part.size == 1);
  }
  CHECK(classify_form(p) == PathForm::almost_canonical);
}

TEST_CASE("visits_alpha_first on canonical paths") {
  // Walking the boustrophedons: the E-W canonical runs along row 0 first and
  // meets beta early; the N-S canonical dives down column 0 to alpha.
  CHECK_FALSE(visits_alpha_first(make_canonical(GridDims{3, 5}, CanonicalKind::ew)));
  CHECK_FALSE(visits_alpha_first(make_canonical(GridDims{5, 5}, CanonicalKind::ew)));
  CHECK(visits_alpha_first(make_canonical(GridDims{5, 5}, CanonicalKind::ns)));
  CHECK(visits_alpha_first(make_canonical(GridDims{5, 3}, CanonicalKind::ns)));
  // Degenerate cases: alpha == s on one-row grids.
  CHECK(visits_alpha_first(from_moves(GridDims{1, 4}, "RRR")));
  CHECK(visits_alpha_first(HamPath::validate(EdgeSet(GridDims{1, 1}))));
}

TEST_CASE("classify_form across the forms") {
  CHECK(classify_form(make_canonical(GridDims{3, 5}, CanonicalKind::ew)) ==
        PathForm::canonical_ew);
  CHECK(classify_form(make_canonical(GridDims{5, 3}, CanonicalKind::ns)) ==
        PathForm::canonical_ns);
  CHECK(classify_form(from_moves(GridDims{1, 4}, "RRR")) == PathForm::canonical_ew);
  CHECK(classify_form(from_moves(GridDims{5, 5}, kAlmost5x5)) == PathForm::almost_canonical);

  // Combed rows 0-1 over a column boustrophedon: the transpose is exactly
  // the clean-west unit-east-cookie shape, so this is almost canonical.
  const HamPath g = from_moves(GridDims{4, 5}, "RRRRDLLLLDDRURDRURD");
  CHECK(is_simple(g));
  CHECK(classify_form(g) == PathForm::almost_canonical);

  // Separator stuck at column 3 with size-2 W cookies: general simple.
  const HamPath big_w = from_moves(GridDims{5, 5}, "RRDLLDRRDLLDRRRUUUURDDDD");
  CHECK(is_simple(big_w));
  CHECK(classify_form(big_w) == PathForm::general_simple);

  // Separator in column 1 whose east side carries size-2 E cookies:
  // general simple as well.
  const HamPath big_e = from_moves(GridDims{5, 5}, "DDDDRUUUURRRDLLDRRDLLDRR");
  CHECK(is_simple(big_e));
  const auto pack = separator_pack(decompose(big_e));
  CHECK(pack.lines == std::vector<int>{1});
  CHECK(classify_form(big_e) == PathForm::general_simple);

  // Non-simple paths classify as such.
  for (const auto& p : enumerate_st_hamiltonian(GridDims{4, 5})) {
    if (!is_simple(p)) {
      CHECK(classify_form(p) == PathForm::not_simple);
      break;
    }
  }
}

TEST_CASE("degenerate grids have empty decompositions and are simple") {
  for (const char* mv : {"RRR", "DRURD"}) {
    const GridDims d = mv[0] == 'R' ? GridDims{1, 4} : GridDims{2, 3};
    const HamPath p = from_moves(d, mv);
    CHECK(decompose(p).parts.empty());
    CHECK(is_simple(p));
  }
}

TEST_CASE("k is odd and subpaths partition the internal vertices") {
  for (GridDims d : {GridDims{3, 4}, GridDims{4, 5}, GridDims{5, 5}, GridDims{3, 7}}) {
    for (const auto& p : enumerate_simple(d)) {
      const auto dec = decompose(p);
      CHECK(dec.eta_count % 2 == 1);
      int internal = 0;
      for (const auto& part : dec.parts) internal += part.internal_count;
      CHECK(internal == (d.rows - 2) * (d.cols - 2));
    }
    // The partition property holds for every Hamiltonian path.
    for (const auto& p : enumerate_st_hamiltonian(d)) {
      const auto dec = decompose(p);
      int internal = 0;
      for (const auto& part : dec.parts) internal += part.internal_count;
      CHECK(internal == (d.rows - 2) * (d.cols - 2));
    }
  }
}

TEST_CASE("is_simple agrees with the oracle bend counter") {
  for (GridDims d : {GridDims{4, 5}, GridDims{5, 5}}) {
    for (const auto& p : enumerate_st_hamiltonian(d))
      CHECK(is_simple(p) == simple_by_bend_count(p));
  }
}

TEST_CASE("separator pack is consecutive and parallel on simple paths") {
  for (const auto& p : enumerate_simple(GridDims{5, 6})) {
    const auto pack = separator_pack(decompose(p));
    CHECK_FALSE(pack.empty());
    CHECK(pack.consecutive());
  }
}

TEST_CASE("decomposition report is line oriented") {
  const auto d = decompose(from_moves(GridDims{5, 5}, kAlmost5x5));
  const auto report = decomposition_report(d);
  CHECK(report.find("StraightSep") != std::string::npos);
  CHECK(report.find("CookieW") != std::string::npos);
  CHECK(report.find("size=1") != std::string::npos);
  CHECK(std::count(report.begin(), report.end(), '\n') == static_cast<long>(d.parts.size()));
}
