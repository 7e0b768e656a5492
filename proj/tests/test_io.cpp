#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "gridpath/analysis.hpp"
#include "gridpath/oracle.hpp"
#include "gridpath/reconfig.hpp"
#include "gridpath/render.hpp"
#include "gridpath/trace_io.hpp"

using namespace gridpath;

TEST_CASE("path file round trip") {
  const HamPath p = make_canonical(GridDims{3, 5}, CanonicalKind::ew);
  std::istringstream in(write_path_file(p));
  CHECK(read_path_file(in) == p);
}

TEST_CASE("path file diagnostics carry positions") {
  std::istringstream bad_dims("3\nRR\n");
  CHECK_THROWS_WITH_AS(read_path_file(bad_dims, "f"), doctest::Contains("f:1"), Error);
  std::istringstream bad_char("1 3\nRX\n");
  CHECK_THROWS_WITH_AS(read_path_file(bad_char, "f"), doctest::Contains("column 2"), Error);
  std::istringstream bad_len("2 3\nRRD\n");
  CHECK_THROWS_AS(read_path_file(bad_len, "f"), Error);
}

TEST_CASE("trace file round trip, transforms and reversals included") {
  const GridDims d{5, 6};
  const auto paths = enumerate_simple(d);
  const auto tr = reconfigure(paths[3], paths[11], CheckLevel::full);
  const std::string text = write_trace_file(tr);
  std::istringstream in(text);
  const SwitchTrace parsed = read_trace_file(in);
  CHECK(parsed.initial == tr.initial);
  CHECK(parsed.final == tr.final);
  REQUIRE(parsed.ops.size() == tr.ops.size());
  for (size_t i = 0; i < parsed.ops.size(); ++i) {
    CHECK(parsed.ops[i].kind == tr.ops[i].kind);
    if (parsed.ops[i].kind == TraceOp::Kind::switch_rec) {
      CHECK(parsed.ops[i].rec.center == tr.ops[i].rec.center);
      CHECK(parsed.ops[i].rec.reverse == tr.ops[i].rec.reverse);
      CHECK(parsed.ops[i].rec.removed == tr.ops[i].rec.removed);
      CHECK(parsed.ops[i].rec.added == tr.ops[i].rec.added);
    }
  }
  CHECK(replay(parsed, paths[3]) == paths[11]);
  // Serialization is stable.
  CHECK(write_trace_file(parsed) == text);
}

TEST_CASE("corrupted trace files are rejected") {
  const GridDims d{5, 5};
  const auto ns = make_canonical(d, CanonicalKind::ns);
  const auto ew = make_canonical(d, CanonicalKind::ew);
  const auto tr = reconfig_canonical_to_canonical(ns, ew);
  std::string text = write_trace_file(tr);

  // Tamper with a record center.
  std::string bad = text;
  const auto pos = bad.find("\n1 1 ");
  REQUIRE(pos != std::string::npos);
  bad.replace(pos, 5, "\n2 1 ");
  std::istringstream in(bad);
  CHECK_THROWS_AS(read_trace_file(in), Error);

  // Truncate the op list: final no longer reached.
  std::string cut = text.substr(0, text.rfind("1 3 row"));
  std::istringstream in2(cut);
  CHECK_THROWS_AS(read_trace_file(in2), Error);
}

TEST_CASE("ascii render shows the path and the marked square") {
  const HamPath p = from_moves(GridDims{3, 3}, "RRDLLDRR");
  const std::string art = render_ascii(p, Vertex{1, 1});
  CHECK(art.find('s') == 0);
  CHECK(art.find('t') != std::string::npos);
  CHECK(art.find('*') != std::string::npos);
  // 2m-1 lines of 2n-1 characters.
  CHECK(std::count(art.begin(), art.end(), '\n') == 5);

  const std::string svg = render_svg(p, Vertex{1, 1});
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("rect") != std::string::npos);
}
