#pragma once

#include <optional>
#include <vector>

#include "gridpath/grid.hpp"

namespace gridpath {

// Classification of an internal subpath by its endpoint boundaries and bend
// count. Unclassifiable marks any shape with more bends than the minimum for
// its endpoint pair; a path containing one is not simple.
enum class SubpathKind {
  cookie_n,
  cookie_s,
  cookie_e,
  cookie_w,
  corner_cookie,
  corner_sep_mu,   // one bend, cuts off s
  corner_sep_nu,   // one bend, cuts off t
  straight_sep,
  unclassifiable,
};

const char* kind_name(SubpathKind k);

struct InternalSubpath {
  SubpathKind kind = SubpathKind::unclassifiable;
  Vertex entry;                 // first endpoint met along the path
  Vertex exit;
  std::optional<Vertex> bend;   // the single bend of a corner separator / corner cookie
  int size = 0;                 // cookies: common length of the two parallel segments
  int index = 0;                // ordinal within its kind, in traversal order (1-based)
  int bends = 0;
  int internal_count = 0;       // number of internal vertices covered

  bool is_cookie() const {
    return kind == SubpathKind::cookie_n || kind == SubpathKind::cookie_s ||
           kind == SubpathKind::cookie_e || kind == SubpathKind::cookie_w ||
           kind == SubpathKind::corner_cookie;
  }
};

struct SubpathDecomposition {
  std::vector<InternalSubpath> parts;  // in order of first visit along P
  int mu_count = 0;   // j
  int eta_count = 0;  // k
  int nu_count = 0;   // l
};

/// All maximal internal subpaths of the path in traversal order, classified.
/// Never throws; unclassifiable parts are reported as such.
SubpathDecomposition decompose(const HamPath& path);

/// True iff every internal subpath has the minimum bend count for its
/// endpoint boundaries (0 opposite, 1 adjacent, 2 same). Vacuously true when
/// the grid has no internal vertices.
bool is_simple(const HamPath& path);
bool is_simple(const HamPath& path, const SubpathDecomposition& d);

/// True iff the s->t order reaches alpha (bottom-left) no later than beta
/// (top-right). On a 1x1 grid alpha == beta and the result is true.
bool visits_alpha_first(const HamPath& path);

enum class PathForm {
  canonical_ew,
  canonical_ns,
  almost_canonical,
  general_simple,
  not_simple,
};

const char* form_name(PathForm f);

/// Canonical: no bends at internal vertices. Almost canonical: simple, not
/// canonical, with the separator pack pinned to both ends of its band
/// (x(eta_1) <= 2 and x(eta_k) >= n-3 for N-S separators, rows likewise),
/// which forces unit-size cookies on the uncovered boundaries.
PathForm classify_form(const HamPath& path);

/// Straight separators as grid lines. For a simple path all separators are
/// parallel; `horizontal` tells whether they are E-W rows.
struct SeparatorPack {
  bool horizontal = false;
  std::vector<int> lines;  // sorted ascending (column or row indices)

  bool empty() const { return lines.empty(); }
  bool consecutive() const {
    return lines.empty() || lines.back() - lines.front() + 1 == static_cast<int>(lines.size());
  }
};

SeparatorPack separator_pack(const SubpathDecomposition& d);

/// Line-oriented report, one subpath per line: "kind entry exit [bend] [size]".
std::string decomposition_report(const SubpathDecomposition& d);

}  // namespace gridpath
