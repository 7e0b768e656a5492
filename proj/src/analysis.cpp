#include "gridpath/analysis.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace gridpath {

namespace {

enum class Side { N, S, E, W, none };

// Boundary side of a non-corner boundary vertex. Internal-subpath endpoints
// are never grid corners (corners have no internal neighbors).
Side single_side(GridDims d, Vertex v) {
  const bool w = v.x == 0, e = v.x == d.cols - 1, n = v.y == 0, s = v.y == d.rows - 1;
  const int hits = int(w) + int(e) + int(n) + int(s);
  if (hits != 1) return Side::none;
  if (w) return Side::W;
  if (e) return Side::E;
  if (n) return Side::N;
  return Side::S;
}

bool opposite(Side a, Side b) {
  return (a == Side::N && b == Side::S) || (a == Side::S && b == Side::N) ||
         (a == Side::E && b == Side::W) || (a == Side::W && b == Side::E);
}

}  // namespace

const char* kind_name(SubpathKind k) {
  switch (k) {
    case SubpathKind::cookie_n: return "CookieN";
    case SubpathKind::cookie_s: return "CookieS";
    case SubpathKind::cookie_e: return "CookieE";
    case SubpathKind::cookie_w: return "CookieW";
    case SubpathKind::corner_cookie: return "CornerCookie";
    case SubpathKind::corner_sep_mu: return "CornerSepMu";
    case SubpathKind::corner_sep_nu: return "CornerSepNu";
    case SubpathKind::straight_sep: return "StraightSep";
    case SubpathKind::unclassifiable: return "Unclassifiable";
  }
  return "?";
}

const char* form_name(PathForm f) {
  switch (f) {
    case PathForm::canonical_ew: return "Canonical_EW";
    case PathForm::canonical_ns: return "Canonical_NS";
    case PathForm::almost_canonical: return "AlmostCanonical";
    case PathForm::general_simple: return "GeneralSimple";
    case PathForm::not_simple: return "NotSimple";
  }
  return "?";
}

SubpathDecomposition decompose(const HamPath& path) {
  const GridDims d = path.dims();
  const auto& ord = path.order();
  SubpathDecomposition out;
  if (d.rows < 3 || d.cols < 3) return out;  // no internal vertices

  size_t i = 0;
  while (i < ord.size()) {
    if (!is_internal(d, ord[i])) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < ord.size() && is_internal(d, ord[j])) ++j;
    // Internal run ord[i..j-1]; endpoints ord[i-1], ord[j] on the boundary.
    InternalSubpath part;
    part.entry = ord[i - 1];
    part.exit = ord[j];
    part.internal_count = static_cast<int>(j - i);
    std::vector<Vertex> bends;
    for (size_t k = i; k < j; ++k) {
      const int dx1 = ord[k].x - ord[k - 1].x, dy1 = ord[k].y - ord[k - 1].y;
      const int dx2 = ord[k + 1].x - ord[k].x, dy2 = ord[k + 1].y - ord[k].y;
      if (dx1 != dx2 || dy1 != dy2) bends.push_back(ord[k]);
    }
    part.bends = static_cast<int>(bends.size());

    const Side se = single_side(d, part.entry);
    const Side sx = single_side(d, part.exit);
    if (se == Side::none || sx == Side::none) {
      part.kind = SubpathKind::unclassifiable;  // cannot happen on valid paths
    } else if (se == sx) {
      if (part.bends == 2) {
        part.kind = se == Side::N   ? SubpathKind::cookie_n
                    : se == Side::S ? SubpathKind::cookie_s
                    : se == Side::E ? SubpathKind::cookie_e
                                    : SubpathKind::cookie_w;
        // Arms run between the shared boundary and the bend line; their
        // common length is the cookie size.
        part.size = se == Side::N || se == Side::S ? std::abs(bends[0].y - part.entry.y)
                                                   : std::abs(bends[0].x - part.entry.x);
      } else {
        part.kind = SubpathKind::unclassifiable;
      }
    } else if (opposite(se, sx)) {
      part.kind = part.bends == 0 ? SubpathKind::straight_sep : SubpathKind::unclassifiable;
    } else {
      if (part.bends != 1) {
        part.kind = SubpathKind::unclassifiable;
      } else {
        part.bend = bends[0];
        const bool cuts_s = (se == Side::W || se == Side::N) && (sx == Side::W || sx == Side::N);
        const bool cuts_t = (se == Side::E || se == Side::S) && (sx == Side::E || sx == Side::S);
        if (cuts_s) {
          const Vertex s = corner_s(d);
          const Vertex won = part.entry.x == 0 ? part.entry : part.exit;  // endpoint on W
          const Vertex non = part.entry.y == 0 ? part.entry : part.exit;  // endpoint on N
          if (segment_on_path(path, {s, won}) || segment_on_path(path, {s, non}))
            part.kind = SubpathKind::corner_cookie;
          else
            part.kind = SubpathKind::corner_sep_mu;
        } else if (cuts_t) {
          const Vertex t = corner_t(d);
          const Vertex eon = part.entry.x == d.cols - 1 ? part.entry : part.exit;
          const Vertex son = part.entry.y == d.rows - 1 ? part.entry : part.exit;
          if (segment_on_path(path, {t, eon}) || segment_on_path(path, {t, son}))
            part.kind = SubpathKind::corner_cookie;
          else
            part.kind = SubpathKind::corner_sep_nu;
        } else {
          // One-bend subpath cutting off alpha or beta; impossible in an
          // s,t Hamiltonian path.
          part.kind = SubpathKind::unclassifiable;
        }
      }
    }

    switch (part.kind) {
      case SubpathKind::corner_sep_mu: part.index = ++out.mu_count; break;
      case SubpathKind::corner_sep_nu: part.index = ++out.nu_count; break;
      case SubpathKind::straight_sep: part.index = ++out.eta_count; break;
      default: break;
    }
    out.parts.push_back(std::move(part));
    i = j;
  }
  return out;
}

bool is_simple(const HamPath& path, const SubpathDecomposition& d) {
  (void)path;
  return std::all_of(d.parts.begin(), d.parts.end(), [](const InternalSubpath& p) {
    return p.kind != SubpathKind::unclassifiable;
  });
}

bool is_simple(const HamPath& path) { return is_simple(path, decompose(path)); }

bool visits_alpha_first(const HamPath& path) {
  return path.position(corner_alpha(path.dims())) <= path.position(corner_beta(path.dims()));
}

SeparatorPack separator_pack(const SubpathDecomposition& d) {
  SeparatorPack pack;
  for (const auto& p : d.parts) {
    if (p.kind != SubpathKind::straight_sep) continue;
    const bool horizontal = p.entry.y == p.exit.y;
    if (pack.lines.empty()) pack.horizontal = horizontal;
    pack.lines.push_back(horizontal ? p.entry.y : p.entry.x);
  }
  std::sort(pack.lines.begin(), pack.lines.end());
  return pack;
}

PathForm classify_form(const HamPath& path) {
  const GridDims d = path.dims();
  bool canonical = true;
  for (int y = 1; y < d.rows - 1 && canonical; ++y) {
    for (int x = 1; x < d.cols - 1; ++x) {
      const bool h = path.edges().horiz(x - 1, y) || path.edges().horiz(x, y);
      const bool v = path.edges().vert(x, y - 1) || path.edges().vert(x, y);
      if (h && v) {  // perpendicular edges meet at an internal vertex
        canonical = false;
        break;
      }
    }
  }
  if (canonical) {
    if (path.order().size() < 2) return PathForm::canonical_ew;  // 1x1
    const bool first_horizontal = path.order()[1].y == 0;
    return first_horizontal ? PathForm::canonical_ew : PathForm::canonical_ns;
  }

  const auto dec = decompose(path);
  if (!is_simple(path, dec)) return PathForm::not_simple;
  const auto pack = separator_pack(dec);
  if (pack.empty()) return PathForm::general_simple;
  // Almost canonical: the separator pack reaches to within two lines of both
  // boundaries it runs between, which forces the leftover slabs to be
  // covered by unit-size boundary cookies (and corner cookies).
  const int limit = pack.horizontal ? d.rows : d.cols;
  if (pack.lines.front() <= 2 && pack.lines.back() >= limit - 3)
    return PathForm::almost_canonical;
  return PathForm::general_simple;
}

std::string decomposition_report(const SubpathDecomposition& d) {
  std::ostringstream os;
  for (const auto& p : d.parts) {
    os << kind_name(p.kind) << ' ' << to_string(p.entry) << ' ' << to_string(p.exit);
    if (p.bend) os << " bend=" << to_string(*p.bend);
    if (p.is_cookie() && p.kind != SubpathKind::corner_cookie) os << " size=" << p.size;
    os << '\n';
  }
  return os.str();
}

}  // namespace gridpath
