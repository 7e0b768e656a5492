#include "gridpath/zip.hpp"

#include <algorithm>

namespace gridpath {

namespace {

// First straight separator along the path; asserts the vertical-pack shape
// shared by both zips.
struct PackInfo {
  SeparatorPack pack;
  int eta1_col = 0;  // column of the first separator met along P
};

PackInfo vertical_pack_info(const SubpathDecomposition& dec) {
  PackInfo info;
  info.pack = separator_pack(dec);
  if (info.pack.empty())
    fail(Errc::structure_violation, "path has no straight separators");
  if (info.pack.horizontal)
    fail(Errc::structure_violation, "separators are E-W; transpose before zipping");
  if (!info.pack.consecutive())
    fail(Errc::structure_violation, "separator columns are not consecutive");
  for (const auto& p : dec.parts) {
    if (p.kind == SubpathKind::straight_sep) {
      info.eta1_col = p.entry.x;
      break;
    }
  }
  if (info.eta1_col != info.pack.lines.front())
    fail(Errc::structure_violation, "first separator met is not the westmost");
  return info;
}

}  // namespace

Eta1Frame locate_eta1_frame(const HamPath& path) {
  const GridDims d = path.dims();
  const auto dec = decompose(path);
  if (!is_simple(path, dec)) fail(Errc::not_simple, "zip frame requires a simple path");
  if (!visits_alpha_first(path))
    fail(Errc::structure_violation, "path visits beta before alpha; rotate first");
  if (dec.eta_count == 0)
    fail(Errc::frame_unavailable, "no straight separators");
  const auto info = vertical_pack_info(dec);
  const int X = info.eta1_col;
  if (X < 3)
    fail(Errc::frame_unavailable,
         "x(eta_1) = " + std::to_string(X) + " < 3; treat the path as (almost) canonical");

  Eta1Frame frame;
  frame.eta1_col = X;
  frame.la_col = X - 1;
  frame.lz_col = X - 2;
  frame.lb_col = X - 3;

  const auto& e = path.edges();
  if (!e.horiz(X - 2, 0))
    fail(Errc::structure_violation, "missing N edge west of t(eta_1)");
  if (!e.vert(X - 1, 0))
    fail(Errc::structure_violation, "missing vertical segment below (Col(-1), 0)");
  int hi = 1;
  while (hi <= d.rows - 2 && e.vert(X - 1, hi)) ++hi;
  if (hi > d.rows - 2)
    fail(Errc::structure_violation, "vertical segment below (Col(-1), 0) reaches S");
  frame.hi_row = hi;
  for (int x = 0; x < X - 1; ++x)
    if (!e.horiz(x, hi))
      fail(Errc::structure_violation, "Row(hi) does not reach W from Col(-1)");

  // v(-1,hi) must be the bend of the last mu separator or of a corner cookie.
  const Vertex bend{X - 1, hi};
  bool ok = false;
  for (const auto& p : dec.parts) {
    if (p.bend && *p.bend == bend) {
      if (p.kind == SubpathKind::corner_cookie) ok = true;
      if (p.kind == SubpathKind::corner_sep_mu && p.index == dec.mu_count) ok = true;
      break;
    }
  }
  if (!ok)
    fail(Errc::structure_violation,
         "v(-1,hi) at " + to_string(bend) + " is neither b(mu_j) nor on a W corner cookie");
  return frame;
}

DeltaSegments find_delta_segments(const HamPath& path, const Eta1Frame& frame) {
  const GridDims d = path.dims();
  const auto& e = path.edges();
  const int X = frame.eta1_col;
  DeltaSegments ds;
  for (int y = d.rows - 2; y >= 1; --y) {
    bool full = true;
    for (int x = 0; x < X - 1; ++x) {
      if (!e.horiz(x, y)) {
        full = false;
        break;
      }
    }
    if (full) ds.rows.push_back(y);
  }
  if (ds.rows.empty()) fail(Errc::structure_violation, "no delta segments");
  ds.k_perp = static_cast<int>(ds.rows.size());
  ds.lo = ds.rows.front();
  ds.hi = ds.rows.back();
  if (ds.k_perp % 2 == 0)
    fail(Errc::structure_violation, "k_perp = " + std::to_string(ds.k_perp) + " is even");
  if (ds.lo - ds.hi + 1 != ds.k_perp)
    fail(Errc::structure_violation, "delta segment rows are not consecutive");
  if (ds.hi != frame.hi_row)
    fail(Errc::structure_violation, "topmost delta row disagrees with the frame");

  for (int y : ds.rows) {
    // Nodes internal to a delta segment carry no vertical path edges.
    for (int x = 1; x <= X - 2; ++x) {
      if ((y > 0 && e.vert(x, y - 1)) || (y < d.rows - 1 && e.vert(x, y)))
        fail(Errc::structure_violation,
             "vertical path edge at delta-internal node " + to_string(Vertex{x, y}));
    }
    const bool joined_above = e.vert(X - 1, y - 1);
    if (joined_above) {
      // Trichotomy for the node below.
      const int uy = y + 1;
      const bool is_delta = uy <= ds.lo && uy >= ds.hi;
      if (is_delta) continue;  // top corner of the next W cookie
      if (uy == d.rows - 1) {
        if (!e.horiz(X - 1, uy))
          fail(Errc::structure_violation, "node below delta run is off seg[alpha, s(eta_1)]");
        continue;
      }
      // Top-right corner of a unit-width S cookie in the main track.
      bool s_cookie = e.horiz(X - 2, uy);
      for (int yy = uy; s_cookie && yy <= d.rows - 2; ++yy)
        s_cookie = e.vert(X - 1, yy) && e.vert(X - 2, yy);
      if (!s_cookie)
        fail(Errc::structure_violation,
             "node below " + to_string(Vertex{X - 1, y}) +
                 " is neither a cookie corner nor on the south corridor");
    } else {
      // Upper arm of a W cookie: paired with the delta segment below.
      if (!e.vert(X - 1, y) || std::find(ds.rows.begin(), ds.rows.end(), y + 1) == ds.rows.end())
        fail(Errc::structure_violation,
             "unpaired delta segment at row " + std::to_string(y));
    }
  }
  return ds;
}

namespace {

void check_intermediate(const EdgeSet& edges, const char* what) {
  HamPath p = HamPath::validate(edges);
  if (!is_simple(p)) fail(Errc::structure_violation, std::string(what) + ": intermediate path not simple");
}

// Core of the S->N zip once the frame is known. Switches squares on
// lz = Col(X-2) at rows lo, lo-2, ..., hi.
int run_s_to_n(EdgeSet& edges, int X, int lo, int hi, CheckLevel check,
               std::vector<SwitchRecord>& records) {
  const GridDims d = edges.dims();
  const Zipline lz = make_zipline(d, Orientation::col, X - 2, 'N');
  int switched = 0;
  for (int r = lo; r >= hi; r -= 2) {
    const Square sq(d, Vertex{X - 2, r}, lz);
    if (check == CheckLevel::full) {
      HamPath cur = HamPath::validate(edges);
      if (!is_switchable_square(cur, sq))
        fail(Errc::not_switchable,
             "S->N square at row " + std::to_string(r) + " is unexpectedly not switchable");
    } else if (!is_switchable_square_fast(edges, sq)) {
      fail(Errc::not_switchable,
           "square sq at row " + std::to_string(r) + " fails the fast switch check");
    }
    records.push_back(apply_square_switch(edges, sq));
    ++switched;
    if (check == CheckLevel::full) check_intermediate(edges, "zip S->N");
  }
  return switched;
}

}  // namespace

ZipResult zip_s_to_n(const HamPath& path, CheckLevel check) {
  const Eta1Frame frame = locate_eta1_frame(path);
  const DeltaSegments ds = find_delta_segments(path, frame);
  const auto dec_before = decompose(path);

  EdgeSet edges = path.edges();
  ZipResult out{path, {}, 0};
  out.squares_switched = run_s_to_n(edges, frame.eta1_col, ds.lo, ds.hi, check, out.records);
  out.path = HamPath::validate(std::move(edges));

  if (out.squares_switched != (ds.k_perp + 1) / 2)
    fail(Errc::structure_violation, "S->N zip switch count off");
  if (check == CheckLevel::full) {
    const auto dec_after = decompose(out.path);
    if (!is_simple(out.path, dec_after)) fail(Errc::structure_violation, "zip output not simple");
    if (dec_after.eta_count != dec_before.eta_count + 2)
      fail(Errc::structure_violation, "S->N zip must add exactly 2 straight separators");
  }
  return out;
}

namespace detail {

HamPath extract_subgrid_path(const EdgeSet& edges, int top_row) {
  const GridDims d = edges.dims();
  EdgeSet sub(GridDims{d.rows - top_row, d.cols});
  for (int y = top_row; y < d.rows; ++y)
    for (int x = 0; x + 1 < d.cols; ++x)
      if (edges.horiz(x, y)) sub.set_horiz(x, y - top_row, true);
  for (int x = 0; x < d.cols; ++x)
    for (int y = top_row; y + 1 < d.rows; ++y)
      if (edges.vert(x, y)) sub.set_vert(x, y - top_row, true);
  return HamPath::validate(std::move(sub));
}

std::vector<int> subgrid_pack_columns(const EdgeSet& edges, int top_row, CheckLevel check) {
  const HamPath sub = extract_subgrid_path(edges, top_row);
  const GridDims sd = sub.dims();
  const auto dec = decompose(sub);
  if (!is_simple(sub, dec)) fail(Errc::structure_violation, "subgrid path not simple");
  const auto info = vertical_pack_info(dec);
  if (check == CheckLevel::full) {
    if (!visits_alpha_first(sub))
      fail(Errc::structure_violation, "subgrid path visits beta before alpha");
    if (info.pack.lines.front() > 2 || info.pack.lines.back() < sd.cols - 3)
      fail(Errc::not_almost_canonical,
           "subgrid separators span [" + std::to_string(info.pack.lines.front()) + "," +
               std::to_string(info.pack.lines.back()) + "], need x(eta_1)<=2 and x(eta_k)>=n-3");
  }
  return info.pack.lines;
}

void zip_w_to_e_rows(EdgeSet& edges, int top_row, const std::vector<int>& pack_cols,
                     CheckLevel check, std::vector<SwitchRecord>& records) {
  const GridDims d = edges.dims();
  if (pack_cols.empty() || pack_cols.size() % 2 == 0)
    fail(Errc::structure_violation, "W->E zip needs an odd separator count");
  const Zipline lz = make_zipline(d, Orientation::row, top_row + 1, 'E');
  for (size_t i = 0; i < pack_cols.size(); i += 2) {
    const Square sq(d, Vertex{pack_cols[i], top_row + 1}, lz);
    if (check == CheckLevel::full) {
      HamPath cur = HamPath::validate(edges);
      if (!is_switchable_square(cur, sq))
        fail(Errc::not_switchable, "W->E square sq(eta_" + std::to_string(i + 1) +
                                       ") is unexpectedly not switchable");
    } else if (!is_switchable_square_fast(edges, sq)) {
      fail(Errc::not_switchable,
           "square sq(eta_" + std::to_string(i + 1) + ") fails the fast switch check");
    }
    records.push_back(apply_square_switch(edges, sq));
    if (check == CheckLevel::full) check_intermediate(edges, "zip W->E");
  }
  if (check == CheckLevel::full) {
    // Terminal shape: la and lz must be two full segments joined at the
    // east end.
    for (int x = 0; x + 1 < d.cols; ++x)
      if (!edges.horiz(x, top_row) || !edges.horiz(x, top_row + 1))
        fail(Errc::structure_violation, "W->E zip did not straighten la and lz");
    if (!edges.vert(d.cols - 1, top_row))
      fail(Errc::structure_violation, "la and lz are not joined at the east end");
  }
}

}  // namespace detail

ZipResult zip_w_to_e(const HamPath& path, CheckLevel check) {
  const GridDims d = path.dims();
  const auto dec = decompose(path);
  if (!is_simple(path, dec)) fail(Errc::not_almost_canonical, "path is not simple");
  const PathForm form = classify_form(path);
  if (form == PathForm::canonical_ew || form == PathForm::canonical_ns)
    fail(Errc::not_almost_canonical, "path is already canonical");
  if (!visits_alpha_first(path))
    fail(Errc::not_almost_canonical, "path visits beta before alpha");
  const auto info = vertical_pack_info(dec);
  if (info.pack.lines.front() > 2 || info.pack.lines.back() < d.cols - 3)
    fail(Errc::not_almost_canonical,
         "separator pack is not pinned to both ends of the almost canonical band");

  EdgeSet edges = path.edges();
  ZipResult out{path, {}, 0};
  detail::zip_w_to_e_rows(edges, 0, info.pack.lines, check, out.records);
  out.squares_switched = static_cast<int>(out.records.size());
  out.path = HamPath::validate(std::move(edges));
  if (out.squares_switched != (static_cast<int>(info.pack.lines.size()) + 1) / 2)
    fail(Errc::structure_violation, "W->E zip switch count off");
  if (check == CheckLevel::full && !is_simple(out.path))
    fail(Errc::structure_violation, "W->E zip output not simple");
  return out;
}

}  // namespace gridpath
