#pragma once

#include <vector>

#include "gridpath/analysis.hpp"
#include "gridpath/grid.hpp"
#include "gridpath/switching.hpp"

namespace gridpath {

/// full: validate the path and re-check simplicity after every switch, and
/// run every structural assertion. fast: O(1) switch-site checks only; the
/// whole zip stays linear in the zipline length.
enum class CheckLevel { full, fast };

/// S->N zip frame around the first straight separator: la = Col(-1),
/// lz = Col(-2), lb = Col(-3), where Col(-1) is one column west of eta_1.
struct Eta1Frame {
  int eta1_col = 0;
  int la_col = 0;
  int lz_col = 0;
  int lb_col = 0;
  int hi_row = 0;  // lowest row of the vertical segment hanging from (la, 0)
};

/// Locates the S->N zip frame of a simple path that visits alpha before beta
/// and has vertical straight separators. Raises frame_unavailable when
/// x(eta_1) < 3, structure_violation when a structural invariant fails.
Eta1Frame locate_eta1_frame(const HamPath& path);

/// Rows of the maximal horizontal path segments running from the west
/// boundary to Col(-1), bottom-up: rows[0] is delta_1.
struct DeltaSegments {
  std::vector<int> rows;  // descending row index (delta_1 = bottom-most first)
  int k_perp = 0;
  int lo = 0;  // row of delta_1
  int hi = 0;  // row of delta_{k_perp}
};

/// Finds the delta segments and asserts their structure: k_perp odd, rows
/// consecutive, the trichotomy below each segment, and no vertical path
/// edges at segment-internal nodes. Raises structure_violation.
DeltaSegments find_delta_segments(const HamPath& path, const Eta1Frame& frame);

struct ZipResult {
  HamPath path;
  std::vector<SwitchRecord> records;
  int squares_switched = 0;
};

/// Switches squares sq_1, sq_3, ..., sq_{k_perp} on lz = Col(-2), bottom-up.
/// Afterwards the straight separator count has grown by 2 and x(eta_1) has
/// dropped by 2. Pre: simple, visits alpha before beta, neither canonical
/// nor almost canonical (x(eta_1) >= 3).
ZipResult zip_s_to_n(const HamPath& path, CheckLevel check = CheckLevel::full);

/// Switches squares sq(eta_1), sq(eta_3), ..., sq(eta_k) on lz = Row 1,
/// west to east. Pre: almost canonical (or canonical-like pack with
/// x(eta_1) <= 2 and x(eta_k) >= n-3), vertical separators, visits alpha
/// before beta. Raises not_almost_canonical.
ZipResult zip_w_to_e(const HamPath& path, CheckLevel check = CheckLevel::full);

namespace detail {

/// One W->E zip on the subgrid rows [top_row, m); switches land on full-grid
/// row top_row+1 at the given separator columns (odd pack positions). Used
/// by the reconfiguration driver; records are appended in full-grid
/// coordinates.
void zip_w_to_e_rows(EdgeSet& edges, int top_row, const std::vector<int>& pack_cols,
                     CheckLevel check, std::vector<SwitchRecord>& records);

/// Separator columns of the subgrid path on rows [top_row, m), via the
/// subgrid decomposition, with the W->E zip preconditions asserted.
std::vector<int> subgrid_pack_columns(const EdgeSet& edges, int top_row, CheckLevel check);

HamPath extract_subgrid_path(const EdgeSet& edges, int top_row);

}  // namespace detail

}  // namespace gridpath
