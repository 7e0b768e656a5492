#include "gridpath/reconfig.hpp"

#include <algorithm>
#include <array>

#include "gridpath/analysis.hpp"

namespace gridpath {

const char* phase_name(Phase p) {
  switch (p) {
    case Phase::step_a: return "StepA";
    case Phase::step_b: return "StepB";
    case Phase::step_c: return "StepC";
    case Phase::canonical_sweep: return "CanonicalSweep";
    case Phase::reversed_tail: return "ReversedTail";
    case Phase::normalize: return "Normalize";
  }
  return "?";
}

int SwitchTrace::switch_count() const {
  int c = 0;
  for (const auto& op : ops)
    if (op.kind == TraceOp::Kind::switch_rec) ++c;
  return c;
}

HamPath make_canonical(GridDims dims, CanonicalKind kind) {
  if (dims.rows < 1 || dims.cols < 1) fail(Errc::parse_error, "bad dims");
  EdgeSet e(dims);
  if (kind == CanonicalKind::ew) {
    if (dims.rows % 2 == 0)
      fail(Errc::no_such_canonical, "E-W canonical needs an odd row count");
    for (int y = 0; y < dims.rows; ++y)
      for (int x = 0; x + 1 < dims.cols; ++x) e.set_horiz(x, y, true);
    for (int y = 0; y + 1 < dims.rows; ++y)
      e.set_vert(y % 2 == 0 ? dims.cols - 1 : 0, y, true);
  } else {
    if (dims.cols % 2 == 0)
      fail(Errc::no_such_canonical, "N-S canonical needs an odd column count");
    for (int x = 0; x < dims.cols; ++x)
      for (int y = 0; y + 1 < dims.rows; ++y) e.set_vert(x, y, true);
    for (int x = 0; x + 1 < dims.cols; ++x)
      e.set_horiz(x, x % 2 == 0 ? dims.rows - 1 : 0, true);
  }
  return HamPath::validate(std::move(e));
}

namespace {

bool is_canonical_form(PathForm f) {
  return f == PathForm::canonical_ew || f == PathForm::canonical_ns;
}

// Working state of a reconfiguration run: the mutable edge set plus the
// frame transforms applied so far.
struct Driver {
  EdgeSet edges;
  CheckLevel check;
  std::vector<TraceOp> ops;
  bool transposed = false;
  int rot_parity = 0;

  explicit Driver(const HamPath& p, CheckLevel c) : edges(p.edges()), check(c) {}

  HamPath snapshot() const { return HamPath::validate(edges); }

  void push_transform(TraceOp::Kind kind, Phase phase) {
    HamPath p = snapshot();
    if (kind == TraceOp::Kind::rot180) {
      edges = rotate180(p).edges();
      rot_parity ^= 1;
    } else {
      edges = transpose(p).edges();
      transposed = !transposed;
    }
    TraceOp op;
    op.kind = kind;
    op.phase = phase;
    ops.push_back(op);
  }

  void append_records(std::vector<SwitchRecord>&& recs, Phase phase) {
    for (auto& r : recs) {
      TraceOp op;
      op.kind = TraceOp::Kind::switch_rec;
      op.phase = phase;
      op.rec = std::move(r);
      ops.push_back(op);
    }
  }

  // Closes the frame so the final path lives on the original grid.
  void normalize_frame() {
    if (rot_parity) push_transform(TraceOp::Kind::rot180, Phase::normalize);
    if (transposed) push_transform(TraceOp::Kind::transpose, Phase::normalize);
  }
};

// Column of the first straight separator met along the path, plus the pack.
struct PackView {
  std::vector<int> cols;
  int front() const { return cols.front(); }
  int back() const { return cols.back(); }
};

PackView current_pack(const HamPath& p) {
  const auto dec = decompose(p);
  const auto pack = separator_pack(dec);
  if (pack.empty()) fail(Errc::structure_violation, "expected straight separators");
  if (pack.horizontal) fail(Errc::structure_violation, "expected N-S separators");
  if (!pack.consecutive()) fail(Errc::structure_violation, "separator pack not consecutive");
  return PackView{pack.lines};
}

// True when column x is covered by one full vertical run of path edges.
bool column_is_separator(const EdgeSet& e, int x) {
  for (int y = 0; y + 1 < e.dims().rows; ++y)
    if (!e.vert(x, y)) return false;
  return true;
}

void run_s_to_n_fast(EdgeSet& e, int X, int lo, int hi, std::vector<SwitchRecord>& recs) {
  const GridDims d = e.dims();
  const Zipline lz = make_zipline(d, Orientation::col, X - 2, 'N');
  for (int r = lo; r >= hi; r -= 2) {
    const Square sq(d, Vertex{X - 2, r}, lz);
    if (!is_switchable_square_fast(e, sq))
      fail(Errc::not_switchable, "fast S->N switch check failed at row " + std::to_string(r));
    recs.push_back(apply_square_switch(e, sq));
  }
}

// One S->N zip at the current x(eta_1) = X. Full mode goes through the
// public zip with all assertions; fast mode scans the frame off the bit
// vectors directly.
void zip_sn_once(Driver& drv, int X, Phase phase) {
  if (drv.check == CheckLevel::full) {
    HamPath cur = drv.snapshot();
    ZipResult zr = zip_s_to_n(cur, CheckLevel::full);
    drv.edges = zr.path.edges();
    drv.append_records(std::move(zr.records), phase);
    return;
  }
  EdgeSet& e = drv.edges;
  const GridDims d = e.dims();
  if (!column_is_separator(e, X))
    fail(Errc::structure_violation, "x(eta_1) tracking diverged at column " + std::to_string(X));
  // hi: bottom of the vertical segment hanging from (Col(-1), 0).
  int hi = 1;
  while (hi <= d.rows - 2 && e.vert(X - 1, hi)) ++hi;
  if (hi > d.rows - 2) fail(Errc::structure_violation, "Col(-1) segment reaches S");
  // lo: read up lz from q1; the first non-edge ends the S-side structure.
  int lo = d.rows - 2;
  while (lo >= 1 && e.vert(X - 2, lo)) --lo;
  if (lo < 1 || lo < hi || (lo - hi) % 2 != 0)
    fail(Errc::structure_violation, "delta segment scan failed on lz");
  std::vector<SwitchRecord> recs;
  run_s_to_n_fast(e, X, lo, hi, recs);
  drv.append_records(std::move(recs), phase);
}

}  // namespace

SwitchTrace reconfig_to_canonical(const HamPath& path, CheckLevel check) {
  if (!is_simple(path)) fail(Errc::not_simple, "reconfiguration requires a simple path");
  if (is_canonical_form(classify_form(path))) return SwitchTrace{path, path, {}};

  Driver drv(path, check);

  // Orientation: the zips want N-S separators.
  {
    HamPath p = drv.snapshot();
    const auto dec = decompose(p);
    const auto pack = separator_pack(dec);
    if (pack.empty())
      fail(Errc::structure_violation, "non-canonical simple path without separators");
    if (pack.horizontal) drv.push_transform(TraceOp::Kind::transpose, Phase::step_a);
  }
  if (!visits_alpha_first(drv.snapshot()))
    drv.push_transform(TraceOp::Kind::rot180, Phase::step_a);

  PackView pack = current_pack(drv.snapshot());
  const int n = drv.edges.dims().cols;

  // Step (a): zip S->N, shifting the zipline two columns west per zip.
  for (int x1 = pack.front(); x1 >= 3; x1 -= 2) zip_sn_once(drv, x1, Phase::step_a);

  // Step (b): same from the other end, after a half turn.
  if (pack.back() < n - 3) {
    drv.push_transform(TraceOp::Kind::rot180, Phase::step_b);
    if (check == CheckLevel::full && !visits_alpha_first(drv.snapshot()))
      fail(Errc::structure_violation, "rotated path visits beta before alpha");
    for (int x1 = n - 1 - pack.back(); x1 >= 3; x1 -= 2) zip_sn_once(drv, x1, Phase::step_b);
  }

  // Step (c): comb rows downward while the remainder is almost canonical.
  {
    HamPath p3 = drv.snapshot();
    if (!is_canonical_form(classify_form(p3))) {
      const GridDims d = p3.dims();
      if (d.rows % 2 == 0)
        fail(Errc::structure_violation, "almost canonical remainder on an even row count");
      std::vector<int> cols = detail::subgrid_pack_columns(drv.edges, 0, check);
      for (int top = 0; d.rows - top >= 3; top += 2) {
        if (check == CheckLevel::full) {
          const auto sub_cols = detail::subgrid_pack_columns(drv.edges, top, check);
          if (sub_cols != cols)
            fail(Errc::structure_violation, "separator pack drifted during Step (c)");
        }
        std::vector<SwitchRecord> recs;
        detail::zip_w_to_e_rows(drv.edges, top, cols, check, recs);
        drv.append_records(std::move(recs), Phase::step_c);
      }
    }
  }

  drv.normalize_frame();
  HamPath fin = drv.snapshot();
  SwitchTrace trace{path, fin, std::move(drv.ops)};
  if (!is_canonical_form(classify_form(fin)))
    fail(Errc::structure_violation, "reconfig_to_canonical did not reach a canonical path");
  if (trace.switch_count() > path.dims().size() / 2)
    fail(Errc::structure_violation, "to-canonical switch bound exceeded");
  return trace;
}

SwitchTrace reconfig_canonical_to_canonical(const HamPath& from, const HamPath& to,
                                            CheckLevel check) {
  if (!(from.dims() == to.dims())) fail(Errc::dims_mismatch, "grids differ");
  const PathForm ff = classify_form(from), ft = classify_form(to);
  if (!is_canonical_form(ff) || !is_canonical_form(ft))
    fail(Errc::structure_violation, "both endpoints must be canonical");
  if (ff == ft) {
    if (!(from == to)) fail(Errc::structure_violation, "canonical paths of one kind must agree");
    return SwitchTrace{from, to, {}};
  }

  Driver drv(from, check);
  if (ff == PathForm::canonical_ew)
    drv.push_transform(TraceOp::Kind::transpose, Phase::canonical_sweep);

  const GridDims d = drv.edges.dims();
  std::vector<int> cols(static_cast<size_t>(d.cols - 2));
  for (int x = 1; x <= d.cols - 2; ++x) cols[static_cast<size_t>(x - 1)] = x;
  for (int top = 0; d.rows - top >= 3; top += 2) {
    std::vector<SwitchRecord> recs;
    detail::zip_w_to_e_rows(drv.edges, top, cols, check, recs);
    drv.append_records(std::move(recs), Phase::canonical_sweep);
  }
  drv.normalize_frame();

  HamPath fin = drv.snapshot();
  if (!(fin == to)) fail(Errc::structure_violation, "canonical sweep missed the target");
  SwitchTrace trace{from, to, std::move(drv.ops)};
  if (trace.switch_count() > from.dims().size() / 4)
    fail(Errc::structure_violation, "canonical-to-canonical switch bound exceeded");
  return trace;
}

namespace {

std::array<Edge, 4> sorted_edges(std::array<Edge, 4> a) {
  std::sort(a.begin(), a.end());
  return a;
}

// The exchange a switch of `sq` would perform, without touching the path.
void square_exchange(const Square& sq, std::array<Edge, 4>& removed,
                     std::array<Edge, 4>& added) {
  const bool vertical_pair = sq.zipline().orient == Orientation::row;
  const Cell far = sq.far_cell_side_track();
  const Cell near = sq.near_cell_main_track();
  if (vertical_pair) {
    removed = {far.left(), far.right(), near.left(), near.right()};
    added = {far.top(), far.bottom(), near.top(), near.bottom()};
  } else {
    removed = {far.top(), far.bottom(), near.top(), near.bottom()};
    added = {far.left(), far.right(), near.left(), near.right()};
  }
}

bool switchable_for(const EdgeSet& edges, const Square& sq, CheckLevel check) {
  if (check == CheckLevel::full) return is_switchable_square(HamPath::validate(edges), sq);
  return is_switchable_square_fast(edges, sq);
}

// Reverses a to-canonical trace into ops that run from trace.final back to
// trace.initial. Each reversed record undoes one recorded square-switch;
// the forward switch must be valid on the path the undo restores.
std::vector<TraceOp> reversed_tail_ops(const SwitchTrace& trace, CheckLevel check) {
  std::vector<TraceOp> out;
  EdgeSet state = trace.final.edges();
  for (auto it = trace.ops.rbegin(); it != trace.ops.rend(); ++it) {
    if (it->kind != TraceOp::Kind::switch_rec) {
      HamPath p = HamPath::validate(state);
      state = it->kind == TraceOp::Kind::rot180 ? rotate180(p).edges() : transpose(p).edges();
      TraceOp op;
      op.kind = it->kind;
      op.phase = Phase::reversed_tail;
      out.push_back(op);
      continue;
    }
    SwitchRecord rev;
    rev.center = it->rec.center;
    rev.zipline = it->rec.zipline;
    rev.removed = it->rec.added;
    rev.added = it->rec.removed;
    rev.reverse = true;
    for (const Edge& e : rev.removed)
      if (!state.has(e)) fail(Errc::replay_divergence, "reversed tail lost an edge to remove");
    for (const Edge& e : rev.added)
      if (state.has(e)) fail(Errc::replay_divergence, "reversed tail would duplicate an edge");
    for (const Edge& e : rev.removed) state.set(e, false);
    for (const Edge& e : rev.added) state.set(e, true);
    // The restored path must admit the recorded forward switch.
    const Square sq(state.dims(), rev.center, rev.zipline);
    if (!switchable_for(state, sq, check))
      fail(Errc::replay_divergence,
           "reversed record at " + to_string(rev.center) +
               " does not correspond to a valid square-switch");
    if (check == CheckLevel::full) {
      HamPath p = HamPath::validate(state);
      if (!is_simple(p)) fail(Errc::structure_violation, "reversed tail broke simplicity");
    }
    TraceOp op;
    op.kind = TraceOp::Kind::switch_rec;
    op.phase = Phase::reversed_tail;
    op.rec = std::move(rev);
    out.push_back(op);
  }
  if (!(state == trace.initial.edges()))
    fail(Errc::replay_divergence, "reversed tail did not return to its origin");
  return out;
}

}  // namespace

SwitchTrace reconfigure(const HamPath& from, const HamPath& to, CheckLevel check) {
  if (!(from.dims() == to.dims())) fail(Errc::dims_mismatch, "grids differ");
  if (from.dims().rows % 2 == 0 && from.dims().cols % 2 == 0)
    fail(Errc::no_simple_path, "grids with both dimensions even admit no simple s,t path");
  if (!is_simple(from) || !is_simple(to)) fail(Errc::not_simple, "both paths must be simple");
  if (from == to) return SwitchTrace{from, to, {}};

  SwitchTrace a = reconfig_to_canonical(from, check);
  SwitchTrace c = reconfig_to_canonical(to, check);
  SwitchTrace b = reconfig_canonical_to_canonical(a.final, c.final, check);

  std::vector<TraceOp> ops = std::move(a.ops);
  for (auto& op : b.ops) ops.push_back(std::move(op));
  for (auto& op : reversed_tail_ops(c, check)) ops.push_back(std::move(op));

  SwitchTrace trace{from, to, std::move(ops)};
  if (trace.switch_count() > 5 * from.dims().size() / 4)
    fail(Errc::structure_violation, "5|G|/4 switch bound exceeded");
  HamPath replayed = replay(trace, from, check);
  if (!(replayed == to)) fail(Errc::replay_divergence, "trace replay missed the target");
  return trace;
}

HamPath replay(const SwitchTrace& trace, const HamPath& start, CheckLevel check) {
  if (!(start == trace.initial)) fail(Errc::replay_divergence, "start differs from trace initial");
  EdgeSet state = start.edges();
  for (const auto& op : trace.ops) {
    if (op.kind != TraceOp::Kind::switch_rec) {
      HamPath p = HamPath::validate(state);
      state = op.kind == TraceOp::Kind::rot180 ? rotate180(p).edges() : transpose(p).edges();
      continue;
    }
    const Square sq(state.dims(), op.rec.center, op.rec.zipline);
    std::array<Edge, 4> rem, add;
    square_exchange(sq, rem, add);
    const auto frame_removed = sorted_edges(rem), frame_added = sorted_edges(add);
    if (op.rec.reverse) {
      // Undo of the frame's switch: the exchange runs backward and the
      // forward switch must hold on the restored path.
      if (frame_removed != sorted_edges(op.rec.added) ||
          frame_added != sorted_edges(op.rec.removed))
        fail(Errc::replay_divergence, "reversed record disagrees with its frame");
      for (const Edge& e : op.rec.removed)
        if (!state.has(e)) fail(Errc::replay_divergence, "reversed record misses an edge");
      for (const Edge& e : op.rec.added)
        if (state.has(e)) fail(Errc::replay_divergence, "reversed record would add a duplicate");
      for (const Edge& e : op.rec.removed) state.set(e, false);
      for (const Edge& e : op.rec.added) state.set(e, true);
      if (!switchable_for(state, sq, check))
        fail(Errc::replay_divergence, "reversed record at " + to_string(op.rec.center) +
                                          " does not correspond to a valid square-switch");
    } else {
      if (frame_removed != sorted_edges(op.rec.removed) ||
          frame_added != sorted_edges(op.rec.added))
        fail(Errc::replay_divergence, "record exchange disagrees with its frame");
      if (!switchable_for(state, sq, check))
        fail(Errc::replay_divergence,
             "record at " + to_string(op.rec.center) + " is not switchable here");
      apply_square_switch(state, sq);
    }
    if (check == CheckLevel::full) {
      HamPath p = HamPath::validate(state);
      if (!is_simple(p)) fail(Errc::replay_divergence, "replay produced a non-simple path");
    }
  }
  HamPath fin = HamPath::validate(std::move(state));
  if (!(fin == trace.final)) fail(Errc::replay_divergence, "replay ended off the trace final");
  return fin;
}

std::vector<HamPath> replay_collect(const SwitchTrace& trace, const HamPath& start) {
  std::vector<HamPath> out;
  EdgeSet state = start.edges();
  std::vector<TraceOp::Kind> transforms;
  for (const auto& op : trace.ops) {
    if (op.kind != TraceOp::Kind::switch_rec) {
      HamPath p = HamPath::validate(state);
      state = op.kind == TraceOp::Kind::rot180 ? rotate180(p).edges() : transpose(p).edges();
      transforms.push_back(op.kind);
      continue;
    }
    for (const Edge& e : op.rec.removed) state.set(e, false);
    for (const Edge& e : op.rec.added) state.set(e, true);
    HamPath mapped = HamPath::validate(state);
    for (auto it = transforms.rbegin(); it != transforms.rend(); ++it)
      mapped = *it == TraceOp::Kind::rot180 ? rotate180(mapped) : transpose(mapped);
    out.push_back(std::move(mapped));
  }
  return out;
}

}  // namespace gridpath
