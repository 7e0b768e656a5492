#pragma once

#include <vector>

#include "gridpath/grid.hpp"
#include "gridpath/switching.hpp"
#include "gridpath/zip.hpp"

namespace gridpath {

enum class Phase { step_a, step_b, step_c, canonical_sweep, reversed_tail, normalize };

const char* phase_name(Phase p);

/// One trace entry: a frame transform or a square-switch, tagged with the
/// algorithm phase that produced it.
struct TraceOp {
  enum class Kind { rot180, transpose, switch_rec };
  Kind kind = Kind::switch_rec;
  Phase phase = Phase::step_a;
  SwitchRecord rec;  // meaningful when kind == switch_rec
};

/// Replayable reconfiguration run. Applying ops in order to `initial`
/// (transforms included) yields `final`; switch records never exceed
/// 5*m*n/4.
struct SwitchTrace {
  HamPath initial;
  HamPath final;
  std::vector<TraceOp> ops;

  int switch_count() const;
};

enum class CanonicalKind { ew, ns };

/// The boustrophedon path filling rows (ew, m odd) or columns (ns, n odd).
/// Raises no_such_canonical when parity forbids the kind.
HamPath make_canonical(GridDims dims, CanonicalKind kind);

/// Steps (a)-(c): any simple path to a canonical path of the same grid, in
/// at most floor(m*n/2) switches, every intermediate simple. The returned
/// trace ends in the original frame. Raises not_simple.
SwitchTrace reconfig_to_canonical(const HamPath& path, CheckLevel check = CheckLevel::full);

/// Canonical to canonical in at most floor(m*n/4) switches (empty when the
/// kinds agree). Raises dims_mismatch / structure_violation.
SwitchTrace reconfig_canonical_to_canonical(const HamPath& from, const HamPath& to,
                                            CheckLevel check = CheckLevel::full);

/// Full reconfiguration: to-canonical, canonical sweep, reversed tail; at
/// most floor(5*m*n/4) switches. The trace is replay-verified before it is
/// returned. Raises dims_mismatch, not_simple, no_simple_path.
SwitchTrace reconfigure(const HamPath& from, const HamPath& to,
                        CheckLevel check = CheckLevel::full);

/// Applies the trace to `start`. Every record must be a valid square-switch
/// of the current path with exactly the recorded exchange; in full mode
/// every intermediate is validated and checked simple.
/// Raises replay_divergence.
HamPath replay(const SwitchTrace& trace, const HamPath& start,
               CheckLevel check = CheckLevel::full);

/// Replay that collects the path after every switch, mapped back to the
/// frame of `start` (inverting any transforms applied so far).
std::vector<HamPath> replay_collect(const SwitchTrace& trace, const HamPath& start);

}  // namespace gridpath
