#include "gridpath/trace_io.hpp"

#include <fstream>
#include <sstream>

#include "gridpath/analysis.hpp"

namespace gridpath {

namespace {

[[noreturn]] void parse_fail(const std::string& name, int line, const std::string& msg) {
  fail(Errc::parse_error, name + ":" + std::to_string(line) + ": " + msg);
}

GridDims parse_dims_line(const std::string& s, const std::string& name, int line) {
  std::istringstream is(s);
  int m = 0, n = 0;
  if (!(is >> m >> n) || m < 1 || n < 1) parse_fail(name, line, "expected header \"m n\"");
  std::string rest;
  if (is >> rest) parse_fail(name, line, "trailing tokens after dims");
  return GridDims{m, n};
}

std::string get_line(std::istream& in, const std::string& name, int line) {
  std::string s;
  if (!std::getline(in, s)) parse_fail(name, line, "unexpected end of file");
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

}  // namespace

HamPath read_path_file(std::istream& in, const std::string& name) {
  const GridDims dims = parse_dims_line(get_line(in, name, 1), name, 1);
  std::string moves;
  if (dims.size() > 1) moves = get_line(in, name, 2);
  for (size_t i = 0; i < moves.size(); ++i) {
    const char c = moves[i];
    if (c != 'U' && c != 'D' && c != 'L' && c != 'R')
      parse_fail(name, 2, "bad move character '" + std::string(1, c) + "' at column " +
                              std::to_string(i + 1));
  }
  if (static_cast<int>(moves.size()) != dims.size() - 1)
    parse_fail(name, 2, "move string length " + std::to_string(moves.size()) + ", expected " +
                            std::to_string(dims.size() - 1));
  return from_moves(dims, moves);
}

HamPath read_path_file_at(const std::string& filename) {
  std::ifstream in(filename);
  if (!in) fail(Errc::parse_error, "cannot open " + filename);
  return read_path_file(in, filename);
}

std::string write_path_file(const HamPath& path) {
  return std::to_string(path.dims().rows) + " " + std::to_string(path.dims().cols) + "\n" +
         to_moves(path) + "\n";
}

std::string record_line(const SwitchRecord& rec) {
  std::ostringstream os;
  // Lowercase direction marks an undo of the named switch.
  const char dir = rec.zipline.direction_char();
  os << rec.center.x << ' ' << rec.center.y << ' '
     << (rec.zipline.orient == Orientation::row ? "row" : "col") << ' ' << rec.zipline.index
     << ' ' << static_cast<char>(rec.reverse ? dir - 'A' + 'a' : dir);
  return os.str();
}

std::string write_trace_file(const SwitchTrace& trace) {
  std::ostringstream os;
  os << trace.initial.dims().rows << ' ' << trace.initial.dims().cols << '\n';
  os << to_moves(trace.initial) << '\n';
  os << to_moves(trace.final) << '\n';
  for (const auto& op : trace.ops) {
    switch (op.kind) {
      case TraceOp::Kind::rot180: os << "ROT180\n"; break;
      case TraceOp::Kind::transpose: os << "TRANSPOSE\n"; break;
      case TraceOp::Kind::switch_rec: os << record_line(op.rec) << '\n'; break;
    }
  }
  return os.str();
}

SwitchTrace read_trace_file(std::istream& in, const std::string& name) {
  const GridDims dims = parse_dims_line(get_line(in, name, 1), name, 1);
  std::istringstream initial_line(get_line(in, name, 2));
  std::istringstream final_line(get_line(in, name, 3));
  std::string initial_moves, final_moves;
  initial_line >> initial_moves;
  final_line >> final_moves;
  if (dims.size() > 1 && (initial_moves.empty() || final_moves.empty()))
    parse_fail(name, 2, "missing initial/final move strings");

  HamPath initial = from_moves(dims, initial_moves);
  HamPath final_path = from_moves(dims, final_moves);

  // Records carry only the frame; rebind the edge exchanges by simulating
  // the ops from the initial path.
  std::vector<TraceOp> ops;
  EdgeSet state = initial.edges();
  std::string line;
  int lineno = 3;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    TraceOp op;
    if (line == "ROT180" || line == "TRANSPOSE") {
      op.kind = line == "ROT180" ? TraceOp::Kind::rot180 : TraceOp::Kind::transpose;
      HamPath p = HamPath::validate(state);
      state = op.kind == TraceOp::Kind::rot180 ? rotate180(p).edges() : transpose(p).edges();
      ops.push_back(op);
      continue;
    }
    std::istringstream is(line);
    int cx = 0, cy = 0, index = 0;
    std::string orient, rest;
    char dir = 0;
    if (!(is >> cx >> cy >> orient >> index >> dir) || (orient != "row" && orient != "col") ||
        (is >> rest))
      parse_fail(name, lineno, "bad record line: " + line);
    const bool reverse = dir >= 'a' && dir <= 'z';
    if (reverse) dir = static_cast<char>(dir - 'a' + 'A');
    try {
      const Zipline z = make_zipline(
          state.dims(), orient == "row" ? Orientation::row : Orientation::col, index, dir);
      const Square sq(state.dims(), Vertex{cx, cy}, z);
      op.kind = TraceOp::Kind::switch_rec;
      if (reverse) {
        SwitchRecord rec;
        rec.center = Vertex{cx, cy};
        rec.zipline = z;
        rec.reverse = true;
        // Undo the frame's exchange, then require the forward switch on the
        // restored path.
        EdgeSet probe = state;
        SwitchRecord fwd = apply_square_switch(probe, sq);
        rec.removed = fwd.added;
        rec.added = fwd.removed;
        for (const Edge& e : rec.removed)
          if (!state.has(e)) parse_fail(name, lineno, "undo removes a missing edge");
        for (const Edge& e : rec.added)
          if (state.has(e)) parse_fail(name, lineno, "undo duplicates an edge");
        for (const Edge& e : rec.removed) state.set(e, false);
        for (const Edge& e : rec.added) state.set(e, true);
        if (!is_switchable_square(HamPath::validate(state), sq))
          parse_fail(name, lineno, "undo does not correspond to a valid square-switch");
        op.rec = std::move(rec);
      } else {
        if (!is_switchable_square(HamPath::validate(state), sq))
          parse_fail(name, lineno, "recorded square is not switchable at this point");
        op.rec = apply_square_switch(state, sq);
      }
    } catch (const Error& e) {
      if (e.code() == Errc::parse_error) throw;
      parse_fail(name, lineno, e.what());
    }
    ops.push_back(op);
  }
  if (!(HamPath::validate(state) == final_path))
    fail(Errc::replay_divergence, name + ": ops do not lead to the recorded final path");
  return SwitchTrace{std::move(initial), std::move(final_path), std::move(ops)};
}

SwitchTrace read_trace_file_at(const std::string& filename) {
  std::ifstream in(filename);
  if (!in) fail(Errc::parse_error, "cannot open " + filename);
  return read_trace_file(in, filename);
}

}  // namespace gridpath
