#pragma once

#include <iosfwd>
#include <string>

#include "gridpath/grid.hpp"
#include "gridpath/reconfig.hpp"

namespace gridpath {

/// Path file: first line "m n", second line the move string.
HamPath read_path_file(std::istream& in, const std::string& name = "<input>");
HamPath read_path_file_at(const std::string& filename);
std::string write_path_file(const HamPath& path);

/// Trace file: header "m n", initial and final move strings, then one line
/// per op: "ROT180", "TRANSPOSE", or
/// "center_x center_y orientation zipline_index direction".
std::string write_trace_file(const SwitchTrace& trace);
SwitchTrace read_trace_file(std::istream& in, const std::string& name = "<input>");
SwitchTrace read_trace_file_at(const std::string& filename);

std::string record_line(const SwitchRecord& rec);

}  // namespace gridpath
