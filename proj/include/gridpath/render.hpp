#pragma once

#include <optional>
#include <string>

#include "gridpath/analysis.hpp"
#include "gridpath/grid.hpp"
#include "gridpath/switching.hpp"

namespace gridpath {

/// Box-drawing of the path on a (2m-1) x (2n-1) character canvas; y grows
/// downward. s and t are labeled; an optional square center marks the four
/// cells touched by a switch.
std::string render_ascii(const HamPath& path, std::optional<Vertex> mark_center = {});

/// Path render with each internal vertex tagged by the kind of its internal
/// subpath: '#' straight separator, 'm'/'v' corner separators, 'c' cookies,
/// 'k' corner cookies, '?' unclassifiable.
std::string render_ascii_decomposition(const HamPath& path);

struct RenderSpec {
  enum class Format { ascii, svg };
  enum class Show { path, trace_step, decomposition };

  Format format = Format::ascii;
  Show show = Show::path;
  std::optional<Vertex> switched_center;  // for trace_step
};

std::string render(const HamPath& path, const RenderSpec& spec);

/// Minimal standalone SVG. The marked square, when given, is highlighted.
std::string render_svg(const HamPath& path, std::optional<Vertex> mark_center = {});

}  // namespace gridpath
