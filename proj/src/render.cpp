#include "gridpath/render.hpp"

#include <sstream>

namespace gridpath {

std::string render_ascii(const HamPath& path, std::optional<Vertex> mark_center) {
  const GridDims d = path.dims();
  const int H = 2 * d.rows - 1, W = 2 * d.cols - 1;
  std::vector<std::string> canvas(static_cast<size_t>(H), std::string(static_cast<size_t>(W), ' '));
  for (int y = 0; y < d.rows; ++y)
    for (int x = 0; x < d.cols; ++x) canvas[static_cast<size_t>(2 * y)][static_cast<size_t>(2 * x)] = '+';
  for (int y = 0; y < d.rows; ++y)
    for (int x = 0; x + 1 < d.cols; ++x)
      if (path.edges().horiz(x, y)) canvas[static_cast<size_t>(2 * y)][static_cast<size_t>(2 * x + 1)] = '-';
  for (int x = 0; x < d.cols; ++x)
    for (int y = 0; y + 1 < d.rows; ++y)
      if (path.edges().vert(x, y)) canvas[static_cast<size_t>(2 * y + 1)][static_cast<size_t>(2 * x)] = '|';
  canvas[0][0] = 's';
  canvas[static_cast<size_t>(H - 1)][static_cast<size_t>(W - 1)] = 't';
  if (mark_center) {
    const int cy = 2 * mark_center->y, cx = 2 * mark_center->x;
    for (int dy = -1; dy <= 1; dy += 2)
      for (int dx = -1; dx <= 1; dx += 2) {
        const int yy = cy + dy, xx = cx + dx;
        if (yy >= 0 && yy < H && xx >= 0 && xx < W) canvas[static_cast<size_t>(yy)][static_cast<size_t>(xx)] = '*';
      }
  }
  std::string out;
  for (const auto& row : canvas) {
    out += row;
    out += '\n';
  }
  return out;
}

std::string render_ascii_decomposition(const HamPath& path) {
  std::string art = render_ascii(path);
  const GridDims d = path.dims();
  const int W = 2 * d.cols - 1;
  const auto& ord = path.order();
  const auto dec = decompose(path);
  auto glyph = [](SubpathKind k) {
    switch (k) {
      case SubpathKind::straight_sep: return '#';
      case SubpathKind::corner_sep_mu: return 'm';
      case SubpathKind::corner_sep_nu: return 'v';
      case SubpathKind::corner_cookie: return 'k';
      case SubpathKind::unclassifiable: return '?';
      default: return 'c';
    }
  };
  // Recover each part's internal vertices from the traversal order.
  size_t part = 0;
  for (size_t i = 0; i < ord.size() && part < dec.parts.size(); ++i) {
    if (!is_internal(d, ord[i])) continue;
    size_t j = i;
    while (j < ord.size() && is_internal(d, ord[j])) ++j;
    for (size_t k = i; k < j; ++k)
      art[static_cast<size_t>(2 * ord[k].y) * (W + 1) + 2 * ord[k].x] =
          glyph(dec.parts[part].kind);
    ++part;
    i = j;
  }
  return art;
}

std::string render_svg(const HamPath& path, std::optional<Vertex> mark_center) {
  const GridDims d = path.dims();
  const int unit = 24, pad = 16;
  const int W = pad * 2 + unit * (d.cols - 1);
  const int H = pad * 2 + unit * (d.rows - 1);
  auto px = [&](int x) { return pad + x * unit; };
  auto py = [&](int y) { return pad + y * unit; };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
     << "\" viewBox=\"0 0 " << W << ' ' << H << "\">\n";
  if (mark_center) {
    os << "  <rect x=\"" << px(mark_center->x - 1) << "\" y=\"" << py(mark_center->y - 1)
       << "\" width=\"" << 2 * unit << "\" height=\"" << 2 * unit
       << "\" fill=\"#ffe08a\" stroke=\"#d99a00\"/>\n";
  }
  os << "  <g stroke=\"#1f4fd8\" stroke-width=\"3\" stroke-linecap=\"round\">\n";
  for (int y = 0; y < d.rows; ++y)
    for (int x = 0; x + 1 < d.cols; ++x)
      if (path.edges().horiz(x, y))
        os << "    <line x1=\"" << px(x) << "\" y1=\"" << py(y) << "\" x2=\"" << px(x + 1)
           << "\" y2=\"" << py(y) << "\"/>\n";
  for (int x = 0; x < d.cols; ++x)
    for (int y = 0; y + 1 < d.rows; ++y)
      if (path.edges().vert(x, y))
        os << "    <line x1=\"" << px(x) << "\" y1=\"" << py(y) << "\" x2=\"" << px(x)
           << "\" y2=\"" << py(y + 1) << "\"/>\n";
  os << "  </g>\n  <g fill=\"#222\">\n";
  for (int y = 0; y < d.rows; ++y)
    for (int x = 0; x < d.cols; ++x)
      os << "    <circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"3\"/>\n";
  os << "  </g>\n";
  os << "  <circle cx=\"" << px(0) << "\" cy=\"" << py(0) << "\" r=\"6\" fill=\"#0a8a0a\"/>\n";
  os << "  <circle cx=\"" << px(d.cols - 1) << "\" cy=\"" << py(d.rows - 1)
     << "\" r=\"6\" fill=\"#c22\"/>\n";
  os << "</svg>\n";
  return os.str();
}

std::string render(const HamPath& path, const RenderSpec& spec) {
  const auto mark =
      spec.show == RenderSpec::Show::trace_step ? spec.switched_center : std::nullopt;
  if (spec.format == RenderSpec::Format::svg) return render_svg(path, mark);
  if (spec.show == RenderSpec::Show::decomposition) return render_ascii_decomposition(path);
  return render_ascii(path, mark);
}

}  // namespace gridpath
