#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gridpath/analysis.hpp"
#include "gridpath/oracle.hpp"
#include "gridpath/reconfig.hpp"
#include "gridpath/render.hpp"
#include "gridpath/trace_io.hpp"

using namespace gridpath;

namespace {

// 0 success, 2 parse error, 3 validation failure, 4 no simple path,
// 5 cap exceeded.
int exit_code(Errc c) {
  switch (c) {
    case Errc::parse_error: return 2;
    case Errc::no_simple_path:
    case Errc::no_such_canonical: return 4;
    case Errc::cap_exceeded: return 5;
    default: return 3;
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) fail(Errc::parse_error, "cannot write " + path);
  out << content;
}

int cmd_validate(const std::string& file, bool report, bool show, bool draw) {
  const HamPath path = read_path_file_at(file);
  const auto dec = decompose(path);
  const bool simple = is_simple(path, dec);
  int cookies = 0, corner_cookies = 0;
  for (const auto& p : dec.parts) {
    if (p.kind == SubpathKind::corner_cookie)
      ++corner_cookies;
    else if (p.is_cookie())
      ++cookies;
  }
  std::cout << "dims: " << path.dims().rows << "x" << path.dims().cols << "\n"
            << "hamiltonian: yes\n"
            << "simple: " << (simple ? "yes" : "no") << "\n"
            << "form: " << form_name(classify_form(path)) << "\n"
            << "alpha-first: " << (visits_alpha_first(path) ? "yes" : "no") << "\n"
            << "separators: j=" << dec.mu_count << " k=" << dec.eta_count
            << " l=" << dec.nu_count << "\n"
            << "cookies: " << cookies << " (+" << corner_cookies << " corner)\n";
  if (report) std::cout << decomposition_report(dec);
  RenderSpec rs;
  if (draw) std::cout << render(path, rs);
  if (show) {
    rs.show = RenderSpec::Show::decomposition;
    std::cout << render(path, rs);
  }
  return simple ? 0 : 3;
}

int cmd_reconfigure(const std::string& from_file, const std::string& to_file,
                    const std::string& trace_out, const std::string& render_dir,
                    const std::string& format) {
  const HamPath from = read_path_file_at(from_file);
  const HamPath to = read_path_file_at(to_file);
  const SwitchTrace trace = reconfigure(from, to);
  if (!trace_out.empty()) write_file(trace_out, write_trace_file(trace));
  std::cout << "switches: " << trace.switch_count() << "\n"
            << "bound(5mn/4): " << 5 * from.dims().size() / 4 << "\n";
  if (!render_dir.empty()) {
    std::filesystem::create_directories(render_dir);
    RenderSpec rs;
    rs.format = format == "svg" ? RenderSpec::Format::svg : RenderSpec::Format::ascii;
    auto emit = [&](int step, const HamPath& p, std::optional<Vertex> mark) {
      char name[32];
      std::snprintf(name, sizeof name, "step_%04d.%s", step,
                    rs.format == RenderSpec::Format::svg ? "svg" : "txt");
      rs.show = mark ? RenderSpec::Show::trace_step : RenderSpec::Show::path;
      rs.switched_center = mark;
      write_file(render_dir + "/" + name, render(p, rs));
    };
    emit(0, from, {});
    EdgeSet state = from.edges();
    int step = 0;
    for (const auto& op : trace.ops) {
      if (op.kind != TraceOp::Kind::switch_rec) {
        HamPath p = HamPath::validate(state);
        state = op.kind == TraceOp::Kind::rot180 ? rotate180(p).edges() : transpose(p).edges();
        continue;
      }
      for (const Edge& e : op.rec.removed) state.set(e, false);
      for (const Edge& e : op.rec.added) state.set(e, true);
      emit(++step, HamPath::validate(state), op.rec.center);
    }
  }
  return 0;
}

int cmd_hpgraph(int m, int n, const std::string& export_file, bool force) {
  EnumOptions opt;
  opt.force = force;
  const HPGraph g = build_hp_graph(GridDims{m, n}, opt);
  const GraphStats st = graph_stats(g, !g.nodes.empty());
  std::cout << "nodes: " << g.nodes.size() << "\n"
            << "edges: " << g.edges.size() << "\n"
            << "components: " << st.components << "\n"
            << "diameter: " << st.diameter << "\n";
  if (st.ns_ew_distance >= 0) std::cout << "ns-ew distance: " << st.ns_ew_distance << "\n";
  std::cout << "max algorithm trace: " << st.max_algo_trace << "\n";
  if (!export_file.empty()) write_file(export_file, export_edge_list(g));
  return 0;
}

int cmd_enumerate(int m, int n, bool simple_only, bool list, bool force) {
  EnumOptions opt;
  opt.force = force;
  const auto paths = simple_only ? enumerate_simple(GridDims{m, n}, opt)
                                 : enumerate_st_hamiltonian(GridDims{m, n}, opt);
  std::cout << paths.size() << "\n";
  if (list)
    for (const auto& p : paths) std::cout << to_moves(p) << "\n";
  return 0;
}

int cmd_replay(const std::string& trace_file, const std::string& from_file) {
  const HamPath from = read_path_file_at(from_file);
  const SwitchTrace trace = read_trace_file_at(trace_file);
  const HamPath result = replay(trace, from);
  std::cout << to_moves(result) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reconfiguration of simple corner-to-corner Hamiltonian paths in grid graphs"};
  app.require_subcommand(1);

  std::string file, from_file, to_file, trace_out, render_dir, export_file;
  std::string format = "ascii";
  int m = 0, n = 0;
  bool report = false, show = false, draw = false, force = false, simple_only = false,
       list = false;

  auto* validate = app.add_subcommand("validate", "Validate and classify a path file");
  validate->add_option("file", file)->required();
  validate->add_flag("--report", report, "print the full decomposition");
  validate->add_flag("--show", show, "draw the path with a decomposition overlay");
  validate->add_flag("--draw", draw, "draw the plain path");

  auto* reconfigure = app.add_subcommand("reconfigure", "Reconfigure one simple path to another");
  reconfigure->add_option("from", from_file)->required();
  reconfigure->add_option("to", to_file)->required();
  reconfigure->add_option("--trace", trace_out, "write the replayable trace here");
  reconfigure->add_option("--render", render_dir, "write per-step renders to this directory");
  reconfigure->add_option("--format", format)->check(CLI::IsMember({"ascii", "svg"}));

  auto* hpgraph = app.add_subcommand("hpgraph", "Build the Hamiltonian path graph");
  hpgraph->add_option("m", m)->required();
  hpgraph->add_option("n", n)->required();
  hpgraph->add_option("--export", export_file, "write the edge list here");
  hpgraph->add_flag("--force", force, "override the enumeration cap");

  auto* enumerate = app.add_subcommand("enumerate", "Count s,t Hamiltonian paths");
  enumerate->add_option("m", m)->required();
  enumerate->add_option("n", n)->required();
  enumerate->add_flag("--simple-only", simple_only);
  enumerate->add_flag("--list", list);
  enumerate->add_flag("--force", force, "override the enumeration cap");

  auto* replay = app.add_subcommand("replay", "Apply a trace file to a start path");
  replay->add_option("trace", trace_out)->required();
  replay->add_option("from", from_file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int r = app.exit(e);
    return r == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(file, report, show, draw);
    if (reconfigure->parsed())
      return cmd_reconfigure(from_file, to_file, trace_out, render_dir, format);
    if (hpgraph->parsed()) return cmd_hpgraph(m, n, export_file, force);
    if (enumerate->parsed()) return cmd_enumerate(m, n, simple_only, list, force);
    if (replay->parsed()) return cmd_replay(trace_out, from_file);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
