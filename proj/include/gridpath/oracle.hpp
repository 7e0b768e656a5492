#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gridpath/grid.hpp"

namespace gridpath {

struct EnumOptions {
  int cap = 36;          // maximum vertex count without force
  bool force = false;    // override the cap (hard limit 64 vertices)
  bool parallel = true;  // use the OpenMP kernel when available
};

/// All s,t Hamiltonian paths of the grid, ordered lexicographically by move
/// string. Raises cap_exceeded when rows*cols > cap and force is off.
std::vector<HamPath> enumerate_st_hamiltonian(GridDims dims, const EnumOptions& opt = {});

/// Serial reference for the enumeration kernel; same contract and order.
std::vector<HamPath> enumerate_st_hamiltonian_serial(GridDims dims, const EnumOptions& opt = {});

/// enumerate_st_hamiltonian filtered by is_simple. Every kept or dropped
/// path is cross-checked against an independent bend counter; disagreement
/// raises structure_violation.
std::vector<HamPath> enumerate_simple(GridDims dims, const EnumOptions& opt = {});

/// Independent simplicity decision, re-derived from the raw vertex sequence
/// with no use of the decomposition machinery.
bool simple_by_bend_count(const HamPath& path);

/// The Hamiltonian path graph: one node per simple path, one edge per
/// square-switch relating two simple paths.
struct HPGraph {
  GridDims dims;
  std::vector<std::string> nodes;            // move strings, lexicographic
  std::vector<HamPath> paths;                // parallel to nodes
  std::vector<std::pair<int, int>> edges;    // a < b, sorted, unique
  std::vector<std::vector<int>> adj;

  int node_index(const std::string& moves) const;  // -1 if absent
};

HPGraph build_hp_graph(GridDims dims, const EnumOptions& opt = {});
HPGraph build_hp_graph_serial(GridDims dims, const EnumOptions& opt = {});

std::vector<int> bfs_distances(const HPGraph& g, int from);

struct GraphStats {
  int components = 0;
  int diameter = 0;        // max finite eccentricity; 0 for empty/singleton graphs
  int max_degree = 0;
  std::vector<int> degree_histogram;
  int max_algo_trace = 0;  // longest reconfigure trace over ordered node pairs
  int ns_ew_distance = -1; // BFS distance between the two canonical nodes, -1 if absent
};

/// Exact stats by BFS from every node. When with_pairs is set, also runs the
/// reconfiguration algorithm over all ordered pairs and reports the longest
/// trace. parallel selects the OpenMP kernels.
GraphStats graph_stats(const HPGraph& g, bool with_pairs = false, bool parallel = true);

/// Edge list export, one "moves_u moves_v" line per edge.
std::string export_edge_list(const HPGraph& g);

}  // namespace gridpath
