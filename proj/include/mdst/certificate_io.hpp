#pragma once

#include <string>
#include <vector>

#include "mdst/driver.hpp"
#include "mdst/graph.hpp"
#include "mdst/spanning_tree.hpp"

namespace mdst {

// Certificates travel as a JSON object with keys bound, clean_components,
// eps, h, k, layers, n (serialized with sorted keys, so output is
// byte-deterministic). Malformed documents raise BadHeader.
std::string certificate_to_json(const LowerBoundCertificate& cert);
LowerBoundCertificate certificate_from_json(const std::string& text);
LowerBoundCertificate load_certificate(const std::string& path);
void save_certificate(const LowerBoundCertificate& cert, const std::string& path);

// Tree files: one "u v" line per tree edge, ascending edge-id order. Loading
// maps each line back to a graph edge id (BadHeader when a line is not an
// edge of the graph) and validates the result as a spanning tree.
std::string tree_to_text(const SpanningTree& t);
std::vector<int> tree_edge_ids_from_text(const Graph& g, const std::string& text);
SpanningTree load_tree(const Graph& g, const std::string& path);
void save_tree(const SpanningTree& t, const std::string& path);

// The solve command's stdout: n, m, eps_user, seed, tree_degree, phase,
// degred_calls, modifications, wall_ms, timed_out, and certificate_bound
// when a certificate was produced.
std::string solve_report_json(const Graph& g, const RunConfig& cfg, const RunResult& result);

// Whole-file helpers shared by the command-line tool.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace mdst
