#include "mdst/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <sstream>

namespace mdst {

Graph::Graph(int n) : n_(n) {
  if (n < 0) fail(ErrorKind::BadParams, "vertex count must be nonnegative");
  incident_.resize(n);
}

void Graph::check_vertex(int u) const {
  if (u < 0 || u >= n_) {
    fail(ErrorKind::IdOutOfRange,
         "vertex " + std::to_string(u) + " not in [0, " + std::to_string(n_) + ")");
  }
}

long long Graph::pair_key(int u, int v) const {
  int a = std::min(u, v), b = std::max(u, v);
  return static_cast<long long>(a) * n_ + b;
}

int Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) fail(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(u));
  if (has_edge(u, v)) {
    fail(ErrorKind::DuplicateEdge,
         "edge {" + std::to_string(u) + ", " + std::to_string(v) + "} already present");
  }
  int id = static_cast<int>(edges_.size());
  edges_.push_back({u, v});
  incident_[u].push_back(id);
  incident_[v].push_back(id);
  edge_ids_.emplace(pair_key(u, v), id);
  return id;
}

int Graph::edge_id(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return -1;
  auto it = edge_ids_.find(pair_key(u, v));
  return it == edge_ids_.end() ? -1 : it->second;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(n_, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int id : incident_[u]) {
      int w = other_endpoint(id, u);
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  return reached == n_;
}

namespace {

[[noreturn]] void parse_fail(ErrorKind kind, int line_no, const std::string& what) {
  fail(kind, "line " + std::to_string(line_no) + ": " + what);
}

struct RawLine {
  int line_no;
  std::string text;
};

std::vector<RawLine> significant_lines(std::istream& in) {
  std::vector<RawLine> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    // Strip trailing CR from CRLF inputs.
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    out.push_back({line_no, line});
  }
  return out;
}

Graph parse_dimacs(const std::vector<RawLine>& lines) {
  int n = -1, m = -1;
  int header_line = -1;
  std::size_t idx = 0;
  for (; idx < lines.size(); ++idx) {
    std::istringstream ss(lines[idx].text);
    std::string tag;
    ss >> tag;
    if (tag == "c") continue;
    if (tag == "p") {
      std::string kind;
      if (!(ss >> kind >> n >> m) || kind != "edge" || n < 0 || m < 0) {
        parse_fail(ErrorKind::BadHeader, lines[idx].line_no,
                   "expected `p edge <n> <m>`, got `" + lines[idx].text + "`");
      }
      header_line = lines[idx].line_no;
      ++idx;
      break;
    }
    parse_fail(ErrorKind::BadHeader, lines[idx].line_no,
               "expected comment or `p edge` header, got `" + lines[idx].text + "`");
  }
  if (header_line < 0) {
    fail(ErrorKind::BadHeader, "missing `p edge <n> <m>` header");
  }
  Graph g(n);
  int edges_seen = 0;
  for (; idx < lines.size(); ++idx) {
    std::istringstream ss(lines[idx].text);
    std::string tag;
    ss >> tag;
    if (tag == "c") continue;
    if (tag != "e") {
      parse_fail(ErrorKind::BadHeader, lines[idx].line_no,
                 "expected `e <u> <v>` line, got `" + lines[idx].text + "`");
    }
    long long u, v;
    std::string extra;
    if (!(ss >> u >> v) || (ss >> extra)) {
      parse_fail(ErrorKind::BadHeader, lines[idx].line_no,
                 "expected `e <u> <v>` line, got `" + lines[idx].text + "`");
    }
    if (u < 1 || u > n || v < 1 || v > n) {
      parse_fail(ErrorKind::IdOutOfRange, lines[idx].line_no,
                 "vertex ids must be in [1, " + std::to_string(n) + "]");
    }
    try {
      g.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
    } catch (const Error& e) {
      parse_fail(e.kind(), lines[idx].line_no, e.what());
    }
    ++edges_seen;
  }
  if (edges_seen != m) {
    fail(ErrorKind::BadHeader,
         "header announced " + std::to_string(m) + " edges but file contains " +
             std::to_string(edges_seen));
  }
  return g;
}

Graph parse_bare(const std::vector<RawLine>& lines) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(lines.size());
  long long max_id = -1;
  for (const RawLine& rl : lines) {
    std::istringstream ss(rl.text);
    long long u, v;
    std::string extra;
    if (!(ss >> u >> v) || (ss >> extra)) {
      parse_fail(ErrorKind::BadHeader, rl.line_no,
                 "expected `<u> <v>` line, got `" + rl.text + "`");
    }
    if (u < 0 || v < 0) {
      parse_fail(ErrorKind::IdOutOfRange, rl.line_no, "vertex ids must be nonnegative");
    }
    if (u > 100'000'000 || v > 100'000'000) {
      parse_fail(ErrorKind::IdOutOfRange, rl.line_no, "vertex id implausibly large");
    }
    max_id = std::max({max_id, u, v});
    pairs.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  Graph g(static_cast<int>(max_id + 1));
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    try {
      g.add_edge(pairs[i].first, pairs[i].second);
    } catch (const Error& e) {
      parse_fail(e.kind(), lines[i].line_no, e.what());
    }
  }
  return g;
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::vector<RawLine> lines = significant_lines(in);
  if (lines.empty()) fail(ErrorKind::BadHeader, "empty input");
  // DIMACS files start with `c` comments or the `p` header.
  std::istringstream probe(lines[0].text);
  std::string tag;
  probe >> tag;
  if (tag == "c" || tag == "p") return parse_dimacs(lines);
  return parse_bare(lines);
}

Graph parse_graph_string(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

Graph parse_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::BadHeader, "cannot open file `" + path + "`");
  return parse_graph(in);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  for (const Graph::Edge& e : g.edges()) {
    out << e.u << ' ' << e.v << '\n';
  }
  return out.str();
}

std::string format_dimacs(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Graph::Edge& e : g.edges()) {
    out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  }
  return out.str();
}

std::vector<int> bfs_tree_edges(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) fail(ErrorKind::Disconnected, "empty graph has no spanning tree");
  std::vector<char> seen(n, 0);
  std::vector<int> tree;
  tree.reserve(n > 0 ? n - 1 : 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int id : g.incident(u)) {
      int w = g.other_endpoint(id, u);
      if (!seen[w]) {
        seen[w] = 1;
        tree.push_back(id);
        queue.push_back(w);
      }
    }
  }
  if (static_cast<int>(tree.size()) != n - 1) {
    fail(ErrorKind::Disconnected, "graph is not connected");
  }
  return tree;
}

}  // namespace mdst
