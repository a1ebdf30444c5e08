#include "mdst/certificate_io.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "mdst/errors.hpp"

namespace mdst {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(ErrorKind::BadHeader, "input is not valid JSON");
  if (!j.is_object()) fail(ErrorKind::BadHeader, "expected a JSON object");
  return j;
}

const json& field(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end())
    fail(ErrorKind::BadHeader, std::string("missing field \"") + key + "\"");
  return *it;
}

long long integer_field(const json& j, const char* key) {
  const json& f = field(j, key);
  if (!f.is_number_integer())
    fail(ErrorKind::BadHeader, std::string("field \"") + key + "\" must be an integer");
  return f.get<long long>();
}

std::vector<std::vector<int>> vertex_lists_field(const json& j, const char* key) {
  const json& f = field(j, key);
  if (!f.is_array())
    fail(ErrorKind::BadHeader, std::string("field \"") + key + "\" must be an array");
  std::vector<std::vector<int>> lists;
  for (const json& entry : f) {
    if (!entry.is_array())
      fail(ErrorKind::BadHeader, std::string("entries of \"") + key + "\" must be arrays");
    std::vector<int> list;
    for (const json& v : entry) {
      if (!v.is_number_integer())
        fail(ErrorKind::BadHeader, std::string("vertices in \"") + key + "\" must be integers");
      list.push_back(v.get<int>());
    }
    lists.push_back(std::move(list));
  }
  return lists;
}

}  // namespace

std::string certificate_to_json(const LowerBoundCertificate& cert) {
  json j;
  j["n"] = cert.n;
  j["k"] = cert.k;
  j["eps"] = cert.eps;
  j["h"] = cert.h;
  j["bound"] = cert.bound;
  j["layers"] = cert.layers;
  j["clean_components"] = cert.clean_components;
  return j.dump(2) + "\n";
}

LowerBoundCertificate certificate_from_json(const std::string& text) {
  const json j = parse_json(text);
  LowerBoundCertificate cert;
  cert.n = static_cast<int>(integer_field(j, "n"));
  cert.k = static_cast<int>(integer_field(j, "k"));
  const json& eps = field(j, "eps");
  if (!eps.is_number()) fail(ErrorKind::BadHeader, "field \"eps\" must be a number");
  cert.eps = eps.get<double>();
  cert.h = static_cast<int>(integer_field(j, "h"));
  cert.bound = integer_field(j, "bound");
  cert.layers = vertex_lists_field(j, "layers");
  cert.clean_components = vertex_lists_field(j, "clean_components");
  return cert;
}

LowerBoundCertificate load_certificate(const std::string& path) {
  return certificate_from_json(read_text_file(path));
}

void save_certificate(const LowerBoundCertificate& cert, const std::string& path) {
  write_text_file(path, certificate_to_json(cert));
}

std::string tree_to_text(const SpanningTree& t) {
  std::ostringstream out;
  for (int id : t.tree_edge_ids()) {
    const Graph::Edge& e = t.graph().edge(id);
    out << e.u << ' ' << e.v << '\n';
  }
  return out.str();
}

std::vector<int> tree_edge_ids_from_text(const Graph& g, const std::string& text) {
  std::vector<int> ids;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    int u = 0, v = 0;
    std::string extra;
    if (!(ls >> u)) continue;  // blank line
    if (!(ls >> v) || (ls >> extra))
      fail(ErrorKind::BadHeader,
           "line " + std::to_string(line_no) + ": expected exactly two vertex ids");
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
      fail(ErrorKind::IdOutOfRange,
           "line " + std::to_string(line_no) + ": vertex id out of range");
    const int id = g.edge_id(u, v);
    if (id < 0)
      fail(ErrorKind::BadHeader, "line " + std::to_string(line_no) + ": (" +
                                     std::to_string(u) + ", " + std::to_string(v) +
                                     ") is not an edge of the graph");
    ids.push_back(id);
  }
  return ids;
}

SpanningTree load_tree(const Graph& g, const std::string& path) {
  return SpanningTree(g, tree_edge_ids_from_text(g, read_text_file(path)));
}

void save_tree(const SpanningTree& t, const std::string& path) {
  write_text_file(path, tree_to_text(t));
}

std::string solve_report_json(const Graph& g, const RunConfig& cfg, const RunResult& result) {
  json j;
  j["n"] = g.vertex_count();
  j["m"] = g.edge_count();
  j["eps_user"] = cfg.eps_user;
  j["seed"] = cfg.seed;
  j["tree_degree"] = result.delta;
  j["phase"] = phase_name(result.phase);
  if (result.certificate) j["certificate_bound"] = result.certificate->bound;
  j["degred_calls"] = result.stats.degred_calls;
  j["modifications"] = result.stats.modifications;
  j["wall_ms"] = result.stats.wall_ms;
  j["timed_out"] = result.stats.timed_out;
  return j.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::BadHeader, "cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) fail(ErrorKind::BadHeader, "cannot read file: " + path);
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::BadHeader, "cannot open file for writing: " + path);
  out << content;
  out.flush();
  if (!out) fail(ErrorKind::BadHeader, "cannot write file: " + path);
}

}  // namespace mdst
