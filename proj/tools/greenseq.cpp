#include <CLI11.hpp>
#include <algorithm>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "greenseq/classify.hpp"
#include "greenseq/construct.hpp"
#include "greenseq/error.hpp"
#include "greenseq/green_seq.hpp"
#include "greenseq/io.hpp"

using nlohmann::json;
using namespace greenseq;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_csv(const std::string& text, const char* flag) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw UsageError(std::string(flag) + ": not an integer list: " + text);
    out.push_back(v);
  }
  return out;
}

json quiver_json(const Quiver& q) { return json::parse(quiver_to_json(q)); }

json matrix_json(const IntMatrix& m) { return m.to_rows(); }

json optional_json(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

json breakdown_json(const LengthFormula& f) {
  json out = json::object();
  for (const auto& t : f.breakdown) out[t.name] = t.value;
  return out;
}

json decomposition_json(const Classification& c) {
  return std::visit(
      [](const auto& d) -> json {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, TypeDI>) {
          return {{"a", d.a}, {"b", d.b}, {"c", d.c}, {"rest", d.rest}};
        } else if constexpr (std::is_same_v<T, TypeDII> || std::is_same_v<T, TypeDIII>) {
          return {{"a", d.a}, {"b", d.b}, {"c", d.c}, {"d", d.d}, {"first", d.first}, {"second", d.second}};
        } else if constexpr (std::is_same_v<T, TypeDIV>) {
          json spikes = json::array();
          for (const auto& s : d.spikes) spikes.push_back(optional_json(s));
          return {{"cycle", d.cycle}, {"spikes", spikes}, {"pieces", d.pieces}};
        } else if constexpr (std::is_same_v<T, AffineAQuiver>) {
          json arrows = json::array();
          for (const auto& a : d.arrows)
            arrows.push_back({{"source", a.source}, {"target", a.target}, {"apex", optional_json(a.apex)}, {"piece", a.piece}});
          return {{"cycle", d.cycle}, {"arrows", arrows}};
        } else {
          return json::object();
        }
      },
      c);
}

json trace_json(const Quiver& q, const GreenSequence& s) { return apply_green_sequence(q, s).trace; }

// Rows of the c-matrix, "1,0;0,1".
std::string c_label(const CMatrix& c) {
  std::string out;
  for (int r = 0; r < c.size(); ++r) {
    if (r) out += ';';
    const auto row = c.matrix().row(r);
    for (std::size_t j = 0; j < row.size(); ++j) out += (j ? "," : "") + std::to_string(row[j]);
  }
  return out;
}

std::string emit_dot(const ExchangeGraph& g) {
  std::vector<std::size_t> order(g.nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return g.nodes[a].key < g.nodes[b].key; });
  std::vector<std::size_t> id(g.nodes.size());
  for (std::size_t r = 0; r < order.size(); ++r) id[order[r]] = r;

  std::ostringstream out;
  out << "digraph exchange {\n";
  for (std::size_t r = 0; r < order.size(); ++r) {
    const auto& n = g.nodes[order[r]];
    out << "  n" << r << " [label=\"" << c_label(n.c) << "\"" << (order[r] == 0 ? ", shape=box" : "") << "];\n";
  }
  std::vector<std::tuple<std::size_t, std::size_t, int, std::string>> edges;
  for (const auto& e : g.edges) {
    std::string c;
    for (std::size_t i = 0; i < e.c_vector.size(); ++i) c += (i ? "," : "") + std::to_string(e.c_vector[i]);
    edges.emplace_back(id[e.from], id[e.to], e.vertex, c);
  }
  std::sort(edges.begin(), edges.end());
  for (const auto& [from, to, vertex, c] : edges)
    out << "  n" << from << " -> n" << to << " [label=\"" << vertex << ": (" << c << ")\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quiver mutation and maximal green sequences"};
  app.require_subcommand(1);

  std::string quiver_path, sequence_csv, subquiver_csv, format = "json";
  int depth = -1;
  std::size_t nodes = 100000;

  auto with_quiver = [&](CLI::App* sub) { sub->add_option("-q,--quiver", quiver_path, "quiver file (JSON or matrix)")->required(); };
  auto with_sequence = [&](CLI::App* sub) { sub->add_option("-s,--sequence", sequence_csv, "comma-separated vertices")->required(); };

  auto* mutate_cmd = app.add_subcommand("mutate", "mutate along a sequence");
  with_quiver(mutate_cmd);
  with_sequence(mutate_cmd);
  auto* verify_cmd = app.add_subcommand("verify", "check a maximal green sequence");
  with_quiver(verify_cmd);
  with_sequence(verify_cmd);
  auto* search_cmd = app.add_subcommand("search", "breadth-first search for a shortest MGS");
  with_quiver(search_cmd);
  search_cmd->add_option("--depth", depth, "depth bound (default 2n + 2)");
  search_cmd->add_option("--nodes", nodes, "node budget");
  auto* classify_cmd = app.add_subcommand("classify", "classification report");
  with_quiver(classify_cmd);
  auto* minlen_cmd = app.add_subcommand("minlen", "minimal MGS length from the formulas");
  with_quiver(minlen_cmd);
  auto* construct_cmd = app.add_subcommand("construct", "build a minimal-length MGS");
  with_quiver(construct_cmd);
  auto* graph_cmd = app.add_subcommand("exchange-graph", "oriented exchange graph");
  with_quiver(graph_cmd);
  graph_cmd->add_option("--nodes", nodes, "node limit");
  graph_cmd->add_option("--depth", depth, "depth limit");
  graph_cmd->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  auto* restrict_cmd = app.add_subcommand("restrict", "restrict an MGS to a full subquiver");
  with_quiver(restrict_cmd);
  with_sequence(restrict_cmd);
  restrict_cmd->add_option("--subquiver", subquiver_csv, "comma-separated vertices")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    const Quiver q = load_quiver(quiver_path);
    json out;
    if (mutate_cmd->parsed()) {
      Quiver m = q;
      for (int v : parse_csv(sequence_csv, "--sequence")) m = mutate(m, v);
      out = {{"quiver", quiver_json(m)}};
    } else if (verify_cmd->parsed()) {
      const GreenSequence s = parse_csv(sequence_csv, "--sequence");
      const Verdict v = check_maximal_green(q, s);
      out = {{"valid", v.valid}, {"length", s.size()}};
      if (v.valid)
        out["trace"] = trace_json(q, s);
      else
        out["reason"] = v.reason;
    } else if (search_cmd->parsed()) {
      const int bound = depth >= 0 ? depth : 2 * q.size() + 2;
      const SearchCertificate c = shortest_mgs(q, bound, nodes);
      out = {{"minimal_length", optional_json(c.minimal_length)},
             {"exhaustive", c.exhaustive},
             {"witness", c.witness ? json(*c.witness) : json(nullptr)},
             {"explored_depth", c.explored_depth},
             {"nodes", c.nodes}};
    } else if (classify_cmd->parsed()) {
      const Classification c = classify(q);
      json cycles = json::array();
      for (const auto& t : three_cycles(q)) cycles.push_back(t);
      out = {{"class", family_tag(family(c))}, {"decomposition", decomposition_json(c)}, {"three_cycles", cycles}};
      if (family(c) == Family::Unknown) {
        out["length"] = nullptr;
      } else {
        const LengthFormula f = length_formula(q, c);
        out["length"] = f.length;
        out["breakdown"] = breakdown_json(f);
      }
    } else if (minlen_cmd->parsed()) {
      const LengthFormula f = length_formula(q);
      if (f.family == Family::Unknown) fail(ErrorKind::UnsupportedClass, "quiver is outside the supported families");
      out = {{"class", family_tag(f.family)}, {"length", f.length}, {"breakdown", breakdown_json(f)}};
    } else if (construct_cmd->parsed()) {
      const Construction c = min_mgs(q);
      const LengthFormula f = length_formula(q);
      out = {{"class", family_tag(f.family)},
             {"sequence", c.sequence},
             {"length", c.length},
             {"trace", trace_json(q, c.sequence)},
             {"breakdown", breakdown_json(f)},
             {"verified", is_maximal_green(q, c.sequence)},
             {"used_search", c.used_search}};
    } else if (graph_cmd->parsed()) {
      const ExchangeGraph g = enumerate_exchange_graph(q, nodes, ExplorationMode::GreenAndRed,
                                                       depth >= 0 ? std::optional<int>(depth) : std::nullopt);
      if (format == "dot") {
        std::cout << emit_dot(g);
        return 0;
      }
      json ns = json::array(), es = json::array();
      for (const auto& n : g.nodes) ns.push_back({{"key", n.key}, {"depth", n.depth}, {"c_matrix", matrix_json(n.c.matrix())}});
      for (const auto& e : g.edges) es.push_back({{"from", e.from}, {"to", e.to}, {"vertex", e.vertex}, {"c_vector", e.c_vector}});
      out = {{"nodes", ns}, {"edges", es}, {"truncated", g.truncated}};
    } else if (restrict_cmd->parsed()) {
      const std::vector<int> subset = parse_csv(subquiver_csv, "--subquiver");
      const GreenSequence r = restrict_mgs(q, parse_csv(sequence_csv, "--sequence"), subset);
      VertexSet sorted_subset = subset;
      std::sort(sorted_subset.begin(), sorted_subset.end());
      sorted_subset.erase(std::unique(sorted_subset.begin(), sorted_subset.end()), sorted_subset.end());
      GreenSequence local;
      for (int v : r) local.push_back(static_cast<int>(std::lower_bound(sorted_subset.begin(), sorted_subset.end(), v) - sorted_subset.begin()) + 1);
      out = {{"sequence", r}, {"valid", is_maximal_green(full_subquiver(q, sorted_subset), local)}};
    }
    std::cout << out.dump() << '\n';
    return 0;
  } catch (const UsageError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cout << json{{"error", to_string(e.kind())}, {"message", e.what()}}.dump() << '\n';
    return 1;
  }
}
