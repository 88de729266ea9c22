#include "sdfvs/instance_io.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <unordered_set>

namespace sdfvs {

int ParsedInstance::s_size() const {
  if (kind == Kind::vertex) return vertex.s_vertices.count();
  int c = 0;
  for (char f : edge.s_mask) c += f ? 1 : 0;
  return c;
}

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int parse_vertex(const std::string& tok, int n, int lineno) {
  int v = 0;
  try {
    std::size_t pos = 0;
    v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("");
  } catch (...) {
    throw ParseError(lineno, "not a vertex id: '" + tok + "'");
  }
  if (v < 1 || v > n) throw ParseError(lineno, "vertex " + tok + " out of range 1.." +
                                                   std::to_string(n));
  return v - 1;
}

}  // namespace

ParsedInstance parse_instance(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;

  bool have_p = false, have_k = false;
  bool edge_form = true;
  int n = 0;
  long long m = 0;
  int k = 0;
  std::vector<Arc> arcs;
  std::vector<char> s_mask;
  std::vector<int> s_vertices, undeletable;

  while (std::getline(in, line)) {
    ++lineno;
    std::vector<std::string> t = tokens(line);
    if (t.empty()) continue;
    const std::string& head = t[0];
    if (head == "c") continue;
    if (head == "p") {
      if (have_p) throw ParseError(lineno, "duplicate problem line");
      if (t.size() != 4) throw ParseError(lineno, "expected 'p sdfvs-e|sdfvs-v <n> <m>'");
      if (t[1] == "sdfvs-e")
        edge_form = true;
      else if (t[1] == "sdfvs-v")
        edge_form = false;
      else
        throw ParseError(lineno, "unknown problem kind '" + t[1] + "'");
      try {
        n = std::stoi(t[2]);
        m = std::stoll(t[3]);
      } catch (...) {
        throw ParseError(lineno, "bad problem line numbers");
      }
      if (n < 0 || m < 0) throw ParseError(lineno, "negative size in problem line");
      have_p = true;
      continue;
    }
    if (!have_p) throw ParseError(lineno, "'" + head + "' line before problem line");
    if (head == "a") {
      bool marked = t.size() == 4 && t[3] == "s";
      if (t.size() != 3 && !marked) throw ParseError(lineno, "expected 'a <u> <v> [s]'");
      if (marked && !edge_form)
        throw ParseError(lineno, "'s' arc marker is only valid in edge form");
      int u = parse_vertex(t[1], n, lineno);
      int v = parse_vertex(t[2], n, lineno);
      arcs.push_back({u, v});
      s_mask.push_back(marked ? 1 : 0);
      continue;
    }
    if (head == "s") {
      if (edge_form) throw ParseError(lineno, "'s' vertex line is only valid in vertex form");
      if (t.size() != 2) throw ParseError(lineno, "expected 's <v>'");
      s_vertices.push_back(parse_vertex(t[1], n, lineno));
      continue;
    }
    if (head == "u") {
      if (t.size() != 2) throw ParseError(lineno, "expected 'u <v>'");
      undeletable.push_back(parse_vertex(t[1], n, lineno));
      continue;
    }
    if (head == "k") {
      if (have_k) throw ParseError(lineno, "duplicate budget line");
      if (t.size() != 2) throw ParseError(lineno, "expected 'k <int>'");
      try {
        k = std::stoi(t[1]);
      } catch (...) {
        throw ParseError(lineno, "bad budget");
      }
      if (k < 0) throw ParseError(lineno, "negative budget");
      have_k = true;
      continue;
    }
    throw ParseError(lineno, "unknown line type '" + head + "'");
  }
  if (!have_p) throw ParseError(lineno, "missing problem line");
  if (!have_k) throw ParseError(lineno, "missing budget line");
  if (static_cast<long long>(arcs.size()) != m)
    throw ParseError(lineno, "problem line declares " + std::to_string(m) + " arcs, found " +
                                 std::to_string(arcs.size()));

  Bitset undel(static_cast<std::size_t>(n));
  for (int v : undeletable) undel.set(v);
  Digraph g = Digraph::build(n, arcs, undel);

  ParsedInstance out;
  if (edge_form) {
    out.kind = ParsedInstance::Kind::edge;
    out.edge = {std::move(g), std::move(s_mask), k};
  } else {
    out.kind = ParsedInstance::Kind::vertex;
    Bitset sv(static_cast<std::size_t>(n));
    for (int v : s_vertices) sv.set(v);
    out.vertex = {std::move(g), std::move(sv), k};
  }
  return out;
}

std::string serialize_instance(const ParsedInstance& inst) {
  std::ostringstream out;
  bool edge_form = inst.kind == ParsedInstance::Kind::edge;
  const Digraph& g = edge_form ? inst.edge.graph : inst.vertex.graph;
  out << "p " << (edge_form ? "sdfvs-e" : "sdfvs-v") << ' ' << g.slot_count() << ' '
      << g.arc_count() << '\n';
  for (int i = 0; i < g.arc_count(); ++i) {
    const Arc& a = g.arc(i);
    out << "a " << a.tail + 1 << ' ' << a.head + 1;
    if (edge_form && inst.edge.s_mask[static_cast<std::size_t>(i)]) out << " s";
    out << '\n';
  }
  if (!edge_form) inst.vertex.s_vertices.for_each([&](int v) { out << "s " << v + 1 << '\n'; });
  g.undeletable().for_each([&](int v) { out << "u " << v + 1 << '\n'; });
  out << "k " << (edge_form ? inst.edge.budget : inst.vertex.budget) << '\n';
  return out.str();
}

ParsedInstance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  ParsedInstance inst = parse_instance(buf.str());
  std::size_t slash = path.find_last_of('/');
  inst.name = slash == std::string::npos ? path : path.substr(slash + 1);
  return inst;
}

namespace {

// deterministic uniform double in [0,1) from raw generator output
double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

ParsedInstance generate_instance(const GenConfig& cfg) {
  if (cfg.n < 1) throw std::invalid_argument("gen: need at least one vertex");
  if (cfg.k < 0 || cfg.k > cfg.n) throw std::invalid_argument("gen: bad k");
  std::mt19937_64 rng(cfg.seed);

  Bitset hidden(static_cast<std::size_t>(cfg.n));
  std::vector<int> position(static_cast<std::size_t>(cfg.n), 0);
  long long universe = static_cast<long long>(cfg.n) * (cfg.n - 1);
  if (cfg.mode == GenConfig::Mode::planted) {
    std::vector<int> perm(static_cast<std::size_t>(cfg.n));
    for (int i = 0; i < cfg.n; ++i) perm[static_cast<std::size_t>(i)] = i;
    for (int i = cfg.n - 1; i > 0; --i)
      std::swap(perm[static_cast<std::size_t>(i)],
                perm[static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(i + 1))]);
    for (int i = 0; i < cfg.k; ++i) hidden.set(perm[static_cast<std::size_t>(i)]);
    int pos = 0;
    for (int i = cfg.k; i < cfg.n; ++i) position[static_cast<std::size_t>(perm[i])] = pos++;
    long long outside = cfg.n - cfg.k;
    universe = outside * (outside - 1) / 2  // forward arcs of the DAG
               + 2LL * cfg.k * outside + static_cast<long long>(cfg.k) * (cfg.k - 1);
  }
  if (cfg.m > universe)
    throw std::invalid_argument("gen: " + std::to_string(cfg.m) + " arcs infeasible, max " +
                                std::to_string(universe));

  std::unordered_set<long long> chosen;
  std::vector<Arc> arcs;
  std::vector<char> s_mask;
  while (static_cast<long long>(arcs.size()) < cfg.m) {
    int u = static_cast<int>(rng() % static_cast<std::uint64_t>(cfg.n));
    int v = static_cast<int>(rng() % static_cast<std::uint64_t>(cfg.n));
    if (u == v) continue;
    if (cfg.mode == GenConfig::Mode::planted && !hidden.test(u) && !hidden.test(v) &&
        position[static_cast<std::size_t>(u)] > position[static_cast<std::size_t>(v)])
      continue;  // arcs outside the hidden set respect the DAG order
    long long code = static_cast<long long>(u) * cfg.n + v;
    if (!chosen.insert(code).second) continue;
    arcs.push_back({u, v});
    s_mask.push_back(unit_draw(rng) < cfg.s_fraction ? 1 : 0);
  }

  ParsedInstance out;
  out.kind = ParsedInstance::Kind::edge;
  out.edge = {Digraph::build(cfg.n, arcs, Bitset(static_cast<std::size_t>(cfg.n))),
              std::move(s_mask), cfg.k};
  return out;
}

}  // namespace sdfvs
