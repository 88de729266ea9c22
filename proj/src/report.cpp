#include "sdfvs/report.hpp"

#include <sstream>

#include <json.hpp>

namespace sdfvs {

namespace {

std::string join_ids(const std::vector<int>& ids) {
  std::ostringstream out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out << ' ';
    out << ids[i];
  }
  return out.str();
}

const char* error_mode(const RunReport& r) {
  return r.exact ? "exact" : "one-sided-monte-carlo";
}

}  // namespace

std::string report_human(const RunReport& r) {
  std::ostringstream out;
  out << "instance: " << r.name << " (n=" << r.n << " m=" << r.m << " |S|=" << r.s_size
      << " k=" << r.k << ")\n";
  out << "answer: " << (r.yes ? "YES" : "NO") << '\n';
  if (r.yes) out << "solution: " << join_ids(r.solution) << '\n';
  out << "nodes: " << r.nodes << "  trials: " << r.trials << "  wall_ms: " << r.wall_ms << '\n';
  out << "seed: " << r.seed << "  mode: " << r.mode << "  error-mode: " << error_mode(r);
  if (r.retries) out << "  retries: " << r.retries;
  out << '\n';
  return out.str();
}

std::string report_json(const RunReport& r) {
  nlohmann::json j;
  j["instance"] = r.name;
  j["n"] = r.n;
  j["m"] = r.m;
  j["s"] = r.s_size;
  j["k"] = r.k;
  j["answer"] = r.yes ? "YES" : "NO";
  j["solution"] = r.solution;
  j["nodes"] = r.nodes;
  j["trials"] = r.trials;
  j["wall_ms"] = r.wall_ms;
  j["seed"] = r.seed;
  j["mode"] = r.mode;
  j["error_mode"] = error_mode(r);
  j["retries"] = r.retries;
  return j.dump();
}

const char* csv_header() { return "name,n,m,s,k,answer,solution,nodes,trials,wall_ms,seed,mode"; }

std::string csv_row(const RunReport& r) {
  std::ostringstream out;
  out << r.name << ',' << r.n << ',' << r.m << ',' << r.s_size << ',' << r.k << ','
      << (r.yes ? "YES" : "NO") << ',' << join_ids(r.solution) << ',' << r.nodes << ','
      << r.trials << ',' << r.wall_ms << ',' << r.seed << ',' << r.mode;
  return out.str();
}

}  // namespace sdfvs
