#pragma once

#include <string>
#include <string_view>

#include "sdfvs/instances.hpp"

namespace sdfvs {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// One parsed instance file. Vertices are 1-based in the text format and
// 0-based in memory; the conversion happens only here.
struct ParsedInstance {
  enum class Kind { edge, vertex };
  Kind kind = Kind::edge;
  std::string name;
  EdgeInstance edge;
  VertexInstance vertex;

  int vertex_count() const {
    return kind == Kind::edge ? edge.graph.slot_count() : vertex.graph.slot_count();
  }
  long long arc_count() const {
    return kind == Kind::edge ? edge.graph.arc_count() : vertex.graph.arc_count();
  }
  int budget() const { return kind == Kind::edge ? edge.budget : vertex.budget; }
  int s_size() const;
};

ParsedInstance parse_instance(std::string_view text);
std::string serialize_instance(const ParsedInstance& inst);

ParsedInstance load_instance_file(const std::string& path);

struct GenConfig {
  enum class Mode { random, planted };
  Mode mode = Mode::random;
  int n = 10;
  long long m = 20;
  double s_fraction = 0.3;
  int k = 2;
  std::uint64_t seed = 1;
};

// random: uniform arcs without replacement; planted: hidden deletion set X of
// size k with a DAG outside X, so the instance is YES at budget k.
ParsedInstance generate_instance(const GenConfig& cfg);

}  // namespace sdfvs
