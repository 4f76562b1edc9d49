#pragma once

// Text formats:
//   graph       first line "n m", then m lines "u v" (0-based ids);
//               blank lines and lines starting with '#' are ignored
//   witness     one op per line, "c u v" (contract u onto v) or "d v"
//   interval    one line per vertex, "v l r"
//   instance    JSON {"graph": <edge-list blob>, "pi", "kind", "d", "k"}
//   cnf         DIMACS cnf, clauses of exactly three literals
//   rbds        "B:" / "R:" / "k:" header lines, then one edge "b r" per line

#include "blocker/graph.hpp"

#include <iosfwd>
#include <map>

namespace blocker {

struct IntervalModel {
    // closed integer intervals [l, r], l <= r, one per vertex
    std::map<Vertex, std::pair<int, int>> interval;
};

struct BlockerInstance {
    Graph g;
    Param pi = Param::alpha;
    OpKind kind = OpKind::contract;
    int d = 0;
    int k = 0;
};

struct CnfFormula {
    int num_vars = 0;                         // variables are 1..num_vars
    std::vector<std::array<int, 3>> clauses;  // signed DIMACS literals
};

struct RbdsInstance {
    std::set<Vertex> blue;  // B: dominating side
    std::set<Vertex> red;   // R: side to dominate
    std::vector<std::pair<Vertex, Vertex>> edges; // (b, r)
    int k = 0;

    Graph graph() const; // the bipartite graph on blue + red
};

Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

Witness parse_witness(const std::string& text);
std::string serialize_witness(const Witness& w);

IntervalModel parse_interval_model(const std::string& text);
std::string serialize_interval_model(const IntervalModel& m);

BlockerInstance parse_instance(const std::string& json_text);
std::string serialize_instance(const BlockerInstance& inst);

Param parse_param(const std::string& s);
OpKind parse_op_kind(const std::string& s);

CnfFormula parse_dimacs_cnf(const std::string& text);

RbdsInstance parse_rbds(const std::string& text);
std::string serialize_rbds(const RbdsInstance& inst);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace blocker
