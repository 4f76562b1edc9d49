#include "blocker/io.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace blocker {

namespace {

// lines of `text` with blanks and '#' comments stripped
std::vector<std::string> content_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        out.push_back(line);
    }
    return out;
}

} // namespace

Graph RbdsInstance::graph() const {
    Graph g;
    for (Vertex b : blue) g.add_vertex(b);
    for (Vertex r : red) g.add_vertex(r);
    for (auto [b, r] : edges) g.add_edge(b, r);
    return g;
}

Graph parse_graph(const std::string& text) {
    auto lines = content_lines(text);
    if (lines.empty()) throw error("graph parse: missing header line");
    std::istringstream head(lines[0]);
    int n = -1, m = -1;
    if (!(head >> n >> m) || n < 0 || m < 0) throw error("graph parse: bad header");
    if (static_cast<int>(lines.size()) != m + 1)
        throw error("graph parse: expected " + std::to_string(m) + " edge lines");
    Graph g = Graph::edgeless(n);
    for (int i = 1; i <= m; ++i) {
        std::istringstream es(lines[i]);
        int u, v;
        if (!(es >> u >> v)) throw error("graph parse: bad edge line: " + lines[i]);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw error("graph parse: vertex id out of range: " + lines[i]);
        g.add_edge(u, v);
    }
    return g;
}

std::string serialize_graph(const Graph& g) {
    // vertex set {0..n-1} keeps ids verbatim; sparse id sets are normalized
    // order-preservingly onto 0..n-1
    auto vs = g.vertices();
    std::map<Vertex, int> index;
    for (size_t i = 0; i < vs.size(); ++i) index[vs[i]] = static_cast<int>(i);
    std::ostringstream out;
    out << g.num_vertices() << " " << g.num_edges() << "\n";
    for (auto [u, v] : g.edges()) out << index[u] << " " << index[v] << "\n";
    return out.str();
}

Witness parse_witness(const std::string& text) {
    Witness w;
    for (const auto& line : content_lines(text)) {
        std::istringstream in(line);
        std::string op;
        in >> op;
        if (op == "c") {
            int u, v;
            if (!(in >> u >> v)) throw error("witness parse: bad line: " + line);
            w.push_back(Operation::contract(u, v));
        } else if (op == "d") {
            int v;
            if (!(in >> v)) throw error("witness parse: bad line: " + line);
            w.push_back(Operation::vdelete(v));
        } else {
            throw error("witness parse: unknown op: " + line);
        }
    }
    return w;
}

std::string serialize_witness(const Witness& w) {
    std::ostringstream out;
    for (const auto& op : w) {
        if (op.kind == OpKind::contract)
            out << "c " << op.u << " " << op.v << "\n";
        else
            out << "d " << op.v << "\n";
    }
    return out.str();
}

IntervalModel parse_interval_model(const std::string& text) {
    IntervalModel m;
    for (const auto& line : content_lines(text)) {
        std::istringstream in(line);
        int v, l, r;
        if (!(in >> v >> l >> r)) throw error("interval parse: bad line: " + line);
        if (l > r) throw error("interval parse: l > r: " + line);
        if (!m.interval.emplace(v, std::make_pair(l, r)).second)
            throw error("interval parse: duplicate vertex " + std::to_string(v));
    }
    return m;
}

std::string serialize_interval_model(const IntervalModel& m) {
    std::ostringstream out;
    for (const auto& [v, lr] : m.interval)
        out << v << " " << lr.first << " " << lr.second << "\n";
    return out.str();
}

Param parse_param(const std::string& s) {
    if (s == "alpha") return Param::alpha;
    if (s == "omega") return Param::omega;
    if (s == "chi") return Param::chi;
    throw error("unknown parameter: " + s);
}

OpKind parse_op_kind(const std::string& s) {
    if (s == "contract") return OpKind::contract;
    if (s == "delete") return OpKind::vdelete;
    throw error("unknown operation kind: " + s);
}

BlockerInstance parse_instance(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    BlockerInstance inst;
    inst.g = parse_graph(j.at("graph").get<std::string>());
    inst.pi = parse_param(j.at("pi").get<std::string>());
    inst.kind = parse_op_kind(j.at("kind").get<std::string>());
    inst.d = j.at("d").get<int>();
    inst.k = j.at("k").get<int>();
    if (inst.d < 0 || inst.k < 0) throw error("instance: d and k must be >= 0");
    return inst;
}

std::string serialize_instance(const BlockerInstance& inst) {
    nlohmann::json j;
    j["graph"] = serialize_graph(inst.g);
    j["pi"] = to_string(inst.pi);
    j["kind"] = to_string(inst.kind);
    j["d"] = inst.d;
    j["k"] = inst.k;
    return j.dump(2) + "\n";
}

CnfFormula parse_dimacs_cnf(const std::string& text) {
    CnfFormula f;
    std::istringstream in(text);
    std::string line;
    int declared_clauses = -1;
    while (std::getline(in, line)) {
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == 'c' || line[first] == '#') continue;
        std::istringstream ls(line);
        if (line[first] == 'p') {
            std::string p, fmt;
            ls >> p >> fmt >> f.num_vars >> declared_clauses;
            if (fmt != "cnf") throw error("cnf parse: expected 'p cnf'");
            continue;
        }
        std::vector<int> lits;
        int lit;
        while (ls >> lit && lit != 0) lits.push_back(lit);
        if (lits.empty()) continue;
        if (lits.size() != 3) throw error("cnf parse: clauses must have exactly 3 literals");
        for (int l : lits)
            if (l == 0 || std::abs(l) > f.num_vars)
                throw error("cnf parse: literal out of range");
        f.clauses.push_back({lits[0], lits[1], lits[2]});
    }
    if (declared_clauses >= 0 && declared_clauses != static_cast<int>(f.clauses.size()))
        throw error("cnf parse: clause count mismatch");
    return f;
}

RbdsInstance parse_rbds(const std::string& text) {
    RbdsInstance inst;
    bool have_b = false, have_r = false, have_k = false;
    for (const auto& line : content_lines(text)) {
        std::istringstream in(line);
        std::string tag;
        in >> tag;
        if (tag == "B:") {
            int v;
            while (in >> v) inst.blue.insert(v);
            have_b = true;
        } else if (tag == "R:") {
            int v;
            while (in >> v) inst.red.insert(v);
            have_r = true;
        } else if (tag == "k:") {
            if (!(in >> inst.k)) throw error("rbds parse: bad k line");
            have_k = true;
        } else {
            std::istringstream es(line);
            int b, r;
            if (!(es >> b >> r)) throw error("rbds parse: bad edge line: " + line);
            inst.edges.emplace_back(b, r);
        }
    }
    if (!have_b || !have_r || !have_k) throw error("rbds parse: missing B:/R:/k: header");
    for (auto [b, r] : inst.edges) {
        if (!inst.blue.count(b) || !inst.red.count(r))
            throw error("rbds parse: edge not in B x R");
    }
    return inst;
}

std::string serialize_rbds(const RbdsInstance& inst) {
    std::ostringstream out;
    out << "B:";
    for (Vertex b : inst.blue) out << " " << b;
    out << "\nR:";
    for (Vertex r : inst.red) out << " " << r;
    out << "\nk: " << inst.k << "\n";
    for (auto [b, r] : inst.edges) out << b << " " << r << "\n";
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error("cannot write file: " + path);
    out << content;
}

} // namespace blocker
