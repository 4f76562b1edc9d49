// blocker: solve / oracle / recognize / classify / reduce / gen / verify / bench
//
// Exit codes for `solve`: 0 = yes, 1 = no, 2 = unsupported class for the
// requested (parameter, operation) pair, 3 = input or module error.

#include <CLI11.hpp>

#include "blocker/gen.hpp"
#include "blocker/io.hpp"
#include "blocker/oracle.hpp"
#include "blocker/params.hpp"
#include "blocker/recognize.hpp"
#include "blocker/reductions.hpp"
#include "blocker/solvers.hpp"

#include <chrono>
#include <iostream>

#include <json.hpp>

using namespace blocker;

namespace {

struct Dispatch {
    bool handled = false;       // a solver ran
    std::string solver;         // which one
    solvers::SolverAnswer answer;
    std::string refusal;        // why a named class could not take the instance
};

// one class's solver for the instance, or refusal text
Dispatch try_class(const std::string& cls, const BlockerInstance& inst,
                   const std::optional<IntervalModel>& model) {
    const Param pi = inst.pi;
    const OpKind kind = inst.kind;
    Dispatch out;
    auto unsupported = [&](const std::string& why) {
        out.refusal = why;
        return out;
    };
    auto answer = [&](const char* name, solvers::SolverAnswer a) {
        out.handled = true;
        out.solver = name;
        out.answer = std::move(a);
        return out;
    };

    if (cls == "tree") {
        if (!recognize::is_tree(inst.g)) return unsupported("not a tree");
        if (pi == Param::alpha && kind == OpKind::contract)
            return answer("tree", solvers::tree_contraction_blocker_alpha(inst.g, inst.d, inst.k));
        return unsupported("tree solver covers contraction blocker(alpha) only");
    }
    if (cls == "cograph") {
        if (!recognize::is_cograph(inst.g)) return unsupported("not a cograph");
        int kc = kind == OpKind::contract ? inst.k : 0;
        int kd = kind == OpKind::vdelete ? inst.k : 0;
        return answer("cograph", solvers::cograph_blocker_decide(inst.g, pi, inst.d, kc, kd));
    }
    if (cls == "split") {
        if (!recognize::is_split(inst.g)) return unsupported("not a split graph");
        if (kind == OpKind::contract)
            return answer("split", solvers::split_contraction_blocker(inst.g, pi, inst.d, inst.k));
        return unsupported("deletion blockers on split graphs are NP-complete in general; "
                           "the fixed-d algorithm is cited, not implemented (--force-oracle "
                           "runs the exhaustive search)");
    }
    if (cls == "interval") {
        if (!model) return unsupported("no interval model given (--model)");
        if (!recognize::validate_interval_model(inst.g, *model))
            throw error("interval model does not realize the instance graph");
        if (pi == Param::alpha)
            return unsupported("blocker(alpha) on interval graphs is an open problem");
        auto a = kind == OpKind::contract
                     ? solvers::interval_contraction_blocker(*model, pi, inst.d)
                     : solvers::interval_deletion_blocker(*model, pi, inst.d);
        a.decision = a.min_k.has_value() && *a.min_k <= inst.k;
        if (!a.decision) a.witness.reset();
        return answer("interval", std::move(a));
    }
    if (cls == "bipartite") {
        if (!params::is_bipartite(inst.g)) return unsupported("not bipartite");
        if (kind == OpKind::vdelete && pi != Param::alpha)
            return answer("bipartite",
                          solvers::bipartite_deletion_blocker(inst.g, pi, inst.d, inst.k));
        if (kind == OpKind::vdelete)
            return unsupported("deletion blocker(alpha) on bipartite graphs is polynomial in "
                               "the literature but outside this solver set");
        if (pi == Param::alpha)
            return unsupported("contraction blocker(alpha) is NP-hard on bipartite graphs");
        return unsupported("use the triangle-free solver for omega contraction on "
                           "bipartite graphs");
    }
    if (cls == "cobipartite") {
        if (!recognize::is_cobipartite(inst.g)) return unsupported("not cobipartite");
        if (kind == OpKind::vdelete && pi == Param::alpha)
            return answer("cobipartite",
                          solvers::cobipartite_deletion_blocker_alpha(inst.g, inst.d, inst.k));
        if (kind == OpKind::contract && pi != Param::alpha)
            // cobipartite graphs are perfect and closed under contraction, so
            // omega and chi coincide; the 3P1-free chi solver applies
            return answer("cobipartite (via 3P1-free chi)",
                          solvers::contraction_blocker_chi_3p1free(inst.g, inst.d, inst.k));
        if (kind == OpKind::contract)
            return unsupported("1-contraction blocker(alpha) is NP-complete on cobipartite "
                               "graphs");
        return unsupported("deletion blocker(omega/chi) on cobipartite graphs is polynomial "
                           "in the literature but outside this solver set");
    }
    if (cls == "3p1free") {
        if (!recognize::is_3p1_free(inst.g)) return unsupported("not 3P1-free");
        if (pi == Param::chi && kind == OpKind::contract)
            return answer("3p1free",
                          solvers::contraction_blocker_chi_3p1free(inst.g, inst.d, inst.k));
        if (pi == Param::chi && kind == OpKind::vdelete)
            return answer("3p1free",
                          solvers::deletion_blocker_chi_3p1free(inst.g, inst.d, inst.k));
        return unsupported("3P1-free solvers cover chi only");
    }
    if (cls == "p1p3free") {
        if (!recognize::is_p1p3_free(inst.g)) return unsupported("not (P1+P3)-free");
        if (pi == Param::chi && kind == OpKind::vdelete)
            return answer("p1p3free",
                          solvers::deletion_blocker_chi_p1p3free(inst.g, inst.d, inst.k));
        return unsupported("(P1+P3)-free solver covers deletion blocker(chi) only");
    }
    if (cls == "trianglefree") {
        if (!recognize::is_triangle_free(inst.g)) return unsupported("not triangle-free");
        if (pi == Param::omega && kind == OpKind::contract)
            return answer("trianglefree", solvers::triangle_free_contraction_blocker_omega(
                                              inst.g, inst.d, inst.k));
        return unsupported("triangle-free solver covers contraction blocker(omega) only");
    }
    throw error("unknown class: " + cls);
}

const std::vector<std::string> kAutoOrder = {
    "tree",        "cograph", "split",    "interval", "bipartite",
    "cobipartite", "3p1free", "p1p3free", "trianglefree"};

int cmd_solve(const std::string& instance_path, const std::string& cls,
              const std::string& model_path, const std::string& witness_out, bool as_json,
              bool force_oracle) {
    BlockerInstance inst = parse_instance(read_file(instance_path));
    std::optional<IntervalModel> model;
    if (!model_path.empty()) model = parse_interval_model(read_file(model_path));

    Dispatch result;
    std::vector<std::string> refusals;
    if (cls == "auto") {
        for (const auto& c : kAutoOrder) {
            Dispatch d = try_class(c, inst, model);
            if (d.handled) {
                result = std::move(d);
                break;
            }
            refusals.push_back(c + ": " + d.refusal);
        }
    } else {
        result = try_class(cls, inst, model);
        if (!result.handled) refusals.push_back(cls + ": " + result.refusal);
    }

    if (!result.handled && force_oracle) {
        auto [yes, w] = oracle::oracle_decide(inst);
        result.handled = true;
        result.solver = "oracle (forced)";
        result.answer.decision = yes;
        result.answer.witness = w;
    }
    if (!result.handled) {
        std::cerr << "no applicable polynomial solver for this instance:\n";
        for (const auto& r : refusals) std::cerr << "  " << r << "\n";
        return 2;
    }

    const auto& a = result.answer;
    if (as_json) {
        nlohmann::json j;
        j["solver"] = result.solver;
        j["decision"] = a.decision;
        if (a.min_k) j["min_k"] = *a.min_k;
        if (a.witness) j["witness"] = serialize_witness(*a.witness);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (a.decision ? "yes" : "no");
        if (a.min_k) std::cout << ", min_k=" << *a.min_k;
        std::cout << "  [" << result.solver << "]\n";
    }
    if (!witness_out.empty() && a.witness) write_file(witness_out, serialize_witness(*a.witness));
    return a.decision ? 0 : 1;
}

int cmd_oracle(const std::string& instance_path, bool as_json) {
    BlockerInstance inst = parse_instance(read_file(instance_path));
    auto r = oracle::oracle_min_k(inst.g, inst.pi, inst.kind, inst.d);
    bool decision = r.feasible && *r.min_k <= inst.k;
    if (as_json) {
        nlohmann::json j;
        j["feasible"] = r.feasible;
        j["decision"] = decision;
        if (r.min_k) j["min_k"] = *r.min_k;
        if (r.witness) j["witness"] = serialize_witness(*r.witness);
        std::cout << j.dump(2) << "\n";
    } else {
        if (!r.feasible)
            std::cout << "infeasible (no operation sequence achieves the drop)\n";
        else
            std::cout << (decision ? "yes" : "no") << ", min_k=" << *r.min_k << "\n";
    }
    return decision ? 0 : 1;
}

int cmd_verify(const std::string& instance_path, const std::string& witness_path) {
    BlockerInstance inst = parse_instance(read_file(instance_path));
    Witness w = parse_witness(read_file(witness_path));
    bool ok = oracle::verify_witness(inst, w);
    std::cout << (ok ? "true" : "false") << "\n";
    return ok ? 0 : 1;
}

int cmd_recognize(const std::string& graph_path, const std::string& model_path) {
    Graph g = parse_graph(read_file(graph_path));
    auto flag = [](bool b) { return b ? "yes" : "no"; };
    std::cout << "tree:          " << flag(recognize::is_tree(g)) << "\n";
    auto ct = recognize::cotree(g);
    if (auto* t = std::get_if<recognize::Cotree>(&ct)) {
        std::cout << "cograph:       yes  cotree: " << t->dump() << "\n";
    } else {
        auto p4 = std::get<std::array<Vertex, 4>>(ct);
        std::cout << "cograph:       no  (induced P4: " << p4[0] << "-" << p4[1] << "-"
                  << p4[2] << "-" << p4[3] << ")\n";
    }
    if (auto sp = recognize::split_partition(g, recognize::SplitFlavor::minimal)) {
        std::cout << "split:         yes  (minimal partition: |K|=" << sp->clique.size()
                  << ", |I|=" << sp->independent.size() << ")\n";
    } else {
        std::cout << "split:         no\n";
    }
    std::cout << "bipartite:     " << flag(params::is_bipartite(g)) << "\n";
    std::cout << "cobipartite:   " << flag(recognize::is_cobipartite(g)) << "\n";
    std::cout << "chordal:       " << flag(recognize::is_chordal(g)) << "\n";
    std::cout << "triangle-free: " << flag(recognize::is_triangle_free(g)) << "\n";
    std::cout << "3P1-free:      " << flag(recognize::is_3p1_free(g)) << "\n";
    std::cout << "(P1+P3)-free:  " << flag(recognize::is_p1p3_free(g)) << "\n";
    if (!model_path.empty()) {
        IntervalModel m = parse_interval_model(read_file(model_path));
        std::cout << "interval model valid: "
                  << flag(recognize::validate_interval_model(g, m)) << "\n";
    }
    return 0;
}

int cmd_classify(const std::string& h_path, const std::string& pi_s, const std::string& kind_s) {
    Graph h = parse_graph(read_file(h_path));
    auto d = recognize::classify(h, parse_param(pi_s), parse_op_kind(kind_s));
    std::cout << recognize::to_string(d.verdict) << " [" << d.citation << "]\n";
    return 0;
}

int cmd_reduce(const std::string& from, const std::string& input_path, const std::string& out,
               const std::string& pi_s, int k, int l, int p) {
    std::string payload;
    if (from == "rbds") {
        RbdsInstance src = parse_rbds(read_file(input_path));
        auto inst = parse_param(pi_s) == Param::alpha
                        ? reductions::reduce_rbds_to_split_alpha(src)
                        : reductions::reduce_rbds_to_split_chi(src);
        payload = serialize_instance(inst);
    } else if (from == "1in3sat") {
        auto inst = reductions::reduce_1in3sat_to_omega(parse_dimacs_cnf(read_file(input_path)));
        payload = serialize_instance(inst);
    } else if (from == "vc") {
        payload = serialize_instance(
            reductions::reduce_vc_to_chordal(parse_graph(read_file(input_path)), k));
    } else if (from == "biclique") {
        payload = serialize_instance(
            reductions::reduce_biclique_to_cobipartite_chi(parse_graph(read_file(input_path))));
    } else if (from == "cliqueproof") {
        payload = serialize_instance(
            reductions::clique_proof_lift(parse_graph(read_file(input_path)), l));
    } else if (from == "girth") {
        payload = serialize_graph(
            reductions::girth_lift(parse_graph(read_file(input_path)), p));
    } else if (from == "cobipartite") {
        payload = serialize_instance(reductions::reduce_cobipartite_alpha_to_bipartite(
            parse_graph(read_file(input_path)), k));
    } else if (from == "c4lift") {
        payload = serialize_instance(
            reductions::lift_to_c4free_perfect(parse_graph(read_file(input_path)), k));
    } else {
        throw error("unknown reduction: " + from);
    }
    if (out.empty())
        std::cout << payload;
    else
        write_file(out, payload);
    return 0;
}

int cmd_gen(const std::string& cls, int n, std::uint64_t seed, const std::string& out,
            const std::string& model_out) {
    Graph g;
    std::optional<IntervalModel> model;
    if (cls == "tree") g = gen::random_tree(n, seed);
    else if (cls == "cograph") g = gen::random_cograph(n, seed);
    else if (cls == "split") g = gen::random_split(n, seed);
    else if (cls == "interval") {
        auto [gg, m] = gen::random_interval(n, seed);
        g = std::move(gg);
        model = std::move(m);
    } else if (cls == "cobipartite") g = gen::random_cobipartite(n, seed);
    else if (cls == "trianglefree") g = gen::random_triangle_free(n, seed);
    else if (cls == "3p1free") g = gen::random_3p1_free(n, seed);
    else throw error("unknown class: " + cls);

    if (out.empty())
        std::cout << serialize_graph(g);
    else
        write_file(out, serialize_graph(g));
    if (model) {
        if (model_out.empty())
            std::cout << serialize_interval_model(*model);
        else
            write_file(model_out, serialize_interval_model(*model));
    }
    return 0;
}

int cmd_bench(const std::string& suite, const std::string& out) {
    if (suite != "core") throw error("unknown suite: " + suite);
    std::ostringstream csv;
    csv << "class,n,d,solver_ms,oracle_ms\n";
    auto ms_since = [](auto t0) {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    };

    for (int n : {50, 100, 200}) {
        auto [g, m] = gen::random_interval(n, 1000 + n);
        auto t0 = std::chrono::steady_clock::now();
        solvers::interval_contraction_blocker(m, Param::omega, 2);
        csv << "interval," << n << ",2," << ms_since(t0) << ",\n";
    }
    for (int n : {50, 100}) {
        Graph g = gen::random_cograph(n, 2000 + n);
        auto t0 = std::chrono::steady_clock::now();
        solvers::cograph_blocker(g, Param::chi, 2, 2); // k + l = 4
        csv << "cograph," << n << ",2," << ms_since(t0) << ",\n";
    }
    {
        Graph g = gen::random_graph(8, 77, 0.5);
        auto t0 = std::chrono::steady_clock::now();
        oracle::oracle_min_k(g, Param::chi, OpKind::contract, 1);
        csv << "oracle,8,1,," << ms_since(t0) << "\n";
    }

    if (out.empty())
        std::cout << csv.str();
    else
        write_file(out, csv.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"blocker problems on graphs: reduce alpha/omega/chi by d with at most k "
                 "contractions or deletions"};
    app.require_subcommand(1);

    std::string instance_path, cls = "auto", model_path, witness_out, witness_path;
    std::string graph_path, pi_s = "alpha", kind_s = "delete", from, input_path, out;
    std::string suite = "core";
    bool as_json = false, force_oracle = false;
    int n = 8, k = 0, l = 1, p = 3;
    std::uint64_t seed = 1;

    auto* solve = app.add_subcommand("solve", "dispatch a class solver on an instance");
    solve->add_option("instance", instance_path)->required();
    solve->add_option("--class", cls)->check(CLI::IsMember(
        {"auto", "tree", "cograph", "split", "interval", "bipartite", "cobipartite",
         "3p1free", "p1p3free", "trianglefree"}));
    solve->add_option("--model", model_path, "interval model file");
    solve->add_option("--witness-out", witness_out);
    solve->add_flag("--json", as_json);
    solve->add_flag("--force-oracle", force_oracle);

    auto* orc = app.add_subcommand("oracle", "exhaustive ground-truth search");
    orc->add_option("instance", instance_path)->required();
    orc->add_flag("--json", as_json);

    auto* ver = app.add_subcommand("verify", "replay a witness against an instance");
    ver->add_option("instance", instance_path)->required();
    ver->add_option("witness", witness_path)->required();

    auto* rec = app.add_subcommand("recognize", "class membership report");
    rec->add_option("graph", graph_path)->required();
    rec->add_option("--model", model_path);

    auto* cla = app.add_subcommand("classify", "H-free dichotomy verdict");
    cla->add_option("H", graph_path)->required();
    cla->add_option("--pi", pi_s)->required();
    cla->add_option("--kind", kind_s)->required();

    auto* red = app.add_subcommand("reduce", "emit a hardness-gadget instance");
    red->add_option("--from", from)->required()->check(CLI::IsMember(
        {"rbds", "1in3sat", "vc", "biclique", "cliqueproof", "girth", "cobipartite",
         "c4lift"}));
    red->add_option("input", input_path)->required();
    red->add_option("-o,--out", out);
    red->add_option("--pi", pi_s, "rbds variant: alpha or chi");
    red->add_option("--k", k, "budget for vc/cobipartite/c4lift");
    red->add_option("--l", l, "clique size parameter for cliqueproof");
    red->add_option("--p", p, "girth bound for girth");

    auto* g = app.add_subcommand("gen", "seeded in-class instance generator");
    g->add_option("--class", cls)->required()->check(CLI::IsMember(
        {"tree", "cograph", "split", "interval", "cobipartite", "trianglefree", "3p1free"}));
    g->add_option("--n", n)->required();
    g->add_option("--seed", seed);
    g->add_option("-o,--out", out);
    g->add_option("--model-out", model_path);

    auto* bench = app.add_subcommand("bench", "timing table (CSV)");
    bench->add_option("--suite", suite);
    bench->add_option("--out", out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed())
            return cmd_solve(instance_path, cls, model_path, witness_out, as_json, force_oracle);
        if (orc->parsed()) return cmd_oracle(instance_path, as_json);
        if (ver->parsed()) return cmd_verify(instance_path, witness_path);
        if (rec->parsed()) return cmd_recognize(graph_path, model_path);
        if (cla->parsed()) return cmd_classify(graph_path, pi_s, kind_s);
        if (red->parsed()) return cmd_reduce(from, input_path, out, pi_s, k, l, p);
        if (g->parsed()) return cmd_gen(cls, n, seed, out, model_path);
        if (bench->parsed()) return cmd_bench(suite, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
