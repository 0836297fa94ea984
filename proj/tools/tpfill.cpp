#include "tpfill/chordal.hpp"
#include "tpfill/generate.hpp"
#include "tpfill/min_tpc.hpp"
#include "tpfill/oracle.hpp"
#include "tpfill/slim.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace tpfill;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kNegative = 1, kInvalid = 2, kSkipped = 3, kUsage = 64 };

struct Input {
    Graph g;
    std::string digest;
};

std::string fnv1a(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Input load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    return {parse_edge_list(text), fnv1a(text)};
}

json edges_json(const std::vector<Edge>& es) {
    json a = json::array();
    for (const Edge& e : es) a.push_back({e.u, e.v});
    return a;
}

json forest_json(const RootedForest& f) {
    json trees = json::array();
    for (const auto& t : f.trees) {
        json nodes = json::array();
        const auto& ids = t.vertices();
        const auto& par = t.parent_index();
        for (std::size_t i = 0; i < ids.size(); ++i)
            nodes.push_back({ids[i], par[i] < 0 ? json(nullptr) : json(ids[par[i]])});
        trees.push_back({{"nodes", nodes}, {"base", t.base()}});
    }
    return trees;
}

json witness_json(const Obstruction& o) {
    return {{"kind", o.cycle ? "C4" : "P4"}, {"vertices", o.vertices}};
}

std::vector<Vertex> parse_list(const std::string& text) {
    std::vector<Vertex> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(item, &used);
        } catch (const std::exception&) {
            throw UsageError("bad list item '" + item + "'");
        }
        if (item.find_first_not_of(" \t", used) != std::string::npos) throw UsageError("bad list item '" + item + "'");
        out.push_back(static_cast<Vertex>(v));
    }
    return out;
}

class Report {
public:
    explicit Report(std::string command) : start_(std::chrono::steady_clock::now()) {
        j_["command"] = std::move(command);
        j_["input_digest"] = nullptr;
        j_["seed"] = nullptr;
        j_["verification"] = json::object();
    }
    json& operator[](const char* k) { return j_[k]; }
    void input(const Input& in) {
        j_["input_digest"] = in.digest;
        j_["n"] = in.g.order();
        j_["m"] = in.g.size();
    }
    void fill(const std::vector<Edge>& f) {
        j_["fill"] = f.size();
        j_["fill_edges"] = edges_json(f);
    }
    int emit(int code, const std::string& status) {
        j_["status"] = status;
        j_["exit_code"] = code;
        j_["wall_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
        std::cout << j_.dump(2) << '\n';
        return code;
    }

private:
    json j_;
    std::chrono::steady_clock::time_point start_;
};

int cmd_recognize(const std::string& file, const std::string& dump) {
    Report r("recognize");
    auto in = load(file);
    r.input(in);
    auto res = recognize(in.g);
    if (auto* o = std::get_if<Obstruction>(&res)) {
        r["trivially_perfect"] = false;
        r["witness"] = witness_json(*o);
        return r.emit(kNegative, "not_trivially_perfect");
    }
    const auto& f = std::get<RootedForest>(res);
    r["trivially_perfect"] = true;
    r["forest"] = forest_json(f);
    r["verification"]["round_trip"] = from_forest(f, in.g.order()) == in.g;
    if (!dump.empty()) {
        std::ofstream out(dump);
        if (!out) throw UsageError("cannot write " + dump);
        write_forest(out, f);
    }
    return r.emit(kOk, "ok");
}

int invalid_instance(Report& r, const NotOneAwayFromTP& e) {
    r["error"] = e.what();
    r["witness"] = witness_json(e.witness());
    return r.emit(kInvalid, "invalid_instance");
}

int cmd_complete(const std::string& file, Vertex v, bool emit_forest) {
    Report r("complete");
    auto in = load(file);
    r.input(in);
    if (v < 0 || static_cast<std::size_t>(v) >= in.g.order()) throw UsageError("vertex out of range");
    r["vertex"] = v;
    try {
        MinTpcStats st;
        auto c = min_tpc(in.g, v, &st);
        r.fill(c.fill);
        bool ok = verify_tp_completion(in.g, c.fill);
        r["verified"] = ok;
        r["verification"]["tp_completion"] = ok;
        r["verification"]["upper_bound"] = c.fill_size() <= in.g.order() - 1 - in.g.degree(v);
        r["stats"] = {{"calls", st.calls},         {"memo_hits", st.memo_hits},   {"candidates", st.candidates},
                      {"rejected", st.rejected},   {"recursions", st.recursions},
                      {"max_child_fraction", st.max_child_fraction}};
        if (emit_forest) r["forest"] = forest_json(c.forest);
        return r.emit(ok ? kOk : kNegative, ok ? "ok" : "unverified");
    } catch (const NotOneAwayFromTP& e) {
        return invalid_instance(r, e);
    }
}

int cmd_slim(const std::string& file, const std::string& set) {
    Report r("slim");
    auto in = load(file);
    r.input(in);
    SlimProblem p{in.g, VertexSet(parse_list(set))};
    r["set"] = p.s.items();
    try {
        auto res = slim_tpc(p);
        r.fill(res.fill);
        bool ok = is_slim_completion(p, add_edges(in.g, res.fill));
        r["verified"] = ok;
        r["verification"]["slim_completion"] = ok;
        r["forest"] = forest_json(RootedForest{{res.tree}});
        return r.emit(ok ? kOk : kNegative, ok ? "ok" : "unverified");
    } catch (const InvalidSlimProblem& e) {
        r["error"] = e.what();
        return r.emit(kInvalid, "invalid_instance");
    }
}

int cmd_oracle(const std::string& file, const std::string& target, std::size_t cap) {
    Report r("oracle");
    auto in = load(file);
    r.input(in);
    FillTarget t = target == "tp" ? FillTarget::TriviallyPerfect : FillTarget::Chordal;
    r["target"] = target;
    r["cap"] = cap;
    try {
        auto res = brute_min_fill(in.g, t, cap);
        r.fill(res.witness);
        r["explored"] = res.explored;
        Graph h = add_edges(in.g, res.witness);
        bool ok = t == FillTarget::TriviallyPerfect ? is_trivially_perfect(h) : is_chordal(h);
        r["verified"] = ok;
        r["verification"][t == FillTarget::TriviallyPerfect ? "tp_completion" : "chordal_completion"] = ok;
        return r.emit(kOk, "ok");
    } catch (const OracleTooLarge& e) {
        r["error"] = e.what();
        return r.emit(kSkipped, "oracle_skipped");
    } catch (const FillCapExceeded& e) {
        r["lower_bound"] = e.lower_bound();
        r["explored"] = e.explored();
        return r.emit(kNegative, "cap_exceeded");
    }
}

int cmd_gadget(const std::string& file, std::int64_t k, const std::string& side_a, bool check,
               const std::string& output) {
    Report r("gadget");
    auto in = load(file);
    r.input(in);
    CoBipartiteInstance inst{in.g, {}, {}, k};
    if (!side_a.empty()) {
        inst.a = VertexSet(parse_list(side_a));
        std::vector<Vertex> b;
        for (std::size_t x = 0; x < in.g.order(); ++x)
            if (!inst.a.contains(Vertex(x))) b.push_back(Vertex(x));
        inst.b = VertexSet(b);
    } else if (auto ab = is_cobipartite(in.g)) {
        inst.a = ab->first;
        inst.b = ab->second;
    } else {
        r["error"] = "graph is not co-bipartite";
        return r.emit(kInvalid, "invalid_instance");
    }
    GadgetInstance gi;
    try {
        gi = build_gadget(inst);
    } catch (const InvalidGadgetInput& e) {
        r["error"] = e.what();
        return r.emit(kInvalid, "invalid_instance");
    }
    r["budget"] = k;
    r["a"] = inst.a.items();
    r["b"] = inst.b.items();
    r["K"] = gi.k_big;
    r["v"] = gi.v;
    r["c"] = gi.c.items();
    r["gadget"] = {{"n", gi.g.order()}, {"edges", edges_json(gi.g.edges())}};
    if (!output.empty()) {
        std::ofstream out(output);
        if (!out) throw UsageError("cannot write " + output);
        write_edge_list(out, gi.g);
    }
    if (!check) return r.emit(kOk, "ok");
    if (in.g.order() > 6) {
        r["error"] = "check needs at most 6 vertices";
        return r.emit(kSkipped, "oracle_skipped");
    }
    auto fill_f = exact_chordal_fill(in.g);
    auto fill_g = exact_chordal_fill(gi.g);
    bool lhs = static_cast<std::int64_t>(fill_f) <= k, rhs = static_cast<std::int64_t>(fill_g) <= gi.k_big;
    r["check"] = {{"fill_f", fill_f}, {"fill_gadget", fill_g}, {"f_within_budget", lhs}, {"gadget_within_budget", rhs}};
    r["verification"]["equivalence"] = lhs == rhs;
    return r.emit(lhs == rhs ? kOk : kNegative, lhs == rhs ? "ok" : "disagree");
}

int cmd_crosscheck(const std::string& file, Vertex v) {
    Report r("crosscheck");
    auto in = load(file);
    r.input(in);
    if (v < 0 || static_cast<std::size_t>(v) >= in.g.order()) throw UsageError("vertex out of range");
    r["vertex"] = v;
    std::size_t cap = default_oracle_cap();
    r["oracle_cap"] = cap;
    try {
        auto c = min_tpc(in.g, v);
        r.fill(c.fill);
        r["verification"]["tp_completion"] = verify_tp_completion(in.g, c.fill);
        if (in.g.order() > cap) {
            r["oracle_fill"] = nullptr;
            return r.emit(kSkipped, "oracle_skipped");
        }
        auto b = brute_min_fill(in.g, FillTarget::TriviallyPerfect);
        r["oracle_fill"] = b.min_fill;
        bool agree = b.min_fill == c.fill_size();
        r["verification"]["agree"] = agree;
        return r.emit(agree ? kOk : kNegative, agree ? "agree" : "disagree");
    } catch (const NotOneAwayFromTP& e) {
        return invalid_instance(r, e);
    }
}

int cmd_bench(const std::string& sizes, std::uint64_t seed, int trials) {
    std::cout << "n,seed,fill,millis\n";
    for (Vertex n : parse_list(sizes)) {
        if (n < 2) throw UsageError("bench sizes must be at least 2");
        for (int t = 0; t < trials; ++t) {
            std::uint64_t s = seed + static_cast<std::uint64_t>(n) * 1000003u + static_cast<std::uint64_t>(t);
            Rng rng(s);
            auto inst = random_one_tp(static_cast<std::size_t>(n), rng);
            auto t0 = std::chrono::steady_clock::now();
            auto c = min_tpc(inst.g, inst.v);
            double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            if (!verify_tp_completion(inst.g, c.fill)) throw std::logic_error("bench: unverified completion");
            std::cout << n << ',' << s << ',' << c.fill_size() << ',' << ms << '\n';
        }
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Trivially perfect completion tools"};
    app.require_subcommand(1);

    std::string file, dump, set, target = "tp", side_a, output, sizes = "16,32,64";
    Vertex vertex = -1;
    bool emit_forest = false, check = false;
    std::size_t cap = 16;
    std::int64_t budget = 0;
    std::uint64_t seed = 1;
    int trials = 5;

    auto* rec = app.add_subcommand("recognize", "test for trivial perfectness");
    rec->add_option("--graph", file, "edge list")->required();
    rec->add_option("--dump-forest", dump, "write the forest serialization to this file");

    auto* comp = app.add_subcommand("complete", "minimum completion of a graph one vertex away from TP");
    comp->add_option("--graph", file)->required();
    comp->add_option("--vertex", vertex)->required();
    comp->add_flag("--emit-forest", emit_forest);

    auto* slim = app.add_subcommand("slim", "minimum slim completion");
    slim->add_option("--graph", file)->required();
    slim->add_option("--set", set, "comma separated vertex list")->required();

    auto* orc = app.add_subcommand("oracle", "exhaustive minimum fill");
    orc->add_option("--graph", file)->required();
    orc->add_option("--target", target)->check(CLI::IsMember({"tp", "chordal"}));
    orc->add_option("--cap", cap, "largest fill size tried");

    auto* gad = app.add_subcommand("gadget", "chordal completion gadget of a co-bipartite graph");
    gad->add_option("--graph", file)->required();
    gad->add_option("--budget", budget)->required();
    gad->add_option("--side-a", side_a, "clique A; default from two-colouring the complement");
    gad->add_flag("--check", check, "compare fills with the exact oracle");
    gad->add_option("--output", output, "write the gadget edge list here");

    auto* cross = app.add_subcommand("crosscheck", "compare complete against the oracle");
    cross->add_option("--graph", file)->required();
    cross->add_option("--vertex", vertex)->required();

    auto* bench = app.add_subcommand("bench", "timing over random instances, CSV output");
    bench->add_option("--sizes", sizes);
    bench->add_option("--seed", seed);
    bench->add_option("--trials", trials)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*rec) return cmd_recognize(file, dump);
        if (*comp) return cmd_complete(file, vertex, emit_forest);
        if (*slim) return cmd_slim(file, set);
        if (*orc) return cmd_oracle(file, target, cap);
        if (*gad) return cmd_gadget(file, budget, side_a, check, output);
        if (*cross) return cmd_crosscheck(file, vertex);
        if (*bench) return cmd_bench(sizes, seed, trials);
    } catch (const ParseError& e) {
        std::cerr << "tpfill: " << file << ": " << e.what() << '\n';
        return kUsage;
    } catch (const UsageError& e) {
        std::cerr << "tpfill: " << e.what() << '\n';
        return kUsage;
    } catch (const GraphError& e) {
        std::cerr << "tpfill: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "tpfill: internal error: " << e.what() << '\n';
        return 70;
    }
    return kUsage;
}
