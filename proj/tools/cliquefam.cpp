#include "cliquefam/acceptance.hpp"
#include "cliquefam/bounds.hpp"
#include "cliquefam/clique.hpp"
#include "cliquefam/graph.hpp"
#include "cliquefam/intersect.hpp"
#include "cliquefam/search.hpp"
#include "cliquefam/set_family.hpp"
#include "cliquefam/structure.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

using json = nlohmann::json;
using namespace cliquefam;

namespace {

constexpr const char* kVersion = "1.0.0";

int default_threads() {
    if (const char* env = std::getenv("CLIQUEFAM_THREADS")) {
        int t = std::atoi(env);
        if (t >= 1) return t;
    }
    return 1;
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    return out;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload;
        if (payload.empty() || payload.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
        out << payload;
    }
}

json bits_json(const Bitset& b) { return json(b.to_vector()); }

json family_json(const SetFamily& f) {
    json edges = json::array();
    for (const auto& e : f.edges) edges.push_back(bits_json(e));
    return {{"ground_n", f.ground_n}, {"r", f.r}, {"size", f.edges.size()}, {"edges", edges}};
}

json record(const std::string& sub, json params, json result) {
    return {{"tool_version", kVersion}, {"subcommand", sub}, {"params", std::move(params)},
            {"result", std::move(result)}};
}

// graph6 lines never start with a digit (sizes are offset by 63), family text
// always does; --as overrides the sniff
struct Input {
    std::optional<Graph> graph;
    std::optional<SetFamily> family;
};

Input load_input(const std::string& path, const std::string& as) {
    std::string text = slurp(path);
    std::size_t start = text.find_first_not_of(" \t\r\n");
    if (start == std::string::npos) throw std::invalid_argument("empty input file");
    bool looks_family = std::isdigit(static_cast<unsigned char>(text[start]));
    Input in;
    if (as == "family" || (as.empty() && looks_family)) in.family = decode_family(text);
    else in.graph = decode_graph6(text);
    return in;
}

json spectrum_json(const SetFamily& f) {
    json arr = json::array();
    for (int v : intersection_spectrum(f)) arr.push_back(v);
    return arr;
}

json bound_json(const BoundReport& b) {
    return {{"name", b.name}, {"value", b.value.get_str()}, {"applicability", b.applicability}};
}

struct Args {
    int n = 0, r = 0, t = 0, m = 0, s = 0, d = 0, k = 0;
    std::string L, kind, variant = "ii", format, in, out, as, property, mode, only;
    std::string sunflower_core, hm_D;
    int atoms_d = 0;
    long long prune_threshold = -1;
    int cover_t = 0;
    long long cover_threshold = -1;
    bool have_cover_threshold = false;
    long long budget = -1;
    int threads = default_threads();
    unsigned seed = 20240917;
    std::string emit_witness;
};

int run_construct(const Args& a) {
    Graph g;
    SetFamily fam;
    bool is_family = false;
    json params{{"kind", a.kind}};
    if (a.kind == "complete") {
        g = complete(a.k ? a.k : a.n);
        params["k"] = a.k ? a.k : a.n;
    } else if (a.kind == "empty") {
        g = empty_graph(a.n);
        params["n"] = a.n;
    } else if (a.kind == "turan") {
        g = turan(a.n, a.t);
        params["n"] = a.n;
        params["t"] = a.t;
    } else if (a.kind == "blown") {
        g = blown_turan(a.m, a.s, a.d);
        params["m"] = a.m;
        params["s"] = a.s;
        params["d"] = a.d;
    } else if (a.kind == "ap") {
        g = extremal_ap(a.n, a.r, parse_int_list(a.L));
        params["n"] = a.n;
        params["r"] = a.r;
        params["L"] = parse_int_list(a.L);
    } else if (a.kind == "ekr") {
        g = join(complete(a.t), turan(a.n - a.t, a.r - a.t));
        params["n"] = a.n;
        params["r"] = a.r;
        params["t"] = a.t;
    } else if (a.kind == "hm") {
        g = hm_extremal(a.n, a.r, a.t);
        params["n"] = a.n;
        params["r"] = a.r;
        params["t"] = a.t;
    } else if (a.kind == "frankl") {
        fam = frankl_family(a.n, a.r, a.t, a.variant == "i" ? FranklVariant::I : FranklVariant::II);
        is_family = true;
        params["n"] = a.n;
        params["r"] = a.r;
        params["t"] = a.t;
        params["variant"] = a.variant;
    } else {
        throw std::invalid_argument("unknown construct kind: " + a.kind);
    }

    std::string format = a.format;
    if (format.empty()) format = is_family ? "text" : "g6";
    if (is_family) {
        if (format == "text") emit(a.out, encode_family(fam));
        else if (format == "json")
            emit(a.out, record("construct", params, family_json(fam)).dump(2));
        else throw std::invalid_argument("frankl supports --format text|json");
    } else {
        if (format == "g6") emit(a.out, encode_graph6(g));
        else if (format == "json")
            emit(a.out, record("construct", params,
                               json{{"graph6", encode_graph6(g)}, {"n", g.n()}, {"edges", g.edge_count()}})
                            .dump(2));
        else throw std::invalid_argument("graphs support --format g6|json");
    }
    return 0;
}

int run_count(const Args& a) {
    Input in = load_input(a.in, a.as);
    json params{{"in", a.in}, {"r", a.r}, {"threads", a.threads}};
    mpz_class cnt;
    int n = 0;
    if (in.graph) {
        cnt = count_cliques(*in.graph, a.r, a.threads);
        n = in.graph->n();
    } else {
        if (a.r && a.r != in.family->r)
            throw std::invalid_argument("--r disagrees with the family's uniformity");
        cnt = (long)in.family->edges.size();
        n = in.family->ground_n;
    }
    emit("", record("count", params, json{{"n", n}, {"count", cnt.get_str()}}).dump(2));
    return 0;
}

int run_verify(const Args& a) {
    Input in = load_input(a.in, a.as);
    SetFamily f;
    if (in.graph) {
        if (a.r < 1) throw std::invalid_argument("verify on a graph needs --r");
        f = associated_r_graph(*in.graph, a.r);
    } else {
        f = *in.family;
        if (a.r && a.r != f.r) throw std::invalid_argument("--r disagrees with the family's uniformity");
    }

    json params{{"in", a.in}, {"property", a.property}, {"r", f.r}};
    json result{{"property", a.property}, {"spectrum", spectrum_json(f)}, {"family_size", f.edges.size()}};

    auto pair_witness = [&](const PairWitness& w) {
        return json{{"a", bits_json(w.a)}, {"b", bits_json(w.b)}, {"intersection_size", w.size}};
    };

    if (a.property == "L-intersecting") {
        IntersectSpec spec(f.r, parse_int_list(a.L));
        params["L"] = spec.L;
        auto res = is_L_intersecting(f, spec);
        result["holds"] = res.holds;
        result["vacuous"] = res.vacuous;
        if (res.witness) result["witness"] = pair_witness(*res.witness);
    } else if (a.property == "t-intersecting" || a.property == "nontrivial-t-intersecting") {
        params["t"] = a.t;
        auto res = is_t_intersecting(f, a.t);
        result["vacuous"] = res.vacuous;
        if (res.witness) result["witness"] = pair_witness(*res.witness);
        result["common_intersection"] = bits_json(common_intersection(f));
        if (a.property == "t-intersecting") result["holds"] = res.holds;
        else result["holds"] = is_nontrivial_t_intersecting(f, a.t);
    } else if (a.property == "cover-free") {
        params["t"] = a.t;
        auto res = is_t_cover_free(f, a.t);
        result["holds"] = res.holds;
        if (res.witness) {
            json covers = json::array();
            for (const auto& c : res.witness->covers) covers.push_back(bits_json(c));
            result["witness"] = {{"covered", bits_json(res.witness->covered)}, {"covers", covers}};
        }
    } else {
        throw std::invalid_argument("unknown property: " + a.property);
    }
    emit("", record("verify", params, result).dump(2));
    return 0;
}

int run_analyze(const Args& a) {
    Input in = load_input(a.in, a.as);
    if (!in.graph) throw std::invalid_argument("analyze expects a graph6 input");
    const Graph& g = *in.graph;
    if (a.r < 1) throw std::invalid_argument("analyze needs --r");
    SetFamily h = associated_r_graph(g, a.r);

    json params{{"in", a.in}, {"r", a.r}};
    json reports;

    if (!a.sunflower_core.empty()) {
        Bitset core(g.n());
        for (int v : parse_int_list(a.sunflower_core)) core.set(v);
        SunflowerResult sr = max_sunflower_with_core(h, core);
        json petals = json::array();
        for (const auto& p : sr.petals) petals.push_back(bits_json(p));
        reports["sunflower"] = {{"core", bits_json(core)}, {"petal_count", sr.petal_count()},
                                {"petals", petals}};
        params["sunflower_core"] = a.sunflower_core;
    }
    if (a.atoms_d > 0) {
        AtomsResult ar = atoms(h, a.atoms_d);
        json cells = json::array();
        bool uniform = true;
        for (const auto& c : ar.atoms.cells) {
            cells.push_back(bits_json(c));
            uniform = uniform && c.count() == a.atoms_d;
        }
        json leftover_deg = json::object();
        auto deg = h.degrees();
        for (int v = ar.leftover.find_first(); v >= 0; v = ar.leftover.find_next(v))
            leftover_deg[std::to_string(v)] = deg[std::size_t(v)];
        reports["atoms"] = {{"d", a.atoms_d},
                            {"cells", cells},
                            {"leftover", bits_json(ar.leftover)},
                            {"leftover_degrees", leftover_deg}};
        if (uniform && !ar.atoms.cells.empty()) {
            QuotientReport q = verify_quotient_claims(g, a.r, a.atoms_d, ar.atoms);
            reports["quotient_claims"] = {{"cliques_are_cell_unions", q.cliques_are_cell_unions},
                                          {"counts_equal", q.counts_equal},
                                          {"quotient_is_01_intersecting", q.quotient_is_01_intersecting},
                                          {"clique_count", q.clique_count.get_str()},
                                          {"quotient_count", q.quotient_count.get_str()},
                                          {"ell_divides_r", q.ell_divides_r}};
        }
        params["atoms_d"] = a.atoms_d;
    }
    if (a.prune_threshold >= 0) {
        PruneResult pr = prune_low_degree(g, a.r, a.prune_threshold);
        reports["prune"] = {{"threshold", a.prune_threshold},
                            {"kept", pr.kept},
                            {"deleted_order", pr.deleted_order},
                            {"surviving_clique_count", count_cliques(pr.graph, a.r).get_str()}};
        params["prune_threshold"] = a.prune_threshold;
    }
    if (a.cover_t > 0) {
        std::optional<long long> thr;
        if (a.have_cover_threshold) thr = a.cover_threshold;
        CoverFamilies cf = cover_families(g, a.r, a.cover_t, thr);
        json tj, tjm;
        for (const auto& [j, fam] : cf.t_j) tj[std::to_string(j)] = fam.size();
        for (const auto& [j, fam] : cf.t_j_min) {
            json arr = json::array();
            for (const auto& b : fam) arr.push_back(bits_json(b));
            tjm[std::to_string(j)] = arr;
        }
        json heavy = json::array();
        for (const auto& b : cf.t_heavy) heavy.push_back(bits_json(b));
        reports["cover_families"] = {{"t", a.cover_t}, {"threshold", cf.threshold},
                                     {"t_j_sizes", tj},  {"t_j_minimal", tjm},
                                     {"t_heavy", heavy}};
        params["cover_t"] = a.cover_t;

        if (!a.hm_D.empty()) {
            Bitset D(g.n());
            for (int v : parse_int_list(a.hm_D)) D.set(v);
            HmDecomposition dec = hm_decomposition(g, a.r, a.cover_t, D);
            json terms = json::array();
            for (const auto& t : dec.ni_terms) terms.push_back(t.get_str());
            json rep{{"D", bits_json(D)},
                     {"total", dec.total.get_str()},
                     {"within_d_total", dec.within_d_total.get_str()},
                     {"n0_term", dec.n0_term.get_str()},
                     {"ni_terms", terms},
                     {"equality", dec.equality},
                     {"ni_krt_free", dec.ni_krt_free}};
            if (dec.violating_clique) rep["violating_clique"] = bits_json(*dec.violating_clique);
            reports["hm_decomposition"] = rep;
        }
    }
    emit("", record("analyze", params, reports).dump(2));
    return 0;
}

int run_bounds(const Args& a) {
    std::vector<int> L = parse_int_list(a.L);
    json params{{"n", a.n}, {"r", a.r}, {"L", L}};
    json rows = json::array();
    rows.push_back(bound_json(def_bound(a.n, a.r, L)));
    if (L.size() >= 2 && int(L.size()) <= a.r - 1) rows.push_back(bound_json(helliar_liu_bound(a.n, a.r, L)));

    APClass cls = classify_ap(a.r, L);
    json clsj{{"size_flagged", cls.size_flagged}};
    if (cls.kind == APKind::AP) {
        clsj["kind"] = "AP";
        clsj["d"] = cls.d;
        rows.push_back(bound_json(ap_exact_value(a.n, a.r, L)));
    } else if (cls.kind == APKind::NotApLastGapEqual) {
        clsj["kind"] = "NOT_AP_LAST_GAP_EQUAL";
    } else {
        clsj["kind"] = "NOT_AP_LAST_GAP_DIFFERS";
    }

    // L = [t, r-1] is the EKR regime; the HM value bounds its non-trivial part
    if (!L.empty() && L.back() == a.r - 1 && int(L.size()) == a.r - L.front() && L.front() >= 1) {
        int t = L.front();
        if (a.r - t - 1 >= 1 && a.n >= t + 2) rows.push_back(bound_json(hm_value(a.n, a.r, t)));
    }

    // {0, l2, l3} with r-l3 = l3-l2 != l2: the prime-power argument bounds
    // Phi by binom(n,2)
    if (L.size() == 3 && L[0] == 0 && a.r - L[2] == L[2] - L[1] && L[2] - L[1] != L[1]) {
        if (auto q = find_prime_power(L[1], L[2])) {
            BoundReport b{"mod_q_bound", mpq_class(binomial(a.n, 2)),
                          "prime power q=" + std::to_string(*q) +
                              " divides l3 but not 2*l2; bounds any such family by binom(n,2)"};
            rows.push_back(bound_json(b));
        }
    }

    emit("", record("bounds", params, json{{"bounds", rows}, {"classification", clsj}}).dump(2));
    return 0;
}

int run_search(const Args& a) {
    SearchConfig cfg;
    cfg.node_budget = a.budget;
    cfg.threads = a.threads;
    json params{{"mode", a.mode}, {"n", a.n},      {"r", a.r},
                {"budget", a.budget}, {"threads", a.threads}};

    SearchResult res;
    std::vector<int> L;
    if (a.mode == "psi" || a.mode == "phi") {
        L = parse_int_list(a.L);
        params["L"] = L;
        res = a.mode == "psi" ? exact_psi(a.n, a.r, L, cfg) : exact_phi(a.n, a.r, L, cfg);
    } else if (a.mode == "coverfree") {
        params["t"] = a.t;
        res = exact_cover_free(a.n, a.r, a.t, cfg);
    } else {
        throw std::invalid_argument("unknown search mode: " + a.mode);
    }

    json result{{"value", res.value.get_str()},
                {"exhaustive", res.exhaustive},
                {"nodes_explored", res.nodes},
                {"elapsed_ms", res.elapsed.count()}};
    if (a.mode != "coverfree") {
        result["def_bound"] = def_bound(a.n, a.r, L).value.get_str();
        if (a.mode == "psi" && classify_ap(a.r, L).kind == APKind::AP) {
            mpq_class ap = ap_exact_value(a.n, a.r, L).value;
            result["ap_value"] = ap.get_str();
            result["gap_to_ap_value"] = mpq_class(mpq_class(res.value) - ap).get_str();
        }
    }
    if (res.witness_graph) {
        result["witness"] = {{"graph6", encode_graph6(*res.witness_graph)},
                             {"clique_count", res.value.get_str()}};
        if (!a.emit_witness.empty()) emit(a.emit_witness, encode_graph6(*res.witness_graph));
    } else if (res.witness_family) {
        result["witness"] = family_json(*res.witness_family);
        if (!a.emit_witness.empty()) emit(a.emit_witness, encode_family(*res.witness_family));
    }
    emit("", record("search", params, result).dump(2));
    return res.exhaustive ? 0 : 3;
}

int run_repro(const Args& a) {
    auto rows = accept::run_acceptance(a.only, a.threads, a.seed);
    return accept::print_rows(rows) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cliquefam: extremal clique-intersection constructions, verifiers, bounds and exact search"};
    app.require_subcommand(1);
    Args a;

    auto* construct = app.add_subcommand("construct", "build a named construction");
    construct->add_option("--kind", a.kind)->required();
    construct->add_option("--n", a.n);
    construct->add_option("--r", a.r);
    construct->add_option("--t", a.t);
    construct->add_option("--m", a.m);
    construct->add_option("--s", a.s);
    construct->add_option("--d", a.d);
    construct->add_option("--k", a.k);
    construct->add_option("--L", a.L);
    construct->add_option("--variant", a.variant);
    construct->add_option("--format", a.format);
    construct->add_option("--out", a.out);

    auto* count = app.add_subcommand("count", "count r-cliques / family edges");
    count->add_option("--in", a.in)->required();
    count->add_option("--r", a.r);
    count->add_option("--threads", a.threads);
    count->add_option("--as", a.as);

    auto* verify = app.add_subcommand("verify", "test an intersection property");
    verify->add_option("--property", a.property)->required();
    verify->add_option("--in", a.in)->required();
    verify->add_option("--r", a.r);
    verify->add_option("--L", a.L);
    verify->add_option("--t", a.t);
    verify->add_option("--as", a.as);

    auto* analyze = app.add_subcommand("analyze", "structural reports on a graph");
    analyze->add_option("--in", a.in)->required();
    analyze->add_option("--r", a.r)->required();
    analyze->add_option("--sunflower-core", a.sunflower_core);
    analyze->add_option("--atoms-d", a.atoms_d);
    analyze->add_option("--prune-threshold", a.prune_threshold);
    analyze->add_option("--cover-t", a.cover_t);
    auto* ct = analyze->add_option("--cover-threshold", a.cover_threshold);
    analyze->add_option("--hm-D", a.hm_D);
    analyze->add_option("--as", a.as);

    auto* bounds = app.add_subcommand("bounds", "evaluate every applicable closed-form bound");
    bounds->add_option("--n", a.n)->required();
    bounds->add_option("--r", a.r)->required();
    bounds->add_option("--L", a.L)->required();

    auto* search = app.add_subcommand("search", "exact desk-scale extremal search");
    search->add_option("--mode", a.mode)->required();
    search->add_option("--n", a.n)->required();
    search->add_option("--r", a.r)->required();
    search->add_option("--L", a.L);
    search->add_option("--t", a.t);
    search->add_option("--budget", a.budget);
    search->add_option("--threads", a.threads);
    search->add_option("--emit-witness", a.emit_witness);

    auto* repro = app.add_subcommand("repro", "run the full acceptance table");
    repro->add_option("--only", a.only);
    repro->add_option("--threads", a.threads);
    repro->add_option("--seed", a.seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        a.have_cover_threshold = ct->count() > 0;
        if (construct->parsed()) return run_construct(a);
        if (count->parsed()) return run_count(a);
        if (verify->parsed()) return run_verify(a);
        if (analyze->parsed()) return run_analyze(a);
        if (bounds->parsed()) return run_bounds(a);
        if (search->parsed()) return run_search(a);
        if (repro->parsed()) return run_repro(a);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
