// srg: command-line front end.
//
// Graph arguments are graph6 files (the first graph in the file is used)
// or fixture names written as fixture:NAME. Exit status: 0 success,
// 1 a check or verification failed, 2 usage or input error.

#include "srg/report.hpp"
#include "srg/srg.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace srg;

struct RunConfig {
    std::uint64_t budget = unlimited_budget;
    std::size_t threads = 1;
    bool json = false;
};

Graph load_graph(const std::string & arg)
{
    if (arg.rfind("fixture:", 0) == 0)
        return fixtures::by_name(arg.substr(8));
    std::ifstream in(arg);
    if (!in)
        throw Error(ErrorKind::IoError, "cannot open " + arg);
    auto lines = read_graph6_lines(in);
    if (lines.empty())
        throw Error(ErrorKind::IoError, arg + " contains no graph");
    if (lines.front().error)
        throw *lines.front().error;
    return *lines.front().graph;
}

std::string join(const std::vector<Vertex> & v, const char * sep = " ")
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

std::string join_classes(const std::vector<std::vector<Vertex>> & classes)
{
    std::string s;
    for (std::size_t i = 0; i < classes.size(); ++i)
        s += (i ? " | " : "") + join(classes[i]);
    return s;
}

void emit(const RunConfig & cfg, const Json & j, const std::string & text)
{
    if (cfg.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

int cmd_params(const RunConfig & cfg, const std::array<std::int64_t, 4> & v)
{
    SrgParams p{v[0], v[1], v[2], v[3]};
    auto feas = check_feasible(p);
    Json j;
    j["params"] = p.to_string();
    j["feasible"] = feas.feasible;
    if (!feas.feasible) {
        j["violation"] = feas.violation;
        emit(cfg, j, p.to_string() + " infeasible: " + feas.violation + "\n");
        return 1;
    }
    Spectrum s = spectrum(p);
    auto comp = complement_params(p);
    std::ostringstream out;
    out << "params " << p << "\n";
    out << "theta " << s.theta.to_string() << " tau " << s.tau.to_string() << " m=(" << s.m_theta << "," << s.m_tau << ")\n";
    j["theta"] = s.theta.to_string();
    j["tau"] = s.tau.to_string();
    j["m_theta"] = s.m_theta;
    j["m_tau"] = s.m_tau;
    j["primitive"] = p.primitive();
    if (p.primitive()) {
        Cosines c = cosines(p);
        out << "cosines alpha " << c.alpha.to_string() << " beta " << c.beta.to_string() << "\n";
        out << "hoffman bound " << hoffman_bound(p).to_string() << "\n";
        out << "ratio bound " << ratio_bound(p).to_string() << "\n";
        j["alpha"] = c.alpha.to_string();
        j["beta"] = c.beta.to_string();
        j["hoffman_bound"] = hoffman_bound(p).to_string();
        j["ratio_bound"] = ratio_bound(p).to_string();
    }
    else {
        out << "imprimitive\n";
    }
    out << "complement " << comp.params << "\n";
    j["complement"] = comp.params.to_string();
    emit(cfg, j, out.str());
    return 0;
}

int cmd_verify(const RunConfig & cfg, const std::string & file)
{
    Graph g = load_graph(file);
    auto r = verify_srg(g);
    Json j;
    j["is_srg"] = r.is_srg;
    j["primitive"] = r.primitive;
    std::ostringstream out;
    if (r.is_srg) {
        j["params"] = r.params->to_string();
        out << "SRG" << *r.params << (r.primitive ? " primitive" : " imprimitive") << "\n";
    }
    else {
        j["failure"] = r.failure_witness->describe();
        out << "not an SRG: " << r.failure_witness->describe() << "\n";
    }
    emit(cfg, j, out.str());
    return r.is_srg ? 0 : 1;
}

int cmd_cert(const RunConfig & cfg, const std::string & file)
{
    Graph g = load_graph(file);
    SrgParams p = require_primitive_srg(g);
    auto proj = check_projector_identities(g, p);
    auto coclique = max_coclique(g, cfg.budget);
    VertexSet s(g.order());
    for (Vertex v : coclique.witness)
        s.set(v);
    auto ratio = ratio_witness(g, s);
    Json j;
    j["params"] = p.to_string();
    j["adjacency_equation"] = proj.adjacency_equation;
    j["annihilated"] = proj.annihilated;
    j["scaled_idempotent"] = proj.scaled_idempotent;
    j["psd"] = proj.psd;
    j["coclique"] = coclique.witness;
    j["ratio_bound"] = ratio.bound.to_string();
    j["ratio_tight"] = ratio.tight;
    std::ostringstream out;
    out << "SRG" << p << "\n";
    out << "A^2 + (mu-lambda)A + (mu-k)I = mu J: " << (proj.adjacency_equation ? "ok" : "FAIL") << "\n";
    out << "(A - tau I) E = 0: " << (proj.annihilated ? "ok" : "FAIL") << "\n";
    out << "E^2 = (n/m_tau) E: " << (proj.scaled_idempotent ? "ok" : "FAIL") << "\n";
    out << "E PSD: " << (proj.psd ? "ok" : "FAIL") << "\n";
    if (proj.first_failure)
        out << "first failure: " << proj.first_failure->describe() << "\n";
    out << "coclique of size " << ratio.size << " vs ratio bound " << ratio.bound.to_string()
        << (ratio.tight ? " (tight" : " (") << (ratio.tight ? (ratio.outside_condition ? ", equitable)" : ", NOT equitable)") : "not tight)")
        << "\n";
    emit(cfg, j, out.str());
    bool ok = proj.ok() && ratio.within_bound && (!ratio.tight || ratio.outside_condition);
    return ok ? 0 : 1;
}

int cmd_theta(const RunConfig & cfg, const std::string & file)
{
    Graph g = load_graph(file);
    auto r = theta_witnesses(g);
    Json j;
    j["primal_feasible"] = r.primal_feasible;
    j["dual_feasible"] = r.dual_feasible;
    j["primal_objective"] = r.primal_objective.to_string();
    j["dual_objective"] = r.dual_objective.to_string();
    j["trace_product"] = r.trace_product.to_string();
    j["optimal"] = r.optimal();
    std::ostringstream out;
    out << "primal feasible " << r.primal_feasible << " objective " << r.primal_objective.to_string() << "\n";
    out << "dual feasible " << r.dual_feasible << " objective " << r.dual_objective.to_string() << "\n";
    out << "tr(MB) " << r.trace_product.to_string() << "\n";
    out << (r.optimal() ? "optimal" : "NOT certified") << "\n";
    emit(cfg, j, out.str());
    return r.optimal() ? 0 : 1;
}

int cmd_solve(const RunConfig & cfg, const std::string & file, bool clique, bool coclique, bool chromatic, bool hoffman)
{
    Graph g = load_graph(file);
    if (!clique && !coclique && !chromatic && !hoffman)
        clique = chromatic = true;
    Json j;
    std::ostringstream out;
    if (clique) {
        auto r = max_clique(g, cfg.budget);
        j["omega"] = r.exact ? Json(r.size) : Json::array({r.size, r.upper_bound});
        j["clique"] = r.witness;
        out << "omega " << (r.exact ? std::to_string(r.size) : "[" + std::to_string(r.size) + "," + std::to_string(r.upper_bound) + "]")
            << (r.is_delsarte ? " (Delsarte)" : "") << ": " << join(r.witness) << "\n";
    }
    if (coclique) {
        auto r = max_coclique(g, cfg.budget);
        j["alpha"] = r.exact ? Json(r.size) : Json::array({r.size, r.upper_bound});
        j["coclique"] = r.witness;
        out << "alpha " << (r.exact ? std::to_string(r.size) : "[" + std::to_string(r.size) + "," + std::to_string(r.upper_bound) + "]")
            << (r.is_delsarte ? " (Delsarte)" : "") << ": " << join(r.witness) << "\n";
    }
    if (chromatic) {
        auto r = chromatic_number(g, cfg.budget);
        j["chi"] = r.exact ? Json(r.chromatic) : Json::array({r.lower_bound, r.chromatic});
        j["colouring"] = r.classes;
        out << "chi " << (r.exact ? std::to_string(r.chromatic) : "[" + std::to_string(r.lower_bound) + "," + std::to_string(r.chromatic) + "]")
            << (r.is_hoffman ? " (Hoffman)" : "") << ": " << join_classes(r.classes) << "\n";
    }
    if (hoffman) {
        auto r = enumerate_hoffman_colorings(g, std::numeric_limits<std::size_t>::max(), cfg.budget);
        j["hoffman_colorings"] = r.partitions.size();
        j["hoffman_complete"] = !r.truncated && !r.budget_exhausted;
        out << "hoffman colorings " << r.partitions.size() << (r.budget_exhausted ? " (budget exhausted)" : "") << "\n";
        for (const auto & p : r.partitions)
            out << "  " << join_classes(p) << "\n";
    }
    emit(cfg, j, out.str());
    return 0;
}

int cmd_hom(const RunConfig & cfg, const std::string & gfile, const std::string & hfile, const std::string & mode, bool oracle, bool verify)
{
    Graph g = load_graph(gfile);
    Graph h = load_graph(hfile);
    if (verify) {
        auto r = verify_main_theorem(g, h, cfg.budget);
        Json j;
        j["homs"] = r.homs;
        for (auto k : {HomKind::Isomorphism, HomKind::IsoOntoInducedSubgraph, HomKind::Coloring, HomKind::Other})
            j[std::string(to_string(k))] = r.count(k);
        j["colorings_onto_delsarte_cliques"] = r.colorings_onto_delsarte_cliques;
        j["product_lemma_failures"] = r.product_lemma_failures;
        j["complete"] = r.complete;
        j["holds"] = r.holds();
        std::ostringstream out;
        out << "homs " << r.homs << (r.complete ? "" : " (budget exhausted, partial)") << "\n";
        for (auto k : {HomKind::Isomorphism, HomKind::IsoOntoInducedSubgraph, HomKind::Coloring, HomKind::Other})
            out << "  " << to_string(k) << " " << r.count(k) << "\n";
        out << "colorings onto Delsarte cliques " << r.colorings_onto_delsarte_cliques << "\n";
        out << "product check failures " << r.product_lemma_failures << "\n";
        if (r.first_counterexample)
            out << "counterexample: " << join(r.first_counterexample->map) << "\n";
        emit(cfg, j, out.str());
        return r.holds() ? 0 : 1;
    }
    HomSearchOptions options;
    options.budget = cfg.budget;
    options.fast = !oracle;
    options.mode = mode == "enumerate" ? SearchMode::Enumerate : mode == "count" ? SearchMode::Count : SearchMode::First;
    auto r = find_homs(g, h, options);
    Json j;
    j["count"] = r.count;
    j["complete"] = r.complete;
    Json homs = Json::array();
    std::ostringstream out;
    if (options.mode == SearchMode::Count)
        out << "count " << r.count << (r.complete ? "" : " (budget exhausted, lower bound)") << "\n";
    else if (r.homs.empty())
        out << (r.complete ? "no homomorphism\n" : "none found (budget exhausted)\n");
    for (const auto & hom : r.homs) {
        homs.push_back({{"map", hom.map}, {"kind", std::string(to_string(hom.kind))}});
        out << to_string(hom.kind) << ": " << join(hom.map) << "\n";
    }
    j["homs"] = homs;
    emit(cfg, j, out.str());
    return 0;
}

int cmd_core(const RunConfig & cfg, const std::string & file)
{
    Graph g = load_graph(file);
    auto r = is_core(g, cfg.budget);
    auto tri = [](const std::optional<bool> & b) { return b ? Json(*b) : Json(nullptr); };
    Json j;
    j["core"] = tri(r.core);
    j["fast_path"] = tri(r.fast_path);
    j["slow_path"] = tri(r.slow_path);
    if (r.witness)
        j["witness"] = *r.witness;
    std::ostringstream out;
    out << (r.core ? (*r.core ? "core" : "not a core") : "undetermined (budget exhausted)") << "\n";
    if (r.fast_path)
        out << "fast path: " << (*r.fast_path ? "core" : "not a core") << "\n";
    if (r.slow_path)
        out << "exhaustive search: " << (*r.slow_path ? "core" : "not a core") << "\n";
    if (r.witness)
        out << "proper endomorphism: " << join(*r.witness) << "\n";
    emit(cfg, j, out.str());
    return r.paths_agree() ? 0 : 1;
}

int cmd_hull(const RunConfig & cfg, const std::string & file, bool bruteforce)
{
    Graph g = load_graph(file);
    auto r = hull(g, bruteforce ? HullStrategy::BruteForce : HullStrategy::PseudocoreFast, cfg.budget, cfg.threads);
    auto degree = r.graph.hull.regular_degree();
    Json j;
    j["graph6"] = encode_graph6(r.graph.hull);
    j["edges"] = r.graph.hull.edge_count();
    j["regular"] = degree.has_value();
    j["equals_base"] = r.graph.hull == g;
    j["complete"] = r.complete;
    std::ostringstream out;
    out << encode_graph6(r.graph.hull) << "\n";
    out << "edges " << r.graph.hull.edge_count() << (degree ? ", regular of degree " + std::to_string(*degree) : ", not regular")
        << (r.graph.hull == g ? ", equal to the input" : "") << (r.complete ? "" : " (some pairs undecided)") << "\n";
    emit(cfg, j, out.str());
    return 0;
}

int cmd_classify(const RunConfig & cfg, const std::string & file, const std::string & dot, const std::string & json_out, bool pseudocore)
{
    std::ifstream in(file);
    if (!in)
        throw Error(ErrorKind::IoError, "cannot open " + file);
    ClassifyOptions options{cfg.budget, cfg.threads, pseudocore};
    BatchResult r = batch_classify(in, options);
    Json j = to_json(r);
    if (!json_out.empty()) {
        std::ofstream o(json_out);
        if (!o)
            throw Error(ErrorKind::IoError, "cannot write " + json_out);
        o << j.dump(2) << "\n";
    }
    if (!dot.empty()) {
        std::ofstream o(dot);
        if (!o)
            throw Error(ErrorKind::IoError, "cannot write " + dot);
        o << hasse_dot(r.entries);
    }
    std::ostringstream out;
    for (const auto & e : r.entries) {
        out << e.id << " SRG" << e.params << " type " << to_string(e.type.tag) << " omega "
            << detail::bracket(e.type.omega_lo, e.type.omega_hi) << " chi " << detail::bracket(e.type.chi_lo, e.type.chi_hi)
            << " bound " << e.type.bound.to_string();
        if (e.flags.core)
            out << (*e.flags.core ? " core" : " not-core");
        if (e.flags.pseudocore_verified)
            out << (*e.flags.pseudocore_verified ? " pseudocore-verified" : " PSEUDOCORE-CHECK-FAILED");
        out << "\n";
    }
    for (const auto & s : r.skipped)
        out << "skipped line " << s.line_number << ": " << s.reason << "\n";
    out << "summary";
    for (auto tag : {TypeTag::A, TypeTag::B, TypeTag::C, TypeTag::X, TypeTag::Undetermined})
        out << " " << to_string(tag) << ":" << r.count(tag);
    out << "\n";
    emit(cfg, j, out.str());
    for (const auto & e : r.entries)
        if (e.flags.pseudocore_verified == false)
            return 1;
    return 0;
}

int cmd_hasse(const RunConfig & cfg, const std::string & file)
{
    std::ifstream in(file);
    if (!in)
        throw Error(ErrorKind::IoError, "cannot open " + file);
    BatchResult r = batch_classify(in, ClassifyOptions{cfg.budget, cfg.threads, false});
    std::cout << hasse_dot(r.entries);
    return 0;
}

int exit_code_for(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::BadLength:
    case ErrorKind::BadChar:
    case ErrorKind::UnsupportedSize:
    case ErrorKind::IndexOutOfRange:
    case ErrorKind::UnknownFixture:
    case ErrorKind::IoError:
    case ErrorKind::InvalidArgument:
        return 2;
    default:
        return 1;
    }
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Strongly regular graph toolkit: spectra, certificates, solvers, homomorphisms, types"};
    app.require_subcommand(1);
    RunConfig cfg;
    app.add_option("--budget", cfg.budget, "search node budget")->check(CLI::PositiveNumber);
    app.add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
    app.add_flag("--json", cfg.json, "JSON output");

    std::array<std::int64_t, 4> params{};
    auto * params_cmd = app.add_subcommand("params", "spectrum, cosines and bounds of SRG(n,k,lambda,mu)");
    params_cmd->add_option("n", params[0])->required();
    params_cmd->add_option("k", params[1])->required();
    params_cmd->add_option("lambda", params[2])->required();
    params_cmd->add_option("mu", params[3])->required();

    std::string graph_arg, target_arg;
    auto * verify_cmd = app.add_subcommand("verify", "check strong regularity");
    verify_cmd->add_option("graph", graph_arg)->required();

    auto * cert_cmd = app.add_subcommand("cert", "projector identities and ratio-bound certificate");
    cert_cmd->add_option("graph", graph_arg)->required();

    auto * theta_cmd = app.add_subcommand("theta", "exact theta primal/dual witnesses");
    theta_cmd->add_option("graph", graph_arg)->required();

    bool clique = false, coclique = false, chromatic = false, hoffman = false;
    auto * solve_cmd = app.add_subcommand("solve", "clique number, independence number, chromatic number");
    solve_cmd->add_option("graph", graph_arg)->required();
    solve_cmd->add_flag("--clique", clique);
    solve_cmd->add_flag("--coclique", coclique);
    solve_cmd->add_flag("--chromatic", chromatic);
    solve_cmd->add_flag("--hoffman-colorings", hoffman);

    bool first = false, enumerate = false, count = false, oracle = false, verify = false;
    auto * hom_cmd = app.add_subcommand("hom", "homomorphisms G -> H");
    hom_cmd->add_option("G", graph_arg)->required();
    hom_cmd->add_option("H", target_arg)->required();
    auto * first_flag = hom_cmd->add_flag("--first", first);
    auto * enum_flag = hom_cmd->add_flag("--enumerate", enumerate);
    auto * count_flag = hom_cmd->add_flag("--count", count);
    first_flag->excludes(enum_flag)->excludes(count_flag);
    enum_flag->excludes(count_flag);
    hom_cmd->add_flag("--oracle", oracle, "no pruning derived from the structure theorem");
    hom_cmd->add_flag("--verify", verify, "enumerate everything and check each hom is a coloring or an isomorphism");

    auto * core_cmd = app.add_subcommand("core", "is the graph a core");
    core_cmd->add_option("graph", graph_arg)->required();

    bool bruteforce = false;
    auto * hull_cmd = app.add_subcommand("hull", "hull of the endomorphism monoid");
    hull_cmd->add_option("graph", graph_arg)->required();
    hull_cmd->add_flag("--bruteforce", bruteforce, "per-pair endomorphism search (any graph)");

    std::string dot_out, json_out;
    bool pseudocore = false;
    auto * classify_cmd = app.add_subcommand("classify", "type A/B/C/X of every graph in a graph6 file");
    classify_cmd->add_option("file", graph_arg)->required();
    classify_cmd->add_option("--dot", dot_out, "write the Hasse diagram");
    classify_cmd->add_option("--json", json_out, "write the JSON report");
    classify_cmd->add_flag("--pseudocore", pseudocore, "also verify every proper endomorphism is a coloring");

    auto * hasse_cmd = app.add_subcommand("hasse", "Hasse diagram (DOT) of a single-parameter graph6 file");
    hasse_cmd->add_option("file", graph_arg)->required();

    std::string fixture_name;
    auto * fixture_cmd = app.add_subcommand("fixture", "print a built-in graph in graph6");
    fixture_cmd->add_option("name", fixture_name)->required();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (params_cmd->parsed())
            return cmd_params(cfg, params);
        if (verify_cmd->parsed())
            return cmd_verify(cfg, graph_arg);
        if (cert_cmd->parsed())
            return cmd_cert(cfg, graph_arg);
        if (theta_cmd->parsed())
            return cmd_theta(cfg, graph_arg);
        if (solve_cmd->parsed())
            return cmd_solve(cfg, graph_arg, clique, coclique, chromatic, hoffman);
        if (hom_cmd->parsed())
            return cmd_hom(cfg, graph_arg, target_arg, enumerate ? "enumerate" : count ? "count" : "first", oracle, verify);
        if (core_cmd->parsed())
            return cmd_core(cfg, graph_arg);
        if (hull_cmd->parsed())
            return cmd_hull(cfg, graph_arg, bruteforce);
        if (classify_cmd->parsed())
            return cmd_classify(cfg, graph_arg, dot_out, json_out, pseudocore);
        if (hasse_cmd->parsed())
            return cmd_hasse(cfg, graph_arg);
        if (fixture_cmd->parsed()) {
            std::cout << encode_graph6(fixtures::by_name(fixture_name)) << "\n";
            return 0;
        }
    }
    catch (const Error & e) {
        std::cerr << "srg: " << e.what() << "\n";
        return exit_code_for(e.kind());
    }
    catch (const std::exception & e) {
        std::cerr << "srg: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
