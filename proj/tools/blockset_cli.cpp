#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "blockset/formats.hpp"
#include "blockset/generators.hpp"
#include "blockset/mmbs.hpp"
#include "blockset/mmhs.hpp"
#include "blockset/oracle.hpp"
#include "blockset/recipe.hpp"
#include "blockset/tree_decomposition.hpp"
#include "blockset/tw_dp.hpp"
#include "report.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace blockset;
using namespace blockset::cli;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitNegative = 2;

struct Config {
    int beta = 0;
    std::string mode = "at-least";
    std::string solver = "improved";
    std::string td;
    std::uint64_t seed = 0;
    long timeout_ms = 0;
    int bag_limit = default_bag_limit();
    std::string problem = "mmbs";
    std::string sunflower_fn = "classic";
    int jobs = 1;
    bool json_out = false;

    json echo() const {
        json j{{"beta", beta}, {"mode", mode}, {"solver", solver}, {"seed", seed}, {"bag_limit", bag_limit}};
        if (!td.empty()) j["td"] = td;
        if (timeout_ms > 0) j["timeout_ms"] = timeout_ms;
        return j;
    }
    std::optional<std::chrono::milliseconds> timeout() const {
        if (timeout_ms <= 0) return std::nullopt;
        return std::chrono::milliseconds(timeout_ms);
    }
};

class InputError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// One emitted line plus its contribution to the exit code and bench summary.
struct Emitted {
    json report;
    int exit_code = kExitOk;
    std::uint64_t nodes = 0;
};

int answer_exit(const Solved& s) {
    const bool* b = std::get_if<bool>(&s.answer);
    return b && *b ? kExitOk : kExitNegative;
}

mmhs::SunflowerFn sunflower_fn(const Config& c) {
    if (c.sunflower_fn == "classic") return mmhs::SunflowerFn::Classic;
    if (c.sunflower_fn == "rao") return mmhs::SunflowerFn::Rao;
    throw InputError("unknown sunflower function '" + c.sunflower_fn + "'");
}

void require_at_least(Mode m, const std::string& solver) {
    if (m != Mode::AtLeast) throw InputError("solver '" + solver + "' only answers --mode at-least");
}

void require_beta(const Config& c) {
    if (c.beta < 1) throw InputError("--beta must be a positive integer");
}

json kernel_json(const mmhs::KernelOutcome& k) {
    json j{{"outcome", k.kind == mmhs::KernelOutcome::Kind::Yes ? "yes" : "reduced"},
           {"edges_before", k.edges_before},
           {"edges_after", k.edges_after},
           {"vertices_after", static_cast<int>(k.reduced.old_of_new.size())},
           {"rank", k.rank},
           {"bound", k.bound},
           {"within_bound", k.within_bound}};
    auto original = [&](const VertexSet& s) {
        VertexSet out;
        s.for_each([&](Vertex v) { out.insert(k.reduced.old_of_new[v]); });
        return out;
    };
    if (k.sunflower) {
        json petals = json::array();
        for (int i : k.sunflower->petals) petals.push_back(vertex_list(original(k.reduced.h.edge(i))));
        j["sunflower"] = json{{"core", vertex_list(original(k.sunflower->core))}, {"edges", petals}};
    }
    json edges = json::array();
    for (const auto& e : k.reduced.h.edges()) edges.push_back(vertex_list(original(e)));
    j["reduced_edges"] = edges;
    return j;
}

/// Exists a minimal set of size exactly k, for some k in [beta, n].
template <typename F>
std::optional<VertexSet> first_size_at_least(int beta, int n, F&& exact) {
    for (int k = beta; k <= n; ++k)
        if (auto s = exact(k)) return s;
    return std::nullopt;
}

template <typename Family>
std::optional<VertexSet> pick_by_mode(const Family& all, Mode m, int beta) {
    for (const auto& s : all) {
        const bool ok = m == Mode::Exactly ? s.size() == beta : m == Mode::AtMost ? s.size() <= beta : s.size() >= beta;
        if (ok) return s;
    }
    return std::nullopt;
}

bool size_matches(Mode m, int size, int beta) {
    return m == Mode::Exactly ? size == beta : m == Mode::AtMost ? size <= beta : size >= beta;
}

NiceTreeDecomposition decomposition_for(const Graph& g, const Config& c) {
    if (!c.td.empty()) {
        int n = 0;
        TreeDecomposition d = io::parse_td(io::read_file(c.td), &n);
        if (n != g.num_vertices()) throw InputError("decomposition vertex count does not match the graph");
        return make_nice(g, d);
    }
    if (g.num_vertices() > kTdSmallCapacity)
        throw InputError("graph too large for compute_td_small; pass --td");
    auto d = compute_td_small(g, g.num_vertices());
    return make_nice(g, *d);
}

Solved solve_mmbs(const Graph& g, const Config& c) {
    require_beta(c);
    const Mode mode = parse_mode(c.mode);
    SearchContext ctx(c.timeout());
    Solved s;
    const int n = g.num_vertices();
    if (c.solver == "oracle") {
        const auto best = oracle::mmbs_bruteforce(g);
        s.value = best.value;
        if (mode == Mode::AtLeast) {
            if (best.value >= c.beta) s.certificate = best.certificate;
        } else {
            s.certificate = pick_by_mode(oracle::all_minimal_blocking_sets(g), mode, c.beta);
        }
    } else if (c.solver == "search") {
        if (mode == Mode::AtLeast)
            s.certificate = first_size_at_least(c.beta, n, [&](int k) {
                return mmbs::mmbs_search_exact(g, k, mmhs::SizeMode::Exactly, &ctx);
            });
        else
            s.certificate = mmbs::mmbs_search_exact(
                g, c.beta, mode == Mode::Exactly ? mmhs::SizeMode::Exactly : mmhs::SizeMode::AtMost, &ctx);
    } else if (c.solver == "extension") {
        require_at_least(mode, c.solver);
        s.certificate = mmhs::extension_branch(mmbs::mis_hypergraph(g), c.beta, &ctx);
    } else if (c.solver == "improved" || c.solver == "alt") {
        require_at_least(mode, c.solver);
        const auto engine = c.solver == "improved" ? mmbs::Engine::ImprovedFpt : mmbs::Engine::AltBranch;
        s.answer = mmbs::mmbs_at_least_fixed_alpha(g, c.beta, engine, &ctx);
    } else if (c.solver == "kernel+improved") {
        require_at_least(mode, c.solver);
        mmhs::KernelOutcome k;
        s.answer = mmhs::kernel_improved(mmbs::mis_hypergraph(g), c.beta, sunflower_fn(c), &ctx, &k);
        s.extra["kernel"] = kernel_json(k);
    } else if (c.solver == "tw") {
        require_at_least(mode, c.solver);
        const auto nice = decomposition_for(g, c);
        DpOptions opts;
        opts.bag_limit = c.bag_limit;
        opts.ctx = &ctx;
        const auto r = mmbs_tw(g, nice, opts);
        s.value = r.value;
        if (r.value >= c.beta) s.certificate = r.certificate;
        s.extra["dp"] = json{{"width", nice.width()}, {"memo_entries", r.memo_entries}, {"transitions", r.transitions}};
    } else {
        throw InputError("unknown solver '" + c.solver + "'");
    }
    if (s.certificate) {
        if (!mmbs::verify_minimal_blocking_set(g, *s.certificate) || !size_matches(mode, s.certificate->size(), c.beta))
            throw std::logic_error("certificate failed verification");
        s.answer = true;
    } else if (c.solver != "improved" && c.solver != "alt" && c.solver != "kernel+improved") {
        s.answer = false;
    }
    s.stats = ctx.stats();
    return s;
}

Solved solve_mmhs(const Hypergraph& h, const Config& c) {
    require_beta(c);
    const Mode mode = parse_mode(c.mode);
    SearchContext ctx(c.timeout());
    Solved s;
    const int n = h.num_vertices();
    bool witness_solver = true;
    if (c.solver == "oracle") {
        const auto best = oracle::mmhs_bruteforce(h);
        s.value = best.value;
        if (mode == Mode::AtLeast) {
            if (best.value >= c.beta) s.certificate = best.certificate;
        } else {
            s.certificate = pick_by_mode(oracle::all_minimal_hitting_sets(h), mode, c.beta);
        }
    } else if (c.solver == "search") {
        witness_solver = false;
        if (mode == Mode::AtLeast) {
            bool found = false;
            for (int k = c.beta; k <= n && !found; ++k) found = mmhs::search_tree_size(h, k, mmhs::SizeMode::Exactly, &ctx);
            s.answer = found;
        } else {
            s.answer = mmhs::search_tree_size(
                h, c.beta, mode == Mode::Exactly ? mmhs::SizeMode::Exactly : mmhs::SizeMode::AtMost, &ctx);
        }
    } else if (c.solver == "extension") {
        require_at_least(mode, c.solver);
        s.certificate = mmhs::extension_branch(h, c.beta, &ctx);
    } else if (c.solver == "improved") {
        require_at_least(mode, c.solver);
        witness_solver = false;
        mmhs::MeasureAudit audit;
        s.answer = mmhs::improved_fpt(h, c.beta, &ctx, &audit);
        s.extra["measure_audit"] = json{{"checks", audit.checks}, {"violations", audit.violations}};
    } else if (c.solver == "alt") {
        require_at_least(mode, c.solver);
        witness_solver = false;
        s.answer = mmhs::alt_branch(h, c.beta, &ctx);
    } else if (c.solver == "kernel+improved") {
        require_at_least(mode, c.solver);
        witness_solver = false;
        mmhs::KernelOutcome k;
        s.answer = mmhs::kernel_improved(h, c.beta, sunflower_fn(c), &ctx, &k);
        s.extra["kernel"] = kernel_json(k);
    } else if (c.solver == "tw") {
        throw InputError("solver 'tw' needs a graph instance");
    } else {
        throw InputError("unknown solver '" + c.solver + "'");
    }
    if (s.certificate) {
        if (!mmhs::is_minimal_hitting(h, *s.certificate) || !size_matches(mode, s.certificate->size(), c.beta))
            throw std::logic_error("certificate failed verification");
        s.answer = true;
    } else if (witness_solver) {
        s.answer = false;
    }
    s.stats = ctx.stats();
    return s;
}

std::string question(const std::string& problem, const Config& c) {
    return problem + mode_symbol(parse_mode(c.mode)) + std::to_string(c.beta);
}

/// Runs `body`, mapping library errors onto report lines and exit codes.
template <typename F>
Emitted guarded(const std::string& id, const std::string& problem, const Config& c, F&& body) {
    auto negative = [&](const std::string& status, const std::string& msg) {
        Solved s;
        s.answer = status;
        s.extra["message"] = msg;
        return Emitted{solve_report(id, c.solver, question(problem, c), s, c.echo()), kExitNegative, 0};
    };
    try {
        return body();
    } catch (const Timeout& e) {
        return negative("timeout", e.what());
    } catch (const WidthTooLarge& e) {
        return negative("width-too-large", e.what());
    } catch (const std::logic_error& e) {
        // invalid_argument, out_of_range and friends: bad input or flags.
        return Emitted{error_report(id, e.what()), kExitInputError, 0};
    } catch (const std::runtime_error& e) {
        // ParseError, CapacityError, InvalidDecomposition, InputError.
        return Emitted{error_report(id, e.what()), kExitInputError, 0};
    }
}

Emitted solve_file(const std::string& path, const std::string& problem, const Config& c) {
    const std::string id = fs::path(path).filename().string();
    return guarded(id, problem, c, [&] {
        const std::string text = io::read_file(path);
        std::vector<std::string> warnings;
        Solved s;
        if (problem == "mmhs") {
            if (!io::looks_like_hypergraph(text)) throw InputError("expected a hypergraph ('p hs') file");
            s = solve_mmhs(io::parse_hypergraph(text), c);
        } else {
            if (io::looks_like_hypergraph(text)) throw InputError("expected a graph ('p edge') file");
            s = solve_mmbs(io::parse_graph(text, &warnings), c);
        }
        json r = solve_report(id, c.solver, question(problem, c), s, c.echo());
        if (!warnings.empty()) r["warnings"] = warnings;
        return Emitted{r, answer_exit(s), s.stats.nodes_expanded};
    });
}

int emit_all(const std::vector<Emitted>& out) {
    int code = kExitOk;
    for (const auto& e : out) {
        std::cout << line(e.report) << '\n';
        if (e.exit_code == kExitInputError || (e.exit_code == kExitNegative && code == kExitOk)) code = e.exit_code;
    }
    std::cout.flush();
    return code;
}

int run_solve(const std::vector<std::string>& files, const std::string& problem, const Config& c) {
    std::vector<Emitted> out;
    for (const auto& f : files) out.push_back(solve_file(f, problem, c));
    return emit_all(out);
}

int run_kernel(const std::vector<std::string>& files, const Config& c) {
    std::vector<Emitted> out;
    for (const auto& path : files) {
        const std::string id = fs::path(path).filename().string();
        out.push_back(guarded(id, "mmhs", c, [&] {
            require_beta(c);
            const Hypergraph h = io::parse_hypergraph(io::read_file(path));
            const auto k = mmhs::sunflower_kernel(h, c.beta, sunflower_fn(c));
            json r = kernel_json(k);
            r["instance_id"] = id;
            r["beta"] = c.beta;
            r["sunflower_fn"] = c.sunflower_fn;
            return Emitted{r, kExitOk, 0};
        }));
    }
    return emit_all(out);
}

int run_oracle(const std::vector<std::string>& files, const Config& c) {
    std::vector<Emitted> out;
    for (const auto& path : files) {
        const std::string id = fs::path(path).filename().string();
        out.push_back(guarded(id, c.problem, c, [&] {
            const std::string text = io::read_file(path);
            oracle::Extremum e;
            bool ok = false;
            if (c.problem == "mmhs") {
                const Hypergraph h = io::parse_hypergraph(text);
                e = oracle::mmhs_bruteforce(h);
                ok = oracle::is_minimal_hitting_set(h, e.certificate);
            } else if (c.problem == "mmbs" || c.problem == "mmds") {
                const Graph g = io::parse_graph(text);
                e = c.problem == "mmbs" ? oracle::mmbs_bruteforce(g) : oracle::mmds_bruteforce(g);
                ok = c.problem == "mmbs" ? oracle::is_minimal_blocking_set(g, e.certificate)
                                         : oracle::is_minimal_dominating_set(g, e.certificate);
            } else {
                throw InputError("unknown problem '" + c.problem + "'");
            }
            if (!ok) throw std::logic_error("certificate failed verification");
            json r{{"instance_id", id}, {"solver", "oracle"}, {"question", c.problem}, {"answer", e.value},
                   {"value", e.value}, {"certificate", vertex_list(e.certificate)}};
            return Emitted{r, kExitOk, 0};
        }));
    }
    return emit_all(out);
}

struct GenFlags {
    std::string recipe;
    std::string kind;
    int n = 6;
    int m = 6;
    int max_edge_size = 3;
    double p = 0.5;
    double cross_prob = 0.5;
    std::vector<int> parts{2, 2};
};

json recipe_from_flags(const GenFlags& f, std::uint64_t seed) {
    if (!f.recipe.empty()) {
        const std::string text = f.recipe.front() == '{' ? f.recipe : io::read_file(f.recipe);
        return json::parse(text);
    }
    if (f.kind.empty()) throw InputError("gen needs --kind or --recipe");
    if (f.kind == "graph") return json{{"kind", "graph"}, {"n", f.n}, {"p", f.p}, {"seed", seed}};
    if (f.kind == "hypergraph")
        return json{{"kind", "hypergraph"}, {"n", f.n}, {"m", f.m}, {"max_edge_size", f.max_edge_size}, {"seed", seed}};
    if (f.kind == "mcis_join" || f.kind == "updom")
        return json{{"kind", f.kind}, {"parts", f.parts}, {"cross_prob", f.cross_prob}, {"seed", seed}};
    return json{{"kind", f.kind}, {"base", json{{"kind", "graph"}, {"n", f.n}, {"p", f.p}, {"seed", seed}}}};
}

int run_gen(const GenFlags& f, const Config& c) {
    try {
        const json recipe = recipe_from_flags(f, c.seed);
        const auto inst = gen::build_recipe(recipe);
        const bool is_graph = std::holds_alternative<Graph>(inst);
        const std::string text =
            is_graph ? io::print_graph(std::get<Graph>(inst)) : io::print_hypergraph(std::get<Hypergraph>(inst));
        if (c.json_out)
            std::cout << line(json{{"recipe", recipe}, {"format", is_graph ? "graph" : "hypergraph"}, {"text", text}})
                      << '\n';
        else
            std::cout << text;
        return kExitOk;
    } catch (const std::exception& e) {
        std::cout << line(error_report("gen", e.what())) << '\n';
        return kExitInputError;
    }
}

int run_check_td(const std::string& graph_path, const std::string& td_path) {
    const std::string id = fs::path(td_path).filename().string();
    try {
        const Graph g = io::parse_graph(io::read_file(graph_path));
        int n = 0;
        const TreeDecomposition d = io::parse_td(io::read_file(td_path), &n);
        std::string why;
        bool valid = false;
        if (n != g.num_vertices()) {
            why = "decomposition has " + std::to_string(n) + " vertices, graph has " + std::to_string(g.num_vertices());
        } else {
            try {
                valid = validate_td(g, d, &why);
            } catch (const std::out_of_range& e) {
                why = e.what();
            }
        }
        json r{{"instance_id", id}, {"valid", valid}, {"width", d.width()}, {"declared_width", d.declared_width}};
        if (!valid) r["reason"] = why;
        std::cout << line(r) << '\n';
        return valid ? kExitOk : kExitNegative;
    } catch (const std::exception& e) {
        std::cout << line(error_report(id, e.what())) << '\n';
        return kExitInputError;
    }
}

/// Instances (.gr, .hs) in a directory, sorted by name; a .gr with a sibling
/// .td of the same stem uses it for the tw solver.
int run_bench(const std::string& dir, const Config& base) {
    if (!fs::is_directory(dir)) {
        std::cout << line(error_report(dir, "not a directory")) << '\n';
        return kExitInputError;
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        const auto ext = entry.path().extension();
        if (entry.is_regular_file() && (ext == ".gr" || ext == ".hs")) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());

    const auto t0 = std::chrono::steady_clock::now();
    std::vector<std::optional<Emitted>> results(files.size());
    std::mutex mu;
    std::condition_variable ready;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < files.size();) {
            Config c = base;
            const fs::path& p = files[i];
            const bool hyper = p.extension() == ".hs";
            if (!hyper && c.solver == "tw") {
                fs::path td = p;
                td.replace_extension(".td");
                if (fs::exists(td)) c.td = td.string();
            }
            Emitted e = solve_file(p.string(), hyper ? "mmhs" : "mmbs", c);
            std::lock_guard<std::mutex> lock(mu);
            results[i] = std::move(e);
            ready.notify_all();
        }
    };
    const int jobs = base.jobs > 0 ? base.jobs : std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (int j = 0; j < std::min<int>(jobs, std::max<std::size_t>(files.size(), 1)); ++j) pool.emplace_back(worker);

    // Single writer: stream reports in file order as they become available.
    int trues = 0, falses = 0, negatives = 0, errors = 0;
    std::uint64_t nodes = 0;
    for (std::size_t i = 0; i < files.size(); ++i) {
        std::unique_lock<std::mutex> lock(mu);
        ready.wait(lock, [&] { return results[i].has_value(); });
        const Emitted& e = *results[i];
        lock.unlock();
        std::cout << line(e.report) << '\n' << std::flush;
        nodes += e.nodes;
        if (e.exit_code == kExitInputError)
            ++errors;
        else if (e.exit_code == kExitOk)
            ++trues;
        else if (e.report.value("answer", json()) == json(false))
            ++falses;
        else
            ++negatives;
    }
    for (auto& t : pool) t.join();
    const double wall = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::cout << line(json{{"summary", json{{"instances", files.size()},
                                            {"true", trues},
                                            {"false", falses},
                                            {"timeout_or_guard", negatives},
                                            {"errors", errors},
                                            {"nodes_expanded", nodes},
                                            {"wall_ms", wall},
                                            {"jobs", jobs},
                                            {"config", base.echo()}}}})
              << '\n';
    return errors > 0 ? kExitInputError : kExitOk;
}

void add_solver_flags(CLI::App* app, Config& c) {
    app->add_option("--beta", c.beta, "Size threshold");
    app->add_option("--mode", c.mode, "exactly|at-most|at-least")
        ->check(CLI::IsMember({"exactly", "at-most", "at-least"}));
    app->add_option("--solver", c.solver, "oracle|search|extension|improved|alt|tw|kernel+improved")
        ->check(CLI::IsMember({"oracle", "search", "extension", "improved", "alt", "tw", "kernel+improved"}));
    app->add_option("--td", c.td, "PACE .td decomposition for --solver tw");
    app->add_option("--seed", c.seed, "Seed (echoed in reports)");
    app->add_option("--timeout-ms", c.timeout_ms, "Cooperative deadline per solve");
    app->add_option("--bag-limit", c.bag_limit, "Treewidth DP bag-size guard")->check(CLI::PositiveNumber);
    app->add_option("--sunflower-fn", c.sunflower_fn, "classic|rao")->check(CLI::IsMember({"classic", "rao"}));
    app->add_flag("--json", c.json_out, "JSON output (reports are always JSON lines)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Maximum minimal blocking / hitting set solvers"};
    app.require_subcommand(1);
    Config c;
    std::vector<std::string> files;

    auto* solve_mmbs_cmd = app.add_subcommand("solve-mmbs", "Answer mmbs(G) vs --beta for graph files");
    auto* solve_mmhs_cmd = app.add_subcommand("solve-mmhs", "Answer mmhs(H) vs --beta for hypergraph files");
    auto* kernel_cmd = app.add_subcommand("kernel", "Run the sunflower kernel on hypergraph files");
    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force optimum and certificate");
    for (auto* sub : {solve_mmbs_cmd, solve_mmhs_cmd, kernel_cmd, oracle_cmd}) {
        add_solver_flags(sub, c);
        sub->add_option("files", files, "Instance files")->required()->check(CLI::ExistingFile);
    }
    oracle_cmd->add_option("--problem", c.problem, "mmbs|mmhs|mmds")->check(CLI::IsMember({"mmbs", "mmhs", "mmds"}));

    GenFlags gf;
    auto* gen_cmd = app.add_subcommand("gen", "Generate an instance from a recipe");
    add_solver_flags(gen_cmd, c);
    gen_cmd->add_option("--recipe", gf.recipe, "Recipe JSON, inline or a file path");
    gen_cmd->add_option("--kind", gf.kind, "graph|hypergraph|mcis_join|updom|pendant|complement_mmvc|updom_mmhs");
    gen_cmd->add_option("--n", gf.n);
    gen_cmd->add_option("--m", gf.m);
    gen_cmd->add_option("--max-edge-size", gf.max_edge_size);
    gen_cmd->add_option("--p", gf.p);
    gen_cmd->add_option("--cross-prob", gf.cross_prob);
    gen_cmd->add_option("--parts", gf.parts)->delimiter(',');

    std::string bench_dir;
    auto* bench_cmd = app.add_subcommand("bench", "Solve every .gr/.hs instance in a directory");
    add_solver_flags(bench_cmd, c);
    bench_cmd->add_option("--jobs", c.jobs, "Worker threads (0 = hardware concurrency)")->check(CLI::NonNegativeNumber);
    bench_cmd->add_option("dir", bench_dir, "Instance directory")->required();

    std::string td_graph, td_file;
    auto* check_cmd = app.add_subcommand("check-td", "Validate a tree decomposition");
    check_cmd->add_option("graph", td_graph)->required()->check(CLI::ExistingFile);
    check_cmd->add_option("td", td_file)->required()->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    if (*solve_mmbs_cmd) return run_solve(files, "mmbs", c);
    if (*solve_mmhs_cmd) return run_solve(files, "mmhs", c);
    if (*kernel_cmd) return run_kernel(files, c);
    if (*oracle_cmd) return run_oracle(files, c);
    if (*gen_cmd) return run_gen(gf, c);
    if (*bench_cmd) return run_bench(bench_dir, c);
    if (*check_cmd) return run_check_td(td_graph, td_file);
    return kExitInputError;
}
