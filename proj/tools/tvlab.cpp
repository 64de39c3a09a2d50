#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "tvlab/genio.hpp"
#include "tvlab/pattern.hpp"
#include "tvlab/reduction.hpp"
#include "tvlab/run.hpp"
#include "tvlab/verify.hpp"

using namespace tvlab;
using Json = nlohmann::ordered_json;

namespace {

VertexSet read_vertex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw genio::ParseError("cannot open extension-set file: " + path);
    VertexSet w;
    long long v;
    while (in >> v) w.push_back(int(v));
    std::sort(w.begin(), w.end());
    w.erase(std::unique(w.begin(), w.end()), w.end());
    return w;
}

void emit(const Json& j, const std::string& output) {
    if (output.empty() || output == "-") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(output);
        out << j.dump(2) << "\n";
    }
}

int worker_cap() {
    if (const char* env = std::getenv("TRANSVERSAL_LAB_THREADS")) {
        int k = std::atoi(env);
        if (k >= 1) return k;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : int(hw);
}

genio::GeneratorSpec parse_gen_class(const std::string& text) {
    genio::GeneratorSpec spec;
    if (text == "any") spec.cls = genio::GraphClass::Any;
    else if (text == "cograph") spec.cls = genio::GraphClass::Cograph;
    else if (text == "bipartite") spec.cls = genio::GraphClass::Bipartite;
    else if (text.rfind("sp1p3:", 0) == 0) {
        spec.cls = genio::GraphClass::Sp1P3Free;
        spec.s = std::stoi(text.substr(6));
    } else if (text.rfind("sp1p5:", 0) == 0) {
        spec.cls = genio::GraphClass::Sp1P5Free;
        spec.s = std::stoi(text.substr(6));
    } else {
        throw std::invalid_argument("unknown generator class: " + text);
    }
    return spec;
}

// accept trailing "-n<k>" on suite names, e.g. "p4free-exhaustive-n7"
std::string split_suite_suffix(const std::string& name, verify::SuiteParams& p) {
    auto pos = name.rfind("-n");
    if (pos != std::string::npos && pos + 2 < name.size()) {
        bool digits = true;
        for (size_t i = pos + 2; i < name.size(); ++i)
            if (!isdigit((unsigned char)name[i])) digits = false;
        if (digits) {
            p.n = std::stoi(name.substr(pos + 2));
            return name.substr(0, pos);
        }
    }
    return name;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cycle-transversal toolkit"};
    app.require_subcommand(1);

    // ---- solve ----
    auto* solve = app.add_subcommand("solve", "solve a transversal problem on one instance");
    std::string in_path, problem, wfile, klass = "auto", engine = "auto", output;
    uint64_t seed = 0;
    solve->add_option("--input", in_path, "graph file (edge list or graph6)")->required();
    solve->add_option("--problem", problem, "vc|cvc|fvs|cfvs|oct|coct")->required();
    solve->add_option("--extension-set", wfile, "file with the required vertices W");
    solve->add_option("--class", klass, "auto|p4free|sp1p3:<s>");
    solve->add_option("--engine", engine, "auto|specialized|oracle|both");
    solve->add_option("--seed", seed, "seed recorded in the report");
    solve->add_option("--output", output, "report file (default stdout)");

    // ---- recognize ----
    auto* recog = app.add_subcommand("recognize", "test induced-pattern freeness");
    std::string rec_input, rec_pattern;
    recog->add_option("--input", rec_input)->required();
    recog->add_option("--pattern", rec_pattern, "e.g. \"2P1+P3\", \"P2+P5\", \"P6\"")->required();

    // ---- reduce ----
    auto* reduce = app.add_subcommand("reduce", "build the OCT hardness instance G*");
    std::string red_input, red_output, red_roles;
    int red_k = 0;
    reduce->add_option("--input", red_input)->required();
    reduce->add_option("--k", red_k, "vertex cover budget");
    reduce->add_option("--output", red_output, "edge list output for G*")->required();
    reduce->add_option("--roles", red_roles, "role file output");

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "generate a certified in-class instance");
    std::string gen_class = "any", gen_output;
    int gen_n = 10;
    double gen_density = 0.5;
    uint64_t gen_seed = 1;
    gen->add_option("--class", gen_class, "any|cograph|bipartite|sp1p3:<s>|sp1p5:<s>");
    gen->add_option("--n", gen_n)->required();
    gen->add_option("--density", gen_density);
    gen->add_option("--seed", gen_seed);
    gen->add_option("--output", gen_output, "edge list output (default stdout)");

    // ---- verify ----
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    std::string suite, cex_path;
    verify::SuiteParams sp;
    verify_cmd->add_option("--suite", suite)->required();
    verify_cmd->add_option("--n", sp.n);
    verify_cmd->add_option("--s", sp.s);
    verify_cmd->add_option("--count", sp.count);
    verify_cmd->add_option("--seed", sp.seed);
    verify_cmd->add_option("--w-samples", sp.w_samples);
    verify_cmd->add_option("--out-counterexample", cex_path,
                           "file for the first counterexample on failure");

    // ---- bench ----
    auto* bench = app.add_subcommand("bench", "timed solve loop, CSV on stdout");
    std::vector<std::string> bench_inputs;
    std::string bench_problem = "fvs", bench_engine = "auto";
    int bench_repeats = 1;
    bench->add_option("--inputs", bench_inputs)->required()->expected(-1);
    bench->add_option("--problem", bench_problem);
    bench->add_option("--engine", bench_engine);
    bench->add_option("--repeats", bench_repeats);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*solve) {
            run::SolveRequest req;
            req.g = run::load_graph(in_path);
            req.instance_name = in_path;
            req.problem = problem;
            req.klass = klass;
            req.engine = engine;
            req.seed = seed;
            if (!wfile.empty()) req.w = read_vertex_file(wfile);
            auto outcome = run::run_solve(req);
            emit(outcome.report, output);
            if (outcome.exit_code == 0) {
                std::cerr << "solved: objective "
                          << outcome.report["solution"]["objective"].dump() << " via "
                          << outcome.report["algorithm"].get<std::string>() << "\n";
            } else {
                std::cerr << "exit code " << outcome.exit_code << ": "
                          << (outcome.report.contains("error")
                                  ? outcome.report["error"].get<std::string>()
                                  : "infeasible")
                          << "\n";
            }
            return outcome.exit_code;
        }
        if (*recog) {
            Graph g = run::load_graph(rec_input);
            auto pat = pattern::parse_pattern(rec_pattern);
            auto copy = pattern::find_induced(g, pat);
            Json j;
            j["schema"] = "transversal-lab/1";
            j["command"] = "recognize";
            j["pattern"] = pattern::to_string(pat);
            j["instance"] = {{"name", rec_input},
                             {"digest", run::instance_digest(g)},
                             {"n", g.vertex_count()},
                             {"m", g.edge_count()}};
            j["free"] = !copy.has_value();
            if (copy) j["certificate"] = copy->assignment;
            emit(j, "");
            return 0;
        }
        if (*reduce) {
            Graph g = run::load_graph(red_input);
            auto inst = reduction::build_reduction({g, red_k});
            std::ofstream out(red_output);
            if (!out) throw genio::ParseError("cannot write " + red_output);
            out << genio::serialize_edgelist(inst.gstar);
            if (!red_roles.empty()) {
                std::ofstream rf(red_roles);
                rf << reduction::serialize_roles(inst);
            }
            Json j;
            j["schema"] = "transversal-lab/1";
            j["command"] = "reduce";
            j["n"] = g.vertex_count();
            j["m"] = g.edge_count();
            j["gstar_vertices"] = inst.gstar.vertex_count();
            j["budget"] = inst.budget;
            j["output"] = red_output;
            emit(j, "");
            return 0;
        }
        if (*gen) {
            auto spec = parse_gen_class(gen_class);
            spec.n = gen_n;
            spec.density = gen_density;
            spec.seed = gen_seed;
            genio::GenStats stats;
            Graph g = genio::random_in_class(spec, &stats);
            std::string text = genio::serialize_edgelist(g);
            if (gen_output.empty() || gen_output == "-")
                std::cout << text;
            else {
                std::ofstream out(gen_output);
                out << text;
            }
            std::cerr << "generated n=" << g.vertex_count() << " m=" << g.edge_count()
                      << " attempts=" << stats.attempts
                      << (stats.repaired ? " (repaired)" : "") << "\n";
            return 0;
        }
        if (*verify_cmd) {
            std::string base = split_suite_suffix(suite, sp);
            auto res = verify::run_suite(base, sp);
            Json j;
            j["schema"] = "transversal-lab/1";
            j["command"] = "verify";
            j["suite"] = res.name;
            j["checked"] = res.checked;
            j["failures"] = res.failures;
            j["seconds"] = res.seconds;
            j["pass"] = res.pass();
            emit(j, "");
            if (!res.pass()) {
                std::string path = cex_path.empty() ? "counterexample-" + base + ".txt" : cex_path;
                std::ofstream out(path);
                out << res.first_failure << "\n";
                std::cerr << "FAIL: first counterexample written to " << path << "\n";
                return 1;
            }
            std::cerr << "PASS: " << res.checked << " checks\n";
            return 0;
        }
        if (*bench) {
            struct Row {
                std::string instance;
                int n, m;
                std::string engine;
                double ms;
                Json objective;
            };
            std::vector<Row> rows(bench_inputs.size() * size_t(bench_repeats));
            std::atomic<size_t> cursor{0};
            int workers = std::min<int>(worker_cap(), int(rows.size()));
            auto work = [&]() {
                while (true) {
                    size_t i = cursor.fetch_add(1);
                    if (i >= rows.size()) return;
                    const std::string& path = bench_inputs[i / bench_repeats];
                    run::SolveRequest req;
                    req.g = run::load_graph(path);
                    req.instance_name = path;
                    req.problem = bench_problem;
                    req.engine = bench_engine;
                    auto outcome = run::run_solve(req);
                    rows[i] = {path, req.g.vertex_count(), req.g.edge_count(), bench_engine,
                               outcome.report["wall_time_ms"].get<double>(),
                               outcome.report["solution"].contains("objective")
                                   ? outcome.report["solution"]["objective"]
                                   : Json(nullptr)};
                }
            };
            std::vector<std::thread> pool;
            for (int t = 1; t < workers; ++t) pool.emplace_back(work);
            work();
            for (auto& t : pool) t.join();
            std::cout << "instance,n,m,engine,time_ms,objective\n";
            for (auto& r : rows)
                std::cout << r.instance << "," << r.n << "," << r.m << "," << r.engine << ","
                          << r.ms << "," << r.objective.dump() << "\n";
            return 0;
        }
    } catch (const std::logic_error& e) {
        // a solution failed its own validation or an internal invariant broke
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        Json j;
        j["error"] = e.what();
        std::cout << j.dump(2) << "\n";
        return 4;
    }
    return 0;
}
