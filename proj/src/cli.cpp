#include "kdisp/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "kdisp/approx3.hpp"
#include "kdisp/decision.hpp"
#include "kdisp/exact.hpp"
#include "kdisp/generators.hpp"
#include "kdisp/io.hpp"
#include "kdisp/oracle.hpp"

namespace kdisp::cli {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

std::vector<std::size_t> to_source(const ConvexPolygon& polygon, const std::vector<std::size_t>& centers) {
    std::vector<std::size_t> out;
    out.reserve(centers.size());
    for (std::size_t c : centers) out.push_back(polygon.source_index(c));
    std::sort(out.begin(), out.end());
    return out;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
    } else {
        write_file(path, text);
    }
}

Engine parse_engine(const std::string& name) {
    if (name == "fast") return Engine::Fast;
    if (name == "naive") return Engine::Naive;
    throw std::invalid_argument("unknown engine '" + name + "'");
}

struct BenchCase {
    Shape shape = Shape::Valtr;
    std::size_t n = 0;
    std::size_t k = 0;
    std::uint64_t seed = 0;
};

std::vector<BenchCase> parse_bench_spec(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw BadInput(std::string("malformed bench spec: ") + e.what());
    }
    auto shape_of = [](const nlohmann::json& j) {
        const std::string name = j.value("shape", std::string("valtr"));
        const auto shape = parse_shape(name);
        if (!shape) throw BadInput("unknown shape '" + name + "'");
        return *shape;
    };
    std::vector<BenchCase> cases;
    try {
        if (doc.contains("cases")) {
            for (const auto& c : doc.at("cases")) {
                cases.push_back({shape_of(c), c.at("n").get<std::size_t>(), c.at("k").get<std::size_t>(),
                                 c.value("seed", std::uint64_t{1})});
            }
        }
        if (doc.contains("grid")) {
            const auto& g = doc.at("grid");
            const Shape shape = shape_of(g);
            const auto seeds = g.contains("seeds") ? g.at("seeds").get<std::vector<std::uint64_t>>()
                                                   : std::vector<std::uint64_t>{1};
            for (std::size_t n : g.at("n").get<std::vector<std::size_t>>())
                for (std::size_t k : g.at("k").get<std::vector<std::size_t>>())
                    for (std::uint64_t seed : seeds) cases.push_back({shape, n, k, seed});
        }
    } catch (const nlohmann::json::exception& e) {
        throw BadInput(std::string("malformed bench spec: ") + e.what());
    }
    return cases;
}

std::string csv_escape(std::string s) {
    std::replace(s.begin(), s.end(), ',', ';');
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
}

std::string bench(const std::vector<BenchCase>& cases, const DecideOptions& options) {
    std::ostringstream csv;
    csv << "shape,n,k,seed,ladder_size,decide_calls,call_budget,max_nodes_per_decide,node_budget,"
           "total_nodes,radius,radius_sq4,wall_ms,status\n";
    for (const BenchCase& c : cases) {
        csv << to_string(c.shape) << ',' << c.n << ',' << c.k << ',' << c.seed << ',';
        try {
            const std::vector<Point> pts = generate(c.shape, c.n, c.seed);
            const ConvexPolygon polygon = validate_convex(pts);
            const auto start = Clock::now();
            const ExactResult r = solve_exact(polygon, c.k, options);
            const double ms = elapsed_ms(start);
            const auto call_budget = static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(r.ladder_size)))) + 1;
            const double node_budget = static_cast<double>(c.n) * std::ldexp(1.0, static_cast<int>(c.k));
            const bool ok = r.decide_calls <= call_budget && static_cast<double>(r.max_nodes_per_decide) <= node_budget;
            csv << r.ladder_size << ',' << r.decide_calls << ',' << call_budget << ',' << r.max_nodes_per_decide << ','
                << format_double(node_budget) << ',' << r.total_nodes << ',' << format_double(r.packing.radius())
                << ',' << format_double(r.packing.radius_sq4) << ',' << format_double(ms) << ','
                << (ok ? "ok" : "budget-exceeded") << '\n';
        } catch (const std::exception& e) {
            csv << ",,,,,,,," << "," << "error: " << csv_escape(e.what()) << '\n';
        }
    }
    return csv.str();
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Max-min k-dispersion on convex polygons", "kdisp"};
    app.require_subcommand(1);
    std::function<void()> action;

    std::string in_path, out_path, result_path, spec_path, engine = "fast", shape_name;
    std::size_t k = 0, n = 0;
    std::uint64_t seed = 1;
    double radius = 0.0, limit = oracle::kDefaultSubsetLimit;
    bool parallel = false;
    unsigned threads = 0;

    auto load_polygon = [&]() {
        const InstanceFile inst = read_instance(in_path);
        return validate_convex(inst.points);
    };
    auto decide_options = [&]() {
        DecideOptions o;
        o.engine = parse_engine(engine);
        o.parallel = parallel;
        o.threads = threads;
        return o;
    };

    auto* solve = app.add_subcommand("solve", "exact optimum by ladder binary search");
    solve->add_option("--in", in_path, "instance JSON")->required();
    solve->add_option("--k", k, "number of disks")->required();
    solve->add_option("--engine", engine, "fast|naive");
    solve->add_flag("--parallel", parallel, "search root vertices concurrently");
    solve->add_option("--threads", threads, "worker count for --parallel (0: all cores)");
    solve->add_option("--out", out_path, "result JSON (default stdout)");
    solve->callback([&] {
        action = [&] {
            const ConvexPolygon polygon = load_polygon();
            const auto options = decide_options();
            const auto start = Clock::now();
            const ExactResult r = solve_exact(polygon, k, options);
            ResultRecord rec;
            rec.wall_ms = elapsed_ms(start);
            rec.algorithm = engine == "fast" ? "exact" : "exact-naive";
            rec.k = k;
            rec.radius = r.packing.radius();
            rec.radius_sq4 = r.packing.radius_sq4;
            rec.centers = to_source(polygon, r.packing.centers);
            rec.ladder_size = r.ladder_size;
            rec.decide_calls = r.decide_calls;
            rec.nodes = r.total_nodes;
            rec.max_nodes_per_decide = r.max_nodes_per_decide;
            emit(serialize_result(rec), out_path, out);
        };
    });

    auto* approx = app.add_subcommand("approx", "1/(2 sqrt 2)-approximate 3-dispersion");
    approx->add_option("--in", in_path, "instance JSON")->required();
    approx->add_option("--out", out_path, "result JSON (default stdout)");
    approx->callback([&] {
        action = [&] {
            const ConvexPolygon polygon = load_polygon();
            const auto start = Clock::now();
            const Approx3Result r = approx_3(polygon);
            ResultRecord rec;
            rec.wall_ms = elapsed_ms(start);
            rec.algorithm = "approx3";
            rec.k = 3;
            rec.radius = r.packing.radius();
            rec.radius_sq4 = r.packing.radius_sq4;
            rec.centers = to_source(polygon, r.packing.centers);
            rec.vertex_accesses = r.vertex_accesses;
            emit(serialize_result(rec), out_path, out);
        };
    });

    auto* dec = app.add_subcommand("decide", "can k disks of radius r be packed on vertices?");
    dec->add_option("--in", in_path, "instance JSON")->required();
    dec->add_option("--k", k, "number of disks")->required();
    dec->add_option("--r", radius, "disk radius")->required();
    dec->add_option("--engine", engine, "fast|naive");
    dec->add_flag("--parallel", parallel, "search root vertices concurrently");
    dec->add_option("--threads", threads, "worker count for --parallel (0: all cores)");
    dec->callback([&] {
        action = [&] {
            if (!(radius >= 0.0) || !std::isfinite(radius)) throw std::invalid_argument("--r must be a finite radius >= 0");
            const ConvexPolygon polygon = load_polygon();
            const double four_r_sq = 4.0 * radius * radius;
            const DecideResult r = decide(polygon, k, four_r_sq, decide_options());
            nlohmann::json doc;
            doc["feasible"] = r.feasible();
            doc["k"] = k;
            doc["radius"] = radius;
            doc["radius_sq4"] = four_r_sq;
            doc["nodes"] = r.nodes;
            doc["centers"] = r.feasible() ? nlohmann::json(to_source(polygon, r.packing->centers))
                                          : nlohmann::json::array();
            out << doc.dump(2) << '\n';
        };
    });

    auto* orc = app.add_subcommand("oracle", "brute-force optimum over all k-subsets");
    orc->add_option("--in", in_path, "instance JSON")->required();
    orc->add_option("--k", k, "number of disks")->required();
    orc->add_option("--limit", limit, "maximum number of subsets to enumerate");
    orc->add_option("--out", out_path, "result JSON (default stdout)");
    orc->callback([&] {
        action = [&] {
            // General positions are fine here; no convexity check.
            const InstanceFile inst = read_instance(in_path);
            const auto start = Clock::now();
            const Packing p = oracle::brute_force_kdispersion(inst.points, k, limit);
            ResultRecord rec;
            rec.wall_ms = elapsed_ms(start);
            rec.algorithm = "oracle";
            rec.k = k;
            rec.radius = p.radius();
            rec.radius_sq4 = p.radius_sq4;
            rec.centers = p.centers;
            emit(serialize_result(rec), out_path, out);
        };
    });

    auto* gen = app.add_subcommand("gen", "write a convex-position instance");
    gen->add_option("--shape", shape_name, "valtr|regular|circle")->required();
    gen->add_option("--n", n, "number of vertices")->required();
    gen->add_option("--seed", seed, "random seed");
    gen->add_option("--out", out_path, "instance JSON (default stdout)");
    gen->callback([&] {
        action = [&] {
            const auto shape = parse_shape(shape_name);
            if (!shape) throw std::invalid_argument("unknown shape '" + shape_name + "'");
            InstanceFile inst;
            inst.points = generate(*shape, n, seed);
            inst.shape = shape_name;
            if (*shape != Shape::Regular) inst.seed = seed;
            emit(serialize_instance(inst), out_path, out);
        };
    });

    auto* render = app.add_subcommand("render", "draw an instance and a result as SVG");
    render->add_option("--in", in_path, "instance JSON")->required();
    render->add_option("--result", result_path, "result JSON")->required();
    render->add_option("--out", out_path, "SVG file (default stdout)");
    render->callback([&] {
        action = [&] {
            const InstanceFile inst = read_instance(in_path);
            const ResultRecord rec = read_result(result_path);
            emit(render_svg(inst.points, rec), out_path, out);
        };
    });

    auto* bn = app.add_subcommand("bench", "run the exact solver over a suite, CSV out");
    bn->add_option("--spec", spec_path, "suite JSON")->required();
    bn->add_option("--engine", engine, "fast|naive");
    bn->add_flag("--parallel", parallel, "search root vertices concurrently");
    bn->add_option("--threads", threads, "worker count for --parallel (0: all cores)");
    bn->add_option("--out", out_path, "CSV file (default stdout)");
    bn->callback([&] {
        action = [&] { emit(bench(parse_bench_spec(read_file(spec_path)), decide_options()), out_path, out); };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "kdisp: " << e.what() << '\n';
        return kExitBadParameters;
    }

    try {
        action();
        return kExitOk;
    } catch (const RejectedInput& e) {
        err << "kdisp: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const BadInput& e) {
        err << "kdisp: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const InvalidK& e) {
        err << "kdisp: " << e.what() << '\n';
        return kExitBadParameters;
    } catch (const TooLarge& e) {
        err << "kdisp: " << e.what() << '\n';
        return kExitBadParameters;
    } catch (const std::invalid_argument& e) {
        err << "kdisp: " << e.what() << '\n';
        return kExitBadParameters;
    } catch (const std::exception& e) {
        err << "kdisp: " << e.what() << '\n';
        return 1;
    }
}

} // namespace kdisp::cli
