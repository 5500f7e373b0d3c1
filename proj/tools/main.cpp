#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gridcycle/cycle_set.hpp"
#include "gridcycle/errors.hpp"
#include "gridcycle/generators.hpp"
#include "gridcycle/grid_graph.hpp"
#include "gridcycle/io.hpp"
#include "gridcycle/merge.hpp"
#include "gridcycle/oracle.hpp"
#include "gridcycle/validate.hpp"

using namespace gridcycle;

namespace {

int exit_code_for(Errc c) {
    switch (c) {
    case Errc::MissingFreeVertex:
    case Errc::NoMergeConfiguration: return 3;
    case Errc::BudgetExceeded: return 4;
    default: return 2;
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::ParseError, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

bool ring_has_edge(const std::vector<Point>& ring, const Edge& e) {
    size_t k = ring.size();
    for (size_t i = 0; i < k; ++i) {
        Point a = ring[i], b = ring[(i + 1) % k];
        if ((a == e.first && b == e.second) || (a == e.second && b == e.first)) return true;
    }
    return false;
}

int run_solve(const std::string& path, const std::vector<int32_t>& edge,
              const std::string& format, bool report) {
    GridGraph g = parse_instance(read_file(path));
    Timer total;
    Timer tv;
    ValidationReport rep = validate(g);
    if (!rep.solid) throw Error(Errc::PreconditionViolated, "graph is not solid");
    double ms_validate = tv.ms();

    Timer tb;
    GridGraph h = largest_biconnected(g);
    double ms_block = tb.ms();

    Timer ts;
    CycleSet s = find_cycle_set(h);
    double ms_cycle_set = ts.ms();

    Edge e = edge.empty() ? Edge{s.cycles[0].ring[0], s.cycles[0].ring[1]}
                          : Edge{{edge[0], edge[1]}, {edge[2], edge[3]}};
    if (!ring_has_edge(s.cycles[0].ring, e))
        throw Error(Errc::InvalidParameters, "edge is not on the outer boundary cycle");

    Timer tc;
    CycleSet s2 = convert_diamonds(s, h, e);
    double ms_convert = tc.ms();

    Timer tm;
    Cycle c = merge_all(s2, h, e);
    double ms_merge = tm.ms();
    double ms_total = total.ms();

    if (format == "svg") std::cout << render_svg(g, c);
    else if (format == "ascii") std::cout << render_ascii(g, c);
    else std::cout << render_cycle(c);

    if (report) {
        std::ostream& os = format == "svg" ? std::cerr : std::cout;
        os << "n " << g.size() << "\n";
        os << "cycle_length " << c.length() << "\n";
        os << std::fixed << std::setprecision(6);
        os << "bound " << (2.0 * double(h.size()) / 3.0 + 1.0) << "\n";
        os << std::setprecision(3);
        os << "elapsed_ms " << ms_total << "\n";
        os << "time_validate_ms " << ms_validate << "\n";
        os << "time_block_ms " << ms_block << "\n";
        os << "time_cycle_set_ms " << ms_cycle_set << "\n";
        os << "time_convert_ms " << ms_convert << "\n";
        os << "time_merge_ms " << ms_merge << "\n";
    }
    return 0;
}

int run_check(const std::string& path) {
    GridGraph g = parse_instance(read_file(path));
    ValidationReport r = validate(g);
    auto word = [](bool b) { return b ? "true" : "false"; };
    std::cout << "connected " << word(r.connected) << "\n";
    std::cout << "two_connected " << word(r.two_connected) << "\n";
    std::cout << "solid " << word(r.solid) << "\n";
    return 0;
}

int run_oracle(const std::string& path, int64_t budget) {
    GridGraph g = parse_instance(read_file(path));
    OracleResult r = longest_cycle_exact(g, budget);
    std::cout << "optimum " << r.optimum_length << "\n";
    if (r.optimum_length >= 4) std::cout << render_cycle(r.witness);
    return 0;
}

int run_gen(const std::string& kind, const std::string& arg, int64_t cells,
            std::optional<uint64_t> seed, const std::string& out_path) {
    GeneratorSpec spec = Rectangle{0, 0};
    if (kind == "rect") {
        auto xpos = arg.find('x');
        if (arg.empty() || xpos == std::string::npos)
            throw Error(Errc::InvalidParameters, "rect needs a size like 4x3");
        try {
            spec = Rectangle{int32_t(std::stol(arg.substr(0, xpos))),
                             int32_t(std::stol(arg.substr(xpos + 1)))};
        } catch (const std::exception&) {
            throw Error(Errc::InvalidParameters, "rect needs a size like 4x3");
        }
    } else if (kind == "diamond" || kind == "nested") {
        int32_t v = 0;
        try {
            v = int32_t(std::stol(arg));
        } catch (const std::exception&) {
            throw Error(Errc::InvalidParameters, kind + " needs an integer argument");
        }
        if (kind == "diamond") spec = StaircaseDiamond{v};
        else spec = NestedDiamonds{v};
    } else if (kind == "random") {
        if (cells <= 0) throw Error(Errc::InvalidParameters, "random needs --cells");
        uint64_t s = 1;
        if (seed) {
            s = *seed;
        } else if (const char* env = std::getenv("GRIDCYCLE_SEED")) {
            try {
                s = std::stoull(env);
            } catch (const std::exception&) {
                throw Error(Errc::InvalidParameters, "GRIDCYCLE_SEED is not a number");
            }
        }
        spec = RandomSolid{cells, s};
    } else {
        throw Error(Errc::InvalidParameters, "unknown generator " + kind);
    }
    std::string text = render_instance(generate(spec));
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw Error(Errc::InvalidParameters, "cannot write " + out_path);
        out << text;
    }
    return 0;
}

int run_bench(const std::string& family, const std::string& sizes_csv, int repeats) {
    if (family != "rect") throw Error(Errc::InvalidParameters, "unknown family " + family);
    if (repeats < 1) throw Error(Errc::InvalidParameters, "repeats must be positive");
    std::vector<int32_t> sides;
    std::stringstream ss(sizes_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            sides.push_back(int32_t(std::stol(tok)));
        } catch (const std::exception&) {
            throw Error(Errc::InvalidParameters, "bad size list");
        }
        if (sides.back() < 2) throw Error(Errc::InvalidParameters, "sides must be >= 2");
    }
    if (sides.empty()) throw Error(Errc::InvalidParameters, "bad size list");
    std::cout << std::fixed << std::setprecision(3);
    for (int32_t side : sides) {
        GridGraph g = generate(Rectangle{side, side});
        (void)approximate_longest_cycle(g);  // warm-up, discarded
        std::vector<double> times;
        for (int r = 0; r < repeats; ++r) {
            Timer t;
            (void)approximate_longest_cycle(g);
            times.push_back(t.ms());
        }
        std::sort(times.begin(), times.end());
        std::cout << g.size() << " " << times[times.size() / 2] << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"2/3-approximation for the longest cycle in solid grid graphs"};
    app.require_subcommand(1);

    std::string solve_path, format = "text";
    std::vector<int32_t> edge;
    bool report = false;
    auto* solve = app.add_subcommand("solve", "approximate the longest cycle of an instance");
    solve->add_option("path", solve_path, "instance file")->required();
    solve->add_option("--edge", edge, "x1 y1 x2 y2: boundary edge the cycle must contain")
        ->expected(4);
    solve->add_option("--format", format, "text, svg or ascii")
        ->check(CLI::IsMember({"text", "svg", "ascii"}));
    solve->add_flag("--report", report, "print size, bound and stage timings");

    std::string check_path;
    auto* check = app.add_subcommand("check", "report connectivity and solidity of an instance");
    check->add_option("path", check_path, "instance file")->required();

    std::string oracle_path;
    int64_t budget = 10'000'000;
    auto* oracle = app.add_subcommand("oracle", "exact optimum by exhaustive search (small n)");
    oracle->add_option("path", oracle_path, "instance file")->required();
    oracle->add_option("--budget", budget, "search node budget");

    std::string gen_kind, gen_arg, gen_out;
    int64_t gen_cells = 0;
    std::optional<uint64_t> gen_seed;
    auto* gen = app.add_subcommand("gen", "write a generated instance");
    gen->add_option("kind", gen_kind, "rect | diamond | nested | random")->required();
    gen->add_option("arg", gen_arg, "rect MxK, diamond ORDER, nested DEPTH");
    gen->add_option("--cells", gen_cells, "random: number of cells");
    gen->add_option("--seed", gen_seed, "random: growth seed (else GRIDCYCLE_SEED, else 1)");
    gen->add_option("--out", gen_out, "output file (default stdout)");

    std::string bench_family = "rect", bench_sizes;
    int bench_repeats = 3;
    auto* bench = app.add_subcommand("bench", "time the solver on generated instances");
    bench->add_option("--family", bench_family, "instance family (rect)");
    bench->add_option("--sizes", bench_sizes, "comma-separated side lengths")->required();
    bench->add_option("--repeats", bench_repeats, "timed runs per size (median is reported)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (solve->parsed()) return run_solve(solve_path, edge, format, report);
        if (check->parsed()) return run_check(check_path);
        if (oracle->parsed()) return run_oracle(oracle_path, budget);
        if (gen->parsed()) return run_gen(gen_kind, gen_arg, gen_cells, gen_seed, gen_out);
        if (bench->parsed()) return run_bench(bench_family, bench_sizes, bench_repeats);
    } catch (const Error& e) {
        std::cerr << errc_name(e.code()) << ": " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
