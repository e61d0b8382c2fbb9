#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rectplan/error.hpp"
#include "rectplan/grid.hpp"
#include "rectplan/oracle.hpp"
#include "rectplan/solve.hpp"
#include "rectplan/svg.hpp"

namespace {

// Exit codes: 0 solved/pass, 2 infeasible/fail, 1 error.
constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kInfeasible = 2;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) rectplan::fail("IoError", "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) rectplan::fail("IoError", "cannot write " + path);
    out << text;
}

rectplan::Rect parse_window(const std::string& text) {
    std::vector<rectplan::Rational> parts;
    std::string cur;
    std::istringstream ss(text);
    while (std::getline(ss, cur, ','))
        parts.push_back(rectplan::parse_rational(cur));
    if (parts.size() != 4)
        rectplan::fail("MalformedInput", "window must be cx,cy,w,h");
    return rectplan::make_rect(parts[0], parts[1], parts[2], parts[3]);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact minimum-move translation scheduling for rectangular robots"};
    app.require_subcommand(1);

    std::string instance_path, schedule_path, out_path, solver_name = "auto", window_spec;
    std::string out_dir;
    long max_moves = -1;
    long grid_depth = 0;
    int threads = 1;
    bool legacy_cases = false;

    CLI::App* solve_cmd = app.add_subcommand("solve", "compute a minimum-length schedule");
    solve_cmd->add_option("--instance", instance_path, "instance JSON")->required();
    solve_cmd->add_option("--solver", solver_name, "grid|lp (default: auto)");
    solve_cmd->add_option("--max-moves", max_moves, "move budget override");
    solve_cmd->add_option("--out", out_path, "write the schedule JSON here");
    solve_cmd->add_option("--threads", threads, "grid-solver worker count");
    solve_cmd->add_flag("--legacy-cases", legacy_cases,
                        "serial LP solver: branch over the literal four exteriority cases");

    CLI::App* verify_cmd = app.add_subcommand("verify", "check a schedule against an instance");
    verify_cmd->add_option("--instance", instance_path, "instance JSON")->required();
    verify_cmd->add_option("--schedule", schedule_path, "schedule JSON")->required();

    CLI::App* grid_cmd = app.add_subcommand("grid", "dump the instance grid");
    grid_cmd->add_option("--instance", instance_path, "instance JSON")->required();
    grid_cmd->add_option("--depth", grid_depth, "stacking depth")->required();

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "brute-force optimal length (lattice)");
    oracle_cmd->add_option("--instance", instance_path, "instance JSON")->required();
    oracle_cmd->add_option("--window", window_spec, "search window cx,cy,w,h");

    CLI::App* render_cmd = app.add_subcommand("render", "render SVG frames of a schedule");
    render_cmd->add_option("--instance", instance_path, "instance JSON")->required();
    render_cmd->add_option("--schedule", schedule_path, "schedule JSON")->required();
    render_cmd->add_option("--out", out_dir, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kError;
    }

    try {
        if (solve_cmd->parsed()) {
            rectplan::Instance inst = rectplan::parse_instance(slurp(instance_path));
            rectplan::SolveOptions opts;
            if (solver_name == "grid")
                opts.solver = rectplan::SolverChoice::Grid;
            else if (solver_name == "lp")
                opts.solver = rectplan::SolverChoice::Lp;
            else if (solver_name != "auto")
                rectplan::fail("MalformedInput", "--solver must be grid or lp");
            if (max_moves >= 0) opts.max_moves = max_moves;
            opts.legacy_cases = legacy_cases;
            opts.threads = threads;
            auto schedule = rectplan::solve(inst, opts);
            if (!schedule) {
                std::cout << "infeasible within budget\n";
                return kInfeasible;
            }
            std::string text = rectplan::serialize_schedule(*schedule);
            if (!out_path.empty())
                spit(out_path, text);
            else
                std::cout << text;
            std::cerr << "solved: " << schedule->length() << " step(s)\n";
            return kOk;
        }
        if (verify_cmd->parsed()) {
            rectplan::Instance inst = rectplan::parse_instance(slurp(instance_path));
            rectplan::Schedule s = rectplan::parse_schedule(slurp(schedule_path));
            rectplan::VerifyReport rep = rectplan::verify_schedule(inst, s);
            if (rep.ok) {
                std::cout << "pass\n";
                return kOk;
            }
            std::cout << "fail: " << rectplan::to_string(rep.reason);
            if (rep.step) std::cout << " at step " << *rep.step;
            if (rep.robot) std::cout << " (robot " << *rep.robot << ")";
            std::cout << ": " << rep.detail << "\n";
            return kInfeasible;
        }
        if (grid_cmd->parsed()) {
            rectplan::Instance inst = rectplan::parse_instance(slurp(instance_path));
            rectplan::Grid g = rectplan::build_grid(inst, grid_depth);
            std::cout << "{\n  \"xs\": [";
            for (size_t i = 0; i < g.xs.size(); ++i)
                std::cout << (i ? ", " : "") << '"' << rectplan::to_fraction_string(g.xs[i]) << '"';
            std::cout << "],\n  \"ys\": [";
            for (size_t i = 0; i < g.ys.size(); ++i)
                std::cout << (i ? ", " : "") << '"' << rectplan::to_fraction_string(g.ys[i]) << '"';
            std::cout << "]\n}\n";
            return kOk;
        }
        if (oracle_cmd->parsed()) {
            rectplan::Instance inst = rectplan::parse_instance(slurp(instance_path));
            rectplan::Rect window =
                window_spec.empty() ? rectplan::default_window(inst) : parse_window(window_spec);
            std::optional<long> best = inst.mode == rectplan::Mode::Parallel
                                           ? rectplan::bfs_parallel(inst, window)
                                           : rectplan::bfs_serial(inst, window);
            if (!best) {
                std::cout << "infeasible\n";
                return kInfeasible;
            }
            std::cout << *best << "\n";
            return kOk;
        }
        if (render_cmd->parsed()) {
            rectplan::Instance inst = rectplan::parse_instance(slurp(instance_path));
            rectplan::Schedule s = rectplan::parse_schedule(slurp(schedule_path));
            size_t frames = rectplan::render_schedule_svg(inst, s, out_dir);
            std::cout << frames << " frame(s) written to " << out_dir << "\n";
            return kOk;
        }
    } catch (const rectplan::Error& e) {
        std::cerr << e.what() << "\n";
        return kError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
    return kError;
}
