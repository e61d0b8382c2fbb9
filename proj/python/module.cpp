#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "rectplan/configurations.hpp"
#include "rectplan/error.hpp"
#include "rectplan/grid.hpp"
#include "rectplan/instance.hpp"
#include "rectplan/oracle.hpp"
#include "rectplan/solve.hpp"

namespace py = pybind11;
using namespace rectplan;

namespace {

Rect rect_from_fields(const std::string& cx, const std::string& cy, const std::string& w,
                      const std::string& h) {
    return make_rect(parse_rational(cx), parse_rational(cy), parse_rational(w), parse_rational(h));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact minimum-move translation scheduling for rectangular robots";

    py::register_exception<Error>(m, "RectplanError");

    m.def(
        "solve",
        [](const std::string& instance_json, const std::string& solver,
           std::optional<long> max_moves, bool legacy_cases, int threads) -> py::object {
            Instance inst = parse_instance(instance_json);
            SolveOptions opts;
            if (solver == "grid")
                opts.solver = SolverChoice::Grid;
            else if (solver == "lp")
                opts.solver = SolverChoice::Lp;
            else if (solver != "auto")
                fail("MalformedInput", "solver must be auto, grid or lp");
            opts.max_moves = max_moves;
            opts.legacy_cases = legacy_cases;
            opts.threads = threads;
            auto s = solve(inst, opts);
            if (!s) return py::none();
            return py::str(serialize_schedule(*s));
        },
        py::arg("instance_json"), py::arg("solver") = "auto",
        py::arg("max_moves") = py::none(), py::arg("legacy_cases") = false,
        py::arg("threads") = 1,
        "Solve an instance; returns the schedule JSON or None when infeasible.");

    m.def(
        "verify",
        [](const std::string& instance_json, const std::string& schedule_json) {
            Instance inst = parse_instance(instance_json);
            Schedule s = parse_schedule(schedule_json);
            VerifyReport rep = verify_schedule(inst, s);
            py::dict d;
            d["ok"] = rep.ok;
            d["reason"] = std::string(to_string(rep.reason));
            d["step"] = rep.step ? py::cast(*rep.step) : py::none();
            d["robot"] = rep.robot ? py::cast(*rep.robot) : py::none();
            d["detail"] = rep.detail;
            return d;
        },
        py::arg("instance_json"), py::arg("schedule_json"),
        "Exact schedule verification; returns a report dict.");

    m.def(
        "grid_lines",
        [](const std::string& instance_json, long depth) {
            Grid g = build_grid(parse_instance(instance_json), depth);
            std::vector<std::string> xs, ys;
            for (const Rational& x : g.xs) xs.push_back(to_fraction_string(x));
            for (const Rational& y : g.ys) ys.push_back(to_fraction_string(y));
            return py::make_tuple(xs, ys);
        },
        py::arg("instance_json"), py::arg("depth"),
        "Vertical and horizontal instance-grid lines as p/q strings.");

    m.def(
        "oracle",
        [](const std::string& instance_json,
           std::optional<std::vector<std::string>> window) -> py::object {
            Instance inst = parse_instance(instance_json);
            Rect win = window ? rect_from_fields((*window)[0], (*window)[1], (*window)[2],
                                                 (*window)[3])
                              : default_window(inst);
            auto best = inst.mode == Mode::Parallel ? bfs_parallel(inst, win)
                                                    : bfs_serial(inst, win);
            if (!best) return py::none();
            return py::cast(*best);
        },
        py::arg("instance_json"), py::arg("window") = py::none(),
        "Brute-force optimal length for lattice instances; None when unreachable.");

    m.def(
        "morph",
        [](const std::string& box_cx, const std::string& box_cy, const std::string& box_w,
           const std::string& box_h,
           const std::vector<std::array<std::string, 4>>& from_rects,
           const std::vector<std::array<std::string, 4>>& to_rects) {
            Rect box = rect_from_fields(box_cx, box_cy, box_w, box_h);
            std::vector<Rect> f, t;
            for (const auto& r : from_rects) f.push_back(rect_from_fields(r[0], r[1], r[2], r[3]));
            for (const auto& r : to_rects) t.push_back(rect_from_fields(r[0], r[1], r[2], r[3]));
            return serialize_schedule(morph(box, f, t));
        },
        "At most 2k axis moves between two same-configuration placements in a box.");

    m.def(
        "boxed_budget",
        [](long k) { return py::cast(boxed_budget(k).get_str()); },
        py::arg("k"), "2k * 5^(k(k-1)) as a decimal string.");
}
