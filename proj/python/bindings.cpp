#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "monodraw/convex_grid.hpp"
#include "monodraw/disk.hpp"
#include "monodraw/drawing.hpp"
#include "monodraw/graph.hpp"
#include "monodraw/outerplanar.hpp"
#include "monodraw/primvec.hpp"
#include "monodraw/svg.hpp"
#include "monodraw/tree.hpp"
#include "monodraw/verify.hpp"

namespace py = pybind11;
using namespace monodraw;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Monotone, strictly convex, and strongly monotone straight-line "
              "drawings of trees and outerplanar graphs, with independent "
              "verification.  All drawing data moves as JSON/text strings.";
    m.attr("__version__") = "0.1.0";

    m.def(
        "farey_vectors",
        [](int d) {
            std::vector<std::pair<long long, long long>> out;
            for (const Vec2i v : farey_vectors(d)) out.emplace_back(v.x, v.y);
            return out;
        },
        py::arg("d"),
        "Primitive vectors (x, y) with 0 <= x <= y <= d, ordered by slope.");
    m.def("farey_size", &farey_size, py::arg("d"),
          "Size of farey_vectors(d) without enumerating it.");
    m.def("select_d_for", &select_d_for, py::arg("k"),
          "Smallest denominator bound yielding at least k vectors.");

    m.def(
        "gen",
        [](const std::string& kind, int n, int depth, int l, int max_deg,
           unsigned long long seed, bool no_deg2) -> std::string {
            if (kind == "random-tree")
                return serialize_tree_text(gen_random_tree(n, max_deg, seed, no_deg2));
            if (kind == "binary") return serialize_tree_text(gen_complete_binary(depth));
            if (kind == "star") return serialize_tree_text(gen_star(n - 1));
            if (kind == "caterpillar") return serialize_tree_text(gen_caterpillar(n, seed));
            if (kind == "k4leaves") return edge_graph_to_json_text(gen_k4_with_leaves(l));
            if (kind == "outerplanar-random")
                return outer_graph_to_json_text(gen_outerplanar_random(n, seed));
            throw std::invalid_argument("unknown generator kind: " + kind);
        },
        py::arg("kind"), py::arg("n") = 10, py::arg("depth") = 3, py::arg("l") = 1,
        py::arg("max_deg") = 8, py::arg("seed") = 0, py::arg("no_deg2") = false,
        "Generate an input file body (tree text or graph JSON).");

    m.def(
        "draw",
        [](const std::string& algo, const std::string& input_text, int precision,
           double epsilon) -> std::string {
            if (algo == "outerchain")
                return drawing_to_json_text(
                    draw_outerchain(outer_graph_from_json_text(input_text)));
            const RootedOrderedTree t = parse_tree_auto(input_text);
            if (algo == "inorder") return drawing_to_json_text(draw_inorder(t));
            if (algo == "ce") return drawing_to_json_text(draw_ce_grid(t));
            PrecisionPolicy pol;
            pol.bits = precision;
            pol.check_eps = (long double)epsilon;
            if (algo == "disk") return drawing_to_json_text(draw_disk(t, pol));
            if (algo == "strong") return drawing_to_json_text(draw_strong(t, pol));
            throw std::invalid_argument("unknown algorithm: " + algo);
        },
        py::arg("algo"), py::arg("input_text"), py::arg("precision") = 53,
        py::arg("epsilon") = 1e-9,
        "Run a drawing algorithm (inorder | ce | disk | strong | outerchain) "
        "and return the drawing JSON.");

    m.def(
        "verify",
        [](const std::string& drawing_json, const std::vector<std::string>& checks,
           double epsilon, std::optional<double> min_resolution) -> std::string {
            VerifyOptions opt;
            opt.eps = (long double)epsilon;
            return reports_to_json_text(
                run_checks(drawing_from_json_text(drawing_json), checks, opt, min_resolution));
        },
        py::arg("drawing_json"), py::arg("checks"), py::arg("epsilon") = 1e-9,
        py::arg("min_resolution") = std::nullopt,
        "Run named checks (crossing, monotone, strong, convex, strict-convex, "
        "resolution) and return the report JSON.");

    m.def(
        "render_svg",
        [](const std::string& drawing_json, double size) {
            return render_svg(drawing_from_json_text(drawing_json), size);
        },
        py::arg("drawing_json"), py::arg("size") = 640.0,
        "Render a drawing JSON as an SVG string.");
}
