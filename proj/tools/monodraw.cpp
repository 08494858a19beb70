#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
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

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!std::isspace((unsigned char)c)) {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace monodraw;

    CLI::App app{"monodraw: monotone, strictly convex, and strongly monotone "
                 "straight-line drawings of trees and outerplanar graphs"};
    app.require_subcommand(1);

    unsigned long long seed = 0;
    if (const char* env = std::getenv("MONODRAW_SEED"))
        seed = std::strtoull(env, nullptr, 10);

    auto* gen = app.add_subcommand("gen", "generate a tree or graph input file");
    std::string gen_kind, gen_out;
    int gen_n = 10, gen_depth = 3, gen_l = 1, gen_maxdeg = 8;
    bool gen_nodeg2 = false;
    gen->add_option("kind", gen_kind, "input family")
        ->required()
        ->check(CLI::IsMember({"random-tree", "binary", "star", "caterpillar",
                               "k4leaves", "outerplanar-random"}));
    gen->add_option("--n", gen_n, "vertex count");
    gen->add_option("--depth", gen_depth, "complete binary tree depth");
    gen->add_option("--l", gen_l, "pendant leaves per K4 vertex");
    gen->add_option("--max-deg", gen_maxdeg, "maximum degree for random trees");
    gen->add_flag("--no-deg2", gen_nodeg2, "forbid degree-2 vertices in random trees");
    gen->add_option("--seed", seed, "PRNG seed (default: MONODRAW_SEED or 0)");
    gen->add_option("--out", gen_out, "output file (default stdout)");

    auto* draw = app.add_subcommand("draw", "run a drawing algorithm on an input file");
    std::string draw_algo, draw_in, draw_out, draw_svg;
    int draw_precision = 53;
    double draw_eps = 1e-9;
    draw->add_option("--algo", draw_algo, "drawing algorithm")
        ->required()
        ->check(CLI::IsMember({"inorder", "ce", "disk", "strong", "outerchain"}));
    draw->add_option("--in", draw_in, "input tree/graph file")->required();
    draw->add_option("--out", draw_out, "drawing JSON output (default stdout)");
    draw->add_option("--svg", draw_svg, "also render an SVG to this path");
    draw->add_option("--precision", draw_precision, "floating precision bits (53, 64, or 4096)");
    draw->add_option("--epsilon", draw_eps, "degeneracy tolerance for disk refinement");

    auto* verify = app.add_subcommand("verify", "check properties of a drawing JSON");
    std::string verify_in, verify_checks, verify_out;
    double verify_eps = 1e-9;
    std::optional<double> verify_minres;
    int verify_maxn = 5000;
    verify->add_option("--in", verify_in, "drawing JSON file")->required();
    verify->add_option("--checks", verify_checks,
                       "comma-separated subset of crossing,monotone,strong,convex,"
                       "strict-convex,resolution");
    verify->add_option("--epsilon", verify_eps, "relative tolerance for floating drawings");
    verify->add_option("--min-resolution", verify_minres,
                       "required minimum angle (radians) for the resolution check");
    verify->add_option("--max-n", verify_maxn,
                       "refuse drawings with more vertices (quadratic checks)");
    verify->add_option("--out", verify_out, "report JSON output (default stdout)");

    auto* primvec = app.add_subcommand("primvec", "list primitive vectors by denominator");
    int pv_d = 6;
    std::string pv_out;
    primvec->add_option("--d", pv_d, "denominator bound")->required()->check(CLI::PositiveNumber);
    primvec->add_option("--out", pv_out, "output file (default stdout)");

    auto* render = app.add_subcommand("render", "render a drawing JSON as SVG");
    std::string render_in, render_out;
    double render_size = 640.0;
    render->add_option("--in", render_in, "drawing JSON file")->required();
    render->add_option("--out", render_out, "SVG output (default stdout)");
    render->add_option("--size", render_size, "canvas size in pixels");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            std::string text;
            if (gen_kind == "random-tree")
                text = serialize_tree_text(gen_random_tree(gen_n, gen_maxdeg, seed, gen_nodeg2));
            else if (gen_kind == "binary")
                text = serialize_tree_text(gen_complete_binary(gen_depth));
            else if (gen_kind == "star")
                text = serialize_tree_text(gen_star(gen_n - 1));
            else if (gen_kind == "caterpillar")
                text = serialize_tree_text(gen_caterpillar(gen_n, seed));
            else if (gen_kind == "k4leaves")
                text = edge_graph_to_json_text(gen_k4_with_leaves(gen_l));
            else
                text = outer_graph_to_json_text(gen_outerplanar_random(gen_n, seed));
            write_output(gen_out, text);
        } else if (*draw) {
            Drawing dr;
            const std::string text = read_file(draw_in);
            if (draw_algo == "outerchain") {
                dr = draw_outerchain(outer_graph_from_json_text(text));
            } else {
                const RootedOrderedTree t = parse_tree_auto(text);
                if (draw_algo == "inorder") {
                    dr = draw_inorder(t);
                } else if (draw_algo == "ce") {
                    dr = draw_ce_grid(t);
                } else {
                    PrecisionPolicy pol;
                    pol.bits = draw_precision;
                    pol.check_eps = (long double)draw_eps;
                    dr = draw_algo == "disk" ? draw_disk(t, pol) : draw_strong(t, pol);
                }
            }
            write_output(draw_out, drawing_to_json_text(dr));
            if (!draw_svg.empty()) write_output(draw_svg, render_svg(dr));
        } else if (*verify) {
            const std::vector<std::string> names = split_commas(verify_checks);
            if (names.empty()) throw std::runtime_error("no checks requested");
            const Drawing dr = drawing_from_json_text(read_file(verify_in));
            if (dr.n() > verify_maxn)
                throw std::runtime_error("drawing has " + std::to_string(dr.n()) +
                                         " vertices; raise --max-n to verify it anyway");
            VerifyOptions opt;
            opt.eps = (long double)verify_eps;
            const auto reports = run_checks(dr, names, opt, verify_minres);
            write_output(verify_out, reports_to_json_text(reports));
            for (const auto& r : reports)
                if (!r.pass) return 1;
        } else if (*primvec) {
            std::string text;
            for (const Vec2i v : farey_vectors(pv_d))
                text += std::to_string(v.x) + " " + std::to_string(v.y) + "\n";
            write_output(pv_out, text);
        } else if (*render) {
            const Drawing dr = drawing_from_json_text(read_file(render_in));
            write_output(render_out, render_svg(dr, render_size));
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
