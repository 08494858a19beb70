#include "monodraw/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

namespace monodraw {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

struct Box {
    double x0, y0, x1, y1;
};

// Largest t >= 0 with p + t*dir still inside the box (slab method; p is
// assumed inside, which holds because rays start at drawing vertices).
double clip_ray(Vec2r p, Vec2r dir, const Box& b) {
    double t = std::numeric_limits<double>::infinity();
    if (dir.x > 0) t = std::min(t, ((double)b.x1 - (double)p.x) / (double)dir.x);
    if (dir.x < 0) t = std::min(t, ((double)b.x0 - (double)p.x) / (double)dir.x);
    if (dir.y > 0) t = std::min(t, ((double)b.y1 - (double)p.y) / (double)dir.y);
    if (dir.y < 0) t = std::min(t, ((double)b.y0 - (double)p.y) / (double)dir.y);
    return t;
}

}  // namespace

std::string render_svg(const Drawing& d, double size) {
    const double pad = std::min(20.0, size / 8);

    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(size) +
         "\" height=\"" + fmt(size) + "\" viewBox=\"0 0 " + fmt(size) + " " + fmt(size) +
         "\">\n";
    s += "<rect width=\"" + fmt(size) + "\" height=\"" + fmt(size) + "\" fill=\"white\"/>\n";
    if (d.n() == 0) {
        s += "</svg>\n";
        return s;
    }

    double x0 = std::numeric_limits<double>::infinity(), y0 = x0;
    double x1 = -x0, y1 = -y0;
    for (int v = 0; v < d.n(); ++v) {
        const Vec2r p = d.rpos_of(v);
        x0 = std::min(x0, (double)p.x);
        x1 = std::max(x1, (double)p.x);
        y0 = std::min(y0, (double)p.y);
        y1 = std::max(y1, (double)p.y);
    }
    double maxdim = std::max(x1 - x0, y1 - y0);
    if (maxdim <= 0) maxdim = 1;
    // Rays run to 1.2 times the vertex bounding box.
    const double margin = 0.1 * maxdim;
    const Box world{x0 - margin, y0 - margin, x1 + margin, y1 + margin};
    const double ew = world.x1 - world.x0, eh = world.y1 - world.y0;
    const double scale = (size - 2 * pad) / std::max(ew, eh);
    const double offx = pad + ((size - 2 * pad) - ew * scale) / 2;
    const double offy = pad + ((size - 2 * pad) - eh * scale) / 2;

    auto px = [&](double x) { return offx + (x - world.x0) * scale; };
    auto py = [&](double y) { return size - offy - (y - world.y0) * scale; };  // y up

    auto line = [&](Vec2r a, Vec2r b, const char* extra) {
        s += "<line x1=\"" + fmt(px((double)a.x)) + "\" y1=\"" + fmt(py((double)a.y)) +
             "\" x2=\"" + fmt(px((double)b.x)) + "\" y2=\"" + fmt(py((double)b.y)) + "\" " +
             extra + "/>\n";
    };

    auto ray = [&](int leaf, Vec2r dir) {
        const Vec2r p = d.rpos_of(leaf);
        const double t = clip_ray(p, dir, world);
        if (!(t > 0) || !std::isfinite(t)) return;
        const Vec2r q{p.x + (long double)t * dir.x, p.y + (long double)t * dir.y};
        line(p, q, "stroke=\"#888888\" stroke-width=\"1\" stroke-dasharray=\"4 3\"");
    };
    if (d.kind == CoordKind::exact_int) {
        for (const auto& r : d.irays) ray(r.leaf, to_real(r.dir));
    } else {
        for (const auto& r : d.rrays) ray(r.leaf, r.dir);
    }

    for (const auto& e : d.edges)
        line(d.rpos_of(e[0]), d.rpos_of(e[1]), "stroke=\"black\" stroke-width=\"1\"");

    for (int v = 0; v < d.n(); ++v) {
        const Vec2r p = d.rpos_of(v);
        s += "<circle cx=\"" + fmt(px((double)p.x)) + "\" cy=\"" + fmt(py((double)p.y)) +
             "\" r=\"2\" fill=\"#c0392b\"/>\n";
    }

    s += "</svg>\n";
    return s;
}

}  // namespace monodraw
