#pragma once
// Straight-line drawings: integer (exact) or floating coordinates, edge
// list, and the rays that extend leaf edges to infinity.  Includes the
// JSON serialization used by the command-line tools.

#include "monodraw/bigfloat.hpp"
#include "monodraw/geom.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace monodraw {

struct DrawingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class CoordKind { exact_int, real };

class Drawing {
  public:
    CoordKind kind = CoordKind::exact_int;
    int precision_bits = 53;                  // for real coordinates
    std::optional<std::string> root;          // tree drawings only
    std::vector<std::string> label;           // vertex ids, storage order
    std::vector<Vec2i> ipos;                  // exact_int coordinates
    std::vector<Vec2r> rpos;                  // real coordinates
    std::vector<Vec2b> bpos;                  // wide coordinates (precision > 64);
                                              // rpos then holds rounded copies
    std::vector<std::array<int, 2>> edges;    // vertex index pairs

    struct RayI {
        int leaf;
        Vec2i dir;
    };
    struct RayR {
        int leaf;
        Vec2r dir;
    };
    std::vector<RayI> irays;
    std::vector<RayR> rrays;
    std::vector<Vec2b> bray_dir;  // wide ray directions, parallel to rrays
                                  // (present exactly when bpos is)

    int n() const { return (int)label.size(); }
    int m() const { return (int)edges.size(); }

    // Wide coordinates in use: bpos is authoritative, rpos holds rounded
    // copies good enough for rendering but not for vertex distinctness.
    bool high_precision() const { return kind == CoordKind::real && precision_bits > 64; }

    int index_of(const std::string& id) const;

    Vec2r rpos_of(int v) const {
        return kind == CoordKind::exact_int ? to_real(ipos[v]) : rpos[v];
    }

    // Structural soundness: unique labels, valid edge indices, coordinate
    // array matching the kind, no zero-length edge, nonzero ray directions.
    // Throws DrawingError when violated.
    void validate() const;
};

// JSON schema: {"kind": "int"|"float64"|"float<bits>", "root": id?,
// "vertices": [{"id":.., "x":"<decimal>", "y":"<decimal>"}, ...],
// "edges": [[u,v], ...], "rays": [{"leaf":.., "dx":.., "dy":..}, ...]?}.
// Coordinates are decimal strings; floating values use shortest
// round-trip formatting.  Serialization is deterministic.
std::string drawing_to_json_text(const Drawing& d);
Drawing drawing_from_json_text(const std::string& text);

}  // namespace monodraw
