import json

import monodraw


def test_farey_basics():
    vs = monodraw.farey_vectors(6)
    assert len(vs) == 13
    assert vs[0] == (0, 1)
    assert vs[-1] == (1, 1)
    assert monodraw.farey_size(6) == 13
    assert monodraw.select_d_for(13) == 12


def test_tree_pipeline():
    tree = monodraw.gen("random-tree", n=40, seed=7, no_deg2=True)
    drawing = monodraw.draw("inorder", tree)
    parsed = json.loads(drawing)
    assert parsed["kind"] == "int"
    assert len(parsed["vertices"]) == 40
    report = json.loads(
        monodraw.verify(drawing, ["crossing", "monotone", "strict-convex"])
    )
    assert [r["check"] for r in report] == ["crossing", "monotone", "strict-convex"]
    assert all(r["pass"] for r in report)
    svg = monodraw.render_svg(drawing)
    assert svg.startswith("<svg") and svg.rstrip().endswith("</svg>")


def test_disk_pipeline():
    tree = monodraw.gen("binary", depth=4)
    drawing = monodraw.draw("strong", tree)
    assert json.loads(drawing)["kind"] == "float64"
    report = json.loads(monodraw.verify(drawing, ["strong"]))
    assert all(r["pass"] for r in report)


def test_outerchain_pipeline():
    g = monodraw.gen("outerplanar-random", n=12, seed=3)
    drawing = monodraw.draw("outerchain", g)
    report = json.loads(
        monodraw.verify(drawing, ["crossing", "strong", "strict-convex"])
    )
    assert all(r["pass"] for r in report)


def test_failing_drawing_reports_witness():
    g = monodraw.gen("k4leaves", l=1)
    label_edges = json.loads(g)["edges"]
    coords = {
        "v1": ("1", "1"),
        "v2": ("0", "0"),
        "v3": ("4", "0"),
        "v4": ("2", "4"),
        "w1_1": ("2", "1"),
        "w2_1": ("1", "2"),
        "w3_1": ("3", "1"),
        "w4_1": ("2", "3"),
    }
    drawing = json.dumps(
        {
            "kind": "int",
            "vertices": [
                {"id": v, "x": coords[v][0], "y": coords[v][1]} for v in coords
            ],
            "edges": label_edges,
        }
    )
    report = json.loads(monodraw.verify(drawing, ["strong"]))
    assert len(report) == 1
    assert not report[0]["pass"]
    assert report[0]["witness_vertices"]
