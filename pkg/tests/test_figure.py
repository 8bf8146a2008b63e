import re
import xml.etree.ElementTree as ET

import pytest

from catalan_atlas.figure import FigureError, render_svg
from catalan_atlas.rootsys import build_root_system


def _classes(svg):
    root = ET.fromstring(svg)
    out = {}
    for el in root.iter():
        c = el.get("class")
        if c:
            out.setdefault(c, []).append(el)
    return root, out


@pytest.mark.parametrize("name,m,n", [("A2", 2, 7), ("A2", 1, 2), ("B2", 1, 3), ("G2", 2, 16), ("B2", 3, 21)])
def test_element_counts(name, m, n):
    root, cls = _classes(render_svg(build_root_system(name), m))
    assert len(cls["max-alcove"]) == n
    assert len(cls["lattice-point"]) == n
    assert len(cls["simplex"]) == 1
    assert root.get("viewBox") == "0 0 480 480"


def test_region_shading_covers_box():
    # A2, m = 2: 4 * 6 / 3 dominant alcoves with (sigma_i, x) < 2
    _, cls = _classes(render_svg(build_root_system("A2"), 2))
    assert len(cls["region-alcove"]) == 8
    assert len({e.get("data-region") for e in cls["region-alcove"]}) == 7


def test_hyperplanes():
    _, cls = _classes(render_svg(build_root_system("A2"), 2))
    # 3 positive roots, levels 1..2, all meet the frame; the two simple
    # level-0 lines bound the chamber, the highest-root one meets it at 0
    assert len(cls["hyperplane"]) == 6
    assert len(cls["chamber-wall"]) == 2


def _polygon_points(el):
    return [tuple(map(float, p.split(","))) for p in el.get("points").split()]


def test_dots_inside_simplex():
    _, cls = _classes(render_svg(build_root_system("A2"), 2))
    (tri,) = [_polygon_points(e) for e in cls["simplex"]]

    def inside(q):
        # signed distance to each edge; dots on an edge are rounded to 6 places
        signs = []
        for a, b in zip(tri, tri[1:] + tri[:1]):
            cross = (b[0] - a[0]) * (q[1] - a[1]) - (b[1] - a[1]) * (q[0] - a[0])
            signs.append(cross / ((b[0] - a[0]) ** 2 + (b[1] - a[1]) ** 2) ** 0.5)
        return all(s >= -1e-4 for s in signs) or all(s <= 1e-4 for s in signs)

    for dot in cls["lattice-point"]:
        assert inside((float(dot.get("cx")), float(dot.get("cy"))))


def test_fixed_precision_and_determinism():
    rs = build_root_system("B2")
    a, b = render_svg(rs, 2), render_svg(rs, 2)
    assert a == b
    drawn = a.split("</defs>", 1)[1]
    nums = re.findall(r'(?:cx|cy|x1|y1|x2|y2)="([^"]+)"', drawn)
    nums += [v for pts in re.findall(r'points="([^"]+)"', drawn) for xy in pts.split() for v in xy.split(",")]
    assert nums and all(re.fullmatch(r"-?\d+\.\d{6}", v) for v in nums)


def test_rank_errors():
    with pytest.raises(FigureError):
        render_svg(build_root_system("A3"), 1)
    with pytest.raises(FigureError):
        render_svg(build_root_system("A2"), 0)
