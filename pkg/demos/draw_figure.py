"""Write the rank-2 pictures to SVG files in the current directory."""
from catalan_atlas.figure import render_svg
from catalan_atlas.rootsys import build_root_system

for name, m in [("A2", 2), ("B2", 2), ("G2", 1)]:
    path = f"{name.lower()}_m{m}.svg"
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(render_svg(build_root_system(name), m))
    print("wrote", path)
