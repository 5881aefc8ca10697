"""
Drawing a pentagram
===================

The GHZ pentagram drawn as a five-line star with its five Fano planes.
Negative contexts and negative lines are heavy; in every plane the line at
infinity sits on the inscribed circle.  Render the DOT file with
``neato -n -Tsvg ghz.dot``.
"""
from pathlib import Path

from pentagram_atlas import make_context, validate_pentagram
from pentagram_atlas.render import render_dot, render_svg

ghz = validate_pentagram(make_context(c) for c in [
    ("XII", "IXI", "IIX", "XXX"),
    ("XII", "IYI", "IIY", "XYY"),
    ("YII", "IXI", "IIY", "YXY"),
    ("YII", "IYI", "IIX", "YYX"),
    ("XXX", "XYY", "YXY", "YYX"),
])

out = Path("ghz_render")
out.mkdir(exist_ok=True)
(out / "ghz.dot").write_text(render_dot(ghz, title="type 45"))
(out / "ghz.svg").write_text(render_svg(ghz))
print("wrote", sorted(str(p) for p in out.iterdir()))
