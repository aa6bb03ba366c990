"""
Construction scripts
====================

Constructions can be written as small ``.csl`` scripts.  The parser reports
every problem it finds with a line and column; the evaluator runs the
script with exact arithmetic and returns a scene and its trace.
"""
from pathlib import Path

from compass_grid.dsl import DiagnosticError, check, evaluate, format_program, parse

source = (Path(__file__).parent / "vesica.csl").read_text()
program = parse(source)
scene, trace = evaluate(program)
for obj in scene.of_kind("point"):
    print(obj.id, obj.geometry)

# canonical formatting drops comments and normalizes spacing
print(format_program(program))

# several mistakes are reported in one pass
broken = """point A = (0 0)
point B = (1, 0)
circle c = circle(B, Z)
point B = (2, 2)
"""
for d in check(broken):
    print(d)

# geometric failures surface when the script runs
try:
    evaluate(parse("point A = (0,0)\npoint B = (0,0)\nline l = line(A, B)"))
except DiagnosticError as exc:
    print(exc.diagnostics[0])

# grids are a single statement
scene, _ = evaluate(parse("grid(3, 3, 3/4)"))
print(len(scene), "objects from grid(3, 3, 3/4)")
