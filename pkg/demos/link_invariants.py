"""Graded Euler characteristics and deformed homology of small colored links.

Run with ``python demos/link_invariants.py``.
"""
from foamcalc import corpus
from foamcalc.deformed import deformed_homology, simple_resolution
from foamcalc.linkcx import ColoredDiagram, euler_char
from foamcalc.webmoy import circle_web, moy_eval, theta_web

print("2-circle at N=3:", moy_eval(circle_web(2), 3))
print("theta(1,2) at N=3:", moy_eval(theta_web(1, 2), 3))

links = {
    "kinked unknot": ColoredDiagram.from_braid(2, [1], [1]),
    "Hopf link": ColoredDiagram.from_braid(2, [1, 1], [1, 1]),
    "Hopf link, colors 1 and 2": ColoredDiagram.from_braid(2, [1, 1], [1, 2]),
    "trefoil": ColoredDiagram.from_braid(2, [1, 1, 1], [1]),
}
for name, D in links.items():
    print(f"{name}: euler(N=3) = {euler_char(D, 3)};  deformed(N=3) = {deformed_homology(D, 3)}")

# every presentation in a corpus group gives the same answer
for group in ("hopf", "trefoil"):
    values = {str(euler_char(D, 2)) for D in corpus.load_group(group)}
    print(f"corpus group {group!r}: {len(corpus.load_group(group))} diagrams, values {values}")

W = simple_resolution(links["Hopf link, colors 1 and 2"])
print("simple resolution edges:", [(e["label"], e["color"]) for e in W.to_json()["edges"]])
