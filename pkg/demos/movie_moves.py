"""Walk through one movie-move script and the sign-mutation check.

Run with ``python demos/movie_moves.py``.
"""
from foamcalc.functorial import all_cases, mutation_report, omega, r_scalar, verify_movie_moves

print("r({1},{2,3}) =", r_scalar({1}, {2, 3}))
print("omega({1,2}) in N=4 =", omega({1, 2}, 4))

case = next(c for c in all_cases(3, 6) if c.move == "R2-" and c.labels == (2, 1))
print(f"\n{case.move} {case.variant} labels {case.labels}:")
for item in case.script:
    if hasattr(item, "factor"):
        params = {k: sorted(v) if isinstance(v, frozenset) else v for k, v in item.params}
        print(f"  {item.relation:<16} {params}  ->  {item.factor()}")

report = verify_movie_moves(3, 6)
print(f"\n{report['passed']}/{report['checked']} scripts reduce to 1")

print("\nflipping one sign convention at a time:")
for rule, n in mutation_report(3, 6).items():
    print(f"  {rule:<15} breaks {n} checks")
