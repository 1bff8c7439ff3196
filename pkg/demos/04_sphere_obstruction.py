"""
Ruling out embedded spheres with the adjunction inequality
==========================================================

A Stein handle diagram gives an intersection form (the linking matrix) and
the pairings of c1 with the handles (rotation numbers).  A smooth sphere of
square -2 would need a class v with v.Q.v = -2 and |c1.v| <= 0.  If every
such class pairs nontrivially with c1, no such sphere exists.
"""

import time

from qpkit import data
from qpkit.lattice import box_search_classes, classes_of_square, direct_sum, sphere_obstruction_report
from qpkit.stein import load_stein, rotation, tb, to_lattice

for name in ("sigma-A.stein", "sigma-T.stein", "control-hopf.stein"):
    d = load_stein(data.path(name))
    Q, c1 = to_lattice(d)
    inv = [(tb(c.counts), rotation(c.counts)) for c in d.components]
    rep = sphere_obstruction_report(Q, c1, -2)
    print(f"{name}: (tb, r) = {inv}, Q = {Q.to_json()}, c1 = {list(c1)}")
    for rec in rep.classes:
        print(f"    class {rec.coefficients}  <c1, v> = {rec.c1_pairing}")
    print("    ->", rep.verdict.value)

# Boundary sums with accessory pieces add blocks to the form.  The square -2
# class stays unique, checked here against brute force over a certified box.
A0, cA0 = to_lattice(load_stein(data.path("sigma-A0.stein")))
T0, cT0 = to_lattice(load_stein(data.path("sigma-T0.stein")))
QT, cT = to_lattice(load_stein(data.path("sigma-T.stein")))
print()
for a in range(4):
    for b in range(4):
        Q, c1 = direct_sum([QT] + [A0] * a + [T0] * b, [cT] + [cA0] * a + [cT0] * b)
        t0 = time.perf_counter()
        classes = classes_of_square(Q, -2)
        t1 = time.perf_counter()
        same = classes == box_search_classes(Q, -2)
        t2 = time.perf_counter()
        verdict = sphere_obstruction_report(Q, c1, -2).verdict.value
        print(f"a={a} b={b} rank={Q.rank:2d} classes={classes} oracle agrees={same} "
              f"({(t1 - t0) * 1e3:.1f} ms vs {(t2 - t1) * 1e3:.0f} ms)  {verdict}")
