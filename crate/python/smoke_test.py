#!/usr/bin/env python3
"""Smoke test for the hquartic_py extension module.

Builds nothing itself: run `cargo build -p hquartic-py` first, then
`python3 python/smoke_test.py`. The script locates the compiled cdylib in
the workspace target directory and imports it under the proper module name.
"""

import fractions
import shutil
import sys
import tempfile
from pathlib import Path


def load_module():
    root = Path(__file__).resolve().parent.parent
    candidates = [
        root / "target" / profile / name
        for profile in ("debug", "release")
        for name in ("libhquartic_py.so", "hquartic_py.so", "libhquartic_py.dylib")
    ]
    built = next((c for c in candidates if c.exists()), None)
    if built is None:
        sys.exit("hquartic_py cdylib not found; run: cargo build -p hquartic-py")
    stage = Path(tempfile.mkdtemp(prefix="hquartic_py_"))
    shutil.copy2(built, stage / "hquartic_py.so")
    sys.path.insert(0, str(stage))
    import hquartic_py

    return hquartic_py


hq = load_module()
checks = 0


def check(name, cond):
    global checks
    checks += 1
    if not cond:
        sys.exit(f"FAIL {name}")
    print(f"ok {checks:2d}  {name}")


# group and fix lines
check("group order 32", hq.group_order() == 32)
check("center size 2", hq.center_size() == 2)
check("30 fix lines", hq.fix_line_count() == 30)
lines = hq.fix_lines(5)
check("two fix lines per label", len(lines) == 2)
check("fix line spans two points", len(lines[0]["span"]) == 2)
m = hq.lift(3)
check("lift is a 4x4 integer matrix", len(m) == 4 and all(len(r) == 4 for r in m))
check("symplectic pairing is alternating", hq.symplectic(3, 3) == 0)
check("generators pair nontrivially", hq.symplectic(8, 2) == 1)

# exact field arithmetic
i = hq.Element.i()
check("i^2 = -1", i * i == hq.Element.rational(-1))
s2 = hq.Element.sqrt2()
check("sqrt2^2 = 2", s2 * s2 == hq.Element.rational(2))
nine4 = hq.Element.rational("9/4")
check("sqrt(9/4) = 3/2", nine4.sqrt() == hq.Element.rational("3/2"))
check("7 has no rational sqrt", hq.Element.rational(7).sqrt() is None)
check("division", (i / (i + i)).coords() == ["1/2", "0"])

# the quartic family
u = [1, 2, 3, 5, 7, -18]
f = hq.quartic(u)
check("family member is a quartic", f.degree() == 4)
check("family member is homogeneous", f.is_homogeneous())
d = fractions.Fraction(hq.discriminant(u))
check("sample member is smooth", d != 0 and hq.is_smooth(u))
check("10 cubic nodes", len(hq.segre_nodes()) == 10)
check("15 special parameters", len(hq.t_points()) == 15)
check("hessian has degree 8", f.hessian().degree() == 8)
# every coordinate vertex sees the same value: the pure-power coefficient
v0 = f.eval([1, 0, 0, 0])
check("evaluation respects the symmetry",
      not v0.is_zero() and all(
          f.eval(pt) == v0
          for pt in ([0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1])))

# Kummer seeding and conics
param = hq.kummer_param([1, 2, 3, 4])
check("seed parameter", param == ["5", "-170", "-215", "226", "149", "5"])
seed = hq.seed_kummer([1, 2, 3, 4])
check("16 nodes", len(seed["nodes"]) == 16)
check("16 tropes", len(seed["tropes"]) == 16)
check("(16,6) incidence", set(seed["nodes_per_trope"]) == {6}
      and set(seed["tropes_per_node"]) == {6})
split = hq.split_conics([1, 2, 3, 4], node=0, t=1)
check("32 conics from 16 tropes", len(split["conics"]) == 16)
check("one quadratic extension", split["field"].count("sqrt") == 1)
check("mukai counts", hq.mukai_counts(u) == (9, 7))

# Klein coordinates
x_axis = ([1, 0, 0, 0], [0, 1, 0, 0])
z_axis = ([0, 0, 1, 0], [0, 0, 0, 1])
check("klein vector has six coords", len(hq.klein_line(*x_axis)) == 6)
check("skew axes do not meet", not hq.lines_meet(*x_axis, *z_axis))
check("incident lines meet",
      hq.lines_meet([1, 0, 0, 0], [0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0]))
check("48 diagonal-quartic lines", hq.fermat_line_count() == 48)
gram48 = hq.fermat_gram()
check("line self-intersection -2", gram48[0][0] == -2)

# conic configuration and lattices
check("10 incidence labels", len(hq.incidence_set()) == 10)
check("160 reducible conics", len(hq.reducible_conics()) == 160)
check("conic gram is 160x160", len(hq.conic_gram()) == 160)
check("full gram is 321x321", len(hq.conic_gram_full()) == 321)
M = hq.Lattice(hq.picard_submatrix())
check("16-conic lattice det -512", M.det() == -512)
check("16-conic lattice signature (1,15)", M.signature() == (1, 15))
check("16-conic lattice is even", M.is_even())

h = M.solve([2] * 16)
check("hyperplane class is integral", h is not None)
check("h^2 = 4", M.norm(h) == 4)
comp, basis = M.orthogonal_complement(h)
check("complement det -512", comp.det() == -512)
check("complement signature (0,15)", comp.signature() == (0, 15))
check("index of Zh + h_perp is 2", M.sublattice_index([h] + basis) == 2)

lam = hq.Lattice.lambda15()
check("laminated lattice det 512", lam.det() == 512)
check("laminated minimum 4", lam.minimum_norm() == 4)
check("2340 minimal vectors", len(lam.short_vectors(4)) == 2340)
check("complement negated matches laminated invariants",
      comp.negated().det() == lam.det() and comp.negated().is_even())

# acceptance suite, single fast criterion through the bindings
report = hq.verify(only="group-structure")
check("verify returns one criterion", len(report) == 1)
check("criterion passes", all(c["pass"] for c in report[0]["checks"]))

print(f"\nall {checks} smoke checks passed")
