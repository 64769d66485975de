"""Exhaustive checks of the c/r identities on tiny modules over F_2 and F_3.

Each instance is a finite-length graded module; the battery verifies

  * c(N) = max over submodules N' of ℓ((N' :_N m)/N'),
  * c(N1) <= c(N), c(N/N1) <= c(N) and c(N) <= c(N1) + c(N/N1) for sampled N1,
  * r of the dual module, max ℓ((B :_D m)/B) over its submodules B, equals c(N),
    and c of the dual equals r(N).
"""

import random
from dataclasses import dataclass, field

from .field import FieldCtx
from .finite import FiniteModule, SubmoduleLattice
from .groebner import Ideal
from .idealops import PresentedModule
from .ring import RingCtx


@dataclass
class OracleInstance:
    label: str
    length: int
    c: int
    max_socle_colon: int
    r_dual: int
    c_dual: int
    subadditivity: list = field(default_factory=list)
    violations: list = field(default_factory=list)

    def as_dict(self):
        return dict(vars(self))


def default_instances():
    """Modules of length <= 6 over F_2 and F_3, given as (label, PresentedModule)."""
    out = []
    specs = [
        ("x", ["x^3"]), ("x", ["x^6"]),
        ("x y", ["x^2", "x*y", "y^2"]), ("x y", ["x^2", "y^2"]), ("x y", ["x^3", "x*y", "y^2"]),
        ("x y", ["x^2", "y^3"]), ("x y", ["x^3", "x*y", "y^3"]), ("x y", ["x^2", "x*y", "y^4"]),
        ("x y", ["x^3", "x^2*y", "y^2"]), ("x y", ["x^2 + y^2", "x*y"]),
        ("x y z", ["x^2", "y^2", "z^2", "x*y", "x*z", "y*z"]), ("x y z", ["x^2", "y^2", "z^2", "x*y", "x*z"]),
        ("x y z", ["x^2", "y^2", "z^2", "x*y", "y*z"]), ("x y z", ["x*y", "x*z", "y*z", "x^2", "y^2", "z^3"]),
    ]
    for p in (2, 3):
        F = FieldCtx(p)
        for variables, rels in specs:
            ring = RingCtx(variables, F)
            out.append((f"F{p}[{variables}]/({', '.join(rels)})", PresentedModule.cyclic(Ideal(ring, rels))))
        ring = RingCtx("x y", F)
        x, y = ring.gens()
        # k^2 with trivial action, and a rank-2 module of length 4
        out.append((f"F{p}: k^2", PresentedModule.coker(ring, [[x, 0], [y, 0], [0, x], [0, y]], [0, 0])))
        out.append((f"F{p}: coker[[x,y,0,0,0],[0,x,y,x^2,y^2]]",
                    PresentedModule.coker(ring, [[x, 0], [y, x], [0, y], [0, x * x], [0, y * y]], [0, 0])))
        out.append((f"F{p}: coker[[x,y^2,0],[0,0,x]] + m^2",
                    PresentedModule.coker(ring, [[x, 0], [y * y, 0], [0, x], [0, y * y], [y, y]], [0, 0])))
    return out


def check_instance(label, M, splits=4, seed=0, max_length=6):
    F = FiniteModule.from_presented(M)
    if F.dim > max_length:
        raise ValueError(f"{label}: length {F.dim} > {max_length}")
    lat = SubmoduleLattice(F)
    c = lat.c()
    colon_max = lat.max_socle_colon()
    D = F.dual()
    dual_lat = SubmoduleLattice(D)
    # r of the dual, computed over submodules B of D
    r_dual = dual_lat.max_socle_colon()
    c_dual = dual_lat.c()
    violations = []
    if c != colon_max:
        violations.append(f"c = {c} but max socle colon = {colon_max}")
    if r_dual != c:
        violations.append(f"r(dual) = {r_dual} but c = {c}")
    if c_dual != colon_max:
        violations.append(f"c(dual) = {c_dual} but r = {colon_max}")
    rng = random.Random(seed)
    subs = [s for s in lat.subs if 0 < len(s) < F.dim]
    picks = rng.sample(subs, min(splits, len(subs)))
    sub_rows = []
    for N1 in picks:
        c1 = lat.c_sub(N1)
        c2 = lat.c_quotient(N1)
        sub_rows.append((len(N1), c1, c2))
        if not (c1 <= c and c2 <= c and c <= c1 + c2):
            violations.append(f"subadditivity failed: c(N1)={c1}, c(N/N1)={c2}, c(N)={c}")
    return OracleInstance(label, F.dim, c, colon_max, r_dual, c_dual, sub_rows, violations)


def oracle_suite(instances=None, splits=4, seed=0):
    instances = instances if instances is not None else default_instances()
    return [check_instance(label, M, splits, seed + k) for k, (label, M) in enumerate(instances)]
