"""The standard test modules.

P2, P3    polynomial rings in 2 and 3 variables (Cohen–Macaulay)
R4        k[a,b,c,d]/(ac,ad,bc,bd), two planes meeting at a point
M3        k[x,y,z]/(xy,xz), a plane and a line
S5        k[x1..x5]/(x1x3,x1x4,x2x3,x2x4)
"""

from .field import FieldCtx
from .groebner import Ideal
from .idealops import PresentedModule
from .ring import RingCtx

SPECS = {
    "P2": ("x y", []),
    "P3": ("x y z", []),
    "R4": ("a b c d", ["a*c", "a*d", "b*c", "b*d"]),
    "M3": ("x y z", ["x*y", "x*z"]),
    "S5": ("x1 x2 x3 x4 x5", ["x1*x3", "x1*x4", "x2*x3", "x2*x4"]),
}


def fixture(name, field=None):
    variables, rels = SPECS[name]
    ring = RingCtx(variables, field or FieldCtx(32003))
    return PresentedModule.cyclic(Ideal(ring, rels), name=name)


def all_fixtures(field=None):
    return {name: fixture(name, field) for name in SPECS}
