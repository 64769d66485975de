"""Ideal and submodule arithmetic, and finitely presented graded modules."""

from .groebner import (
    DEFAULT_LIMITS,
    NEG_INF,
    FreeSubmodule,
    GroebnerLimitError,
    Ideal,
    module_dimension,
    syzygy_vectors,
    vec_add,
    vec_degree,
    vec_mul_poly,
)
from .ring import Polynomial


class PresentedModule:
    """M = S^b / B for a graded submodule B (``relations``) of S^b.

    Generator ``j`` has degree ``twists[j]``.  Dimension and annihilator are
    cached once computed.
    """

    def __init__(self, ring, twists, relations, name=None):
        self.ring = ring
        self.twists = tuple(twists)
        self.rank = len(self.twists)
        if isinstance(relations, FreeSubmodule):
            if relations.rank != self.rank or relations.twists != self.twists:
                raise ValueError("relations live in a different free module")
            rel = relations
        else:
            rel = FreeSubmodule(ring, self.rank, self.twists, relations)
        if not rel.homogeneous:
            raise ValueError("relations must be homogeneous")
        self.relations = rel
        self.name = name
        self._dim = None
        self._ann = None

    @classmethod
    def cyclic(cls, ideal, name=None):
        """S/I."""
        if not isinstance(ideal, Ideal):
            raise TypeError("cyclic() takes an Ideal")
        if not ideal.homogeneous:
            raise ValueError("ideal must be homogeneous")
        rel = FreeSubmodule(ideal.ring, 1, (0,), ideal.gens, ideal.basis)
        return cls(ideal.ring, (0,), rel, name)

    @classmethod
    def coker(cls, ring, columns, twists, name=None):
        """Cokernel of a matrix given as a list of columns (each a list of polynomials)."""
        rel = FreeSubmodule.from_vectors(ring, columns, twists) if columns else FreeSubmodule(ring, len(twists), twists, [])
        return cls(ring, twists, rel, name)

    @classmethod
    def free(cls, ring, twists=(0,), name=None):
        return cls(ring, twists, FreeSubmodule(ring, len(twists), twists, []), name)

    @property
    def is_cyclic(self):
        return self.rank == 1

    def with_basis(self):
        rel = self.relations.groebner()
        if rel is self.relations:
            return self
        out = PresentedModule(self.ring, self.twists, rel, self.name)
        out._dim, out._ann = self._dim, self._ann
        return out

    def dimension(self):
        if self._dim is None:
            self._dim = module_dimension(self.relations) if self.rank else NEG_INF
        return self._dim

    def is_zero(self):
        return self.rank == 0 or self.relations.is_whole()

    def annihilator(self):
        if self._ann is None:
            self._ann = annihilator(self)
        return self._ann

    def quotient(self, q):
        """M / qM for an ideal q."""
        extra = []
        for g in q.gens:
            for j in range(self.rank):
                extra.append({(j, m): c for (_, m), c in g.items()})
        rel = FreeSubmodule(self.ring, self.rank, self.twists, self.relations.gens + extra)
        return PresentedModule(self.ring, self.twists, rel, None)

    def quotient_forms(self, forms):
        return self.quotient(Ideal(self.ring, forms))

    def __repr__(self):
        label = f"{self.name}: " if self.name else ""
        return f"PresentedModule({label}rank={self.rank}, twists={list(self.twists)}, relations={len(self.relations.gens)})"


# --- ideal arithmetic ----------------------------------------------------------

def maximal_ideal(ring):
    return Ideal(ring, ring.gens())


def ideal_sum(I, J):
    _same_ring(I, J)
    return Ideal(I.ring, I.generators + J.generators)


def ideal_product(I, J):
    _same_ring(I, J)
    return Ideal(I.ring, [f * g for f in I.generators for g in J.generators])


def ideal_power(I, t):
    if t < 0:
        raise ValueError("power must be nonnegative")
    out = Ideal(I.ring, [I.ring.one])
    for _ in range(t):
        out = ideal_product(out, I)
        # keep generator lists small: drop duplicates
        out = Ideal(I.ring, _dedupe(out.generators))
    return out


def ideal_combine(op, I, J):
    """``op`` in {"sum", "product", "power"}; for power ``J`` is the exponent."""
    if op == "sum":
        return ideal_sum(I, J)
    if op == "product":
        return ideal_product(I, J)
    if op == "power":
        return ideal_power(I, J)
    raise ValueError(f"unknown ideal operation {op!r}")


def _dedupe(polys):
    seen = []
    for f in polys:
        if f and f not in seen:
            seen.append(f)
    return seen


def _same_ring(I, J):
    if I.ring != J.ring:
        raise ValueError("ideals live in different rings")


# --- colon, intersection, saturation ---------------------------------------------

def _rewrap(B, gens):
    if isinstance(B, Ideal):
        return Ideal(B.ring, gens)
    return FreeSubmodule(B.ring, B.rank, B.twists, gens)


def intersect(U, V, limits=DEFAULT_LIMITS):
    """U ∩ V for two ideals or two submodules of one free module (syzygy method)."""
    if U.ring != V.ring or U.rank != V.rank or U.twists != V.twists:
        raise ValueError("intersect needs submodules of the same free module")
    ring = U.ring
    p = ring.field.p
    if not U.gens or not V.gens:
        return _rewrap(U, [])
    cols = U.gens + V.gens
    degs = [_deg(g, U.twists) for g in cols]
    syz = syzygy_vectors(cols, U.twists, degs, ring, limits)
    k = len(U.gens)
    out = []
    for s in syz:
        acc = {}
        for (pos, m), c in s.items():
            if pos < k:
                acc = vec_add(acc, vec_mul_poly({m: c}, U.gens[pos], p), p)
        if acc:
            out.append(acc)
    return _rewrap(U, out)


def _deg(vec, twists):
    try:
        return vec_degree(vec, twists)
    except ValueError:
        # inhomogeneous input (ideals only): sugar degree
        return max(sum(m) + twists[pos] for pos, m in vec)


def colon_element(B, g, limits=DEFAULT_LIMITS):
    """{v : g v ∈ B} for a single polynomial g."""
    ring = B.ring
    g = ring(g)
    if not g:
        raise ValueError("colon by the zero element")
    b = B.rank
    gdeg = g.degree if g.is_homogeneous() else None
    cols = []
    degs = []
    for j in range(b):
        cols.append({(j, m): c for m, c in g.terms.items()})
        degs.append((gdeg if gdeg is not None else g.degree) + B.twists[j])
    for v in B.gens:
        cols.append(v)
        degs.append(_deg(v, B.twists))
    syz = syzygy_vectors(cols, B.twists, degs, ring, limits)
    out = []
    for s in syz:
        a = {(pos, m): c for (pos, m), c in s.items() if pos < b}
        if a:
            out.append(a)
    return _rewrap(B, out)


def colon(B, J, limits=DEFAULT_LIMITS):
    """B : J = {v : J v ⊆ B}, as the intersection of the colons by J's generators."""
    if isinstance(J, Polynomial):
        J = Ideal(J.ring, [J])
    if B.ring != J.ring:
        raise ValueError("colon arguments live in different rings")
    gens = [g for g in J.generators if g]
    if not gens:
        raise ValueError("colon by the zero ideal")
    result = None
    for g in gens:
        C = colon_element(B, g, limits)
        result = C if result is None else intersect(result, C, limits)
    return result.reduced()


def saturate(B, J, limits=DEFAULT_LIMITS):
    """(B : J^∞, s) where s is the first exponent with colon^s = colon^(s+1)."""
    cur = B.groebner(limits)
    for s in range(limits.max_saturation + 1):
        nxt = colon(cur, J, limits)
        if cur.contains(nxt):
            return cur, s
        cur = nxt
    raise GroebnerLimitError("saturation did not stabilize", {"exponent_cap": limits.max_saturation})


def annihilator(M, limits=DEFAULT_LIMITS):
    """Ann(M) = ∩_j (B : e_j); the unit ideal for the zero module."""
    ring = M.ring
    if M.rank == 0:
        return Ideal(ring, [ring.one]).groebner()
    if M.rank == 1:
        return Ideal(ring, M.relations.gens).reduced()
    zero = (0,) * ring.nvars
    result = None
    B = M.relations
    for j in range(M.rank):
        cols = [{(j, zero): 1 if ring.field.p else ring.field(1)}] + B.gens
        degs = [M.twists[j]] + [vec_degree(v, M.twists) for v in B.gens]
        syz = syzygy_vectors(cols, M.twists, degs, ring, limits)
        ideal = Ideal(ring, [{(0, m): c for (pos, m), c in s.items() if pos == 0} for s in syz])
        ideal = Ideal(ring, [f for f in ideal.generators if f])
        result = ideal if result is None else intersect(result, ideal, limits)
        if not result.gens:
            break
    return result.reduced()


def submodule_sum(U, V):
    return _rewrap(U, U.gens + V.gens)


def ideal_times_module(q, B):
    """q·S^b as a FreeSubmodule."""
    gens = []
    for g in q.gens:
        for j in range(B.rank):
            gens.append({(j, m): c for (_, m), c in g.items()})
    return FreeSubmodule(B.ring, B.rank, B.twists, gens)


def ideal_equal(I, J):
    return I == J


def unit_vectors(ring, rank):
    zero = (0,) * ring.nvars
    one = 1 if ring.field.p else ring.field(1)
    return [{(j, zero): one} for j in range(rank)]

