"""Buchberger's algorithm for ideals and graded submodules of free modules.

Internally a vector of S^b is a dict ``{(position, exponents): coefficient}``;
an ideal is the rank-one case.  Reduced bases are monic and sorted by
decreasing leading term.
"""

import heapq
from contextlib import contextmanager
import itertools
from dataclasses import dataclass, field as dc_field
from math import comb

from .ring import ModuleOrder, Polynomial, monomials_of_degree

NEG_INF = float("-inf")


class GroebnerLimitError(RuntimeError):
    """A basis computation exceeded its resource limits."""

    def __init__(self, message, stats):
        super().__init__(f"{message} (stats: {stats})")
        self.stats = stats


class BasisNotComputed(RuntimeError):
    pass


@dataclass
class Limits:
    max_basis: int = 20000
    max_degree: int = 200
    max_saturation: int = 50


DEFAULT_LIMITS = Limits()


@contextmanager
def applied_limits(**caps):
    """Temporarily change the process-wide default limits."""
    unknown = set(caps) - set(vars(DEFAULT_LIMITS))
    if unknown:
        raise KeyError(f"unknown limit(s): {sorted(unknown)}")
    old = {k: getattr(DEFAULT_LIMITS, k) for k in caps}
    for k, v in caps.items():
        setattr(DEFAULT_LIMITS, k, int(v))
    try:
        yield DEFAULT_LIMITS
    finally:
        for k, v in old.items():
            setattr(DEFAULT_LIMITS, k, v)


# --- vectors -------------------------------------------------------------------

def vec_from_polys(polys):
    vec = {}
    for pos, f in enumerate(polys):
        for m, c in f.terms.items():
            vec[(pos, m)] = c
    return vec


def vec_to_polys(vec, ring, rank):
    parts = [dict() for _ in range(rank)]
    for (pos, m), c in vec.items():
        parts[pos][m] = c
    return [Polynomial(ring, d) for d in parts]


def vec_add(u, v, p, scale=1):
    """``u + scale * v`` as a new dict."""
    out = dict(u)
    for t, c in v.items():
        x = out.get(t, 0) + scale * c
        if p:
            x %= p
        if x:
            out[t] = x
        elif t in out:
            del out[t]
    return out


def vec_scale(v, c, p):
    if not c:
        return {}
    if p:
        return {t: x * c % p for t, x in v.items()}
    return {t: x * c for t, x in v.items()}


def vec_mul_poly(f_terms, v, p):
    """Multiply a vector by a polynomial given as its term dict."""
    out = {}
    for m, c in f_terms.items():
        for (pos, e), d in v.items():
            t = (pos, tuple(a + b for a, b in zip(m, e)))
            x = out.get(t, 0) + c * d
            if p:
                x %= p
            if x:
                out[t] = x
            elif t in out:
                del out[t]
    return out


def vec_shift(v, offset):
    return {(pos + offset, m): c for (pos, m), c in v.items()}


def vec_degree(v, twists):
    """Degree of a homogeneous vector, ``None`` for the zero vector."""
    degs = {sum(m) + twists[pos] for pos, m in v}
    if not degs:
        return None
    if len(degs) > 1:
        raise ValueError("vector is not homogeneous with respect to the twists")
    return degs.pop()


def is_homogeneous_vec(v, twists):
    return len({sum(m) + twists[pos] for pos, m in v}) <= 1


def _mask(e):
    m = 0
    for i, a in enumerate(e):
        if a:
            m |= 1 << i
    return m


# --- basis elements and reduction ---------------------------------------------

class _Elem:
    __slots__ = ("pos", "exps", "mask", "tail", "vec")

    def __init__(self, vec, lt):
        self.pos, self.exps = lt
        self.mask = _mask(self.exps)
        self.vec = vec
        self.tail = [(t, c) for t, c in vec.items() if t != lt]


def _monic(vec, okey, field):
    lt = min(vec, key=okey)
    c = vec[lt]
    if c != 1:
        vec = vec_scale(vec, field.inv(c), field.p)
    return vec, lt


class _Index:
    """Leading-term lookup table, grouped by position."""

    def __init__(self):
        self.by_pos = {}

    def add(self, elem):
        self.by_pos.setdefault(elem.pos, []).append(elem)

    def remove(self, elem):
        self.by_pos[elem.pos].remove(elem)

    def find(self, pos, e, mask):
        for g in self.by_pos.get(pos, ()):
            if not (g.mask & ~mask) and all(a <= b for a, b in zip(g.exps, e)):
                return g
        return None


def _reduce(vec, index, okey, p, full=True):
    f = dict(vec)
    heap = [(okey(t), t) for t in f]
    heapq.heapify(heap)
    rem = {}
    find = index.find
    while heap:
        t = heapq.heappop(heap)[1]
        c = f.pop(t, None)
        if c is None:
            continue
        pos, e = t
        g = find(pos, e, _mask(e))
        if g is None:
            rem[t] = c
            if not full:
                rem.update(f)
                break
            continue
        shift = tuple(a - b for a, b in zip(e, g.exps))
        for (gp, ge), d in g.tail:
            u = (gp, tuple(a + b for a, b in zip(ge, shift)))
            v = f.get(u)
            if v is None:
                x = -c * d
                if p:
                    x %= p
                f[u] = x
                heapq.heappush(heap, (okey(u), u))
            else:
                x = v - c * d
                if p:
                    x %= p
                if x:
                    f[u] = x
                else:
                    del f[u]
    return rem


def reduce_vec(vec, basis, order, field):
    """Full remainder of ``vec`` modulo a monic basis (list of vec dicts)."""
    index = _Index()
    okey = order.key
    for g in basis:
        index.add(_Elem(g, min(g, key=okey)))
    return _reduce(vec, index, okey, field.p)


def _lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _disjoint(a, b):
    return not any(x and y for x, y in zip(a, b))


def _spoly(g1, g2, lcm, p):
    s1 = tuple(x - y for x, y in zip(lcm, g1.exps))
    s2 = tuple(x - y for x, y in zip(lcm, g2.exps))
    out = {}
    for (pos, e), c in g1.tail:
        out[(pos, tuple(a + b for a, b in zip(e, s1)))] = c
    for (pos, e), c in g2.tail:
        t = (pos, tuple(a + b for a, b in zip(e, s2)))
        x = out.get(t, 0) - c
        if p:
            x %= p
        if x:
            out[t] = x
        elif t in out:
            del out[t]
    return out


def groebner_vectors(gens, order, twists, field, limits=DEFAULT_LIMITS, ideal_case=None):
    """Reduced Gröbner basis of the submodule generated by ``gens``.

    Normal pair selection (smallest lcm degree first, twists included) with
    the Gebauer–Möller update.  The product criterion is only applied for
    ideals, where it is valid.
    """
    p = field.p
    okey = order.key
    if ideal_case is None:
        ideal_case = len(twists) == 1
    elems = []
    active = []
    index = _Index()
    pairs = {}
    heap = []
    counter = itertools.count()
    stats = {"pairs": 0, "zero_reductions": 0}

    def lt_degree(pos, exps):
        return sum(exps) + twists[pos]

    def update(hi):
        h = elems[hi]
        cand = [gi for gi in active if elems[gi].pos == h.pos]
        lcms = {gi: _lcm(h.exps, elems[gi].exps) for gi in cand}
        kept = []
        for k, gi in enumerate(cand):
            L = lcms[gi]
            if ideal_case and _disjoint(h.exps, elems[gi].exps):
                kept.append(gi)
                continue
            if any(_divides(lcms[g2], L) for g2 in cand[k + 1:]):
                continue
            if any(_divides(lcms[g2], L) for g2 in kept):
                continue
            kept.append(gi)
        new = [gi for gi in kept if not (ideal_case and _disjoint(h.exps, elems[gi].exps))]
        for key in list(pairs):
            i, j = key
            gi, gj = elems[i], elems[j]
            if gi.pos != h.pos:
                continue
            L = pairs[key]
            if (
                _divides(h.exps, L)
                and _lcm(gi.exps, h.exps) != L
                and _lcm(gj.exps, h.exps) != L
            ):
                del pairs[key]
        for gi in new:
            L = lcms[gi]
            key = (gi, hi)
            pairs[key] = L
            heapq.heappush(heap, (lt_degree(h.pos, L), next(counter), key))
        for gi in list(active):
            g = elems[gi]
            if g.pos == h.pos and _divides(h.exps, g.exps):
                active.remove(gi)
                index.remove(g)
        active.append(hi)
        index.add(h)

    def add(vec):
        vec, lt = _monic(vec, okey, field)
        elems.append(_Elem(vec, lt))
        if len(elems) > limits.max_basis:
            raise GroebnerLimitError("basis size limit exceeded", dict(stats, basis=len(elems)))
        update(len(elems) - 1)

    start = sorted((g for g in gens if g), key=lambda v: (max(lt_degree(*t) for t in v), okey(min(v, key=okey))))
    for g in start:
        h = _reduce(g, index, okey, p)
        if h:
            add(h)
    while heap:
        deg, _, key = heapq.heappop(heap)
        L = pairs.pop(key, None)
        if L is None:
            continue
        if deg > limits.max_degree:
            raise GroebnerLimitError("degree limit exceeded", dict(stats, degree=deg, basis=len(elems)))
        stats["pairs"] += 1
        s = _spoly(elems[key[0]], elems[key[1]], L, p)
        h = _reduce(s, index, okey, p)
        if h:
            add(h)
        else:
            stats["zero_reductions"] += 1
    # interreduce tails
    out = []
    for gi in active:
        g = elems[gi]
        lt = (g.pos, g.exps)
        tail = _reduce(dict(g.tail), index, okey, p)
        tail[lt] = 1
        out.append(tail)
    out.sort(key=lambda v: okey(min(v, key=okey)))
    return out


def is_groebner_basis(basis, order, field):
    """Buchberger criterion: every S-pair of ``basis`` reduces to zero."""
    okey = order.key
    index = _Index()
    elems = []
    for g in basis:
        g, lt = _monic(g, okey, field)
        e = _Elem(g, lt)
        elems.append(e)
        index.add(e)
    for a, b in itertools.combinations(elems, 2):
        if a.pos != b.pos:
            continue
        s = _spoly(a, b, _lcm(a.exps, b.exps), field.p)
        if _reduce(s, index, okey, field.p):
            return False
    return True


# --- monomial (leading term) analytics ----------------------------------------

def minimalize_monomials(gens):
    gens = sorted(set(gens), key=sum)
    out = []
    for g in gens:
        if not any(_divides(h, g) for h in out):
            out.append(g)
    return out


def independent_dimension(gens, n):
    """dim k[x_1..x_n]/(gens) for monomial generators; NEG_INF for the unit ideal."""
    gens = minimalize_monomials(gens)
    if any(sum(g) == 0 for g in gens):
        return NEG_INF
    supports = {_mask(g) for g in gens}
    for size in range(n, -1, -1):
        for combo in itertools.combinations(range(n), size):
            u = 0
            for i in combo:
                u |= 1 << i
            if all(s & ~u for s in supports):
                return size
    return 0


def _lp_add(a, b, scale=1):
    out = dict(a)
    for k, v in b.items():
        x = out.get(k, 0) + scale * v
        if x:
            out[k] = x
        elif k in out:
            del out[k]
    return out


def _lp_shift(a, s):
    return {k + s: v for k, v in a.items()}


def _lp_mul(a, b):
    out = {}
    for k1, v1 in a.items():
        for k2, v2 in b.items():
            out[k1 + k2] = out.get(k1 + k2, 0) + v1 * v2
    return {k: v for k, v in out.items() if v}


def _lp_div_one_minus_t(a):
    """Exact quotient ``a / (1 - t)``; caller guarantees ``a(1) == 0``."""
    if not a:
        return {}
    lo, hi = min(a), max(a)
    out = {}
    acc = 0
    for k in range(lo, hi):
        acc += a.get(k, 0)
        if acc:
            out[k] = acc
    return out


_HN_CACHE = {}


def hilbert_numerator(gens, n):
    """Numerator K(t) with HS(S/I) = K(t)/(1-t)^n for a monomial ideal I."""
    gens = tuple(minimalize_monomials(gens))
    key = (gens, n)
    hit = _HN_CACHE.get(key)
    if hit is not None:
        return hit
    res = _hilbert_numerator(gens, n)
    if len(_HN_CACHE) > 50000:
        _HN_CACHE.clear()
    _HN_CACHE[key] = res
    return res


def _hilbert_numerator(gens, n):
    if not gens:
        return {0: 1}
    if any(sum(g) == 0 for g in gens):
        return {}
    counts = [0] * n
    for g in gens:
        for i, a in enumerate(g):
            if a:
                counts[i] += 1
    if max(counts) <= 1:
        out = {0: 1}
        for g in gens:
            out = _lp_mul(out, {0: 1, sum(g): -1})
        return out
    var = max(range(n), key=lambda i: counts[i])
    e = min(g[var] for g in gens if g[var])
    piv = tuple(e if i == var else 0 for i in range(n))
    plus = hilbert_numerator(list(gens) + [piv], n)
    colon = hilbert_numerator([tuple(max(a - b, 0) for a, b in zip(g, piv)) for g in gens], n)
    return _lp_add(plus, _lp_shift(colon, e))


def series_dimension(num, n):
    """(dimension, multiplicity) read off a Hilbert series numerator over (1-t)^n."""
    if not num:
        return NEG_INF, 0
    q = dict(num)
    k = 0
    while sum(q.values()) == 0:
        q = _lp_div_one_minus_t(q)
        k += 1
    return n - k, sum(q.values())


def series_value(num, n, t):
    """Coefficient of t^deg in num(t)/(1-t)^n."""
    total = 0
    for k, a in num.items():
        if t - k >= 0:
            total += a * comb(t - k + n - 1, n - 1)
    return total


# --- submodules and ideals -----------------------------------------------------

class FreeSubmodule:
    """A graded submodule of the free module S^b with generator degrees ``twists``.

    ``basis`` holds the reduced Gröbner basis (term-over-position order) once
    computed; :meth:`groebner` returns a copy that carries it.
    """

    def __init__(self, ring, rank, twists, gens, basis=None, homogeneous=None):
        self.ring = ring
        self.rank = rank
        self.twists = tuple(twists)
        if len(self.twists) != rank:
            raise ValueError("need one twist per free generator")
        self.gens = [dict(g) for g in gens if g]
        for g in self.gens:
            for pos, m in g:
                if not 0 <= pos < rank:
                    raise ValueError("generator has a component outside the free module")
        if homogeneous is None:
            homogeneous = all(is_homogeneous_vec(g, self.twists) for g in self.gens)
        self.homogeneous = homogeneous
        self.basis = basis
        self.order = ModuleOrder(ring.order, "top")

    @classmethod
    def from_vectors(cls, ring, vectors, twists=None):
        vectors = [list(v) for v in vectors]
        rank = len(twists) if twists is not None else len(vectors[0])
        if twists is None:
            twists = [0] * rank
        for v in vectors:
            if len(v) != rank:
                raise ValueError("every generator must have length equal to the rank")
        gens = [vec_from_polys([ring(x) for x in v]) for v in vectors]
        mod = cls(ring, rank, twists, gens)
        if not mod.homogeneous:
            raise ValueError("module generators must be homogeneous with respect to the twists")
        return mod

    def _like(self, gens, basis=None):
        return FreeSubmodule(self.ring, self.rank, self.twists, gens, basis, None)

    def vectors(self, which=None):
        which = self.gens if which is None else which
        return [vec_to_polys(g, self.ring, self.rank) for g in which]

    def groebner(self, limits=DEFAULT_LIMITS):
        if self.basis is not None:
            return self
        basis = groebner_vectors(self.gens, self.order, self.twists, self.ring.field, limits)
        out = self._like(self.gens, basis)
        out.homogeneous = self.homogeneous
        return out

    def reduced(self):
        """Copy whose generator list is its own reduced Gröbner basis."""
        G = self.groebner()
        out = G._like(G.basis, G.basis)
        out.homogeneous = G.homogeneous
        return out

    def require_basis(self):
        if self.basis is None:
            raise BasisNotComputed("compute the Gröbner basis first (call .groebner())")
        return self.basis

    def leading_terms(self):
        okey = self.order.key
        return [min(g, key=okey) for g in self.require_basis()]

    def lead_monomials_by_pos(self):
        out = {pos: [] for pos in range(self.rank)}
        for pos, m in self.leading_terms():
            out[pos].append(m)
        return out

    def reduce(self, vec):
        return reduce_vec(vec, self.require_basis(), self.order, self.ring.field)

    def contains_vec(self, vec):
        return not self.reduce(vec)

    def contains(self, other):
        """Whether ``other`` (a submodule of the same free module) lies inside self."""
        return all(not self.reduce(g) for g in other.gens)

    def __eq__(self, other):
        if not isinstance(other, FreeSubmodule):
            return NotImplemented
        if (self.rank, self.twists, self.ring) != (other.rank, other.twists, other.ring):
            return False
        return canonical(self.groebner().basis, self.order) == canonical(other.groebner().basis, other.order)

    __hash__ = None

    def is_zero(self):
        return not self.gens

    def is_whole(self):
        """True when the submodule is the full free module."""
        g = self.groebner()
        lead = g.lead_monomials_by_pos()
        zero = (0,) * self.ring.nvars
        return all(zero in lead[pos] for pos in range(self.rank))

    def __repr__(self):
        return f"FreeSubmodule(rank={self.rank}, twists={list(self.twists)}, gens={len(self.gens)})"


def canonical(basis, order):
    return sorted((tuple(sorted(g.items(), key=lambda kv: order.key(kv[0]))) for g in basis), key=lambda g: order.key(g[0][0]))


class Ideal(FreeSubmodule):
    """An ideal of ``ring``: the rank-one submodule case with polynomial generators."""

    def __init__(self, ring, gens, basis=None, homogeneous=None):
        polys = []
        for g in gens:
            if isinstance(g, dict):
                polys.append(Polynomial(ring, {m: c for (_, m), c in g.items()}))
            else:
                polys.append(ring(g))
        vecs = [vec_from_polys([f]) for f in polys if f]
        super().__init__(ring, 1, (0,), vecs, basis, homogeneous)

    def _like(self, gens, basis=None):
        return Ideal(self.ring, gens, basis)

    @property
    def generators(self):
        return [Polynomial(self.ring, {m: c for (_, m), c in g.items()}) for g in self.gens]

    @property
    def basis_polys(self):
        return [Polynomial(self.ring, {m: c for (_, m), c in g.items()}) for g in self.require_basis()]

    def reduce_poly(self, f):
        rem = self.reduce(vec_from_polys([self.ring(f)]))
        return Polynomial(self.ring, {m: c for (_, m), c in rem.items()})

    def contains_poly(self, f):
        return not self.reduce_poly(f)

    def is_unit(self):
        return self.is_whole()

    def is_monomial(self):
        return all(len(g) == 1 for g in self.gens)

    def __repr__(self):
        return f"Ideal({', '.join(str(g) for g in self.generators) or '0'})"


# --- public operations ------------------------------------------------------------

def buchberger(B, limits=DEFAULT_LIMITS):
    """Reduced Gröbner basis of an Ideal (list of Polynomial) or FreeSubmodule (list of vectors)."""
    G = B.groebner(limits)
    if isinstance(G, Ideal):
        return G.basis_polys
    return G.vectors(G.basis)


def normal_form(f, G):
    """Canonical representative of ``f`` modulo ``G`` (which must carry its basis)."""
    if isinstance(G, Ideal) and isinstance(f, (Polynomial, str, int)):
        return G.reduce_poly(f)
    vec = vec_from_polys([G.ring(x) for x in f]) if not isinstance(f, dict) else f
    rem = G.reduce(vec)
    return vec_to_polys(rem, G.ring, G.rank)


@dataclass
class StaircaseSummary:
    leading_terms: list
    dimension: object  # int or NEG_INF
    finite_length: bool
    length: object = None  # int when finite
    hilbert: dict = dc_field(default_factory=dict)
    numerator: dict = dc_field(default_factory=dict)
    multiplicity: int = 0


def module_dimension(B):
    """Krull dimension of S^b/B via independent sets of each position's leading terms."""
    G = B.groebner()
    n = G.ring.nvars
    lead = G.lead_monomials_by_pos()
    return max((independent_dimension(lead[pos], n) for pos in range(G.rank)), default=NEG_INF)


def hilbert_series(B):
    """Numerator of HS(S^b/B) over (1-t)^n as a dict degree -> coefficient."""
    G = B.groebner()
    n = G.ring.nvars
    lead = G.lead_monomials_by_pos()
    num = {}
    for pos in range(G.rank):
        num = _lp_add(num, _lp_shift(hilbert_numerator(lead[pos], n), G.twists[pos]))
    return num


def standard_monomials(B):
    """All standard terms (position, monomial) of a finite-length quotient S^b/B."""
    G = B.groebner()
    if module_dimension(G) > 0:
        raise ValueError("quotient has positive dimension; infinitely many standard monomials")
    n = G.ring.nvars
    lead = G.lead_monomials_by_pos()
    out = []
    for pos in range(G.rank):
        gens = lead[pos]
        zero = (0,) * n
        if any(_divides(g, zero) for g in gens):
            continue
        seen = {zero}
        stack = [zero]
        while stack:
            m = stack.pop()
            for i in range(n):
                u = m[:i] + (m[i] + 1,) + m[i + 1:]
                if u not in seen and not any(_divides(g, u) for g in gens):
                    seen.add(u)
                    stack.append(u)
        out.extend((pos, m) for m in seen)
    okey = G.order.key
    out.sort(key=okey)
    return out


def quotient_length(B):
    """Length of S^b/B; raises ``ValueError`` if the quotient is not of finite length."""
    return len(standard_monomials(B))


def kbasis(B, degree):
    """Standard terms of S^b/B in the given degree (twists included)."""
    G = B.groebner()
    lead = G.lead_monomials_by_pos()
    out = []
    for pos in range(G.rank):
        d = degree - G.twists[pos]
        for m in monomials_of_degree(G.ring.nvars, d):
            if not any(_divides(g, m) for g in lead[pos]):
                out.append((pos, m))
    out.sort(key=G.order.key)
    return out


def staircase(B, window=None):
    """Leading-term analytics of the quotient S^b/B."""
    G = B.groebner()
    n = G.ring.nvars
    dim = module_dimension(G)
    num = hilbert_series(G)
    sdim, mult = series_dimension(num, n)
    if sdim != dim:
        raise AssertionError(f"dimension mismatch: independent sets {dim}, Hilbert series {sdim}")
    finite = dim <= 0
    length = quotient_length(G) if finite else None
    hilb = {}
    if window is not None:
        lo, hi = window
        hilb = {t: series_value(num, n, t) for t in range(lo, hi + 1)}
    return StaircaseSummary(
        leading_terms=G.leading_terms(),
        dimension=dim,
        finite_length=finite,
        length=length,
        hilbert=hilb,
        numerator=num,
        multiplicity=mult,
    )


def subquotient_series(D, C):
    """Hilbert series numerator of D/C for submodules C ⊆ D of one free module."""
    return _lp_add(hilbert_series(C), hilbert_series(D), -1)


def subquotient_dimension(D, C):
    return series_dimension(subquotient_series(D, C), C.ring.nvars)[0]


def subquotient_length(D, C):
    """Length of D/C (C ⊆ D); raises ``ValueError`` when it is infinite."""
    n = C.ring.nvars
    num = subquotient_series(D, C)
    dim, mult = series_dimension(num, n)
    if dim == NEG_INF:
        return 0
    if dim > 0:
        raise ValueError(f"subquotient has dimension {dim}, not finite length")
    return mult


# --- syzygies ---------------------------------------------------------------------

def syzygy_vectors(cols, twists, col_degrees, ring, limits=DEFAULT_LIMITS):
    """Generators (a Gröbner basis) of the kernel of the map S^m -> S^b given by ``cols``.

    ``cols[i]`` is the image of the i-th source generator, of degree
    ``col_degrees[i]``.  Computed by eliminating the target block: the
    vectors ``(cols[i], e_i)`` get a Gröbner basis in an order where every
    target term beats every source term, and the basis elements living
    purely in the source block are the syzygies.
    """
    b = len(twists)
    zero = (0,) * ring.nvars
    gens = []
    for i, c in enumerate(cols):
        if c and is_homogeneous_vec(c, twists) and vec_degree(c, twists) != col_degrees[i]:
            raise ValueError(f"column {i} has degree {vec_degree(c, twists)}, expected {col_degrees[i]}")
        v = dict(c)
        v[(b + i, zero)] = 1 if ring.field.p else ring.field(1)
        gens.append(v)
    order = ModuleOrder(ring.order, "elim", split=b)
    big = tuple(twists) + tuple(col_degrees)
    G = groebner_vectors(gens, order, big, ring.field, limits, ideal_case=False)
    okey = order.key
    return [vec_shift(g, -b) for g in G if min(g, key=okey)[0] >= b]
