"""Syzygies, minimal graded free resolutions, Ext duals of local cohomology,
and Koszul homology."""

import itertools
from dataclasses import dataclass

from .groebner import (
    DEFAULT_LIMITS,
    NEG_INF,
    FreeSubmodule,
    groebner_vectors,
    quotient_length,
    reduce_vec,
    subquotient_length,
    syzygy_vectors,
    vec_add,
    vec_degree,
    vec_from_polys,
    vec_mul_poly,
    vec_shift,
)
from .idealops import PresentedModule, annihilator, unit_vectors


def _column_vecs(ring, columns):
    return [c if isinstance(c, dict) else vec_from_polys([ring(x) for x in c]) for c in columns]


def syzygies(ring, columns, target_twists, source_degrees=None, limits=DEFAULT_LIMITS):
    """Kernel of the matrix whose columns are ``columns`` (images in S^b).

    Returns a FreeSubmodule of S^m whose twists are the column degrees.
    ``source_degrees`` is required when some column is zero.
    """
    cols = _column_vecs(ring, columns)
    if source_degrees is None:
        source_degrees = []
        for c in cols:
            d = vec_degree(c, target_twists)
            if d is None:
                raise ValueError("zero column: pass source_degrees explicitly")
            source_degrees.append(d)
    syz = syzygy_vectors(cols, tuple(target_twists), tuple(source_degrees), ring, limits)
    return FreeSubmodule(ring, len(cols), source_degrees, syz)


# --- minimality ---------------------------------------------------------------------

class _SparseEchelon:
    """Incremental row echelon form over a field for sparse dict vectors."""

    def __init__(self, field, okey):
        self.field = field
        self.okey = okey
        self.rows = {}

    def insert(self, v):
        p = self.field.p
        v = dict(v)
        while v:
            lead = min(v, key=self.okey)
            row = self.rows.get(lead)
            if row is None:
                inv = self.field.inv(v[lead])
                self.rows[lead] = {t: (c * inv % p if p else c * inv) for t, c in v.items()}
                return True
            v = vec_add(v, row, p, -v[lead])
        return False


def minimal_generators(U, limits=DEFAULT_LIMITS):
    """A minimal homogeneous generating set of the graded submodule ``U``."""
    ring = U.ring
    gens = [g for g in U.gens if g]
    if not gens:
        return []
    by_deg = {}
    for g in gens:
        by_deg.setdefault(vec_degree(g, U.twists), []).append(g)
    kept = []
    basis = []
    for deg in sorted(by_deg):
        echelon = _SparseEchelon(ring.field, U.order.key)
        new = []
        for g in by_deg[deg]:
            nf = reduce_vec(g, basis, U.order, ring.field) if basis else g
            if nf and echelon.insert(nf):
                new.append(g)
        if new:
            kept.extend(new)
            basis = groebner_vectors(kept, U.order, U.twists, ring.field, limits)
    return kept


def minimize_presentation(M, limits=DEFAULT_LIMITS):
    """An isomorphic presentation with no unit entries and minimal relations."""
    ring = M.ring
    p = ring.field.p
    zero = (0,) * ring.nvars
    rels = [dict(r) for r in M.relations.gens if r]
    alive = list(range(M.rank))
    while True:
        found = None
        for ri, r in enumerate(rels):
            for j in alive:
                if (j, zero) in r:
                    found = (ri, j)
                    break
            if found:
                break
        if found is None:
            break
        ri, j = found
        r = rels.pop(ri)
        inv = ring.field.inv(r[(j, zero)])
        out = []
        for s in rels:
            sj = {m: c for (pos, m), c in s.items() if pos == j}
            if sj:
                coef = {m: (-c * inv) % p if p else -c * inv for m, c in sj.items()}
                s = vec_add(s, vec_mul_poly(coef, r, p), p)
            if s:
                out.append(s)
        rels = out
        alive.remove(j)
    renum = {old: new for new, old in enumerate(alive)}
    twists = tuple(M.twists[j] for j in alive)
    rels = [{(renum[pos], m): c for (pos, m), c in r.items()} for r in rels]
    U = FreeSubmodule(ring, len(twists), twists, rels)
    U = FreeSubmodule(ring, len(twists), twists, minimal_generators(U, limits))
    return PresentedModule(ring, twists, U, M.name)


# --- resolutions ----------------------------------------------------------------------

@dataclass
class Resolution:
    """Minimal graded free resolution: ``degrees[k]`` are the generator degrees of
    F_k and ``matrices[k-1]`` lists the columns of d_k: F_k -> F_{k-1}."""

    ring: object
    degrees: list
    matrices: list
    minimal: bool = True

    @property
    def length(self):
        return len(self.matrices)

    @property
    def ranks(self):
        return [len(d) for d in self.degrees]

    def betti(self):
        """Graded Betti numbers as {(k, degree): count}."""
        out = {}
        for k, degs in enumerate(self.degrees):
            for d in degs:
                out[(k, d)] = out.get((k, d), 0) + 1
        return out

    def apply(self, k, vec):
        """d_k applied to a vector of F_k."""
        p = self.ring.field.p
        cols = self.matrices[k - 1]
        out = {}
        for (pos, m), c in vec.items():
            out = vec_add(out, vec_mul_poly({m: c}, cols[pos], p), p)
        return out

    def composes_to_zero(self):
        for k in range(1, self.length):
            for col in self.matrices[k]:
                if self.apply(k, col):
                    return False
        return True

    def entries_in_maximal_ideal(self):
        for cols in self.matrices:
            for col in cols:
                if any(sum(m) == 0 for _, m in col):
                    return False
        return True


def free_resolution(M, upto=None, limits=DEFAULT_LIMITS):
    """Minimal graded free resolution of M (at most ``upto`` maps)."""
    ring = M.ring
    n = ring.nvars
    if upto is None:
        upto = n + 1
    Mmin = minimize_presentation(M, limits)
    degrees = [list(Mmin.twists)]
    matrices = []
    cols = list(Mmin.relations.gens)
    while cols and len(matrices) < upto:
        degs = [vec_degree(c, degrees[-1]) for c in cols]
        matrices.append(cols)
        degrees.append(degs)
        syz = syzygy_vectors(cols, tuple(degrees[-2]), tuple(degs), ring, limits)
        U = FreeSubmodule(ring, len(degs), degs, syz)
        cols = minimal_generators(U, limits)
    if cols:
        raise RuntimeError("resolution longer than requested bound")
    return Resolution(ring, degrees, matrices, True)


# --- Ext and local cohomology duals ------------------------------------------------------

def _transpose_columns(cols, src_rank, tgt_rank):
    """Columns of d^T from the columns of d (d: F_src -> F_tgt with src_rank columns)."""
    out = [dict() for _ in range(tgt_rank)]
    for c, col in enumerate(cols):
        for (r, m), v in col.items():
            out[r][(c, m)] = v
    return out


def subquotient_module(ring, z_cols, z_twists, b_cols, twists, limits=DEFAULT_LIMITS):
    """Presentation of (span Z)/(span B) with B ⊆ Z ⊆ S^b, generated by Z's columns."""
    z_degs = [vec_degree(z, twists) for z in z_cols]
    m = len(z_cols)
    if not m:
        return PresentedModule(ring, (), FreeSubmodule(ring, 0, (), []))
    syz = syzygy_vectors(list(z_cols) + list(b_cols), tuple(twists),
                         tuple(z_degs) + tuple(vec_degree(v, twists) for v in b_cols), ring, limits)
    rels = []
    for s in syz:
        a = {(pos, mm): c for (pos, mm), c in s.items() if pos < m}
        if a:
            rels.append(a)
    return PresentedModule(ring, z_degs, FreeSubmodule(ring, m, z_degs, rels))


def ext_module(res, j, shift, limits=DEFAULT_LIMITS):
    """Ext^j(M, S(-shift)) from a free resolution of M, minimally presented."""
    ring = res.ring
    L = res.length
    if j < 0 or j > L:
        return PresentedModule(ring, (), FreeSubmodule(ring, 0, (), []))

    def dual(k):
        return tuple(shift - d for d in res.degrees[k])

    tw = dual(j)
    rank_j = len(tw)
    if j == 0:
        b_cols = []
    else:
        b_cols = _transpose_columns(res.matrices[j - 1], rank_j, len(res.degrees[j - 1]))
        b_cols = [c for c in b_cols if c]
    if j == L:
        M = PresentedModule(ring, tw, FreeSubmodule(ring, rank_j, tw, b_cols))
    else:
        dt = _transpose_columns(res.matrices[j], len(res.degrees[j + 1]), rank_j)
        ker = syzygy_vectors(dt, dual(j + 1), tw, ring, limits)
        ker = minimal_generators(FreeSubmodule(ring, rank_j, tw, ker), limits)
        M = subquotient_module(ring, ker, None, b_cols, tw, limits)
    return minimize_presentation(M, limits)


@dataclass
class CohomologyDualSummary:
    """Data of K^i(M) = Ext^{n-i}(M, S(-n)), the graded dual of H^i_m(M)."""

    index: int
    presentation: PresentedModule
    dimension: object
    length: object
    min_gens: int
    annihilator: object
    socle_dim_of_Hi: int

    @property
    def is_zero(self):
        return self.dimension == NEG_INF

    def as_dict(self):
        return {
            "index": self.index,
            "dimension": _dim_json(self.dimension),
            "length": self.length,
            "min_gens": self.min_gens,
            "socle_dim_of_H": self.socle_dim_of_Hi,
            "generator_degrees": list(self.presentation.twists),
            "annihilator": [str(f) for f in self.annihilator.basis_polys],
        }


def _dim_json(d):
    return "-inf" if d == NEG_INF else d


def summarize_module(index, K, limits=DEFAULT_LIMITS):
    K = minimize_presentation(K, limits).with_basis()
    dim = K.dimension()
    length = quotient_length(K.relations) if dim <= 0 and K.rank else (0 if not K.rank else None)
    ann = annihilator(K, limits)
    return CohomologyDualSummary(index, K, dim, length, K.rank, ann, K.rank)


def ext_dual(M, i, resolution=None, limits=DEFAULT_LIMITS):
    """Summary of K^i(M) = Ext^{n-i}_S(M, S(-n)), 0 <= i <= dim M."""
    d = M.dimension()
    if d == NEG_INF or not 0 <= i <= d:
        raise ValueError(f"cohomological index {i} out of range 0..{d}")
    n = M.ring.nvars
    res = resolution if resolution is not None else free_resolution(M, limits=limits)
    K = ext_module(res, n - i, n, limits)
    return summarize_module(i, K, limits)


def all_ext_duals(M, limits=DEFAULT_LIMITS):
    """K^0 .. K^d for d = dim M, sharing one resolution."""
    d = M.dimension()
    if d == NEG_INF:
        return []
    res = free_resolution(M, limits=limits)
    return [ext_dual(M, i, res, limits) for i in range(d + 1)]


# --- Koszul homology ----------------------------------------------------------------------

def koszul_homology_lengths(forms, M, limits=DEFAULT_LIMITS):
    """[ℓ(H_0), ..., ℓ(H_d)] of the Koszul complex K(x; M); x must be an SOP on M."""
    ring = M.ring
    p = ring.field.p
    forms = [ring(f) for f in forms]
    if any(not f.is_homogeneous() or not f for f in forms):
        raise ValueError("Koszul forms must be nonzero and homogeneous")
    d = len(forms)
    b = M.rank
    B = M.relations.gens
    fdeg = [f.degree for f in forms]
    subsets = [list(itertools.combinations(range(d), j)) for j in range(d + 1)]
    where = [{J: k for k, J in enumerate(s)} for s in subsets]

    def twists(j):
        return tuple(M.twists[k] + sum(fdeg[i] for i in J) for J in subsets[j] for k in range(b))

    def block(j):
        return [vec_shift(v, Ji * b) for Ji in range(len(subsets[j])) for v in B]

    def boundary(j):
        cols = []
        for J in subsets[j]:
            for k in range(b):
                col = {}
                for t, i in enumerate(J):
                    rest = J[:t] + J[t + 1:]
                    pos = where[j - 1][rest] * b + k
                    sign = 1 if t % 2 == 0 else -1
                    for m, c in forms[i].terms.items():
                        x = sign * c
                        col[(pos, m)] = x % p if p else x
                cols.append(col)
        return cols

    lengths = []
    for j in range(d + 1):
        tw = twists(j)
        rank = len(tw)
        if j == 0:
            ker = unit_vectors(ring, rank)
        else:
            cols = boundary(j)
            lower = block(j - 1)
            src = list(tw) + [vec_degree(v, twists(j - 1)) for v in lower]
            syz = syzygy_vectors(cols + lower, twists(j - 1), tuple(src), ring, limits)
            ker = [{(pos, m): c for (pos, m), c in s.items() if pos < rank} for s in syz]
            ker = [v for v in ker if v]
        im = boundary(j + 1) if j < d else []
        here = block(j)
        D = FreeSubmodule(ring, rank, tw, ker + here)
        C = FreeSubmodule(ring, rank, tw, im + here)
        try:
            lengths.append(subquotient_length(D, C))
        except ValueError as exc:
            raise ValueError(f"Koszul homology H_{j} has infinite length: not a system of parameters") from exc
    return lengths
