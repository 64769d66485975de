"""Lengths, socles, multiplicities, the difference function, polynomial type,
the v/c/r invariants and the assembled index-of-reducibility bound."""

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb

from .finite import BruteForceLimit, c_bruteforce
from .groebner import (
    NEG_INF,
    FreeSubmodule,
    Ideal,
    minimalize_monomials,
    module_dimension,
    quotient_length,
    subquotient_length,
)
from .homology import (
    all_ext_duals,
    koszul_homology_lengths,
    minimize_presentation,
    subquotient_module,
)
from .idealops import (
    PresentedModule,
    colon,
    ideal_power,
    ideal_product,
    ideal_times_module,
    maximal_ideal,
    saturate,
    submodule_sum,
)
from .ring import monomials_of_degree
from .sop import ParameterSystem, is_filter_regular, is_sop

EXACT_BRUTEFORCE = "exact-dim0-bruteforce"
LENGTH_CERTIFIED = "length-certified"
DIM1_HEURISTIC = "dim1-heuristic"


class NotParameterIdeal(ValueError):
    pass


class OutsideHypothesis(ValueError):
    """The module has polynomial type >= 2."""

    def __init__(self, ptype):
        super().__init__(f"polynomial type {ptype} > 1: the uniform bound does not apply")
        self.ptype = ptype


def _as_ideal(M, q):
    if isinstance(q, ParameterSystem):
        return q.ideal
    if isinstance(q, Ideal):
        return q
    return Ideal(M.ring, [M.ring(f) for f in q])


def _qM(M, q):
    return submodule_sum(M.relations, ideal_times_module(q, M.relations)).groebner()


# --- length and socle ---------------------------------------------------------------

def length_quotient(M, q):
    """ℓ(M/qM)."""
    q = _as_ideal(M, q)
    C = _qM(M, q)
    if module_dimension(C) > 0:
        raise NotParameterIdeal("M/qM has positive dimension")
    return quotient_length(C)


def index_of_reducibility(M, q):
    """N(q, M) = dim_k Soc(M/qM) = ℓ((qM :_M m)/qM)."""
    q = _as_ideal(M, q)
    C = _qM(M, q)
    if module_dimension(C) > 0:
        raise NotParameterIdeal("M/qM has positive dimension")
    D = colon(C, maximal_ideal(M.ring))
    return quotient_length(C) - quotient_length(D)


def socle_dimension(M):
    """dim_k Soc(M) for a finite-length module."""
    C = M.relations.groebner()
    D = colon(C, maximal_ideal(M.ring))
    return quotient_length(C) - quotient_length(D)


# --- multiplicity ---------------------------------------------------------------------

class MultiplicityError(ValueError):
    def __init__(self, message, data):
        super().__init__(f"{message}: {data}")
        self.data = data


def hilbert_samuel_lengths(forms, M, window):
    q = Ideal(M.ring, forms)
    out = {}
    for t in range(window[0], window[1] + 1):
        out[t] = length_quotient(M, ideal_power(q, t))
    return out


def multiplicity(forms, M, route="koszul", window=None):
    """Serre multiplicity e(x; M) by the Koszul Euler characteristic or by the
    Hilbert–Samuel function of q = (x)."""
    ring = M.ring
    forms = [ring(f) for f in forms]
    is_sop(forms, M)
    d = len(forms)
    if route == "koszul":
        lengths = koszul_homology_lengths(forms, M)
        return sum((-1) ** j * a for j, a in enumerate(lengths))
    if route != "hilbert_samuel":
        raise ValueError(f"unknown multiplicity route {route!r}")
    if d == 0:
        return quotient_length(M.relations)
    window = window or (1, d + 3)
    vals = hilbert_samuel_lengths(forms, M, window)
    seq = [vals[t] for t in sorted(vals)]
    for _ in range(d):
        seq = [b - a for a, b in zip(seq, seq[1:])]
    if len(seq) < 2 or seq[-1] != seq[-2]:
        raise MultiplicityError("Hilbert–Samuel differences did not stabilize", {"lengths": vals, "differences": seq})
    return seq[-1]


# --- the difference function --------------------------------------------------------------

def _powers(forms, n):
    return [f ** k for f, k in zip(forms, n)]


def difference_value(forms, n, M, base_multiplicity=None):
    """I_{M,x}(n) = ℓ(M/(x^n)M) - (n_1···n_d)·e(x; M)."""
    ring = M.ring
    forms = [ring(f) for f in forms]
    if any(k < 1 for k in n) or len(n) != len(forms):
        raise ValueError("exponents must be positive, one per form")
    e = base_multiplicity if base_multiplicity is not None else multiplicity(forms, M)
    prod = 1
    for k in n:
        prod *= k
    return length_quotient(M, Ideal(ring, _powers(forms, n))) - prod * e


@dataclass
class DifferenceGrid:
    forms: list
    multiplicity: int
    values: dict
    corner_checks: dict = field(default_factory=dict)

    def is_constant(self):
        return len(set(self.values.values())) <= 1


def difference_grid(forms, ranges, M):
    """I_{M,x}(n) for n in the product of ``ranges`` (one iterable per form).

    e(x^n) = (∏ n_i) e(x) with the Koszul route checked on the corner tuples.
    """
    import itertools

    ring = M.ring
    forms = [ring(f) for f in forms]
    e = multiplicity(forms, M)
    ranges = [list(r) for r in ranges]
    values = {}
    for n in itertools.product(*ranges):
        values[n] = difference_value(forms, n, M, e)
        if values[n] < 0:
            raise AssertionError(f"negative difference at {n}")
    corners = {}
    for n in {tuple(r[0] for r in ranges), tuple(r[-1] for r in ranges)}:
        direct = multiplicity(_powers(forms, n), M)
        prod = 1
        for k in n:
            prod *= k
        if direct != prod * e:
            raise AssertionError(f"multiplicativity failed at {n}: {direct} != {prod * e}")
        corners[n] = direct
    return DifferenceGrid(forms, e, values, corners)


# --- polynomial type ----------------------------------------------------------------------

def polynomial_type_exact(M, duals=None):
    """p(M) = dim S/(Ann K^0 ··· Ann K^{d-1}); NEG_INF when M is Cohen–Macaulay."""
    d = M.dimension()
    if d == NEG_INF:
        return NEG_INF
    duals = duals if duals is not None else all_ext_duals(M)
    prod = Ideal(M.ring, [M.ring.one])
    for K in duals[:d]:
        prod = ideal_product(prod, K.annihilator)
    prod = prod.reduced()
    return module_dimension(prod)


def _degree_of_sequence(vals):
    """Smallest k with vanishing k-th differences; None when undetermined."""
    seq = list(vals)
    for k in range(len(seq)):
        if all(v == 0 for v in seq):
            return k - 1 if k else NEG_INF
        if len(seq) < 2:
            return None
        seq = [b - a for a, b in zip(seq, seq[1:])]
    return None


def polynomial_type_empirical(M, forms, grid=None):
    """Diagnostic growth degree of the difference function on a grid; never certifies anything.

    ``grid`` is a DifferenceGrid or a list of ranges (default 1..4 on each axis).
    """
    if not isinstance(grid, DifferenceGrid):
        grid = difference_grid(forms, grid or [range(1, 5)] * len(forms), M)
    out = _growth(grid.values)
    out["exact"] = polynomial_type_exact(M)
    return out


def _growth(vals):
    if not vals:
        raise ValueError("empty grid")
    if all(v == 0 for v in vals.values()):
        return {"estimate": NEG_INF, "note": "identically zero (Cohen–Macaulay behaviour)"}
    if len(set(vals.values())) == 1:
        return {"estimate": 0, "note": "constant grid"}
    keys = sorted(vals)
    d = len(keys[0])
    axes = [sorted({k[i] for k in keys}) for i in range(d)]
    diag = [t for t in axes[0] if all(t in a for a in axes)]
    axis_degrees = []
    for i in range(d):
        fixed = [a[-1] for a in axes]
        seq = []
        for t in axes[i]:
            fixed[i] = t
            seq.append(vals[tuple(fixed)])
        axis_degrees.append(_degree_of_sequence(seq))
    diag_deg = _degree_of_sequence([vals[(t,) * d] for t in diag]) if len(diag) >= 2 else None
    known = [x for x in axis_degrees + [diag_deg] if x is not None and x != NEG_INF]
    if diag_deg is None or any(x is None for x in axis_degrees):
        est = max(known, default=0)
        note = "constant fit rejected; growth degree >= %d (window too short to resolve)" % max(est, 1)
        return {"estimate": max(est, 1), "axis_degrees": axis_degrees, "diagonal_degree": diag_deg, "note": note}
    est = max(known, default=0)
    return {"estimate": max(est, 0), "axis_degrees": axis_degrees, "diagonal_degree": diag_deg,
            "note": "constant fit rejected" if est >= 1 else "bounded"}


# --- v, c, r --------------------------------------------------------------------------------

def min_gens(N):
    """v(N) = dim_k N/mN, as the length of S^b/(B + m S^b)."""
    if N.rank == 0:
        return 0
    rel = submodule_sum(N.relations, ideal_times_module(maximal_ideal(N.ring), N.relations))
    return quotient_length(rel)


def submodule_min_gens(K, elements):
    """v of the submodule of K = S^b/B generated by the given vectors."""
    elements = [e for e in elements if e]
    if not elements:
        return 0
    if K.relations.groebner().contains(FreeSubmodule(K.ring, K.rank, K.twists, elements)):
        return 0
    sub = subquotient_module(K.ring, elements, None, K.relations.gens, K.twists)
    return minimize_presentation(sub).rank


def _random_element(K, degree, rng):
    ring = K.ring
    vec = {}
    for j, tw in enumerate(K.twists):
        for m in monomials_of_degree(ring.nvars, degree - tw):
            c = ring.field.random(rng)
            if c:
                vec[(j, m)] = c
    return vec


def sample_submodule_lower_bounds(K, count=20, seed=0, max_extra_degree=3):
    """v(N') for random submodules N' ⊆ K: each value is a lower bound for c(K)."""
    rng = random.Random(seed)
    if K.rank == 0 or K.is_zero():
        return [0]
    lo = min(K.twists)
    out = []
    ring = K.ring
    for t in range(max_extra_degree + 1):
        gens = []
        for j, tw in enumerate(K.twists):
            for m in monomials_of_degree(ring.nvars, lo + t - tw):
                gens.append({(j, m): 1})
        out.append(submodule_min_gens(K, gens))
    for _ in range(count):
        k = rng.randint(1, 3)
        elems = [_random_element(K, lo + rng.randint(0, max_extra_degree), rng) for _ in range(k)]
        out.append(submodule_min_gens(K, elems))
    return out


@dataclass
class RUpper:
    value: int
    tag: str
    lower_bounds: list = field(default_factory=list)
    detail: dict = field(default_factory=dict)

    @property
    def validated(self):
        return all(lb <= self.value for lb in self.lower_bounds)


def r_upper(K, strategy="auto", samples=20, seed=0):
    """Certified (or tagged heuristic) upper bound for r(H^i) = c(K^i)."""
    dim = K.dimension
    M = K.presentation
    if dim == NEG_INF:
        return RUpper(0, LENGTH_CERTIFIED, [0], {"length": 0})
    if dim > 1:
        raise ValueError(f"dual of dimension {dim}: no r bound available")
    if dim <= 0:
        lowers = sample_submodule_lower_bounds(M, samples, seed)
        if strategy in ("auto", "bruteforce"):
            try:
                c, colon_max = c_bruteforce(M)
                return RUpper(c, EXACT_BRUTEFORCE, lowers, {"length": K.length, "max_socle_colon": colon_max})
            except BruteForceLimit:
                if strategy == "bruteforce":
                    raise
        return RUpper(K.length, LENGTH_CERTIFIED, lowers, {"length": K.length})
    m = maximal_ideal(M.ring)
    B = M.relations.groebner()
    sat, _ = saturate(B, m)
    fin = subquotient_length(sat, B)
    rng = random.Random(seed)
    y = M.ring.random_form(1, rng)
    Kp = PresentedModule(M.ring, M.twists, sat)
    lengths = koszul_homology_lengths([y], Kp)
    e = lengths[0] - lengths[1]
    lowers = sample_submodule_lower_bounds(M, samples, seed)
    return RUpper(e + fin, DIM1_HEURISTIC, lowers, {"multiplicity": e, "finite_part_length": fin, "koszul": lengths})


def r_bracket(K, samples=10, seed=0):
    """(lower, upper, exact) for r(H^i) = c(K^i); used for left-hand sides."""
    if K.dimension == NEG_INF:
        return 0, 0, True
    up = r_upper(K, samples=samples, seed=seed)
    lower = max([K.min_gens] + up.lower_bounds)
    if up.tag == EXACT_BRUTEFORCE:
        return up.value, up.value, True
    return lower, up.value, up.tag == LENGTH_CERTIFIED and lower == up.value


# --- the bound --------------------------------------------------------------------------------

@dataclass
class BoundReport:
    module: str
    dimension: int
    ptype: object
    duals: list
    r_upper: list
    socle_top: int
    rhs_main: int
    rhs_star: object
    buchsbaum_I: object
    cuong_truong_target: object
    samples: list
    max_index: object
    argmax: object
    verdict: str
    heuristic_validated: bool
    seed: int = 0

    @property
    def tags(self):
        return [r.tag for r in self.r_upper]

    def as_dict(self):
        return {
            "module": self.module,
            "dimension": self.dimension,
            "ptype": "-inf" if self.ptype == NEG_INF else self.ptype,
            "duals": [K.as_dict() for K in self.duals],
            "r_upper": [
                {"index": i, "value": r.value, "tag": r.tag, "lower_bounds_max": max(r.lower_bounds, default=0),
                 "validated": r.validated}
                for i, r in enumerate(self.r_upper)
            ],
            "socle_top": self.socle_top,
            "rhs_main": self.rhs_main,
            "rhs_star": self.rhs_star,
            "buchsbaum_I": self.buchsbaum_I,
            "cuong_truong_target": self.cuong_truong_target,
            "samples": self.samples,
            "max_index": self.max_index,
            "argmax": self.argmax,
            "verdict": self.verdict,
            "heuristic_validated": self.heuristic_validated,
            "seed": self.seed,
        }


def _index_job(args):
    M, forms = args
    return index_of_reducibility(M, Ideal(M.ring, forms))


def bound_assembly(M, seed=0, samples=20):
    """Right-hand sides of the bound from the local cohomology duals of M."""
    d = M.dimension()
    duals = all_ext_duals(M)
    p = polynomial_type_exact(M, duals)
    if p != NEG_INF and p > 1:
        raise OutsideHypothesis(p)
    uppers = [r_upper(K, samples=samples, seed=seed + i) for i, K in enumerate(duals[:d])]
    soc_top = duals[d].min_gens
    rhs_main = sum(comb(d, i) * r.value for i, r in enumerate(uppers)) + soc_top
    finite = all(K.dimension <= 0 for K in duals[:d])
    rhs_star = buch = ct = None
    if finite:
        rhs_star = sum(comb(d, i) * duals[i].length for i in range(d)) + soc_top
        buch = sum(comb(d - 1, i) * duals[i].length for i in range(d)) if d >= 1 else 0
        ct = sum(comb(d, i) * duals[i].min_gens for i in range(d + 1))
    return {
        "dimension": d, "duals": duals, "ptype": p, "r_upper": uppers, "soc_top": soc_top,
        "rhs_main": rhs_main, "rhs_star": rhs_star, "buchsbaum_I": buch, "cuong_truong_target": ct,
    }


def bound_report(M, samples, seed=0, jobs=1, lower_samples=20, name=None):
    """Evaluate N(q, M) on every sample against the assembled bound."""
    parts = bound_assembly(M, seed, lower_samples)
    forms_list = []
    for s in samples:
        forms = s.forms if isinstance(s, ParameterSystem) else [M.ring(f) for f in s]
        is_sop(forms, M)
        forms_list.append(forms)
    if jobs > 1 and len(forms_list) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            values = list(ex.map(_index_job, [(M, f) for f in forms_list], chunksize=4))
    else:
        values = [_index_job((M, f)) for f in forms_list]
    rows = [{"index": k, "forms": [str(f) for f in forms], "degrees": [f.degree for f in forms], "N": v}
            for k, (forms, v) in enumerate(zip(forms_list, values))]
    mx = max(values, default=None)
    arg = rows[values.index(mx)]["forms"] if values else None
    verdict = "pass" if all(v <= parts["rhs_main"] for v in values) else "fail"
    return BoundReport(
        module=name or M.name or "M",
        dimension=parts["dimension"],
        ptype=parts["ptype"],
        duals=parts["duals"],
        r_upper=parts["r_upper"],
        socle_top=parts["soc_top"],
        rhs_main=parts["rhs_main"],
        rhs_star=parts["rhs_star"],
        buchsbaum_I=parts["buchsbaum_I"],
        cuong_truong_target=parts["cuong_truong_target"],
        samples=rows,
        max_index=mx,
        argmax=arg,
        verdict=verdict,
        heuristic_validated=all(r.validated for r in parts["r_upper"]),
        seed=seed,
    )


# --- monomial irreducible decomposition -------------------------------------------------------

def _is_artinian_monomial(gens, n):
    return all(any(g[i] > 0 and sum(g) == g[i] for g in gens) for i in range(n))


def _split(gens, n):
    gens = minimalize_monomials(gens)
    for g in gens:
        support = [i for i in range(n) if g[i]]
        if len(support) >= 2:
            i = support[0]
            power = tuple(g[i] if k == i else 0 for k in range(n))
            rest = tuple(0 if k == i else g[k] for k in range(n))
            return _split(gens + [power], n) + _split(gens + [rest], n)
    exps = [0] * n
    for g in gens:
        for i in range(n):
            if g[i]:
                exps[i] = g[i]
    return [tuple(exps)]


def monomial_intersection(ideals_exps, n):
    """Generators of the intersection of monomial ideals given as exponent lists."""
    cur = ideals_exps[0]
    for other in ideals_exps[1:]:
        cur = minimalize_monomials([tuple(max(a, b) for a, b in zip(f, g)) for f in cur for g in other])
    return minimalize_monomials(cur)


def irreducible_decomposition_monomial(I, check=True):
    """Irredundant irreducible components (x_1^{a_1}, ..., x_n^{a_n}) of an artinian monomial ideal."""
    ring = I.ring
    n = ring.nvars
    if not I.is_monomial():
        raise ValueError("ideal is not monomial")
    gens = minimalize_monomials([m for g in I.gens for (_, m) in g])
    if not _is_artinian_monomial(gens, n):
        raise ValueError("monomial ideal is not artinian")
    comps = set(_split(gens, n))
    irredundant = [a for a in comps if not any(b != a and all(x >= y for x, y in zip(b, a)) for b in comps)]
    irredundant.sort(reverse=True)
    pure = [[tuple(a[i] if k == i else 0 for k in range(n)) for i in range(n)] for a in irredundant]
    if check:
        if set(monomial_intersection(pure, n)) != set(minimalize_monomials(gens)):
            raise AssertionError("components do not intersect back to the ideal")
        if len(pure) != socle_dimension(PresentedModule.cyclic(I)):
            raise AssertionError("component count differs from the socle dimension")
    return [Ideal(ring, [ring.monomial(e) for e in comp]) for comp in pure]


# --- inequalities along a filter-regular sequence -----------------------------------------

@dataclass
class SequenceCheckReport:
    k: int
    rows: list
    violations: list
    tags: list

    @property
    def ok(self):
        return not self.violations


def sequence_quotient_check(M, forms, seed=0, samples=10):
    """Compare r and socle data of M/(x_1..x_k)M with the binomial bounds from M."""
    ring = M.ring
    forms = [ring(f) for f in forms]
    for i, f in enumerate(forms):
        if not is_filter_regular(f, M, forms[:i]):
            raise ValueError(f"element {i + 1} ({f}) is not filter-regular")
    d = M.dimension()
    k = len(forms)
    if k > d:
        raise ValueError("sequence longer than dim M")
    base = bound_assembly(M, seed, samples)
    ups = base["r_upper"]
    Mk = M.quotient(Ideal(ring, forms)) if k else M
    duals_k = all_ext_duals(Mk)
    rows = []
    violations = []
    for j in range(d - k):
        lo, hi, exact = r_bracket(duals_k[j], samples, seed + j)
        rhs = sum(comb(k, i - j) * ups[i].value for i in range(j, j + k + 1))
        tags = sorted({ups[i].tag for i in range(j, j + k + 1)})
        row = {"j": j, "kind": "r", "lhs_lower": lo, "lhs_upper": hi, "lhs_exact": exact, "rhs": rhs, "rhs_tags": tags}
        rows.append(row)
        if lo > rhs:
            violations.append(row)
    j = d - k
    lhs = duals_k[j].min_gens
    rhs = sum(comb(k, k + i - d) * ups[i].value for i in range(d - k, d)) + base["soc_top"]
    tags = sorted({ups[i].tag for i in range(d - k, d)})
    row = {"j": j, "kind": "socle", "lhs_lower": lhs, "lhs_upper": lhs, "lhs_exact": True, "rhs": rhs, "rhs_tags": tags}
    rows.append(row)
    if lhs > rhs:
        violations.append(row)
    return SequenceCheckReport(k, rows, violations, sorted({r.tag for r in ups}))
