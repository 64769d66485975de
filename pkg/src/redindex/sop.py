"""Homogeneous systems of parameters and filter-regular sequences."""

import random
from dataclasses import dataclass, field

from .field import rank
from .groebner import NEG_INF, Ideal, module_dimension, quotient_length, subquotient_dimension
from .idealops import colon, ideal_times_module, submodule_sum


class NotASystemOfParameters(ValueError):
    pass


class RearrangeError(RuntimeError):
    def __init__(self, message, failures):
        super().__init__(f"{message}; failures per step: {failures}")
        self.failures = failures


@dataclass
class ParameterSystem:
    """x_1..x_d with the ideal q they generate and validity evidence.

    ``filter_regular[i]`` is True, False or None (untested).
    """

    forms: list
    ideal: Ideal
    certificate: dict
    filter_regular: list = field(default_factory=list)

    @property
    def degrees(self):
        return [f.degree for f in self.forms]

    def __len__(self):
        return len(self.forms)

    def is_filter_regular(self):
        return all(flag is True for flag in self.filter_regular)

    def as_strings(self):
        return [str(f) for f in self.forms]


@dataclass
class FilterRegularity:
    regular: bool
    colon_dimension: object

    def __bool__(self):
        return self.regular


def _relations_plus(M, forms):
    q = Ideal(M.ring, forms)
    if not forms:
        return M.relations
    return submodule_sum(M.relations, ideal_times_module(q, M.relations))


def is_sop(forms, M):
    """Validate ``forms`` as a homogeneous system of parameters of M."""
    ring = M.ring
    forms = [ring(f) for f in forms]
    d = M.dimension()
    if d == NEG_INF:
        raise NotASystemOfParameters("the zero module has no system of parameters")
    if len(forms) != d:
        raise NotASystemOfParameters(f"expected {d} forms (dim M), got {len(forms)}")
    for f in forms:
        if not f or not f.is_homogeneous() or f.degree < 1:
            raise NotASystemOfParameters(f"{f} is not a homogeneous form of positive degree")
    C = _relations_plus(M, forms).groebner()
    qdim = module_dimension(C)
    if qdim > 0:
        raise NotASystemOfParameters(f"M/(x)M has dimension {qdim}")
    cert = {"quotient_dimension": "-inf" if qdim == NEG_INF else qdim, "length": quotient_length(C)}
    return ParameterSystem(forms, Ideal(ring, forms), cert, [None] * len(forms))


def is_filter_regular(y, M, prev=()):
    """Whether ((prev)M :_M y)/(prev)M has finite length."""
    ring = M.ring
    y = ring(y)
    if not y.is_homogeneous():
        raise ValueError("filter-regularity test needs a homogeneous element")
    C = _relations_plus(M, [ring(f) for f in prev]).groebner()
    if not y:
        dim = module_dimension(C)
        return FilterRegularity(dim <= 0, dim)
    D = colon(C, Ideal(ring, [y]))
    dim = subquotient_dimension(D, C)
    return FilterRegularity(dim <= 0, dim)


def certify_filter_regular(ps, M):
    """Fill the per-element flags of a ParameterSystem."""
    flags = []
    for i, f in enumerate(ps.forms):
        flags.append(bool(is_filter_regular(f, M, ps.forms[:i])))
    return ParameterSystem(ps.forms, ps.ideal, ps.certificate, flags)


def _same_ideal(I, J):
    Ig, Jg = I.groebner(), J.groebner()
    return all(Ig.contains_poly(f) for f in J.generators) and all(Jg.contains_poly(f) for f in I.generators)


def filter_regular_rearrange(q, M, seed=0, retries=100, prefer_given=True):
    """Generators y_1..y_d of the parameter ideal q forming a filter-regular sequence.

    Each y_i is a k-linear combination of q's (equal-degree) generators; the
    coefficient matrix is kept nonsingular so (y) = q.  With ``prefer_given``
    the given generators are tried, in order, before random combinations.
    """
    ring = M.ring
    forms = q.generators if isinstance(q, Ideal) else [ring(f) for f in q]
    if len({f.degree for f in forms}) > 1:
        raise ValueError("rearrangement needs generators of equal degree")
    base = is_sop(forms, M)
    d = len(forms)
    F = ring.field
    rng = random.Random(seed)
    rows, ys, failures = [], [], []
    for i in range(d):
        fails = 0
        tried_units = 0 if prefer_given else d
        while True:
            unit = tried_units < d
            if unit:
                c = [0] * d
                c[tried_units] = 1
                tried_units += 1
            else:
                c = [F.random(rng) for _ in range(d)]
            if rank(rows + [c], F) == i + 1:
                y = ring.zero
                for a, f in zip(c, forms):
                    if a:
                        y = y + f * a
                if is_filter_regular(y, M, ys):
                    rows.append(c)
                    ys.append(y)
                    break
            elif unit:
                continue
            fails += 1
            if fails > retries:
                raise RearrangeError("retry budget exhausted", failures + [fails])
        failures.append(fails)
    out = Ideal(ring, ys)
    if not _same_ideal(out, Ideal(ring, forms)):
        raise AssertionError("rearranged sequence generates a different ideal")
    cert = dict(base.certificate, rearrange_failures=failures, seed=seed)
    return ParameterSystem(ys, out, cert, [True] * d)


def random_sop(M, degrees, seed=0, budget=100, rng=None):
    """Random homogeneous forms of the given degrees, rejection-sampled until an SOP."""
    if any(dg < 1 for dg in degrees):
        raise ValueError("degrees must be positive")
    rng = rng if rng is not None else random.Random(seed)
    ring = M.ring
    for attempt in range(budget):
        forms = [ring.random_form(dg, rng) for dg in degrees]
        try:
            ps = is_sop(forms, M)
        except NotASystemOfParameters:
            continue
        ps.certificate["attempts"] = attempt + 1
        return ps
    raise NotASystemOfParameters(f"no system of parameters found in {budget} draws")


def deep_sop(M, t, seed=0, spread=1, budget=100, rng=None):
    """Random SOP with every form of degree in [t, t + spread], so q ⊆ m^t."""
    rng = rng if rng is not None else random.Random(seed)
    d = M.dimension()
    degrees = [rng.randint(t, t + spread) for _ in range(d)]
    return random_sop(M, degrees, budget=budget, rng=rng)
