"""Finite-length modules as vector spaces with commuting variable actions, and
exhaustive submodule enumeration over tiny prime fields."""

import itertools

from .field import rank, rref
from .groebner import quotient_length, reduce_vec, standard_monomials


class BruteForceLimit(ValueError):
    pass


class FiniteModule:
    """k^L with matrices ``actions[i]`` (rows of an L x L matrix acting on columns)."""

    def __init__(self, field, dim, actions, labels=None):
        self.field = field
        self.dim = dim
        self.actions = [tuple(tuple(r) for r in A) for A in actions]
        self.labels = labels

    @classmethod
    def from_presented(cls, M):
        """k-basis of standard monomials and multiplication matrices of S^b/B."""
        rel = M.relations.groebner()
        basis = standard_monomials(rel)
        where = {t: k for k, t in enumerate(basis)}
        ring = M.ring
        L = len(basis)
        actions = []
        for i in range(ring.nvars):
            A = [[0] * L for _ in range(L)]
            for col, (pos, m) in enumerate(basis):
                u = m[:i] + (m[i] + 1,) + m[i + 1:]
                nf = reduce_vec({(pos, u): 1}, rel.basis, rel.order, ring.field)
                for t, c in nf.items():
                    A[where[t]][col] = c
            actions.append(A)
        return cls(ring.field, L, actions, basis)

    def dual(self):
        """Hom_k(N, k) with transposed actions (Matlis dual of a finite-length module)."""
        return FiniteModule(self.field, self.dim, [list(zip(*A)) for A in self.actions])

    def act(self, i, v):
        p = self.field.p
        A = self.actions[i]
        out = []
        for row in A:
            s = 0
            for a, x in zip(row, v):
                if a and x:
                    s += a * x
            out.append(s % p if p else s)
        return tuple(out)

    def commuting(self):
        for i, j in itertools.combinations(range(len(self.actions)), 2):
            for k in range(self.dim):
                e = tuple(1 if t == k else 0 for t in range(self.dim))
                if self.act(i, self.act(j, e)) != self.act(j, self.act(i, e)):
                    return False
        return True


# --- subspaces as canonical RREF tuples ------------------------------------------

def _canon(rows, field):
    basis, _ = rref(rows, field)
    return tuple(tuple(r) for r in basis)


def _reduce_mod(v, sub, field):
    """Reduce v modulo an RREF subspace (tuple of rows with unit pivots)."""
    p = field.p
    v = list(v)
    for row in sub:
        piv = next(k for k, a in enumerate(row) if a)
        c = v[piv]
        if c:
            v = [(x - c * y) % p if p else x - c * y for x, y in zip(v, row)]
    return v


def _closure(F, sub, v):
    """Smallest submodule containing the submodule ``sub`` and the vector v."""
    field = F.field
    rows = [list(r) for r in sub]
    frontier = [v]
    while frontier:
        w = frontier.pop()
        w = _reduce_mod(w, _canon(rows, field) if rows else (), field)
        if not any(w):
            continue
        rows.append(w)
        for i in range(len(F.actions)):
            frontier.append(F.act(i, w))
    return _canon(rows, field)


def _line_reps(sub, L, field):
    """Representatives of the lines of k^L / sub: vectors zero on sub's pivots, first nonzero = 1."""
    p = field.p
    pivots = {next(k for k, a in enumerate(row) if a) for row in sub}
    free = [k for k in range(L) if k not in pivots]
    for vals in itertools.product(range(p), repeat=len(free)):
        nz = next((x for x in vals if x), 0)
        if nz != 1:
            continue
        v = [0] * L
        for k, x in zip(free, vals):
            v[k] = x
        yield tuple(v)


def enumerate_submodules(F, max_steps=2_000_000):
    """All submodules of a finite module over a finite prime field (canonical RREF tuples)."""
    if not F.field.p:
        raise BruteForceLimit("enumeration needs a finite field")
    zero = ()
    seen = {zero}
    queue = [zero]
    steps = 0
    while queue:
        U = queue.pop()
        for v in _line_reps(U, F.dim, F.field):
            steps += 1
            if steps > max_steps:
                raise BruteForceLimit(f"submodule enumeration exceeded {max_steps} closure steps")
            W = _closure(F, U, v)
            if W not in seen:
                seen.add(W)
                queue.append(W)
    return sorted(seen, key=lambda s: (len(s), s))


def _dim(rows, field):
    return rank([list(r) for r in rows], field) if rows else 0


def _m_times(F, sub):
    return [F.act(i, r) for r in sub for i in range(len(F.actions))]


def min_generators_count(F, sub, mod=()):
    """v(U/N1) = dim U - dim(mU + N1) for N1 = ``mod`` ⊆ U."""
    return len(sub) - _dim(list(_m_times(F, sub)) + [list(r) for r in mod], F.field) if sub else 0


def socle_colon_length(F, sub):
    """ℓ((U :_N m)/U)."""
    field = F.field
    L = F.dim
    rows = []
    for i in range(len(F.actions)):
        images = []
        for k in range(L):
            e = tuple(1 if t == k else 0 for t in range(L))
            images.append(_reduce_mod(F.act(i, e), sub, field))
        # row r of the stacked map: coordinate r of each image
        for r in range(L):
            rows.append([images[k][r] for k in range(L)])
    kernel_dim = L - rank(rows, field)
    return kernel_dim - len(sub)


def contained(a, b, field):
    """Subspace a ⊆ subspace b."""
    return all(not any(_reduce_mod(r, b, field)) for r in a)


class SubmoduleLattice:
    """Exhaustive submodule data of a tiny finite module."""

    def __init__(self, F, max_steps=2_000_000):
        self.F = F
        self.subs = enumerate_submodules(F, max_steps)
        self.v = {U: min_generators_count(F, U) for U in self.subs}

    @property
    def whole(self):
        return self.subs[-1]

    def c(self):
        return max(self.v.values())

    def max_socle_colon(self):
        return max(socle_colon_length(self.F, U) for U in self.subs)

    def c_sub(self, N1):
        """c(N1) for a submodule N1."""
        return max(self.v[U] for U in self.subs if contained(U, N1, self.F.field))

    def c_quotient(self, N1):
        """c(N/N1)."""
        return max(min_generators_count(self.F, U, N1) for U in self.subs if contained(N1, U, self.F.field))


def c_bruteforce(M, max_length=6, max_prime=5, max_steps=2_000_000):
    """Exact (c(N), max_N' ℓ(N':m/N')) for a tiny finite-length presented module."""
    p = M.ring.field.p
    if not p or p > max_prime:
        raise BruteForceLimit(f"brute force needs F_p with p <= {max_prime}")
    L = quotient_length(M.relations)
    if L > max_length:
        raise BruteForceLimit(f"length {L} exceeds the brute-force limit {max_length}")
    lat = SubmoduleLattice(FiniteModule.from_presented(M), max_steps)
    return lat.c(), lat.max_socle_colon()


def r_bruteforce(F, max_steps=2_000_000):
    """r(A) = max over submodules B of ℓ((B :_A m)/B), A a finite module."""
    return SubmoduleLattice(F, max_steps).max_socle_colon()

