"""Exact coefficient fields and small dense linear algebra over them."""

from fractions import Fraction


def _is_prime(p):
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class FieldCtx:
    """The prime field F_p (``characteristic = p``) or the rationals (``0``).

    Elements of F_p are ints in ``range(p)``; rationals are ``Fraction``.
    """

    __slots__ = ("characteristic", "description")

    def __init__(self, characteristic=32003):
        characteristic = int(characteristic)
        if characteristic != 0 and not _is_prime(characteristic):
            raise ValueError(f"characteristic must be 0 or prime, got {characteristic}")
        self.characteristic = characteristic
        self.description = "QQ" if characteristic == 0 else f"GF({characteristic})"

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("FieldCtx", self.characteristic))

    def __repr__(self):
        return f"FieldCtx({self.characteristic})"

    def __getstate__(self):
        return (self.characteristic,)

    def __setstate__(self, state):
        self.characteristic = state[0]
        self.description = "QQ" if state[0] == 0 else f"GF({state[0]})"

    @property
    def p(self):
        return self.characteristic

    def __call__(self, value):
        """Coerce an int or Fraction into the field."""
        p = self.characteristic
        if p:
            if isinstance(value, Fraction):
                if value.denominator % p == 0:
                    raise ZeroDivisionError(f"{value} has no image in GF({p})")
                return value.numerator * pow(value.denominator, p - 2, p) % p
            return int(value) % p
        return Fraction(value)

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        p = self.characteristic
        if p:
            return pow(a, p - 2, p)
        return 1 / Fraction(a)

    def neg(self, a):
        p = self.characteristic
        return (-a) % p if p else -a

    def random(self, rng, nonzero=False):
        p = self.characteristic
        if p:
            return rng.randrange(1, p) if nonzero else rng.randrange(p)
        lo = 1 if nonzero else 0
        v = rng.randint(lo, 99)
        return Fraction(v if rng.random() < 0.5 else -v)

    def signed(self, a):
        """Representative in (-p/2, p/2] for display."""
        p = self.characteristic
        if p and a > p // 2:
            return a - p
        return a


# --- dense linear algebra -------------------------------------------------

def rref(rows, field):
    """Row-reduce a list of equal-length vectors.

    Returns ``(basis_rows, pivots)`` with every pivot entry equal to one.
    """
    p = field.characteristic
    mat = [list(r) for r in rows]
    pivots = []
    out = []
    if not mat:
        return out, pivots
    ncols = len(mat[0])
    for col in range(ncols):
        piv = None
        for r in mat:
            if r[col]:
                piv = r
                break
        if piv is None:
            continue
        mat.remove(piv)
        inv = field.inv(piv[col])
        if p:
            piv = [x * inv % p for x in piv]
        else:
            piv = [x * inv for x in piv]
        for r in mat + out:
            c = r[col]
            if c:
                if p:
                    for k in range(col, ncols):
                        if piv[k]:
                            r[k] = (r[k] - c * piv[k]) % p
                else:
                    for k in range(col, ncols):
                        if piv[k]:
                            r[k] = r[k] - c * piv[k]
        out.append(piv)
        pivots.append(col)
    return out, pivots


def rank(rows, field):
    return len(rref(rows, field)[0])


def nullspace(rows, ncols, field):
    """Basis of ``{v : row . v = 0 for every row}``."""
    basis, pivots = rref(rows, field) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    p = field.characteristic
    out = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, pc in zip(basis, pivots):
            if row[f]:
                v[pc] = (-row[f]) % p if p else -row[f]
        out.append(v)
    return out
