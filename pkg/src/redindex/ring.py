"""Monomial orders, polynomial rings and exact polynomials.

Monomials are exponent tuples.  A :class:`Polynomial` is an immutable map
monomial -> nonzero coefficient bound to a :class:`RingCtx`.
"""

import re
from fractions import Fraction
from functools import total_ordering

from .field import FieldCtx


class MonomialOrder:
    """A monomial order, optionally extended to free-module terms.

    ``kind`` is ``"grevlex"``, ``"lex"`` or ``"elim"`` (block order: grevlex on
    the first ``split`` variables, ties broken by grevlex on the rest).

    ``key(m)`` is a sort key with the *largest* monomial first, i.e. sorting
    ascending by key lists monomials in decreasing order.  This is what the
    reduction heaps in :mod:`redindex.groebner` rely on.
    """

    __slots__ = ("kind", "split", "_cache")

    def __init__(self, kind="grevlex", split=None):
        if kind not in ("grevlex", "lex", "elim"):
            raise ValueError(f"unknown monomial order {kind!r}")
        if kind == "elim" and split is None:
            raise ValueError("block elimination order needs a split index")
        self.kind = kind
        self.split = split
        self._cache = {}

    def __getstate__(self):
        return (self.kind, self.split)

    def __setstate__(self, state):
        self.kind, self.split = state
        self._cache = {}

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and (self.kind, self.split) == (other.kind, other.split)

    def __hash__(self):
        return hash((self.kind, self.split))

    def __repr__(self):
        if self.kind == "elim":
            return f"MonomialOrder('elim', split={self.split})"
        return f"MonomialOrder({self.kind!r})"

    def key(self, m):
        k = self._cache.get(m)
        if k is None:
            k = self._cache[m] = self._key(m)
        return k

    def _key(self, m):
        if self.kind == "grevlex":
            return (-sum(m),) + m[::-1]
        if self.kind == "lex":
            return tuple(-e for e in m)
        a, b = m[: self.split], m[self.split:]
        return (-sum(a),) + a[::-1] + (-sum(b),) + b[::-1]

    def compare(self, u, v):
        """Return -1, 0 or 1 as ``u`` is less than, equal to or greater than ``v``."""
        if len(u) != len(v):
            raise ValueError("monomials have different variable counts")
        ku, kv = self.key(u), self.key(v)
        if ku == kv:
            return 0
        return 1 if ku < kv else -1


class ModuleOrder:
    """Extension of a monomial order to terms ``(position, monomial)``.

    ``"top"`` compares monomials first and positions second (lower index is
    larger).  ``"pot"`` compares positions first.  ``"elim"`` makes every term
    in positions ``< split`` larger than every term in positions ``>= split``
    and is TOP inside each block; syzygies are read off with it.
    """

    __slots__ = ("mono", "kind", "split", "_cache")

    def __init__(self, mono, kind="top", split=None):
        if kind not in ("top", "pot", "elim"):
            raise ValueError(f"unknown module order {kind!r}")
        self.mono = mono
        self.kind = kind
        self.split = split
        self._cache = {}

    def __getstate__(self):
        return (self.mono, self.kind, self.split)

    def __setstate__(self, state):
        self.mono, self.kind, self.split = state
        self._cache = {}

    def key(self, t):
        k = self._cache.get(t)
        if k is None:
            pos, m = t
            mk = self.mono.key(m)
            if self.kind == "top":
                k = mk + (pos,)
            elif self.kind == "pot":
                k = (pos,) + mk
            else:
                k = (0 if pos < self.split else 1,) + mk + (pos,)
            self._cache[t] = k
        return k


class RingCtx:
    """Polynomial ring k[x_1..x_n] with a fixed monomial order."""

    def __init__(self, variables, field=None, order="grevlex"):
        if isinstance(variables, str):
            variables = variables.replace(",", " ").split()
        variables = tuple(variables)
        if not variables:
            raise ValueError("a ring needs at least one variable")
        if len(set(variables)) != len(variables):
            raise ValueError("variable names must be distinct")
        for v in variables:
            if not _IDENT.fullmatch(v):
                raise ValueError(f"bad variable name {v!r}")
        self.variables = variables
        self.field = field if field is not None else FieldCtx()
        self.order = order if isinstance(order, MonomialOrder) else MonomialOrder(order)
        self.nvars = len(variables)

    def __eq__(self, other):
        return (
            isinstance(other, RingCtx)
            and self.variables == other.variables
            and self.field == other.field
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.variables, self.field, self.order))

    def __repr__(self):
        return f"RingCtx({' '.join(self.variables)!r}, {self.field.description}, {self.order!r})"

    # constructors -------------------------------------------------------
    @property
    def zero(self):
        return Polynomial(self, {})

    @property
    def one(self):
        return self.constant(1)

    def constant(self, c):
        c = self.field(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def gens(self):
        return [self.var(i) for i in range(self.nvars)]

    def var(self, i):
        if isinstance(i, str):
            i = self.variables.index(i)
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): 1 if self.field.p else Fraction(1)})

    def monomial(self, exps, coeff=1):
        c = self.field(coeff)
        return Polynomial(self, {tuple(exps): c} if c else {})

    def parse(self, text):
        return parse_poly(text, self)

    def __call__(self, value):
        if isinstance(value, Polynomial):
            if value.ring != self:
                raise ValueError("polynomial belongs to a different ring")
            return value
        if isinstance(value, str):
            return parse_poly(value, self)
        return self.constant(value)

    def monomials_of_degree(self, degree):
        return list(monomials_of_degree(self.nvars, degree))

    def random_form(self, degree, rng):
        """Homogeneous form of the given degree with uniformly random coefficients."""
        terms = {}
        for m in monomials_of_degree(self.nvars, degree):
            c = self.field.random(rng)
            if c:
                terms[m] = c
        return Polynomial(self, terms)

    def with_order(self, order):
        return RingCtx(self.variables, self.field, order)


def monomials_of_degree(n, degree):
    if degree < 0:
        return
    if n == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in monomials_of_degree(n - 1, degree - first):
            yield (first,) + rest


@total_ordering
class Polynomial:
    """Immutable polynomial: ``terms`` maps exponent tuples to nonzero coefficients."""

    __slots__ = ("ring", "terms", "_deg")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms
        self._deg = None

    # structure ------------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __len__(self):
        return len(self.terms)

    @property
    def degree(self):
        """Total degree; ``-1`` for the zero polynomial."""
        if self._deg is None:
            self._deg = max((sum(m) for m in self.terms), default=-1)
        return self._deg

    def is_homogeneous(self):
        return len({sum(m) for m in self.terms}) <= 1

    def sorted_terms(self, order=None):
        order = order or self.ring.order
        return sorted(self.terms.items(), key=lambda kv: order.key(kv[0]))

    def lm(self, order=None):
        order = order or self.ring.order
        return min(self.terms, key=order.key) if self.terms else None

    def lc(self, order=None):
        m = self.lm(order)
        return self.terms[m] if m is not None else 0

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and sum(next(iter(self.terms))) == 0)

    def is_monomial(self):
        return len(self.terms) == 1

    def monic(self):
        if not self.terms:
            return self
        return self * self.ring.field.inv(self.lc())

    # arithmetic -------------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("polynomials belong to different rings")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ring.field.p
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m)
            if v is None:
                out[m] = c
            else:
                v = (v + c) % p if p else v + c
                if v:
                    out[m] = v
                else:
                    del out[m]
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.field.p
        if p:
            return Polynomial(self.ring, {m: p - c for m, c in self.terms.items()})
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = self.ring.field(other)
            if not c:
                return self.ring.zero
            p = self.ring.field.p
            if p:
                return Polynomial(self.ring, {m: v * c % p for m, v in self.terms.items()})
            return Polynomial(self.ring, {m: v * c for m, v in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial(self.ring, poly_mul(self.terms, other.terms, self.ring.field.p))

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == self.ring.constant(other).terms
        return NotImplemented

    def __lt__(self, other):
        # only for deterministic sorting of collections
        return self.sorted_key() < other.sorted_key()

    def sorted_key(self):
        order = self.ring.order
        return [(order.key(m), str(c)) for m, c in self.sorted_terms()]

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"Polynomial({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)

    def evaluate_substitution(self, images):
        """Substitute polynomials ``images[i]`` for the i-th variable."""
        result = self.ring.zero
        for m, c in self.terms.items():
            t = self.ring.constant(1) * c
            for img, e in zip(images, m):
                if e:
                    t = t * img ** e
            result = result + t
        return result


def poly_mul(f, g, p):
    out = {}
    for m1, c1 in f.items():
        for m2, c2 in g.items():
            m = tuple(a + b for a, b in zip(m1, m2))
            v = out.get(m, 0) + c1 * c2
            if p:
                v %= p
            if v:
                out[m] = v
            elif m in out:
                del out[m]
    return out


# --- text format -------------------------------------------------------------

_IDENT = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")
_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*^()/])|(\S))")


class ParseError(ValueError):
    """Malformed polynomial text; ``position`` is a 0-based column."""

    def __init__(self, message, position=None, text=None):
        self.message = message
        self.position = position
        self.text = text
        where = f" at column {position + 1}" if position is not None else ""
        super().__init__(f"{message}{where}")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if mt is None:
            break
        if mt.group(4) is not None:
            raise ParseError(f"unexpected character {mt.group(4)!r}", mt.start(4), text)
        if mt.group(1) is not None:
            tokens.append(("int", int(mt.group(1)), mt.start(1)))
        elif mt.group(2) is not None:
            tokens.append(("ident", mt.group(2), mt.start(2)))
        elif mt.group(3) is not None:
            op = "^" if mt.group(3) == "**" else mt.group(3)
            tokens.append(("op", op, mt.start(3)))
        pos = mt.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text, ring):
        self.text = text
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, tok[2], self.text)

    def parse(self):
        if self.peek()[0] == "end":
            self.error("empty expression")
        f = self.expr()
        if self.peek()[0] != "end":
            tok = self.peek()
            if tok[0] in ("ident", "int") or tok[1] == "(":
                self.error("juxtaposition is not allowed; use '*'")
            self.error(f"unexpected token {tok[1]!r}")
        return f

    def expr(self):
        f = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            g = self.term()
            f = f + g if op == "+" else f - g
        return f

    def term(self):
        f = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in ("*", "/"):
            tok = self.take()
            if tok[1] == "/":
                self.error("division is not supported (rational literals only: a/b with integers)", tok)
            f = f * self.unary()
        return f

    def unary(self):
        tok = self.peek()
        if tok[0] == "op" and tok[1] in ("+", "-"):
            self.take()
            f = self.unary()
            return -f if tok[1] == "-" else f
        return self.power()

    def power(self):
        f = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            tok = self.take()
            if tok[0] != "int":
                self.error("exponent must be a nonnegative integer literal", tok)
            f = f ** tok[1]
            if self.peek()[0] == "op" and self.peek()[1] == "^":
                self.error("chained exponents are ambiguous; use parentheses")
        return f

    def atom(self):
        tok = self.take()
        kind, val, _ = tok
        if kind == "int":
            nxt = self.peek()
            if nxt[0] == "op" and nxt[1] == "/" and self.tokens[self.i + 1][0] == "int":
                self.take()
                den = self.take()[1]
                if den == 0:
                    self.error("zero denominator", tok)
                return self.ring.constant(Fraction(val, den))
            return self.ring.constant(val)
        if kind == "ident":
            if val not in self.ring.variables:
                raise ParseError(f"unknown identifier {val!r}", tok[2], self.text)
            return self.ring.var(val)
        if kind == "op" and val == "(":
            f = self.expr()
            if self.peek()[1] != ")":
                self.error("expected ')'")
            self.take()
            return f
        if kind == "end":
            self.error("unexpected end of expression", tok)
        self.error(f"unexpected token {val!r}", tok)


def parse_poly(text, ring):
    """Parse ``text`` into a :class:`Polynomial` of ``ring``.

    Grammar::

        expr   := term (('+' | '-') term)*
        term   := unary ('*' unary)*
        unary  := ('+' | '-') unary | power
        power  := atom ('^' INT)?
        atom   := INT ('/' INT)? | IDENT | '(' expr ')'

    ``**`` is accepted as a synonym for ``^``.  A slash may only join two
    integer literals (a rational constant); any other division is an error.
    """
    return _Parser(text, ring).parse()


def format_monomial(m, variables):
    parts = []
    for v, e in zip(variables, m):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append(f"{v}^{e}")
    return "*".join(parts)


def format_poly(f):
    if not f.terms:
        return "0"
    field = f.ring.field
    out = []
    for m, c in f.sorted_terms():
        c = field.signed(c)
        neg = c < 0
        a = -c if neg else c
        mono = format_monomial(m, f.ring.variables)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)
