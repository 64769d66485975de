"""Line-oriented experiment sessions.

Grammar (one statement per line, ``#`` starts a comment)::

    field   32003 | QQ
    vars    a b c d
    seed    INT
    limit   NAME INT                      # max_basis, max_degree, max_saturation
    ideal   NAME = POLY, POLY, ...
    module  NAME = quotient IDEAL
    module  NAME = coker [POLY, ...] [POLY, ...] ... [twists INT ...]
    sop     NAME = POLY, POLY, ...
    task    KIND ARG... [KEY VALUE]...

Task kinds and their positional arguments::

    gb IDEAL [order grevlex|lex]
    invariants MODULE SOP [grid N]
    ptype MODULE [sop SOP] [grid N]
    cohomology MODULE
    bound-sweep MODULE [count N] [degrees D | D,D,.. | LO-HI] [deep T] [lower N]
    filter-regular MODULE SOP
    decompose-monomial IDEAL
    oracle-suite [splits N]

Each coker bracket is one column of the presentation matrix.
"""

import hashlib
import re
from dataclasses import dataclass, field

from .field import FieldCtx
from .groebner import Ideal
from .idealops import PresentedModule
from .ring import ParseError, RingCtx

TASK_KINDS = {
    "gb": (["ideal"], {"order"}),
    "invariants": (["module", "sop"], {"grid"}),
    "ptype": (["module"], {"sop", "grid"}),
    "cohomology": (["module"], set()),
    "bound-sweep": (["module"], {"count", "degrees", "deep", "lower"}),
    "filter-regular": (["module", "sop"], set()),
    "decompose-monomial": (["ideal"], set()),
    "oracle-suite": ([], {"splits"}),
}
LIMIT_NAMES = {"max_basis", "max_degree", "max_saturation"}
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class SessionError(ValueError):
    def __init__(self, message, line, column=1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass
class Task:
    kind: str
    args: list
    options: dict
    line: int

    def text(self):
        opts = " ".join(f"{k} {v}" for k, v in sorted(self.options.items()))
        return " ".join(["task", self.kind] + self.args + ([opts] if opts else []))


@dataclass
class Session:
    field_spec: str = "32003"
    variables: list = field(default_factory=list)
    seed: int = 0
    limits: dict = field(default_factory=dict)
    ideals: dict = field(default_factory=dict)
    modules: dict = field(default_factory=dict)
    sops: dict = field(default_factory=dict)
    tasks: list = field(default_factory=list)
    _ring: object = None

    @property
    def ring(self):
        if self._ring is None:
            fld = FieldCtx(0 if self.field_spec == "QQ" else int(self.field_spec))
            self._ring = RingCtx(self.variables, fld)
        return self._ring

    def normalized(self):
        """Canonical text: re-parsing it gives the same session."""
        lines = [f"field {self.field_spec}", "vars " + " ".join(self.variables), f"seed {self.seed}"]
        lines += [f"limit {k} {v}" for k, v in sorted(self.limits.items())]
        lines += [f"ideal {n} = " + ", ".join(str(g) for g in I.generators) for n, I in self.ideals.items()]
        for n, (kind, payload, _) in self.modules.items():
            lines.append(f"module {n} = {kind} {payload}")
        lines += [f"sop {n} = " + ", ".join(str(f) for f in fs) for n, fs in self.sops.items()]
        lines += [t.text() for t in self.tasks]
        return "\n".join(lines) + "\n"

    def digest(self):
        return hashlib.sha256(self.normalized().encode()).hexdigest()

    def module(self, name):
        return self.modules[name][2]


def _split_top(text, sep=","):
    """Split on ``sep`` outside parentheses."""
    out, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur))
    return out


def _parse_polys(session, text, lineno, col):
    ring = session.ring
    out = []
    offset = col
    for raw in _split_top(text):
        piece = raw.strip()
        start = offset + len(raw) - len(raw.lstrip())
        if not piece:
            raise SessionError("empty polynomial", lineno, start)
        try:
            out.append(ring.parse(piece))
        except ParseError as exc:
            raise SessionError(exc.message, lineno, start + (exc.position or 0)) from None
        offset += len(raw) + 1
    return out


def _name(token, lineno, col):
    if not _NAME.match(token):
        raise SessionError(f"bad name {token!r}", lineno, col)
    return token


def _assignment(rest, lineno, col):
    if "=" not in rest:
        raise SessionError("expected NAME = ...", lineno, col)
    name, _, body = rest.partition("=")
    bcol = col + len(name) + 1 + len(body) - len(body.lstrip())
    return _name(name.strip(), lineno, col), body.strip(), bcol


def _parse_coker(session, body, lineno, col):
    twists = None
    m = re.search(r"\btwists\b(.*)$", body)
    if m:
        try:
            twists = [int(t) for t in m.group(1).split()]
        except ValueError:
            raise SessionError("twists must be integers", lineno, col + m.start()) from None
        body = body[: m.start()]
    columns = []
    for cm in re.finditer(r"\[([^\]]*)\]", body):
        columns.append(_parse_polys(session, cm.group(1), lineno, col + cm.start() + 1))
    leftover = re.sub(r"\[[^\]]*\]", "", body).strip()
    if leftover:
        raise SessionError(f"unexpected text {leftover!r} in coker", lineno, col)
    if not columns and twists is None:
        raise SessionError("coker needs columns or twists", lineno, col)
    rank = len(twists) if twists is not None else len(columns[0])
    if any(len(c) != rank for c in columns):
        raise SessionError("all columns need one entry per generator", lineno, col)
    twists = twists if twists is not None else [0] * rank
    try:
        M = PresentedModule.coker(session.ring, columns, twists)
    except ValueError as exc:
        raise SessionError(str(exc), lineno, col) from None
    payload = " ".join("[" + ", ".join(str(f) for f in c) + "]" for c in columns)
    payload = (payload + " " if payload else "") + "twists " + " ".join(map(str, twists))
    return M, payload


def parse_session(text):
    s = Session()
    seen_vars = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        indent = len(line) - len(line.lstrip())
        line = line.strip()
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        col = indent + len(head) + 2
        if head == "field":
            if seen_vars:
                raise SessionError("field must come before vars", lineno, 1)
            if rest != "QQ":
                try:
                    FieldCtx(int(rest))
                except ValueError as exc:
                    raise SessionError(f"bad field: {exc}", lineno, col) from None
                rest = str(int(rest))
            s.field_spec = rest
        elif head == "vars":
            if seen_vars:
                raise SessionError("vars declared twice", lineno, 1)
            names = rest.replace(",", " ").split()
            if not names:
                raise SessionError("no variables", lineno, col)
            for v in names:
                _name(v, lineno, col)
            s.variables = names
            seen_vars = True
        elif head == "seed":
            try:
                s.seed = int(rest)
            except ValueError:
                raise SessionError("seed must be an integer", lineno, col) from None
        elif head == "limit":
            parts = rest.split()
            if len(parts) != 2 or parts[0] not in LIMIT_NAMES or not parts[1].isdigit():
                raise SessionError(f"expected: limit {{{'|'.join(sorted(LIMIT_NAMES))}}} INT", lineno, col)
            s.limits[parts[0]] = int(parts[1])
        elif head in ("ideal", "module", "sop"):
            if not seen_vars:
                raise SessionError("declare vars first", lineno, 1)
            name, body, bcol = _assignment(rest, lineno, col)
            if name in s.ideals or name in s.modules or name in s.sops:
                raise SessionError(f"{name} already declared", lineno, col)
            if head == "ideal":
                polys = _parse_polys(s, body, lineno, bcol)
                s.ideals[name] = Ideal(s.ring, polys)
            elif head == "sop":
                s.sops[name] = _parse_polys(s, body, lineno, bcol)
            else:
                kind, _, payload = body.partition(" ")
                payload = payload.strip()
                if kind == "quotient":
                    if payload not in s.ideals:
                        raise SessionError(f"unknown ideal {payload!r}", lineno, bcol)
                    I = s.ideals[payload]
                    if not I.homogeneous:
                        raise SessionError(f"ideal {payload} is not homogeneous", lineno, bcol)
                    s.modules[name] = ("quotient", payload, PresentedModule.cyclic(I, name=name))
                elif kind == "coker":
                    M, norm = _parse_coker(s, payload, lineno, bcol + len(kind) + 1)
                    M.name = name
                    s.modules[name] = ("coker", norm, M)
                else:
                    raise SessionError("module must be 'quotient IDEAL' or 'coker ...'", lineno, bcol)
        elif head == "task":
            s.tasks.append(_parse_task(s, rest, lineno, col))
        else:
            raise SessionError(f"unknown statement {head!r}", lineno, indent + 1)
    if not seen_vars:
        raise SessionError("no vars declaration", max(1, len(text.splitlines())), 1)
    return s


def _parse_task(s, rest, lineno, col):
    toks = [(m.group(), col + m.start()) for m in re.finditer(r"\S+", rest)]
    words = [t for t, _ in toks]
    if not words or words[0] not in TASK_KINDS:
        raise SessionError(f"unknown task {words[0] if words else ''!r}; expected one of {sorted(TASK_KINDS)}", lineno, col)
    kind = words[0]
    positional, optional = TASK_KINDS[kind]
    args = words[1:1 + len(positional)]
    if len(args) < len(positional):
        raise SessionError(f"task {kind} needs {' '.join(positional).upper()}", lineno, col)
    for (a, acol), role in zip(toks[1:], positional):
        table = {"ideal": s.ideals, "module": s.modules, "sop": s.sops}[role]
        if a not in table:
            raise SessionError(f"unknown {role} {a!r}", lineno, acol)
    tail = toks[1 + len(positional):]
    if len(tail) % 2:
        raise SessionError("options come in KEY VALUE pairs", lineno, tail[-1][1])
    options = {}
    for (k, kcol), (v, vcol) in zip(tail[::2], tail[1::2]):
        if k not in optional:
            raise SessionError(f"task {kind} has no option {k!r}", lineno, kcol)
        if k == "sop" and v not in s.sops:
            raise SessionError(f"unknown sop {v!r}", lineno, vcol)
        if k in ("count", "grid", "deep", "lower", "splits") and not v.isdigit():
            raise SessionError(f"{k} must be a nonnegative integer", lineno, vcol)
        if k == "order" and v not in ("grevlex", "lex"):
            raise SessionError("order must be grevlex or lex", lineno, vcol)
        if k == "degrees" and not re.fullmatch(r"\d+(,\d+)*|\d+-\d+", v):
            raise SessionError("degrees must be D, D,D,... or LO-HI", lineno, vcol)
        options[k] = v
    return Task(kind, args, options, lineno)


def load_session(path):
    with open(path, encoding="utf-8") as fh:
        return parse_session(fh.read())
