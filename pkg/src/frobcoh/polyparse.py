"""Parsing polynomial expressions and problem files.

Expression grammar (EBNF)::

    expr   = term { ("+" | "-") term } ;
    term   = unary { ["*"] unary } ;      (* juxtaposition multiplies *)
    unary  = ("-" | "+") unary | power ;
    power  = atom [ "^" INT ] ;
    atom   = INT | IDENT | "(" expr ")" ;

``IDENT`` must be one of the declared variable names exactly; ``vz`` is an
error unless ``vz`` itself is declared.  A juxtaposed factor may not start
with a sign, so ``x -y`` is a difference.

Problem files are ``key = value`` lines; ``#`` starts a comment::

    p = 5
    vars = X0 X1 X2 X3 Y
    q = 1                  # or "auto" for dim X
    algorithm = auto       # auto | general | complete_intersection (ci)
    poly = X1^2 - X0 X2    # one line per generator
    affine_h = -x^3 - x - 1      # optional hyperelliptic model
    affine_k = -2x^5 - 3x^2 + 2x - 2
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import InputError, ParseError, UsageError
from .gfp import PrimeField
from .polyring import Polynomial, PolyRing, poly_degree_check

__all__ = ["PolySource", "parse_poly", "parse_problem", "ProblemFile", "read_problem_file",
           "affine_model"]

_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(\S))")
MAX_EXPONENT = 10**6


@dataclass(frozen=True)
class PolySource:
    text: str
    variables: tuple
    p: int


def _tokenize(text):
    out = []
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN.match(text, pos)
        if m is None:
            break  # only whitespace left
        if m.group(1) is not None:
            out.append(("INT", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            out.append(("IDENT", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*^()":
                raise ParseError(f"unexpected character {ch!r}", m.start(3))
            out.append((ch, ch, m.start(3)))
        pos = m.end()
    out.append(("EOF", "", n))
    return out


class _Parser:
    def __init__(self, text, ring: PolyRing):
        self.toks = _tokenize(text)
        self.i = 0
        self.ring = ring
        self.vars = {name: k for k, name in enumerate(ring.names)}

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def parse(self) -> Polynomial:
        if self.peek()[0] == "EOF":
            raise ParseError("empty expression", 0)
        value = self.expr()
        kind, text, pos = self.peek()
        if kind != "EOF":
            msg = "unbalanced ')'" if kind == ")" else f"unexpected {text!r}"
            raise ParseError(msg, pos)
        return value

    def expr(self):
        value = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while True:
            kind = self.peek()[0]
            if kind == "*":
                self.take()
                value = value * self.unary()
            elif kind in ("INT", "IDENT", "("):
                value = value * self.power()
            else:
                return value

    def unary(self):
        kind = self.peek()[0]
        if kind == "-":
            self.take()
            return -self.unary()
        if kind == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            kind, text, pos = self.take()
            if kind != "INT":
                raise ParseError("exponent must be a nonnegative integer literal", pos)
            e = int(text)
            if e > MAX_EXPONENT:
                raise ParseError(f"exponent {e} is too large", pos)
            return base ** e
        return base

    def atom(self):
        kind, text, pos = self.take()
        if kind == "INT":
            return self.ring.constant(int(text))
        if kind == "IDENT":
            if text not in self.vars:
                raise ParseError(f"unknown identifier {text!r}", pos)
            return self.ring.var(self.vars[text])
        if kind == "(":
            value = self.expr()
            k2, t2, p2 = self.take()
            if k2 != ")":
                raise ParseError(f"expected ')' to close '(' at position {pos}", p2)
            return value
        if kind == "EOF":
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected {text!r}", pos)


def parse_poly(src, variables=None, p=None) -> Polynomial:
    """Parse ``src`` (a :class:`PolySource` or a string) into a Polynomial.

    ``variables`` may instead be a :class:`PolyRing`, in which case ``p`` is
    taken from it.
    """
    if isinstance(src, PolySource):
        text, variables, p = src.text, src.variables, src.p
    else:
        text = src
    if isinstance(variables, PolyRing):
        ring = variables
    else:
        if variables is None or p is None:
            raise UsageError("need the variable names and p")
        names = tuple(variables.split()) if isinstance(variables, str) else tuple(variables)
        for name in names:
            if not _IDENT.fullmatch(name):
                raise InputError(f"invalid variable name {name!r}")
        ring = PolyRing(len(names), p, names)
    return _Parser(text, ring).parse()


# --------------------------------------------------------------------------
# problem files


@dataclass(frozen=True)
class ProblemFile:
    """Raw contents of a problem file, before the modulus is fixed."""

    p: int
    variables: tuple
    q: str
    algorithm: str
    polys: tuple
    affine_h: str | None = None
    affine_k: str | None = None

    def ring(self, p: int | None = None) -> PolyRing:
        return PolyRing(len(self.variables), self.p if p is None else p, self.variables)


_ALGORITHM_ALIASES = {"auto": "auto", "general": "general", "complete_intersection":
                      "complete_intersection", "ci": "complete_intersection"}


def read_problem_file(text: str) -> ProblemFile:
    """Split a problem file into its fields; no polynomial is parsed yet."""
    fields = {}
    polys = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise InputError(f"line {lineno}: expected 'key = value'")
        key, value = (s.strip() for s in line.split("=", 1))
        if key == "poly":
            polys.append(value)
        elif key in ("p", "vars", "q", "algorithm", "affine_h", "affine_k"):
            if key in fields:
                raise InputError(f"line {lineno}: duplicate key {key!r}")
            fields[key] = value
        else:
            raise InputError(f"line {lineno}: unknown key {key!r}")
    for key in ("p", "vars", "q"):
        if key not in fields:
            raise InputError(f"missing key {key!r}")
    if not polys:
        raise InputError("missing key 'poly' (need at least one generator)")
    try:
        p = int(fields["p"])
    except ValueError:
        raise InputError(f"p must be an integer, got {fields['p']!r}") from None
    names = tuple(fields["vars"].split())
    if len(set(names)) != len(names):
        raise InputError("variable names must be distinct")
    for name in names:
        if not _IDENT.fullmatch(name):
            raise InputError(f"invalid variable name {name!r}")
    alg = fields.get("algorithm", "auto")
    if alg not in _ALGORITHM_ALIASES:
        raise InputError(f"unknown algorithm {alg!r}")
    return ProblemFile(p, names, fields["q"], _ALGORITHM_ALIASES[alg], tuple(polys),
                       fields.get("affine_h"), fields.get("affine_k"))


def _check_homogeneous(f: Polynomial, index: int):
    info = poly_degree_check(f)
    if info.kind == "zero":
        raise InputError(f"generator {index} is zero")
    if info.kind == "inhomogeneous":
        top = f.total_degree()
        e, _ = min(((e, c) for e, c in f.terms.items() if sum(e) != top),
                   key=lambda t: (sum(t[0]), t[0]))
        term = f.ring.monomial(e).to_string()
        raise InputError(f"generator {index} is not homogeneous: term {term} has degree "
                         f"{sum(e)}, expected {top}")


def parse_problem(text: str, p: int | None = None, algorithm: str | None = None):
    """Parse a problem file into a :class:`~frobcoh.frobenius.ProblemSpec`.

    ``p`` and ``algorithm`` override the values in the file.
    """
    from .frobenius import ProblemSpec
    from .koszul import krull_dimension

    pf = read_problem_file(text)
    p = pf.p if p is None else p
    try:
        PrimeField(p)
    except UsageError:
        raise InputError(f"p must be prime, got {p}") from None
    ring = pf.ring(p)
    gens = []
    for i, s in enumerate(pf.polys, 1):
        f = parse_poly(s, ring)
        _check_homogeneous(f, i)
        gens.append(f)
    r = ring.nvars - 1
    if pf.q == "auto":
        q = krull_dimension(gens) - 1
    else:
        try:
            q = int(pf.q)
        except ValueError:
            raise InputError(f"q must be an integer or 'auto', got {pf.q!r}") from None
    alg = pf.algorithm if algorithm is None else _ALGORITHM_ALIASES.get(algorithm, algorithm)
    return ProblemSpec(p, r, tuple(gens), q, alg)


def affine_model(pf: ProblemFile, p: int):
    """Coefficient lists ``(h, k)`` of the optional hyperelliptic model, or ``None``."""
    if pf.affine_h is None and pf.affine_k is None:
        return None
    ring = PolyRing(1, p, ("x",))

    def coeffs(s):
        if s is None:
            return []
        f = parse_poly(s, ring)
        deg = f.total_degree()
        return [f.coeff((i,)) for i in range(deg + 1)]
    return coeffs(pf.affine_h), coeffs(pf.affine_k)
