"""Polynomials over GF(p) in x_1..x_n, y_1..y_n and an optional elimination variable t.

Monomials are exponent tuples indexed x_1..x_n, y_1..y_n, then t. Variables
are ordered x_1 > ... > x_n > y_1 > ... > y_n; under the elimination order
t is larger than every monomial free of t.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

from .errors import InputError

ORDERS = ("degrevlex", "lex", "elim")
MAX_CHAR = 1 << 16


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


def mono_mul(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: tuple, b: tuple) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: tuple, b: tuple) -> tuple:
    return tuple(x if x > y else y for x, y in zip(a, b))


def mono_coprime(a: tuple, b: tuple) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


def _degrevlex(m: tuple):
    return (sum(m), tuple(-e for e in reversed(m)))


def _lex(m: tuple):
    return m


def _elim(m: tuple):
    return (m[-1], _degrevlex(m[:-1]))


@dataclass(frozen=True)
class Ring:
    """GF(p)[x_1..x_n, y_1..y_n(, t)] with a fixed monomial order."""

    n: int
    p: int = 2
    order: str = "degrevlex"
    with_t: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise InputError("need n >= 1 variables of each kind")
        if not is_prime(self.p) or self.p >= MAX_CHAR:
            raise InputError(f"characteristic must be a prime below {MAX_CHAR}, got {self.p}")
        if self.order not in ORDERS:
            raise InputError(f"unknown monomial order {self.order!r}")
        if self.order == "elim" and not self.with_t:
            raise InputError("the elimination order needs the variable t")

    @property
    def nvars(self) -> int:
        return 2 * self.n + (1 if self.with_t else 0)

    @cached_property
    def key(self):
        return {"degrevlex": _degrevlex, "lex": _lex, "elim": _elim}[self.order]

    @cached_property
    def names(self) -> list[str]:
        out = [f"x{i}" for i in range(1, self.n + 1)] + [f"y{i}" for i in range(1, self.n + 1)]
        if self.with_t:
            out.append("t")
        return out

    @cached_property
    def index(self) -> dict[str, int]:
        return {name: k for k, name in enumerate(self.names)}

    def with_order(self, order: str, with_t: Optional[bool] = None) -> "Ring":
        return Ring(self.n, self.p, order, self.with_t if with_t is None else with_t)

    # constructors
    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return self.const(1)

    def const(self, c: int) -> "Poly":
        c %= self.p
        return Poly(self, {(0,) * self.nvars: c} if c else {})

    def monomial(self, exps, coeff: int = 1) -> "Poly":
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise InputError(f"monomial needs {self.nvars} exponents")
        coeff %= self.p
        return Poly(self, {exps: coeff} if coeff else {})

    def var(self, name: str) -> "Poly":
        if name not in self.index:
            raise InputError(f"unknown variable {name!r} (ring has {', '.join(self.names)})")
        e = [0] * self.nvars
        e[self.index[name]] = 1
        return self.monomial(e)

    def x(self, i: int) -> "Poly":
        return self.var(f"x{i}")

    def y(self, i: int) -> "Poly":
        return self.var(f"y{i}")

    def t(self) -> "Poly":
        return self.var("t")

    def delta(self, i: int, j: int) -> "Poly":
        """x_i y_j - x_j y_i."""
        return self.x(i) * self.y(j) - self.x(j) * self.y(i)

    def convert(self, f: "Poly") -> "Poly":
        """Re-home ``f`` in this ring (adding or dropping a zero t exponent)."""
        if f.ring.n != self.n or f.ring.p != self.p:
            raise InputError("rings differ in n or characteristic")
        if f.ring.with_t == self.with_t:
            return Poly(self, dict(f.terms))
        if self.with_t:
            return Poly(self, {m + (0,): c for m, c in f.terms.items()})
        if any(m[-1] for m in f.terms):
            raise InputError("cannot drop t from a polynomial that uses it")
        return Poly(self, {m[:-1]: c for m, c in f.terms.items()})

    def parse(self, text: str) -> "Poly":
        return parse_poly(self, text)


class Poly:
    """Immutable polynomial: ``terms`` maps exponent tuples to nonzero residues."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        self.terms = terms

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.ring != self.ring:
                other = self.ring.convert(other)
            return other
        if isinstance(other, int):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Poly(self.ring, add_terms(self.terms, other.terms, 1, self.ring.p))

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        return Poly(self.ring, {m: (p - c) % p for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Poly(self.ring, add_terms(self.terms, other.terms, self.ring.p - 1, self.ring.p))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Poly(self.ring, mul_terms(self.terms, other.terms, self.ring.p))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> list[tuple[tuple, int]]:
        key = self.ring.key
        return sorted(self.terms.items(), key=lambda mc: key(mc[0]), reverse=True)

    def lm(self) -> tuple:
        return max(self.terms, key=self.ring.key)

    def lc(self) -> int:
        return self.terms[self.lm()]

    def monic(self) -> "Poly":
        if not self.terms:
            return self
        inv = pow(self.lc(), -1, self.ring.p)
        return self.scale(inv)

    def scale(self, c: int) -> "Poly":
        p = self.ring.p
        c %= p
        if not c:
            return self.ring.zero()
        return Poly(self.ring, {m: v * c % p for m, v in self.terms.items()})

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def multidegrees(self) -> set[tuple]:
        """Z^n degrees of the terms, with deg x_i = deg y_i = e_i (t ignored)."""
        n = self.ring.n
        return {tuple(m[i] + m[n + i] for i in range(n)) for m in self.terms}

    def multidegree(self) -> tuple:
        degs = self.multidegrees()
        if len(degs) != 1:
            raise InputError(f"{self} is not multihomogeneous")
        return degs.pop()

    def uses_t(self) -> bool:
        return self.ring.with_t and any(m[-1] for m in self.terms)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"


def add_terms(a: dict, b: dict, cb: int, p: int) -> dict:
    """a + cb*b over GF(p)."""
    out = dict(a)
    for m, c in b.items():
        v = (out.get(m, 0) + cb * c) % p
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


def mul_terms(a: dict, b: dict, p: int) -> dict:
    out: dict = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            v = (out.get(m, 0) + ca * cb) % p
            if v:
                out[m] = v
            else:
                out.pop(m, None)
    return out


# -- text format ----------------------------------------------------------------


def _format_mono(ring: Ring, m: tuple) -> str:
    parts = []
    for name, e in zip(ring.names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_poly(f: Poly) -> str:
    """Terms in decreasing order; coefficients above p/2 print as negatives."""
    if not f.terms:
        return "0"
    p = f.ring.p
    out = []
    for k, (m, c) in enumerate(f.sorted_terms()):
        neg = p > 2 and c > p // 2
        mag = p - c if neg else c
        mono = _format_mono(f.ring, m)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if k == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


_TERM_SPLIT = re.compile(r"\s*([+-])\s*")
_FACTOR = re.compile(r"^(?:(\d+)|([xy][1-9]\d*|t)(?:\^(\d+))?)$")


def parse_poly(ring: Ring, text: str) -> Poly:
    """Parse e.g. ``x1*y2 - x2*y1`` or ``3*x1^2*y3 + t - 1``."""
    s = text.strip()
    if not s:
        raise InputError("empty polynomial")
    if s[0] not in "+-":
        s = "+" + s
    pieces = _TERM_SPLIT.split(s)
    # pieces: ['', sign, term, sign, term, ...]
    if pieces[0] != "" or len(pieces) % 2 == 0:
        raise InputError(f"cannot parse polynomial {text!r}")
    terms: dict = {}
    p = ring.p
    for sign, term in zip(pieces[1::2], pieces[2::2]):
        if not term:
            raise InputError(f"dangling sign in {text!r}")
        coeff = 1
        exps = [0] * ring.nvars
        for factor in term.split("*"):
            factor = factor.strip()
            mt = _FACTOR.match(factor)
            if not mt:
                raise InputError(f"bad factor {factor!r} in {text!r}")
            if mt.group(1) is not None:
                coeff *= int(mt.group(1))
                continue
            name = mt.group(2)
            if name not in ring.index:
                raise InputError(f"variable {name} outside ring with n = {ring.n}")
            exps[ring.index[name]] += int(mt.group(3) or 1)
        if sign == "-":
            coeff = -coeff
        m = tuple(exps)
        v = (terms.get(m, 0) + coeff) % p
        if v:
            terms[m] = v
        else:
            terms.pop(m, None)
    return Poly(ring, terms)


@dataclass
class IdealFile:
    ring: Ring
    gens: list[Poly]


def parse_ideal_file(text: str, order: str = "degrevlex", with_t: bool = False) -> IdealFile:
    """``char <p>`` and ``n <count>`` headers, then one polynomial per line."""
    p = None
    n = None
    body = []
    for k, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head = line.split()
        if head[0] in ("char", "n") and len(head) == 2 and not body:
            try:
                value = int(head[1])
            except ValueError:
                raise InputError(f"bad {head[0]} value {head[1]!r}", line=k) from None
            if head[0] == "char":
                p = value
            else:
                n = value
            continue
        body.append((k, line))
    if p is None:
        raise InputError("missing 'char <p>' header")
    if n is None:
        raise InputError("missing 'n <count>' header")
    try:
        ring = Ring(n, p, order, with_t)
    except InputError as exc:
        raise InputError(str(exc)) from None
    gens = []
    for k, line in body:
        try:
            gens.append(ring.parse(line))
        except InputError as exc:
            raise InputError(str(exc), line=k) from None
    return IdealFile(ring, gens)


def format_ideal_file(ring: Ring, gens: Iterable[Poly]) -> str:
    lines = [f"char {ring.p}", f"n {ring.n}"]
    lines.extend(str(g) for g in gens)
    return "\n".join(lines) + "\n"
