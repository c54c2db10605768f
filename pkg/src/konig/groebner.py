"""Buchberger's algorithm over GF(p) and the ideal operations built on it.

Pairs are taken lowest lcm first (normal strategy). Pairs with coprime
leading monomials are skipped, as are pairs whose lcm is divisible by a third
leading monomial whose own pairs with both ends are already treated.
"""

from __future__ import annotations

import heapq
from typing import Iterable, Sequence, Union

from .errors import InputError, SizeError
from .poly import Poly, Ring, mono_coprime, mono_div, mono_divides, mono_lcm

DEFAULT_PAIR_BUDGET = 100_000


def _lm(f: dict, key) -> tuple:
    return max(f, key=key)


def _monic(f: dict, key, p: int) -> dict:
    inv = pow(f[_lm(f, key)], -1, p)
    return {m: c * inv % p for m, c in f.items()}


def _reduce(f: dict, basis: Sequence[tuple[tuple, dict]], key, p: int) -> dict:
    """Full reduction of ``f`` by monic ``basis`` given as (leading monomial, terms)."""
    f = dict(f)
    rem = {}
    while f:
        m = max(f, key=key)
        c = f[m]
        for lm, g in basis:
            if all(a <= b for a, b in zip(lm, m)):
                q = tuple(a - b for a, b in zip(m, lm))
                neg = p - c
                for gm, gc in g.items():
                    mm = tuple(a + b for a, b in zip(gm, q))
                    v = (f.get(mm, 0) + neg * gc) % p
                    if v:
                        f[mm] = v
                    else:
                        del f[mm]
                break
        else:
            rem[m] = c
            del f[m]
    return rem


def _spoly(f: dict, lf: tuple, g: dict, lg: tuple, p: int) -> dict:
    """S-polynomial of two monic polynomials."""
    lcm = mono_lcm(lf, lg)
    qf = mono_div(lcm, lf)
    qg = mono_div(lcm, lg)
    out = {}
    for m, c in f.items():
        out[tuple(a + b for a, b in zip(m, qf))] = c
    for m, c in g.items():
        mm = tuple(a + b for a, b in zip(m, qg))
        v = (out.get(mm, 0) - c) % p
        if v:
            out[mm] = v
        else:
            out.pop(mm, None)
    return out


def buchberger(ring: Ring, gens: Iterable[dict], budget: int = DEFAULT_PAIR_BUDGET) -> list[dict]:
    """A (non-reduced) Gröbner basis, as monic term dicts."""
    key, p = ring.key, ring.p
    basis: list[tuple[tuple, dict]] = []
    heap: list = []
    pending: set = set()

    def add(h: dict):
        h = _monic(h, key, p)
        lm = _lm(h, key)
        k = len(basis)
        basis.append((lm, h))
        for i in range(k):
            li = basis[i][0]
            if mono_coprime(li, lm):
                continue
            lcm = mono_lcm(li, lm)
            heapq.heappush(heap, (key(lcm), i, k))
            pending.add((i, k))

    for g in gens:
        if g:
            h = _reduce(g, basis, key, p)
            if h:
                add(h)
    processed = 0
    while heap:
        _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        processed += 1
        if processed > budget:
            raise SizeError(f"Gröbner computation exceeded {budget} S-pairs; raise the budget")
        li, fi = basis[i]
        lj, fj = basis[j]
        lcm = mono_lcm(li, lj)
        chain = False
        for k, (lk, _) in enumerate(basis):
            if k == i or k == j or not mono_divides(lk, lcm):
                continue
            if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
                chain = True
                break
        if chain:
            continue
        h = _reduce(_spoly(fi, li, fj, lj, p), basis, key, p)
        if h:
            add(h)
    return [g for _, g in basis]


def reduce_basis(ring: Ring, basis: list[dict]) -> list[dict]:
    """Minimal, tail-reduced, monic; sorted by decreasing leading monomial."""
    key, p = ring.key, ring.p
    items = sorted(((_lm(g, key), g) for g in basis), key=lambda t: key(t[0]))
    minimal = []
    for lm, g in items:
        if any(mono_divides(other, lm) for other, _ in minimal):
            continue
        minimal.append((lm, g))
    out = []
    for k, (lm, g) in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1:]
        out.append((lm, _monic(_reduce(g, others, key, p), key, p)))
    out.sort(key=lambda t: key(t[0]), reverse=True)
    return [g for _, g in out]


def _as_terms(ring: Ring, polys) -> list[dict]:
    out = []
    for f in polys:
        if not isinstance(f, Poly):
            raise InputError(f"expected a polynomial, got {f!r}")
        if f.ring.n != ring.n or f.ring.p != ring.p:
            raise InputError("polynomials from different rings")
        out.append(ring.convert(f).terms)
    return out


def groebner_basis(ring: Ring, gens: Iterable[Poly], budget: int = DEFAULT_PAIR_BUDGET) -> list[Poly]:
    """Reduced Gröbner basis of (gens) in ``ring``'s order; [] for the zero ideal."""
    terms = buchberger(ring, _as_terms(ring, gens), budget)
    return [Poly(ring, g) for g in reduce_basis(ring, terms)]


def normal_form(f: Poly, gb: Sequence[Poly]) -> Poly:
    ring = gb[0].ring if gb else f.ring
    f = ring.convert(f)
    basis = [(g.lm(), g.terms) for g in gb]
    return Poly(ring, _reduce(f.terms, basis, ring.key, ring.p))


def exact_divide(h: Poly, f: Poly) -> Poly:
    """h / f, raising InputError unless f divides h."""
    ring = h.ring
    key, p = ring.key, ring.p
    if not f:
        raise InputError("division by zero polynomial")
    lf = f.lm()
    inv = pow(f.terms[lf], -1, p)
    rest = dict(h.terms)
    q = {}
    while rest:
        m = max(rest, key=key)
        if not mono_divides(lf, m):
            raise InputError(f"{f} does not divide {h}")
        c = rest[m] * inv % p
        qm = mono_div(m, lf)
        q[qm] = c
        for fm, fc in f.terms.items():
            mm = tuple(a + b for a, b in zip(fm, qm))
            v = (rest.get(mm, 0) - c * fc) % p
            if v:
                rest[mm] = v
            else:
                rest.pop(mm, None)
    return Poly(ring, q)


class Ideal:
    """An ideal of GF(p)[x, y] given by generators; the reduced basis is cached."""

    def __init__(self, ring: Ring, gens: Iterable[Poly] = (), budget: int = DEFAULT_PAIR_BUDGET):
        if ring.with_t:
            raise InputError("ideals live in the ring without t")
        self.ring = ring
        self.gens = [g for g in (ring.convert(f) for f in gens) if g]
        self.budget = budget
        self._gb = None

    @classmethod
    def unit(cls, ring: Ring) -> "Ideal":
        return cls(ring, [ring.one()])

    def gb(self) -> list[Poly]:
        if self._gb is None:
            self._gb = groebner_basis(self.ring, self.gens, self.budget)
        return self._gb

    def is_unit(self) -> bool:
        gb = self.gb()
        return len(gb) == 1 and gb[0] == self.ring.one()

    def normal_form(self, f: Poly) -> Poly:
        return normal_form(self.ring.convert(f), self.gb())

    def contains(self, f: Poly) -> bool:
        return not self.normal_form(f)

    __contains__ = contains

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.gens)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Ideal):
            return NotImplemented
        if (self.ring.n, self.ring.p) != (other.ring.n, other.ring.p):
            return False
        if self.ring.order == other.ring.order:
            return [g.terms for g in self.gb()] == [g.terms for g in other.gb()]
        return self.contains_ideal(other) and other.contains_ideal(self)

    __hash__ = None

    def __add__(self, other: Union["Ideal", Iterable[Poly]]) -> "Ideal":
        gens = other.gens if isinstance(other, Ideal) else list(other)
        return Ideal(self.ring, self.gens + list(gens), self.budget)

    def intersect(self, other: "Ideal") -> "Ideal":
        return intersect(self, other)

    def colon(self, f: Union[Poly, "Ideal"]) -> "Ideal":
        return colon(self, f)

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.gens) + ")"


def ideal_member(f: Poly, ideal: Ideal) -> bool:
    return ideal.contains(f)


def ideal_equal(a: Ideal, b: Ideal) -> bool:
    return a == b


def intersect(a: Ideal, b: Ideal) -> Ideal:
    """a ∩ b via t*a + (1 - t)*b, eliminating t."""
    if (a.ring.n, a.ring.p) != (b.ring.n, b.ring.p):
        raise InputError("ideals from different rings")
    if not a.gens:
        return Ideal(a.ring, [], a.budget)
    if not b.gens:
        return Ideal(b.ring, [], b.budget)
    big = Ring(a.ring.n, a.ring.p, "elim", True)
    t = big.t()
    gens = [t * big.convert(f) for f in a.gens] + [(1 - t) * big.convert(g) for g in b.gens]
    gb = groebner_basis(big, gens, max(a.budget, b.budget))
    kept = [a.ring.convert(g) for g in gb if not g.uses_t()]
    return Ideal(a.ring, kept, a.budget)


def intersect_all(ideals: Sequence[Ideal]) -> Ideal:
    if not ideals:
        raise InputError("empty intersection")
    out = ideals[0]
    for other in ideals[1:]:
        out = intersect(out, other)
    return out


def colon(a: Ideal, f: Union[Poly, Ideal]) -> Ideal:
    """(a : f) = (a ∩ (f)) / f; for an ideal, the intersection over its generators."""
    if isinstance(f, Ideal):
        if not f.gens:
            return Ideal.unit(a.ring)
        return intersect_all([colon(a, g) for g in f.gens])
    f = a.ring.convert(f)
    if not f:
        return Ideal.unit(a.ring)
    meet = intersect(a, Ideal(a.ring, [f], a.budget))
    return Ideal(a.ring, [exact_divide(h, f) for h in meet.gb()], a.budget)


def leading_monomials(ideal: Ideal) -> list[tuple]:
    return [g.lm() for g in ideal.gb()]


def krull_dimension(ideal: Ideal) -> int:
    """dim R/I: the largest set of variables containing no leading monomial's support.

    Exhaustive over variable subsets, so meant for at most ~12 variables.
    """
    ring = ideal.ring
    nv = ring.nvars
    if ideal.is_unit():
        return -1
    supports = []
    for m in leading_monomials(ideal):
        mask = 0
        for k, e in enumerate(m):
            if e:
                mask |= 1 << k
        supports.append(mask)
    best = 0
    for u in range(1 << nv):
        size = u.bit_count()
        if size > best and all(s & ~u for s in supports):
            best = size
    return best


def height(ideal: Ideal) -> int:
    return ideal.ring.nvars - krull_dimension(ideal)
