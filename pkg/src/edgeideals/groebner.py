"""Buchberger's algorithm with the Gebauer-Moeller criteria, normal forms,
ideal equality, colon ideals and elimination."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .ideals import IdealGenerators
from .ring import Polynomial, RingError, RingSpec, _axpy


class GroebnerError(RuntimeError):
    """Internal inconsistency (should be mathematically impossible)."""


@dataclass(frozen=True)
class GroebnerBasis:
    ring: RingSpec
    basis: tuple
    source: object = None

    @property
    def leading_monomials(self) -> tuple:
        return tuple(f.leading_monomial() for f in self.basis)

    def normal_form(self, f: Polynomial) -> Polynomial:
        if f.ring != self.ring:
            raise RingError("polynomial and basis live in different rings/orders")
        rem = _reduce_full(f.terms, [g.terms for g in self.basis], self.leading_monomials, self.ring)
        return Polynomial(self.ring, rem)

    def contains(self, f: Polynomial) -> bool:
        return not self.normal_form(f)

    def is_unit(self) -> bool:
        return any(g.leading_monomial() == 0 for g in self.basis)

    def __len__(self):
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def as_ideal(self) -> IdealGenerators:
        return IdealGenerators(self.ring, self.basis)


# ----------------------------------------------------------------------
# raw dict kernels; polynomials are {packed monomial: coefficient}


def _leading(f):
    m = max(f)
    return m, f[m]


def _make_monic(f, p):
    m, c = _leading(f)
    if p:
        inv = pow(c, -1, p)
        return {k: v * inv % p for k, v in f.items()}
    return {k: v / c for k, v in f.items()}


def _reduce_full(f, polys, lms, ring):
    """Remainder of f modulo polys (full reduction, deterministic reducer choice)."""
    p = ring.characteristic
    f = dict(f)
    rem = {}
    divides = ring.mono_divides
    while f:
        m = max(f)
        c = f[m]
        for g, lm in zip(polys, lms):
            if divides(lm, m):
                a = c * pow(g[lm], -1, p) % p if p else c / g[lm]
                _axpy(f, g, -a, m - lm, p)
                break
        else:
            rem[m] = c
            del f[m]
    return rem


def _spoly(f, g, lm_f, lm_g, lcm, p):
    cf, cg = f[lm_f], g[lm_g]
    out = {}
    if p:
        _axpy(out, f, pow(cf, -1, p), lcm - lm_f, p)
        _axpy(out, g, -pow(cg, -1, p) % p, lcm - lm_g, p)
    else:
        _axpy(out, f, 1 / Fraction(cf), lcm - lm_f, p)
        _axpy(out, g, -1 / Fraction(cg), lcm - lm_g, p)
    return out


def _normalize(f, p):
    """Monic over F_p; primitive integer with positive leading coefficient over Q."""
    if p:
        return _make_monic(f, p)
    den = 1
    for c in f.values():
        den = den * c.denominator // gcd(den, c.denominator)
    ints = {m: int(c * den) for m, c in f.items()}
    content = 0
    for c in ints.values():
        content = gcd(content, c)
    sign = 1 if ints[max(ints)] > 0 else -1
    return {m: Fraction(sign * c // content) for m, c in ints.items()}


def _groebner_raw(ring: RingSpec, gens: list, trace=None) -> list:
    p = ring.characteristic
    divides = ring.mono_divides
    lcm_of = ring.mono_lcm
    coprime = ring.mono_coprime
    deg = ring.mono_degree

    polys = []          # every polynomial ever added
    lms = []
    active = []         # indices currently in G
    pairs = {}          # (i, j) -> lcm, i < j
    heap = []

    def update(h):
        lm_h = lms[h]
        cand = [(g, lcm_of(lm_h, lms[g])) for g in active]
        kept = []
        for k, (g1, l1) in enumerate(cand):
            if coprime(lm_h, lms[g1]):
                kept.append((g1, l1))
                continue
            others = [l2 for g2, l2 in cand[k + 1:]] + [l2 for g2, l2 in kept]
            if not any(divides(l2, l1) for l2 in others):
                kept.append((g1, l1))
        new_pairs = [(g, l) for g, l in kept if not coprime(lm_h, lms[g])]
        for key, l in list(pairs.items()):
            g1, g2 = key
            if divides(lm_h, l) and lcm_of(lms[g1], lm_h) != l and lcm_of(lm_h, lms[g2]) != l:
                del pairs[key]
        for g, l in new_pairs:
            key = (g, h)
            pairs[key] = l
            heapq.heappush(heap, (deg(l), g, h))
        active[:] = [g for g in active if not divides(lm_h, lms[g])] + [h]

    def add(f):
        f = _make_monic(f, p)
        polys.append(f)
        lms.append(max(f))
        update(len(polys) - 1)

    for f in gens:
        if not f:
            continue
        r = _reduce_full(f, [polys[g] for g in active], [lms[g] for g in active], ring)
        if r:
            add(r)

    while heap:
        _, i, j = heapq.heappop(heap)
        if (i, j) not in pairs:
            continue
        l = pairs.pop((i, j))
        s = _spoly(polys[i], polys[j], lms[i], lms[j], l, p)
        r = _reduce_full(s, [polys[g] for g in active], [lms[g] for g in active], ring) if s else {}
        if trace is not None:
            trace.append((i, j, l, bool(r)))
        if r:
            add(r)

    # inter-reduce to the reduced basis
    basis = [polys[g] for g in active]
    basis_lms = [lms[g] for g in active]
    reduced = []
    for k, f in enumerate(basis):
        others = [g for t, g in enumerate(basis) if t != k]
        other_lms = [m for t, m in enumerate(basis_lms) if t != k]
        lead = {basis_lms[k]: f[basis_lms[k]]}
        tail = {m: c for m, c in f.items() if m != basis_lms[k]}
        tail = _reduce_full(tail, others, other_lms, ring)
        tail.update(lead)
        reduced.append(_normalize(tail, p))
    reduced.sort(key=max)
    return reduced


@lru_cache(maxsize=4096)
def _groebner_cached(ring: RingSpec, gens: tuple) -> tuple:
    raw = _groebner_raw(ring, [g.terms for g in gens])
    return tuple(Polynomial(ring, f) for f in raw)


def buchberger(ideal, trace=None) -> GroebnerBasis:
    """Reduced Groebner basis of an IdealGenerators (or list of polynomials)."""
    if not isinstance(ideal, IdealGenerators):
        ideal = list(ideal)
        if not ideal:
            raise ValueError("need an IdealGenerators or a non-empty polynomial list")
        ideal = IdealGenerators(ideal[0].ring, tuple(ideal))
    ring = ideal.ring
    gens = tuple(f for f in ideal.gens if f)
    if trace is not None:
        basis = tuple(Polynomial(ring, f) for f in _groebner_raw(ring, [g.terms for g in gens], trace))
    else:
        basis = _groebner_cached(ring, gens)
    return GroebnerBasis(ring, basis, ideal)


def spair_check(gb: GroebnerBasis) -> bool:
    """Post-hoc certificate: every S-polynomial reduces to zero."""
    ring = gb.ring
    p = ring.characteristic
    polys = [f.terms for f in gb.basis]
    lms = list(gb.leading_monomials)
    for a in range(len(polys)):
        for b in range(a + 1, len(polys)):
            l = ring.mono_lcm(lms[a], lms[b])
            s = _spoly(polys[a], polys[b], lms[a], lms[b], l, p)
            if s and _reduce_full(s, polys, lms, ring):
                return False
    return True


def is_reduced(gb: GroebnerBasis) -> bool:
    ring = gb.ring
    lms = gb.leading_monomials
    for k, f in enumerate(gb.basis):
        for m in f.terms:
            for t, lm in enumerate(lms):
                if t != k and ring.mono_divides(lm, m):
                    return False
    return True


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    return gb.normal_form(f)


def membership(f: Polynomial, gb: GroebnerBasis) -> bool:
    return gb.contains(f)


def _same_ring(a: IdealGenerators, b: IdealGenerators):
    if a.ring != b.ring:
        raise RingError("ideals live in different rings")


def contained_in(a: IdealGenerators, b: IdealGenerators) -> bool:
    _same_ring(a, b)
    gb = buchberger(b)
    return all(gb.contains(f) for f in a.gens)


def ideal_equal(a: IdealGenerators, b: IdealGenerators) -> bool:
    _same_ring(a, b)
    return contained_in(a, b) and contained_in(b, a)


def exact_divide(q: Polynomial, f: Polynomial) -> Polynomial:
    """q / f, raising GroebnerError when f does not divide q."""
    ring = q.ring
    p = ring.characteristic
    lm_f = f.leading_monomial()
    lc_f = f.terms[lm_f]
    rest = dict(q.terms)
    quot = {}
    while rest:
        m = max(rest)
        if not ring.mono_divides(lm_f, m):
            raise GroebnerError("inexact division while clearing the colon generator")
        c = rest[m] * pow(lc_f, -1, p) % p if p else rest[m] / lc_f
        shift = m - lm_f
        quot[shift] = c
        _axpy(rest, f.terms, -c, shift, p)
    return Polynomial(ring, quot)


def _eliminate(ideal: IdealGenerators, drop: list) -> IdealGenerators:
    """ideal intersected with the subring missing the variables in `drop`."""
    ring = ideal.ring
    if not drop:
        return buchberger(ideal).as_ideal()
    elim_ring = ring.with_order("elim", drop)
    gens = tuple(f.to_ring(elim_ring) for f in ideal.gens)
    gb = buchberger(IdealGenerators(elim_ring, gens))
    dropped = set(drop)
    kept = [f for f in gb.basis if not (f.variables() & dropped)]
    return IdealGenerators(ring, tuple(f.to_ring(ring) for f in kept))


def colon_ideal(ideal: IdealGenerators, f: Polynomial) -> IdealGenerators:
    """(I : f) = (I intersect (f)) / f, the intersection computed as
    (t I + (1 - t) f) with t eliminated."""
    if not f:
        raise ValueError("colon by the zero polynomial")
    ring = ideal.ring
    big = ring.with_aux(ring.aux + 1)
    t_index = big.nvars - 1
    t = big.var(t_index)
    gens = [t * g.to_ring(big) for g in ideal.gens if g]
    gens.append((big.one() - t) * f.to_ring(big))
    inter = _eliminate(IdealGenerators(big, tuple(gens)), [t_index])
    quotients = tuple(exact_divide(q.to_ring(ring), f) for q in inter.gens)
    return IdealGenerators(ring, quotients)


def intersect_subring(ideal: IdealGenerators, keep) -> IdealGenerators:
    """ideal intersected with K[x_k, y_k : k in keep]."""
    ring = ideal.ring
    keep = set(keep)
    for k in keep:
        if not 1 <= k <= ring.n:
            raise ValueError(f"vertex {k} outside 1..{ring.n}")
    drop = []
    for i in range(1, ring.n + 1):
        if i not in keep:
            drop += [ring.x_index(i), ring.y_index(i)]
    return _eliminate(ideal, drop)
