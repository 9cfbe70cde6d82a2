"""Exact ranks of sparse matrices given as lists of {column: value} rows."""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def rank_mod_p(rows, p: int) -> int:
    pivots = {}
    for row in rows:
        r = {c: v % p for c, v in row.items() if v % p}
        while r:
            c = min(r)
            piv = pivots.get(c)
            if piv is None:
                inv = pow(r[c], -1, p)
                pivots[c] = {k: v * inv % p for k, v in r.items()}
                break
            a = r[c]
            for k, v in piv.items():
                nv = (r.get(k, 0) - a * v) % p
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
    return len(pivots)


def _integer_row(row) -> dict:
    den = 1
    for v in row.values():
        if isinstance(v, Fraction):
            den = den * v.denominator // gcd(den, v.denominator)
    return {c: int(v * den) for c, v in row.items() if v}


def rank_rational(rows) -> int:
    """Fraction-free elimination: rows are cleared to integers and combined
    by cross-multiplication, dividing out the content after each step."""
    pivots = {}
    for row in rows:
        r = _integer_row(row)
        while r:
            c = min(r)
            piv = pivots.get(c)
            if piv is None:
                pivots[c] = r
                break
            a, b = r[c], piv[c]
            out = {}
            for k in set(r) | set(piv):
                v = b * r.get(k, 0) - a * piv.get(k, 0)
                if v:
                    out[k] = v
            g = 0
            for v in out.values():
                g = gcd(g, v)
            r = {k: v // g for k, v in out.items()} if g > 1 else out
    return len(pivots)


def rank(rows, characteristic: int) -> int:
    rows = [row for row in rows if row]
    if not rows:
        return 0
    return rank_mod_p(rows, characteristic) if characteristic else rank_rational(rows)
