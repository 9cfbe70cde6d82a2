"""Exact polynomial arithmetic in S = K[x1..xn, y1..yn].

Monomials are packed into a single Python int laid out as

    [ order key fields | degree | exponent fields ]

Every field is a linear function of the exponent vector, so the product of two
monomials is plain integer addition, and comparing two packed monomials as
integers compares them in the ring's monomial order (the key block is an
injective image of the exponents, so ties never reach the lower fields).
Divisibility is tested on the exponent block with guard bits.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product as _cartesian

EXP_BITS = 8            # top bit of each exponent field is a guard bit
MAX_EXP = (1 << (EXP_BITS - 1)) - 1
KEY_BITS = 12
DEG_BITS = 12

ORDERS = ("degrevlex", "lex", "elim")


class RingError(ValueError):
    """Raised on invalid ring specifications or mixed-ring arithmetic."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class RingSpec:
    """Polynomial ring K[x1..xn, y1..yn, aux...] with a fixed monomial order.

    Variables are indexed 0..n-1 for x, n..2n-1 for y and 2n.. for auxiliary
    variables (used for elimination).  The order ``elim`` is a block order
    that compares the variables listed in ``elim`` first (degrevlex inside each
    block).
    """

    n: int
    characteristic: int = 0
    order: str = "degrevlex"
    elim: tuple = ()
    aux: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise RingError("vertex count must be non-negative")
        if self.characteristic != 0 and not is_prime(self.characteristic):
            raise RingError(f"characteristic not prime: {self.characteristic}")
        if self.order not in ORDERS:
            raise RingError(f"unknown monomial order {self.order!r}")
        if self.order == "elim" and not self.elim:
            raise RingError("elimination order needs a non-empty variable block")
        if any(not 0 <= v < self.nvars for v in self.elim):
            raise RingError("elimination block outside the variable range")
        object.__setattr__(self, "elim", tuple(sorted(set(self.elim))))

    # ------------------------------------------------------------------
    # variables

    @property
    def nvars(self) -> int:
        return 2 * self.n + self.aux

    @cached_property
    def var_names(self) -> tuple:
        names = [f"x{i}" for i in range(1, self.n + 1)]
        names += [f"y{i}" for i in range(1, self.n + 1)]
        names += ["t"] if self.aux == 1 else [f"t{k}" for k in range(1, self.aux + 1)]
        return tuple(names)

    @cached_property
    def _name_index(self) -> dict:
        return {name: k for k, name in enumerate(self.var_names)}

    def x_index(self, i: int) -> int:
        self._check_vertex(i)
        return i - 1

    def y_index(self, i: int) -> int:
        self._check_vertex(i)
        return self.n + i - 1

    def _check_vertex(self, i):
        if not 1 <= i <= self.n:
            raise RingError(f"vertex {i} outside 1..{self.n}")

    def with_order(self, order: str, elim=()) -> "RingSpec":
        return RingSpec(self.n, self.characteristic, order, tuple(elim), self.aux)

    def with_aux(self, aux: int) -> "RingSpec":
        return RingSpec(self.n, self.characteristic, self.order, self.elim, aux)

    def with_characteristic(self, characteristic: int) -> "RingSpec":
        return RingSpec(self.n, characteristic, self.order, self.elim, self.aux)

    # ------------------------------------------------------------------
    # packed monomials

    @cached_property
    def _weights(self) -> tuple:
        nv = self.nvars
        if self.order == "lex":
            return tuple(tuple(int(k == r) for k in range(nv)) for r in range(nv))
        if self.order == "degrevlex":
            blocks = [list(range(nv))]
        else:
            rest = [v for v in range(nv) if v not in self.elim]
            blocks = [list(self.elim), rest]
        rows = []
        for block in blocks:
            if not block:
                continue
            # degree of the block, then partial sums s_{k} = e_1 + ... + e_k
            # for k = len-1 .. 1; lex on these rows is degrevlex on the block
            for k in range(len(block), 0, -1):
                members = set(block[:k])
                rows.append(tuple(int(v in members) for v in range(nv)))
        return tuple(rows)

    @cached_property
    def _layout(self):
        nv = self.nvars
        exp_width = EXP_BITS * nv
        deg_shift = exp_width
        key_shift = exp_width + DEG_BITS
        guard = 0
        for k in range(nv):
            guard |= 1 << (EXP_BITS * k + EXP_BITS - 1)
        low_mask = (1 << exp_width) - 1
        # image of each variable as a packed monomial
        var_ints = []
        nrows = len(self._weights)
        for v in range(nv):
            key = 0
            for r, row in enumerate(self._weights):
                key |= row[v] << (KEY_BITS * (nrows - 1 - r))
            exps = 1 << (EXP_BITS * (nv - 1 - v))
            var_ints.append((key << key_shift) | (1 << deg_shift) | exps)
        return exp_width, deg_shift, guard, low_mask, tuple(var_ints)

    @cached_property
    def var_monomials(self) -> tuple:
        """Packed monomial of each variable, by variable index."""
        return self._layout[4]

    @cached_property
    def _decode_cache(self) -> dict:
        return {}

    def encode(self, exps) -> int:
        if len(exps) != self.nvars:
            raise RingError(f"expected {self.nvars} exponents, got {len(exps)}")
        m = 0
        for e, v in zip(exps, self.var_monomials):
            if e < 0 or e > MAX_EXP:
                raise RingError(f"exponent {e} out of range")
            m += e * v
        return m

    def decode(self, m: int) -> tuple:
        cache = self._decode_cache
        out = cache.get(m)
        if out is None:
            nv = self.nvars
            low = m & self._layout[3]
            mask = (1 << EXP_BITS) - 1
            out = tuple((low >> (EXP_BITS * (nv - 1 - k))) & mask for k in range(nv))
            cache[m] = out
        return out

    def mono_degree(self, m: int) -> int:
        return (m >> self._layout[1]) & ((1 << DEG_BITS) - 1)

    def mono_divides(self, a: int, b: int) -> bool:
        """True when monomial a divides monomial b."""
        _, _, guard, low, _ = self._layout
        return (((b & low) | guard) - (a & low)) & guard == guard

    def mono_lcm(self, a: int, b: int) -> int:
        ea, eb = self.decode(a), self.decode(b)
        return self.encode([x if x > y else y for x, y in zip(ea, eb)])

    def mono_coprime(self, a: int, b: int) -> bool:
        return not any(x and y for x, y in zip(self.decode(a), self.decode(b)))

    def mono_multidegree(self, m: int) -> tuple:
        """Vertex multidegree: exponent of x_i plus exponent of y_i."""
        e = self.decode(m)
        n = self.n
        return tuple(e[i] + e[n + i] for i in range(n))

    def lex_key(self, m: int) -> int:
        """Integer whose order is lex (x1 > x2 > ...) on the exponents."""
        return m & self._layout[3]

    def monomials_of_multidegree(self, a) -> list:
        """All monomials in the x/y variables with the given vertex multidegree."""
        n = self.n
        choices = [range(ai + 1) for ai in a]
        out = []
        xs = self.var_monomials[:n]
        ys = self.var_monomials[n:2 * n]
        for split in _cartesian(*choices):
            m = 0
            for i, k in enumerate(split):
                m += k * xs[i] + (a[i] - k) * ys[i]
            out.append(m)
        return out

    # ------------------------------------------------------------------
    # coefficients

    def coerce(self, c):
        p = self.characteristic
        if p:
            if isinstance(c, Fraction):
                if c.denominator % p == 0:
                    raise ZeroDivisionError(f"{c} has no image in F_{p}")
                return c.numerator * pow(c.denominator, -1, p) % p
            return int(c) % p
        return Fraction(c)

    def inv(self, c):
        p = self.characteristic
        if p:
            return pow(c, -1, p)
        return 1 / Fraction(c)

    def signed(self, c):
        """Symmetric representative used for printing."""
        p = self.characteristic
        if p and c > p // 2:
            return c - p
        return c

    # ------------------------------------------------------------------
    # constructors

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c) -> "Polynomial":
        c = self.coerce(c)
        return Polynomial(self, {0: c} if c else {})

    def var(self, index: int) -> "Polynomial":
        return Polynomial(self, {self.var_monomials[index]: self.coerce(1)})

    def x(self, i: int) -> "Polynomial":
        return self.var(self.x_index(i))

    def y(self, i: int) -> "Polynomial":
        return self.var(self.y_index(i))

    def monomial(self, exps, coeff=1) -> "Polynomial":
        c = self.coerce(coeff)
        return Polynomial(self, {self.encode(exps): c} if c else {})

    def from_terms(self, terms) -> "Polynomial":
        """Build from (exponent tuple, coefficient) pairs, summing repeats."""
        acc = {}
        for exps, c in terms:
            m = self.encode(exps)
            acc[m] = acc.get(m, 0) + c
        return Polynomial.from_dict(self, acc)

    def parse(self, text: str) -> "Polynomial":
        return parse_polynomial(self, text)

    def __repr__(self):
        field = "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"
        extra = f", elim={self.elim}" if self.order == "elim" else ""
        aux = f", aux={self.aux}" if self.aux else ""
        return f"RingSpec(n={self.n}, {field}, {self.order}{extra}{aux})"


def make_ring(n: int, characteristic: int = 0, order: str = "degrevlex") -> RingSpec:
    if n < 1:
        raise RingError("need at least one vertex")
    return RingSpec(n, characteristic, order)


class Polynomial:
    """Immutable polynomial: packed monomial -> nonzero coefficient."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: RingSpec, terms: dict):
        self.ring = ring
        self.terms = terms
        self._hash = None

    @classmethod
    def from_dict(cls, ring, terms):
        clean = {}
        for m, c in terms.items():
            c = ring.coerce(c)
            if c:
                clean[m] = c
        return cls(ring, clean)

    # -- inspection ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def sorted_terms(self):
        """(packed monomial, coefficient) pairs, largest monomial first."""
        return sorted(self.terms.items(), reverse=True)

    def leading_monomial(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms)

    def leading_coefficient(self):
        return self.terms[self.leading_monomial()]

    def exponents(self):
        return [(self.ring.decode(m), c) for m, c in self.sorted_terms()]

    def standard_degree(self):
        """Common degree of all terms, None if inhomogeneous or zero."""
        degs = {self.ring.mono_degree(m) for m in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def multidegree(self):
        """Common vertex multidegree of all terms, None if not multihomogeneous."""
        mds = {self.ring.mono_multidegree(m) for m in self.terms}
        return mds.pop() if len(mds) == 1 else None

    def to_ring(self, target: RingSpec) -> "Polynomial":
        """Re-encode in another ring, matching variables by name."""
        if target == self.ring:
            return self
        src = self.ring
        idx = target._name_index
        out = {}
        for m, c in self.terms.items():
            exps = [0] * target.nvars
            for name, e in zip(src.var_names, src.decode(m)):
                if e:
                    if name not in idx:
                        raise RingError(f"variable {name} does not exist in {target}")
                    exps[idx[name]] = e
            out[target.encode(exps)] = c
        return Polynomial.from_dict(target, out)

    def variables(self) -> set:
        used = set()
        for m in self.terms:
            used.update(k for k, e in enumerate(self.ring.decode(m)) if e)
        return used

    # -- arithmetic ------------------------------------------------------

    def _coerce_other(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingError("ring mismatch")
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._coerce_other(other)
        out = dict(self.terms)
        _axpy(out, other.terms, 1, 0, self.ring.characteristic)
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.characteristic
        return Polynomial(self.ring, {m: (-c) % p if p else -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce_other(other)
        out = dict(self.terms)
        _axpy(out, other.terms, -1, 0, self.ring.characteristic)
        return Polynomial(self.ring, out)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = self.ring.coerce(c)
        if not c:
            return self.ring.zero()
        p = self.ring.characteristic
        return Polynomial(self.ring, {m: (v * c) % p if p else v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        other = self._coerce_other(other)
        p = self.ring.characteristic
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 + m2
                out[m] = out.get(m, 0) + c1 * c2
        if p:
            out = {m: c % p for m, c in out.items() if c % p}
        else:
            out = {m: c for m, c in out.items() if c}
        return Polynomial(self.ring, out)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def substitute(self, images) -> "Polynomial":
        """Ring map sending variable k to images[k] (same ring)."""
        ring = self.ring
        if len(images) != ring.nvars:
            raise RingError("need one image per variable")
        result = ring.zero()
        powers = {}
        for m, c in self.terms.items():
            term = ring.const(c)
            for k, e in enumerate(ring.decode(m)):
                if e:
                    key = (k, e)
                    if key not in powers:
                        powers[key] = images[k] ** e
                    term = term * powers[key]
            result = result + term
        return result

    # -- comparison / printing -------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"


def _axpy(acc: dict, terms: dict, a, shift: int, p: int):
    """acc += a * (terms shifted by monomial `shift`), in place."""
    if p:
        for m, c in terms.items():
            key = m + shift
            v = (acc.get(key, 0) + a * c) % p
            if v:
                acc[key] = v
            else:
                acc.pop(key, None)
    else:
        for m, c in terms.items():
            key = m + shift
            v = acc.get(key, 0) + a * c
            if v:
                acc[key] = v
            else:
                acc.pop(key, None)


# ----------------------------------------------------------------------
# text format:  2*x1^2*y3 - 3/2*x2 + 1

def _format_coeff(c) -> str:
    if isinstance(c, Fraction) and c.denominator == 1:
        return str(c.numerator)
    return str(c)


def format_polynomial(f: Polynomial) -> str:
    ring = f.ring
    if not f.terms:
        return "0"
    pieces = []
    for m, c in f.sorted_terms():
        c = ring.signed(c)
        neg = c < 0
        mag = -c if neg else c
        factors = []
        for name, e in zip(ring.var_names, ring.decode(m)):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        if not factors:
            body = _format_coeff(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = _format_coeff(mag) + "*" + "*".join(factors)
        if not pieces:
            pieces.append(("-" if neg else "") + body)
        else:
            pieces.append(("- " if neg else "+ ") + body)
    return " ".join(pieces)


_TERM_RE = re.compile(r"([+-]?)([^+-]+)")
_COEFF_RE = re.compile(r"^\d+(/\d+)?$")
_FACTOR_RE = re.compile(r"^([A-Za-z]\w*)(\^(\d+))?$")


def parse_polynomial(ring: RingSpec, text: str) -> Polynomial:
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial text")
    pos = 0
    acc = {}
    names = ring._name_index
    for match in _TERM_RE.finditer(s):
        if match.start() != pos:
            raise ValueError(f"cannot parse {text!r} near position {pos}")
        pos = match.end()
        sign, body = match.groups()
        coeff = Fraction(-1 if sign == "-" else 1)
        exps = [0] * ring.nvars
        for factor in body.split("*"):
            if not factor:
                raise ValueError(f"empty factor in {text!r}")
            if _COEFF_RE.match(factor):
                coeff *= Fraction(factor)
                continue
            fm = _FACTOR_RE.match(factor)
            if not fm or fm.group(1) not in names:
                raise ValueError(f"unknown factor {factor!r} in {text!r}")
            exps[names[fm.group(1)]] += int(fm.group(3) or 1)
        m = ring.encode(exps)
        acc[m] = acc.get(m, 0) + coeff
    if pos != len(s):
        raise ValueError(f"trailing characters in {text!r}")
    return Polynomial.from_dict(ring, acc)
