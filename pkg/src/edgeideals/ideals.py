"""Edge binomials, the four graph ideals, and the maps between them."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graphs import Graph, delete_edge, is_bipartite, bipartition, neighborhood_completion
from .ring import Polynomial, RingError, RingSpec

IDEAL_KINDS = ("parity", "binomial", "lss", "permanental")

# which edge binomial generates each graph ideal
EDGE_KIND = {"parity": "gbar", "binomial": "f", "lss": "g", "permanental": "perm"}


class HypothesisError(ValueError):
    """A construction was requested outside the hypotheses it is defined under."""


@dataclass(frozen=True)
class IdealGenerators:
    ring: RingSpec
    gens: tuple
    tags: tuple = ()
    kind: str = "custom"

    def __post_init__(self):
        for f in self.gens:
            if f.ring != self.ring:
                raise RingError("generator ring differs from the ideal's ring")
        if not self.tags:
            object.__setattr__(self, "tags", tuple((None, "custom") for _ in self.gens))
        if len(self.tags) != len(self.gens):
            raise ValueError("one provenance tag per generator")

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def nonzero(self) -> "IdealGenerators":
        keep = [(f, t) for f, t in zip(self.gens, self.tags) if f]
        return IdealGenerators(self.ring, tuple(f for f, _ in keep), tuple(t for _, t in keep), self.kind)

    def map(self, fn, kind="custom") -> "IdealGenerators":
        return IdealGenerators(self.ring, tuple(fn(f) for f in self.gens), self.tags, kind)

    def __str__(self):
        return "(" + ", ".join(str(f) for f in self.gens) + ")"


def custom_ideal(ring: RingSpec, gens) -> IdealGenerators:
    return IdealGenerators(ring, tuple(gens))


def edge_polynomial(kind: str, i: int, j: int, ring: RingSpec) -> Polynomial:
    """f = x_i y_j - x_j y_i, g = x_i x_j + y_i y_j, gbar = x_i x_j - y_i y_j,
    perm = x_i y_j + x_j y_i, always with i < j."""
    if i == j:
        raise ValueError(f"edge binomial needs two distinct vertices, got {i} twice")
    i, j = min(i, j), max(i, j)
    xi, xj, yi, yj = ring.x(i), ring.x(j), ring.y(i), ring.y(j)
    if kind == "f":
        return xi * yj - xj * yi
    if kind == "g":
        return xi * xj + yi * yj
    if kind == "gbar":
        return xi * xj - yi * yj
    if kind == "perm":
        return xi * yj + xj * yi
    raise ValueError(f"unknown edge binomial kind {kind!r}")


def build_ideal(kind: str, g: Graph, ring: RingSpec) -> IdealGenerators:
    if kind not in EDGE_KIND:
        raise ValueError(f"unknown ideal kind {kind!r}; expected one of {IDEAL_KINDS}")
    if ring.n != g.n:
        raise RingError(f"ring has n={ring.n} but graph has {g.n} vertices")
    edges = g.sorted_edges()
    gens = tuple(edge_polynomial(EDGE_KIND[kind], i, j, ring) for i, j in edges)
    tags = tuple(((i, j), EDGE_KIND[kind]) for i, j in edges)
    return IdealGenerators(ring, gens, tags, kind)


def _identity_images(ring):
    return [ring.var(k) for k in range(ring.nvars)]


def _check_bipartition(ring: RingSpec, parts) -> tuple:
    v1, v2 = (frozenset(p) for p in parts)
    if v1 & v2:
        raise ValueError(f"bipartition sides overlap in {sorted(v1 & v2)}")
    if v1 | v2 != frozenset(range(1, ring.n + 1)):
        raise ValueError("bipartition does not cover the vertex set")
    return v1, v2


def apply_phi(f: Polynomial, parts) -> Polynomial:
    """Swap x_i and y_i for every i on the second side of the bipartition."""
    ring = f.ring
    _, v2 = _check_bipartition(ring, parts)
    images = _identity_images(ring)
    for i in v2:
        xi, yi = ring.x_index(i), ring.y_index(i)
        images[xi], images[yi] = ring.var(yi), ring.var(xi)
    return f.substitute(images)


def apply_eta(f: Polynomial) -> Polynomial:
    """x_i -> x_i + y_i, y_i -> x_i - y_i.  Not invertible in characteristic 2,
    where instead the parity and LSS ideals coincide (as do permanental and
    binomial edge ideals)."""
    ring = f.ring
    if ring.characteristic == 2:
        raise RingError(
            "eta is not an isomorphism in characteristic 2; there I_G = L_G and Pi_G = J_G"
        )
    images = _identity_images(ring)
    for i in range(1, ring.n + 1):
        x, y = ring.x(i), ring.y(i)
        images[ring.x_index(i)] = x + y
        images[ring.y_index(i)] = x - y
    return f.substitute(images)


def phi_ideal(ideal: IdealGenerators, parts) -> IdealGenerators:
    return ideal.map(lambda f: apply_phi(f, parts))


def eta_ideal(ideal: IdealGenerators) -> IdealGenerators:
    return ideal.map(apply_eta)


def check_colon_hypotheses(g: Graph, e) -> tuple:
    """Returns (u, v) or raises HypothesisError naming the failed condition."""
    u, v = min(e), max(e)
    if not g.has_edge(u, v):
        raise HypothesisError(f"{e} is not an edge of G")
    if is_bipartite(g):
        raise HypothesisError("G must be non-bipartite")
    if not is_bipartite(delete_edge(g, (u, v))):
        raise HypothesisError(f"G minus {e} must be bipartite")
    return u, v


def colon_generators_combinatorial(g: Graph, e, ring: RingSpec) -> IdealGenerators:
    """I_{G\\e} plus f_{i,j} for all pairs inside N(u) or inside N(v), where
    neighbourhoods are taken in G\\e."""
    u, v = check_colon_hypotheses(g, e)
    h = delete_edge(g, (u, v))
    base = build_ideal("parity", h, ring)
    extra = set()
    for w in (u, v):
        extra.update(combinations(sorted(h.neighbors(w)), 2))
    gens = list(base.gens)
    tags = list(base.tags)
    for i, j in sorted(extra):
        gens.append(edge_polynomial("f", i, j, ring))
        tags.append(((i, j), "f"))
    return IdealGenerators(ring, tuple(gens), tuple(tags), "custom")


def colon_generators_phi(g: Graph, e, ring: RingSpec) -> IdealGenerators:
    """Phi applied to the binomial edge ideal of (G\\e)_e, Phi taken from the
    bipartition of G\\e."""
    u, v = check_colon_hypotheses(g, e)
    h = delete_edge(g, (u, v))
    completed = neighborhood_completion(h, (u, v))
    return phi_ideal(build_ideal("binomial", completed, ring), bipartition(h))
