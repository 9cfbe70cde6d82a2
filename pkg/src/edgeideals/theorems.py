"""Machine-checkable claims about parity binomial edge ideals.

Each claim is a registry entry: a hypothesis predicate on the graph and a
checker that compares a predicted property against the engine's Betti
tables and Groebner bases.  `sweep` runs claims over every graph up to
isomorphism and collects ClaimReports.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Callable, Optional

from . import graphs as G
from .graphs import Graph
from .groebner import buchberger, colon_ideal, intersect_subring
from .ideals import (
    HypothesisError,
    IdealGenerators,
    build_ideal,
    colon_generators_combinatorial,
    colon_generators_phi,
    edge_polynomial,
    eta_ideal,
    phi_ideal,
)
from .resolution import BettiTable, betti_table_schreyer
from .ring import make_ring

DEFAULT_CHARACTERISTIC = 32003
N_MAX_CEILING = 8


class UnknownClaimError(KeyError):
    def __init__(self, name):
        super().__init__(name)
        self.name = name

    def __str__(self):
        return f"unknown claim {self.name!r}; valid claims: {', '.join(CLAIMS)}"


@dataclass(frozen=True)
class CheckConfig:
    characteristic: int = DEFAULT_CHARACTERISTIC
    # eta_identity also runs at these characteristics
    extra_characteristics: tuple = (0,)


@dataclass
class ClaimReport:
    claim_id: str
    graph: Graph
    hypotheses_met: bool
    verdict: str
    witness: dict = field(default_factory=dict)
    timings: dict = field(default_factory=dict)
    params: dict = field(default_factory=dict)
    reason: str = ""
    probe: bool = False

    def __post_init__(self):
        if (self.verdict == "skipped") == self.hypotheses_met:
            raise ValueError("verdict 'skipped' exactly when the hypotheses are not met")
        if self.verdict == "fail" and not self.witness:
            raise ValueError("a failing report needs a witness")

    def to_dict(self) -> dict:
        return {
            "claim": self.claim_id,
            "graph6": G.to_graph6(self.graph),
            "n": self.graph.n,
            "edges": [list(e) for e in self.graph.sorted_edges()],
            "params": self.params,
            "hypotheses_met": self.hypotheses_met,
            "verdict": self.verdict,
            "witness": self.witness,
            "reason": self.reason,
            "probe": self.probe,
            "timings": self.timings,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, default=str)


# ----------------------------------------------------------------------
# cached engine access; Betti tables only depend on the isomorphism class


@lru_cache(maxsize=None)
def _table_canonical(kind: str, g: Graph, characteristic: int) -> BettiTable:
    return betti_table_schreyer(build_ideal(kind, g, make_ring(g.n, characteristic)))


def betti(kind: str, g: Graph, characteristic: int = DEFAULT_CHARACTERISTIC) -> BettiTable:
    return _table_canonical(kind, G.canonical_graph(g), characteristic)


def reg(kind: str, g: Graph, characteristic: int = DEFAULT_CHARACTERISTIC) -> int:
    return betti(kind, g, characteristic).regularity()


@lru_cache(maxsize=None)
def _colon_table(g: Graph, e: tuple, characteristic: int) -> BettiTable:
    return betti_table_schreyer(colon_of_edge(g, e, characteristic))


def colon_of_edge(g: Graph, e, characteristic: int = DEFAULT_CHARACTERISTIC) -> IdealGenerators:
    """(I_{G minus e} : gbar_e) computed by elimination."""
    ring = make_ring(g.n, characteristic)
    u, v = e
    rest = build_ideal("parity", G.delete_edge(g, e), ring)
    return colon_ideal(rest, edge_polynomial("gbar", u, v, ring))


def colon_edges(g: Graph) -> list:
    """Edges e with G non-bipartite and G minus e bipartite."""
    if G.is_bipartite(g):
        return []
    return [e for e in g.sorted_edges() if G.is_bipartite(G.delete_edge(g, e))]


def same_ideal(a: IdealGenerators, b: IdealGenerators) -> bool:
    """Equality of reduced Groebner bases."""
    return buchberger(a).basis == buchberger(b).basis


def _table_json(t: BettiTable) -> list:
    return [[i, j, b] for (i, j), b in sorted(t.entries.items())]


# ----------------------------------------------------------------------
# combinatorial predictions


def reg_lower_bound(g: Graph) -> int:
    """max(longest induced path, longest induced odd cycle), connected g only."""
    if not G.is_connected(g):
        raise HypothesisError("the lower bound is only asserted for connected graphs")
    return max(G.longest_induced_path_length(g), G.longest_induced_odd_cycle_length(g))


def _without_isolated(g: Graph) -> Graph:
    keep = [v for v in g.vertices if g.degree(v)]
    return G.induced_subgraph(g, keep)[0]


def is_complete_bipartite_up_to_isolated(g: Graph) -> bool:
    h = _without_isolated(g)
    return h.n >= 2 and G.classify(h).is_complete_bipartite


def is_two_disjoint_edges(g: Graph) -> bool:
    h = _without_isolated(g)
    return h.n == 4 and len(h.edges) == 2


def pure_family(g: Graph) -> bool:
    """Complete bipartite, or a disjoint union of odd cycles and paths.
    Isolated vertices count as one-vertex paths."""
    return is_complete_bipartite_up_to_isolated(g) or G.is_disjoint_union_of_odd_cycles_and_paths(g)


def reg2_family(g: Graph) -> bool:
    if is_two_disjoint_edges(g):
        return True
    h = _without_isolated(g)
    return is_complete_bipartite_up_to_isolated(g) and len(h.edges) > 1


def predicted_regularity(g: Graph) -> Optional[int]:
    """Regularity of S/I_G when g lies in a family where it is known, else None."""
    c = G.classify(g)
    if c.is_cycle and g.n % 2 == 1:
        return g.n
    if c.is_path:
        return g.n - 1
    if G.is_disjoint_union_of_odd_cycles_and_paths(g):
        # complete intersection of |E| quadrics
        return len(g.edges)
    if is_complete_bipartite_up_to_isolated(g) or is_two_disjoint_edges(g):
        return 2
    return None


# ----------------------------------------------------------------------
# claim registry


@dataclass(frozen=True)
class Claim:
    claim_id: str
    statement: str
    hypothesis: Callable          # (g, cfg) -> None when met, else a reason
    check: Callable               # (g, cfg) -> (ok, witness, params)
    connected_only: bool = False
    probe: bool = False
    tag: str = "paper"
    candidates: Optional[Callable] = None   # k -> graphs on k vertices to try


CLAIMS: dict = {}


def _register(claim_id, statement, hypothesis, check, **kw):
    CLAIMS[claim_id] = Claim(claim_id, statement, hypothesis, check, **kw)


def _needs(*conds):
    """Hypothesis built from (predicate, reason) pairs."""
    def hyp(g, cfg):
        for pred, reason in conds:
            if not pred(g):
                return reason
        return None
    return hyp


_has_edge = (lambda g: bool(g.edges), "G has no edges")
_connected = (G.is_connected, "G is not connected")
_bip = (G.is_bipartite, "G is not bipartite")
_non_bip = (lambda g: not G.is_bipartite(g), "G is bipartite")
_colon_edge = (lambda g: bool(colon_edges(g)), "no edge e with G minus e bipartite")


def _is_odd_cycle(g):
    return g.n % 2 == 1 and G.classify(g).is_cycle


def _odd_cycle_candidates(k):
    return [G.cycle_graph(k)] if k >= 3 and k % 2 else []


def _named_candidates(*builders):
    graphs = [b() for b in builders]
    return lambda k: [h for h in graphs if h.n == k]


def _check_reg_bipartite(g, cfg):
    p = cfg.characteristic
    r_i, r_j = reg("parity", g, p), reg("binomial", g, p)
    is_path = G.classify(g).is_path
    ok = r_i == r_j and r_i <= g.n - 1 and ((r_i == g.n - 1) == is_path)
    return ok, {"reg_I": r_i, "reg_J": r_j, "n": g.n, "is_path": is_path}, {}


_register(
    "reg_bipartite",
    "connected bipartite G: reg(S/I_G) = reg(S/J_G) <= n-1, with equality iff G is a path",
    _needs(_has_edge, _connected, _bip),
    _check_reg_bipartite,
    connected_only=True,
)


def _check_reg_odd_cycle(g, cfg):
    r = reg("parity", g, cfg.characteristic)
    return r == g.n, {"reg": r, "n": g.n}, {}


_register(
    "reg_odd_cycle",
    "odd cycle C_n: reg(S/I_G) = n",
    _needs((_is_odd_cycle, "G is not an odd cycle")),
    _check_reg_odd_cycle,
    connected_only=True,
    candidates=_odd_cycle_candidates,
)


def _check_reg_non_bipartite(g, cfg):
    r = reg("parity", g, cfg.characteristic)
    return r <= g.n - 1, {"reg": r, "n": g.n}, {}


_register(
    "reg_non_bipartite",
    "connected non-bipartite G, not an odd cycle, with G minus e bipartite for some e: reg <= n-1",
    _needs(_connected, _non_bip, _colon_edge, (lambda g: not _is_odd_cycle(g), "G is an odd cycle")),
    _check_reg_non_bipartite,
    connected_only=True,
)


def _check_lower_bound(g, cfg):
    r = reg("parity", g, cfg.characteristic)
    ell = G.longest_induced_path_length(g)
    oc = G.longest_induced_odd_cycle_length(g)
    return r >= max(ell, oc), {"reg": r, "induced_path": ell, "induced_odd_cycle": oc}, {}


_register(
    "lower_bound",
    "connected G: reg(S/I_G) >= max(l(G), oc(G))",
    _needs(_has_edge, _connected),
    _check_lower_bound,
    connected_only=True,
)

# the bound is only claimed for connected graphs; disconnected ones are recorded, not asserted
_register(
    "lower_bound_disconnected_probe",
    "disconnected G with edges: reg(S/I_G) >= max(l(G), oc(G)) (report only)",
    _needs(_has_edge, (lambda g: not G.is_connected(g), "G is connected")),
    _check_lower_bound,
    probe=True,
)


def _check_reg2(g, cfg):
    r = reg("parity", g, cfg.characteristic)
    fam = reg2_family(g)
    return (r == 2) == fam, {"reg": r, "in_family": fam}, {}


_register(
    "reg2_classification",
    "G without isolated vertices: reg = 2 iff G = 2K_2 or G is complete bipartite other than K_2",
    _needs(_has_edge, (lambda g: not g.isolated_vertices(), "G has an isolated vertex")),
    _check_reg2,
)


def _check_betti_23(g, cfg):
    t = betti("parity", g, cfg.characteristic)
    bad = [[i, i + 1, b] for (i, j), b in t.entries.items() if j == i + 1 and i != 1]
    return not bad, {"nonzero": bad} if bad else {"beta_2_3": t.beta(2, 3)}, {}


_register(
    "betti_23_zero",
    "beta_{2,3}(S/I_G) = 0, and beta_{i,i+1} = 0 for i != 1",
    _needs(_has_edge),
    _check_betti_23,
)


def _check_betti_24(g, cfg):
    t = betti("parity", g, cfg.characteristic)
    bound = comb(len(g.edges), 2)
    return t.beta(2, 4) >= bound, {"beta_2_4": t.beta(2, 4), "bound": bound}, {}


_register(
    "betti_24_bound",
    "G != K_2: beta_{2,4}(S/I_G) >= C(|E|, 2)",
    _needs(_has_edge, (lambda g: not (g.n == 2 and len(g.edges) == 1), "G is K_2")),
    _check_betti_24,
)


def _check_colon_no_linear(g, cfg):
    for e in colon_edges(g):
        t = _colon_table(g, e, cfg.characteristic)
        bad = [[i, j, b] for (i, j), b in t.entries.items() if i > 0 and i == j]
        if bad:
            return False, {"edge": list(e), "nonzero": bad}, {"edges": [list(e)]}
    return True, {"edges_checked": len(colon_edges(g))}, {}


_register(
    "colon_no_linear",
    "beta_{i,i}(S/(I_{G minus e} : gbar_e)) = 0 for i > 0",
    _needs(_non_bip, _colon_edge),
    _check_colon_no_linear,
)


def _check_betti_36(g, cfg):
    b = betti("parity", g, cfg.characteristic).beta(3, 6)
    return b != 0, {"beta_3_6": b}, {}


_register(
    "betti_36_nonzero",
    "non-bipartite G: beta_{3,6}(S/I_G) != 0",
    _needs(_non_bip),
    _check_betti_36,
)


def _is_odd_unicyclic(g):
    return G.classify(g).is_unicyclic and not G.is_bipartite(g)


def _above_diagonal(t: BettiTable) -> list:
    return [[i, j, b] for (i, j), b in sorted(t.entries.items()) if j > 2 * i]


def _check_odd_unicyclic(g, cfg):
    bad = _above_diagonal(betti("parity", g, cfg.characteristic))
    return not bad, {"nonzero": bad} if bad else {"max_j_minus_2i": 0}, {}


_register(
    "odd_unicyclic_vanishing",
    "odd unicyclic G: beta_{i,j}(S/I_G) = 0 for j > 2i",
    _needs((_is_odd_unicyclic, "G is not odd unicyclic")),
    _check_odd_unicyclic,
)


def _check_chordal(g, cfg):
    bad = _above_diagonal(betti("binomial", g, cfg.characteristic))
    return not bad, {"nonzero": bad} if bad else {"max_j_minus_2i": 0}, {}


_register(
    "chordal_binomial_vanishing",
    "connected chordal G: beta_{i,j}(S/J_G) = 0 for j > 2i",
    _needs(_has_edge, _connected, (G.is_chordal, "G is not chordal")),
    _check_chordal,
    connected_only=True,
)


_IMPURE_NAMED = (G.diamond_graph, lambda: G.complete_graph(4), G.triangle_with_pendant)


def _is_impure_named(g):
    return any(G.is_isomorphic(g, b()) for b in _IMPURE_NAMED)


def _check_impure_named(g, cfg):
    t = betti("parity", g, cfg.characteristic)
    b35, b36 = t.beta(3, 5), t.beta(3, 6)
    pure = t.is_pure()
    return b35 != 0 and b36 != 0 and not pure, {"beta_3_5": b35, "beta_3_6": b36, "pure": pure}, {}


_register(
    "diamond_k4_claw_impure",
    "diamond, K_4, triangle with a pendant edge: beta_{3,5} and beta_{3,6} both nonzero, so not pure",
    _needs((_is_impure_named, "G is not a diamond, K_4 or a paw")),
    _check_impure_named,
    connected_only=True,
    candidates=_named_candidates(*_IMPURE_NAMED),
)


def _induced_subgraphs(g):
    for size in range(1, g.n):
        for a in combinations(g.vertices, size):
            yield a, G.induced_subgraph(g, a)[0]


def _check_induced_monotonicity(g, cfg):
    p = cfg.characteristic
    big = betti("parity", g, p)
    ring = make_ring(g.n, p)
    full = build_ideal("parity", g, ring)
    for a, h in _induced_subgraphs(g):
        small = betti("parity", h, p)
        for (i, j), b in small.entries.items():
            if b > big.beta(i, j):
                return False, {"subset": list(a), "entry": [i, j], "beta_H": b, "beta_G": big.beta(i, j)}, {}
        inside = set(a)
        gens = tuple(
            edge_polynomial("gbar", i, j, ring) for i, j in g.sorted_edges() if i in inside and j in inside
        )
        if not same_ideal(IdealGenerators(ring, gens), intersect_subring(full, a)):
            return False, {"subset": list(a), "ideal_mismatch": True}, {}
    return True, {"induced_subgraphs": 2 ** g.n - 2}, {}


_register(
    "induced_monotonicity",
    "H induced in G: beta_{i,j}(S_H/I_H) <= beta_{i,j}(S/I_G), and I_H = I_G intersected with S_H",
    _needs(_has_edge, _connected),
    _check_induced_monotonicity,
    connected_only=True,
)


def _is_pure_graph(g, cfg):
    return betti("parity", g, cfg.characteristic).is_pure()


def _check_induced_pure(g, cfg):
    for a, h in _induced_subgraphs(g):
        if not _is_pure_graph(h, cfg):
            return False, {"subset": list(a), "induced_graph6": G.to_graph6(h)}, {}
    return True, {"induced_subgraphs": 2 ** g.n - 2}, {}


_register(
    "induced_pure",
    "S/I_G pure implies S_H/I_H pure for every induced H",
    lambda g, cfg: None if _is_pure_graph(g, cfg) else "S/I_G is not pure",
    _check_induced_pure,
)


def _check_pure_classification(g, cfg):
    pure = _is_pure_graph(g, cfg)
    fam = pure_family(g)
    t = betti("parity", g, cfg.characteristic)
    return pure == fam, {"pure": pure, "in_family": fam, "table": _table_json(t)}, {}


_register(
    "pure_classification",
    "S/I_G pure iff G is complete bipartite or a disjoint union of odd cycles and paths",
    lambda g, cfg: None,
    _check_pure_classification,
)


def _check_colon_lemma(g, cfg):
    ring = make_ring(g.n, cfg.characteristic)
    for e in colon_edges(g):
        comb_ = colon_generators_combinatorial(g, e, ring)
        groeb = colon_of_edge(g, e, cfg.characteristic)
        phi = colon_generators_phi(g, e, ring)
        a, b = same_ideal(comb_, groeb), same_ideal(groeb, phi)
        if not (a and b):
            return False, {"edge": list(e), "combinatorial_eq_colon": a, "colon_eq_phi": b}, {}
    return True, {"edges_checked": len(colon_edges(g))}, {}


_register(
    "colon_lemma",
    "combinatorial generators = Groebner colon = Phi(J_{(G minus e)_e})",
    _needs(_non_bip, _colon_edge),
    _check_colon_lemma,
)


def _check_phi(g, cfg):
    ring = make_ring(g.n, cfg.characteristic)
    parts = G.bipartition(g)
    ok = same_ideal(phi_ideal(build_ideal("binomial", g, ring), parts), build_ideal("parity", g, ring))
    return ok, {"bipartition": [sorted(parts[0]), sorted(parts[1])], "equal": ok}, {}


_register(
    "phi_identity",
    "bipartite G: Phi(J_G) = I_G",
    _needs(_has_edge, _bip),
    _check_phi,
)


def _check_eta(g, cfg):
    chars = []
    for p in (cfg.characteristic,) + tuple(cfg.extra_characteristics):
        if p not in chars:
            chars.append(p)
    results = {}
    for p in chars:
        ring = make_ring(g.n, p)
        if p == 2:
            ok = same_ideal(build_ideal("parity", g, ring), build_ideal("lss", g, ring)) and same_ideal(
                build_ideal("permanental", g, ring), build_ideal("binomial", g, ring)
            )
        else:
            ok = same_ideal(eta_ideal(build_ideal("parity", g, ring)), build_ideal("permanental", g, ring))
        results[str(p)] = ok
    return all(results.values()), {"by_characteristic": results}, {"characteristics": chars}


_register(
    "eta_identity",
    "eta(I_G) = Pi_G away from characteristic 2; I_G = L_G and Pi_G = J_G in characteristic 2",
    _needs(_has_edge),
    _check_eta,
)


def _check_lss(g, cfg):
    a = betti("lss", g, cfg.characteristic)
    b = betti("parity", g, cfg.characteristic)
    if a == b:
        return True, {"equal": True}, {}
    return False, {"lss": _table_json(a), "parity": _table_json(b)}, {}


_register(
    "lss_betti_equal",
    "S/L_G and S/I_G have the same Betti table",
    _needs(_has_edge, _connected),
    _check_lss,
    connected_only=True,
)


def _check_ses(g, cfg):
    p = cfg.characteristic
    r = reg("parity", g, p)
    for e in colon_edges(g):
        r_rest = reg("parity", G.delete_edge(g, e), p)
        r_colon = _colon_table(g, e, p).regularity()
        if r > max(r_rest, r_colon + 1):
            return False, {"edge": list(e), "reg": r, "reg_minus_e": r_rest, "reg_colon": r_colon}, {}
    return True, {"reg": r, "edges_checked": len(colon_edges(g))}, {}


_register(
    "ses_reg_inequality",
    "reg(S/I_G) <= max(reg(S/I_{G minus e}), reg(S/(I_{G minus e} : gbar_e)) + 1)",
    _needs(_non_bip, _colon_edge),
    _check_ses,
)


def _check_kk(g, cfg):
    r = reg("parity", g, cfg.characteristic)
    ell = G.longest_induced_path_length(g)
    return ell <= r <= g.n, {"induced_path": ell, "reg": r, "n": g.n}, {}


_register(
    "kk_conjecture_probe",
    "conjectural: l(G) <= reg(S/I_G) <= n for connected G (report only)",
    _needs(_has_edge, _connected),
    _check_kk,
    connected_only=True,
    probe=True,
)


# instantiations of cited results used along the way


def _check_claw(g, cfg):
    b = betti("parity", g, cfg.characteristic).beta(3, 5)
    return b != 0, {"beta_3_5": b}, {}


_register(
    "ext_claw_beta35",
    "claw: beta_{3,5}(S/I_G) != 0",
    _needs((lambda g: G.is_isomorphic(g, G.claw_graph()), "G is not the claw")),
    _check_claw,
    connected_only=True,
    tag="external",
    candidates=_named_candidates(G.claw_graph),
)


def _check_diamond_binomial(g, cfg):
    b = betti("binomial", g, cfg.characteristic).beta(2, 3)
    return b == 4, {"beta_2_3": b}, {}


_register(
    "ext_diamond_binomial_beta23",
    "diamond: beta_{2,3}(S/J_G) = 4",
    _needs((lambda g: G.is_isomorphic(g, G.diamond_graph()), "G is not the diamond")),
    _check_diamond_binomial,
    connected_only=True,
    tag="external",
    candidates=_named_candidates(G.diamond_graph),
)


def _check_binomial_reg(g, cfg):
    r = reg("binomial", g, cfg.characteristic)
    is_path = G.classify(g).is_path
    ok = r <= g.n - 1 and ((r == g.n - 1) == is_path)
    return ok, {"reg_J": r, "n": g.n, "is_path": is_path}, {}


_register(
    "ext_binomial_reg_path",
    "connected G: reg(S/J_G) <= n-1 with equality iff G is a path",
    _needs(_has_edge, _connected),
    _check_binomial_reg,
    connected_only=True,
    tag="external",
)


def _check_complete_bipartite_pure(g, cfg):
    t = betti("parity", g, cfg.characteristic)
    return t.is_pure() and t.regularity() <= 2, {"pure": t.is_pure(), "reg": t.regularity()}, {}


_register(
    "ext_complete_bipartite_pure",
    "complete bipartite G: S/I_G has a pure resolution and regularity at most 2",
    _needs(_connected, (lambda g: G.classify(g).is_complete_bipartite, "G is not complete bipartite")),
    _check_complete_bipartite_pure,
    connected_only=True,
    tag="external",
)


# ----------------------------------------------------------------------
# checking and sweeping


def get_claim(claim_id: str) -> Claim:
    try:
        return CLAIMS[claim_id]
    except KeyError:
        raise UnknownClaimError(claim_id) from None


def check_claim(claim_id: str, g: Graph, config: CheckConfig = None) -> ClaimReport:
    claim = get_claim(claim_id)
    cfg = config or CheckConfig()
    start = time.perf_counter()
    reason = claim.hypothesis(g, cfg)
    if reason is not None:
        return ClaimReport(claim_id, g, False, "skipped", reason=reason, probe=claim.probe,
                           timings={"seconds": round(time.perf_counter() - start, 6)})
    ok, witness, params = claim.check(g, cfg)
    verdict = "pass" if ok else "fail"
    params = dict(params, characteristic=cfg.characteristic)
    return ClaimReport(claim_id, g, True, verdict, witness, {"seconds": round(time.perf_counter() - start, 6)},
                       params, probe=claim.probe)


def graphs_for(claim: Claim, k: int):
    if claim.candidates is not None:
        return list(claim.candidates(k))
    return list(G.enumerate_graphs(k, connected_only=claim.connected_only))


@dataclass
class SweepResult:
    reports: list
    summary: dict

    @property
    def failed(self) -> bool:
        """True when a non-probe claim failed somewhere."""
        return any(r.verdict == "fail" and not r.probe for r in self.reports)

    def failures(self, include_probes: bool = False) -> list:
        return [r for r in self.reports if r.verdict == "fail" and (include_probes or not r.probe)]

    def write_jsonl(self, fh):
        for r in self.reports:
            fh.write(r.to_json() + "\n")
        fh.write(json.dumps({"summary": self.summary}, sort_keys=True) + "\n")


def _run_task(args):
    claim_id, g6, cfg = args
    return check_claim(claim_id, G.from_graph6(g6), cfg)


def summarize(reports: list, n_max: int) -> dict:
    per = {}
    for r in reports:
        s = per.setdefault(r.claim_id, {"checked": 0, "pass": 0, "fail": 0, "skipped": 0,
                                        "failures": [], "probe": r.probe})
        s[r.verdict] += 1
        if r.hypotheses_met:
            s["checked"] += 1
        if r.verdict == "fail":
            s["failures"].append(G.to_graph6(r.graph))
    for cid, s in per.items():
        s["vacuous"] = n_max >= 5 and s["checked"] == 0
    total = {v: sum(s[v] for s in per.values()) for v in ("pass", "fail", "skipped")}
    total["failed_claims"] = sorted(c for c, s in per.items() if s["fail"] and not s["probe"])
    total["probe_counterexamples"] = sum(s["fail"] for s in per.values() if s["probe"])
    return {"n_max": n_max, "claims": per, "total": total}


def sweep(n_max: int, claims=None, config: CheckConfig = None, jobs: int = 1,
          n_min: int = 1, progress=None) -> SweepResult:
    """Run claims over every graph (up to isomorphism) on n_min..n_max vertices."""
    if n_max > N_MAX_CEILING:
        raise ValueError(f"n_max above the supported ceiling {N_MAX_CEILING}")
    claims = list(claims or CLAIMS)
    for c in claims:
        get_claim(c)
    cfg = config or CheckConfig()
    tasks = []
    cache = {}
    for cid in claims:
        claim = CLAIMS[cid]
        for k in range(n_min, n_max + 1):
            if claim.candidates is None:
                key = (k, claim.connected_only)
                if key not in cache:
                    cache[key] = [G.to_graph6(g) for g in G.enumerate_graphs(k, connected_only=claim.connected_only)]
                g6s = cache[key]
            else:
                g6s = [G.to_graph6(g) for g in claim.candidates(k)]
            tasks.extend((cid, s, cfg) for s in g6s)
    if jobs > 1:
        from multiprocessing import Pool

        with Pool(jobs) as pool:
            reports = []
            for r in pool.imap(_run_task, tasks, chunksize=4):
                reports.append(r)
                if progress:
                    progress(r)
    else:
        reports = []
        for t in tasks:
            r = _run_task(t)
            reports.append(r)
            if progress:
                progress(r)
    return SweepResult(reports, summarize(reports, n_max))
