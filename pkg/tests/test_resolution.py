from itertools import combinations_with_replacement
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from edgeideals import graphs as G
from edgeideals.groebner import buchberger
from edgeideals.ideals import IDEAL_KINDS, IdealGenerators, build_ideal, edge_polynomial
from edgeideals.resolution import (
    BettiTable,
    ResolutionError,
    betti_from_steps,
    betti_table_koszul,
    betti_table_koszul_complete,
    betti_table_schreyer,
    compose,
    is_pure,
    koszul_table,
    minimal_resolution,
    projective_dimension,
    regularity,
    schreyer_frame,
    syzygies,
)
from edgeideals.ring import make_ring
from strategies import graphs

P = 32003


def table(kind, g, p=P):
    return betti_table_schreyer(build_ideal(kind, g, make_ring(g.n, p)))


def hilbert_numerator(gb, upto):
    """Coefficients of HS(t) * (1-t)^N, from a brute-force count of standard monomials."""
    ring = gb.ring
    leads = [ring.decode(f.leading_monomial()) for f in gb.basis]
    nv = ring.nvars
    h = []
    for d in range(upto + 1):
        count = 0
        for combo in combinations_with_replacement(range(nv), d):
            e = [0] * nv
            for v in combo:
                e[v] += 1
            if not any(all(a <= b for a, b in zip(m, e)) for m in leads):
                count += 1
        h.append(count)
    # multiply by (1-t)^N
    out = []
    for j in range(upto + 1):
        out.append(sum((-1) ** k * comb(nv, k) * h[j - k] for k in range(min(j, nv) + 1)))
    return out


# ----------------------------------------------------------------------
# worked examples


def test_c3_table():
    t = table("parity", G.cycle_graph(3))
    assert t.entries == {(0, 0): 1, (1, 2): 3, (2, 4): 3, (3, 6): 1}
    assert regularity(t) == 3 and projective_dimension(t) == 3
    assert is_pure(t)


def test_k2_table():
    t = table("parity", G.complete_graph(2))
    assert t.entries == {(0, 0): 1, (1, 2): 1}
    assert regularity(t) == 1 and projective_dimension(t) == 1
    ideal = build_ideal("parity", G.complete_graph(2), make_ring(2, P))
    assert betti_table_koszul(ideal, 6) == t


def test_p3_table():
    t = table("parity", G.path_graph(3))
    assert t.entries == {(0, 0): 1, (1, 2): 2, (2, 4): 1}
    ideal = build_ideal("parity", G.path_graph(3), make_ring(3, P))
    assert betti_table_koszul(ideal, 8) == t


def test_c5_koszul():
    ideal = build_ideal("parity", G.cycle_graph(5), make_ring(5, P))
    t = betti_table_koszul(ideal, 10)
    assert t == koszul_table(5, 10)
    assert t.complete
    assert all(t.beta(i, 2 * i) == comb(5, i) for i in range(6))


def test_regularity_and_purity_examples():
    assert regularity(table("parity", G.complete_bipartite_graph(2, 3))) == 2
    assert not is_pure(table("parity", G.diamond_graph()))
    assert is_pure(table("parity", G.claw_graph()))


def test_diamond_binomial_beta23():
    assert table("binomial", G.diamond_graph()).beta(2, 3) == 4


# ----------------------------------------------------------------------
# syzygies


def test_syzygies_examples():
    ring = make_ring(4, P)
    g12 = edge_polynomial("gbar", 1, 2, ring)
    g34 = edge_polynomial("gbar", 3, 4, ring)
    assert syzygies([g12], ring).shape == (1, 0)

    step = syzygies([g12, g34], ring)
    assert step.shape == (2, 1) and step.col_degrees == [4]
    col = step.columns[0]
    # the single syzygy is a scalar multiple of (g34, -g12)
    c = col[0].leading_coefficient() * ring.inv(g34.leading_coefficient()) % P
    assert col[0] == g34.scale(c) and col[1] == g12.scale(P - c)

    c3 = build_ideal("parity", G.cycle_graph(3), make_ring(3, P))
    step = syzygies(list(c3.gens), c3.ring)
    assert sorted(step.col_degrees) == [4, 4, 4]


@settings(max_examples=15)
@given(graphs(min_n=2, max_n=5), st.sampled_from(IDEAL_KINDS))
def test_syzygies_are_relations(g, kind):
    ring = make_ring(g.n, P)
    ideal = build_ideal(kind, g, ring)
    gb = buchberger(ideal)
    gens = [f for f in ideal.gens if f]
    if not gens or gb.is_unit():
        return
    step = syzygies(gens, ring)
    for col in step.columns:
        total = ring.zero()
        for t, h in col.items():
            total = total + h * gens[t]
        assert not total


def test_syzygies_rejects_redundant_generators():
    ring = make_ring(2, P)
    f = edge_polynomial("gbar", 1, 2, ring)
    with pytest.raises(ResolutionError):
        syzygies([f, f.scale(2)], ring)


# ----------------------------------------------------------------------
# structural invariants


@settings(max_examples=15)
@given(graphs(min_n=2, max_n=5), st.sampled_from(IDEAL_KINDS))
def test_minimal_resolution_is_a_minimal_complex(g, kind):
    ideal = build_ideal(kind, g, make_ring(g.n, P))
    steps = minimal_resolution(ideal)
    for a, b in zip(steps, steps[1:]):
        assert a.shape[1] == b.shape[0]
        assert all(not col for col in compose(a, b))
    assert not any(s.has_unit_entry() for s in steps)
    assert betti_from_steps(steps, ideal.ring.nvars) == betti_table_schreyer(ideal)


@settings(max_examples=20)
@given(graphs(min_n=1, max_n=4), st.sampled_from(IDEAL_KINDS))
def test_euler_characteristic_matches_hilbert_series(g, kind):
    ring = make_ring(g.n, P)
    gb = buchberger(build_ideal(kind, g, ring))
    t = betti_table_schreyer(gb)
    top = max(j for _, j in t.entries) + 1
    num = hilbert_numerator(gb, top)
    for j in range(top + 1):
        assert sum((-1) ** i * b for (i, jj), b in t.entries.items() if jj == j) == num[j]


@settings(max_examples=25)
@given(graphs(min_n=1, max_n=5), st.sampled_from(IDEAL_KINDS))
def test_table_invariants(g, kind):
    t = table(kind, g)
    assert t.beta(0, 0) == 1 and t.row(0) == {0: 1}
    assert all(i <= 2 * g.n for i, _ in t.entries)
    assert all(t.beta(i, i) == 0 for i in range(1, 2 * g.n + 1))
    assert t.row(1) == ({2: len(g.edges)} if g.edges else {})
    if t.multigraded is not None:
        assert sum(t.multigraded.values()) == sum(t.entries.values())


@settings(max_examples=15)
@given(graphs(min_n=1, max_n=4), st.sampled_from(IDEAL_KINDS))
def test_oracles_agree_on_random_graphs(g, kind):
    ideal = build_ideal(kind, g, make_ring(g.n, P))
    s = betti_table_schreyer(ideal)
    k = betti_table_koszul_complete(ideal)
    assert k.complete and s == k
    # a truncated run agrees below its bound
    if len(g.edges) > 1:
        part = betti_table_koszul(ideal, 3)
        assert part.entries == {key: b for key, b in s.entries.items() if key[1] <= 3}


@pytest.mark.parametrize("family", ["cycle:3", "path:4", "cycle:3+path:2", "cycle:5", "path:2+path:2"])
def test_complete_intersections(family):
    g = G.named_graph(family)
    assert table("parity", g) == koszul_table(len(g.edges), 2 * g.n)


@pytest.mark.parametrize("kind", IDEAL_KINDS)
def test_characteristic_zero_agrees_on_small_graphs(kind):
    for g in (G.cycle_graph(3), G.diamond_graph(), G.claw_graph()):
        assert table(kind, g, 0) == table(kind, g, P)


def test_frame_ranks_bound_betti_numbers():
    ring = make_ring(4, P)
    ideal = build_ideal("parity", G.diamond_graph(), ring)
    ranks = schreyer_frame(ideal).ranks()
    t = betti_table_schreyer(ideal)
    assert all(t.total(i) <= r for i, r in enumerate(ranks))


# ----------------------------------------------------------------------
# table API


def test_partial_tables():
    ideal = build_ideal("parity", G.cycle_graph(3), make_ring(3, P))
    part = betti_table_koszul(ideal, 4)
    assert not part.complete and part.j_max == 4
    assert part.regularity_lower_bound() == 2
    for fn in (regularity, projective_dimension, is_pure):
        with pytest.raises(ResolutionError):
            fn(part)
    data = BettiTable.from_json(part.to_json(), 6)
    assert not data.complete and data.j_max == 4 and data == part
    assert "partial" in part.diagram()
    with pytest.raises(ValueError):
        betti_table_koszul(ideal, 1)


def test_json_round_trip():
    t = table("parity", G.diamond_graph())
    text = t.to_json()
    assert '"pure": false' in text
    back = BettiTable.from_json(text, t.nvars)
    assert back == t and back.complete


def test_diagram():
    lines = table("parity", G.cycle_graph(3)).diagram().splitlines()
    assert lines[0].split() == ["0", "1", "2", "3"]
    assert lines[1].split() == ["total:", "1", "3", "3", "1"]
    assert lines[2].split() == ["0:", "1", ".", ".", "."]
    assert lines[3].split() == ["1:", ".", "3", ".", "."]
    assert lines[5].split() == ["3:", ".", ".", ".", "1"]
    assert BettiTable({}, 2).diagram() == "(zero module)"


def test_non_homogeneous_ideal_is_rejected():
    ring = make_ring(2, P)
    ideal = IdealGenerators(ring, (ring.parse("x1*x2 - y1"),))
    with pytest.raises(ResolutionError):
        betti_table_schreyer(ideal)


def test_is_pure_requires_quadrics():
    ring = make_ring(2, P)
    t = betti_table_schreyer(IdealGenerators(ring, (ring.parse("x1^3"),)))
    with pytest.raises(ResolutionError):
        is_pure(t)


@settings(max_examples=15)
@given(graphs(min_n=2, max_n=5), st.sampled_from(IDEAL_KINDS), st.randoms(use_true_random=False))
def test_generator_order_is_irrelevant(g, kind, rnd):
    ideal = build_ideal(kind, g, make_ring(g.n, P))
    gens = list(ideal.gens)
    rnd.shuffle(gens)
    shuffled = IdealGenerators(ideal.ring, tuple(gens))
    assert buchberger(shuffled).basis == buchberger(ideal).basis
    assert betti_table_schreyer(shuffled) == betti_table_schreyer(ideal)
