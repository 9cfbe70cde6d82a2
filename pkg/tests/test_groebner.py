from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from edgeideals import graphs as G
from edgeideals.groebner import (
    buchberger,
    colon_ideal,
    contained_in,
    exact_divide,
    GroebnerError,
    ideal_equal,
    intersect_subring,
    is_reduced,
    membership,
    normal_form,
    spair_check,
)
from edgeideals.ideals import IDEAL_KINDS, IdealGenerators, build_ideal, edge_polynomial
from edgeideals.ring import make_ring
from strategies import graphs


def monic_set(ring, polys):
    """Reduced bases as sets of {exponents: coefficient} with leading coefficient 1."""
    out = set()
    for f in polys:
        lc = f.leading_coefficient()
        inv = ring.inv(lc)
        p = ring.characteristic
        out.add(frozenset((ring.decode(m), (c * inv) % p if p else c * inv) for m, c in f.terms.items()))
    return out


def sympy_basis(ring, ideal):
    syms = sympy.symbols(" ".join(ring.var_names))
    exprs = []
    for f in ideal.gens:
        e = 0
        for m, c in f.terms.items():
            c = ring.signed(c) if ring.characteristic else c
            c = sympy.Rational(c.numerator, c.denominator) if isinstance(c, Fraction) else c
            mono = 1
            for s, k in zip(syms, ring.decode(m)):
                mono *= s ** k
            e += c * mono
        exprs.append(e)
    kw = {"modulus": ring.characteristic} if ring.characteristic else {}
    gb = sympy.groebner(exprs, *syms, order="grevlex", **kw)
    out = set()
    p = ring.characteristic
    for poly in gb.polys:
        terms = {}
        for mono, c in poly.terms():
            c = Fraction(int(sympy.Rational(c).p), int(sympy.Rational(c).q)) if not p else int(c) % p
            terms[tuple(mono)] = c
        lead = terms[tuple(poly.terms(order="grevlex")[0][0])]
        if p:
            inv = pow(lead, -1, p)
            out.add(frozenset((m, c * inv % p) for m, c in terms.items()))
        else:
            out.add(frozenset((m, c / lead) for m, c in terms.items()))
    return out


@pytest.mark.parametrize("kind", IDEAL_KINDS)
@pytest.mark.parametrize("family", ["cycle:3", "path:4", "claw", "diamond", "cycle:5", "complete:4"])
def test_reduced_basis_matches_sympy(kind, family):
    g = G.named_graph(family)
    for p in (0, 32003):
        ring = make_ring(g.n, p)
        ideal = build_ideal(kind, g, ring)
        gb = buchberger(ideal)
        assert monic_set(ring, gb.basis) == sympy_basis(ring, ideal)
        assert spair_check(gb) and is_reduced(gb)


@settings(max_examples=15)
@given(graphs(min_n=2, max_n=5), st.sampled_from(IDEAL_KINDS))
def test_random_graph_bases_match_sympy(g, kind):
    ring = make_ring(g.n, 32003)
    ideal = build_ideal(kind, g, ring)
    if not ideal.gens:
        return
    assert monic_set(ring, buchberger(ideal).basis) == sympy_basis(ring, ideal)


@settings(max_examples=15)
@given(graphs(min_n=2, max_n=5))
def test_generators_reduce_to_zero(g):
    ring = make_ring(g.n, 32003)
    ideal = build_ideal("parity", g, ring)
    gb = buchberger(ideal)
    for f in ideal.gens:
        assert not normal_form(f, gb)
        assert membership(f * ring.x(1), gb)


def test_c3_basis_and_normal_form():
    ring = make_ring(3, 32003)
    gb = buchberger(build_ideal("parity", G.cycle_graph(3), ring))
    assert spair_check(gb) and is_reduced(gb)
    assert not gb.is_unit()
    assert gb.contains(ring.parse("x1*x2 - y1*y2"))
    assert not gb.contains(ring.parse("x1*x2"))
    # normal forms are unique representatives
    f = ring.parse("x1*x2*x3 + x1^2")
    g = f + ring.x(3) * ring.parse("x1*x2 - y1*y2")
    assert gb.normal_form(f) == gb.normal_form(g)


def test_characteristic_zero_basis_is_primitive():
    ring = make_ring(3, 0)
    gb = buchberger(build_ideal("lss", G.cycle_graph(3), ring))
    for f in gb.basis:
        assert all(c.denominator == 1 for c in f.terms.values())
        assert f.leading_coefficient() > 0


def test_trace_records_pairs():
    ring = make_ring(3, 32003)
    trace = []
    buchberger(build_ideal("parity", G.cycle_graph(3), ring), trace=trace)
    assert trace and all(len(t) == 4 for t in trace)


def test_ideal_equality_and_containment():
    ring = make_ring(3, 32003)
    a = build_ideal("parity", G.path_graph(3), ring)
    b = build_ideal("parity", G.cycle_graph(3), ring)
    assert contained_in(a, b) and not contained_in(b, a)
    assert ideal_equal(a, IdealGenerators(ring, tuple(reversed(a.gens))))
    assert not ideal_equal(a, b)


def test_unit_ideal():
    ring = make_ring(2, 32003)
    gb = buchberger([ring.one() + ring.x(1), ring.x(1)])
    assert gb.is_unit()


def test_exact_divide():
    ring = make_ring(2, 0)
    f = ring.parse("x1 - y1")
    q = f * ring.parse("x2 + 3*y2")
    assert exact_divide(q, f) == ring.parse("x2 + 3*y2")
    with pytest.raises(GroebnerError):
        exact_divide(ring.parse("x1*x2 + 1"), f)


def test_colon_examples():
    ring = make_ring(3, 32003)
    p3 = build_ideal("parity", G.path_graph(3), ring)
    # colon by a member of the ideal is the unit ideal
    assert buchberger(colon_ideal(p3, edge_polynomial("gbar", 2, 3, ring))).is_unit()
    # gbar_12 is irreducible, so it is a nonzerodivisor modulo gbar_23
    single = IdealGenerators(ring, (edge_polynomial("gbar", 1, 2, ring),))
    assert ideal_equal(colon_ideal(single, edge_polynomial("gbar", 2, 3, ring)), single)
    k2 = build_ideal("parity", G.complete_graph(2), make_ring(2, 32003))
    assert buchberger(colon_ideal(k2, k2.gens[0])).is_unit()
    # (x1^2) : x1 = (x1)
    mono = IdealGenerators(ring, (ring.parse("x1^2"),))
    assert ideal_equal(colon_ideal(mono, ring.x(1)), IdealGenerators(ring, (ring.x(1),)))
    with pytest.raises(ValueError):
        colon_ideal(mono, ring.zero())


@settings(max_examples=10)
@given(graphs(min_n=3, max_n=5))
def test_colon_defining_property(g):
    """f * (I : f) lies in I, and I is inside (I : f)."""
    ring = make_ring(g.n, 32003)
    ideal = build_ideal("parity", g, ring)
    f = edge_polynomial("gbar", 1, 2, ring)
    col = colon_ideal(ideal, f)
    gb = buchberger(ideal)
    assert all(gb.contains(f * q) for q in col.gens)
    assert contained_in(ideal, col)


def test_intersect_subring():
    ring = make_ring(3, 32003)
    c3 = build_ideal("parity", G.cycle_graph(3), ring)
    inter = intersect_subring(c3, {1, 2})
    assert [str(f) for f in inter.gens] == ["x1*x2 - y1*y2"]
    with pytest.raises(ValueError):
        intersect_subring(c3, {4})
