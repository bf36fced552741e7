from __future__ import annotations

import math
import random
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st
from oracles import circulant_link_naive, signature_naive

from rcgraphs.circulant import (
    BelowBound,
    CanonicalEdge,
    CirculantError,
    CirculantSpec,
    Mod3Impossible,
    build_jump_set,
    canonical_edge,
    construct_rc_circulant,
    edge_orbit,
    has_unit_orbit,
    link_counts,
    link_edge_formula,
    make_circulant,
    mod3_class,
    neighborhood_edges_at_zero,
    orbit_partition,
    recover_kj,
    threshold,
)
from rcgraphs.graph import rc_signature


@st.composite
def specs(draw, max_n: int = 60, max_jumps: int = 6) -> CirculantSpec:
    n = draw(st.integers(3, max_n))
    pool = list(range(1, n // 2 + 1))
    jumps = draw(st.lists(st.sampled_from(pool), min_size=1, max_size=min(max_jumps, len(pool)), unique=True))
    return CirculantSpec(n, tuple(jumps))


def test_spec_validation_and_parse():
    with pytest.raises(CirculantError):
        CirculantSpec(1, ())
    with pytest.raises(CirculantError):
        CirculantSpec(10, (6,))
    with pytest.raises(CirculantError):
        CirculantSpec(10, (2, 2))
    with pytest.raises(CirculantError):
        CirculantSpec.parse("ten:1")
    spec = CirculantSpec.parse("12:6,1,4,3")
    assert spec.jumps == (1, 3, 4, 6) and str(spec) == "12:1,3,4,6"
    assert spec.degree == 7


def test_worked_example_orbits():
    spec = CirculantSpec(12, (1, 3, 4, 6))
    orbits = sorted(sorted(o) for o in orbit_partition(spec))
    assert sorted(len(o) for o in orbits) == [1, 3, 6]
    assert [(1, 4), (1, 9), (3, 4), (3, 11), (8, 9), (8, 11)] in orbits
    assert [(3, 6), (3, 9), (6, 9)] in orbits
    assert [(4, 8)] in orbits
    assert sum(len(o) for o in orbits) == len(neighborhood_edges_at_zero(spec)) == 10
    assert tuple(rc_signature(make_circulant(spec))) == (7, 10)
    assert mod3_class(spec) == 1 and has_unit_orbit(spec)


def test_small_cycle_power():
    spec = CirculantSpec(7, (1, 2))
    assert [len(o) for o in orbit_partition(spec)] == [3]
    assert circulant_link_naive(7, (1, 2)) == 3


def test_canonical_edge_representation():
    spec = CirculantSpec(12, (1, 3, 4, 6))
    assert canonical_edge(spec, (1, 4)) == CanonicalEdge(1, 3)
    assert canonical_edge(spec, (3, 6)) == CanonicalEdge(3, 3)
    assert canonical_edge(spec, (4, 8)) == CanonicalEdge(4, 4)
    # 3 - 9 = 6 = n/2: both differences are jumps, the jump endpoint is x
    assert canonical_edge(spec, (3, 9)) == CanonicalEdge(3, 6)
    with pytest.raises(CirculantError):
        canonical_edge(spec, (1, 2))


@given(specs())
def test_mod3_law(spec):
    e = circulant_link_naive(spec.n, spec.jumps)
    assert e % 3 in (0, 1)
    assert (e % 3 == 1) == (spec.n % 3 == 0 and spec.n // 3 in spec.jumps)


@given(specs())
def test_orbits_partition_the_link(spec):
    orbits = orbit_partition(spec)
    edges = set(neighborhood_edges_at_zero(spec))
    assert all(len(o) in (1, 3, 6) for o in orbits)
    assert set().union(*orbits) == edges if orbits else not edges
    assert sum(len(o) for o in orbits) == len(edges)
    for o in orbits:
        for e in o:
            assert edge_orbit(spec, canonical_edge(spec, e)) == o


@given(specs(max_n=30))
def test_vertex_transitive(spec):
    counts = link_counts(spec)
    assert len(set(counts)) == 1
    assert counts[0] == circulant_link_naive(spec.n, spec.jumps)


def test_build_jump_set():
    assert build_jump_set(3, 1, 2) == [1, 2, 4, 9, 14]
    assert build_jump_set(1, 0, 0) == [1]
    with pytest.raises(CirculantError):
        build_jump_set(2, 2, 0)


@pytest.mark.parametrize("k", range(1, 7))
def test_link_formula_far_from_wraparound(k):
    for j in range(k):
        for l in range(4):
            s = build_jump_set(k, j, l)
            n = 4 * max(s) + 1
            assert circulant_link_naive(n, s) == link_edge_formula(k, j)
            n = 3 * (2 * max(s) + 3)
            assert circulant_link_naive(n, s + [n // 3]) == link_edge_formula(k, j, True)


def test_recover_kj_inverts_formula():
    for k in range(1, 12):
        for j in range(k):
            c = link_edge_formula(k, j)
            kk, jj = recover_kj(c)
            assert link_edge_formula(kk, jj) == c
    with pytest.raises(CirculantError):
        recover_kj(4)


def test_threshold_values():
    assert threshold(0) == 1
    assert threshold(3) == pytest.approx(6 + math.sqrt(19 / 3))


def test_construct_examples():
    assert str(construct_rc_circulant(6, 6)) == "11:1,2,4"
    assert str(construct_rc_circulant(7, 4)) == "18:1,2,6,9"
    assert construct_rc_circulant(1, 0) == CirculantSpec(2, (1,))
    with pytest.raises(Mod3Impossible):
        construct_rc_circulant(9, 5)
    with pytest.raises(BelowBound):
        construct_rc_circulant(3, 1)
    with pytest.raises(CirculantError):
        construct_rc_circulant(3, 4)


@pytest.mark.parametrize("c", [c for c in range(0, 22) if c % 3 != 2])
def test_construct_above_threshold(c):
    lo = 1 if c == 0 else math.ceil(threshold(c))
    for r in range(lo, lo + 4):
        spec = construct_rc_circulant(r, c)
        assert spec.degree == r
        assert signature_naive(make_circulant(spec)) == (r, c)


def test_construct_sometimes_below_threshold():
    found = []
    for r in range(2, 9):
        for c in range(comb(r, 2) + 1):
            try:
                spec = construct_rc_circulant(r, c)
            except CirculantError:
                continue
            assert tuple(rc_signature(make_circulant(spec))) == (r, c)
            found.append((r, c))
    assert (4, 1) in found and (6, 7) in found


def test_random_specs_are_rc():
    rng = random.Random(3)
    for _ in range(50):
        n = rng.randint(3, 40)
        jumps = rng.sample(range(1, n // 2 + 1), k=min(3, n // 2))
        sig = rc_signature(make_circulant(CirculantSpec(n, tuple(jumps))))
        assert sig is not None
