import itertools
import random
from fractions import Fraction

import pytest

from equiangular import linalg
from equiangular.bounds import welch_bound_sq
from equiangular.constructions import (
    BASE_OCTADS,
    block_52_equiangular,
    block_52_family,
    conference_etf,
    golay_octads,
    paley_conference,
    simplex_base,
    witt276,
    witt276_base_and_pillars,
    witt_spectrum_certificate,
)
from equiangular.exactnum import parse_scalar
from equiangular.seidel import base_size


def test_octad_counts(witt):
    assert len(witt.octads.octads) == 759
    assert len(witt.octads.octads_through_1) == 253
    assert all(1 in o for o in witt.octads.octads_through_1)


def test_octad_intersections_and_steiner(witt):
    masks = []
    for o in witt.octads.octads:
        m = 0
        for p in o:
            m |= 1 << (p - 1)
        masks.append(m)
    sizes = set()
    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            sizes.add((masks[i] & masks[j]).bit_count())
    assert sizes == {0, 2, 4}
    # counting identity: 759 octads x C(8,5) five-subsets, none repeated,
    # exhausts all C(24,5) five-subsets: the Steiner property in full
    assert 759 * 56 == 42504
    # spot-check directly on random 5-subsets
    rng = random.Random(50)
    for _ in range(10_000):
        pts = frozenset(rng.sample(range(1, 25), 5))
        containing = [m for m in masks if all(m >> (p - 1) & 1 for p in pts)]
        assert len(containing) == 1


def test_base_octads_are_octads(witt):
    got = set(witt.octads.octads)
    for sigma in BASE_OCTADS:
        assert tuple(sorted(sigma)) in got


def test_witt_vectors(witt):
    assert len(witt.vectors) == 276
    assert all(sum(x * x for x in v) == 80 for v in witt.vectors)
    assert all(5 * v[0] + sum(v[1:]) == 0 for v in witt.vectors)
    # v_2 .. v_24 are linearly independent: they are the last 23 vectors
    tail = witt.vectors[253:]
    m = linalg.SymMatrix(
        [[Fraction(sum(a * b for a, b in zip(u, v))) for v in tail] for u in tail]
    )
    assert linalg.rank_of(m) == 23


def test_witt_pairwise_products(witt):
    vecs = witt.vectors
    n = len(vecs)
    count = 0
    for i in range(n):
        vi = vecs[i]
        for j in range(i + 1, n):
            dot = sum(a * b for a, b in zip(vi, vecs[j]))
            assert dot in (16, -16)  # normalized: +-16/80 = +-1/5
            count += 1
    assert count == 37950


def test_witt_rank_and_base_size(witt):
    e = witt.lines
    assert e.n == 276 and e.rank == 23
    k, base, op = base_size(e)
    assert k == 6


def test_witt_spectrum(witt):
    cert = witt_spectrum_certificate()
    assert cert["rank_A_plus_5I"] == 23
    assert cert["rank_A_minus_55I"] == 253
    assert cert["product_zero"]
    assert cert["spectrum"] == {"-5": 253, "55": 23}
    assert cert["trace_check"] and cert["trace_sq_check"]


def test_witt_pillar_decomposition(witt_pillars):
    e, dec = witt_pillars
    assert len(dec.base.vertices) == 6
    b = dec.base.vertices
    for u, v in itertools.combinations(b, 2):
        assert e.seidel.rows[u][v] == -1  # mutual inner products -1/5
    sizes = dec.sizes()
    assert len(sizes) == 10 and set(sizes.values()) == {27}
    assert sum(sizes.values()) == 270
    # every pillar key has exactly three positive entries out of six
    assert all(k.count("+") == 3 for k in sizes)
    # partition
    seen = sorted(v for verts in dec.pillars.values() for v in verts)
    assert seen == [v for v in range(276) if v not in b]


def test_witt_pillar_triangles(witt_pillars):
    e, dec = witt_pillars
    g = e.seidel.graph()
    total = 0
    for verts in dec.pillars.values():
        sub = g.induced(verts)
        comps = sub.components()
        assert len(comps) == 9
        for c in comps:
            assert len(c) == 3 and sub.induced(c).edge_count() == 3
        total += len(comps)
    assert total == 90


def test_paley_conference():
    c = paley_conference(17)
    assert c.order == 18 and c.order % 4 == 2
    # B^2 = 17 I re-verified entrywise
    n = c.order
    for i in range(n):
        for j in range(n):
            dot = sum(c.rows[i][k] * c.rows[k][j] for k in range(n))
            assert dot == (17 if i == j else 0)
    with pytest.raises(ValueError):
        paley_conference(7)  # 3 mod 4
    with pytest.raises(ValueError):
        paley_conference(15)  # not prime


def test_conference_etf_17():
    etf = conference_etf(paley_conference(17))
    assert etf.n == 18 and etf.rank == 9
    assert etf.alpha == parse_scalar("1/sqrt(17)")
    # Welch equality: alpha^2 = (M-r)/(r(M-1))
    assert etf.alpha * etf.alpha == welch_bound_sq(18, 9)
    # deleting any one line keeps rank 9
    sub = etf.gram().submatrix(range(17))
    assert linalg.rank_of(sub) == 9


def test_conference_etf_icosahedron():
    etf = conference_etf(paley_conference(5))
    assert etf.n == 6 and etf.rank == 3
    assert etf.alpha * etf.alpha == welch_bound_sq(6, 3)


def test_simplex_base():
    assert simplex_base(6, Fraction(1, 5)).rank == 5  # dependent at K = 1/alpha+1
    assert simplex_base(5, Fraction(1, 5)).rank == 5
    assert simplex_base(2, Fraction(1, 3)).rank == 2
    with pytest.raises(ValueError):
        simplex_base(7, Fraction(1, 5))
    with pytest.raises(ValueError):
        simplex_base(1, Fraction(1, 5))


def test_block_52_family_ranks():
    for ell in range(1, 7):
        m = block_52_family(ell)
        cert = linalg.psd_check(m)
        assert cert.is_psd
        assert cert.rank == 2 * ell + 1
    assert linalg.psd_check(block_52_family(1)).verdict == "positive_definite"


def test_block_52_equiangular_base_size():
    for ell in (2, 3):
        e = block_52_equiangular(ell)
        assert base_size(e)[0] == 6
        # Seidel graph is a disjoint union of ell triangles
        g = e.seidel.graph()
        comps = g.components()
        assert len(comps) == ell
        assert all(len(c) == 3 for c in comps)
    assert base_size(block_52_equiangular(1))[0] == 3
