import random
from fractions import Fraction

import pytest

from equiangular.exactnum import QuadExt, parse_scalar, quad_sign
from equiangular.graphenum import count_graph_classes
from equiangular.linalg import psd_check
from equiangular.saturate import (
    candidates,
    compatibility_graph,
    enumerate_pd_bases,
    m_alpha,
    m_star,
    realize,
    saturation_report,
    switching_isomorphism,
    uniqueness_check_8_third,
)
from equiangular.seidel import EquiangularSet, SeidelMatrix, switch, SwitchingOp


def test_graph_class_counts():
    assert [count_graph_classes(n) for n in range(1, 8)] == [1, 2, 4, 11, 34, 156, 1044]


@pytest.mark.parametrize("n,count", [(8, 12346)])
def test_graph_class_count_eight(n, count):
    assert count_graph_classes(n) == count


def test_enumerate_pd_bases_8_third(enum_8_third):
    assert enum_8_third.classes_scanned == 1044
    assert len(enum_8_third.seeds) == 3
    edge_counts = sorted(s.graph.edge_count() for s in enum_8_third.seeds)
    # empty graph, one edge (K2 + 5 isolated), star K_{1,6}
    assert edge_counts == [0, 1, 6]
    for seed in enum_8_third.seeds:
        assert psd_check(seed.gram()).verdict == "positive_definite"


def test_enumerate_pd_bases_rank2():
    enum = enumerate_pd_bases(2, Fraction(1, 3))
    assert len(enum.seeds) == 1
    g = enum.seeds[0].gram()
    assert g.entry(0, 1) == Fraction(1, 3)


def test_candidates_and_saturation_totals(enum_8_third):
    totals = []
    for seed in enum_8_third.seeds:
        rep = saturation_report(seed)
        totals.append(rep.total)
        assert rep.total == 8 + rep.clique_size
        # re-verify candidate coordinates solve G c = alpha eps with unit norm
        cs = candidates(seed)
        g = seed.gram()
        for line in cs.lines[:8]:
            lhs = [
                sum(g.entry(i, j) * line.coords[j] for j in range(8))
                for i in range(8)
            ]
            assert lhs == [Fraction(1, 3) * e for e in line.sign_vector]
            norm = sum(line.coords[i] * lhs[i] for i in range(8))
            assert norm == 1
    assert sorted(totals) == [8, 14, 14]


def test_m_alpha_8_third(m_8_third):
    assert m_8_third.value == 14
    assert m_8_third.certificate["classes_scanned"] == 1044
    assert m_8_third.certificate["seeds"] == 3
    assert m_8_third.certificate["totals_histogram"] == {"8": 1, "14": 2}
    for entry in m_8_third.certificate["maximizing_seeds"]:
        assert entry["clique"] == 6


def test_realized_sets_verified(enum_8_third):
    for seed in enum_8_third.seeds:
        rep = saturation_report(seed)
        e = rep.realized
        assert e.rank == 8
        assert psd_check(e.gram()).is_psd
        n = e.n
        for i in range(n):
            for j in range(n):
                if i != j:
                    assert e.seidel.rows[i][j] in (1, -1)


def test_compatibility_graph_edges(enum_8_third):
    seed = max(enum_8_third.seeds, key=lambda s: s.graph.edge_count())
    cs = candidates(seed)
    g = compatibility_graph(cs)
    # every edge corresponds to an exact +-alpha inner product
    gram = seed.gram()
    for i in range(g.n):
        ci = cs.lines[i].coords
        for j in range(i + 1, g.n):
            cj = cs.lines[j].coords
            inner = sum(
                ci[a] * gram.entry(a, b) * cj[b] for a in range(8) for b in range(8)
            )
            if g.has_edge(i, j):
                assert inner in (Fraction(1, 3), Fraction(-1, 3))
            else:
                assert inner not in (Fraction(1, 3), Fraction(-1, 3))


def test_table3_fast_cells(table3_fast):
    expected = {
        (8, "1/3"): 14, (8, "1/5"): 10, (8, "1/7"): 9,
        (9, "1/3"): 16, (9, "1/5"): 12, (9, "1/7"): 10, (9, "1/sqrt(17)"): 18,
        (10, "1/3"): 18,
    }
    for cell, want in expected.items():
        assert table3_fast[cell].value == want, cell


def test_m_alpha_at_least_rank(table3_fast):
    for cell, rep in table3_fast.items():
        if cell == "elapsed":
            continue
        assert rep.value >= rep.inputs["rank"]


def test_sqrt17_realization_stays_in_field(table3_fast):
    rep = table3_fast[(9, "1/sqrt(17)")]
    assert rep.value == 18
    alpha = parse_scalar("1/sqrt(17)")
    enum = enumerate_pd_bases(9, alpha, count_scanned=False)
    winner_g6 = rep.certificate["maximizing_seeds"][0]["graph6"]
    seed = next(s for s in enum.seeds if s.nonroot_graph6 == winner_g6)
    cs = candidates(seed)
    for line in cs.lines[:4]:
        for c in line.coords:
            assert isinstance(c, (QuadExt, Fraction))
    witness = tuple(rep.certificate["maximizing_seeds"][0]["witness"])
    e = realize(seed, cs, witness)
    assert e.n == 18 and e.rank == 9
    assert e.alpha == alpha


@pytest.mark.slow
def test_m_alpha_10_fifth():
    rep = m_alpha(10, Fraction(1, 5), count_scanned=False)
    assert rep.value == 16


def test_m_star(mstar_reports):
    assert mstar_reports[8].value == 14
    assert mstar_reports[9].value == 18
    assert mstar_reports[10].value == 18
    audit9 = {a["alpha"]: a for a in mstar_reports[9].certificate["audit"]}
    assert audit9["1/3"]["value"] == 16
    assert any("sqrt(17)" in k for k in audit9)
    audit10 = {a["alpha"]: a for a in mstar_reports[10].certificate["audit"]}
    assert audit10["1/5"]["method"] == "relative_bound" and audit10["1/5"]["bound"] == 16


def test_uniqueness_8_third():
    rep = uniqueness_check_8_third()
    assert rep["equivalent"] and rep["size"] == 14
    assert rep["witness"] is not None
    # the witness really carries one system to the other
    e1 = EquiangularSet.from_json(rep["systems"][0])
    e2 = EquiangularSet.from_json(rep["systems"][1])
    op = SwitchingOp(frozenset(rep["witness"]["flips"]), tuple(rep["witness"]["perm"]))
    assert op.apply(e1.seidel) == e2.seidel


def test_switching_isomorphism_reflexive_and_size_mismatch(enum_8_third):
    seed = enum_8_third.seeds[1]
    rep = saturation_report(seed)
    e = rep.realized
    # a system is equivalent to its own relabeling
    rng = random.Random(60)
    perm = list(range(e.n))
    rng.shuffle(perm)
    flips = frozenset(v for v in range(e.n) if rng.random() < 0.5)
    shuffled = switch(e, SwitchingOp(flips, tuple(perm)))
    op = switching_isomorphism(e, shuffled)
    assert op is not None and op.apply(e.seidel) == shuffled.seidel
    # size mismatch is an error, not inequivalence
    sub = EquiangularSet(
        e.alpha,
        SeidelMatrix(tuple(tuple(r[:13]) for r in e.seidel.rows[:13])),
    )
    with pytest.raises(ValueError):
        switching_isomorphism(e, sub)


def test_switching_isomorphism_distinguishes(enum_8_third):
    reps = [saturation_report(s) for s in enum_8_third.seeds]
    fourteen = [r.realized for r in reps if r.total == 14]
    eight = [r.realized for r in reps if r.total == 8][0]
    assert switching_isomorphism(fourteen[0], fourteen[1]) is not None
    # an 8-line subsystem of a 14-line system is not the saturated 8-line one
    sub = EquiangularSet(
        Fraction(1, 3),
        SeidelMatrix(tuple(tuple(r[:8]) for r in fourteen[0].seidel.rows[:8])),
    )
    assert switching_isomorphism(eight, sub) is None
