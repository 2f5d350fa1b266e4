"""Acceptance gate: one test per headline behavior, with runtime budgets.

Each test prints a single summary line so a log scan shows the verdict per
criterion.  Budgets are wall-clock upper bounds, generous on purpose; the
mathematical assertions are exact.
"""

import random
import time

from lyubtab.linalg import QQ, GF2
from lyubtab.squarefree import (MonomialIdeal, SimplicialComplex,
                                complex_of_ideal, ideal_of_complex,
                                alexander_dual)
from lyubtab.homology import reduced_homology, hochster_betti
from lyubtab.resolution import minimal_resolution, taylor_minimized
from lyubtab.invariants import (LyubeznikTable, lyubeznik_table,
                                DeficiencyProfile, gamma_components,
                                verify_report)
from lyubtab.fixtures import load_fixture, run_fixture, EXPECTED

RP2_FACETS = [(1, 2, 5), (1, 2, 6), (1, 3, 4), (1, 3, 5), (1, 4, 6),
              (2, 3, 4), (2, 3, 6), (2, 4, 5), (3, 5, 6), (4, 5, 6)]


def table_of(d, entries):
    grid = [[0] * (d + 1) for _ in range(d + 1)]
    for (p, i), v in entries.items():
        grid[p][i] = v
    return LyubeznikTable(d, grid)


def verdict(tag, started, budget):
    elapsed = time.monotonic() - started
    assert elapsed < budget, f"{tag}: {elapsed:.1f}s over the {budget}s budget"
    print(f"ACCEPTANCE {tag}: PASS ({elapsed:.1f}s)")


def test_criterion_01_ex4_table():
    started = time.monotonic()
    ideal, _ = load_fixture("ex4")
    got = lyubeznik_table(ideal, QQ)
    assert got == table_of(4, {(1, 3): 7, (3, 4): 7, (4, 4): 1})
    verdict("01 ex4-table", started, 60)


def test_criterion_02_ex4_dual_betti():
    started = time.monotonic()
    ideal, _ = load_fixture("ex4")
    dual = alexander_dual(ideal)
    want = {(0, 4): 18, (1, 5): 28, (2, 6): 4, (2, 7): 12, (3, 8): 5}
    oracle = hochster_betti(dual, QQ)
    assert oracle.coarse() == want
    engine = minimal_resolution(dual, QQ, check=False).betti()
    assert engine.coarse() == want
    assert engine == oracle
    verdict("02 ex4-dual-betti", started, 60)


def test_criterion_03_ex1_tables_agree():
    started = time.monotonic()
    want = table_of(5, {(2, 3): 1, (3, 4): 1, (5, 5): 3})
    tables = {}
    for name in ("ex1-I", "ex1-J"):
        ideal, _ = load_fixture(name)
        tables[name] = lyubeznik_table(ideal, QQ)
        assert tables[name] == want, name
    assert tables["ex1-I"] == tables["ex1-J"]
    verdict("03 ex1-tables-equal", started, 120)


def test_criterion_04_ex1_dual_betti():
    started = time.monotonic()
    ideal_i, _ = load_fixture("ex1-I")
    bt_i = hochster_betti(alexander_dual(ideal_i), QQ)
    assert bt_i.coarse() == {(0, 5): 3, (1, 7): 1, (1, 8): 1}
    ideal_j, _ = load_fixture("ex1-J")
    bt_j = hochster_betti(alexander_dual(ideal_j), QQ)
    by_step = {}
    for (j, deg), v in bt_j.items_sorted():
        by_step.setdefault(j, []).extend([len(deg)] * v)
    assert {j: sorted(sizes) for j, sizes in by_step.items()} == \
        {0: [5, 5, 5, 8], 1: [7, 8, 9, 9], 2: [10]}
    verdict("04 ex1-dual-betti", started, 120)


def test_criterion_05_trivial_tables_both_characteristics():
    started = time.monotonic()
    for name, d in (("ex2-in", 3), ("ex3-gin", 7)):
        ideal, _ = load_fixture(name)
        for field in (QQ, GF2):
            t = lyubeznik_table(ideal, field, check=False)
            assert t.is_trivial and t.d == d, (name, field.char)
    verdict("05 trivial-tables", started, 600)


def test_criterion_06_ring_properties():
    started = time.monotonic()
    ideal4, _ = load_fixture("ex4")
    prof4 = DeficiencyProfile.compute(ideal4, QQ)
    assert prof4.serre_max == 2
    assert prof4.cm_codim_min == 2
    assert not prof4.is_generalized_cm
    ideal_i, _ = load_fixture("ex1-I")
    prof_i = DeficiencyProfile.compute(ideal_i, QQ)
    assert prof_i.cm_codim_min == 4
    assert complex_of_ideal(ideal_i).is_equidimensional()
    ideal_j, _ = load_fixture("ex1-J")
    prof_j = DeficiencyProfile.compute(ideal_j, QQ)
    assert prof_j.cm_codim_min == 4
    assert not complex_of_ideal(ideal_j).is_equidimensional()
    verdict("06 ring-properties", started, 60)


def test_criterion_07_graph_identities():
    started = time.monotonic()
    ideal, _ = load_fixture("ex1-I")
    delta = complex_of_ideal(ideal)
    table = lyubeznik_table(ideal, QQ, check=False)
    assert gamma_components(delta, 1).n_components == 3 == table.entry(5, 5)
    assert gamma_components(delta, 4).n_components == 1
    assert table.entry(0, 1) == 0
    verdict("07 graph-identities", started, 120)


def test_criterion_08_last_column_identities_ex4():
    started = time.monotonic()
    ideal, _ = load_fixture("ex4")
    t = lyubeznik_table(ideal, QQ, check=False)
    lam = t.entry
    assert lam(4, 4) == lam(0, 1) + lam(1, 2) + 1
    assert lam(2, 4) == lam(0, 3)
    assert lam(3, 4) == lam(0, 2) + lam(1, 3)
    rep = verify_report(ideal, QQ, check=False, table_override=t)
    status = {c.check_id: c.status for c in rep.checks}
    assert status["cm2-column"] == "PASS"
    verdict("08 last-column-identities", started, 60)


def test_criterion_09_property_suite():
    started = time.monotonic()
    rng = random.Random(909)
    checked = 0
    while checked < 200:
        n = rng.randint(2, 7)
        gens = set()
        for _ in range(rng.randint(2, 8)):
            size = rng.randint(1, max(1, n - 1))
            gens.add(frozenset(rng.sample(range(1, n + 1), size)))
        ideal = MonomialIdeal(n, gens)
        if not ideal.is_proper_nonzero:
            continue
        delta = complex_of_ideal(ideal)
        d = delta.krull_dim
        dual = alexander_dual(ideal)
        for field in (QQ, GF2):
            # (a) three independent Betti routes agree
            res = minimal_resolution(dual, field, check=False)
            oracle = hochster_betti(dual, field)
            assert res.betti() == oracle, (sorted(map(sorted, ideal.gens)),
                                           field.char)
            if len(dual.gens) <= 10:
                assert taylor_minimized(dual, field).betti() == oracle
            # (b) complex invariants
            res.check_d_squared()
            res.check_minimal()
            # (c) per-column rank-nullity between the table and dual Betti
            table = lyubeznik_table(ideal, field, check=False)
            coarse = oracle.coarse()
            for i in range(d + 1):
                lhs = sum((-1) ** p * table.entry(p, i) for p in range(d + 1))
                rhs = sum((-1) ** p * coarse.get((i - p, ideal.n - p), 0)
                          for p in range(i + 1))
                assert lhs == rhs, (sorted(map(sorted, ideal.gens)),
                                    field.char, i)
            prof = DeficiencyProfile.compute(delta, field)
            # (d) cohen-macaulay rings have the trivial table
            if prof.is_cm:
                assert table.is_trivial
            # (e) serre vanishing band
            s = prof.serre_max
            if s >= 2:
                for i in range(d):
                    for p in range(i + 1):
                        if p > i - s:
                            assert table.entry(p, i) == 0
            # (f) codimension vanishing band
            r = prof.cm_codim_min
            for i in range(d):
                for p in range(r, i + 1):
                    assert table.entry(p, i) == 0
            # (g) the top corner counts top-graph components
            top = gamma_components(delta.top_subcomplex(), 1).n_components
            assert table.entry(d, d) == top
        checked += 1
    assert checked >= 200
    verdict(f"09 property-suite[{checked} ideals x 2 fields]", started, 900)


def test_criterion_10_characteristic_sensitivity():
    started = time.monotonic()
    delta = SimplicialComplex(6, [frozenset(f) for f in RP2_FACETS])
    assert reduced_homology(delta, QQ).get(1, 0) == 0
    assert reduced_homology(delta, GF2).get(1, 0) == 1
    ideal = ideal_of_complex(delta)
    t_q = lyubeznik_table(ideal, QQ)
    t_2 = lyubeznik_table(ideal, GF2)
    assert t_q != t_2
    # direction recorded from the engine itself
    assert t_q == table_of(3, {(3, 3): 1})
    assert t_2 == table_of(3, {(0, 2): 1, (2, 3): 1, (3, 3): 1})
    verdict("10 characteristic-sensitivity", started, 120)


def test_fixture_pipeline_end_to_end():
    # the complete bundled battery over both fields with the oracle on
    started = time.monotonic()
    for name in EXPECTED:
        for field in (QQ, GF2):
            out = run_fixture(name, field)
            assert not out["failures"], (name, field.char, out["failures"])
    verdict("fixtures end-to-end", started, 900)
