"""Simplicial homology and the Hochster formula.

The projective-plane check carries its own boundary-matrix oracle so the
characteristic-2 torsion is certified by two independent routes.
"""

import random
from fractions import Fraction
from itertools import combinations

from lyubtab.linalg import QQ, GF2, FieldSpec, rank
from lyubtab.squarefree import (MonomialIdeal, SimplicialComplex,
                                complex_of_ideal, ideal_of_complex)
from lyubtab.homology import (reduced_homology, homology_in_degree,
                              hochster_betti, lc_face_dims)

# 6-vertex triangulation of the real projective plane
RP2_FACETS = [(1, 2, 5), (1, 2, 6), (1, 3, 4), (1, 3, 5), (1, 4, 6),
              (2, 3, 4), (2, 3, 6), (2, 4, 5), (3, 5, 6), (4, 5, 6)]


def rp2_complex():
    return SimplicialComplex(6, [frozenset(f) for f in RP2_FACETS])


def homology_by_hand(facets, n, field):
    """Reduced homology from explicitly assembled boundary matrices."""
    faces = set()
    for f in facets:
        fs = tuple(sorted(f))
        for size in range(len(fs) + 1):
            faces.update(combinations(fs, size))
    by_dim = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(tuple(sorted(f)))
    for v in by_dim.values():
        v.sort()
    top = max(by_dim)
    out = {}
    for k in range(-1, top + 1):
        lower = by_dim.get(k - 1, [])
        upper = by_dim.get(k, [])
        here = len(upper)
        # boundary from dimension k to k-1 with alternating signs
        index = {f: i for i, f in enumerate(lower)}
        rows = [[field.zero] * here for _ in lower]
        for c, f in enumerate(upper):
            for pos in range(len(f)):
                sub = f[:pos] + f[pos + 1:]
                sign = field.conv(1 if pos % 2 == 0 else -1)
                rows[index[sub]][c] = sign
        rank_out = rank(rows, field) if rows else 0
        uppermost = by_dim.get(k + 1, [])
        index_here = {f: i for i, f in enumerate(upper)}
        rows_in = [[field.zero] * len(uppermost) for _ in upper]
        for c, f in enumerate(uppermost):
            for pos in range(len(f)):
                sub = f[:pos] + f[pos + 1:]
                sign = field.conv(1 if pos % 2 == 0 else -1)
                rows_in[index_here[sub]][c] = sign
        rank_in = rank(rows_in, field) if rows_in and uppermost else 0
        h = here - rank_out - rank_in
        assert h >= 0
        if h:
            out[k] = h
    return out


def test_conventions_void_and_empty():
    assert reduced_homology(SimplicialComplex.void(3), QQ) == {}
    assert reduced_homology(SimplicialComplex.empty(3), QQ) == {-1: 1}
    pt = SimplicialComplex(3, [frozenset({2})])
    assert reduced_homology(pt, QQ) == {}


def test_hollow_triangle_is_a_circle():
    tri = SimplicialComplex(3, [frozenset({1, 2}), frozenset({1, 3}),
                                frozenset({2, 3})])
    assert reduced_homology(tri, QQ) == {1: 1}
    assert homology_in_degree(tri, 1, QQ) == 1
    assert homology_in_degree(tri, 0, QQ) == 0


def test_two_points_and_spheres():
    two = SimplicialComplex(2, [frozenset({1}), frozenset({2})])
    assert reduced_homology(two, QQ) == {0: 1}
    # boundary of the 3-simplex is a 2-sphere
    sphere = SimplicialComplex(4, [frozenset(c) for c in
                                   combinations(range(1, 5), 3)])
    for f in (QQ, GF2):
        assert reduced_homology(sphere, f) == {2: 1}


def test_reduced_homology_matches_hand_assembly():
    rng = random.Random(301)
    for _ in range(40):
        n = rng.randint(2, 6)
        k = rng.randint(1, 5)
        facets = [frozenset(rng.sample(range(1, n + 1), rng.randint(1, n)))
                  for _ in range(k)]
        delta = SimplicialComplex(n, facets)
        for f in (QQ, GF2, FieldSpec(3)):
            assert reduced_homology(delta, f) == \
                homology_by_hand(delta.facets, n, f)


def test_projective_plane_torsion():
    rp2 = rp2_complex()
    assert reduced_homology(rp2, QQ) == {}
    assert reduced_homology(rp2, GF2) == {1: 1, 2: 1}
    assert homology_by_hand(RP2_FACETS, 6, QQ) == {}
    assert homology_by_hand(RP2_FACETS, 6, GF2) == {1: 1, 2: 1}
    # characteristic 3 behaves like characteristic 0 here
    assert reduced_homology(rp2, FieldSpec(3)) == {}


def test_euler_characteristic():
    # reduced Euler characteristic: the face-count alternating sum (empty
    # face included, contributing (-1)^-1) equals the homology alternating sum
    rng = random.Random(302)
    for _ in range(40):
        n = rng.randint(1, 6)
        facets = [frozenset(rng.sample(range(1, n + 1), rng.randint(1, n)))
                  for _ in range(rng.randint(1, 5))]
        delta = SimplicialComplex(n, facets)
        chi_faces = sum((-1) ** (len(f) - 1) for f in delta.faces())
        hom = reduced_homology(delta, QQ)
        chi_hom = sum((-1) ** k * h for k, h in hom.items())
        assert chi_faces == chi_hom


def test_hochster_step_zero_counts_generators():
    rng = random.Random(303)
    for _ in range(60):
        n = rng.randint(2, 6)
        gens = {frozenset(rng.sample(range(1, n + 1), rng.randint(1, n - 1)))
                for _ in range(rng.randint(1, 5))}
        I = MonomialIdeal(n, gens)
        if not I.is_proper_nonzero:
            continue
        bt = hochster_betti(I, QQ)
        step0 = {deg for (j, deg), v in bt.items_sorted() if j == 0 for _ in range(v)}
        assert step0 == set(I.gens)
        assert bt.total(0) == len(I.gens)


def test_hochster_betti_alternating_sum():
    # K-polynomial identity at the squarefree level: for every degree alpha,
    # sum_j (-1)^j beta_{j,alpha'} over divisors alpha' of alpha equals
    # [alpha not a face of Delta(I)] read off by monomial membership.
    rng = random.Random(304)
    for _ in range(40):
        n = rng.randint(2, 6)
        gens = {frozenset(rng.sample(range(1, n + 1), rng.randint(1, n - 1)))
                for _ in range(rng.randint(1, 4))}
        I = MonomialIdeal(n, gens)
        if not I.is_proper_nonzero:
            continue
        bt = hochster_betti(I, QQ)
        delta = complex_of_ideal(I)
        for size in range(n + 1):
            for combo in combinations(range(1, n + 1), size):
                alpha = frozenset(combo)
                in_ideal = any(g <= alpha for g in I.gens)
                total = sum((-1) ** j * bt.entry(j, sub)
                            for j in range(n + 1)
                            for sub in (frozenset(c)
                                        for s in range(size + 1)
                                        for c in combinations(sorted(alpha), s)))
                assert total == (1 if in_ideal else 0), (sorted(alpha), total)


def test_hochster_guard_and_force():
    I = MonomialIdeal(21, [frozenset({1, 2})])
    try:
        hochster_betti(I, QQ)
    except ValueError:
        pass
    else:
        raise AssertionError("hochster must refuse n > 20 without force")


def test_lc_face_dims_two_points():
    two = SimplicialComplex(2, [frozenset({1}), frozenset({2})])
    # i = 1 sees the empty face (disconnectedness) and both vertices
    data = lc_face_dims(two, 1, QQ)
    assert data[frozenset()] == 1
    assert data[frozenset({1})] == 1 and data[frozenset({2})] == 1
    assert lc_face_dims(two, 0, QQ) == {}
