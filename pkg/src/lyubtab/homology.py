"""Reduced simplicial homology and the Hochster formula for Betti numbers.

Chain groups are indexed by faces in canonical order and boundary matrices
carry the usual alternating signs on sorted vertex lists.  Homology is
reduced: the empty face generates the chain group in degree -1, so the empty
complex {emptyset} has one-dimensional homology there and the void complex
has none anywhere.

``hochster_betti`` recovers the finely graded Betti numbers of a squarefree
ideal from reduced homology of vertex-restrictions of its Stanley-Reisner
complex.  It sweeps all 2**n restrictions (guarded), skipping any
restriction that is a cone, and serves as the independent cross-check for
the syzygy-based resolution builder.
"""

from __future__ import annotations

from itertools import combinations

from .linalg import FieldSpec, rank
from .squarefree import (MonomialIdeal, SimplicialComplex, complex_of_ideal,
                         degree_key)

HOCHSTER_VAR_LIMIT = 20


def _faces_by_dim(delta: SimplicialComplex):
    """Map k -> canonically sorted list of k-dimensional faces."""
    by_dim = {}
    seen = set()
    for f in delta.facets:
        verts = sorted(f)
        for k in range(len(verts) + 1):
            for c in combinations(verts, k):
                fs = frozenset(c)
                if fs not in seen:
                    seen.add(fs)
                    by_dim.setdefault(k - 1, []).append(fs)
    for k in by_dim:
        by_dim[k].sort(key=degree_key)
    return by_dim


def _boundary_matrix(lower, upper):
    """Integer matrix of the boundary map from span(upper) to span(lower)."""
    index = {f: i for i, f in enumerate(lower)}
    rows = [[0] * len(upper) for _ in lower]
    for c, face in enumerate(upper):
        verts = sorted(face)
        sign = 1
        for v in verts:
            rows[index[frozenset(face - {v})]][c] = sign
            sign = -sign
    return rows


def reduced_homology(delta: SimplicialComplex, field: FieldSpec):
    """Reduced homology dimensions as a dict, nonzero degrees only.

    The void complex returns {}.  The empty complex returns {-1: 1}.
    """
    if delta.is_void:
        return {}
    by_dim = _faces_by_dim(delta)
    top = max(by_dim)
    ranks = {}
    for k in range(0, top + 1):
        ranks[k] = rank(_boundary_matrix(by_dim[k - 1], by_dim[k]), field)
    out = {}
    for k in range(-1, top + 1):
        h = len(by_dim[k]) - ranks.get(k, 0) - ranks.get(k + 1, 0)
        assert h >= 0
        if h:
            out[k] = h
    return out


def homology_in_degree(delta: SimplicialComplex, k: int, field: FieldSpec) -> int:
    """dim of reduced homology in a single degree, building only two boundaries."""
    if delta.is_void:
        return 0
    by_dim = _faces_by_dim(delta)
    if k not in by_dim:
        return 0
    nk = len(by_dim[k])
    out_rank = rank(_boundary_matrix(by_dim.get(k - 1, []), by_dim[k]), field) if k >= 0 else 0
    in_rank = 0
    if k + 1 in by_dim:
        in_rank = rank(_boundary_matrix(by_dim[k], by_dim[k + 1]), field)
    h = nk - out_rank - in_rank
    assert h >= 0
    return h


class BettiTable:
    """Finely graded Betti numbers: (step, squarefree degree) -> multiplicity.

    Step 0 counts minimal generators.  Only positive entries are stored.
    """

    __slots__ = ("n", "fine")

    def __init__(self, n: int, entries):
        self.n = n
        self.fine = {(j, frozenset(deg)): c for (j, deg), c in dict(entries).items() if c}

    def entry(self, j: int, deg) -> int:
        return self.fine.get((j, frozenset(deg)), 0)

    def coarse(self):
        """Sum over degrees of equal total size: (step, size) -> count."""
        out = {}
        for (j, deg), c in self.fine.items():
            key = (j, len(deg))
            out[key] = out.get(key, 0) + c
        return out

    def total(self, j: int) -> int:
        return sum(c for (jj, _), c in self.fine.items() if jj == j)

    @property
    def max_step(self) -> int:
        return max((j for j, _ in self.fine), default=-1)

    def items_sorted(self):
        return sorted(self.fine.items(), key=lambda t: (t[0][0], degree_key(t[0][1])))

    def to_jsonable(self):
        return {
            "n": self.n,
            "entries": [[j, sorted(deg), c] for (j, deg), c in self.items_sorted()],
        }

    def __eq__(self, other) -> bool:
        return (isinstance(other, BettiTable)
                and self.n == other.n and self.fine == other.fine)

    def __hash__(self):
        raise TypeError("BettiTable is not hashable")

    def __repr__(self) -> str:
        parts = [f"b[{j},{{{','.join(map(str, sorted(d)))}}}]={c}"
                 for (j, d), c in self.items_sorted()]
        return "BettiTable(" + ", ".join(parts) + ")"


def _restricted_facets(facets, alpha):
    cut = {f & alpha for f in facets}
    return [f for f in cut if not any(f < o for o in cut)]


def hochster_betti(ideal: MonomialIdeal, field: FieldSpec, *,
                   var_limit: int = HOCHSTER_VAR_LIMIT, force: bool = False) -> BettiTable:
    """Finely graded Betti numbers of a proper nonzero squarefree ideal.

    beta[j, alpha] = dim of reduced homology in degree |alpha| - j - 2 of
    the Stanley-Reisner complex restricted to alpha.  Restrictions that are
    cones are acyclic and skipped outright; everything else goes through the
    generic homology routine.  The sweep is 2**n, so n is guarded unless
    ``force`` is set.
    """
    if not ideal.is_proper_nonzero:
        raise ValueError("hochster_betti needs a proper nonzero ideal")
    n = ideal.n
    if n > var_limit and not force:
        raise ValueError(f"hochster sweep limited to n <= {var_limit} (force=True to override)")
    delta = complex_of_ideal(ideal)
    verts = list(range(1, n + 1))
    entries = {}
    for mask in range(1 << n):
        alpha = frozenset(verts[i] for i in range(n) if mask >> i & 1)
        restricted = _restricted_facets(delta.facets, alpha)
        apex = None
        for f in restricted:
            apex = frozenset(f) if apex is None else apex & f
        if apex:
            continue  # a cone over any apex vertex is acyclic
        sub = SimplicialComplex(n, restricted)
        hom = reduced_homology(sub, field)
        for k, h in hom.items():
            j = len(alpha) - k - 2
            if j >= 0:
                entries[(j, alpha)] = h
    return BettiTable(n, entries)


def lc_face_dims(delta: SimplicialComplex, i: int, field: FieldSpec):
    """Face-indexed dimension data for the i-th deficiency module.

    Maps each face sigma to dim of reduced homology of its link in degree
    i - |sigma| - 1, keeping nonzero values only.  The maximum |sigma| over
    the support of this map is the dimension of the i-th deficiency module
    of the face ring (with -1 for the zero module).
    """
    if delta.is_void:
        raise ValueError("void complex")
    out = {}
    for sigma in delta.faces():
        k = i - len(sigma) - 1
        h = homology_in_degree(delta.link(sigma), k, field)
        if h:
            out[sigma] = h
    return out
