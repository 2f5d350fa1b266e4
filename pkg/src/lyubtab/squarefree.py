"""Squarefree monomial ideals and simplicial complexes on {1..n}.

A squarefree monomial is identified with its support, a frozenset of 1-based
variable indices.  A simplicial complex is stored by its facets.  Two
degenerate complexes are kept distinct throughout: the void complex, which
has no faces at all and corresponds to the unit ideal, and the empty complex
{emptyset}, which corresponds to the irrelevant maximal ideal and has Krull
dimension 0.

The bridge between ideals and complexes in both directions is the minimal
hitting set computation: supports of the minimal primes of I are exactly the
inclusion-minimal transversals of the generator supports, and the minimal
generators of the ideal of a complex are the minimal transversals of the
facet complements.
"""

from __future__ import annotations

from itertools import combinations

Subset = frozenset

SCAN_VAR_LIMIT = 20


def degree_key(s):
    """Canonical sort key for squarefree degrees: by size, then lexicographic."""
    return (len(s), tuple(sorted(s)))


def minimal_hitting_sets(sets, n: int):
    """All inclusion-minimal subsets of {1..n} meeting every member of ``sets``.

    Branches on the vertices of the first set not yet hit, banning each
    branch vertex from later siblings so no transversal is produced twice
    from the same node; a final antichain filter removes the non-minimal
    stragglers this scheme can still emit.  Returns a sorted list of
    frozensets.  If some member of ``sets`` is empty there is nothing that
    hits it and the result is [].
    """
    family = sorted({frozenset(s) for s in sets}, key=degree_key)
    if any(not s for s in family):
        return []
    found = set()

    def walk(chosen, banned):
        target = None
        for s in family:
            if not (s & chosen):
                target = s
                break
        if target is None:
            found.add(chosen)
            return
        local_ban = banned
        for v in sorted(target):
            if v in local_ban:
                continue
            walk(chosen | {v}, local_ban)
            local_ban = local_ban | {v}

    walk(frozenset(), frozenset())
    out = [h for h in found if not any(o < h for o in found)]
    return sorted(out, key=degree_key)


def _check_subsets(n, subsets, what):
    for s in subsets:
        for v in s:
            if not (isinstance(v, int) and 1 <= v <= n):
                raise ValueError(f"{what} contains index {v!r} outside 1..{n}")


class MonomialIdeal:
    """Squarefree monomial ideal, stored by its minimal generator supports.

    The generator list passed in is minimalized: supports containing another
    support are dropped.  ``is_zero`` (no generators) and ``is_unit`` (the
    empty support generates) are the two degenerate cases.
    """

    __slots__ = ("n", "gens")

    def __init__(self, n: int, gens):
        if n < 0:
            raise ValueError(f"need n >= 0, got {n}")
        sets = [frozenset(g) for g in gens]
        _check_subsets(n, sets, "generator")
        if any(not g for g in sets):
            minimal = (frozenset(),)
        else:
            uniq = set(sets)
            minimal = tuple(sorted(
                (g for g in uniq if not any(o < g for o in uniq)),
                key=degree_key))
        self.n = n
        self.gens = minimal

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return self.gens == (frozenset(),)

    @property
    def is_proper_nonzero(self) -> bool:
        return bool(self.gens) and not self.is_unit

    def __eq__(self, other) -> bool:
        return (isinstance(other, MonomialIdeal)
                and self.n == other.n and self.gens == other.gens)

    def __hash__(self) -> int:
        return hash((self.n, self.gens))

    def __repr__(self) -> str:
        body = ", ".join("{" + ",".join(map(str, sorted(g))) + "}" for g in self.gens)
        return f"MonomialIdeal(n={self.n}, gens=[{body}])"


class SimplicialComplex:
    """Facet-presented simplicial complex on the vertex pool {1..n}.

    ``facets == ()`` is the void complex; ``facets == (frozenset(),)`` is
    the empty complex whose only face is the empty set.  Constructors
    maximalize, so ``facets`` is always an inclusion antichain.
    """

    __slots__ = ("n", "facets")

    def __init__(self, n: int, facets):
        if n < 0:
            raise ValueError(f"need n >= 0, got {n}")
        sets = set(frozenset(f) for f in facets)
        _check_subsets(n, sets, "facet")
        maximal = tuple(sorted(
            (f for f in sets if not any(f < o for o in sets)),
            key=degree_key))
        self.n = n
        self.facets = maximal

    @classmethod
    def void(cls, n: int) -> "SimplicialComplex":
        return cls(n, [])

    @classmethod
    def empty(cls, n: int) -> "SimplicialComplex":
        return cls(n, [frozenset()])

    @classmethod
    def simplex(cls, n: int) -> "SimplicialComplex":
        return cls(n, [frozenset(range(1, n + 1))])

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_empty_complex(self) -> bool:
        return self.facets == (frozenset(),)

    @property
    def dim(self) -> int:
        """Topological dimension; the empty complex has dim -1."""
        if self.is_void:
            raise ValueError("the void complex has no dimension")
        return max(len(f) for f in self.facets) - 1

    @property
    def krull_dim(self) -> int:
        """Krull dimension of the face ring, dim + 1."""
        return self.dim + 1

    def has_face(self, sigma) -> bool:
        s = frozenset(sigma)
        return any(s <= f for f in self.facets)

    def faces(self):
        """Sorted list of all faces.  Exponential in facet size; small use only."""
        seen = set()
        for f in self.facets:
            for k in range(len(f) + 1):
                for c in combinations(sorted(f), k):
                    seen.add(frozenset(c))
        return sorted(seen, key=degree_key)

    def link(self, sigma) -> "SimplicialComplex":
        s = frozenset(sigma)
        if not self.has_face(s):
            raise ValueError(f"not a face: {sorted(s)}")
        # facets containing s give the facets of the link; the differences
        # form an antichain automatically because the originals do
        return SimplicialComplex(self.n, [f - s for f in self.facets if s <= f])

    def restrict(self, alpha) -> "SimplicialComplex":
        a = frozenset(alpha)
        _check_subsets(self.n, [a], "restriction set")
        if self.is_void:
            return self
        return SimplicialComplex(self.n, [f & a for f in self.facets])

    def is_equidimensional(self) -> bool:
        if self.is_void:
            raise ValueError("void complex")
        return len({len(f) for f in self.facets}) == 1

    def top_subcomplex(self) -> "SimplicialComplex":
        """Subcomplex generated by the maximum-dimension facets."""
        if self.is_void:
            raise ValueError("void complex")
        top = max(len(f) for f in self.facets)
        return SimplicialComplex(self.n, [f for f in self.facets if len(f) == top])

    def __eq__(self, other) -> bool:
        return (isinstance(other, SimplicialComplex)
                and self.n == other.n and self.facets == other.facets)

    def __hash__(self) -> int:
        return hash((self.n, self.facets))

    def __repr__(self) -> str:
        body = ", ".join("{" + ",".join(map(str, sorted(f))) + "}" for f in self.facets)
        return f"SimplicialComplex(n={self.n}, facets=[{body}])"


def complex_of_ideal(ideal: MonomialIdeal) -> SimplicialComplex:
    """Stanley-Reisner complex of a squarefree ideal.

    Faces are the supports of squarefree monomials outside the ideal, so the
    facets are the complements of the minimal prime supports.  The zero
    ideal gives the full simplex and the unit ideal gives the void complex.
    """
    n = ideal.n
    full = frozenset(range(1, n + 1))
    covers = minimal_hitting_sets(ideal.gens, n)
    return SimplicialComplex(n, [full - c for c in covers])


def ideal_of_complex(delta: SimplicialComplex) -> MonomialIdeal:
    """Stanley-Reisner ideal: generated by the minimal non-faces.

    A subset is a non-face exactly when it meets the complement of every
    facet, so the minimal generators are the minimal transversals of the
    facet complements.
    """
    n = delta.n
    full = frozenset(range(1, n + 1))
    gens = minimal_hitting_sets([full - f for f in delta.facets], n)
    return MonomialIdeal(n, gens)


def alexander_dual(ideal: MonomialIdeal) -> MonomialIdeal:
    """Alexander dual ideal, generated by the minimal prime supports.

    Defined for proper nonzero ideals only.
    """
    if not ideal.is_proper_nonzero:
        raise ValueError("alexander dual needs a proper nonzero ideal")
    return MonomialIdeal(ideal.n, minimal_hitting_sets(ideal.gens, ideal.n))


def minimal_primes(ideal: MonomialIdeal):
    """Supports of the minimal primes of a proper nonzero squarefree ideal."""
    if not ideal.is_proper_nonzero:
        raise ValueError("minimal primes need a proper nonzero ideal")
    return alexander_dual(ideal).gens


def ideal_from_primes(n: int, supports) -> MonomialIdeal:
    """Intersection of the face-variable primes with the given supports."""
    sets = [frozenset(s) for s in supports]
    if not sets:
        raise ValueError("need at least one prime support")
    _check_subsets(n, sets, "prime support")
    if any(not s for s in sets):
        raise ValueError("empty prime support describes the zero ideal")
    full = frozenset(range(1, n + 1))
    delta = SimplicialComplex(n, [full - s for s in sets])
    return ideal_of_complex(delta)


def facets_by_scan(ideal: MonomialIdeal) -> SimplicialComplex:
    """Reference facet computation by scanning all 2**n subsets.

    Slow path kept as an independent cross-check for the transversal route;
    guarded to small n.
    """
    n = ideal.n
    if n > SCAN_VAR_LIMIT:
        raise ValueError(f"scan limited to n <= {SCAN_VAR_LIMIT}")
    gens = ideal.gens
    verts = list(range(1, n + 1))
    faces = []
    for mask in range(1 << n):
        s = frozenset(verts[i] for i in range(n) if mask >> i & 1)
        if not any(g <= s for g in gens):
            faces.append(s)
    return SimplicialComplex(n, faces)
