"""Minimal free resolutions of squarefree monomial ideals, degree by degree.

The resolution is built as a multigraded complex of free modules whose basis
elements carry squarefree degrees.  Because every degree in sight is
squarefree, a differential is determined by its scalar entries: the monomial
factor on an entry is the quotient of the column degree by the row degree,
and composing two maps multiplies scalars exactly like a plain matrix
product.  ``MonomialMatrix`` therefore stores scalars only.

Construction is by degreewise kernels.  Sweeping candidate degrees in
increasing (size, lex) order, the kernel of the previous differential in
each degree is compared against the span of the syzygies already found at
smaller degrees; a complement basis contributes new generators in the
current degree.  The sweep runs over the join-closure of the generator
degrees (the lcm lattice), which contains every degree where a minimal
syzygy can live.  Minimality (no scalar entry between equal degrees) is
asserted, not arranged: the complement vectors cannot have support on
same-degree basis elements, and the assert would catch any bookkeeping bug.

Two independent checks keep the builder honest: a Betti-number comparison
against the homological formula in :mod:`lyubtab.homology` (on by default),
and the separately implemented minimized Taylor resolution below.
"""

from __future__ import annotations

from itertools import combinations

from .homology import BettiTable, hochster_betti
from .linalg import FieldSpec, complement_basis, homology_dim, kernel_basis
from .squarefree import MonomialIdeal, degree_key

MAX_STEPS_SLACK = 2  # a resolution longer than n + 1 steps is impossible


class ConsistencyError(RuntimeError):
    """An internal invariant failed; results cannot be trusted."""


class OracleMismatchError(ConsistencyError):
    """The resolution builder and the homological Betti oracle disagree."""


class MonomialMatrix:
    """Differential between multigraded free modules, scalar entries only.

    ``row_degrees`` and ``col_degrees`` are tuples of frozensets.  Entry
    (r, c) may be nonzero only when row_degrees[r] is a subset of
    col_degrees[c]; the implied monomial factor is their quotient.
    """

    __slots__ = ("row_degrees", "col_degrees", "entries")

    def __init__(self, row_degrees, col_degrees, entries, field: FieldSpec):
        self.row_degrees = tuple(row_degrees)
        self.col_degrees = tuple(col_degrees)
        clean = {}
        for (r, c), s in entries.items():
            if field.is_zero_elt(s):
                continue
            if not self.row_degrees[r] <= self.col_degrees[c]:
                raise ConsistencyError("matrix entry outside degree order")
            clean[(r, c)] = s
        self.entries = clean

    @property
    def shape(self):
        return (len(self.row_degrees), len(self.col_degrees))

    def entry(self, r: int, c: int):
        return self.entries.get((r, c), 0)

    def column(self, c: int):
        return sorted((r, s) for (r, cc), s in self.entries.items() if cc == c)

    def scalar_product(self, other: "MonomialMatrix", field: FieldSpec):
        """Entry dict of self . other; the zero dict certifies d.d = 0."""
        assert self.col_degrees == other.row_degrees, "shape mismatch in composition"
        by_row = {}
        for (k, c), s in other.entries.items():
            by_row.setdefault(k, []).append((c, s))
        out = {}
        for (r, k), s in self.entries.items():
            for c, ss in by_row.get(k, ()):  # k indexes the middle module
                key = (r, c)
                out[key] = field.add(out.get(key, field.zero), field.mul(s, ss))
        return {k: v for k, v in out.items() if not field.is_zero_elt(v)}

    def dense_block(self, row_indices, col_indices, field: FieldSpec):
        """Dense submatrix on the given row and column index lists."""
        pos = {r: i for i, r in enumerate(row_indices)}
        block = [[field.zero] * len(col_indices) for _ in row_indices]
        for j, c in enumerate(col_indices):
            for r, s in self.column(c):
                if r in pos:
                    block[pos[r]][j] = s
        return block


class Resolution:
    """Multigraded free resolution of a squarefree monomial ideal.

    ``bases[t]`` lists the degrees of the step-t free module (step 0 maps
    onto the ideal); ``diffs[t]`` is the differential from step t+1 to step
    t.  ``length`` is the index of the last nonzero module.
    """

    __slots__ = ("ideal", "field", "bases", "diffs")

    def __init__(self, ideal: MonomialIdeal, field: FieldSpec, bases, diffs):
        self.ideal = ideal
        self.field = field
        self.bases = tuple(tuple(b) for b in bases)
        self.diffs = tuple(diffs)
        assert len(self.diffs) == len(self.bases) - 1

    @property
    def length(self) -> int:
        return len(self.bases) - 1

    def betti(self) -> BettiTable:
        entries = {}
        for j, basis in enumerate(self.bases):
            for deg in basis:
                key = (j, deg)
                entries[key] = entries.get(key, 0) + 1
        return BettiTable(self.ideal.n, entries)

    def check_d_squared(self):
        for t in range(len(self.diffs) - 1):
            prod = self.diffs[t].scalar_product(self.diffs[t + 1], self.field)
            if prod:
                raise ConsistencyError(f"d.d != 0 between steps {t + 2} and {t}")

    def check_minimal(self):
        for t, mat in enumerate(self.diffs):
            for (r, c) in mat.entries:
                if mat.row_degrees[r] == mat.col_degrees[c]:
                    raise ConsistencyError(f"unit entry in differential {t + 1}")

    def debug_dump(self) -> str:
        """Stable textual form of all differentials, one line per column."""
        lines = []
        for t, mat in enumerate(self.diffs, start=1):
            for c, cdeg in enumerate(mat.col_degrees):
                cells = " ".join(f"({sorted(mat.row_degrees[r])}, {s})"
                                 for r, s in mat.column(c))
                lines.append(f"t={t} col={sorted(cdeg)} : {cells}")
        return "\n".join(lines)


def lcm_lattice(gens):
    """Join closure of the generator degrees, sorted by (size, lex)."""
    closure = set(gens)
    frontier = set(gens)
    while frontier:
        fresh = set()
        for a in frontier:
            for g in gens:
                u = a | g
                if u not in closure:
                    closure.add(u)
                    fresh.add(u)
        frontier = fresh
    return sorted(closure, key=degree_key)


def minimal_resolution(ideal: MonomialIdeal, field: FieldSpec, *,
                       check: bool = True, force: bool = False) -> Resolution:
    """Minimal free resolution by degreewise kernel computation.

    With ``check`` on (the default) the finely graded Betti numbers of the
    result are recomputed through the homological formula and a mismatch
    raises :class:`OracleMismatchError`; ``force`` lifts the variable-count
    guard on that sweep.
    """
    if not ideal.is_proper_nonzero:
        raise ValueError("can only resolve a proper nonzero ideal")
    gens = list(ideal.gens)
    lattice = lcm_lattice(gens)
    bases = [gens]
    cols_per_step = []

    t = 0
    while True:
        prev = bases[t]
        prev_diff = cols_per_step[t - 1] if t >= 1 else None
        new_degrees = []
        new_cols = []
        chosen = []  # (degree, sparse vector over prev indices)
        for alpha in lattice:
            pairs = [j for j, deg in enumerate(prev) if deg <= alpha]
            if not pairs:
                continue
            if t == 0:
                if len(pairs) <= 1:
                    continue
                block = [[field.one] * len(pairs)]
            else:
                upper = [i for i, deg in enumerate(bases[t - 1]) if deg <= alpha]
                block = _dense_from_cols(prev_diff, upper, pairs, field)
            ker = kernel_basis(block, len(pairs), field)
            if not ker:
                continue
            pos = {j: idx for idx, j in enumerate(pairs)}
            transported = []
            for deg_g, vec in chosen:
                if deg_g <= alpha:
                    w = [field.zero] * len(pairs)
                    for j, s in vec.items():
                        w[pos[j]] = s
                    transported.append(w)
            fresh = complement_basis(ker, transported, field)
            for v in fresh:
                sparse = {}
                for idx, j in enumerate(pairs):
                    if not field.is_zero_elt(v[idx]):
                        assert prev[j] < alpha, "same-degree entry in new generator"
                        sparse[j] = v[idx]
                chosen.append((alpha, sparse))
                new_degrees.append(alpha)
                new_cols.append(sparse)
        if not new_degrees:
            break
        bases.append(new_degrees)
        cols_per_step.append(new_cols)
        t += 1
        assert t <= ideal.n + MAX_STEPS_SLACK, "resolution runs too long"

    diffs = []
    for t, cols in enumerate(cols_per_step):
        entries = {}
        for c, sparse in enumerate(cols):
            for r, s in sparse.items():
                entries[(r, c)] = s
        diffs.append(MonomialMatrix(bases[t], bases[t + 1], entries, field))
    res = Resolution(ideal, field, bases, diffs)
    res.check_d_squared()
    res.check_minimal()
    if check:
        oracle = hochster_betti(ideal, field, force=force)
        mine = res.betti()
        if mine != oracle:
            raise OracleMismatchError(
                "betti numbers disagree with the homological formula: "
                f"resolution {sorted(((j, sorted(d)), c) for (j, d), c in mine.fine.items())} "
                f"vs oracle {sorted(((j, sorted(d)), c) for (j, d), c in oracle.fine.items())}")
    return res


def _dense_from_cols(col_dicts, row_indices, col_indices, field: FieldSpec):
    pos = {r: i for i, r in enumerate(row_indices)}
    block = [[field.zero] * len(col_indices) for _ in row_indices]
    for j, c in enumerate(col_indices):
        for r, s in col_dicts[c].items():
            block[pos[r]][j] = s
    return block


TAYLOR_GENS_LIMIT = 14


def taylor_minimized(ideal: MonomialIdeal, field: FieldSpec, *,
                     gens_limit: int = TAYLOR_GENS_LIMIT) -> Resolution:
    """Taylor complex on generator subsets, minimized by unit cancellation.

    An entirely different route to a minimal resolution, kept as an oracle
    for the degreewise builder.  The Taylor complex on m generators has
    2**m - 1 basis elements, hence the generator guard.

    Cancelling a unit entry at (row, col) of d_t splits off an exact rank-2
    summand.  After clearing the unit's row by column operations inside d_t,
    the bookkeeping is deletion only: the column disappears from d_t and
    from the row set of d_{t+1}, the row disappears from d_t and from the
    column set of d_{t-1}.  No entries of the neighbouring differentials
    change, which a short computation with the defining identities confirms.
    """
    if not ideal.is_proper_nonzero:
        raise ValueError("can only resolve a proper nonzero ideal")
    gens = list(ideal.gens)
    m = len(gens)
    if m > gens_limit:
        raise ValueError(f"taylor complex limited to {gens_limit} generators")

    def union_deg(subset):
        out = frozenset()
        for i in subset:
            out |= gens[i]
        return out

    degs = {}
    cols = []  # cols[t]: {col subset: {row subset: scalar}} for d_{t+1}: F_{t+1} -> F_t
    alive = []  # alive[t]: set of basis subsets of F_t
    for t in range(m):
        level = [frozenset(c) for c in combinations(range(m), t + 1)]
        alive.append(set(level))
        for s in level:
            degs[s] = union_deg(s)
    for t in range(1, m):
        level_cols = {}
        for s in alive[t]:
            verts = sorted(s)
            col = {}
            sign = field.one
            for v in verts:
                col[s - {v}] = sign
                sign = field.neg(sign)
            level_cols[s] = col
        cols.append(level_cols)

    rows_in = [dict() for _ in cols]  # rows_in[k]: row subset -> set of col subsets
    for k, level_cols in enumerate(cols):
        for c, col in level_cols.items():
            for r in col:
                rows_in[k].setdefault(r, set()).add(c)

    # Column operations inside d_{k+1} are the only way new entries appear,
    # so fresh unit positions can only show up at the level being cancelled.
    # A per-level worklist therefore sees every unit exactly once.
    for k, level in enumerate(cols):
        work = sorted(((c, r) for c, col in level.items() for r in col
                       if degs[r] == degs[c]),
                      key=lambda t: (tuple(sorted(t[0])), tuple(sorted(t[1]))),
                      reverse=True)
        while work:
            c, r = work.pop()
            if c not in level or r not in level[c]:
                continue  # cancelled away meanwhile
            assert k >= 1, "unit entry against a minimal generator"
            unit = level[c][r]
            unit_inv = field.inv(unit)
            pivot_col = dict(level[c])
            for c2 in list(rows_in[k].get(r, ())):
                if c2 == c:
                    continue
                lam = field.mul(level[c2][r], unit_inv)
                col2 = level[c2]
                for rr, s in pivot_col.items():
                    new = field.sub(col2.get(rr, field.zero), field.mul(lam, s))
                    if field.is_zero_elt(new):
                        if rr in col2:
                            del col2[rr]
                            rows_in[k][rr].discard(c2)
                    else:
                        if rr not in col2:
                            rows_in[k].setdefault(rr, set()).add(c2)
                            if degs[rr] == degs[c2]:
                                work.append((c2, rr))
                        col2[rr] = new
            # drop column c of d_{k+1} and basis element c of F_{k+1}
            for rr in level[c]:
                rows_in[k][rr].discard(c)
            del level[c]
            alive[k + 1].discard(c)
            rows_in[k].pop(r, None)
            # drop basis element r of F_k: row r of d_{k+1} is now clear;
            # remove c's row in d_{k+2} and r's column in d_k
            alive[k].discard(r)
            if k + 1 < len(cols):
                for c2 in list(rows_in[k + 1].get(c, ())):
                    del cols[k + 1][c2][c]
                rows_in[k + 1].pop(c, None)
            if k - 1 >= 0:
                dropped = cols[k - 1].pop(r, None)
                if dropped:
                    for rr in dropped:
                        rows_in[k - 1][rr].discard(r)

    # compact into a Resolution, canonical basis order per step
    bases = []
    index = []
    for t in range(m):
        basis = sorted(alive[t], key=lambda s: (degree_key(degs[s]), tuple(sorted(s))))
        if not basis:
            break
        bases.append([degs[s] for s in basis])
        index.append({s: i for i, s in enumerate(basis)})
    for t in range(len(bases), m):
        assert not alive[t], "gap in minimized taylor complex"
    diffs = []
    for t in range(len(bases) - 1):
        entries = {}
        for s, col in cols[t].items():
            if s not in index[t + 1]:
                continue
            for rsub, scal in col.items():
                entries[(index[t][rsub], index[t + 1][s])] = scal
        diffs.append(MonomialMatrix(bases[t], bases[t + 1], entries, field))
    res = Resolution(ideal, field, bases, diffs)
    res.check_d_squared()
    res.check_minimal()
    return res


class StrandDual:
    """Dualized r-linear strand of a resolution, as plain dense matrices.

    Position p collects the step n-r-p basis elements of degree size n-p;
    ``boundaries[p]`` (p >= 1) is the transposed scalar block of the
    original differential between the neighbouring strand pieces, mapping
    position p to position p-1.
    """

    __slots__ = ("r", "n", "dims", "boundaries")

    def __init__(self, r, n, dims, boundaries):
        self.r = r
        self.n = n
        self.dims = tuple(dims)
        self.boundaries = boundaries

    def homology(self, field: FieldSpec):
        """Homology dimensions at positions 0..n-r; checks the complex closes."""
        top = len(self.dims) - 1
        out = []
        for p in range(top + 1):
            outgoing = self.boundaries[p] if p >= 1 else []
            incoming = self.boundaries[p + 1] if p + 1 <= top else []
            out.append(homology_dim(outgoing, incoming, self.dims[p], field))
        return out


def strand_dual(res: Resolution, r: int) -> StrandDual:
    """Extract and dualize the r-linear strand of a resolution.

    The strand at homological step j consists of the basis elements of
    degree size j + r; consecutive pieces are connected by the scalar
    entries of the differential, transposed.
    """
    n = res.ideal.n
    top = n - r
    assert top >= 0, "strand index exceeds variable count"
    positions = []
    for p in range(top + 1):
        j = top - p
        if j <= res.length:
            positions.append([i for i, deg in enumerate(res.bases[j]) if len(deg) == n - p])
        else:
            positions.append([])
    boundaries = [None] * (top + 1)
    for p in range(1, top + 1):
        j = top - p  # dualize d_{j+1} restricted to the strand
        here = positions[p]          # indices into bases[j], the domain of the dual map
        target = positions[p - 1]    # indices into bases[j + 1], its codomain
        if not here or not target or j + 1 > res.length:
            boundaries[p] = []
            continue
        block = res.diffs[j].dense_block(here, target, res.field)
        # block[i][k]: row i over positions[p], col k over positions[p-1];
        # the dual boundary is its transpose
        boundaries[p] = [[block[i][k] for i in range(len(here))]
                         for k in range(len(target))]
    dims = [len(pos) for pos in positions]
    return StrandDual(r, n, dims, boundaries)
