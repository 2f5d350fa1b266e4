"""Exact dense linear algebra over the rationals and over prime fields.

Matrices are plain lists of row lists.  Everything is exact: rational
computations run on ``fractions.Fraction`` (elimination itself defers all
division, working on scaled integer rows with gcd trimming), prime fields use
ints in ``range(p)`` with modular inverses.  Pivoting is deterministic by
construction: columns are scanned left to right and the first row with a
nonzero entry in the current column is chosen.  No magnitude-based pivot
selection ever happens, so identical inputs give identical outputs on every
platform.

The sizes that show up in practice are tiny (a few hundred rows at most), so
all routines are written for clarity over asymptotics.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

MAX_PRIME = 1 << 31


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    top = isqrt(p)
    while f <= top:
        if p % f == 0:
            return False
        f += 2
    return True


class FieldSpec:
    """Coefficient field selector: characteristic 0 means Q, p means GF(p).

    Elements of Q are ``Fraction``; elements of GF(p) are ints in
    ``range(p)``.  Only primes below 2**31 are accepted.
    """

    __slots__ = ("char",)

    def __init__(self, char: int = 0):
        if char != 0:
            if not (2 <= char < MAX_PRIME):
                raise ValueError(f"field characteristic out of range: {char}")
            if not _is_prime(char):
                raise ValueError(f"field characteristic must be prime: {char}")
        self.char = char

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Parse "Q" or "GF(p)" (case-insensitive, surrounding blanks ok)."""
        s = text.strip()
        if s.upper() == "Q":
            return cls(0)
        if s.upper().startswith("GF(") and s.endswith(")"):
            body = s[3:-1].strip()
            if not body.isdigit():
                raise ValueError(f"cannot parse field: {text!r}")
            return cls(int(body))
        raise ValueError(f"cannot parse field: {text!r}")

    def __repr__(self) -> str:
        return "Q" if self.char == 0 else f"GF({self.char})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FieldSpec) and self.char == other.char

    def __hash__(self) -> int:
        return hash(("FieldSpec", self.char))

    @property
    def zero(self):
        return Fraction(0) if self.char == 0 else 0

    @property
    def one(self):
        return Fraction(1) if self.char == 0 else 1

    def conv(self, x):
        """Coerce an int or Fraction into this field."""
        if self.char == 0:
            return Fraction(x)
        if isinstance(x, Fraction):
            num = x.numerator % self.char
            den = x.denominator % self.char
            if den == 0:
                raise ZeroDivisionError(f"denominator vanishes in GF({self.char})")
            return num * pow(den, self.char - 2, self.char) % self.char
        return x % self.char

    def add(self, a, b):
        return a + b if self.char == 0 else (a + b) % self.char

    def sub(self, a, b):
        return a - b if self.char == 0 else (a - b) % self.char

    def mul(self, a, b):
        return a * b if self.char == 0 else (a * b) % self.char

    def neg(self, a):
        return -a if self.char == 0 else (-a) % self.char

    def inv(self, a):
        if self.char == 0:
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return 1 / Fraction(a)
        if a % self.char == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.char - 2, self.char)

    def is_zero_elt(self, a) -> bool:
        return a == 0 if self.char == 0 else a % self.char == 0


QQ = FieldSpec(0)
GF2 = FieldSpec(2)


def _int_rows(mat):
    """Scale each row of a matrix over Q to coprime integers.

    Row scaling does not change the row space, the rank, or the kernel.
    """
    out = []
    for row in mat:
        lcm_den = 1
        for x in row:
            fx = Fraction(x)
            lcm_den = lcm_den * fx.denominator // gcd(lcm_den, fx.denominator)
        ints = [int(Fraction(x) * lcm_den) for x in row]
        g = 0
        for v in ints:
            g = gcd(g, v)
        if g > 1:
            ints = [v // g for v in ints]
        out.append(ints)
    return out


def _echelon_int(rows):
    """Fraction-free row echelon form of a list of integer rows (in place).

    Returns (rank, pivot_columns).  Eliminates below each pivot by integer
    cross-multiplication, then divides every updated row by its gcd so entry
    growth stays tame.  Rows end up ordered by pivot column; rows beyond the
    rank are identically zero.
    """
    m = len(rows)
    ncols = len(rows[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        sel = -1
        for i in range(r, m):
            if rows[i][c]:
                sel = i
                break
        if sel < 0:
            continue
        if sel != r:
            rows[r], rows[sel] = rows[sel], rows[r]
        piv = rows[r][c]
        for i in range(r + 1, m):
            f = rows[i][c]
            if f:
                ri = rows[i]
                rr = rows[r]
                new = [piv * ri[j] - f * rr[j] for j in range(ncols)]
                g = 0
                for v in new:
                    g = gcd(g, v)
                if g > 1:
                    new = [v // g for v in new]
                rows[i] = new
        pivots.append(c)
        r += 1
    return r, pivots


def _echelon_mod(rows, p):
    """Reduced row echelon form mod p (in place).  Returns (rank, pivots)."""
    m = len(rows)
    ncols = len(rows[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        sel = -1
        for i in range(r, m):
            if rows[i][c] % p:
                sel = i
                break
        if sel < 0:
            continue
        if sel != r:
            rows[r], rows[sel] = rows[sel], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [v * inv % p for v in rows[r]]
        for i in range(m):
            if i != r and rows[i][c] % p:
                f = rows[i][c]
                rr = rows[r]
                rows[i] = [(rows[i][j] - f * rr[j]) % p for j in range(ncols)]
        pivots.append(c)
        r += 1
    return r, pivots


def rank(mat, field: FieldSpec) -> int:
    if not mat or not mat[0]:
        return 0
    if field.char == 0:
        rows = _int_rows(mat)
        rk, _ = _echelon_int(rows)
    else:
        p = field.char
        rows = [[int(x) % p for x in row] for row in mat]
        rk, _ = _echelon_mod(rows, p)
    return rk


def kernel_basis(mat, ncols: int, field: FieldSpec):
    """Basis of the right kernel of ``mat`` acting on column vectors.

    ``ncols`` is the dimension of the domain; it must match the row length
    when the matrix has rows, and it carries the dimension when it does not.
    One basis vector per free column, in ascending free-column order; the
    vector for free column f has entry 1 there and zeros in the other free
    columns, which makes the result deterministic and easy to inspect.
    """
    if mat:
        assert len(mat[0]) == ncols, "ncols disagrees with matrix shape"
    if ncols == 0:
        return []
    if not mat:
        basis = []
        for f in range(ncols):
            v = [field.zero] * ncols
            v[f] = field.one
            basis.append(v)
        return basis

    if field.char == 0:
        rows = _int_rows(mat)
        rk, pivots = _echelon_int(rows)
        rows = rows[:rk]
        free = [c for c in range(ncols) if c not in set(pivots)]
        basis = []
        for f in free:
            v = [Fraction(0)] * ncols
            v[f] = Fraction(1)
            # back-substitute: rows are in echelon (not reduced) form
            for k in range(rk - 1, -1, -1):
                c = pivots[k]
                s = Fraction(0)
                row = rows[k]
                for j in range(c + 1, ncols):
                    if row[j] and v[j]:
                        s += row[j] * v[j]
                v[c] = -s / row[c]
            basis.append(v)
        return basis

    p = field.char
    rows = [[int(x) % p for x in row] for row in mat]
    rk, pivots = _echelon_mod(rows, p)
    rows = rows[:rk]
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for k, c in enumerate(pivots):
            v[c] = (-rows[k][f]) % p
        basis.append(v)
    return basis


class _Reducer:
    """Growable echelon basis used for span membership tests."""

    def __init__(self, ncols: int, field: FieldSpec):
        self.ncols = ncols
        self.field = field
        self.rows = []  # kept with leading coefficient 1, sorted by lead col

    def reduce(self, vec):
        """Return vec reduced against the current basis (a fresh list)."""
        F = self.field
        v = [F.conv(x) for x in vec]
        for lead, row in self.rows:
            if not F.is_zero_elt(v[lead]):
                f = v[lead]
                for j in range(lead, self.ncols):
                    v[j] = F.sub(v[j], F.mul(f, row[j]))
        return v

    def insert(self, vec) -> bool:
        """Reduce vec and absorb the remainder; False if it was dependent."""
        v = self.reduce(vec)
        F = self.field
        lead = -1
        for j in range(self.ncols):
            if not F.is_zero_elt(v[j]):
                lead = j
                break
        if lead < 0:
            return False
        inv = F.inv(v[lead])
        v = [F.mul(inv, x) for x in v]
        self.rows.append((lead, v))
        self.rows.sort(key=lambda t: t[0])
        return True


def complement_basis(vectors, subspace, field: FieldSpec):
    """Vectors from ``vectors`` extending ``subspace`` to span(vectors).

    Preconditions: span(subspace) is contained in span(vectors); raises
    ValueError otherwise.  The result is the subsequence of ``vectors``
    (earliest first) whose members are independent modulo the subspace, so
    together with ``subspace`` they span span(vectors).
    """
    if not vectors:
        if subspace:
            raise ValueError("subspace not contained in span of vectors")
        return []
    ncols = len(vectors[0])
    full = _Reducer(ncols, field)
    for v in vectors:
        full.insert(v)
    for s in subspace:
        if any(not field.is_zero_elt(x) for x in full.reduce(s)):
            raise ValueError("subspace not contained in span of vectors")

    red = _Reducer(ncols, field)
    for s in subspace:
        red.insert(s)
    chosen = []
    for v in vectors:
        if red.insert(v):
            chosen.append(v)
    return chosen


def homology_dim(outgoing, incoming, space_dim: int, field: FieldSpec) -> int:
    """dim ker(outgoing) - rank(incoming) for maps W <- V <- U.

    ``outgoing`` is the matrix of V -> W (space_dim columns), ``incoming``
    the matrix of U -> V (space_dim rows); either may be [] for a zero map.
    Raises ValueError unless outgoing . incoming == 0.
    """
    if outgoing:
        assert len(outgoing[0]) == space_dim, "outgoing shape mismatch"
    if incoming:
        assert len(incoming) == space_dim, "incoming shape mismatch"
    if outgoing and incoming and space_dim:
        ui = len(incoming[0])
        for i in range(len(outgoing)):
            orow = outgoing[i]
            for j in range(ui):
                s = field.zero
                for k in range(space_dim):
                    s = field.add(s, field.mul(orow[k], incoming[k][j]))
                if not field.is_zero_elt(s):
                    raise ValueError("maps do not compose to zero")
    ker = space_dim - rank(outgoing, field)
    h = ker - rank(incoming, field)
    assert h >= 0, "image not contained in kernel"
    return h
