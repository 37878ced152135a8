"""Exact linear algebra over Z/N via the Howell normal form.

Everything downstream (ring carriers, ideals, syzygies, resolutions) reduces
to questions about row spans of integer matrices modulo N, where N is any
modulus >= 2, prime or not.  Because Z/N has zero divisors, ordinary row
echelon form does not give canonical answers; the Howell form does:

* pivots divide N and pivot columns strictly increase,
* entries above a pivot are reduced modulo that pivot,
* the span is "saturated": any span element whose first k coordinates vanish
  lies in the span of the rows whose pivots sit beyond column k.

Two matrices have the same row span iff they have the identical Howell form,
which makes span equality, membership and kernel computations decidable and
canonical.  All vectors are row vectors; kernels are left kernels.

Two engines sit behind one API: a generic one for arbitrary N (lists of
ints), and a bitmask engine for N = 2 where rows are Python ints and row
operations are single xors.  Both produce the same canonical tuples.
"""

from math import gcd, prod

MAX_MODULUS = 1 << 31


class DimensionMismatch(ValueError):
    """Operands disagree on modulus or ambient dimension."""


def _xgcd(a, b):
    """Extended gcd: returns (g, s, t) with s*a + t*b = g, g >= 0."""
    s, s1 = 1, 0
    t, t1 = 0, 1
    g, g1 = a, b
    while g1:
        q = g // g1
        s, s1 = s1, s - q * s1
        t, t1 = t1, t - q * t1
        g, g1 = g1, g - q * g1
    if g < 0:
        s, t, g = -s, -t, -g
    return g, s, t


def _lift_unit(b, n):
    """A unit u modulo n with u*b = gcd(b, n) (mod n), for b != 0 mod n.

    Classical normalization step: every residue is associate to the divisor
    gcd(b, n) of n.  Invert b/g modulo n/g, then bump by multiples of n/g
    until the representative is coprime to n (a valid choice exists by CRT).
    """
    b %= n
    g = gcd(b, n)
    m = n // g
    if m == 1:
        return 1
    u = pow((b // g) % m, -1, m)
    while gcd(u, n) != 1:
        u += m
    return u % n


class ZnMatrix:
    """Immutable matrix over Z/N, entries stored row-major in [0, N)."""

    __slots__ = ("modulus", "rows", "cols", "entries")

    def __init__(self, modulus, rows, cols, entries):
        if not 2 <= modulus <= MAX_MODULUS:
            raise ValueError(f"modulus must be in [2, 2^31], got {modulus}")
        if rows < 0 or cols < 0:
            raise ValueError("negative dimensions")
        entries = tuple(e % modulus for e in entries)
        if len(entries) != rows * cols:
            raise ValueError("entry count does not match dimensions")
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, *a):
        raise AttributeError("ZnMatrix is immutable")

    @classmethod
    def from_rows(cls, modulus, row_list, cols=None):
        row_list = [list(r) for r in row_list]
        if cols is None:
            cols = len(row_list[0]) if row_list else 0
        for r in row_list:
            if len(r) != cols:
                raise DimensionMismatch("ragged rows")
        flat = [e for r in row_list for e in r]
        return cls(modulus, len(row_list), cols, flat)

    @classmethod
    def identity(cls, modulus, n):
        return cls.from_rows(modulus, [[1 if i == j else 0 for j in range(n)] for i in range(n)], n)

    def row(self, i):
        c = self.cols
        return self.entries[i * c:(i + 1) * c]

    def row_list(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def mul(self, other):
        if self.modulus != other.modulus or self.cols != other.rows:
            raise DimensionMismatch("matrix product shape/modulus mismatch")
        n = self.modulus
        out = []
        orows = other.row_list()
        for i in range(self.rows):
            ri = self.row(i)
            acc = [0] * other.cols
            for k, a in enumerate(ri):
                if a:
                    rk = orows[k]
                    for j in range(other.cols):
                        acc[j] += a * rk[j]
            out.append([x % n for x in acc])
        return ZnMatrix.from_rows(n, out, other.cols)

    def add(self, other):
        if (self.modulus, self.rows, self.cols) != (other.modulus, other.rows, other.cols):
            raise DimensionMismatch("matrix sum shape/modulus mismatch")
        n = self.modulus
        return ZnMatrix(n, self.rows, self.cols,
                        [(a + b) % n for a, b in zip(self.entries, other.entries)])

    def __eq__(self, other):
        if not isinstance(other, ZnMatrix):
            return NotImplemented
        return (self.modulus, self.rows, self.cols, self.entries) == \
               (other.modulus, other.rows, other.cols, other.entries)

    def __hash__(self):
        return hash((self.modulus, self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"ZnMatrix(mod {self.modulus}, {self.rows}x{self.cols}, {self.row_list()})"


class HowellBasis:
    """Canonical Howell-form basis of a row span in (Z/N)^ambient.

    Structural equality of two HowellBasis values over the same modulus and
    ambient dimension is equivalent to equality of the spans they generate.
    """

    __slots__ = ("modulus", "ambient", "rows", "pivots")

    def __init__(self, modulus, ambient, rows):
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "rows", tuple(tuple(r) for r in rows))
        pivots = []
        for r in self.rows:
            for j, v in enumerate(r):
                if v:
                    pivots.append((j, v))
                    break
        object.__setattr__(self, "pivots", tuple(pivots))

    def __setattr__(self, *a):
        raise AttributeError("HowellBasis is immutable")

    def __eq__(self, other):
        if not isinstance(other, HowellBasis):
            return NotImplemented
        return (self.modulus, self.ambient, self.rows) == \
               (other.modulus, other.ambient, other.rows)

    def __hash__(self):
        return hash((self.modulus, self.ambient, self.rows))

    def __repr__(self):
        return f"HowellBasis(mod {self.modulus}, dim {self.ambient}, {len(self.rows)} rows)"

    def span_size(self):
        """Cardinality of the span: product of N/pivot over all pivots."""
        n = self.modulus
        return prod(n // v for (_, v) in self.pivots)

    def _check(self, v):
        if len(v) != self.ambient:
            raise DimensionMismatch(
                f"vector length {len(v)} != ambient {self.ambient}")

    def contains(self, v):
        """Exact span membership by greedy reduction along pivots."""
        self._check(v)
        n = self.modulus
        w = None
        for row, (j, a) in zip(self.rows, self.pivots):
            x = v[j] if w is None else w[j]
            if x % n == 0:
                continue
            if x % a:
                return False
            if w is None:
                w = [e % n for e in v]
            q = w[j] // a
            for t in range(j, self.ambient):
                w[t] = (w[t] - q * row[t]) % n
        if w is None:
            return all(e % n == 0 for e in v)
        return not any(w)

    def reduce(self, v):
        """Canonical (lexicographically smallest) representative of v + span."""
        self._check(v)
        n = self.modulus
        w = [e % n for e in v]
        for row, (j, a) in zip(self.rows, self.pivots):
            q = w[j] // a
            if q:
                for t in range(j, self.ambient):
                    w[t] = (w[t] - q * row[t]) % n
        return tuple(w)


class _GenericBuilder:
    """Incremental Howell accumulator for arbitrary modulus.

    rows maps pivot column -> row (list).  Invariants maintained on insert:
    every stored pivot value divides N, and whenever a pivot row is created
    or replaced its annihilator multiple (N/pivot)*row is re-inserted, which
    is exactly the saturation the Howell property requires.
    """

    def __init__(self, modulus, ncols):
        self.n = modulus
        self.ncols = ncols
        self.rows = {}
        self._basis = None

    def insert(self, vec):
        n = self.n
        ncols = self.ncols
        if len(vec) != ncols:
            raise DimensionMismatch(f"vector length {len(vec)} != {ncols}")
        rows = self.rows
        stack = [[e % n for e in vec]]
        while stack:
            v = stack.pop()
            j = 0
            while j < ncols:
                if not v[j]:
                    j += 1
                    continue
                piv = rows.get(j)
                if piv is None:
                    b = v[j]
                    u = _lift_unit(b, n)
                    if u != 1:
                        v = [(u * x) % n for x in v]
                    g = v[j]
                    rows[j] = v
                    if g > 1:
                        sat = n // g
                        w = [(sat * x) % n for x in v]
                        if any(w):
                            stack.append(w)
                    break
                a = piv[j]
                b = v[j]
                if b % a == 0:
                    q = b // a
                    for t in range(j, ncols):
                        v[t] = (v[t] - q * piv[t]) % n
                else:
                    g, s, t_ = _xgcd(a, b)
                    newpiv = [(s * piv[t] + t_ * v[t]) % n for t in range(ncols)]
                    aq, bq = a // g, b // g
                    v = [(aq * v[t] - bq * piv[t]) % n for t in range(ncols)]
                    rows[j] = newpiv
                    sat = n // g
                    w = [(sat * x) % n for x in newpiv]
                    if any(w):
                        stack.append(w)
                j += 1
        self._basis = None

    def contains(self, vec):
        n = self.n
        rows = self.rows
        v = [e % n for e in vec]
        for j in range(self.ncols):
            if not v[j]:
                continue
            piv = rows.get(j)
            if piv is None or v[j] % piv[j]:
                return False
            q = v[j] // piv[j]
            for t in range(j, self.ncols):
                v[t] = (v[t] - q * piv[t]) % n
        return True

    def basis(self):
        if self._basis is not None:
            return self._basis
        n = self.n
        cols = sorted(self.rows)
        reduced = {j: list(self.rows[j]) for j in cols}
        # Clear entries above each pivot modulo the pivot value.
        for j in cols:
            prow = reduced[j]
            a = prow[j]
            for i in cols:
                if i >= j:
                    break
                r = reduced[i]
                q = r[j] // a
                if q:
                    for t in range(j, self.ncols):
                        r[t] = (r[t] - q * prow[t]) % n
        self._basis = HowellBasis(n, self.ncols, [reduced[j] for j in cols])
        return self._basis


class _Gf2Builder:
    """Howell accumulator over Z/2: rows are ints, bit j = column j.

    Over a field the Howell form degenerates to the reduced row echelon
    form (all pivots are 1 and saturation is vacuous), so insertion is a
    plain xor-elimination.  This is the hot path for characteristic-2 rings.
    """

    def __init__(self, modulus, ncols):
        assert modulus == 2
        self.n = 2
        self.ncols = ncols
        self.rows = {}
        self._basis = None

    def _pack(self, vec):
        if len(vec) != self.ncols:
            raise DimensionMismatch(f"vector length {len(vec)} != {self.ncols}")
        m = 0
        for j, e in enumerate(vec):
            if e & 1:
                m |= 1 << j
        return m

    def insert(self, vec):
        v = self._pack(vec)
        rows = self.rows
        while v:
            j = (v & -v).bit_length() - 1
            piv = rows.get(j)
            if piv is None:
                rows[j] = v
                break
            v ^= piv
        self._basis = None

    def contains(self, vec):
        v = self._pack(vec)
        rows = self.rows
        while v:
            j = (v & -v).bit_length() - 1
            piv = rows.get(j)
            if piv is None:
                return False
            v ^= piv
        return True

    def basis(self):
        if self._basis is not None:
            return self._basis
        cols = sorted(self.rows)
        reduced = dict(self.rows)
        for j in cols:
            prow = reduced[j]
            for i in cols:
                if i >= j:
                    break
                if reduced[i] >> j & 1:
                    reduced[i] ^= prow
        out = []
        for j in cols:
            m = reduced[j]
            out.append(tuple((m >> t) & 1 for t in range(self.ncols)))
        self._basis = HowellBasis(2, self.ncols, out)
        return self._basis


def span_builder(modulus, ncols):
    """Incremental span accumulator; dispatches on the modulus."""
    if not 2 <= modulus <= MAX_MODULUS:
        raise ValueError(f"modulus must be in [2, 2^31], got {modulus}")
    if modulus == 2:
        return _Gf2Builder(modulus, ncols)
    return _GenericBuilder(modulus, ncols)


def howell_from_rows(modulus, rows, ncols):
    b = span_builder(modulus, ncols)
    for r in rows:
        b.insert(r)
    return b.basis()


def howell(m):
    """Canonical Howell basis of the row span of m."""
    return howell_from_rows(m.modulus, m.row_list(), m.cols)


def kernel(m):
    """Canonical basis of the left kernel {x : x*m = 0 (mod N)}.

    Computed from the Howell form of [m | I]: rows of that span are the
    pairs (x*m, x), and by the saturation property the rows whose leading
    m-part vanishes form a Howell basis of exactly the kernel.
    """
    n, r, c = m.modulus, m.rows, m.cols
    aug = []
    for i in range(r):
        row = list(m.row(i)) + [0] * r
        row[c + i] = 1
        aug.append(row)
    h = howell_from_rows(n, aug, c + r)
    out = [row[c:] for row in h.rows if not any(row[:c])]
    return HowellBasis(n, r, out)


def solve(m, b):
    """Deterministic solution x of x*m = b, or None.

    The particular solution is found by greedy reduction of b against the
    Howell form of [m | I]; it is then normalized to the canonical
    (lexicographically smallest) representative of its coset modulo the
    left kernel of m, so equal inputs always give the identical answer.
    """
    b = list(b)
    if len(b) != m.cols:
        raise DimensionMismatch(f"rhs length {len(b)} != cols {m.cols}")
    n, r, c = m.modulus, m.rows, m.cols
    aug = []
    for i in range(r):
        row = list(m.row(i)) + [0] * r
        row[c + i] = 1
        aug.append(row)
    h = howell_from_rows(n, aug, c + r)
    v = [e % n for e in b]
    x = [0] * r
    ker_rows = []
    for row, (j, a) in zip(h.rows, h.pivots):
        if j >= c:
            ker_rows.append(row[c:])
            continue
        if not v[j]:
            continue
        if v[j] % a:
            return None
        q = v[j] // a
        for t in range(j, c):
            v[t] = (v[t] - q * row[t]) % n
        for t in range(r):
            x[t] = (x[t] + q * row[c + t]) % n
    if any(v):
        return None
    kb = HowellBasis(n, r, ker_rows)
    return kb.reduce(x)


def span_contains(h, v):
    if not isinstance(h, HowellBasis):
        raise TypeError("span_contains expects a HowellBasis")
    return h.contains(list(v))


def span_equal(h1, h2):
    if h1.modulus != h2.modulus or h1.ambient != h2.ambient:
        raise DimensionMismatch("span_equal across different modulus/ambient")
    return h1.rows == h2.rows


def span_size(h):
    return h.span_size()


def enumerate_span(h):
    """All span elements by brute force; test oracle for small spans only."""
    n = h.modulus
    vecs = {(0,) * h.ambient}
    for row in h.rows:
        new = set()
        for k in range(n):
            shift = tuple((k * e) % n for e in row)
            for v in vecs:
                new.add(tuple((a + b) % n for a, b in zip(v, shift)))
        vecs = new
    return vecs
