"""Amalgamated constructions: f(A)+J subrings, A |><|^f J, duplications.

The amalgamation of A with B along an ideal J of B via f : A -> B is the
subring {(a, f(a) + j)} of A x B.  Additively it is A + J, so the carrier
here uses coordinates (a-part in A's basis, j-part in a cyclic basis of J);
multiplication follows from

    (a, f(a)+j) * (a', f(a')+j') = (aa', f(aa') + f(a)j' + f(a')j + jj').

AmalgamObjects bundles the constructed ring with the canonical maps and
ideals the verification harness consumes: the pair constructor, the
projection onto A, {0} x J, M |><| J for the maximal ideal of a local A,
and the subring f(A) + J of B.
"""

from math import lcm

from .znlinalg import ZnMatrix, solve, span_builder
from .rings import (DEFAULT_MAX_ORDER, FiniteRing, RingConstructionError,
                    RingElement, RingHom)
from .abgroups import subgroup_decomposition
from .modules import ideal_span
from . import spectrum


class _SubgroupCoords:
    """Coordinate solver for a cyclic basis of an additive subgroup."""

    def __init__(self, ambient, basis_elems, orders):
        self.ambient = ambient
        self.basis_elems = list(basis_elems)
        self.orders = list(orders)
        rows = [list(ambient.scaled(e.coords)) for e in self.basis_elems]
        self.matrix = ZnMatrix.from_rows(ambient.char, rows, ambient.rank)

    def coords(self, target):
        sol = solve(self.matrix, list(self.ambient.scaled(target.coords)))
        if sol is None:
            raise ValueError(f"element {target!r} is not in the subgroup")
        return tuple(c % o for c, o in zip(sol, self.orders))

    def element(self, coords):
        acc = self.ambient.zero()
        for c, e in zip(coords, self.basis_elems):
            if c:
                acc = acc + c * e
        return acc


def _ideal_group_basis(ideal):
    """Cyclic decomposition of an ideal's additive group."""
    ring = ideal.ring
    rows = [list(ring.unscaled(row)) for row in ideal.basis.rows]
    orders, basis_rows = subgroup_decomposition(rows, ring.orders)
    elems = [ring.element(tuple(r)) for r in basis_rows]
    return orders, elems


def image_plus_J(f, j):
    """The subring f(A) + J of B, with its inclusion into B.

    The additive group is generated by the images of A's basis together
    with J; it is closed under multiplication because J is an ideal and f
    is a ring homomorphism.
    """
    b = f.target
    if j.ring is not b:
        raise ValueError("ideal does not live in the hom's target")
    gen_rows = [list(f.apply_coords(f.source.basis_element(i).coords))
                for i in range(f.source.rank)]
    gen_rows += [list(b.unscaled(row)) for row in j.basis.rows]
    orders, basis_rows = subgroup_decomposition(gen_rows, b.orders)
    if not orders:
        raise RingConstructionError("f(A) + J collapsed to the zero group")
    basis_elems = [b.element(tuple(r)) for r in basis_rows]
    coords = _SubgroupCoords(b, basis_elems, orders)
    d = len(orders)
    tensor = []
    for i in range(d):
        row = []
        for k in range(d):
            row.append(coords.coords(basis_elems[i] * basis_elems[k]))
        tensor.append(tuple(row))
    unit = coords.coords(b.one())
    sub = FiniteRing(lcm(*orders), tuple(orders), tensor, unit,
                     labels=tuple(f"c{i}" for i in range(d)),
                     name=f"f({f.source.name})+J")
    incl = RingHom(sub, b, [e.coords for e in basis_elems])
    return sub, incl


class AmalgamObjects:
    """The amalgamation ring together with its canonical maps and ideals."""

    def __init__(self, ring_a, ring_b, hom, ideal_j, budget=DEFAULT_MAX_ORDER):
        if hom.source is not ring_a or hom.target is not ring_b:
            raise ValueError("hom endpoints do not match the given rings")
        if ideal_j.ring is not ring_b:
            raise ValueError("J must be an ideal of B")
        if not ideal_j.is_proper():
            raise RingConstructionError("J must be a proper ideal of B")
        self.a = ring_a
        self.b = ring_b
        self.f = hom
        self.j = ideal_j
        self.budget = budget

        j_orders, j_elems = _ideal_group_basis(ideal_j)
        self.j_orders = tuple(j_orders)
        self.j_group_basis = tuple(j_elems)
        self._j_coords = _SubgroupCoords(ring_b, j_elems, j_orders)

        da, k = ring_a.rank, len(j_orders)
        zero_a, zero_j = (0,) * da, (0,) * k
        f_images = [ring_b.element(hom.apply_coords(ring_a.basis_element(i).coords))
                    for i in range(da)]
        tensor = []
        for i in range(da + k):
            row = []
            for t in range(da + k):
                if i < da and t < da:
                    row.append(tuple(ring_a.tensor[i][t]) + zero_j)
                elif i < da and t >= da:
                    prod = f_images[i] * j_elems[t - da]
                    row.append(zero_a + self._j_coords.coords(prod))
                elif i >= da and t < da:
                    prod = f_images[t] * j_elems[i - da]
                    row.append(zero_a + self._j_coords.coords(prod))
                else:
                    prod = j_elems[i - da] * j_elems[t - da]
                    row.append(zero_a + self._j_coords.coords(prod))
            tensor.append(tuple(row))
        orders = ring_a.orders + self.j_orders
        unit = ring_a.unit + zero_j
        labels = ring_a.labels + tuple(f"j{t}" for t in range(k))
        self.ring = FiniteRing(ring_a.char, orders, tensor, unit,
                               labels=labels,
                               name=f"{ring_a.name}><{ring_b.name}")
        assert self.ring.order() == ring_a.order() * ideal_j.size()

        self.proj_a = RingHom(
            self.ring, ring_a,
            [ring_a.basis_element(i).coords for i in range(da)] +
            [(0,) * da for _ in range(k)], check=False)

        # canonical ideals
        self.zero_j = ideal_span(self.ring,
                                 [self.embed(ring_a.zero(), e) for e in j_elems])
        assert self.zero_j.size() == ideal_j.size()
        self.a_local, self.a_max = spectrum.is_local(ring_a, budget)
        self.mj = self.mj_of(self.a_max) if self.a_local else None
        self.subring, self.subring_incl = image_plus_J(hom, ideal_j)
        self._j_in_subring = None
        self._ring_local = None

    def ring_local(self):
        """(flag, maximal ideal) of the constructed ring, cached."""
        if self._ring_local is None:
            self._ring_local = spectrum.is_local(self.ring, self.budget)
        return self._ring_local

    def embed(self, a_elem, j_elem):
        """The ring element with pair (a, f(a) + j)."""
        if a_elem.ring is not self.a:
            raise ValueError("first component must be an element of A")
        if j_elem.ring is not self.b:
            raise ValueError("second component must be an element of B in J")
        return RingElement(self.ring,
                           a_elem.coords + self._j_coords.coords(j_elem))

    def embed_vector(self, a_vec, j_vec=None):
        """Slotwise pair embedding of (u, f^p(u) + k) for vectors."""
        if j_vec is None:
            j_vec = [self.b.zero()] * len(a_vec)
        return tuple(self.embed(u, k) for u, k in zip(a_vec, j_vec))

    def decompose(self, elem):
        """Inverse of embed: the (a, j) coordinates of a ring element."""
        da = self.a.rank
        a_elem = self.a.element(elem.coords[:da])
        j_elem = self._j_coords.element(elem.coords[da:])
        return a_elem, j_elem

    def second_component(self, elem):
        """The actual B-coordinate f(a) + j of the pair."""
        a_elem, j_elem = self.decompose(elem)
        return self.f(a_elem) + j_elem

    def mj_of(self, ideal_a):
        """The ideal m |><| J = {(m, f(m)+j)} for an ideal m of A."""
        gens = [self.embed(x, self.b.zero())
                for x in (ideal_a.element_rows())]
        gens += [self.embed(self.a.zero(), e) for e in self.j_group_basis]
        out = ideal_span(self.ring, gens)
        assert out.size() == ideal_a.size() * self.j.size()
        return out

    def j_in_subring(self):
        """J as an ideal of the subring f(A) + J."""
        if self._j_in_subring is None:
            sub, incl = self.subring, self.subring_incl
            solver = _SubgroupCoords(
                self.b,
                [self.b.element(row) for row in incl.matrix],
                sub.orders)
            gens = []
            for e in self.j_group_basis:
                gens.append(sub.element(solver.coords(e)))
            self._j_in_subring = ideal_span(sub, gens)
        return self._j_in_subring

    def additive_span(self, p, vectors):
        """Canonical basis of the plain additive span of vectors in R^p."""
        ring = self.ring
        builder = span_builder(ring.char, p * ring.rank)
        for v in vectors:
            flat = []
            for e in v:
                flat.extend(ring.scaled(e.coords))
            builder.insert(flat)
        return builder.basis()

    def product_set_basis(self, kerv, p):
        """Scaled basis of the set kerv |><| J^p inside R^p.

        kerv is a Submodule of A^p; the set {(v, f^p(v) + j)} is additively
        generated by the embedded basis rows of kerv and by every J basis
        element placed in every slot.
        """
        vectors = []
        for row in kerv.rows_as_vectors():
            vectors.append(self.embed_vector(row))
        zero_a = self.a.zero()
        for s in range(p):
            for e in self.j_group_basis:
                vec = [self.ring.zero()] * p
                vec[s] = self.embed(zero_a, e)
                vectors.append(tuple(vec))
        return self.additive_span(p, vectors)


def amalgamation(ring_a, ring_b, hom, ideal_j, budget=DEFAULT_MAX_ORDER):
    """Construct A |><|^f J with its canonical maps and ideals."""
    return AmalgamObjects(ring_a, ring_b, hom, ideal_j, budget)


def duplication(ring_a, ideal_a, budget=DEFAULT_MAX_ORDER):
    """Amalgamated duplication A |><| I: B = A, f = identity, J = I."""
    return amalgamation(ring_a, ring_a, RingHom.identity(ring_a), ideal_a,
                        budget)


# -- powers, for the (A |><| J)^n ~ A^n |><| J^n isomorphism -----------------

def ring_power(r, n):
    """The n-fold product ring; coordinates are slot-major."""
    from .rings import product
    out = r
    for _ in range(n - 1):
        out = product(out, r)
    return out


def power_slot_element(r_pow, r, n, slot, elem):
    """Embed an element of r into slot `slot` of the n-fold power."""
    d = r.rank
    coords = [0] * (n * d)
    for i, c in enumerate(elem.coords):
        coords[slot * d + i] = c
    return r_pow.element(tuple(coords))


def hom_power(f, n, src_pow, tgt_pow):
    """Block-diagonal power of a hom between the n-fold product rings."""
    da, db = f.source.rank, f.target.rank
    rows = []
    for s in range(n):
        for i in range(da):
            row = [0] * (n * db)
            for t, c in enumerate(f.matrix[i]):
                row[s * db + t] = c
            rows.append(tuple(row))
    return RingHom(src_pow, tgt_pow, rows, check=False)


def ideal_power(j, n, b_pow):
    """J^n = J + ... + J as an ideal of the n-fold power of B."""
    b = j.ring
    gens = []
    for s in range(n):
        for e in [b.element(b.unscaled(row)) for row in j.basis.rows]:
            gens.append(power_slot_element(b_pow, b, n, s, e))
    return ideal_span(b_pow, gens)
