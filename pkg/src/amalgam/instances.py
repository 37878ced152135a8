"""The standard instance set shipped with the workbench.

Three families of amalgamations over small local base rings; each satisfies
the hypothesis set (A local, J proper, J^2 = 0, f(M)J = 0) the verification
harness assumes:

  (i)   the duplication of Z/4 along its maximal ideal (2);
  (ii)  an idealization tower: A = Z/4 |x (Z/4)/(2), B = A |x E' for a small
        residue vector space E', J = 0 |x E', f the inclusion a -> (a, 0);
  (iii) truncated polynomial rings A = F2[x]/(x^t) mapped onto F2[x]/(x^2),
        with J the image of (x).
"""

from .rings import ModuleSpec, RingHom, trivial_extension, trunc_poly, zmod
from .modules import ideal_span
from .amalgam import duplication as _duplication, amalgamation as _amalgamation


def standard_duplication():
    """(i) Z/4 duplicated along (2): the order-8 local showcase ring."""
    z4 = zmod(4)
    ideal_two = ideal_span(z4, [z4.from_int(2)])
    return _duplication(z4, ideal_two)


def standard_idealization_tower(dim=1):
    """(ii) A = Z/4 |x (Z/4)/(2); B = A |x E', J = 0 |x E', dim E' in {1, 2}."""
    if dim not in (1, 2):
        raise ValueError("the shipped tower uses dim E' in {1, 2}")
    z4 = zmod(4)
    e_inner = ModuleSpec(z4, [2], [[[1]]], labels=("e",))
    a = trivial_extension(z4, e_inner)
    # E' is a vector space over A/M: the unit acts as identity, the
    # maximal-ideal part of the basis acts as zero.
    k = dim
    ident = [[1 if i == j else 0 for j in range(k)] for i in range(k)]
    zero = [[0] * k for _ in range(k)]
    e_outer = ModuleSpec(a, [2] * k, [ident, zero],
                         labels=tuple(f"e'{i}" for i in range(k)))
    b = trivial_extension(a, e_outer)
    f = RingHom(a, b, [b.basis_element(i).coords for i in range(a.rank)])
    j = ideal_span(b, [b.basis_element(a.rank + i) for i in range(k)])
    return _amalgamation(a, b, f, j)


def standard_truncation(t=3):
    """(iii) A = F2[x]/(x^t) -> B = F2[x]/(x^2), J = (x) in B."""
    if t < 3:
        raise ValueError("truncation degree must be at least 3")
    a = trunc_poly(2, t)
    b = trunc_poly(2, 2)
    rows = []
    for i in range(t):
        rows.append(tuple(1 if (k == i and i < 2) else 0 for k in range(2)))
    f = RingHom(a, b, rows)
    j = ideal_span(b, [b.basis_element(1)])
    return _amalgamation(a, b, f, j)


def standard_instances():
    """All shipped instances keyed by a short name."""
    return {
        "dup_z4": standard_duplication(),
        "tower_dim1": standard_idealization_tower(1),
        "tower_dim2": standard_idealization_tower(2),
        "trunc_t3": standard_truncation(3),
        "trunc_t4": standard_truncation(4),
    }
