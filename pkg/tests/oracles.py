"""Brute-force oracles shared across the test suite.

Everything here works by exhaustive enumeration and is deliberately
independent of the Howell/span machinery it cross-checks.
"""

from itertools import product as iproduct

from amalgam.znlinalg import enumerate_span


def brute_span(modulus, rows):
    """All Z/N-combinations of the given rows, as a set of tuples."""
    if not rows:
        return {()}
    width = len(rows[0])
    vecs = {(0,) * width}
    for r in rows:
        vecs = {
            tuple((a + k * b) % modulus for a, b in zip(v, r))
            for v in vecs
            for k in range(modulus)
        }
    return vecs


def brute_left_kernel(m):
    n, r = m.modulus, m.rows
    out = set()
    for x in iproduct(range(n), repeat=r):
        acc = [0] * m.cols
        for i, xi in enumerate(x):
            if xi:
                for j, e in enumerate(m.row(i)):
                    acc[j] = (acc[j] + xi * e) % n
        if not any(acc):
            out.add(x)
    return out


def ideal_elements(ideal):
    """The ideal as a set of abstract coordinate tuples."""
    out = set()
    for row in enumerate_span(ideal.basis):
        out.add(ideal.ring.unscaled(row))
    return out


def brute_maximal_ideals(r):
    """All maximal ideals by closing principal ideals under sums.

    Every ideal of a finite ring is a finite sum of principal ideals, so
    the join closure of the principal ideals is the full ideal lattice;
    maximal ideals are the maximal proper members.  Usable only for small
    rings.
    """
    elems = list(r.elements())
    ideals = set()
    for x in elems:
        ideals.add(frozenset((x * y).coords for y in elems))
    frontier = list(ideals)
    while frontier:
        new = []
        for s in frontier:
            for t in list(ideals):
                u = frozenset(
                    tuple((a + b) % o for a, b, o in zip(ca, cb, r.orders))
                    for ca in s for cb in t)
                if u not in ideals:
                    ideals.add(u)
                    new.append(u)
        frontier = new
    full = frozenset(e.coords for e in elems)
    proper = [s for s in ideals if s != full]
    return {s for s in proper if not any(s < t for t in proper)}
