"""Affine systems over GF(p)."""
from itertools import product

from sympy.polys.domains import GF
from sympy.polys.matrices import DomainMatrix


def rref_mod_p(rows, p):
    """Reduced row echelon form of an integer matrix over GF(p).

    Returns ``(rows, pivots)`` with entries as ints in 0..p-1.
    """
    if not rows:
        return [], ()
    K = GF(p)
    width = len(rows[0])
    M = DomainMatrix([[K(int(a) % p) for a in row] for row in rows], (len(rows), width), K)
    reduced, pivots = M.rref()
    dense = reduced.to_Matrix()
    out = [[int(dense[i, j]) % p for j in range(width)] for i in range(len(pivots))]
    return out, tuple(pivots)


def solve_affine(rows, rhs, nvars, p):
    """All x in GF(p)^nvars with rows * x = rhs, in lexicographic order."""
    if nvars == 0:
        return [()] if all(b % p == 0 for b in rhs) else []
    augmented = [list(row) + [b] for row, b in zip(rows, rhs)]
    reduced, pivots = rref_mod_p(augmented, p)
    if nvars in pivots:
        return []
    free = [j for j in range(nvars) if j not in pivots]
    solutions = []
    for values in product(range(p), repeat=len(free)):
        x = [0] * nvars
        for j, v in zip(free, values):
            x[j] = v
        for r, col in enumerate(pivots):
            row = reduced[r]
            x[col] = (row[nvars] - sum(row[j] * x[j] for j in free)) % p
        solutions.append(tuple(x))
    solutions.sort()
    return solutions
