"""Independent oracles the tests check the engine against.

Nothing here imports the engine's Schubert machinery: the LR counter is a
direct backtracking enumeration of skew tableaux, and the bialternant
Schur polynomial goes through sympy.
"""

from __future__ import annotations

import sympy


def lr_coefficient(lam, mu, nu) -> int:
    """Littlewood-Richardson coefficient by brute-force tableau counting.

    Counts semistandard fillings of the skew shape nu/lam with content mu
    whose reverse reading word (rows top to bottom, each read right to
    left) is a lattice word.
    """
    lam = tuple(p for p in lam if p)
    mu = tuple(p for p in mu if p)
    nu = tuple(p for p in nu if p)
    if sum(nu) != sum(lam) + sum(mu):
        return 0
    if len(lam) > len(nu):
        return 0
    inner = lam + (0,) * (len(nu) - len(lam))
    if any(i > o for i, o in zip(inner, nu)):
        return 0
    if not mu:
        return 1  # empty filling

    boxes = []
    for i, width in enumerate(nu):
        for j in range(width - 1, inner[i] - 1, -1):  # reverse reading order
            boxes.append((i, j))
    grid = {(i, j): 0 for i, j in boxes}
    counts = [0] * (len(mu) + 1)
    total = 0

    def fill(pos: int):
        nonlocal total
        if pos == len(boxes):
            total += 1
            return
        i, j = boxes[pos]
        for v in range(1, len(mu) + 1):
            if counts[v] >= mu[v - 1]:
                continue
            if v >= 2 and counts[v] >= counts[v - 1]:
                continue  # lattice word prefix condition
            right = grid.get((i, j + 1))
            if right is not None and right and v > right:
                continue
            if i > 0 and inner[i - 1] <= j < nu[i - 1]:
                above = grid[(i - 1, j)]
                if v <= above:
                    continue
            grid[(i, j)] = v
            counts[v] += 1
            fill(pos + 1)
            counts[v] -= 1
            grid[(i, j)] = 0

    fill(0)
    return total


def pieri_power_of_sigma1(power: int, rows: int, width: int) -> dict:
    """Expansion of sigma_1^power inside the rows x width box, by the Pieri
    rule alone: multiplying by sigma_1 adds a single box in all ways."""
    coeffs = {(): 1}
    for _ in range(power):
        nxt: dict = {}
        for lam, c in coeffs.items():
            padded = list(lam) + [0] * (rows - len(lam))
            for r in range(rows):
                if padded[r] < width and (r == 0 or padded[r] < padded[r - 1]):
                    grown = padded[:]
                    grown[r] += 1
                    key = tuple(p for p in grown if p)
                    nxt[key] = nxt.get(key, 0) + c
        coeffs = nxt
    return coeffs


def schur_bialternant(lam, k: int):
    """Classical bialternant formula for the Schur polynomial, via sympy."""
    xs = sympy.symbols([f"x{i}" for i in range(1, k + 1)])
    padded = list(lam) + [0] * (k - len(lam))
    numerator = sympy.Matrix(k, k, lambda i, j: xs[i] ** (padded[j] + k - 1 - j))
    denominator = sympy.Matrix(k, k, lambda i, j: xs[i] ** (k - 1 - j))
    return sympy.expand(sympy.cancel(numerator.det() / denominator.det()))


def poly_to_sympy(p):
    """Translate an engine polynomial into a sympy expression."""
    families = "txuy"
    total = sympy.Integer(0)
    for mono, coeff in p.items():
        term = sympy.Integer(coeff)
        for (rank, idx), e in mono:
            term *= sympy.Symbol(f"{families[rank]}{idx}") ** e
        total += term
    return total
