#!/usr/bin/env python3
"""Derive the F20 sextic resolvent of x^5 + p x^3 + q x^2 + r x + s.

theta = sum over the 10 terms x_i^2 x_j x_k listed below; its stabilizer in
S5 is the Frobenius group of order 20.  The resolvent is the product of
(y - theta(sigma x)) over the six cosets.  Each coefficient of y^(6-j) is a
weighted-homogeneous integer polynomial of weight 4j in (p, q, r, s) with
weights (2, 3, 4, 5); the coefficients are fitted exactly from numerically
computed resolvents at integer points and verified on fresh points.

Prints C++ table rows: {j, coeff, ep, eq, er, es}.
"""
import itertools
import random
from fractions import Fraction

import mpmath

mpmath.mp.dps = 60

THETA_TERMS = [(0, 1, 4), (0, 2, 3), (1, 0, 2), (1, 3, 4), (2, 0, 4),
               (2, 1, 3), (3, 0, 1), (3, 2, 4), (4, 0, 3), (4, 1, 2)]


def theta(x, perm):
    return sum(x[perm[i]] ** 2 * x[perm[j]] * x[perm[k]] for i, j, k in THETA_TERMS)


def theta_key(perm):
    return frozenset((perm[i], frozenset((perm[j], perm[k]))) for i, j, k in THETA_TERMS)


def coset_reps():
    base = theta_key(tuple(range(5)))
    stab = [g for g in itertools.permutations(range(5)) if theta_key(g) == base]
    assert len(stab) == 20, len(stab)
    seen, reps = set(), []
    for g in itertools.permutations(range(5)):
        key = theta_key(g)
        if key not in seen:
            seen.add(key)
            reps.append(g)
    assert len(reps) == 6
    return reps


REPS = coset_reps()


def numeric_resolvent(p, q, r, s):
    roots = mpmath.polyroots([1, 0, p, q, r, s], maxsteps=400, extraprec=400)
    thetas = [theta(roots, g) for g in REPS]
    coeffs = [mpmath.mpc(1)]
    for t in thetas:
        nxt = coeffs + [mpmath.mpc(0)]
        for i in range(1, len(nxt)):
            nxt[i] -= t * coeffs[i - 1]
        coeffs = nxt
    out = []
    for c in coeffs:
        v = int(mpmath.nint(c.real))
        assert abs(c - v) < mpmath.mpf(10) ** -20, c
        out.append(v)
    return out


def monomials(weight):
    res = []
    for es in range(weight // 5 + 1):
        for er in range((weight - 5 * es) // 4 + 1):
            for eq in range((weight - 5 * es - 4 * er) // 3 + 1):
                rest = weight - 5 * es - 4 * er - 3 * eq
                if rest % 2 == 0:
                    res.append((rest // 2, eq, er, es))
    return res


def solve_exact(rows, rhs, ncols):
    """Exact solution of an overdetermined consistent system; None if rank-deficient."""
    aug = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    pivots, r = [], 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(aug)) if aug[i][c] != 0), None)
        if piv is None:
            return None
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [v * inv for v in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    for i in range(r, len(aug)):
        assert aug[i][-1] == 0, "inconsistent system"
    return [aug[i][-1] for i in range(ncols)]


def main():
    rng = random.Random(20240611)
    samples = {}

    def sample():
        while True:
            pt = tuple(rng.randint(-7, 7) for _ in range(4))
            if pt in samples:
                continue
            try:
                samples[pt] = numeric_resolvent(*pt)
            except (AssertionError, mpmath.libmp.NoConvergence):
                continue
            return pt

    rows = []
    for j in range(1, 7):
        mons = monomials(4 * j)
        pts = [sample() for _ in range(len(mons) + 6)]
        sol = None
        while sol is None:
            mat = [[p ** a * q ** b * r ** c * s ** d for (a, b, c, d) in mons] for (p, q, r, s) in pts]
            sol = solve_exact(mat, [samples[pt][j] for pt in pts], len(mons))
            if sol is None:
                pts += [sample() for _ in range(4)]
        for v in sol:
            assert v.denominator == 1, v
        for _ in range(10):
            pt = sample()
            val = sum(int(c) * pt[0] ** a * pt[1] ** b * pt[2] ** cc * pt[3] ** d
                      for c, (a, b, cc, d) in zip(sol, mons))
            assert val == samples[pt][j], (j, pt)
        for c, mon in zip(sol, mons):
            if c != 0:
                rows.append((j, int(c)) + mon)
    for row in rows:
        print("    {%d, %d, %d, %d, %d, %d}," % row)


if __name__ == "__main__":
    main()
