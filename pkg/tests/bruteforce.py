"""Independent brute-force oracles; deliberately avoids hopfkit's linear algebra."""

from fractions import Fraction
from math import lcm


def bareiss_rank(rows) -> int:
    """Rank via fraction-free (Bareiss) elimination on integer-scaled rows."""
    if not rows:
        return 0
    m = []
    for r in rows:
        fr = [Fraction(x) for x in r]
        scale = lcm(*(f.denominator for f in fr)) if fr else 1
        m.append([int(f * scale) for f in fr])
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    row = 0
    for col in range(ncols):
        piv = None
        for r in range(row, nrows):
            if m[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        for r in range(row + 1, nrows):
            for c in range(col + 1, ncols):
                m[r][c] = (m[row][col] * m[r][c] - m[r][col] * m[row][c]) // prev
            m[r][col] = 0
        prev = m[row][col]
        row += 1
        rank += 1
        if row == nrows:
            break
    return rank


def subgroup_closure(table, support, identity) -> frozenset:
    """Subgroup generated by ``support`` inside a finite group's index table."""
    s = set(support) | {identity}
    changed = True
    while changed:
        changed = False
        for a in list(s):
            for b in list(s):
                c = table[a][b]
                if c not in s:
                    s.add(c)
                    changed = True
    return frozenset(s)


def gauss_solve_membership(rows, target) -> bool:
    """Is ``target`` a rational combination of ``rows``?  Plain elimination."""
    if not rows:
        return all(Fraction(x) == 0 for x in target)
    work = [[Fraction(x) for x in r] for r in rows]
    t = [Fraction(x) for x in target]
    ncols = len(t)
    used = []
    for col in range(ncols):
        piv = None
        for i, r in enumerate(work):
            if i not in used and r[col] != 0:
                piv = i
                break
        if piv is None:
            continue
        used.append(piv)
        pr = work[piv]
        f = t[col] / pr[col]
        if f != 0:
            t = [a - f * b for a, b in zip(t, pr)]
        for i, r in enumerate(work):
            if i != piv and r[col] != 0:
                g = r[col] / pr[col]
                work[i] = [a - g * b for a, b in zip(r, pr)]
    return all(x == 0 for x in t)
