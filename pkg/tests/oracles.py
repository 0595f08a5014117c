"""Independent oracles for the property suites.

Nothing in this file uses Smith normal form or the library's
elimination code: determinants come from Laplace expansion, invariant
factors from gcds of all k x k minors, and small finite cokernels are
enumerated outright (the quotient embeds in (Z/det)^n through the
adjugate, so cosets can be listed and their element orders counted).
"""

from __future__ import annotations

from itertools import combinations
from math import gcd

from kirbycheck.linalg import AbelianGroup, IntegerMatrix


def laplace_det(rows: list[list[int]]) -> int:
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j, head in enumerate(rows[0]):
        if head == 0:
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        total += (-1) ** j * head * laplace_det(minor)
    return total


def minor_determinants(m: IntegerMatrix, k: int):
    for row_set in combinations(range(m.rows), k):
        for col_set in combinations(range(m.cols), k):
            yield laplace_det([[m[i, j] for j in col_set] for i in row_set])


def rank_by_minors(m: IntegerMatrix) -> int:
    for k in range(min(m.rows, m.cols), 0, -1):
        if any(d != 0 for d in minor_determinants(m, k)):
            return k
    return 0


def invariant_factors_by_minors(m: IntegerMatrix) -> AbelianGroup:
    """Cokernel invariants from determinantal divisors.

    d_k = gcd of all k x k minors; the k-th invariant factor is
    d_k / d_{k-1}; the free rank is cols - rank.
    """
    r = rank_by_minors(m)
    divisors = [1]
    for k in range(1, r + 1):
        g = 0
        for d in minor_determinants(m, k):
            g = gcd(g, d)
            if g == 1:
                break
        divisors.append(g)
    torsion = []
    for k in range(1, r + 1):
        factor = divisors[k] // divisors[k - 1]
        if factor > 1:
            torsion.append(factor)
    return AbelianGroup(m.cols - r, tuple(torsion))


def adjugate_transpose(m: IntegerMatrix) -> list[list[int]]:
    """adj(M^T): entry (i, j) = cofactor C_{ij} of M."""
    n = m.rows
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [
                [m[r, c] for c in range(n) if c != j] for r in range(n) if r != i
            ]
            out[i][j] = (-1) ** (i + j) * laplace_det(minor)
    return out


def enumerate_cokernel(m: IntegerMatrix, bound: int = 3000) -> AbelianGroup | None:
    """Exhaustive coset enumeration of Z^n / rowspan for square nonsingular M.

    Returns None when the matrix is not square, is singular, or the
    quotient order exceeds the bound.  The quotient injects into
    (Z/g)^n by v -> adj(M^T) v, so its cosets are the subgroup generated
    by the adjugate's columns; invariant factors are reconstructed from
    the counts of elements killed by each prime power.
    """
    if m.rows != m.cols or m.rows == 0:
        return None
    det = laplace_det([list(r) for r in m.entries])
    if det == 0 or abs(det) > bound:
        return None
    g = abs(det)
    adj = adjugate_transpose(m)
    n = m.rows
    generators = [tuple(adj[i][j] % g for i in range(n)) for j in range(n)]
    seen = {(0,) * n}
    frontier = [(0,) * n]
    while frontier:
        v = frontier.pop()
        for gen in generators:
            w = tuple((a + b) % g for a, b in zip(v, gen))
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    order = len(seen)
    if order != g:
        raise AssertionError(f"enumerated {order} cosets, |det| = {g}")

    def element_order(v: tuple[int, ...]) -> int:
        out = 1
        for x in v:
            out = out * (g // gcd(g, x)) // gcd(out, g // gcd(g, x))
        return out

    # per prime: lambda'_j = number of cyclic p-factors of exponent >= j,
    # recovered from |{x : p^j x = 0}| = p^(lambda'_1 + ... + lambda'_j)
    def prime_factors(v: int) -> list[int]:
        out = []
        p = 2
        while p * p <= v:
            if v % p == 0:
                out.append(p)
                while v % p == 0:
                    v //= p
            p += 1
        if v > 1:
            out.append(v)
        return out

    orders = [element_order(v) for v in seen]
    partitions: dict[int, list[int]] = {}
    for p in prime_factors(g):
        # counts[j-1] = number of cyclic p-factors with exponent >= j,
        # read off log_p of |{x : p^j x = 0}| as j grows
        counts: list[int] = []
        j = 1
        while True:
            killed = sum(1 for o in orders if (p**j) % o == 0)
            log = 0
            while killed > 1:
                killed //= p
                log += 1
            new = log - sum(counts)
            if new <= 0:
                break
            counts.append(new)
            j += 1
        partitions[p] = counts
    width = max((c[0] for c in partitions.values() if c), default=0)
    factors = []
    for slot in range(width):
        f = 1
        for p, counts in partitions.items():
            exponent = sum(1 for c in counts if c > slot)
            f *= p**exponent
        factors.append(f)
    factors = sorted(f for f in factors if f > 1)
    return AbelianGroup(0, tuple(factors))


def naive_signed_count(word_letters, gen: str) -> int:
    return sum(s for g, s in word_letters if g == gen)
