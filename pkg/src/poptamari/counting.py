"""Closed-form counting helpers (exact integers throughout)."""

from math import comb


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("catalan index must be nonnegative")
    return comb(2 * n, n) // (n + 1)


def fuss_catalan(m: int, n: int) -> int:
    """Number of m-ballot paths ending at (mn, n)."""
    if n < 0 or m < 0:
        raise ValueError("fuss_catalan needs m, n >= 0")
    return comb((m + 1) * n, n) // (m * n + 1)


def exact_ratio(numer: int, denom: int) -> int:
    q, r = divmod(numer, denom)
    if r:
        raise ArithmeticError(f"{numer}/{denom} is not an integer")
    return q


def primitive_ballot_count(m: int, n: int) -> int:
    """Number of m-ballot paths of height n touching y = x/m only at the ends."""
    if n < 1:
        raise ValueError("n must be positive")
    return exact_ratio(comb((m + 1) * (n - 1) + m - 1, n - 1), n)


def max_orbit_count(m: int, n: int) -> int:
    """Number of m-ballot paths of height n whose Pop-orbit has size m+n-1."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return exact_ratio(comb((m + 1) * (n - 2) + m - 1, n - 2), n - 1)


def pell(n: int) -> int:
    """Pell numbers with P(1)=1, P(2)=2, P(n+1)=2P(n)+P(n-1)."""
    if n < 1:
        raise ValueError("pell index starts at 1")
    a, b = 1, 2
    for _ in range(n - 1):
        a, b = b, 2 * b + a
    return a


def g_sequence(n: int) -> int:
    """Coefficients of z/(1-3z-z^2): 1, 3, 10, 33, 109, ..."""
    if n < 1:
        raise ValueError("g index starts at 1")
    a, b = 1, 3
    for _ in range(n - 1):
        a, b = b, 3 * b + a
    return a


def g_sequence_coupled(n: int) -> int:
    """Same sequence from the coupled two-term system.

    g(k+1) = 2 g(k) + 3 a(k-1) + 1 and a(k) = g(k) + a(k-1), started from
    g(0) = 0 and a(-1) = a(0) = 0, where a(k) counts the 2-sortable paths
    whose two leading bracket entries agree and sit below the top value.
    """
    if n < 1:
        raise ValueError("g index starts at 1")
    g = [0]
    a = [0, 0]  # a[j] holds a(j - 1)
    for k in range(n):
        g.append(2 * g[k] + 3 * a[k] + 1)
        a.append(g[k + 1] + a[k + 1])
    return g[n]
