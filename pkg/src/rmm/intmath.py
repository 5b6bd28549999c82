"""Exact integer helpers: valuations, roots, and factoring by trial division
with a Pollard-rho fallback.  Everything here works on plain Python ints."""

import math
import random

from .errors import FactorizationTooHard

#: Convention used throughout: the p-adic valuation of 0 is +infinity, so
#: divisibility tests such as "v2(c4) >= 4" are vacuously true when c4 = 0.
INF = math.inf

DEFAULT_TRIAL_BOUND = 10**6
DEFAULT_RHO_ROUNDS = 64


def valuation(n, p):
    """p-adic valuation of n, with valuation(0, p) = +infinity."""
    if n == 0:
        return INF
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def iroot(n, k):
    """Largest r >= 0 with r**k <= n, for n >= 0."""
    if n < 0:
        raise ValueError("iroot of a negative integer")
    if n < 2 or k == 1:
        return n
    if k == 2:
        return math.isqrt(n)
    r = int(round(n ** (1.0 / k)))
    while r > 0 and r**k > n:
        r -= 1
    while (r + 1) ** k <= n:
        r += 1
    return r


def is_perfect_power(n, k):
    return n >= 0 and iroot(n, k) ** k == n


def is_probable_prime(n):
    """Miller-Rabin; deterministic for n < 3.3 * 10^24 via fixed bases."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    bases = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for a in bases:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n, rng):
    """One Brent-cycle attempt at a nontrivial factor of composite odd n."""
    if n % 2 == 0:
        return 2
    y = rng.randrange(1, n)
    c = rng.randrange(1, n)
    m = 128
    g = r = q = 1
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
        r *= 2
    if g == n:
        g = 1
        while g == 1:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
    return g if g != n else None


def factorize(n, trial_bound=DEFAULT_TRIAL_BOUND, rho_rounds=DEFAULT_RHO_ROUNDS):
    """Factor |n| > 0 into a {prime: exponent} dict.

    Trial division up to trial_bound, then Pollard-Brent with at most
    rho_rounds attempts per remaining composite; raises FactorizationTooHard
    if a composite cofactor survives the budget.
    """
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    factors = {}
    for p in (2, 3, 5):
        v = valuation(n, p)
        if v:
            factors[p] = v
            n //= p**v
    d = 7
    # wheel mod 30 starting at 7
    steps = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while d <= trial_bound and d * d <= n:
        if n % d == 0:
            v = 0
            while n % d == 0:
                n //= d
                v += 1
            factors[d] = v
        d += steps[i]
        i = (i + 1) % 8
    if n == 1:
        return factors
    if n <= trial_bound * trial_bound or is_probable_prime(n):
        factors[n] = factors.get(n, 0) + 1
        return factors
    rng = random.Random(n)
    stack = [n]
    budget = rho_rounds
    while stack:
        m = stack.pop()
        if is_probable_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        for k in (2, 3, 5):  # cheap perfect-power peel
            r = iroot(m, k)
            if r**k == m:
                stack.extend([r] * k)
                break
        else:
            g = None
            while g is None:
                if budget <= 0:
                    raise FactorizationTooHard(f"composite cofactor {m} survived the rho budget")
                budget -= 1
                g = _pollard_brent(m, rng)
            stack.extend([g, m // g])
    return factors


def squarefree_part(factors):
    """(s, c) with n = s * c**2 and s squarefree, from a factor dict."""
    s = c = 1
    for p, e in factors.items():
        if e % 2:
            s *= p
        c *= p ** (e // 2)
    return s, c


def is_squarefree(n, **kw):
    if n == 0:
        return False
    return all(e < 2 for e in factorize(n, **kw).values())


def is_cubefree(n, **kw):
    if n == 0:
        return False
    return all(e < 3 for e in factorize(n, **kw).values())
