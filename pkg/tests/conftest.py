import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from monomial_lab.core import make_ideal, minimalize

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


# ---------------------------------------------------------------- strategies

def ideals(max_n=3, max_gens=3, max_entry=3, min_n=1):
    """Hypothesis strategy for small nonzero monomial ideals."""

    @st.composite
    def build(draw):
        n = draw(st.integers(min_n, max_n))
        vec = st.tuples(*[st.integers(0, max_entry)] * n)
        gens = draw(st.lists(vec, min_size=1, max_size=max_gens))
        return make_ideal(n, gens)

    return build()


def random_ideal(rng, max_n=3, max_gens=3, max_entry=3, proper=True):
    n = rng.randint(1, max_n)
    while True:
        gens = [
            tuple(rng.randint(0, max_entry) for _ in range(n))
            for _ in range(rng.randint(1, max_gens))
        ]
        I = make_ideal(n, gens)
        if not proper or not I.is_unit:
            return I


def random_primary_ideal(rng, max_n=3, max_exp=4):
    """A primary monomial ideal: pure powers of every variable in a support S
    plus random extra generators supported on S."""
    n = rng.randint(1, max_n)
    S = sorted(rng.sample(range(n), rng.randint(1, n)))
    gens = []
    for i in S:
        v = [0] * n
        v[i] = rng.randint(1, max_exp)
        gens.append(v)
    for _ in range(rng.randint(0, 3)):
        v = [0] * n
        for i in S:
            v[i] = rng.randint(0, max_exp)
        if any(v):
            gens.append(v)
    return make_ideal(n, gens)


@pytest.fixture
def rng():
    return random.Random(20240611)


# ------------------------------------------------------------------ oracles
# Deliberately naive re-implementations, kept apart from the library code.

def box_membership_oracle(I, box):
    """All lattice points of the box that are multiples of some generator."""
    pts = itertools.product(*(range(b + 1) for b in box))
    return {p for p in pts if any(all(g[j] <= p[j] for j in range(len(p))) for g in I.gens)}


def power_gens_bruteforce(I, k):
    """Minimal generators of I^k from every k-multiset of generators."""
    sums = []
    for combo in itertools.combinations_with_replacement(I.gens, k):
        sums.append(tuple(map(sum, zip(*combo))) if combo else (0,) * I.ambient_n)
    return minimalize(sums)


def closure_by_witness(I, k_max=12):
    """Closure generators from the definition: u with u^k in I^k, k <= k_max,
    searched over the closure box."""
    box = [max(g[j] for g in I.gens) for j in range(I.ambient_n)]
    powers = {k: power_gens_bruteforce(I, k) for k in range(1, k_max + 1)}
    found = []
    for a in itertools.product(*(range(b + 1) for b in box)):
        for k, gens in powers.items():
            ka = tuple(k * x for x in a)
            if any(all(g[j] <= ka[j] for j in range(len(a))) for g in gens):
                found.append(a)
                break
    return minimalize(found)


def grid_membership_oracle(I, a, denom=12):
    """True if some convex combination with weights in (1/denom)Z hits below a."""
    m = len(I.gens)
    for parts in itertools.product(range(denom + 1), repeat=m - 1):
        if sum(parts) > denom:
            continue
        w = [Fraction(p, denom) for p in parts] + [Fraction(denom - sum(parts), denom)]
        if all(sum(wi * g[j] for wi, g in zip(w, I.gens)) <= a[j] for j in range(len(a))):
            return True
    return False


def colon_ass_oracle(I):
    """Associated primes as the prime colons (I : u), u over the box [0, B]."""
    n = I.ambient_n
    box = [max(g[j] for g in I.gens) for j in range(n)]
    primes = set()
    for u in itertools.product(*(range(b + 1) for b in box)):
        colon = minimalize(tuple(max(g[j] - u[j], 0) for j in range(n)) for g in I.gens)
        if all(sum(c) == 1 for c in colon) and colon:
            primes.add(frozenset(c.index(1) for c in colon))
    return primes


def socle_components_oracle(I):
    """Irreducible components through the artinian extension I + (x_j^{B_j+1}):
    one component per maximal standard monomial, then drop the added powers
    and keep inclusion-minimal components."""
    n = I.ambient_n
    box = [max(g[j] for g in I.gens) for j in range(n)]

    def inside(v):
        if any(v[j] > box[j] for j in range(n)):
            return True
        return any(all(g[j] <= v[j] for j in range(n)) for g in I.gens)

    comps = set()
    for b in itertools.product(*(range(x + 1) for x in box)):
        if inside(b):
            continue
        if all(inside(tuple(b[k] + (k == j) for k in range(n))) for j in range(n)):
            comps.add(frozenset((j, b[j] + 1) for j in range(n) if b[j] < box[j]))

    def subset(A, B):
        Bd = dict(B)
        return all(i in Bd and Bd[i] <= a for i, a in A)

    return {c for c in comps if not any(o != c and subset(o, c) for o in comps)}


def fraction_rank(rows):
    """Rank by ordinary Gaussian elimination over Fraction."""
    M = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    cols = len(M[0]) if M else 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(M)) if M[r][c] != 0), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        for r in range(len(M)):
            if r != rank and M[r][c] != 0:
                f = M[r][c] / M[rank][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[rank])]
        rank += 1
    return rank


def count_bounded_alphas(n, i):
    """Integer solutions of a_1 + ... + a_n = i(n-1) with 0 <= a_j <= i."""
    return sum(1 for a in itertools.product(range(i + 1), repeat=n) if sum(a) == i * (n - 1))


def multinomial_coefficient_oracle(n, d, i):
    """Coefficient of t^i in (1 + ... + t^(d-1))^n from the multinomial theorem."""
    from math import factorial

    total = 0
    for ks in itertools.product(range(n + 1), repeat=d):
        if sum(ks) == n and sum(k * idx for idx, k in enumerate(ks)) == i:
            c = factorial(n)
            for k in ks:
                c //= factorial(k)
            total += c
    return total
