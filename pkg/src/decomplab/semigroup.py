"""Coprime-generated multiplicative semigroups, families of pairwise-coprime
sums, bounded-height S-unit enumeration, and the lone factorable family."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iter_product

from .sets import DecompositionCandidate, IntegerSet, decompose_search, productset, windowed_equal


@dataclass(frozen=True)
class GammaSemigroup:
    """Pairwise coprime generators > 1 of a multiplicative semigroup
    (which always contains 1)."""

    generators: tuple[int, ...]

    def __post_init__(self):
        if not self.generators:
            raise ValueError("need at least one generator")
        if any(b <= a for a, b in zip(self.generators, self.generators[1:])):
            raise ValueError("generators must be sorted and distinct")
        for g in self.generators:
            if g < 2:
                raise ValueError(f"generator {g} must be > 1")
        gens = self.generators
        for i in range(len(gens)):
            for j in range(i + 1, len(gens)):
                d = math.gcd(gens[i], gens[j])
                if d != 1:
                    raise ValueError(
                        f"generators {gens[i]} and {gens[j]} are not coprime (gcd {d})"
                    )

    @classmethod
    def of(cls, values) -> "GammaSemigroup":
        return cls(tuple(sorted({int(v) for v in values})))


def enumerate_semigroup(g: GammaSemigroup, limit: int) -> IntegerSet:
    """All generator products <= limit, including the empty product 1."""
    if limit < 1:
        raise ValueError("limit must be >= 1")
    values = [1]
    for gen in g.generators:
        grown = []
        for v in values:
            w = v
            while w <= limit:
                grown.append(w)
                w *= gen
        values = grown
    return IntegerSet(tuple(sorted(values)), 1, limit)


def h_family(g: GammaSemigroup, k: int, limit: int, cumulative: bool = False) -> IntegerSet:
    """Sums of exactly k (or 1..k when cumulative) pairwise coprime semigroup
    elements, truncated to [1, limit].

    Repeated 1s are allowed (gcd(1,1) = 1); any element > 1 can appear at
    most once.  Enumeration walks elements in decreasing order, pruning on
    the running sum; the accumulated product of chosen elements serves as
    the coprimality radical.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if limit < 1:
        raise ValueError("limit must be >= 1")
    elems = sorted(
        (v for v in enumerate_semigroup(g, limit).elements if v > 1), reverse=True
    )
    found: set[int] = set()

    def record(total, used):
        if cumulative:
            lo_pad = 1 if used == 0 else 0
            for pad in range(lo_pad, k - used + 1):
                if total + pad <= limit:
                    found.add(total + pad)
        else:
            val = total + (k - used)
            if val <= limit:
                found.add(val)

    def walk(start, used, total, rad):
        record(total, used)
        if used == k:
            return
        min_fill = 0 if cumulative else (k - used - 1)
        for i in range(start, len(elems)):
            e = elems[i]
            if total + e + min_fill > limit:
                continue
            if math.gcd(e, rad) != 1:
                continue
            walk(i + 1, used + 1, total + e, rad * e)

    walk(0, 0, 0, 1)
    return IntegerSet(tuple(sorted(found)), 1, limit)


def h_family_star(g: GammaSemigroup, k: int, limit: int, cumulative: bool = False) -> IntegerSet:
    """Sum families without the coprimality restriction (k-fold sumsets)."""
    if k < 1 or limit < 1:
        raise ValueError("need k >= 1 and limit >= 1")
    base = enumerate_semigroup(g, limit).elements
    current = set(base)
    collected = set(base)
    for _ in range(k - 1):
        current = {x + y for x in base for y in current if x + y <= limit}
        collected |= current
    values = collected if cumulative else current
    return IntegerSet(tuple(sorted(values)), 1, limit)


@dataclass(frozen=True)
class ExceptionalFactorizationReport:
    limit: int
    passed: bool
    first_mismatch: int | None
    family_count: int
    product_count: int

    def to_json_dict(self):
        return {
            "limit": self.limit,
            "passed": self.passed,
            "first_mismatch": self.first_mismatch,
            "family_count": self.family_count,
            "product_count": self.product_count,
        }


def verify_exceptional_factorization(limit: int) -> ExceptionalFactorizationReport:
    """Check, exactly on [1, limit], that the sums of up to three pairwise
    coprime powers of two equal {1,2} * {2**beta, 2**beta + 1 : beta >= 0}."""
    if limit < 8:
        raise ValueError("limit must be >= 8")
    family = h_family(GammaSemigroup.of([2]), 3, limit, cumulative=True)
    core = set()
    power = 1
    while power <= limit:
        core.add(power)
        if power + 1 <= limit:
            core.add(power + 1)
        power *= 2
    rhs = productset(
        IntegerSet((1, 2), 1, 2),
        IntegerSet(tuple(sorted(core)), 1, limit),
    )
    passed, mismatch = windowed_equal(family, rhs, 1, limit)
    return ExceptionalFactorizationReport(
        limit=limit,
        passed=passed,
        first_mismatch=mismatch,
        family_count=len(family),
        product_count=len(rhs.slice(1, limit)),
    )


def strip_gamma_part(a: int, g: GammaSemigroup) -> tuple[int, int]:
    """Split a = a0 * d where d is the largest semigroup divisor of a; no
    generator divides a0.  Unique by pairwise coprimality of the generators."""
    if a < 1:
        raise ValueError("a must be >= 1")
    a0, d = a, 1
    for gen in g.generators:
        while a0 % gen == 0:
            a0 //= gen
            d *= gen
    return a0, d


@dataclass(frozen=True)
class SUnitEquation:
    """a1*x1 + ... + am*xm = 0 with nonzero rational coefficients and each
    xi drawn from the semigroup."""

    coeffs: tuple[Fraction, ...]
    gamma: GammaSemigroup

    def __post_init__(self):
        if len(self.coeffs) < 2:
            raise ValueError("need at least two coefficients")
        if any(c == 0 for c in self.coeffs):
            raise ValueError("coefficients must be nonzero")

    @classmethod
    def of(cls, coeffs, gamma: GammaSemigroup) -> "SUnitEquation":
        return cls(tuple(Fraction(c) for c in coeffs), gamma)


@dataclass(frozen=True)
class SolutionClass:
    """Canonical representative (no common semigroup factor > 1) of a
    proportionality class of solutions."""

    representative: tuple[int, ...]
    degenerate: bool


def _has_vanishing_subsum(coeffs, xs) -> bool:
    m = len(xs)
    if m < 3:
        return False
    terms = [c * x for c, x in zip(coeffs, xs)]
    for mask in range(1, (1 << m) - 1):
        total = Fraction(0)
        for i in range(m):
            if mask >> i & 1:
                total += terms[i]
        if total == 0:
            return True
    return False


def solve_sunit(eq: SUnitEquation, height: int) -> list[SolutionClass]:
    """Enumerate all solutions with every coordinate <= height, in exact
    rational arithmetic, canonicalized and deduplicated by proportionality."""
    if height < 1:
        raise ValueError("height must be >= 1")
    elems = enumerate_semigroup(eq.gamma, height).elements
    members = set(elems)
    coeffs = eq.coeffs
    m = len(coeffs)
    last = coeffs[-1]
    classes: dict[tuple[int, ...], SolutionClass] = {}
    for head in iter_product(elems, repeat=m - 1):
        partial = sum((c * x for c, x in zip(coeffs, head)), Fraction(0))
        tail = -partial / last
        if tail.denominator != 1:
            continue
        xm = tail.numerator
        if xm < 1 or xm > height or xm not in members:
            continue
        xs = head + (xm,)
        lam = strip_gamma_part(math.gcd(*xs), eq.gamma)[1]
        rep = tuple(x // lam for x in xs)
        if rep not in classes:
            classes[rep] = SolutionClass(rep, _has_vanishing_subsum(coeffs, xs))
    return [classes[r] for r in sorted(classes)]


def _coprime_blocks(g: GammaSemigroup, k: int, height: int) -> list[tuple[int, ...]]:
    """Tuples of 1..k pairwise coprime semigroup elements <= height, sorted
    ascending inside each block; 1 may repeat."""
    elems = sorted(
        (v for v in enumerate_semigroup(g, height).elements if v > 1), reverse=True
    )
    blocks: list[tuple[int, ...]] = []

    def walk(start, chosen, rad):
        used = len(chosen)
        for pad in range(0 if used else 1, k - used + 1):
            blocks.append((1,) * pad + tuple(sorted(chosen)))
        if used == k:
            return
        for i in range(start, len(elems)):
            e = elems[i]
            if math.gcd(e, rad) != 1:
                continue
            walk(i + 1, chosen + [e], rad * e)

    walk(0, [], 1)
    return blocks


def _ratio_degenerate(eps, xs, eta, ys) -> bool:
    """Does eps*(subsum of xs) = eta*(subsum of ys) for a proper, nonempty
    pair of subsets?  All terms are positive, so a vanishing subsum of the
    combined equation must take one side from each block."""
    def subset_sums(scale, vals):
        sums = {0}
        for v in vals:
            sums |= {s + scale * v for s in sums}
        return sums

    sx = subset_sums(eps, xs)
    sy = subset_sums(eta, ys)
    full = eps * sum(xs)
    return bool((sx & sy) - {0, full})


def l_set(g: GammaSemigroup, k: int, height: int, eps_height: int) -> IntegerSet:
    """Empirical under-approximation of the finite coordinate set: collect
    every coordinate appearing in a non-degenerate solution of
    eps*(x1+...+xl) = eta*(y1+...+yh) with pairwise coprime blocks,
    l,h <= k, l+h >= 3, coordinates <= height and eps, eta <= eps_height.

    The true set is ineffective; this reports evidence at explicit bounds,
    computed separately for each (generators, k) pair.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    if height < 1 or eps_height < 1:
        raise ValueError("heights must be >= 1")
    blocks = _coprime_blocks(g, k, height)
    by_sum: dict[int, list[tuple[int, ...]]] = {}
    for blk in blocks:
        by_sum.setdefault(sum(blk), []).append(blk)
    scales = enumerate_semigroup(g, eps_height).elements
    coords: set[int] = set()
    for eps in scales:
        for eta in scales:
            for xs in blocks:
                target = eps * sum(xs)
                if target % eta:
                    continue
                for ys in by_sum.get(target // eta, ()):
                    if len(xs) + len(ys) < 3:
                        continue
                    if _ratio_degenerate(eps, xs, eta, ys):
                        continue
                    coords.update(xs)
                    coords.update(ys)
    return IntegerSet(tuple(sorted(coords)), 1, height)


def solve_two_term(t2: int, t1: int, n: int, c: int, alpha_cap: int) -> list[tuple[int, int]]:
    """All (a1, a2) with both exponents <= alpha_cap and
    t2 * n**a1 - t1 * n**a2 = c, by exhaustive sweep."""
    if t1 < 1 or t2 < 1:
        raise ValueError("t1 and t2 must be positive")
    if n < 2:
        raise ValueError("n must be >= 2")
    if alpha_cap < 0:
        raise ValueError("alpha_cap must be >= 0")
    powers = [1]
    for _ in range(alpha_cap):
        powers.append(powers[-1] * n)
    out = []
    for a1 in range(alpha_cap + 1):
        lhs = t2 * powers[a1]
        for a2 in range(alpha_cap + 1):
            if lhs - t1 * powers[a2] == c:
                out.append((a1, a2))
    return out


def two_term_min_exponent_bound(n: int, c: int) -> int | None:
    """For c != 0, the largest e with n**e | c; min(a1, a2) of any solution is
    forced at or below it since n**min divides both terms.  None when c = 0."""
    if n < 2:
        raise ValueError("n must be >= 2")
    if c == 0:
        return None
    e, rest = 0, abs(c)
    while rest % n == 0:
        rest //= n
        e += 1
    return e


@dataclass(frozen=True)
class MprimScanReport:
    generators: tuple[int, ...]
    k: int
    cumulative: bool
    limit: int
    max_b_size: int
    max_b_elem: int
    candidates: tuple[DecompositionCandidate, ...]
    expected_parts: tuple[tuple[int, ...], ...]
    consistent: bool

    def to_json_dict(self):
        return {
            "generators": list(self.generators),
            "k": self.k,
            "cumulative": self.cumulative,
            "limit": self.limit,
            "max_b_size": self.max_b_size,
            "max_b_elem": self.max_b_elem,
            "found_parts": [list(c.b) for c in self.candidates],
            "expected_parts": [list(b) for b in self.expected_parts],
            "consistent": self.consistent,
        }


def mprimitivity_scan(
    g: GammaSemigroup,
    k: int,
    limit: int,
    cumulative: bool = False,
    max_b_size: int = 3,
    max_b_elem: int = 100,
) -> MprimScanReport:
    """Build the sum-family truncation and run the multiplicative
    decomposition search over it.

    Predicted outcome: no candidate at all, except generators {2} with
    cumulative sums of up to k = 3 terms, where exactly the part {1, 2}
    must appear.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    family = h_family(g, k, limit, cumulative=cumulative)
    candidates = tuple(
        decompose_search(family, "multiplicative", max_b_size, max_b_elem)
    )
    exceptional = g.generators == (2,) and cumulative and k == 3
    expected = ((1, 2),) if exceptional else ()
    found = tuple(c.b for c in candidates)
    return MprimScanReport(
        generators=g.generators,
        k=k,
        cumulative=cumulative,
        limit=limit,
        max_b_size=max_b_size,
        max_b_elem=max_b_elem,
        candidates=candidates,
        expected_parts=expected,
        consistent=found == expected,
    )
