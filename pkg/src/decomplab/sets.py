"""Finite integer-set algebra: windowed sets, sumsets, product sets, and the
exhaustive windowed decomposition searcher."""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from itertools import combinations

import numpy as np

VALUE_CAP = 1 << 63
MASK_BUDGET = 1 << 28  # largest window a dense boolean mask may span


class WindowError(ValueError):
    """An operation needed data outside a set's asserted-complete window."""


@dataclass(frozen=True)
class IntegerSet:
    """Sorted, deduplicated non-negative integers, asserted complete on
    [window_lo, window_hi].

    The window records the truncation: membership is only meaningful inside
    it, and elements outside it are a construction error.
    """

    elements: tuple[int, ...]
    window_lo: int
    window_hi: int

    def __post_init__(self):
        if self.window_lo < 0 or self.window_lo > self.window_hi:
            raise ValueError(
                f"invalid window [{self.window_lo}, {self.window_hi}]"
            )
        prev = -1
        for v in self.elements:
            if v <= prev:
                raise ValueError("elements must be strictly increasing")
            prev = v
        if self.elements:
            if self.elements[0] < self.window_lo or self.elements[-1] > self.window_hi:
                raise ValueError("elements must lie inside the window")
            if self.elements[-1] > VALUE_CAP:
                raise ValueError("elements must not exceed 2**63")

    @classmethod
    def from_values(cls, values, window_lo=None, window_hi=None) -> "IntegerSet":
        elems = tuple(sorted({int(v) for v in values}))
        if not elems and (window_lo is None or window_hi is None):
            raise ValueError("an empty set needs an explicit window")
        lo = elems[0] if window_lo is None else window_lo
        hi = elems[-1] if window_hi is None else window_hi
        return cls(elems, lo, hi)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, value):
        i = bisect_left(self.elements, value)
        return i < len(self.elements) and self.elements[i] == value

    def slice(self, lo: int, hi: int) -> tuple[int, ...]:
        """Elements in [lo, hi]."""
        return self.elements[bisect_left(self.elements, lo): bisect_right(self.elements, hi)]

    def as_mask(self) -> np.ndarray:
        """Dense membership mask over [0, window_hi]."""
        if self.window_hi + 1 > MASK_BUDGET:
            raise MemoryError(f"window top {self.window_hi} too large for a dense mask")
        mask = np.zeros(self.window_hi + 1, dtype=bool)
        if self.elements:
            mask[np.fromiter(self.elements, dtype=np.int64)] = True
        return mask

    def save_text(self, path) -> None:
        """Text format: header "# window lo hi", then one integer per line."""
        with open(path, "w") as fh:
            fh.write(f"# window {self.window_lo} {self.window_hi}\n")
            for v in self.elements:
                fh.write(f"{v}\n")

    @classmethod
    def load_text(cls, path) -> "IntegerSet":
        with open(path) as fh:
            header = fh.readline().split()
            if len(header) != 4 or header[0] != "#" or header[1] != "window":
                raise ValueError(f"{path}: missing '# window lo hi' header")
            lo, hi = int(header[2]), int(header[3])
            values = [int(line) for line in fh if line.strip()]
        return cls(tuple(sorted(set(values))), lo, hi)


def sumset(b: IntegerSet, c: IntegerSet) -> IntegerSet:
    """{x + y : x in b, y in c}, window [lo_b+lo_c, hi_b+hi_c]."""
    if b.elements and c.elements:
        if b.elements[-1] + c.elements[-1] > VALUE_CAP:
            raise OverflowError("sum exceeds 2**63")
        if len(b.elements) * len(c.elements) >= (1 << 18) and b.elements[-1] + c.elements[-1] < VALUE_CAP:
            eb = np.asarray(b.elements, dtype=np.int64)
            ec = np.asarray(c.elements, dtype=np.int64)
            elems = tuple(int(v) for v in np.unique(np.add.outer(eb, ec)))
        else:
            elems = tuple(sorted({x + y for x in b.elements for y in c.elements}))
    else:
        elems = ()
    return IntegerSet(elems, b.window_lo + c.window_lo, b.window_hi + c.window_hi)


def productset(b: IntegerSet, c: IntegerSet) -> IntegerSet:
    """{x * y : x in b, y in c}; every element of both parts must be >= 1."""
    for part in (b, c):
        if part.elements and part.elements[0] < 1:
            raise ValueError("product sets need all elements >= 1")
    if b.elements and c.elements:
        if b.elements[-1] * c.elements[-1] > VALUE_CAP:
            raise OverflowError("product exceeds 2**63")
        elems = tuple(sorted({x * y for x in b.elements for y in c.elements}))
    else:
        elems = ()
    return IntegerSet(elems, b.window_lo * c.window_lo, b.window_hi * c.window_hi)


def windowed_equal(a: IntegerSet, b: IntegerSet, lo: int, hi: int) -> tuple[bool, int | None]:
    """Do a and b agree on [lo, hi]?  Returns (equal, smallest disagreement).

    [lo, hi] must sit inside both windows, otherwise the comparison would
    silently treat unknown tails as empty.
    """
    if lo > hi:
        raise ValueError(f"empty comparison window [{lo}, {hi}]")
    for name, s in (("first", a), ("second", b)):
        if lo < s.window_lo or hi > s.window_hi:
            raise WindowError(
                f"[{lo}, {hi}] is not inside the {name} set's window "
                f"[{s.window_lo}, {s.window_hi}]"
            )
    xa, xb = a.slice(lo, hi), b.slice(lo, hi)
    if xa == xb:
        return True, None
    for u, v in zip(xa, xb):
        if u != v:
            return False, min(u, v)
    longer = xa if len(xa) > len(xb) else xb
    return False, longer[min(len(xa), len(xb))]


@dataclass(frozen=True)
class DecompositionCandidate:
    """An accepted part pair: the small part b and the canonical maximal c.

    coverage_window is the interval on which the combined set was checked to
    equal the target; it may be empty (lo > hi) for degenerate geometry.
    """

    kind: str
    b: tuple[int, ...]
    c: IntegerSet
    coverage_window: tuple[int, int]

    def verify(self, target: IntegerSet) -> bool:
        """Recombine the parts and recheck equality with the target."""
        if len(self.b) < 2 or len(self.c) < 2:
            return False
        lo, hi = self.coverage_window
        if lo > hi:
            return True
        bset = IntegerSet(self.b, self.b[0], self.b[-1])
        if self.kind == "additive":
            combined = sumset(bset, self.c)
        else:
            combined = productset(bset, self.c)
        equal, _ = windowed_equal(target, combined, lo, hi)
        return equal


def decompose_search(
    target: IntegerSet,
    kind: str,
    max_b_size: int,
    max_b_elem: int,
    full_window: bool = False,
) -> list[DecompositionCandidate]:
    """Enumerate small parts b and accept those whose canonical maximal c
    reproduces the target on the coverage window.

    Additive candidates are subsets of [0, max_b_elem] containing 0;
    multiplicative candidates are subsets of the divisors (<= max_b_elem) of
    target elements.  For each b the canonical maximal c collects every shift
    (or ratio) whose combinations all land in the target or below the window;
    b is accepted when c has at least two elements and b (+|*) c covers every
    target element on the coverage window.  By default that window is shrunk
    by max(b) at both ends (additive) or scaled by max(b) (multiplicative) to
    suppress truncation edge artifacts; full_window=True checks the whole
    window instead.

    Only parts with |b| <= max_b_size are visible: a decomposition whose both
    halves are large/infinite is invisible to this finite search.
    """
    if not target.elements:
        raise ValueError("target must be nonempty")
    if max_b_size < 2 or max_b_elem < 1:
        raise ValueError("need max_b_size >= 2 and max_b_elem >= 1")
    if kind not in ("additive", "multiplicative"):
        raise ValueError(f"unknown kind {kind!r}")
    lo, hi = target.window_lo, target.window_hi
    mask = target.as_mask()
    allowed = mask.copy()
    allowed[:lo] = True  # combinations below the window are unconstrained

    accepted: list[DecompositionCandidate] = []
    if kind == "additive":
        for size in range(2, max_b_size + 1):
            for rest in combinations(range(1, max_b_elem + 1), size - 1):
                cand = _additive_candidate((0,) + rest, mask, allowed, lo, hi, full_window)
                if cand is not None:
                    accepted.append(cand)
    else:
        if target.elements[0] < 1 or lo < 1:
            raise ValueError("multiplicative search needs a positive target and window")
        pool = [d for d in range(1, max_b_elem + 1) if mask[d::d].any()]
        strided = {d: allowed[::d] for d in pool}
        for size in range(2, max_b_size + 1):
            for b in combinations(pool, size):
                cand = _multiplicative_candidate(b, mask, strided, lo, hi, full_window)
                if cand is not None:
                    accepted.append(cand)
    accepted.sort(key=lambda cand: cand.b)
    return accepted


def _additive_candidate(b, mask, allowed, lo, hi, full_window):
    maxb = b[-1]
    climit = hi - maxb
    if climit < 0:
        return None
    ok = allowed[: climit + 1].copy()
    for beta in b[1:]:
        ok &= allowed[beta: beta + climit + 1]
    if int(ok.sum()) < 2:
        return None
    cover_lo, cover_hi = (lo, hi) if full_window else (lo + maxb, hi - maxb)
    if cover_lo <= cover_hi:
        covered = np.zeros(hi + 1, dtype=bool)
        for beta in b:
            covered[beta: beta + climit + 1] |= ok
        seg = slice(cover_lo, cover_hi + 1)
        if np.any(mask[seg] & ~covered[seg]):
            return None
    cvals = tuple(int(v) for v in np.flatnonzero(ok))
    return DecompositionCandidate(
        "additive", b, IntegerSet(cvals, 0, climit), (cover_lo, cover_hi)
    )


def _multiplicative_candidate(b, mask, strided, lo, hi, full_window):
    maxb = b[-1]
    climit = hi // maxb
    if climit < 1:
        return None
    ok = strided[b[0]][: climit + 1].copy()
    for beta in b[1:]:
        ok &= strided[beta][: climit + 1]
    ok[0] = False  # c >= 1
    idx = np.flatnonzero(ok)
    if len(idx) < 2:
        return None
    cover_lo, cover_hi = (lo, hi) if full_window else (lo * maxb, hi // maxb)
    if cover_lo <= cover_hi:
        covered = np.zeros(hi + 1, dtype=bool)
        for beta in b:
            covered[idx * beta] = True
        seg = slice(cover_lo, cover_hi + 1)
        if np.any(mask[seg] & ~covered[seg]):
            return None
    cvals = tuple(int(v) for v in idx)
    return DecompositionCandidate(
        "multiplicative", b, IntegerSet(cvals, 1, climit), (cover_lo, cover_hi)
    )


COVER_OFFSETS = (0, 1, 3, 5)


@dataclass(frozen=True)
class CompositeCoverReport:
    limit: int
    passed: bool
    first_mismatch: int | None
    base_count: int
    covered_count: int
    composite_count: int

    def to_json_dict(self):
        return {
            "limit": self.limit,
            "passed": self.passed,
            "first_mismatch": self.first_mismatch,
            "base_count": self.base_count,
            "covered_count": self.covered_count,
            "composite_count": self.composite_count,
            "offsets": list(COVER_OFFSETS),
        }


def verify_composite_decomposition(limit: int) -> CompositeCoverReport:
    """Check that the composites in [9, limit] are exactly A + {0,1,3,5} with
    A = {n >= 1 : none of n, n+1, n+3, n+5 is prime}.

    Every sum lands on a non-prime, and conversely an odd composite n sits in
    A itself while an even composite n >= 10 has a non-prime among n-1, n-3,
    n-5 (one of them is divisible by 3 and exceeds 3), so equality is exact on
    [9, limit] with no edge slack.
    """
    if limit < 20:
        raise ValueError("limit must be at least 20")
    from .arith import sieve

    prime = sieve(limit + 5).mask()
    nonprime = ~prime
    base = (
        nonprime[0: limit + 1]
        & nonprime[1: limit + 2]
        & nonprime[3: limit + 4]
        & nonprime[5: limit + 6]
    ).copy()
    base[0] = False
    covered = np.zeros(limit + 1, dtype=bool)
    for off in COVER_OFFSETS:
        covered[off:] |= base[: limit + 1 - off]
    idx = np.arange(limit + 1)
    composite = (idx >= 2) & ~prime[: limit + 1]

    diff = covered[9:] ^ composite[9:]
    mismatches = np.flatnonzero(diff)
    first = int(mismatches[0]) + 9 if len(mismatches) else None
    return CompositeCoverReport(
        limit=limit,
        passed=first is None,
        first_mismatch=first,
        base_count=int(base.sum()),
        covered_count=int(covered[9:].sum()),
        composite_count=int(composite[9:].sum()),
    )
