"""Exact integer primitives: primality, sieves, factorization, smoothness."""

from __future__ import annotations

import math
import struct
from dataclasses import dataclass

import numpy as np

from .sets import IntegerSet

MAX_VALUE = 1 << 63  # factorization-style inputs stay below this
_U64 = 1 << 64

# First 12 primes: strong-pseudoprime testing with these bases is
# deterministic for every n < 2**64 (indeed below 3.3 * 10**24).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

SEGMENT_BITS = 1 << 20
_DEFAULT_SIEVE_BUDGET = 1 << 31  # bytes of packed bits
_SIEVE_MAGIC = b"PSV1"


def is_prime(n: int) -> bool:
    """Deterministic primality test for 0 <= n < 2**64."""
    if n < 0 or n >= _U64:
        raise ValueError(f"is_prime covers [0, 2**64), got {n}")
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = ((d & -d).bit_length()) - 1
    d >>= r
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_composite(n: int) -> bool:
    return n > 1 and not is_prime(n)


@dataclass(frozen=True)
class PrimeSieve:
    """Packed primality bits over [0, limit]: bit i of byte j covers 8j + i."""

    limit: int
    bits: bytes

    def is_prime(self, n: int) -> bool:
        if not 0 <= n <= self.limit:
            raise ValueError(f"sieve covers [0, {self.limit}], got {n}")
        return bool((self.bits[n >> 3] >> (n & 7)) & 1)

    def count(self) -> int:
        return int.from_bytes(self.bits, "little").bit_count()

    def mask(self, upto: int | None = None) -> np.ndarray:
        """Boolean primality array over [0, upto] (default the full range)."""
        hi = self.limit if upto is None else upto
        if not 0 <= hi <= self.limit:
            raise ValueError(f"mask range [0, {hi}] is outside the sieve")
        arr = np.unpackbits(np.frombuffer(self.bits, dtype=np.uint8), bitorder="little")
        return arr[: hi + 1].astype(bool)

    def primes(self) -> np.ndarray:
        return np.flatnonzero(self.mask())

    def save(self, path) -> None:
        with open(path, "wb") as fh:
            fh.write(_SIEVE_MAGIC)
            fh.write(struct.pack("<Q", self.limit))
            fh.write(self.bits)

    @classmethod
    def load(cls, path) -> "PrimeSieve":
        with open(path, "rb") as fh:
            magic = fh.read(4)
            if magic != _SIEVE_MAGIC:
                raise ValueError(f"{path}: bad magic {magic!r}")
            (limit,) = struct.unpack("<Q", fh.read(8))
            bits = fh.read()
        expected = (limit + 8) // 8
        if len(bits) != expected:
            raise ValueError(f"{path}: expected {expected} bitset bytes, found {len(bits)}")
        return cls(limit=limit, bits=bits)


def _dense_prime_mask(n: int) -> np.ndarray:
    mask = np.zeros(n + 1, dtype=bool)
    if n >= 2:
        mask[2:] = True
        for p in range(2, math.isqrt(n) + 1):
            if mask[p]:
                mask[p * p:: p] = False
    return mask


def sieve(limit: int, max_bytes: int = _DEFAULT_SIEVE_BUDGET) -> PrimeSieve:
    """Segmented sieve of Eratosthenes; O(limit/8) bytes of result bits plus
    one segment of working space."""
    if limit < 1:
        raise ValueError("limit must be >= 1")
    if (limit + 8) // 8 > max_bytes:
        raise MemoryError(f"sieve to {limit} exceeds the {max_bytes}-byte budget")
    base_primes = [int(p) for p in np.flatnonzero(_dense_prime_mask(math.isqrt(limit)))]
    nbits = limit + 1
    chunks = []
    for start in range(0, nbits, SEGMENT_BITS):
        seg_len = min(SEGMENT_BITS, nbits - start)
        seg = np.ones(seg_len, dtype=bool)
        if start == 0:
            seg[: min(2, seg_len)] = False
        for p in base_primes:
            first = max(p * p, ((start + p - 1) // p) * p)
            if first < start + seg_len:
                seg[first - start:: p] = False
        chunks.append(np.packbits(seg, bitorder="little").tobytes())
    return PrimeSieve(limit=limit, bits=b"".join(chunks))


_TRIAL_PRIMES = tuple(int(p) for p in np.flatnonzero(_dense_prime_mask(1 << 10)))


def _brent_rho(n: int) -> int:
    """Nontrivial factor of a composite n with no small prime factors
    (Brent's cycle-finding variant of Pollard rho, deterministic restarts)."""
    if n % 2 == 0:
        return 2
    for c in range(1, 64):
        y, r, q = 2, 1, 1
        g, ys, x = 1, 2, 2
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += 128
            r <<= 1
        if g == n:
            g, y = 1, ys
            while g == 1:
                y = (y * y + c) % n
                g = math.gcd(abs(x - y), n)
        if 1 < g < n:
            return g
    raise ArithmeticError(f"cycle search failed for {n}")


def _split(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _brent_rho(n)
    _split(d, out)
    _split(n // d, out)


def factorize(n: int) -> list[tuple[int, int]]:
    """Complete sorted factorization of 1 <= n < 2**63; [] for n = 1."""
    if not 1 <= n < MAX_VALUE:
        raise ValueError(f"factorize covers [1, 2**63), got {n}")
    out: dict[int, int] = {}
    for p in _TRIAL_PRIMES:
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n > 1:
        _split(n, out)
    return sorted(out.items())


def greatest_prime_factor(n: int) -> int:
    """p+(n), with the convention p+(1) = 1."""
    if n == 1:
        return 1
    return factorize(n)[-1][0]


@dataclass(frozen=True)
class SmoothnessPolicy:
    """Threshold rule y(n) deciding which integers count as smooth (friable).

    kind "composites" models any threshold with n/2 < y(n) < n: a composite n
    has p+(n) <= n/2 < y(n) while a prime n has p+(n) = n > y(n), so the
    smooth integers are exactly the composites (1 is excluded since
    p+(1) = 1 > y(1)).  kind "fixed" keeps p+(n) <= bound.  kind "log" keeps
    p+(n) <= max(factor * ln n, 2); the floor of 2 keeps the set nonempty at
    small n, a deliberate deviation below e**(2/factor).
    """

    kind: str
    bound: int | None = None
    factor: float | None = None

    def __post_init__(self):
        if self.kind not in ("composites", "fixed", "log"):
            raise ValueError(f"unknown policy kind {self.kind!r}")
        if self.kind == "fixed" and (self.bound is None or self.bound < 1):
            raise ValueError("fixed policy needs bound >= 1")
        if self.kind == "log" and (self.factor is None or self.factor <= 0):
            raise ValueError("log policy needs factor > 0")

    @classmethod
    def composites(cls) -> "SmoothnessPolicy":
        return cls("composites")

    @classmethod
    def fixed_bound(cls, bound: int) -> "SmoothnessPolicy":
        return cls("fixed", bound=bound)

    @classmethod
    def log_factor(cls, factor: float) -> "SmoothnessPolicy":
        return cls("log", factor=factor)

    def describe(self) -> str:
        if self.kind == "composites":
            return "composites (n/2 < y(n) < n)"
        if self.kind == "fixed":
            return f"fixed bound y0 = {self.bound}"
        return f"log factor: p+(n) <= max({self.factor} ln n, 2)"

    def is_smooth(self, n: int) -> bool:
        if n < 1:
            raise ValueError("smoothness is defined for n >= 1")
        if self.kind == "composites":
            return is_composite(n)
        g = greatest_prime_factor(n)
        if self.kind == "fixed":
            return g <= self.bound
        return g <= max(self.factor * math.log(n), 2.0)


def _gpf_table(limit: int) -> np.ndarray:
    """table[n] = p+(n) for 2 <= n <= limit; table[1] = 1."""
    table = np.zeros(limit + 1, dtype=np.int64)
    if limit >= 1:
        table[1] = 1
    if limit >= 2:
        for p in sieve(limit).primes():
            p = int(p)
            table[p:: p] = p
    return table


def _smooth_mask(policy: SmoothnessPolicy, limit: int) -> np.ndarray:
    if policy.kind == "composites":
        prime = sieve(limit).mask() if limit >= 2 else np.zeros(limit + 1, dtype=bool)
        idx = np.arange(limit + 1)
        return (idx >= 2) & ~prime
    gpf = _gpf_table(limit)
    if policy.kind == "fixed":
        keep = gpf <= policy.bound
    else:
        vals = np.arange(limit + 1, dtype=np.float64)
        with np.errstate(divide="ignore"):
            threshold = np.maximum(policy.factor * np.log(vals), 2.0)
        keep = gpf <= threshold
    keep[0] = False
    return keep


def smooth_set(policy: SmoothnessPolicy, limit: int) -> IntegerSet:
    """The smooth integers in [1, limit] under the policy, window [1, limit]."""
    if limit < 1:
        raise ValueError("limit must be >= 1")
    values = np.flatnonzero(_smooth_mask(policy, limit))
    return IntegerSet(tuple(int(v) for v in values), 1, limit)


def shifted_smooth_set(policy: SmoothnessPolicy, limit: int) -> IntegerSet:
    """{m + 1 : m smooth, m + 1 <= limit}, window [1, limit]."""
    if limit < 2:
        raise ValueError("limit must be >= 2")
    base = smooth_set(policy, limit - 1)
    return IntegerSet(tuple(v + 1 for v in base.elements), 1, limit)
