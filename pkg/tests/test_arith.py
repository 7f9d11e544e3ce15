import math
import random

import numpy as np
import pytest

from decomplab import (
    PrimeSieve,
    SmoothnessPolicy,
    factorize,
    greatest_prime_factor,
    is_composite,
    is_prime,
    shifted_smooth_set,
    sieve,
    smooth_set,
)
from oracles import naive_factorize, naive_is_prime, naive_sieve


def test_is_prime_edge_cases():
    assert not is_prime(0)
    assert not is_prime(1)
    assert is_prime(2)
    assert is_prime(241)
    assert not is_prime(121)


def test_is_prime_matches_trial_division():
    for n in range(2000):
        assert is_prime(n) == naive_is_prime(n), n


def test_is_prime_known_hard_cases():
    # strong pseudoprimes to small base sets, and values near 2**64
    assert not is_prime(3215031751)            # spsp to bases 2,3,5,7
    assert not is_prime(3825123056546413051)   # spsp to bases 2..23
    assert is_prime(2**61 - 1)
    assert is_prime(2**64 - 59)
    assert not is_prime(2**64 - 1)


def test_is_prime_domain():
    with pytest.raises(ValueError):
        is_prime(-1)
    with pytest.raises(ValueError):
        is_prime(2**64)


def test_sieve_small():
    assert list(sieve(10).primes()) == [2, 3, 5, 7]
    assert sieve(100).count() == 25
    assert sieve(1).count() == 0


def test_sieve_against_naive():
    ps = sieve(10**4)
    assert list(ps.primes()) == naive_sieve(10**4)


def test_sieve_million_count():
    assert sieve(10**6).count() == 78498


def test_sieve_crosses_segment_boundary():
    # limits straddling the segment size must agree with a fresh small sieve
    seg = 1 << 20
    ps = sieve(seg + 10)
    small = sieve(1000)
    for n in range(1000):
        assert ps.is_prime(n) == small.is_prime(n)
    for n in range(seg - 3, seg + 11):
        assert ps.is_prime(n) == is_prime(n)


def test_sieve_agrees_with_miller_rabin():
    ps = sieve(10**5)
    mask = ps.mask()
    for n in range(10**5 + 1):
        assert bool(mask[n]) == is_prime(n)


def test_sieve_contract_violations():
    ps = sieve(50)
    with pytest.raises(ValueError):
        ps.is_prime(51)
    with pytest.raises(ValueError):
        sieve(0)
    with pytest.raises(MemoryError):
        sieve(10**9, max_bytes=1000)


def test_sieve_cache_roundtrip(tmp_path):
    ps = sieve(12345)
    path = tmp_path / "p.psv"
    ps.save(path)
    loaded = PrimeSieve.load(path)
    assert loaded == ps
    raw = path.read_bytes()
    assert raw[:4] == b"PSV1"
    assert int.from_bytes(raw[4:12], "little") == 12345
    assert len(raw) == 12 + (12345 + 8) // 8


def test_sieve_cache_validation(tmp_path):
    bad = tmp_path / "bad.psv"
    bad.write_bytes(b"NOPE" + b"\x00" * 20)
    with pytest.raises(ValueError):
        PrimeSieve.load(bad)
    truncated = tmp_path / "short.psv"
    ps = sieve(1000)
    ps.save(truncated)
    truncated.write_bytes(truncated.read_bytes()[:-3])
    with pytest.raises(ValueError):
        PrimeSieve.load(truncated)


def test_greatest_prime_factor():
    assert greatest_prime_factor(1) == 1
    assert greatest_prime_factor(12) == 3
    assert greatest_prime_factor(2**10) == 2


def test_greatest_prime_factor_properties():
    for n in range(2, 10**5 + 1):
        g = greatest_prime_factor(n)
        facs = factorize(n)
        assert is_prime(g)
        assert n % g == 0
        assert g == max(p for p, _ in facs)


def test_factorize_examples():
    assert factorize(1) == []
    assert factorize(60) == [(2, 2), (3, 1), (5, 1)]
    assert factorize(121) == [(11, 2)]


def test_factorize_matches_naive():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randrange(1, 10**6)
        assert factorize(n) == naive_factorize(n)


def test_factorize_large_semiprime():
    p, q = 2**31 - 1, 2**31 - 19  # both prime
    assert factorize(p * q) == [(q, 1), (p, 1)]


def test_factorize_domain():
    with pytest.raises(ValueError):
        factorize(0)
    with pytest.raises(ValueError):
        factorize(1 << 63)


def test_smooth_set_composites():
    got = smooth_set(SmoothnessPolicy.composites(), 20)
    assert got.elements == (4, 6, 8, 9, 10, 12, 14, 15, 16, 18, 20)
    assert (got.window_lo, got.window_hi) == (1, 20)


def test_smooth_set_fixed():
    assert smooth_set(SmoothnessPolicy.fixed_bound(2), 40).elements == (1, 2, 4, 8, 16, 32)
    assert smooth_set(SmoothnessPolicy.fixed_bound(3), 20).elements == (1, 2, 3, 4, 6, 8, 9, 12, 16, 18)


def test_smooth_set_log_matches_pointwise():
    policy = SmoothnessPolicy.log_factor(1.5)
    bulk = set(smooth_set(policy, 300).elements)
    for n in range(1, 301):
        assert (n in bulk) == policy.is_smooth(n), n
    # the max(..., 2) floor keeps 1 and 2 smooth at any positive factor
    assert 1 in bulk and 2 in bulk


def test_one_handling_across_policies():
    # p+(1) = 1: excluded under the composites regime, included once y0 >= 1
    assert 1 not in smooth_set(SmoothnessPolicy.composites(), 10)
    assert 1 in smooth_set(SmoothnessPolicy.fixed_bound(1), 10).elements
    assert smooth_set(SmoothnessPolicy.fixed_bound(1), 10).elements == (1,)


def test_composites_partition():
    x = 3000
    smooth = set(smooth_set(SmoothnessPolicy.composites(), x))
    primes = set(naive_sieve(x))
    assert smooth | primes | {1} == set(range(1, x + 1))
    assert not (smooth & primes) and 1 not in smooth


def test_shifted_smooth_examples():
    assert shifted_smooth_set(SmoothnessPolicy.composites(), 20).elements == (5, 7, 9, 10, 11, 13, 15, 16, 17, 19)
    assert shifted_smooth_set(SmoothnessPolicy.fixed_bound(2), 10).elements == (2, 3, 5, 9)
    assert shifted_smooth_set(SmoothnessPolicy.fixed_bound(1), 2).elements == (2,)


def test_shifted_is_shift_of_smooth():
    for policy in (
        SmoothnessPolicy.composites(),
        SmoothnessPolicy.fixed_bound(5),
        SmoothnessPolicy.log_factor(2.0),
    ):
        for limit in (2, 17, 100, 257):
            base = smooth_set(policy, limit - 1)
            shifted = shifted_smooth_set(policy, limit)
            assert shifted.elements == tuple(m + 1 for m in base.elements)


def test_policy_validation():
    with pytest.raises(ValueError):
        SmoothnessPolicy.fixed_bound(0)
    with pytest.raises(ValueError):
        SmoothnessPolicy.log_factor(0)
    with pytest.raises(ValueError):
        SmoothnessPolicy("junk")
    with pytest.raises(ValueError):
        SmoothnessPolicy.composites().is_smooth(0)


def test_is_composite():
    assert not is_composite(0) and not is_composite(1) and not is_composite(2)
    assert is_composite(4) and is_composite(9) and not is_composite(97)
