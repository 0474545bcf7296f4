"""Exit criteria.  Each test is one criterion; a summary line per criterion
is printed at the end of the run (see conftest.py)."""
import itertools
import math
import random
import subprocess
import sys
import time

import pytest

from chromaloc.core import INF
from chromaloc.expr import evaluate
from chromaloc.lattice import (
    IDENTITY,
    P_IDENTITY,
    P_ZERO,
    RATIONALISATION,
    ZERO,
    GlobalFiniteLoc,
    g_compose,
    g_join,
    g_leq,
    g_meet,
    is_compactly_central,
    lift_to_global,
    lnf,
    p_localisation,
    pl_compose,
)
from chromaloc.nilpotent import (
    TruncParams,
    binomial_difference_fast,
    binomial_difference_oracle,
    termwise_check,
    verify_nilp_diff,
)
from chromaloc.padic import (
    carries_in_addition,
    nu_binom,
    nu_binom_power,
    nu_factorial,
    nu_factorial_oracle,
    valuation_sweep,
)
from chromaloc.profile import (
    FieldVector,
    induced_localisation,
    profile_tensor,
    type_profile,
    vector_central_bruteforce,
    vector_central_predict,
)


def test_criterion_1_valuation_suite(record_property):
    record_property("criterion", "1 valuation suite: Legendre, carries, factorial difference (n <= 10^4, < 10 s)")
    start = time.perf_counter()
    for p in (2, 3, 5, 7):
        for n in range(10**4 + 1):
            assert nu_factorial(n, p) == nu_factorial_oracle(n, p)
        # Every 0 <= k <= n <= 10^4 through the sweep kernel.
        result = valuation_sweep(p, 10**4)
        assert result.ok, result.first_mismatch
        assert result.pairs_checked == 10001 * 10002 // 2
        # The public per-call functions on a slice of the same triangle.
        for n in range(0, 10**4 + 1, 101):
            for k in range(0, n + 1, 29):
                nu = nu_binom(n, k, p)
                assert nu == carries_in_addition(k, n - k, p)
                assert nu == nu_factorial(n, p) - nu_factorial(k, p) - nu_factorial(n - k, p)
    elapsed = time.perf_counter() - start
    print(f"criterion 1 runtime {elapsed:.2f}s")
    assert elapsed < 10


def test_criterion_2_power_binomial_valuation(record_property):
    record_property("criterion", "2 nu_p C(p^n, m p^(n-k)) = k on p in {2,3,5}, n <= 6, exact")
    checked = factored = 0
    for p in (2, 3, 5):
        for n in range(7):
            for k in range(n + 1):
                for m in range(1, p**k):
                    if m % p == 0:
                        continue
                    assert nu_binom_power(n, k, m, p) == k
                    checked += 1
                    if p**n <= 729:
                        c = math.comb(p**n, m * p ** (n - k))
                        v = 0
                        while c % p == 0:
                            c //= p
                            v += 1
                        assert v == k
                        factored += 1
    print(f"criterion 2 cases={checked} factored={factored}")
    assert checked > 0 and factored > 0


def test_criterion_3_nilpotent_difference(record_property):
    record_property("criterion", "3 (y+eps)^(p^n) = y^(p^n) for n >= j+k; termwise and oracle agreement (< 30 s)")
    start = time.perf_counter()
    cells = oracle_checks = 0
    for p, j, k in itertools.product((2, 3, 5), (1, 2, 3), (0, 1, 2, 3)):
        params = TruncParams(p, j, k)
        for n in range(j + k + 3):
            zero = verify_nilp_diff(p, j, k, n)
            assert termwise_check(p, j, k, n) == zero
            if n >= j + k:
                assert zero
            if p**n <= 64:
                assert binomial_difference_fast(params, n) == binomial_difference_oracle(params, n)
                oracle_checks += 1
            cells += 1
    elapsed = time.perf_counter() - start
    print(f"criterion 3 cells={cells} oracle_checks={oracle_checks} runtime {elapsed:.2f}s")
    assert elapsed < 30


def test_criterion_4_centrality_dichotomy(record_property):
    record_property("criterion", "4 brute-force vs predicted centrality over F_2, F_3, dim 0..3, exact")
    count = 0
    for p in (2, 3):
        for d in range(4):
            for entries in itertools.product(range(p), repeat=d):
                v = FieldVector(p, entries)
                assert vector_central_bruteforce(v) == vector_central_predict(v)
                count += 1
    print(f"criterion 4 vectors={count}")
    assert count == sum(2**d + 3**d for d in range(4))


def test_criterion_5_induced_localisation(record_property):
    record_property("criterion", "5 type m -> L_(m-1)^f, 0 -> Zero, inf -> id; induced(a (x) b) = compose")
    assert induced_localisation(type_profile(0)) == P_ZERO
    assert induced_localisation(type_profile(INF)) == P_IDENTITY
    for m in range(1, 21):
        assert induced_localisation(type_profile(m)) == lnf(m - 1)
    types = list(range(11)) + [INF]
    for m1, m2 in itertools.product(types, repeat=2):
        a, b = type_profile(m1), type_profile(m2)
        assert induced_localisation(profile_tensor(a, b)) == pl_compose(
            induced_localisation(a), induced_localisation(b)
        )


def _random_loc(rng, pool, heights):
    if rng.random() < 0.05:
        return ZERO
    exceptions = {p: rng.choice(heights) for p in rng.sample(pool, rng.randint(0, len(pool)))}
    return GlobalFiniteLoc(rng.choice(heights), exceptions)


def test_criterion_6_compactly_central_and_lattice(record_property):
    record_property("criterion", "6 compact centrality classification, ploc(2)*ploc(3) = rat, lattice laws on 10^4 values (< 10 s)")
    start = time.perf_counter()
    primes = [p for p in range(2, 200) if all(p % d for d in range(2, p))]
    assert not is_compactly_central(RATIONALISATION)
    assert all(not is_compactly_central(p_localisation(p)) for p in primes)
    assert is_compactly_central(IDENTITY)
    assert is_compactly_central(ZERO)
    assert g_compose(p_localisation(2), p_localisation(3)) == RATIONALISATION
    assert evaluate("ploc(2) * ploc(3)") == RATIONALISATION

    rng = random.Random(20261019)
    heights = [0, 1, 2, 3, 4, 7, INF]
    for _ in range(2000):
        lifts = [
            lift_to_global(p, lnf(rng.choice(heights)))
            for p in rng.sample(primes, rng.randint(1, 6))
        ]
        meet = lifts[0]
        for F in lifts[1:]:
            meet = g_meet(meet, F)
        assert is_compactly_central(meet)

    pool = primes[:8]
    for _ in range(10**4):
        F, G, H = (_random_loc(rng, pool, heights) for _ in range(3))
        assert g_meet(F, g_join(F, G)) == F
        assert g_join(F, g_meet(F, G)) == F
        assert g_meet(F, g_join(G, H)) == g_join(g_meet(F, G), g_meet(F, H))
        assert g_join(F, g_meet(G, H)) == g_meet(g_join(F, G), g_join(F, H))
        assert g_leq(F, G) == (g_meet(F, G) == F) == (g_join(F, G) == G)
    elapsed = time.perf_counter() - start
    print(f"criterion 6 runtime {elapsed:.2f}s")
    assert elapsed < 10


@pytest.mark.parametrize(
    "argv,stdout,code",
    [
        (["lattice", "cc", "rat"], b"cc=false\n", 1),
        (["profile", "loc", "II/Z"], b"type=2 loc=LnF(1)\n", 0),
        (["nilp", "verify", "-p", "2", "-j", "1", "-k", "1", "-n", "2"], b"zero=true bound_met=true\n", 0),
    ],
    ids=["lattice-cc", "profile-loc", "nilp-verify"],
)
def test_criterion_7_cli_conformance(record_property, argv, stdout, code):
    record_property("criterion", f"7 CLI conformance: {' '.join(argv)}")
    proc = subprocess.run([sys.executable, "-m", "chromaloc", *argv], capture_output=True)
    assert proc.stdout == stdout
    assert proc.returncode == code
