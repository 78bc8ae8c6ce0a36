"""Verification sweeps behind the verify command and the acceptance tests.

Each check replays one of the package's headline guarantees over a
bounded search space and reports a pass/fail result with the first
counterexample found, if any.  All randomness is seeded, and parallel
runs chunk the work deterministically so the aggregated outcome never
depends on scheduling.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import gcd

from .lens import Classification, LensSpace, division_window, invariants, modular_partner
from .obstructions import certify_nonprimitive
from .primitivity import enumerate_primitives, is_primitive, is_primitive_power, oz_form_check
from .shell_bridge import find_bridge, shell_words
from .words import CyclicWord

DEFAULT_SEED = 20260816


@dataclass
class CheckResult:
    name: str
    passed: bool
    checked: int
    elapsed: float
    detail: str = ""
    counterexample: dict | None = None

    def to_json(self) -> dict:
        out: dict = {
            "name": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "elapsed": round(self.elapsed, 3),
        }
        if self.detail:
            out["detail"] = self.detail
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


def _is_least_rotation(s: list[int]) -> bool:
    # Assumes no letter of s is smaller than s[0].
    n = len(s)
    c0 = s[0]
    for i in range(1, n):
        if s[i] > c0:
            continue
        for k in range(1, n):
            j = i + k
            a = s[j - n] if j >= n else s[j]
            b = s[k]
            if a != b:
                if a < b:
                    return False
                break
        else:
            continue
    return True


def canonical_classes(n: int, prefix: tuple[int, ...] = ()):
    """Canonical letter tuples of every cyclic class of exact length n.

    Enumerates cyclically reduced strings with a minimal first letter
    and keeps the lexicographically least rotations, so each conjugacy
    class appears exactly once.  A nonempty prefix restricts the output
    to words starting with it, which is how parallel runs split the
    space; prefixes must themselves be reduced with minimal first
    letter, and every letter must be >= prefix[0].
    """
    if n <= 0:
        if n == 0 and len(prefix) == 0:
            yield ()
        return
    if len(prefix) > n:
        return
    if n == 1:
        if prefix:
            yield prefix
        else:
            yield from ((c,) for c in range(4))
        return
    firsts = (prefix[0],) if prefix else tuple(range(4))
    buf = [0] * n
    for c0 in firsts:
        buf[: len(prefix)] = prefix
        buf[0] = c0
        yield from _extend(buf, max(len(prefix), 1), n, c0)


def _extend(buf: list[int], i: int, n: int, c0: int):
    banned = buf[i - 1] ^ 1
    if i == n - 1:
        wrap_banned = c0 ^ 1
        for c in range(c0, 4):
            if c != banned and c != wrap_banned:
                buf[i] = c
                if _is_least_rotation(buf):
                    yield tuple(buf)
        return
    for c in range(c0, 4):
        if c != banned:
            buf[i] = c
            yield from _extend(buf, i + 1, n, c0)


def _exhaustive_chunks(max_len: int) -> list[tuple[int, tuple[int, ...]]]:
    chunks: list[tuple[int, tuple[int, ...]]] = []
    for n in range(1, max_len + 1):
        if n < 10:
            chunks.append((n, ()))
            continue
        for c0 in range(4):
            for c1 in range(c0, 4):
                if c1 != c0 ^ 1:
                    chunks.append((n, (c0, c1)))
    return chunks


def _soundness_exhaustive_chunk(args: tuple[int, tuple[int, ...]]):
    n, prefix = args
    checked = 0
    for letters in canonical_classes(n, prefix):
        checked += 1
        cw = CyclicWord(letters)
        obstruction = certify_nonprimitive(cw)
        if obstruction is None:
            continue
        if is_primitive_power(cw).is_primitive_power:
            return checked, {
                "word": str(cw),
                "rule": obstruction.rule.value,
                "witness": [list(part) for part in obstruction.witness],
                "oracle": "primitive power",
            }
    return checked, None


def _random_letters(rng: random.Random, max_len: int) -> tuple[int, ...]:
    length = rng.randint(1, max_len)
    letters = [rng.randrange(4)]
    for _ in range(length - 1):
        step = rng.randrange(3)
        banned = letters[-1] ^ 1
        candidate = step if step < banned else step + 1
        letters.append(candidate)
    while len(letters) >= 2 and letters[0] == letters[-1] ^ 1:
        letters.pop()
        letters.pop(0)
    return tuple(letters)


def _soundness_random_chunk(args: tuple[int, int, int]):
    seed, count, max_len = args
    rng = random.Random(seed)
    checked = 0
    for _ in range(count):
        cw = CyclicWord(_random_letters(rng, max_len))
        checked += 1
        obstruction = certify_nonprimitive(cw)
        if obstruction is None:
            continue
        if is_primitive_power(cw).is_primitive_power:
            return checked, {
                "word": str(cw),
                "rule": obstruction.rule.value,
                "witness": [list(part) for part in obstruction.witness],
                "oracle": "primitive power",
            }
    return checked, None


def _run_chunks(worker, chunks, workers: int):
    checked = 0
    counterexample = None
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(worker, chunks))
    else:
        results = [worker(chunk) for chunk in chunks]
    for count, bad in results:
        checked += count
        if bad is not None and counterexample is None:
            counterexample = bad
    return checked, counterexample


def check_obstruction_soundness(
    exhaustive_len: int = 14,
    samples: int = 100_000,
    random_len: int = 20,
    seed: int = DEFAULT_SEED,
    workers: int = 1,
) -> CheckResult:
    """Certificates of non-primitivity never contradict the oracle."""
    start = time.perf_counter()
    checked, bad = _run_chunks(
        _soundness_exhaustive_chunk, _exhaustive_chunks(exhaustive_len), workers
    )
    if bad is None and samples > 0:
        batch = 5000
        chunks = [
            (seed + i, min(batch, samples - i * batch), random_len)
            for i in range((samples + batch - 1) // batch)
        ]
        more, bad = _run_chunks(_soundness_random_chunk, chunks, workers)
        checked += more
    return CheckResult(
        name="obstruction-soundness",
        passed=bad is None,
        checked=checked,
        elapsed=time.perf_counter() - start,
        detail=f"exhaustive length <= {exhaustive_len} plus {samples} samples <= {random_len}",
        counterexample=bad,
    )


def check_shell_primitivity(max_p: int = 50) -> CheckResult:
    """Oracle-primitive shell indices match {1, q', p - q', p - 1}."""
    start = time.perf_counter()
    checked = 0
    for p in range(2, max_p + 1):
        for qbar in range(2, p // 2 + 1):
            if gcd(p, qbar) != 1:
                continue
            shell = shell_words(p, qbar)
            actual = {
                k for k in range(p + 1) if is_primitive(shell.word(k)).is_primitive
            }
            partner = modular_partner(p, qbar)
            expected = {1, partner, p - partner, p - 1}
            checked += 1
            if actual != expected:
                return CheckResult(
                    name="shell-primitivity",
                    passed=False,
                    checked=checked,
                    elapsed=time.perf_counter() - start,
                    counterexample={
                        "p": p,
                        "qbar": qbar,
                        "expected": sorted(expected),
                        "actual": sorted(actual),
                    },
                )
    return CheckResult(
        name="shell-primitivity",
        passed=True,
        checked=checked,
        elapsed=time.perf_counter() - start,
        detail=f"all coprime shells with p <= {max_p}",
    )


def check_oz_necessity(max_len: int = 16) -> CheckResult:
    """Every primitive class passes the two-block shape test."""
    start = time.perf_counter()
    checked = 0
    for cw in sorted(enumerate_primitives(max_len), key=lambda c: (c.length, c.letters)):
        checked += 1
        if not oz_form_check(cw):
            return CheckResult(
                name="oz-necessity",
                passed=False,
                checked=checked,
                elapsed=time.perf_counter() - start,
                counterexample={"word": str(cw)},
            )
    return CheckResult(
        name="oz-necessity",
        passed=True,
        checked=checked,
        elapsed=time.perf_counter() - start,
        detail=f"primitive classes of length <= {max_len}",
    )


def check_bridges(max_p: int = 60, max_depth: int = 64) -> CheckResult:
    """Bridges exist, are minimal corridors, and join distinct classes."""
    start = time.perf_counter()
    checked = 0
    for p in range(2, max_p + 1):
        for q in range(1, p // 2 + 1):
            if gcd(p, q) != 1:
                continue
            space = LensSpace(p, q)
            inv = invariants(space)
            if inv.classification is not Classification.Forest:
                continue
            for qbar in sorted({space.q, inv.q_prime}):
                window = division_window(p, qbar)
                if window is None:
                    continue
                checked += 1
                bad = _examine_bridge(space, qbar, window, max_depth)
                if bad is not None:
                    return CheckResult(
                        name="bridge-validity",
                        passed=False,
                        checked=checked,
                        elapsed=time.perf_counter() - start,
                        counterexample=bad,
                    )
    return CheckResult(
        name="bridge-validity",
        passed=True,
        checked=checked,
        elapsed=time.perf_counter() - start,
        detail=f"forest spaces with p <= {max_p}, both window types",
    )


def _examine_bridge(space, qbar, window, max_depth):
    from .shell_bridge import PrincipalVertex, bridge_end_homology, principal_vertex

    def report(reason: str, bridge=None) -> dict:
        out = {"p": space.p, "q": space.q, "qbar": qbar, "reason": reason}
        if bridge is not None:
            out["w"] = bridge.w
        return out

    m, r = window
    try:
        bridge = find_bridge(space, qbar, max_depth=max_depth)
    except Exception as exc:
        return report(f"search failed: {exc}")
    if bridge.n_exp not in (qbar - 1, qbar + 1):
        return report("end exponent out of range", bridge)
    if not is_primitive(bridge.d_word).is_primitive:
        return report("end word not primitive", bridge)
    if bridge.simplex_count != len(bridge.w) + 2:
        return report("simplex count mismatch", bridge)
    interior = [
        PrincipalVertex(qbar, "", m - 1, qbar + r).word(),
        PrincipalVertex(qbar, "", m, r).word(),
    ]
    interior.extend(
        principal_vertex(space.p, qbar, m, r, bridge.w[:i]).word()
        for i in range(len(bridge.w))
    )
    for word in interior:
        if is_primitive(word).is_primitive:
            return report(f"interior word {word} is primitive", bridge)
    ends = bridge_end_homology(bridge)
    if ends[0] == ends[1]:
        return report("end homology classes coincide", bridge)
    return None


def check_classification(max_p: int = 200) -> CheckResult:
    """The residue, window, and partner views of the case split agree."""
    start = time.perf_counter()
    checked = 0
    for p in range(2, max_p + 1):
        for q in range(1, p // 2 + 1):
            if gcd(p, q) != 1:
                continue
            checked += 1
            pm1_q = q == 1 or p % q in (1, q - 1)
            window_empty = division_window(p, q) is None
            partner = modular_partner(p, q)
            pm1_partner = partner == 1 or p % partner in (1, partner - 1)
            forest = (
                invariants(LensSpace(p, q)).classification is Classification.Forest
            )
            if not (pm1_q == window_empty == pm1_partner == (not forest)):
                return CheckResult(
                    name="classification-equivalence",
                    passed=False,
                    checked=checked,
                    elapsed=time.perf_counter() - start,
                    counterexample={
                        "p": p,
                        "q": q,
                        "qPrime": partner,
                        "pm1ModQ": pm1_q,
                        "windowEmpty": window_empty,
                        "pm1ModQPrime": pm1_partner,
                        "forest": forest,
                    },
                )
    return CheckResult(
        name="classification-equivalence",
        passed=True,
        checked=checked,
        elapsed=time.perf_counter() - start,
        detail=f"all coprime (p,q) with p <= {max_p}",
    )


def run_all(
    max_p: int = 60,
    exhaustive_len: int = 14,
    samples: int = 100_000,
    random_len: int = 20,
    oz_len: int = 16,
    classification_p: int = 200,
    seed: int = DEFAULT_SEED,
    workers: int = 1,
    max_depth: int = 64,
    inject_failure: bool = False,
) -> list[CheckResult]:
    """Run every suite; order is fixed so reports are comparable."""
    results = [
        check_shell_primitivity(max_p=min(max_p, 50)),
        check_obstruction_soundness(
            exhaustive_len=exhaustive_len,
            samples=samples,
            random_len=random_len,
            seed=seed,
            workers=workers,
        ),
        check_oz_necessity(max_len=oz_len),
        check_bridges(max_p=max_p, max_depth=max_depth),
        check_classification(max_p=classification_p),
    ]
    if inject_failure:
        results.append(
            CheckResult(
                name="injected-failure",
                passed=False,
                checked=1,
                elapsed=0.0,
                detail="synthetic failure for exercising the failure path",
                counterexample={"word": "x^2y^2", "reason": "injected"},
            )
        )
    return results
