"""Exhaustive desk-scale verification sweeps and conjecture probes.

Theorem targets report pass/fail with explicit counterexamples; conjecture
probes only ever report evidence.  Sweeps over set masks are vectorized
with numpy and may be partitioned across worker processes; aggregation is
commutative, so results are independent of the worker count.
"""

from __future__ import annotations

import concurrent.futures
import itertools
import os
import time
from dataclasses import dataclass, field

import numpy as np

from . import multiset, promotion
from .errors import PreconditionError
from .sets import FiniteSet, count_irreducible, interval
from .multiset import SetArray, setarray_divisor_count_formula

THEOREM_TARGETS = ("crlodd", "crleven", "L15", "bases")
CONJECTURE_TARGETS = ("odd2", "pi2")

_DEFAULTS = {
    "crlodd": {"max_k": 14, "promotion_max_k": 10},
    "crleven": {"max_k": 12},
    "L15": {"max_k": 12},
    "bases": {"max_k": 5, "formula_max_element": 5, "formula_heights": (2, 3)},
    "odd2": {"max_k": 14},
    "pi2": {"max_k": 14},
}


@dataclass
class VerificationReport:
    target: str
    range: dict
    status: str  # "pass" | "fail" | "evidence-only"
    counterexamples: list = field(default_factory=list)
    details: dict = field(default_factory=dict)
    elapsed: float = 0.0
    worker_count: int = 1

    def data_dict(self) -> dict:
        return {
            "target": self.target,
            "range": self.range,
            "status": self.status,
            "counterexamples": self.counterexamples,
            "details": self.details,
        }

    def to_dict(self) -> dict:
        # elapsed lives in the metadata section so the data section is
        # byte-stable across runs.
        return {
            "data": self.data_dict(),
            "meta": {
                "elapsed_seconds": self.elapsed,
                "worker_count": self.worker_count,
            },
        }


def default_workers() -> int:
    env = os.environ.get("SUMDIV_WORKERS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


# ---------------------------------------------------------------------------
# Vectorized divisor counting over bit masks.

def _zero_rooted_divisor_count(amask: int) -> int:
    """d(a) for a 0-rooted mask: candidates are its odd submasks."""
    pool = np.arange(1, 1 << amask.bit_length(), 2, dtype=np.int64)
    cands = pool[(pool & ~amask) == 0]
    prod = np.zeros_like(cands)
    for c in range(amask.bit_length()):
        sh = cands << c
        prod |= np.where((sh & ~amask) == 0, sh, 0)
    return int(np.count_nonzero(prod == amask))


def _direct_divisor_count(amask: int) -> int:
    """d(a) with NO reduction to the 0-rooted core: every nonzero mask
    within the bounding box is tested by deconvolution directly."""
    cands = np.arange(1, 1 << amask.bit_length(), dtype=np.int64)
    prod = np.zeros_like(cands)
    for c in range(amask.bit_length()):
        sh = cands << c
        prod |= np.where((sh & ~amask) == 0, sh, 0)
    return int(np.count_nonzero(prod == amask))


def _general_divisor_count(amask: int, core_counts: dict[int, int]) -> int:
    r = (amask & -amask).bit_length() - 1
    return (r + 1) * core_counts[amask >> r]


def _core_count_table(max_k: int) -> dict[int, int]:
    """d for every 0-rooted mask with max element <= max_k."""
    return {
        m: _zero_rooted_divisor_count(m)
        for m in range(1, 1 << (max_k + 1), 2)
    }


def _set_text(mask: int) -> str:
    return str(FiniteSet.from_mask(mask))


# ---------------------------------------------------------------------------
# Worker chunk functions (top-level for pickling).

def _crlodd_chunk(args: tuple) -> list:
    k, start, stop, limit, full_mask = args
    bad = []
    for mask in range(start | 1, stop, 2):
        d = _zero_rooted_divisor_count(mask)
        if d > limit or (d == limit and mask != full_mask):
            bad.append({"set": _set_text(mask), "d": d, "limit": limit})
    return bad


def _promotion_chunk(tasks: list) -> list:
    bad = []
    for k, mask in tasks:
        a = FiniteSet.from_mask(mask)
        if not promotion.verify_promotion_disjointness(a, k):
            bad.append({"set": str(a), "k": k, "issue": "promotion families"})
    return bad


def _l15_chunk(args: tuple) -> list:
    start, stop, max_k = args
    core_counts: dict[int, int] = {}
    bad = []
    for mask in range(max(start, 1), stop):
        r = (mask & -mask).bit_length() - 1
        core = mask >> r
        if core not in core_counts:
            core_counts[core] = _zero_rooted_divisor_count(core)
        expected = (r + 1) * core_counts[core]
        actual = _direct_divisor_count(mask)
        if actual != expected:
            bad.append(
                {"set": _set_text(mask), "d": actual, "formula": expected}
            )
    return bad


def _run_chunks(fn, chunk_args: list, workers: int) -> list:
    if workers <= 1 or len(chunk_args) <= 1:
        results = [fn(a) for a in chunk_args]
    else:
        with concurrent.futures.ProcessPoolExecutor(
            max_workers=min(workers, len(chunk_args))
        ) as ex:
            results = list(ex.map(fn, chunk_args))
    merged = []
    for r in results:
        merged.extend(r)
    return merged


def _ranges(total: int, pieces: int) -> list[tuple[int, int]]:
    pieces = max(1, min(pieces, total))
    step = -(-total // pieces)
    return [(i, min(i + step, total)) for i in range(0, total, step)]


# ---------------------------------------------------------------------------
# Theorem targets.

def run_crlodd(
    max_k: int = 14, promotion_max_k: int = 10, workers: int = 1
) -> VerificationReport:
    """[k] is the unique d-maximum among 0-rooted sets with max <= k,
    plus the promotion-family disjointness that underpins it."""
    full = interval(max_k).mask
    limit = _zero_rooted_divisor_count(full)
    top = 1 << (max_k + 1)
    chunk_args = [
        (max_k, lo, hi, limit, full)
        for lo, hi in _ranges(top, workers * 4)
    ]
    bad = _run_chunks(_crlodd_chunk, chunk_args, workers)

    tasks = [
        (k, mask)
        for k in range(1, promotion_max_k + 1)
        for mask in range(1, 1 << (k + 1), 2)
    ]
    n_chunks = max(1, workers * 4)
    step = -(-len(tasks) // n_chunks)
    task_chunks = [tasks[i : i + step] for i in range(0, len(tasks), step)]
    bad.extend(_run_chunks(_promotion_chunk, task_chunks, workers))

    bad.sort(key=lambda c: (c.get("k", -1), c["set"]))
    return VerificationReport(
        target="crlodd",
        range={"max_k": max_k, "promotion_max_k": promotion_max_k},
        status="pass" if not bad else "fail",
        counterexamples=bad,
        details={"d_full_interval": limit},
        worker_count=workers,
    )


def run_crleven(max_k: int = 12, workers: int = 1) -> VerificationReport:
    """[k+] = {1,...,k} is the d-maximum over all nonempty subsets of [k],
    unique except the documented ties at k = 1 and k = 3."""
    core_counts = _core_count_table(max_k)
    bad = []
    ties_seen = {}
    for k in range(1, max_k + 1):
        best = -1
        argmax: list[int] = []
        for mask in range(1, 1 << (k + 1)):
            d = _general_divisor_count(mask, core_counts)
            if d > best:
                best, argmax = d, [mask]
            elif d == best:
                argmax.append(mask)
        kplus = (1 << (k + 1)) - 2
        allowed = {kplus}
        if k == 1:
            allowed.add(0b11)          # [1] ties with [1+]
        elif k == 3:
            allowed.add(0b1100)        # {2, 3} ties with [3+]
        if kplus not in argmax or set(argmax) != allowed:
            bad.append(
                {
                    "k": k,
                    "max_d": best,
                    "maximizers": sorted(_set_text(m) for m in argmax),
                }
            )
        if len(argmax) > 1:
            ties_seen[k] = sorted(_set_text(m) for m in argmax)
    return VerificationReport(
        target="crleven",
        range={"max_k": max_k},
        status="pass" if not bad else "fail",
        counterexamples=bad,
        details={"ties": ties_seen},
        worker_count=workers,
    )


def run_l15(max_k: int = 12, workers: int = 1) -> VerificationReport:
    """d(A) = (min(A)+1) d(A - {min A}) for every nonempty A within [max_k],
    checked against direct divisor counting without the reduction."""
    top = 1 << (max_k + 1)
    chunk_args = [(lo, hi, max_k) for lo, hi in _ranges(top, workers * 4)]
    bad = _run_chunks(_l15_chunk, chunk_args, workers)
    bad.sort(key=lambda c: c["set"])
    return VerificationReport(
        target="L15",
        range={"max_k": max_k},
        status="pass" if not bad else "fail",
        counterexamples=bad,
        worker_count=workers,
    )


def _chain_masks(mults: tuple[int, ...], height: int) -> tuple[int, ...]:
    return tuple(
        sum(1 << e for e, m in enumerate(mults) if m >= i)
        for i in range(1, height + 1)
    )


def _multiset_d(mults: tuple[int, ...], height: int) -> int:
    xmasks = _chain_masks(mults, height)
    count = 0
    for cand in itertools.product(range(height + 1), repeat=len(mults)):
        if not any(cand):
            continue
        if multiset._divides_masks(xmasks, _chain_masks(cand, height)):
            count += 1
    return count


def run_bases(
    max_k: int = 5,
    formula_max_element: int = 5,
    formula_heights: tuple[int, ...] = (2, 3),
    workers: int = 1,
) -> VerificationReport:
    """Height-2 multisets have their unique d-maximum at ([k], {}), and the
    chain-count formula matches brute-force set-array enumeration."""
    bad = []

    # Exhaustive maximum over multiplicity-<=2 multisets with elements <= k.
    height = 2
    d_by_mults: dict[tuple[int, ...], int] = {}
    for mults in itertools.product(range(height + 1), repeat=max_k + 1):
        if not any(mults):
            continue
        d_by_mults[mults] = _multiset_d(mults, height)
    for k in range(1, max_k + 1):
        target_mults = tuple(1 for _ in range(k + 1))
        target_d = setarray_divisor_count_formula(interval(k), height)
        if d_by_mults[target_mults + (0,) * (max_k - k)] != target_d:
            bad.append({"k": k, "issue": "formula mismatch at [k]_2"})
        for mults, d in d_by_mults.items():
            if any(m for e, m in enumerate(mults) if e > k):
                continue
            if mults == target_mults + (0,) * (max_k - k):
                continue
            if d >= target_d:
                bad.append(
                    {
                        "k": k,
                        "multiset": {e: m for e, m in enumerate(mults) if m},
                        "d": d,
                        "d_max": target_d,
                    }
                )

    # Formula vs brute-force oracle on plain-set arrays.
    for b in formula_heights:
        for mask in range(1, 1 << (formula_max_element + 1), 2):
            a = FiniteSet.from_mask(mask)
            arr = SetArray((a,) + (multiset.EMPTY,) * (b - 1))
            oracle = len(
                multiset.setarray_divisors(
                    arr, max_height=max(b, 3), max_element=formula_max_element
                )
            )
            formula = setarray_divisor_count_formula(a, b)
            if oracle != formula:
                bad.append(
                    {
                        "set": str(a),
                        "height": b,
                        "oracle": oracle,
                        "formula": formula,
                    }
                )

    return VerificationReport(
        target="bases",
        range={
            "max_k": max_k,
            "formula_max_element": formula_max_element,
            "formula_heights": list(formula_heights),
        },
        status="pass" if not bad else "fail",
        counterexamples=bad,
        worker_count=workers,
    )


# ---------------------------------------------------------------------------
# Conjecture probes (evidence-only).

def run_odd2(max_k: int = 14, workers: int = 1) -> VerificationReport:
    """Where does the second-largest d_2 among odd k-digit binary numbers
    occur?  The conjecture says 2^k - 3 for k >= 3, k != 5."""
    rows = []
    for k in range(3, max_k + 1):
        lowtop = 1 | (1 << (k - 1))
        values: dict[int, int] = {}
        for mid in range(0, 1 << max(k - 2, 0)):
            mask = lowtop | (mid << 1)
            values[mask] = _zero_rooted_divisor_count(mask)
        best = max(values.values())
        second = max((v for v in values.values() if v < best), default=None)
        locations = sorted(m for m, v in values.items() if v == second)
        predicted = (1 << k) - 3
        rows.append(
            {
                "k": k,
                "largest_d": best,
                "second_d": second,
                "second_locations": [
                    {"n": m, "set": _set_text(m)} for m in locations
                ],
                "predicted_n": predicted,
                "predicted_hit": predicted in locations,
                "covered_by_conjecture": k != 5,
            }
        )
    return VerificationReport(
        target="odd2",
        range={"max_k": max_k},
        status="evidence-only",
        details={"rows": rows},
        worker_count=workers,
    )


def run_pi2(max_k: int = 14, workers: int = 1) -> VerificationReport:
    """Irreducible-set counts against the conjectured prime density.

    count(k) is the number of irreducible A with max(A) = k and |A| >= 2
    (binary numbers with k+1 digits); the asymptotic prediction for that
    digit count is 2^(k-1)."""
    rows = []
    for k in range(1, max_k + 1):
        count = count_irreducible(k)
        predicted = 1 << (k - 1)
        rows.append(
            {
                "k": k,
                "digits": k + 1,
                "irreducible": count,
                "predicted": predicted,
                "ratio": count / predicted,
            }
        )
    return VerificationReport(
        target="pi2",
        range={"max_k": max_k},
        status="evidence-only",
        details={"rows": rows},
        worker_count=workers,
    )


_RUNNERS = {
    "crlodd": run_crlodd,
    "crleven": run_crleven,
    "L15": run_l15,
    "bases": run_bases,
    "odd2": run_odd2,
    "pi2": run_pi2,
}


def run_target(name: str, workers: int | None = None, **params) -> VerificationReport:
    """Run one verification target by name, timing it."""
    if name not in _RUNNERS:
        known = ", ".join(sorted(_RUNNERS))
        raise PreconditionError(f"unknown target {name!r}; known: {known}")
    if workers is None:
        workers = default_workers()
    kwargs = dict(_DEFAULTS[name])
    for key, value in params.items():
        if value is None:
            continue
        if key not in kwargs:
            raise PreconditionError(
                f"target {name!r} does not take parameter {key!r}"
            )
        kwargs[key] = value
    start = time.perf_counter()
    report = _RUNNERS[name](workers=workers, **kwargs)
    report.elapsed = time.perf_counter() - start
    report.worker_count = workers
    return report
