"""Refined curve counts and the real invariant derived from them.

The refined count N of a degree is the sum, over all parametrized curves
through a generic boundary-moment constraint, of the product of quantum
integers [m_V] over their vertices. The theorem this package is built around
says that for a degree with s weight-2 ends obtained by pairing off 2s
primitive ends of an m-end primitive degree, the real refined invariant is

    R = (q^(1/2) - q^(-1/2))^(m-2-s)  / (q - q^(-1))^s        * N
      = (q^(1/2) - q^(-1/2))^(m-2-2s) / (q^(1/2) + q^(-1/2))^s * N

and both divisions are exact. Both forms are always computed and compared;
they differ by the factorization q - 1/q = (w - 1/w)(w + 1/w) in w = q^(1/2),
so a mismatch or a nonzero remainder can only mean an implementation bug.

Generic constraints are drawn from a fixed portable generator (SplitMix64)
so that every run of a given seed is reproducible down to the byte.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .errors import (DegenerateType, ExhaustedRetries, InvarianceViolation,
                     NonGenericMoments, TropicalError)
from .lattice import Degree, MomentVector, frac_str, split_even_ends
from .laurent import HalfLaurent, w_pow_minus_inverse
from .solver import TropicalSolution, solve
from .trees import enumerate_types

_MASK64 = (1 << 64) - 1

THREADS_ENV_VAR = "TROPICAL_REFINE_THREADS"


class SplitMix64:
    """Tiny portable 64-bit generator (public-domain mixing constants).

    Chosen because it is specified by ten lines of integer arithmetic, so the
    seeded moment recipe can be reproduced in any language.
    """

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)


def moment_from_draw(draw: int) -> Fraction:
    """One pseudorandom moment: numerator in [-1000, 1000], denominator in
    [1, 7], both taken from the same 64-bit draw."""
    return Fraction(draw % 2001 - 1000, 1 + draw % 7)


def _thread_cap() -> int:
    raw = os.environ.get(THREADS_ENV_VAR, "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _map_types(fn: Callable, items: Iterable) -> list:
    """Apply fn over combinatorial types, optionally on a capped thread pool.

    Results keep list order either way, so downstream sums are byte-stable.
    Exact-rational work holds the GIL, hence the default cap of 1.
    """
    cap = _thread_cap()
    items = list(items)
    if cap == 1 or len(items) < 2:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=cap) as pool:
        return list(pool.map(fn, items))


def refined_count(delta_s: Degree,
                  mu: MomentVector) -> tuple[HalfLaurent, list[TropicalSolution]]:
    """Sum of refined multiplicities over all curves through mu.

    Degenerate types are skipped (they never carry isolated solutions);
    NonGenericMoments propagates so callers can resample.
    """

    def attempt(ctype):
        try:
            return solve(ctype, mu)
        except DegenerateType:
            return None

    solutions = [s for s in _map_types(attempt, enumerate_types(delta_s)) if s]
    total = HalfLaurent(0)
    for sol in solutions:
        total = total + sol.refined_multiplicity()
    return total, solutions


def _position_signature(sol: TropicalSolution):
    return tuple(sorted(sol.positions().values()))


def random_generic_moments(delta_s: Degree, seed: int,
                           max_retries: int = 64) -> MomentVector:
    """Seeded generic moments for ends 2..n, rejection-sampled.

    A candidate is rejected when any type solves onto a wall (zero length)
    or two accepted curves coincide as point sets. Raises ExhaustedRetries
    after max_retries candidates.
    """
    stream = SplitMix64(seed)
    n = len(delta_s)
    for _ in range(max_retries):
        mu = MomentVector(tuple(moment_from_draw(stream.next_u64())
                                for _ in range(n - 1)))
        try:
            _, sols = refined_count(delta_s, mu)
        except NonGenericMoments:
            continue
        signatures = [_position_signature(s) for s in sols]
        if len(set(signatures)) != len(signatures):
            continue
        return mu
    raise ExhaustedRetries(
        f"no generic moments for seed {seed} in {max_retries} attempts")


def _ratio(value: HalfLaurent, num_base: HalfLaurent, num_exp: int,
           den_base: HalfLaurent, den_exp: int) -> HalfLaurent:
    """value * num_base^num_exp / den_base^den_exp with exact division;
    a negative num_exp moves that factor to the divisor."""
    den = den_base ** den_exp
    if num_exp >= 0:
        value = value * num_base ** num_exp
    else:
        den = den * num_base ** (-num_exp)
    return value.exact_div(den)


def r_from_n(n_trop: HalfLaurent, m: int, s: int) -> HalfLaurent:
    """Real refined invariant from the refined count, via both theorem forms.

    m is the number of ends of the primitive parent degree, s the number of
    weight-2 ends. NotDivisible here is fatal: it falsifies the theorem for
    the computed N, i.e. reveals a bug upstream.
    """
    w_minus = w_pow_minus_inverse(1)            # q^(1/2) - q^(-1/2)
    w_plus = HalfLaurent({1: 1, -1: 1})         # q^(1/2) + q^(-1/2)
    q_minus = w_pow_minus_inverse(2)            # q - q^(-1)
    form_a = _ratio(n_trop, w_minus, m - 2 - s, q_minus, s)
    form_b = _ratio(n_trop, w_minus, m - 2 - 2 * s, w_plus, s)
    if form_a != form_b:
        raise TropicalError(
            f"theorem forms disagree: {form_a} vs {form_b} (m={m}, s={s})")
    return form_b


def broccoli_from_r(r: HalfLaurent, m: int, s: int) -> HalfLaurent:
    """Broccoli-normalized invariant: R = BG * (w - 1/w)^(m-2-2s) / (q + 1/q)^s.

    For s = 0 this is the refined count itself. Consistency with r_from_n is
    checked through the identity BG * (w + 1/w)^s = N * (q + 1/q)^s, which
    the invariance audit asserts whenever it has N at hand.
    """
    w_minus = w_pow_minus_inverse(1)
    q_plus = HalfLaurent({2: 1, -2: 1})         # q + q^(-1)
    return _ratio(r, q_plus, s, w_minus, m - 2 - 2 * s)


@dataclass(frozen=True)
class TrialRecord:
    """One audited constraint: its seed, the drawn moments, and everything
    the solver produced for them. Kept whole so a hypothetical invariance
    failure can be diffed curve by curve."""

    seed: int
    moments: MomentVector
    solutions: tuple[TropicalSolution, ...]
    n_trop: HalfLaurent

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "moments": [frac_str(v) for v in self.moments.values],
            "solutionCount": len(self.solutions),
            "refinedCount": self.n_trop.to_json_pairs(),
        }


@dataclass(frozen=True)
class InvariantReport:
    """Outcome of an invariance audit over several seeded constraints."""

    delta: Degree
    delta_s: Degree
    s: int
    m: int
    trial_records: tuple[TrialRecord, ...]
    n_trop: HalfLaurent
    r_inv: HalfLaurent
    broccoli: HalfLaurent

    @property
    def trials(self) -> int:
        return len(self.trial_records)

    @property
    def seeds(self) -> tuple[int, ...]:
        return tuple(t.seed for t in self.trial_records)

    @property
    def solutions_per_trial(self) -> tuple[int, ...]:
        return tuple(len(t.solutions) for t in self.trial_records)

    def to_json(self) -> dict:
        return {
            "degree": self.delta_s.to_json(),
            "parentDegree": self.delta.to_json(),
            "s": self.s,
            "m": self.m,
            "trials": self.trials,
            "trialRecords": [t.to_json() for t in self.trial_records],
            "refinedCount": self.n_trop.to_json_pairs(),
            "refinedCountText": str(self.n_trop),
            "realInvariant": self.r_inv.to_json_pairs(),
            "realInvariantText": str(self.r_inv),
            "broccoli": self.broccoli.to_json_pairs(),
            "broccoliText": str(self.broccoli),
        }


def invariance_audit(delta_s: Degree, trials: int = 5,
                     seed: int = 2024) -> InvariantReport:
    """Recompute the refined count for several seeded generic constraints and
    insist the values agree; derive R and the Broccoli normalization once.

    Raises InvarianceViolation (a bug detector, not an input error) when two
    trials disagree.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    seed_stream = SplitMix64(seed)
    records: list[TrialRecord] = []
    for _ in range(trials):
        ts = seed_stream.next_u64()
        mu = random_generic_moments(delta_s, ts)
        n_t, sols = refined_count(delta_s, mu)
        records.append(TrialRecord(ts, mu, tuple(sols), n_t))
    first = records[0].n_trop
    for rec in records[1:]:
        if rec.n_trop != first:
            raise InvarianceViolation(
                f"trial with seed {records[0].seed} gave {first} but trial "
                f"with seed {rec.seed} gave {rec.n_trop}")
    delta, s = split_even_ends(delta_s)
    m = len(delta)
    r = r_from_n(first, m, s)
    bg = broccoli_from_r(r, m, s)
    q_plus = HalfLaurent({2: 1, -2: 1})
    w_plus = HalfLaurent({1: 1, -1: 1})
    if bg * w_plus ** s != first * q_plus ** s:
        raise TropicalError("Broccoli consistency identity failed")
    return InvariantReport(delta, delta_s, s, m, tuple(records), first, r, bg)
