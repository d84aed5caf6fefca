"""The acceptance suite: one callable per criterion, exact everywhere.

Each criterion function measures its own runtime, returns a structured
result, and is shared verbatim between the pytest suite and the CLI
``selftest`` command.  Heavy artifacts (the per-group catalogs) are cached
at module level, so running the suite in order computes each catalog once.

All comparisons are exact; there are no tolerances anywhere.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .charring import (
    BraidedAction,
    ClassFunction,
    adams_twisted,
    cyclic_operation_char,
    exterior_power_char,
    lambda_from_adams,
    linear_character_reps,
    regular_rep,
    sigma_from_lambda,
    verify_lambda_ring,
    _lambda_sequence,
)
from .classify import Catalog, enumerate_qt, enumerate_triangular
from .cyclotomic import CycScalar, root_of_unity
from .groups import bundled_group
from .hopf import GATensor
from .rmatrix import (
    alpha_map,
    koszul_twist,
    markov_element_flipped,
    minimal_support,
    verify_markov_equation,
)

CATALOG_GROUPS = ("Z2", "Z3", "Z4", "Z2xZ2", "S3", "D4", "Q8")
REGULAR_REP_GROUPS = ("Z2", "Z4", "Z2xZ2")


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    details: str
    seconds: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"criterion {self.number:2d} [{status}] {self.name} ({self.seconds:.2f}s): {self.details}"


@lru_cache(maxsize=None)
def qt_catalog(name: str) -> Catalog:
    return enumerate_qt(bundled_group(name))


@lru_cache(maxsize=None)
def triangular_catalog(name: str) -> Catalog:
    return enumerate_triangular(bundled_group(name))


@lru_cache(maxsize=None)
def _test_reps(name: str) -> tuple:
    group = bundled_group(name)
    reps = list(linear_character_reps(group))
    if name in REGULAR_REP_GROUPS:
        reps.append(regular_rep(group))
    return tuple(reps)


def _golden_koszul(group) -> GATensor:
    half = Fraction(1, 2)
    return GATensor(
        group, 2, {(0, 0): half, (0, 1): half, (1, 0): half, (1, 1): -half}
    )


def criterion_1() -> CriterionResult:
    """The sign-braided structure on k[Z/2] appears bit-exactly."""
    start = time.perf_counter()
    group = bundled_group("Z2")
    catalog = enumerate_triangular(group)
    golden = _golden_koszul(group)
    hits = [r for r in catalog.rmats if r == golden]
    bit_exact = any(
        r.canonical_key() == golden.canonical_key() for r in catalog.rmats
    )
    elapsed = time.perf_counter() - start
    passed = len(hits) >= 1 and bit_exact and elapsed < 1.0
    details = (
        f"triangular catalog of Z2 has {len(catalog)} entries, "
        f"{len(hits)} equal to the golden half-sum element (bit-exact: {bit_exact}), "
        f"runtime {elapsed:.3f}s < 1s"
    )
    return CriterionResult(1, "Koszul golden value on Z2", passed, details, elapsed)


def criterion_2() -> CriterionResult:
    """Every enumerated datum builds an element passing the full verifier."""
    start = time.perf_counter()
    total = 0
    failures = []
    for name in CATALOG_GROUPS:
        catalog = qt_catalog(name)
        total += len(catalog)
        for idx, report in enumerate(catalog.reports):
            if not report.all_passed:
                failures.append((name, idx, [c.name for c in report.failed()]))
    elapsed = time.perf_counter() - start
    passed = not failures and elapsed < 120.0
    details = (
        f"{total} data over {len(CATALOG_GROUPS)} groups, "
        f"{len(failures)} verification failures, runtime {elapsed:.1f}s < 120s"
    )
    if failures:
        details += f"; first failure: {failures[0]}"
    return CriterionResult(2, "soundness sweep over the catalog", passed, details, elapsed)


def criterion_3() -> CriterionResult:
    """Literal check: the built element is unitary exactly when the datum is flagged.

    The flag is i = j with skewsymmetric form, per the datum invariant.  The
    result also reports the two one-sided refinements so a failure is fully
    diagnosed: flagged data must build unitary elements, and a dedup class
    is unitary exactly when it contains a flagged datum.
    """
    start = time.perf_counter()
    counterexample = None
    flagged_implies_unitary = True
    class_equivalence = True
    checked = 0
    for name in CATALOG_GROUPS:
        catalog = qt_catalog(name)
        for idx, datum in enumerate(catalog.data):
            checked += 1
            unitary = catalog.unitary[idx]
            if datum.triangular and not unitary:
                flagged_implies_unitary = False
            if unitary != datum.triangular and counterexample is None:
                counterexample = (name, idx, datum, unitary)
        for members in catalog.dedup:
            unitary = catalog.unitary[members[0]]
            has_flagged = any(catalog.data[i].triangular for i in members)
            if unitary != has_flagged:
                class_equivalence = False
    elapsed = time.perf_counter() - start
    passed = counterexample is None
    if passed:
        details = f"unitarity equals the triangular flag on all {checked} data"
    else:
        name, idx, datum, unitary = counterexample
        details = (
            f"fails on raw data: {name}[{idx}] {datum} builds a unitary element "
            f"({unitary}) while flagged triangular={datum.triangular}; "
            f"refinements: flagged=>unitary holds: {flagged_implies_unitary}, "
            f"dedup class unitary iff it contains a flagged datum: {class_equivalence}"
        )
    return CriterionResult(
        3, "triangular flag matches unitarity per datum", passed, details, elapsed
    )


def criterion_4() -> CriterionResult:
    """Markov element facts on every triangular entry, including the value equation."""
    start = time.perf_counter()
    problems = []
    checked = 0
    for name in CATALOG_GROUPS:
        catalog = triangular_catalog(name)
        group = catalog.group
        for idx, datum in enumerate(catalog.data):
            checked += 1
            built = catalog.rmats[idx]
            u = catalog.markovs[idx]
            tags = []
            if u != markov_element_flipped(built):
                tags.append("conventions_disagree")
            if not u.is_grouplike():
                tags.append("not_grouplike")
            else:
                u_idx = u.grouplike_index()
                if u_idx not in group.center():
                    tags.append("not_central")
                if group.table[u_idx][u_idx] != group.identity:
                    tags.append("not_involution")
                if not verify_markov_equation(datum, u):
                    tags.append("value_equation_fails")
            if tags:
                problems.append((name, idx, tags))
    elapsed = time.perf_counter() - start
    details = f"{checked} triangular entries checked, {len(problems)} problems"
    if problems:
        details += f"; first: {problems[0]}"
    return CriterionResult(4, "Markov element identities", not problems, details, elapsed)


_SUPPORT_CACHE: dict = {}
_EXTERIOR_CACHE: dict = {}
_CYCLIC_CACHE: dict = {}
_BRAIDING_CACHE: dict = {}


def criterion_5() -> CriterionResult:
    """Minimal supports: dimensions, inclusion spans, closures, pairing map."""
    start = time.perf_counter()
    problems = []
    checked = 0
    cache = _SUPPORT_CACHE
    for name in CATALOG_GROUPS:
        catalog = qt_catalog(name)
        for idx, datum in enumerate(catalog.data):
            checked += 1
            built = catalog.rmats[idx]
            key = (
                built.canonical_key(),
                tuple(sorted(datum.incl_left.image)),
                tuple(sorted(datum.incl_right.image)),
            )
            tags = cache.get(key)
            if tags is None:
                tags = []
                support = minimal_support(built, datum)
                if support.left_dim != datum.domain.order:
                    tags.append("left_dimension")
                if support.right_dim != datum.domain.order:
                    tags.append("right_dimension")
                tags.extend(k for k, ok in support.checks.items() if not ok)
                pairing = alpha_map(built)
                tags.extend(f"alpha_{k}" for k, ok in pairing.checks.items() if not ok)
                if pairing.rank != datum.domain.order:
                    tags.append("alpha_rank")
                cache[key] = tags
            if tags:
                problems.append((name, idx, tags))
    elapsed = time.perf_counter() - start
    details = f"{checked} data checked, {len(problems)} problems"
    if problems:
        details += f"; first: {problems[0]}"
    return CriterionResult(
        5, "minimal support and pairing map structure", not problems, details, elapsed
    )


def criterion_6() -> CriterionResult:
    """Braided exterior powers match the twisted Newton recursion, n <= 3."""
    start = time.perf_counter()
    problems = []
    checked = 0
    cache = _EXTERIOR_CACHE
    for name in CATALOG_GROUPS:
        catalog = triangular_catalog(name)
        for idx in range(len(catalog)):
            built = catalog.rmats[idx]
            u = catalog.markovs[idx].grouplike_index()
            for rep_id, rep in enumerate(_test_reps(name)):
                for n in range(4):
                    checked += 1
                    key = (built.canonical_key(), rep_id, n)
                    ok = cache.get(key)
                    if ok is None:
                        left = exterior_power_char(rep, built, n)
                        right = lambda_from_adams(rep.character(), n, u)
                        ok = left == right
                        cache[key] = ok
                    if not ok:
                        problems.append((name, idx, rep.name, n))
    elapsed = time.perf_counter() - start
    passed = not problems and elapsed < 120.0
    details = (
        f"{checked} (entry, representation, degree) triples, "
        f"{len(problems)} mismatches, runtime {elapsed:.1f}s < 120s"
    )
    if problems:
        details += f"; first: {problems[0]}"
    return CriterionResult(
        6, "exterior powers equal twisted lambda operations", passed, details, elapsed
    )


def criterion_7() -> CriterionResult:
    """Cyclic-operation trace identities at primes 2 and 3.

    For each triangular entry, test representation, prime p and nontrivial
    p-th root eps, and central z: the categorical-trace difference of the
    two cyclic projectors equals the categorical trace of z^p on X; the
    plain-trace difference equals the twisted Adams operation at z; the
    long-cycle trace identities hold for every nonzero cycle power; and the
    nontrivial-root component reduces to the scalar sum, which vanishes.
    """
    start = time.perf_counter()
    problems = []
    checked = 0
    cache = _CYCLIC_CACHE
    for name in CATALOG_GROUPS:
        catalog = triangular_catalog(name)
        group = catalog.group
        for idx in range(len(catalog)):
            built = catalog.rmats[idx]
            u = catalog.markovs[idx].grouplike_index()
            key0 = built.canonical_key()
            for rep_id, rep in enumerate(_test_reps(name)):
                char = rep.character()
                for p in (2, 3):
                    for eps_power in range(1, p):
                        eps = root_of_unity(p, eps_power)
                        key = (key0, rep_id, p, eps_power)
                        tags = cache.get(key)
                        if tags is None:
                            tags = _cyclic_instance_tags(group, rep, built, char, u, p, eps)
                            cache[key] = tags
                        checked += 1
                        if tags:
                            problems.append((name, idx, rep.name, p, eps_power, tags))
    elapsed = time.perf_counter() - start
    details = f"{checked} (entry, rep, prime, root) cases, {len(problems)} failures"
    if problems:
        details += f"; first: {problems[0]}"
    return CriterionResult(
        7, "cyclic operation and long-cycle trace identities", not problems, details, elapsed
    )


def _cyclic_instance_tags(group, rep, built, char, u, p, eps) -> list[str]:
    tags = []
    one = CycScalar.one()
    vals_one = cyclic_operation_char(rep, built, p, one)
    vals_eps = cyclic_operation_char(rep, built, p, eps)
    # The scalar component of the nontrivial-root argument.
    scalar_sum = CycScalar.zero()
    power = one
    for _ in range(p):
        scalar_sum = scalar_sum + power
        power = power * eps
    if scalar_sum * CycScalar.rational(Fraction(1, p)) != 0:
        tags.append("root_sum_nonzero")
    action = BraidedAction(rep, built, p, validate=False)
    cycle = tuple(range(1, p)) + (0,)
    tau = action.permutation_matrix(cycle)
    u_power = rep.kron_power(u, p)
    for z in group.center():
        z_power = rep.kron_power(z, p)
        zp = group.power(z, p)
        cat_zp = (rep.matrix(u) @ rep.matrix(zp)).trace()
        diff = vals_one[z] - vals_eps[z]
        if diff != cat_zp:
            tags.append(f"projector_difference_at_{z}")
        uz = group.table[u][z]
        plain_diff = vals_one[uz] - vals_eps[uz]
        if plain_diff != adams_twisted(char, u, p).evaluate(z):
            tags.append(f"twisted_adams_at_{z}")
        power_mat = tau
        for i in range(1, p):
            if (u_power @ z_power @ power_mat).trace() != cat_zp:
                tags.append(f"long_cycle_{i}_at_{z}")
            power_mat = power_mat @ tau
        # Nontrivial-root component: subtracting the identity term leaves
        # (1/p) sum_{i>=1} eps^i times the categorical trace of z^p.
        ident_term = (u_power @ z_power).trace() * CycScalar.rational(Fraction(1, p))
        tail = vals_eps[z] - ident_term
        if tail != cat_zp * CycScalar.rational(Fraction(-1, p)):
            tags.append(f"eps_component_at_{z}")
    return tags


def criterion_8() -> CriterionResult:
    """Lambda-ring axioms for the twisted operations on every character ring."""
    start = time.perf_counter()
    problems = []
    checked = 0
    rng = random.Random(20260808)
    for name in CATALOG_GROUPS:
        group = bundled_group(name)
        chars = [rep.character() for rep in _test_reps(name)]
        if name not in REGULAR_REP_GROUPS:
            chars.append(regular_rep(group).character())
        for u in group.central_involutions():
            checked += 1
            checks = verify_lambda_ring(u, chars, depth=6)
            bad = [k for k, ok in checks.items() if not ok]
            # Lambda additivity on random virtual characters.
            for _ in range(3):
                x = _random_virtual(rng, group, chars)
                y = _random_virtual(rng, group, chars)
                lx = _lambda_sequence(x, 6, u)
                ly = _lambda_sequence(y, 6, u)
                lxy = _lambda_sequence(x + y, 6, u)
                for i in range(7):
                    acc = ClassFunction.constant(group, 0)
                    for s in range(i + 1):
                        acc = acc + lx[s] * ly[i - s]
                    if lxy[i] != acc:
                        bad.append(f"random_lambda_additivity_{i}")
                # Series inversion: sum_{i+j=n} (-1)^i lambda^i sigma^j = 0.
                sigmas = [sigma_from_lambda(x, n, u) for n in range(7)]
                for n in range(1, 7):
                    acc = ClassFunction.constant(group, 0)
                    for i in range(n + 1):
                        term = lx[i] * sigmas[n - i]
                        acc = acc + term if i % 2 == 0 else acc - term
                    if acc != ClassFunction.constant(group, 0):
                        bad.append(f"series_inversion_{n}")
            if bad:
                problems.append((name, u, sorted(set(bad))))
    elapsed = time.perf_counter() - start
    details = f"{checked} (group, involution) rings checked to depth 6, {len(problems)} failures"
    if problems:
        details += f"; first: {problems[0]}"
    return CriterionResult(
        8, "twisted lambda-ring axioms to depth 6", not problems, details, elapsed
    )


def _random_virtual(rng, group, chars) -> ClassFunction:
    out = ClassFunction.constant(group, 0)
    for c in chars:
        out = out + c.scale(rng.randint(-2, 3))
    return out


def criterion_9() -> CriterionResult:
    """The graded twist exists and satisfies all three conditions, every entry."""
    start = time.perf_counter()
    problems = []
    checked = 0
    for name in CATALOG_GROUPS:
        catalog = triangular_catalog(name)
        for idx, datum in enumerate(catalog.data):
            checked += 1
            try:
                twist = koszul_twist(datum)
            except ValueError as exc:
                problems.append((name, idx, str(exc)))
                continue
            if not twist.all_passed:
                problems.append(
                    (name, idx, [c.name for c in twist.report.failed()])
                )
    elapsed = time.perf_counter() - start
    details = f"{checked} triangular entries twisted, {len(problems)} failures"
    if problems:
        details += f"; first: {problems[0]}"
    return CriterionResult(
        9, "graded twist conditions on every triangular entry", not problems, details, elapsed
    )


def criterion_10() -> CriterionResult:
    """Every braiding gives an honest symmetric-group action for n <= 3."""
    start = time.perf_counter()
    problems = []
    checked = 0
    cache = _BRAIDING_CACHE
    for name in CATALOG_GROUPS:
        catalog = triangular_catalog(name)
        group = catalog.group
        reps = list(_test_reps(name))
        if name not in REGULAR_REP_GROUPS:
            reps.append(regular_rep(group))
        for idx in range(len(catalog)):
            built = catalog.rmats[idx]
            key0 = built.canonical_key()
            for rep_id, rep in enumerate(reps):
                for n in (2, 3):
                    if rep.dim**n > 4096:
                        continue
                    checked += 1
                    key = (key0, rep_id, n)
                    tag = cache.get(key)
                    if tag is None:
                        try:
                            BraidedAction(rep, built, n, validate=True)
                            tag = ""
                        except ValueError as exc:
                            tag = str(exc)
                        cache[key] = tag
                    if tag:
                        problems.append((name, idx, rep.name, n, tag))
    elapsed = time.perf_counter() - start
    details = f"{checked} (entry, rep, power) actions validated, {len(problems)} failures"
    if problems:
        details += f"; first: {problems[0]}"
    return CriterionResult(
        10, "braided symmetric-group action invariants", not problems, details, elapsed
    )


ALL_CRITERIA = (
    criterion_1,
    criterion_2,
    criterion_3,
    criterion_4,
    criterion_5,
    criterion_6,
    criterion_7,
    criterion_8,
    criterion_9,
    criterion_10,
)


def run_all(emit=print) -> list[CriterionResult]:
    results = []
    for fn in ALL_CRITERIA:
        result = fn()
        results.append(result)
        if emit is not None:
            emit(result.line())
    return results
