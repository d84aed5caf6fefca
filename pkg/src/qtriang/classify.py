"""Exhaustive enumeration of R-matrices on k[G] for small groups.

The enumeration walks abelian normal subgroups, takes one abstract abelian
group per invariant-factor shape, pairs up normal inclusions that induce
the same conjugation maps, and attaches every nondegenerate
conjugation-invariant form.  Every produced element is verified in full;
distinct data that build the same element bit-for-bit are grouped into
dedup classes rather than being interpreted away.

Completeness of this parametrization is inherited from the classification
theorem for group algebras and is not re-verified by search (the ground
field is infinite); the artifact checks soundness and distinctness only.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .groups import (
    AbelianGroup,
    FiniteGroup,
    abelian_normal_subgroups,
    enumerate_biforms,
    normal_inclusions,
    same_module_structure,
    subgroup_structure,
)
from .hopf import GATensor
from .rmatrix import (
    QTDatum,
    VerificationReport,
    build_r,
    markov_element,
    verify_qt,
    verify_unitary,
)

COMPLETENESS_NOTE = (
    "every listed structure is verified exactly; completeness of the list "
    "follows from the classification of R-matrices on group algebras by "
    "subgroup data and is not re-verified by search over the infinite field"
)


@dataclass
class Catalog:
    """All structures found on one group, with their verification results."""

    group: FiniteGroup
    data: list[QTDatum] = field(default_factory=list)
    rmats: list[GATensor] = field(default_factory=list)
    reports: list[VerificationReport] = field(default_factory=list)
    markovs: list[GATensor] = field(default_factory=list)
    unitary: list[bool] = field(default_factory=list)
    dedup: list[list[int]] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.data)

    @property
    def all_verified(self) -> bool:
        return all(r.all_passed for r in self.reports)

    def dedup_class_of(self, index: int) -> int:
        for cls_id, members in enumerate(self.dedup):
            if index in members:
                return cls_id
        raise IndexError(index)

    def triangular_indices(self) -> list[int]:
        return [i for i, d in enumerate(self.data) if d.triangular]


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get("QTRIANG_THREADS", "1")))
    except ValueError:
        return 1


def _enumerate_data(group: FiniteGroup, triangular_only: bool) -> list[QTDatum]:
    if group.size > 64:
        raise ValueError("enumeration is capped at groups of order 64")
    shapes: list[AbelianGroup] = []
    seen = set()
    for subgroup in abelian_normal_subgroups(group):
        factors = subgroup_structure(group, subgroup).domain.factors
        if factors not in seen:
            seen.add(factors)
            shapes.append(AbelianGroup(factors) if factors else AbelianGroup(()))
    data: list[QTDatum] = []
    for domain in shapes:
        inclusions = sorted(normal_inclusions(domain, group), key=lambda i: i.gen_images)
        for left in inclusions:
            rights = [left] if triangular_only else inclusions
            autos = left.conjugation_automorphisms()
            forms = enumerate_biforms(
                domain,
                autos,
                nondegenerate=True,
                skewsymmetric=triangular_only,
                g_invariant=True,
            )
            for right in rights:
                if right is not left and not same_module_structure(left, right):
                    continue
                for beta in forms:
                    data.append(QTDatum(group, domain, left, right, beta, validate=False))
    return data


def _verify_entry(datum: QTDatum):
    built = build_r(datum)
    return built, verify_qt(built), markov_element(built), verify_unitary(built)


def enumerate_qt(
    group: FiniteGroup, *, triangular_only: bool = False, threads: int | None = None
) -> Catalog:
    """Catalog of all structures on k[G]; deterministic over iteration order.

    With ``triangular_only`` the inclusions are forced to coincide and the
    forms to be skewsymmetric.  ``threads`` (default: the QTRIANG_THREADS
    environment variable) parallelizes the per-datum verification; results
    are assembled in enumeration order either way.
    """
    data = _enumerate_data(group, triangular_only)
    threads = default_threads() if threads is None else max(1, threads)
    if threads > 1 and len(data) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_verify_entry, data))
    else:
        results = [_verify_entry(d) for d in data]
    catalog = Catalog(group=group, data=data)
    for built, report, markov, unitary in results:
        catalog.rmats.append(built)
        catalog.reports.append(report)
        catalog.markovs.append(markov)
        catalog.unitary.append(unitary)
    classes: dict = {}
    for idx, built in enumerate(catalog.rmats):
        classes.setdefault(built.canonical_key(), []).append(idx)
    catalog.dedup = sorted(classes.values(), key=lambda members: members[0])
    return catalog


def enumerate_triangular(group: FiniteGroup, *, threads: int | None = None) -> Catalog:
    """The unitary part of the catalog: coinciding inclusions, skew forms."""
    return enumerate_qt(group, triangular_only=True, threads=threads)
