from fractions import Fraction

import pytest

from qtriang.groups import (
    AbelianGroup,
    abelian_normal_subgroups,
    bundled_group,
    cyclic_group,
    enumerate_biforms,
    normal_inclusions,
    same_module_structure,
    subgroup_structure,
)
from qtriang.classify import enumerate_qt, enumerate_triangular
from qtriang.hopf import GATensor


def test_trivial_group():
    cat = enumerate_qt(cyclic_group(1, "triv"))
    assert len(cat) == 1
    assert cat.rmats[0] == GATensor.unit(cat.group, 2)
    assert cat.all_verified


def test_z2_contains_koszul():
    cat = enumerate_triangular(bundled_group("Z2"))
    h = Fraction(1, 2)
    golden = GATensor(
        cat.group, 2, {(0, 0): h, (0, 1): h, (1, 0): h, (1, 1): -h}
    )
    assert golden in cat.rmats
    assert len(cat) == 2


def test_z3_triangular_is_only_trivial():
    cat = enumerate_triangular(bundled_group("Z3"))
    assert len(cat) == 1
    assert cat.rmats[0].is_unit()
    # oracle: no nondegenerate skewsymmetric form exists on Z/3
    assert enumerate_biforms(AbelianGroup((3,)), nondegenerate=True, skewsymmetric=True) == []


def test_q8_triangular_markov_elements():
    cat = enumerate_triangular(bundled_group("Q8"))
    markov_indices = {m.grouplike_index() for m in cat.markovs}
    # identity or the central involution -1 only
    assert markov_indices <= {0, 1}
    assert len(cat) == 2
    assert all(cat.unitary)


def test_every_entry_verified():
    for name in ("Z2", "Z3", "Z4", "S3"):
        cat = enumerate_qt(bundled_group(name))
        assert cat.all_verified
        assert all(r.arity == 2 for r in cat.rmats)


def test_triangular_subset_of_full_catalog():
    for name in ("Z2", "Z4", "S3", "Q8"):
        full = enumerate_qt(bundled_group(name))
        tri = enumerate_triangular(bundled_group(name))
        full_keys = {r.canonical_key() for r in full.rmats}
        for r, unitary in zip(tri.rmats, tri.unitary):
            assert unitary
            assert r.canonical_key() in full_keys


def test_flagged_triangular_entries_are_unitary():
    for name in ("Z2", "Z4", "Z2xZ2", "S3", "Q8"):
        cat = enumerate_qt(bundled_group(name))
        for idx, datum in enumerate(cat.data):
            if datum.triangular:
                assert cat.unitary[idx]


def test_unitary_dedup_classes_contain_flagged_data():
    for name in ("Z2xZ2", "D4"):
        cat = enumerate_qt(bundled_group(name))
        for members in cat.dedup:
            unitary = cat.unitary[members[0]]
            has_flagged = any(cat.data[i].triangular for i in members)
            assert unitary == has_flagged


# Oracle: independent re-enumeration with all loops reversed.
def _reversed_enumeration(group, triangular_only):
    shapes = []
    seen = set()
    for subgroup in reversed(abelian_normal_subgroups(group)):
        factors = subgroup_structure(group, subgroup).domain.factors
        if factors not in seen:
            seen.add(factors)
            shapes.append(AbelianGroup(factors))
    keys = set()
    for domain in shapes:
        incls = sorted(
            normal_inclusions(domain, group), key=lambda i: i.gen_images, reverse=True
        )
        for left in incls:
            rights = [left] if triangular_only else incls
            forms = enumerate_biforms(
                domain,
                left.conjugation_automorphisms(),
                nondegenerate=True,
                skewsymmetric=triangular_only,
                g_invariant=True,
            )
            for right in rights:
                if right is not left and not same_module_structure(left, right):
                    continue
                for beta in reversed(forms):
                    keys.add(
                        (
                            domain.factors,
                            left.gen_images,
                            right.gen_images,
                            beta.matrix,
                        )
                    )
    return keys


@pytest.mark.parametrize("name", ["S3", "Z4", "Q8"])
def test_enumeration_order_independent(name):
    group = bundled_group(name)
    for triangular_only in (False, True):
        cat = (enumerate_triangular if triangular_only else enumerate_qt)(group)
        forward = {
            (
                d.domain.factors,
                d.incl_left.gen_images,
                d.incl_right.gen_images,
                d.beta.matrix,
            )
            for d in cat.data
        }
        assert forward == _reversed_enumeration(group, triangular_only)


def test_dedup_partitions_by_exact_equality():
    cat = enumerate_qt(bundled_group("Z3"))
    flat = sorted(i for members in cat.dedup for i in members)
    assert flat == list(range(len(cat)))
    for members in cat.dedup:
        first = cat.rmats[members[0]]
        for idx in members[1:]:
            assert cat.rmats[idx] == first
    # distinct classes hold distinct elements
    reps = [cat.rmats[m[0]] for m in cat.dedup]
    for i, a in enumerate(reps):
        for b in reps[i + 1 :]:
            assert a != b


def test_threaded_enumeration_matches_serial():
    group = bundled_group("S3")
    serial = enumerate_qt(group, threads=1)
    threaded = enumerate_qt(group, threads=4)
    assert [r.canonical_key() for r in serial.rmats] == [
        r.canonical_key() for r in threaded.rmats
    ]
    assert serial.dedup == threaded.dedup


def test_size_cap():
    big = [[(a + b) % 65 for b in range(65)] for a in range(65)]
    with pytest.raises(ValueError):
        from qtriang.groups import FiniteGroup

        FiniteGroup(big)


def test_markov_of_triangular_entries_is_central_involution():
    for name in ("Z2", "Z4", "Z2xZ2", "D4", "Q8"):
        cat = enumerate_triangular(bundled_group(name))
        group = cat.group
        for m in cat.markovs:
            idx = m.grouplike_index()
            assert idx in group.center()
            assert group.table[idx][idx] == group.identity
