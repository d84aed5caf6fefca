"""The group algebra k[G] and its tensor powers as sparse exact data.

A GATensor of arity n is a finitely supported map from n-tuples of group
element indices to nonzero cyclotomic scalars.  Arity 1 gives group-algebra
elements, arity 2 houses R-matrices.  The Hopf structure maps (coproduct,
counit, antipode) act per leg; whole-tensor operators arise by composition.

Leg positions are 1-based throughout, matching the usual subscript
convention for operators like R12, R13, R23 on triple tensor products.
"""

from __future__ import annotations

from .cyclotomic import CycScalar
from .groups import FiniteGroup
from . import linalg

_ONE = CycScalar.one()


class GATensor:
    """Element of k[G]^(tensor arity), sparse over tuples of element indices."""

    __slots__ = ("group", "arity", "terms")

    def __init__(self, group: FiniteGroup, arity: int, terms=()):
        if arity < 0:
            raise ValueError("arity must be nonnegative")
        items = terms.items() if hasattr(terms, "items") else terms
        clean: dict[tuple[int, ...], CycScalar] = {}
        for key, value in items:
            key = tuple(key)
            if len(key) != arity:
                raise ValueError(f"term {key} does not have arity {arity}")
            if any(not (0 <= g < group.size) for g in key):
                raise ValueError(f"term {key} uses element indices outside the group")
            if not isinstance(value, CycScalar):
                value = CycScalar.rational(value)
            if key in clean:
                value = clean[key] + value
            if value:
                clean[key] = value
            elif key in clean:
                del clean[key]
        self.group = group
        self.arity = arity
        self.terms = clean

    # -- constructors -------------------------------------------------------

    @classmethod
    def unit(cls, group: FiniteGroup, arity: int) -> "GATensor":
        return cls(group, arity, {(group.identity,) * arity: _ONE})

    @classmethod
    def basis(cls, group: FiniteGroup, *elements: int) -> "GATensor":
        return cls(group, len(elements), {tuple(elements): _ONE})

    # -- linear structure ----------------------------------------------------

    def _check_compatible(self, other: "GATensor"):
        if self.group != other.group:
            raise ValueError("tensors over different groups")
        if self.arity != other.arity:
            raise ValueError(f"arity mismatch: {self.arity} vs {other.arity}")

    def __add__(self, other: "GATensor") -> "GATensor":
        self._check_compatible(other)
        acc = dict(self.terms)
        for key, value in other.terms.items():
            acc[key] = acc[key] + value if key in acc else value
        return GATensor(self.group, self.arity, acc)

    def __sub__(self, other: "GATensor") -> "GATensor":
        return self + (-other)

    def __neg__(self) -> "GATensor":
        return GATensor(self.group, self.arity, {k: -v for k, v in self.terms.items()})

    def scale(self, scalar) -> "GATensor":
        if not isinstance(scalar, CycScalar):
            scalar = CycScalar.rational(scalar)
        return GATensor(self.group, self.arity, {k: v * scalar for k, v in self.terms.items()})

    def __rmul__(self, scalar):
        if isinstance(scalar, GATensor):
            return NotImplemented
        return self.scale(scalar)

    # -- algebra structure ---------------------------------------------------

    def __mul__(self, other):
        """Legwise convolution product; the unit is the all-identity tuple."""
        if not isinstance(other, GATensor):
            return self.scale(other)
        self._check_compatible(other)
        table = self.group.table
        acc: dict[tuple[int, ...], CycScalar] = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                key = tuple(table[a][b] for a, b in zip(k1, k2))
                prod = v1 * v2
                acc[key] = acc[key] + prod if key in acc else prod
        return GATensor(self.group, self.arity, acc)

    def __matmul__(self, other: "GATensor") -> "GATensor":
        """Outer tensor product, concatenating legs."""
        if self.group != other.group:
            raise ValueError("tensors over different groups")
        acc: dict[tuple[int, ...], CycScalar] = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                acc[k1 + k2] = v1 * v2
        return GATensor(self.group, self.arity + other.arity, acc)

    # -- Hopf structure maps, one leg at a time -------------------------------

    def _check_leg(self, leg: int):
        if not 1 <= leg <= self.arity:
            raise ValueError(f"leg {leg} out of range for arity {self.arity}")

    def coproduct(self, leg: int) -> "GATensor":
        """Replace the chosen leg g by the pair (g, g); arity grows by one."""
        self._check_leg(leg)
        acc = {}
        i = leg - 1
        for key, value in self.terms.items():
            acc[key[: i + 1] + (key[i],) + key[i + 1 :]] = value
        return GATensor(self.group, self.arity + 1, acc)

    def counit(self, leg: int) -> "GATensor":
        """Sum out the chosen leg with weight 1 per group element."""
        self._check_leg(leg)
        acc: dict[tuple[int, ...], CycScalar] = {}
        i = leg - 1
        for key, value in self.terms.items():
            short = key[:i] + key[i + 1 :]
            acc[short] = acc[short] + value if short in acc else value
        return GATensor(self.group, self.arity - 1, acc)

    def antipode(self, leg: int) -> "GATensor":
        """Invert the chosen leg elementwise."""
        self._check_leg(leg)
        inv = self.group.inverses
        i = leg - 1
        acc = {}
        for key, value in self.terms.items():
            acc[key[:i] + (inv[key[i]],) + key[i + 1 :]] = value
        return GATensor(self.group, self.arity, acc)

    def permute_legs(self, perm) -> "GATensor":
        """Rearrange legs: new leg k carries what old leg perm[k] carried (0-based)."""
        perm = tuple(perm)
        if sorted(perm) != list(range(self.arity)):
            raise ValueError(f"{perm} is not a permutation of {self.arity} legs")
        acc = {}
        for key, value in self.terms.items():
            acc[tuple(key[p] for p in perm)] = value
        return GATensor(self.group, self.arity, acc)

    def swap(self) -> "GATensor":
        if self.arity != 2:
            raise ValueError("swap is for arity-2 tensors")
        return self.permute_legs((1, 0))

    def embed_legs(self, positions: tuple[int, int], total: int) -> "GATensor":
        """Place an arity-2 tensor in the given legs of an arity-``total`` tensor.

        All other legs carry the identity element, so R.embed_legs((1, 3), 3)
        is the usual R13.
        """
        if self.arity != 2:
            raise ValueError("embed_legs places arity-2 tensors")
        i, j = positions
        if i == j:
            raise ValueError("positions clash")
        if not (1 <= i <= total and 1 <= j <= total):
            raise ValueError(f"positions {positions} out of range for arity {total}")
        e = self.group.identity
        acc = {}
        for (g, h), value in self.terms.items():
            key = [e] * total
            key[i - 1] = g
            key[j - 1] = h
            acc[tuple(key)] = value
        return GATensor(self.group, total, acc)

    def adjoint_action(self, element: int, leg: int) -> "GATensor":
        """Conjugate the chosen leg by a group element."""
        self._check_leg(leg)
        i = leg - 1
        acc = {}
        for key, value in self.terms.items():
            acc[key[:i] + (self.group.conjugate(key[i], element),) + key[i + 1 :]] = value
        return GATensor(self.group, self.arity, acc)

    # -- predicates and solving ----------------------------------------------

    def is_unit(self) -> bool:
        return self == GATensor.unit(self.group, self.arity)

    def is_grouplike(self) -> bool:
        """Whether the coproduct doubles the tensor and the counit gives 1."""
        if self.arity != 1:
            raise ValueError("grouplikes live in arity 1")
        eps = self.counit(1)
        if not (len(eps.terms) == 1 and eps.terms.get((), None) == 1):
            return False
        return self.coproduct(1) == self @ self

    def grouplike_index(self) -> int:
        if not self.is_grouplike():
            raise ValueError(f"{self!r} is not a group element")
        return next(iter(self.terms))[0]

    def coeff(self, key) -> CycScalar:
        return self.terms.get(tuple(key), CycScalar.zero())

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0])

    def support_subgroup(self) -> list[tuple[int, ...]]:
        """The subgroup of G^arity generated by the support, sorted."""
        table = self.group.table
        identity = (self.group.identity,) * self.arity
        elems = {identity}
        frontier = set(self.terms) | {identity}
        elems |= frontier
        while frontier:
            new = set()
            for a in frontier:
                for b in list(elems):
                    for c in (
                        tuple(table[x][y] for x, y in zip(a, b)),
                        tuple(table[y][x] for x, y in zip(a, b)),
                    ):
                        if c not in elems:
                            elems.add(c)
                            new.add(c)
            frontier = new
        return sorted(elems)

    def inverse(self) -> "GATensor":
        """Two-sided inverse found by exact linear solve on the support subgroup.

        The inverse of an invertible element of a group algebra lies in the
        group algebra of the subgroup its support generates, so the solve
        stays small.  Raises ValueError when the element is not invertible.
        """
        basis = self.support_subgroup()
        index = {key: i for i, key in enumerate(basis)}
        inverses = self.group.inverses
        table = self.group.table
        zero = CycScalar.zero()
        rows = []
        for u in basis:
            row = []
            for s in basis:
                s_inv = tuple(inverses[x] for x in s)
                t = tuple(table[x][y] for x, y in zip(u, s_inv))
                row.append(self.terms.get(t, zero))
            rows.append(row)
        rhs = [zero] * len(basis)
        rhs[index[(self.group.identity,) * self.arity]] = _ONE
        solution = linalg.solve(rows, rhs)
        if solution is None:
            raise ValueError("tensor is not invertible")
        candidate = GATensor(
            self.group, self.arity, {s: c for s, c in zip(basis, solution) if c}
        )
        if not (self * candidate).is_unit() or not (candidate * self).is_unit():
            raise ValueError("tensor is not invertible")
        return candidate

    def is_invertible(self) -> bool:
        try:
            self.inverse()
            return True
        except ValueError:
            return False

    # -- comparison and serialization helpers ---------------------------------

    def canonical_key(self):
        return (
            self.arity,
            tuple((key, value.key()) for key, value in self.sorted_terms()),
        )

    def __eq__(self, other):
        if not isinstance(other, GATensor):
            return NotImplemented
        return (
            self.group == other.group
            and self.arity == other.arity
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash(self.canonical_key())

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for key, value in self.sorted_terms():
            label = "(x)".join(str(g) for g in key) if key else "()"
            bits.append(f"({value})*[{label}]")
        return " + ".join(bits)


def first_difference(left: GATensor, right: GATensor):
    """The smallest tuple where two tensors differ, with both coefficients."""
    zero = CycScalar.zero()
    for key in sorted(set(left.terms) | set(right.terms)):
        a = left.terms.get(key, zero)
        b = right.terms.get(key, zero)
        if a != b:
            return key, a, b
    return None
