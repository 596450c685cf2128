"""Formal algebra of discrete L-parameters for classical groups.

A parameter is modelled as a finite multiset of irreducible summands
rho (x) S_a, where rho is an opaque cuspidal symbol carrying a dimension
and a duality type, and S_a is the a-dimensional irreducible algebraic
representation of SL(2, C).  Nothing analytic is computed here: duality
types and dual pairings are declared attributes of the symbols, and every
operation is pure bookkeeping over them.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .errors import InconsistentSymbol, InvalidParameter, UnpairedDual
from .validation import ValidationReport, Violation


class Family(Enum):
    """Classical group families over a p-adic field F."""

    SYMPLECTIC = "sp"           # Sp(2n, F), dual group SO(2n+1, C)
    ODD_ORTHOGONAL = "so-odd"   # SO(2n+1, F), dual group Sp(2n, C)
    EVEN_ORTHOGONAL = "o-even"  # O(2n, F), dual group O(2n, C)
    UNITARY = "unitary"         # U(n) w.r.t. E/F, dual group GL(n, C)


class DualityType(Enum):
    """Whether an irreducible summand preserves a symmetric form
    (orthogonal), an alternating form (symplectic), or no form at all.
    The two self-dual variants are mutually exclusive."""

    NOT_SELF_DUAL = "not-self-dual"
    ORTHOGONAL = "orthogonal"
    SYMPLECTIC = "symplectic"


_CLASSICAL_FAMILIES = (
    Family.SYMPLECTIC,
    Family.ODD_ORTHOGONAL,
    Family.EVEN_ORTHOGONAL,
)

_FAMILY_NAMES = {
    Family.SYMPLECTIC: "Sp({m}, F)",
    Family.ODD_ORTHOGONAL: "SO({m}, F)",
    Family.EVEN_ORTHOGONAL: "O({m}, F)",
    Family.UNITARY: "U({m})",
}


@dataclass(frozen=True)
class GroupSpec:
    """A group G in one of the four families, identified by its rank.

    Rank 0 is the trivial group; it occurs as the residual factor of a
    pure-GL Levi subgroup and is otherwise uninteresting.
    """

    family: Family
    rank: int

    def __post_init__(self) -> None:
        if self.rank < 0:
            raise ValueError(f"rank must be non-negative, got {self.rank}")

    @property
    def dual_dimension(self) -> int:
        """Dimension of the standard representation of the dual group."""
        n = self.rank
        if self.family is Family.SYMPLECTIC:
            return 2 * n + 1
        if self.family is Family.UNITARY:
            return n
        return 2 * n

    @property
    def dual_type(self) -> DualityType:
        """Duality type of the dual group's standard representation."""
        if self.family is Family.SYMPLECTIC:
            return DualityType.ORTHOGONAL
        if self.family is Family.ODD_ORTHOGONAL:
            return DualityType.SYMPLECTIC
        if self.family is Family.EVEN_ORTHOGONAL:
            return DualityType.ORTHOGONAL
        raise ValueError("the dual group GL(n, C) has no duality type")

    def describe(self) -> str:
        if self.family is Family.SYMPLECTIC:
            return _FAMILY_NAMES[self.family].format(m=2 * self.rank)
        if self.family is Family.ODD_ORTHOGONAL:
            return _FAMILY_NAMES[self.family].format(m=2 * self.rank + 1)
        if self.family is Family.EVEN_ORTHOGONAL:
            return _FAMILY_NAMES[self.family].format(m=2 * self.rank)
        return _FAMILY_NAMES[self.family].format(m=self.rank)


def tensor_type(rho_type: DualityType, a: int) -> DualityType:
    """Duality type of rho (x) S_a given the type of rho.

    S_a preserves a symmetric bilinear form for a odd and an alternating
    one for a even.  Tensoring multiplies form symmetries: like types give
    orthogonal, unlike types give symplectic.  Non-self-dual stays
    non-self-dual.
    """
    if a < 1:
        raise ValueError(f"a must be a positive integer, got {a}")
    if rho_type is DualityType.NOT_SELF_DUAL:
        return DualityType.NOT_SELF_DUAL
    sl2_type = DualityType.ORTHOGONAL if a % 2 else DualityType.SYMPLECTIC
    if rho_type is sl2_type:
        return DualityType.ORTHOGONAL
    return DualityType.SYMPLECTIC


@dataclass(frozen=True)
class CuspidalSymbol:
    """A formal irreducible cuspidal datum of some GL(dim, F).

    Labels are opaque and compared as plain strings.  The duality type and
    the dual pairing are declared, never computed: the pole criteria that
    would determine them for an actual representation are analytic and out
    of scope for a symbolic calculator.
    """

    label: str
    dim: int
    duality: DualityType
    dual_label: str | None = None

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise ValueError(f"dim must be positive, got {self.dim}")
        if self.duality is DualityType.SYMPLECTIC and self.dim % 2:
            raise ValueError(
                f"symplectic symbol {self.label!r} must have even dimension"
            )
        if self.duality is DualityType.NOT_SELF_DUAL:
            if self.dual_label is None:
                raise ValueError(
                    f"non-self-dual symbol {self.label!r} needs a dual_label"
                )
            if self.dual_label == self.label:
                raise ValueError(f"symbol {self.label!r} cannot be its own dual")
        elif self.dual_label is not None:
            raise ValueError(
                f"self-dual symbol {self.label!r} must not carry a dual_label"
            )

    @property
    def self_dual(self) -> bool:
        return self.duality is not DualityType.NOT_SELF_DUAL

    def dual_partner(self) -> "CuspidalSymbol":
        """The symbol of the dual representation (non-self-dual case only)."""
        if self.dual_label is None:
            raise ValueError(f"{self.label!r} is self-dual")
        return CuspidalSymbol(
            label=self.dual_label,
            dim=self.dim,
            duality=DualityType.NOT_SELF_DUAL,
            dual_label=self.label,
        )


@dataclass(frozen=True)
class Summand:
    """An irreducible summand rho (x) S_a."""

    rho: CuspidalSymbol
    a: int

    def __post_init__(self) -> None:
        if self.a < 1:
            raise ValueError(f"a must be a positive integer, got {self.a}")

    @property
    def dim(self) -> int:
        return self.rho.dim * self.a

    @property
    def duality(self) -> DualityType:
        return tensor_type(self.rho.duality, self.a)

    @property
    def self_dual(self) -> bool:
        return self.rho.self_dual

    def sort_key(self) -> tuple[str, int]:
        return (self.rho.label, self.a)

    def dual_partner(self) -> "Summand":
        return Summand(self.rho.dual_partner(), self.a)

    def describe(self) -> str:
        return f"{self.rho.label}(x)S_{self.a}"


@dataclass(frozen=True)
class ParameterEntry:
    """One canonical entry: a summand with its multiplicity.

    A non-self-dual entry stands for the whole dual pair at this
    multiplicity, stored once under the lexicographically smaller label.
    """

    summand: Summand
    multiplicity: int

    def __post_init__(self) -> None:
        if self.multiplicity < 1:
            raise ValueError(
                f"multiplicity must be positive, got {self.multiplicity}"
            )

    @property
    def is_dual_pair(self) -> bool:
        return not self.summand.self_dual

    @property
    def total_dim(self) -> int:
        copies = 2 if self.is_dual_pair else 1
        return copies * self.multiplicity * self.summand.dim


@dataclass(frozen=True)
class Parameter:
    """A parameter in canonical form.

    Entries are sorted by (label, a), summands are pairwise distinct, and
    each dual pair appears once under its representative.  Build through
    :func:`canonicalize`.
    """

    entries: tuple[ParameterEntry, ...]

    def __post_init__(self) -> None:
        keys = [e.summand.sort_key() for e in self.entries]
        if keys != sorted(keys) or len(set(keys)) != len(keys):
            raise ValueError("entries must be sorted and pairwise distinct")
        for e in self.entries:
            if e.is_dual_pair and e.summand.rho.label > e.summand.rho.dual_label:
                raise ValueError(
                    f"dual pair {e.summand.describe()} is not stored under its"
                    " lexicographic representative"
                )

    @property
    def total_dimension(self) -> int:
        return sum(e.total_dim for e in self.entries)

    def expanded_entries(self) -> list[tuple[Summand, int]]:
        """Raw (summand, multiplicity) list with dual pairs expanded."""
        out: list[tuple[Summand, int]] = []
        for e in self.entries:
            out.append((e.summand, e.multiplicity))
            if e.is_dual_pair:
                out.append((e.summand.dual_partner(), e.multiplicity))
        return out

    def describe(self) -> str:
        parts = []
        for e in self.entries:
            piece = f"{e.multiplicity}*{e.summand.describe()}"
            if e.is_dual_pair:
                piece += f" (+) {e.multiplicity}*{e.summand.rho.dual_label}(x)S_{e.summand.a}"
            parts.append(piece)
        return " (+) ".join(parts) if parts else "0"


def _register_symbols(symbols: Iterable[CuspidalSymbol]) -> dict[str, CuspidalSymbol]:
    """Index symbols by label, rejecting conflicting declarations.

    Also checks that the dual pairing is an involution: whenever both
    members of a pair are present, their attributes must mirror each other.
    """
    registry: dict[str, CuspidalSymbol] = {}
    for sym in symbols:
        seen = registry.get(sym.label)
        if seen is None:
            registry[sym.label] = sym
        elif seen != sym:
            raise InconsistentSymbol(
                f"label {sym.label!r} declared with conflicting attributes"
            )
    for sym in registry.values():
        if sym.dual_label is None:
            continue
        partner = registry.get(sym.dual_label)
        if partner is None:
            continue
        if partner.dual_label != sym.label or partner.dim != sym.dim:
            raise InconsistentSymbol(
                f"dual pairing between {sym.label!r} and {sym.dual_label!r}"
                " is not a dimension-preserving involution"
            )
    return registry


def canonicalize(entries: Iterable[tuple[Summand, int]]) -> Parameter:
    """Merge a raw summand list into canonical form.

    Multiplicities of equal summands add; every non-self-dual summand must
    be matched by its dual partner at equal multiplicity, and the pair is
    kept once under the smaller label.  Idempotent and
    dimension-preserving.
    """
    merged: dict[tuple[str, int], int] = {}
    summand_at: dict[tuple[str, int], Summand] = {}
    for summand, mult in entries:
        if mult < 1:
            raise ValueError(f"multiplicity must be positive, got {mult}")
        key = summand.sort_key()
        if key in summand_at and summand_at[key] != summand:
            raise InconsistentSymbol(
                f"label {key[0]!r} declared with conflicting attributes"
            )
        summand_at.setdefault(key, summand)
        merged[key] = merged.get(key, 0) + mult

    _register_symbols(s.rho for s in summand_at.values())

    canonical: list[ParameterEntry] = []
    for key in sorted(merged):
        summand = summand_at[key]
        if summand.self_dual:
            canonical.append(ParameterEntry(summand, merged[key]))
            continue
        partner_key = (summand.rho.dual_label, summand.a)
        if partner_key < key:
            continue  # handled when the representative was visited
        partner_mult = merged.get(partner_key)
        if partner_mult is None:
            raise UnpairedDual(
                f"{summand.describe()} has no dual partner"
                f" {summand.rho.dual_label!r} in the parameter"
            )
        if partner_mult != merged[key]:
            raise UnpairedDual(
                f"{summand.describe()} appears {merged[key]} times but its"
                f" dual appears {partner_mult} times"
            )
        canonical.append(ParameterEntry(summand, merged[key]))
    return Parameter(tuple(canonical))


def validate_parameter(psi: Parameter, group: GroupSpec) -> ValidationReport:
    """Check a canonical parameter against a target dual group.

    Violations are reported as data; an empty report means valid.  A
    self-dual summand whose type differs from the dual group's must occur
    with even multiplicity, and the total dimension must fill the dual
    group exactly.
    """
    if group.family not in _CLASSICAL_FAMILIES:
        raise ValueError(
            "unitary parameters are handled by the unitary module"
        )
    violations: list[Violation] = []
    total = psi.total_dimension
    if total != group.dual_dimension:
        violations.append(
            Violation(
                "dimension",
                f"parameter has dimension {total}, dual group of"
                f" {group.describe()} needs {group.dual_dimension}",
            )
        )
    for entry in psi.entries:
        duality = entry.summand.duality
        if duality is DualityType.NOT_SELF_DUAL:
            continue
        if duality is not group.dual_type and entry.multiplicity % 2:
            violations.append(
                Violation(
                    "odd-multiplicity",
                    f"{entry.summand.describe()} has type opposite to the"
                    f" dual group but odd multiplicity {entry.multiplicity}",
                )
            )
    return ValidationReport(tuple(violations))


@dataclass(frozen=True)
class Classification:
    """Partition of canonical entries into the four centralizer buckets.

    The rank of the parameter's R-group is the size of the last bucket:
    self-dual summands of the same type as the dual group occurring with
    even multiplicity.
    """

    dual_pairs: tuple[ParameterEntry, ...]
    opposite_type: tuple[ParameterEntry, ...]
    same_type_odd_mult: tuple[ParameterEntry, ...]
    same_type_even_mult: tuple[ParameterEntry, ...]

    @property
    def d(self) -> int:
        return len(self.same_type_even_mult)

    @property
    def buckets(self) -> tuple[tuple[ParameterEntry, ...], ...]:
        return (
            self.dual_pairs,
            self.opposite_type,
            self.same_type_odd_mult,
            self.same_type_even_mult,
        )

    @property
    def entry_count(self) -> int:
        return sum(len(b) for b in self.buckets)


def classify(psi: Parameter, group: GroupSpec) -> Classification:
    """Partition a valid parameter's entries into the four buckets."""
    validate_parameter(psi, group).require(InvalidParameter, "classify")
    pairs, opposite, same_odd, same_even = [], [], [], []
    for entry in psi.entries:
        duality = entry.summand.duality
        if duality is DualityType.NOT_SELF_DUAL:
            pairs.append(entry)
        elif duality is not group.dual_type:
            opposite.append(entry)
        elif entry.multiplicity % 2:
            same_odd.append(entry)
        else:
            same_even.append(entry)
    return Classification(
        dual_pairs=tuple(pairs),
        opposite_type=tuple(opposite),
        same_type_odd_mult=tuple(same_odd),
        same_type_even_mult=tuple(same_even),
    )
