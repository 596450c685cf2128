"""Jordan-block data for discrete series of classical groups.

A discrete series sigma of G_m is represented purely by its set of
Jordan blocks (rho, a): self-dual cuspidal symbols paired with segment
lengths.  The blocks determine the parameter of sigma (each block
contributes rho (x) S_a once) and drive the reducibility predicate for
parabolic induction from GL x G_m.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InvalidJordanData, NotSelfDualInput
from .params import (
    CuspidalSymbol,
    Family,
    GroupSpec,
    Parameter,
    Summand,
    canonicalize,
    tensor_type,
)
from .validation import ValidationReport, Violation


@dataclass(frozen=True)
class JordanData:
    """The set Jord(sigma) defining a discrete series sigma of ``group``.

    Blocks are stored sorted and deduplicated, so the set semantics are
    structural.  Construction is permissive; :func:`validate_jordan`
    reports broken invariants as data.
    """

    group: GroupSpec
    blocks: tuple[Summand, ...]

    def __post_init__(self) -> None:
        ordered = tuple(sorted(set(self.blocks), key=Summand.sort_key))
        object.__setattr__(self, "blocks", ordered)

    @staticmethod
    def of(group: GroupSpec, blocks: Iterable[tuple[CuspidalSymbol, int]]) -> "JordanData":
        return JordanData(group, tuple(Summand(rho, a) for rho, a in blocks))

    def total_dimension(self) -> int:
        return sum(b.dim for b in self.blocks)

    def block_lengths(self, rho_label: str) -> tuple[int, ...]:
        return tuple(b.a for b in self.blocks if b.rho.label == rho_label)


def jordan_parity_ok(rho: CuspidalSymbol, a: int, group: GroupSpec) -> bool:
    """Whether rho (x) S_a has the same duality type as the dual group.

    This is the membership-side parity condition: for fixed rho only one
    parity of a can pass.
    """
    if not rho.self_dual:
        raise NotSelfDualInput(f"{rho.label!r} is not self-dual")
    return tensor_type(rho.duality, a) is group.dual_type


def validate_jordan(sigma: JordanData) -> ValidationReport:
    """Report every violated Jordan-data invariant.

    Checks per block: the symbol is self-dual and rho (x) S_a matches the
    dual group's type.  Globally: per-symbol segment lengths share one
    parity, the dimensions fill the dual group, and the even orthogonal
    family excludes rank 1 (O(2, F) has no discrete series).
    """
    if sigma.group.family is Family.UNITARY:
        raise ValueError("unitary Jordan data is handled by the unitary module")
    violations: list[Violation] = []
    group = sigma.group

    if group.family is Family.EVEN_ORTHOGONAL and group.rank == 1:
        violations.append(
            Violation(
                "no-discrete-series",
                "O(2, F) has no square integrable representations",
            )
        )

    for block in sigma.blocks:
        if not block.rho.self_dual:
            violations.append(
                Violation(
                    "self-dual",
                    f"block {block.describe()} uses a non-self-dual symbol",
                )
            )
            continue
        if not jordan_parity_ok(block.rho, block.a, group):
            violations.append(
                Violation(
                    "J-1",
                    f"block {block.describe()} is not of the same type as the"
                    f" dual group of {group.describe()}",
                )
            )

    by_label: dict[str, set[int]] = {}
    for block in sigma.blocks:
        by_label.setdefault(block.rho.label, set()).add(block.a % 2)
    for label, parities in sorted(by_label.items()):
        if len(parities) > 1:
            violations.append(
                Violation("J-1", f"mixed parity in the blocks attached to {label!r}")
            )

    total = sigma.total_dimension()
    if total != group.dual_dimension:
        violations.append(
            Violation(
                "dimension",
                f"blocks fill dimension {total}, dual group of"
                f" {group.describe()} needs {group.dual_dimension}",
            )
        )
    return ValidationReport(tuple(violations))


def is_reducible(rho: CuspidalSymbol, a: int, sigma: JordanData) -> bool:
    """Whether the segment representation built from (rho, a) induces
    reducibly against sigma.

    Reducible exactly when rho (x) S_a has the same type as the dual
    group and (rho, a) is not a Jordan block of sigma: opposite-type
    pairs always induce irreducibly, and blocks do by definition.
    """
    if not rho.self_dual:
        raise NotSelfDualInput(f"{rho.label!r} is not self-dual")
    validate_jordan(sigma).require(InvalidJordanData, "is_reducible")
    return jordan_parity_ok(rho, a, sigma.group) and Summand(rho, a) not in sigma.blocks


def parameter_of_sigma(sigma: JordanData) -> Parameter:
    """The parameter of sigma: each Jordan block contributes once."""
    validate_jordan(sigma).require(InvalidJordanData, "parameter_of_sigma")
    return canonicalize((block, 1) for block in sigma.blocks)
