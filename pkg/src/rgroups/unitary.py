"""Conjugate-duality machinery for unitary groups U(n) w.r.t. E/F.

A conjugate-self-dual cuspidal symbol carries a sign lambda in {+1, -1}
recording whether it is conjugate-orthogonal or conjugate-symplectic.
Twisting by S_a flips the sign for a even.  The centralizer of a
parameter restricted to the quadratic extension is a product with one
factor per inequivalent summand: GL for non-conjugate-self-dual summands,
O or Sp for conjugate-self-dual ones according to the sign against the
ambient rank's parity.  There is no determinant condition.

Only maximal Levi subgroups Res GL_k x U(l) are supported; general
unitary Levi chains are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .centralizer import (
    CentralizerDescriptor,
    Factor,
    FactorKind,
    descriptor_rank,
)
from .errors import (
    DimensionMismatch,
    InconsistentSymbol,
    InvalidUnitaryData,
    OddMultiplicitySp,
)
from .levi import VerificationResult, WitnessRow
from .validation import ValidationReport, Violation


def _sign(value: int) -> int:
    if value not in (1, -1):
        raise ValueError(f"signs must be +1 or -1, got {value}")
    return value


def parity_sign(exponent: int) -> int:
    """(-1)**exponent."""
    return -1 if exponent % 2 else 1


@dataclass(frozen=True)
class UnitaryCuspidalSymbol:
    """A formal cuspidal datum of GL(dim, E).

    ``lam`` is the +-1 sign attached to a conjugate-self-dual symbol.  It
    is used for both the representation-side and the parameter-side sign;
    the two agree automatically in odd dimension, and in even dimension
    the agreement is an input hypothesis recorded in
    ``lambda_rho_matches``.  Symbols with the flag down are rejected by
    any operation that needs the parameter-side sign.
    """

    label: str
    dim: int
    conj_self_dual: bool
    lam: int | None = None
    dual_label: str | None = None
    lambda_rho_matches: bool = True

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise ValueError(f"dim must be positive, got {self.dim}")
        if self.conj_self_dual:
            if self.lam is None or self.dual_label is not None:
                raise ValueError(
                    f"conjugate-self-dual symbol {self.label!r} needs lam and"
                    " no dual_label"
                )
            _sign(self.lam)
            if self.dim % 2 and not self.lambda_rho_matches:
                raise ValueError(
                    "the two signs agree automatically in odd dimension"
                )
        else:
            if self.lam is not None or self.dual_label is None:
                raise ValueError(
                    f"non-conjugate-self-dual symbol {self.label!r} needs a"
                    " dual_label and no lam"
                )
            if self.dual_label == self.label:
                raise ValueError(f"symbol {self.label!r} cannot be its own dual")

    @property
    def sign_usable(self) -> bool:
        return self.conj_self_dual and (self.dim % 2 == 1 or self.lambda_rho_matches)

    def dual_partner(self) -> "UnitaryCuspidalSymbol":
        if self.conj_self_dual:
            raise ValueError(f"{self.label!r} is conjugate-self-dual")
        return UnitaryCuspidalSymbol(
            label=self.dual_label,
            dim=self.dim,
            conj_self_dual=False,
            dual_label=self.label,
        )


def lambda_tensor(lam: int, a: int) -> int:
    """Sign of the S_a-twist: (-1)^(a+1) * lam.

    Twisting by the a-dimensional SL(2) representation preserves the sign
    for a odd and flips it for a even.
    """
    _sign(lam)
    if a < 1:
        raise ValueError(f"a must be a positive integer, got {a}")
    return lam * parity_sign(a + 1)


def unitary_jordan_condition(lambda_rho: int, a: int, n: int) -> bool:
    """Block-side sign condition for U(n): the twisted sign must be
    (-1)^(n+1).  For fixed lambda_rho and n exactly one parity of a
    passes."""
    return lambda_tensor(lambda_rho, a) == parity_sign(n + 1)


@dataclass(frozen=True)
class UnitarySummand:
    """An irreducible summand rho (x) S_a over the quadratic extension."""

    rho: UnitaryCuspidalSymbol
    a: int

    def __post_init__(self) -> None:
        if self.a < 1:
            raise ValueError(f"a must be a positive integer, got {self.a}")

    @property
    def dim(self) -> int:
        return self.rho.dim * self.a

    @property
    def conj_self_dual(self) -> bool:
        return self.rho.conj_self_dual

    @property
    def lam(self) -> int:
        """Parameter-side sign of the summand."""
        if not self.rho.sign_usable:
            raise InvalidUnitaryData(
                f"the sign of {self.rho.label!r} is not usable: even dimension"
                " without the sign-agreement hypothesis"
            )
        return lambda_tensor(self.rho.lam, self.a)

    def sort_key(self) -> tuple[str, int]:
        return (self.rho.label, self.a)

    def dual_partner(self) -> "UnitarySummand":
        return UnitarySummand(self.rho.dual_partner(), self.a)

    def describe(self) -> str:
        return f"{self.rho.label}(x)S_{self.a}"


@dataclass(frozen=True)
class UnitaryJordanData:
    """Jordan blocks of a discrete series of U(rank)."""

    rank: int
    blocks: tuple[UnitarySummand, ...]

    def __post_init__(self) -> None:
        if self.rank < 0:
            raise ValueError(f"rank must be non-negative, got {self.rank}")
        ordered = tuple(sorted(set(self.blocks), key=UnitarySummand.sort_key))
        object.__setattr__(self, "blocks", ordered)

    def total_dimension(self) -> int:
        return sum(b.dim for b in self.blocks)


def validate_unitary_jordan(sigma: UnitaryJordanData) -> ValidationReport:
    """Report violations: non-conjugate-self-dual blocks, unusable signs,
    failed block-side sign conditions, and dimension mismatch."""
    violations: list[Violation] = []
    for block in sigma.blocks:
        if not block.conj_self_dual:
            violations.append(
                Violation(
                    "conjugate-self-dual",
                    f"block {block.describe()} uses a non-conjugate-self-dual"
                    " symbol",
                )
            )
            continue
        if not block.rho.sign_usable:
            violations.append(
                Violation(
                    "sign-hypothesis",
                    f"block {block.describe()} has even dimension and no"
                    " sign-agreement hypothesis",
                )
            )
            continue
        if not unitary_jordan_condition(block.rho.lam, block.a, sigma.rank):
            violations.append(
                Violation(
                    "J-1",
                    f"block {block.describe()} fails the sign condition for"
                    f" U({sigma.rank})",
                )
            )
    total = sigma.total_dimension()
    if total != sigma.rank:
        violations.append(
            Violation(
                "dimension",
                f"blocks fill dimension {total}, U({sigma.rank}) needs"
                f" {sigma.rank}",
            )
        )
    return ValidationReport(tuple(violations))


def merged_summands(
    entries: Sequence[tuple[UnitarySummand, int]]
) -> list[tuple[UnitarySummand, int]]:
    """Merge equal summands, adding multiplicities; sorted by (label, a)."""
    merged: dict[tuple[str, int], int] = {}
    summand_at: dict[tuple[str, int], UnitarySummand] = {}
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
    return [(summand_at[key], merged[key]) for key in sorted(merged)]


def unitary_centralizer(
    entries: Sequence[tuple[UnitarySummand, int]], n: int
) -> CentralizerDescriptor:
    """Centralizer descriptor of a restricted parameter of U(n).

    One factor per inequivalent summand (both members of a conjugate-dual
    pair are listed and each contributes its own factor): GL(m) when not
    conjugate-self-dual, O(m) when the summand sign is (-1)^(n-1), Sp(m)
    when it is (-1)^n.  No determinant condition.
    """
    entries = merged_summands(entries)
    total = sum(summand.dim * mult for summand, mult in entries)
    if total != n:
        raise DimensionMismatch(
            f"summands fill dimension {total}, U({n}) needs {n}"
        )

    factors: list[Factor] = []
    for summand, mult in entries:
        if not summand.conj_self_dual:
            factors.append(Factor(FactorKind.GENERAL_LINEAR, mult, summand.dim))
        elif summand.lam == parity_sign(n - 1):
            factors.append(Factor(FactorKind.FULL_ORTHOGONAL, mult, summand.dim))
        else:
            if mult % 2:
                raise OddMultiplicitySp(
                    f"{summand.describe()} would give a symplectic factor of"
                    f" odd size {mult}"
                )
            factors.append(Factor(FactorKind.SYMPLECTIC, mult, summand.dim))
    return CentralizerDescriptor(tuple(factors), None)


def maximal_levi_phi(
    delta: UnitarySummand, sigma: UnitaryJordanData
) -> list[tuple[UnitarySummand, int]]:
    """Restricted parameter of the representation induced from
    GL(dim delta, E) x U(sigma.rank): the delta summand and its conjugate
    dual (merged when conjugate-self-dual) plus each block once."""
    raw: list[tuple[UnitarySummand, int]] = []
    if delta.conj_self_dual:
        raw.append((delta, 2))
    else:
        raw.append((delta, 1))
        raw.append((delta.dual_partner(), 1))
    for block in sigma.blocks:
        raw.append((block, 1))
    return raw


def unitary_maximal_levi_r_group(
    delta: UnitarySummand, sigma: UnitaryJordanData
) -> VerificationResult:
    """Both R-groups for the maximal Levi Res GL x U and their witness.

    The Knapp-Stein side is 1 exactly when delta is conjugate-self-dual,
    satisfies the block-side sign condition for U(sigma.rank), and is not
    itself a block (the reducible case); otherwise 0.  The Arthur side
    reads even-size full orthogonal factors off the centralizer of the
    assembled parameter.
    """
    validate_unitary_jordan(sigma).require(
        InvalidUnitaryData, "unitary_maximal_levi_r_group"
    )
    if delta.conj_self_dual and not delta.rho.sign_usable:
        raise InvalidUnitaryData(
            f"delta symbol {delta.rho.label!r} has even dimension and no"
            " sign-agreement hypothesis"
        )
    ambient = sigma.rank + 2 * delta.dim

    self_dual = delta.conj_self_dual
    condition = self_dual and unitary_jordan_condition(
        delta.rho.lam, delta.a, sigma.rank
    )
    in_blocks = self_dual and delta in sigma.blocks
    ks_rank = 1 if self_dual and condition and not in_blocks else 0

    phi = maximal_levi_phi(delta, sigma)
    desc = unitary_centralizer(phi, ambient)
    arthur_rank = descriptor_rank(desc).rank

    witness = WitnessRow(
        summand=delta,
        multiplicity=1,
        self_dual=self_dual,
        same_type=condition,
        in_jordan=in_blocks,
        counted=ks_rank == 1,
    )
    return VerificationResult(ks_rank, arthur_rank, (witness,))
