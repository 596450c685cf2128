"""Both R-groups of a discrete series of a standard Levi subgroup.

A discrete series pi of a standard Levi GL(n_1) x ... x GL(n_r) x G_m is
given by segment data delta_i = delta(rho_i, a_i) with multiplicities and
a residual discrete series sigma described by its Jordan blocks.  Two
independent computations are provided: the Knapp-Stein rank counts the
inequivalent self-dual delta_i that induce reducibly against sigma, and
the Arthur rank assembles the parameter of pi and reads the rank off its
classification.  The package's central claim is that the two always
agree; ``verify_theorem`` checks one instance and ``random_instance``
feeds the fuzz harness.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import TYPE_CHECKING

from .centralizer import ElementaryTwoGroup, arthur_r_group
from .errors import BoundsInfeasible, InvalidInducingData
from .jordan import JordanData, is_reducible, jordan_parity_ok, validate_jordan
from .params import (
    CuspidalSymbol,
    DualityType,
    Family,
    GroupSpec,
    Summand,
    canonicalize,
    validate_parameter,
)
from .validation import ValidationReport, Violation

if TYPE_CHECKING:
    from .unitary import UnitarySummand


@dataclass(frozen=True)
class LeviShape:
    """Block shape GL(n_1) x ... x GL(n_r) x G_m inside G_n."""

    gl_blocks: tuple[int, ...]
    residual_rank: int
    group: GroupSpec

    def __post_init__(self) -> None:
        if any(n < 1 for n in self.gl_blocks):
            raise ValueError("GL block sizes must be positive")
        if self.residual_rank < 0:
            raise ValueError("residual rank must be non-negative")
        if sum(self.gl_blocks) + self.residual_rank != self.group.rank:
            raise ValueError("block sizes must add up to the ambient rank")
        if self.group.family is Family.EVEN_ORTHOGONAL and self.residual_rank == 1:
            raise ValueError(
                "standard Levi subgroups of even orthogonal groups have"
                " residual rank other than 1"
            )


@dataclass(frozen=True)
class DeltaFactor:
    """A segment factor delta(rho, a) occurring ``multiplicity`` times."""

    summand: Summand
    multiplicity: int

    def __post_init__(self) -> None:
        if self.multiplicity < 1:
            raise ValueError(
                f"multiplicity must be positive, got {self.multiplicity}"
            )


@dataclass(frozen=True)
class InducingData:
    """The inducing datum: delta factors plus residual Jordan data."""

    deltas: tuple[DeltaFactor, ...]
    sigma: JordanData

    def ambient_group(self) -> GroupSpec:
        gl_rank = sum(d.summand.dim * d.multiplicity for d in self.deltas)
        return GroupSpec(self.sigma.group.family, self.sigma.group.rank + gl_rank)

    def levi_shape(self) -> LeviShape:
        blocks: list[int] = []
        for d in self.deltas:
            blocks.extend([d.summand.dim] * d.multiplicity)
        return LeviShape(tuple(blocks), self.sigma.group.rank, self.ambient_group())


def validate_inducing(pi: InducingData) -> ValidationReport:
    """Report violations: invalid residual data or repeated delta factors."""
    report = validate_jordan(pi.sigma)
    violations = list(report.violations)
    seen: set[tuple[str, int]] = set()
    for d in pi.deltas:
        key = d.summand.sort_key()
        if key in seen:
            violations.append(
                Violation(
                    "repeated-delta",
                    f"delta factor {d.summand.describe()} appears twice;"
                    " equivalent factors must be merged into one multiplicity",
                )
            )
        seen.add(key)
    return ValidationReport(tuple(violations))


def knapp_stein_r_group(pi: InducingData) -> ElementaryTwoGroup:
    """Knapp-Stein R-group rank from reducibility counts.

    Counts the delta factors with self-dual rho that induce reducibly
    against sigma.  Non-self-dual factors never count, and multiplicities
    are irrelevant.
    """
    validate_inducing(pi).require(InvalidInducingData, "knapp_stein_r_group")
    rank = sum(
        1
        for d in pi.deltas
        if d.summand.self_dual
        and is_reducible(d.summand.rho, d.summand.a, pi.sigma)
    )
    return ElementaryTwoGroup(rank)


def parameter_of_induced(pi: InducingData):
    """Assemble the parameter of the induced representation.

    Each non-self-dual delta contributes its dual pair at its
    multiplicity; each self-dual delta contributes twice its multiplicity;
    the residual blocks contribute once each.  A self-dual delta that is
    itself a Jordan block merges to total multiplicity 2m + 1.
    """
    raw: list[tuple[Summand, int]] = []
    for d in pi.deltas:
        if d.summand.self_dual:
            raw.append((d.summand, 2 * d.multiplicity))
        else:
            raw.append((d.summand, d.multiplicity))
            raw.append((d.summand.dual_partner(), d.multiplicity))
    for block in pi.sigma.blocks:
        raw.append((block, 1))
    return canonicalize(raw)


def arthur_r_group_of_induced(pi: InducingData) -> ElementaryTwoGroup:
    """Arthur R-group rank via the assembled parameter's classification.

    A valid inducing datum always assembles to a valid parameter; an
    InvalidParameter propagating from here signals inconsistent input.
    """
    validate_inducing(pi).require(InvalidInducingData, "arthur_r_group_of_induced")
    return arthur_r_group(parameter_of_induced(pi), pi.ambient_group())


@dataclass(frozen=True)
class WitnessRow:
    """Per-delta breakdown of the Knapp-Stein count."""

    summand: "Summand | UnitarySummand"
    multiplicity: int
    self_dual: bool
    same_type: bool
    in_jordan: bool
    counted: bool


@dataclass(frozen=True)
class VerificationResult:
    ks_rank: int
    arthur_rank: int
    witness: tuple[WitnessRow, ...]

    @property
    def agree(self) -> bool:
        return self.ks_rank == self.arthur_rank


def verify_theorem(pi: InducingData) -> VerificationResult:
    """Run both R-group computations independently and compare."""
    validate_inducing(pi).require(InvalidInducingData, "verify_theorem")
    rows = []
    for d in pi.deltas:
        self_dual = d.summand.self_dual
        same_type = self_dual and jordan_parity_ok(
            d.summand.rho, d.summand.a, pi.sigma.group
        )
        in_jordan = d.summand in pi.sigma.blocks
        rows.append(
            WitnessRow(
                summand=d.summand,
                multiplicity=d.multiplicity,
                self_dual=self_dual,
                same_type=same_type,
                in_jordan=in_jordan,
                counted=self_dual and same_type and not in_jordan,
            )
        )
    ks = knapp_stein_r_group(pi)
    arthur = arthur_r_group_of_induced(pi)
    return VerificationResult(ks.rank, arthur.rank, tuple(rows))


@dataclass(frozen=True)
class FuzzBounds:
    max_deltas: int = 5
    max_dim: int = 4
    max_a: int = 5
    max_mult: int = 3
    family: Family = Family.SYMPLECTIC

    def __post_init__(self) -> None:
        if self.family is Family.UNITARY:
            raise ValueError("the fuzzer covers the three classical families")
        if min(self.max_dim, self.max_a, self.max_mult) < 1 or self.max_deltas < 0:
            raise BoundsInfeasible("bounds must be positive")


_MAX_ATTEMPTS = 200


def _draw_self_dual_type(rng: random.Random, bounds: FuzzBounds) -> DualityType:
    # 1-dimensional symplectic symbols do not exist, so respect max_dim.
    if bounds.max_dim < 2:
        return DualityType.ORTHOGONAL
    return rng.choice((DualityType.ORTHOGONAL, DualityType.SYMPLECTIC))


def _draw_dim(rng: random.Random, duality: DualityType, bounds: FuzzBounds) -> int:
    if duality is DualityType.SYMPLECTIC:
        return 2 * rng.randint(1, bounds.max_dim // 2)
    return rng.randint(1, bounds.max_dim)


def _draw_a(rng: random.Random, parity: int, bounds: FuzzBounds) -> int | None:
    """A segment length of the requested parity within bounds, or None."""
    choices = [a for a in range(1, bounds.max_a + 1) if a % 2 == parity]
    return rng.choice(choices) if choices else None


def _block_parity(duality: DualityType, group: GroupSpec, same_type: bool) -> int:
    """Parity of a that makes rho (x) S_a match (or miss) the dual type."""
    matches_when_odd = duality is group.dual_type
    if same_type:
        return 1 if matches_when_odd else 0
    return 0 if matches_when_odd else 1


def _draw_jordan(
    rng: random.Random, bounds: FuzzBounds, fresh: "_LabelSource"
) -> JordanData | None:
    """Propose residual Jordan data; None when the draw came out invalid."""
    family = bounds.family
    blocks: list[Summand] = []
    for _ in range(rng.randint(0, 3)):
        reuse = blocks and rng.random() < 0.3
        if reuse:
            base = rng.choice(blocks)
            rho = base.rho
            parity = base.a % 2
        else:
            duality = _draw_self_dual_type(rng, bounds)
            rho = CuspidalSymbol(fresh.next(), _draw_dim(rng, duality, bounds), duality)
            # group rank is unknown until the blocks are fixed; parity only
            # depends on the family's dual type, so probe with rank 1
            parity = _block_parity(duality, GroupSpec(family, 1), same_type=True)
        a = _draw_a(rng, parity, bounds)
        if a is None:
            continue
        candidate = Summand(rho, a)
        if candidate not in blocks:
            blocks.append(candidate)

    total = sum(b.dim for b in blocks)
    if family is Family.SYMPLECTIC:
        if total % 2 == 0:
            filler = Summand(
                CuspidalSymbol(fresh.next(), 1, DualityType.ORTHOGONAL), 1
            )
            blocks.append(filler)
            total += 1
        rank = (total - 1) // 2
    else:
        if total % 2:
            filler = Summand(
                CuspidalSymbol(fresh.next(), 1, DualityType.ORTHOGONAL), 1
            )
            blocks.append(filler)
            total += 1
        rank = total // 2
    sigma = JordanData(GroupSpec(family, rank), tuple(blocks))
    return sigma if validate_jordan(sigma).ok else None


class _LabelSource:
    """Fresh deterministic labels for generated symbols."""

    def __init__(self) -> None:
        self._counter = 0

    def next(self) -> str:
        self._counter += 1
        return f"g{self._counter:03d}"


def random_instance(seed: int, bounds: FuzzBounds = FuzzBounds()) -> InducingData:
    """Deterministically generate a valid inducing datum from a seed.

    The residual Jordan data is drawn first; delta factors are then drawn
    across all four classification buckets: non-self-dual pairs, Jordan
    blocks of sigma (irreducible inductions), same-type non-blocks
    (reducible inductions), and opposite-type factors.
    """
    rng = random.Random(seed)
    for _ in range(_MAX_ATTEMPTS):
        fresh = _LabelSource()
        sigma = _draw_jordan(rng, bounds, fresh)
        if sigma is None:
            continue
        group = sigma.group
        deltas: list[DeltaFactor] = []
        used: set[tuple[str, int]] = set()
        for _ in range(rng.randint(0, bounds.max_deltas)):
            kind = rng.choice(("pair", "member", "same", "opposite"))
            summand: Summand | None = None
            if kind == "pair":
                dim = rng.randint(1, bounds.max_dim)
                label = fresh.next()
                rho = CuspidalSymbol(
                    label, dim, DualityType.NOT_SELF_DUAL, dual_label=label + "t"
                )
                summand = Summand(rho, rng.randint(1, bounds.max_a))
            elif kind == "member":
                candidates = [
                    b for b in sigma.blocks if b.sort_key() not in used
                ]
                if candidates:
                    summand = rng.choice(candidates)
            else:
                same_type = kind == "same"
                duality = _draw_self_dual_type(rng, bounds)
                parity = _block_parity(duality, group, same_type)
                a = _draw_a(rng, parity, bounds)
                if a is not None:
                    rho = CuspidalSymbol(
                        fresh.next(), _draw_dim(rng, duality, bounds), duality
                    )
                    summand = Summand(rho, a)
            if summand is None or summand.sort_key() in used:
                continue
            used.add(summand.sort_key())
            deltas.append(DeltaFactor(summand, rng.randint(1, bounds.max_mult)))
        pi = InducingData(tuple(deltas), sigma)
        if validate_inducing(pi).ok:
            return pi
    raise BoundsInfeasible(
        f"no valid instance found within {_MAX_ATTEMPTS} attempts for {bounds}"
    )
