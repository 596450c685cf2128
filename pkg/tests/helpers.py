"""Shared builders for the test suite."""

from __future__ import annotations

from itertools import combinations_with_replacement
from typing import Iterator

from rgroups import (
    CuspidalSymbol,
    DualityType,
    Family,
    GroupSpec,
    Parameter,
    Summand,
    canonicalize,
)

CLASSICAL_FAMILIES = (
    Family.SYMPLECTIC,
    Family.ODD_ORTHOGONAL,
    Family.EVEN_ORTHOGONAL,
)


def orth(label: str, dim: int = 1) -> CuspidalSymbol:
    return CuspidalSymbol(label, dim, DualityType.ORTHOGONAL)


def sympl(label: str, dim: int = 2) -> CuspidalSymbol:
    return CuspidalSymbol(label, dim, DualityType.SYMPLECTIC)


def pair(label: str, dim: int = 1) -> CuspidalSymbol:
    return CuspidalSymbol(label, dim, DualityType.NOT_SELF_DUAL, label + "t")


def self_dual_symbol(label: str, duality: DualityType, dim: int) -> CuspidalSymbol:
    return CuspidalSymbol(label, dim, duality)


def opposite_of(duality: DualityType) -> DualityType:
    if duality is DualityType.ORTHOGONAL:
        return DualityType.SYMPLECTIC
    if duality is DualityType.SYMPLECTIC:
        return DualityType.ORTHOGONAL
    raise ValueError(duality)


EntryTemplate = tuple[str, int, int]  # (kind, summand dim, multiplicity)


def entry_alphabet(
    family: Family, max_dim: int = 5, max_mult: int = 4
) -> list[EntryTemplate]:
    """All entry shapes (dual pair / same type / opposite type) allowed by
    the family's dual type within the given dimension and multiplicity
    bounds.  Symplectic-type summands only exist in even dimension, and
    opposite-type entries need even multiplicity."""
    dual = GroupSpec(family, 1).dual_type
    opp = opposite_of(dual)
    templates: list[EntryTemplate] = []
    for dim in range(1, max_dim + 1):
        for mult in range(1, max_mult + 1):
            templates.append(("pair", dim, mult))
    for dim in range(1, max_dim + 1):
        if dual is DualityType.SYMPLECTIC and dim % 2:
            continue
        for mult in range(1, max_mult + 1):
            templates.append(("same", dim, mult))
    for dim in range(1, max_dim + 1):
        if opp is DualityType.SYMPLECTIC and dim % 2:
            continue
        for mult in range(2, max_mult + 1, 2):
            templates.append(("opp", dim, mult))
    return templates


def realize_parameter(family: Family, combo: tuple[EntryTemplate, ...]) -> Parameter:
    """Concrete parameter for a multiset of entry templates, realized with
    fresh labels and trivial segment length a = 1."""
    dual = GroupSpec(family, 1).dual_type
    opp = opposite_of(dual)
    entries: list[tuple[Summand, int]] = []
    for idx, (kind, dim, mult) in enumerate(combo):
        label = f"s{idx}"
        if kind == "pair":
            rho = CuspidalSymbol(label, dim, DualityType.NOT_SELF_DUAL, label + "t")
            entries.append((Summand(rho, 1), mult))
            entries.append((Summand(rho.dual_partner(), 1), mult))
        else:
            rho = CuspidalSymbol(label, dim, dual if kind == "same" else opp)
            entries.append((Summand(rho, 1), mult))
    return canonicalize(entries)


def exhaustive_valid_parameters(
    family: Family,
    max_entries: int = 4,
    max_dim: int = 5,
    max_mult: int = 4,
) -> Iterator[tuple[Parameter, GroupSpec]]:
    """Every valid parameter with at most ``max_entries`` canonical
    entries, up to relabeling: the classification, centralizer and both
    R-group computations depend only on each entry's duality type,
    dimension and multiplicity, so enumerating those templates exhausts
    the semantic space."""
    templates = entry_alphabet(family, max_dim, max_mult)
    for size in range(1, max_entries + 1):
        for combo in combinations_with_replacement(templates, size):
            total = sum(
                (2 if kind == "pair" else 1) * dim * mult
                for kind, dim, mult in combo
            )
            if family is Family.SYMPLECTIC:
                if total % 2 == 0:
                    continue
                rank = (total - 1) // 2
            else:
                if total % 2 or total < 2:
                    continue
                rank = total // 2
            yield realize_parameter(family, combo), GroupSpec(family, rank)
