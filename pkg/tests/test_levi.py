"""Tests for both sides of the two-sided R-group computation on standard
Levi subgroups, and for the instance fuzzer."""

import pytest

from rgroups import (
    DeltaFactor,
    Family,
    FuzzBounds,
    GroupSpec,
    InducingData,
    JordanData,
    LeviShape,
    Summand,
    arthur_r_group_of_induced,
    knapp_stein_r_group,
    parameter_of_induced,
    random_instance,
    validate_parameter,
    verify_theorem,
)
from rgroups.errors import BoundsInfeasible, InvalidInducingData
from rgroups.levi import validate_inducing

from helpers import CLASSICAL_FAMILIES, orth, pair, sympl


def sp_sigma() -> JordanData:
    """A discrete series of Sp(4, F): blocks of dimensions 1 + 4."""
    return JordanData(
        GroupSpec(Family.SYMPLECTIC, 2),
        (Summand(orth("a"), 1), Summand(sympl("s", 2), 2)),
    )


def test_levi_shape_invariants():
    G = GroupSpec(Family.SYMPLECTIC, 5)
    LeviShape((2, 1), 2, G)
    with pytest.raises(ValueError):
        LeviShape((2, 1), 1, G)  # ranks do not add up
    with pytest.raises(ValueError):
        LeviShape((2,), 1, GroupSpec(Family.EVEN_ORTHOGONAL, 3))  # m = 1


def test_inducing_data_shape_and_ambient():
    pi = InducingData(
        (DeltaFactor(Summand(pair("p", 2), 1), 2),), sp_sigma()
    )
    assert pi.ambient_group() == GroupSpec(Family.SYMPLECTIC, 6)
    assert pi.levi_shape() == LeviShape(
        (2, 2), 2, GroupSpec(Family.SYMPLECTIC, 6)
    )


def test_repeated_delta_is_flagged():
    delta = DeltaFactor(Summand(orth("z", 3), 1), 1)
    pi = InducingData((delta, delta), sp_sigma())
    report = validate_inducing(pi)
    assert any(v.rule == "repeated-delta" for v in report.violations)
    with pytest.raises(InvalidInducingData):
        knapp_stein_r_group(pi)


def test_knapp_stein_counts():
    sigma = sp_sigma()
    # all delta factors non-self-dual: rank 0
    pi = InducingData(
        (
            DeltaFactor(Summand(pair("p", 2), 1), 1),
            DeltaFactor(Summand(pair("q", 1), 3), 2),
        ),
        sigma,
    )
    assert knapp_stein_r_group(pi).rank == 0
    # a single delta that is a Jordan block: irreducible, rank 0
    pi = InducingData((DeltaFactor(Summand(orth("a"), 1), 1),), sigma)
    assert knapp_stein_r_group(pi).rank == 0
    # same type not a block / opposite type / block: only the first counts
    pi = InducingData(
        (
            DeltaFactor(Summand(orth("x", 3), 1), 1),
            DeltaFactor(Summand(sympl("y", 2), 1), 2),
            DeltaFactor(Summand(orth("a"), 1), 3),
        ),
        sigma,
    )
    assert knapp_stein_r_group(pi).rank == 1


def test_arthur_side_merges_multiplicities():
    sigma = sp_sigma()
    # self-dual same-type delta not a block: multiplicity doubles to 2m
    pi = InducingData((DeltaFactor(Summand(orth("x", 3), 1), 1),), sigma)
    phi = parameter_of_induced(pi)
    entry = next(e for e in phi.entries if e.summand.rho.label == "x")
    assert entry.multiplicity == 2
    assert arthur_r_group_of_induced(pi).rank == 1
    # a block as delta merges to 2m + 1
    pi = InducingData((DeltaFactor(Summand(orth("a"), 1), 2),), sigma)
    phi = parameter_of_induced(pi)
    entry = next(e for e in phi.entries if e.summand.rho.label == "a")
    assert entry.multiplicity == 5
    assert arthur_r_group_of_induced(pi).rank == 0
    # non-self-dual deltas assemble to a dual pair and contribute nothing
    pi = InducingData((DeltaFactor(Summand(pair("p", 2), 1), 3),), sigma)
    phi = parameter_of_induced(pi)
    assert phi.entries[0 if phi.entries[0].is_dual_pair else 1].multiplicity == 3
    assert arthur_r_group_of_induced(pi).rank == 0


def test_assembled_parameter_is_valid():
    pi = InducingData(
        (
            DeltaFactor(Summand(orth("x", 3), 1), 1),
            DeltaFactor(Summand(sympl("y", 2), 1), 2),
            DeltaFactor(Summand(pair("p", 2), 2), 1),
        ),
        sp_sigma(),
    )
    phi = parameter_of_induced(pi)
    assert validate_parameter(phi, pi.ambient_group()).ok


def test_verify_theorem_mixed_instance():
    sigma = sp_sigma()
    pi = InducingData(
        (
            DeltaFactor(Summand(orth("x", 3), 1), 1),
            DeltaFactor(Summand(sympl("y", 2), 1), 2),
            DeltaFactor(Summand(orth("a"), 1), 3),
        ),
        sigma,
    )
    result = verify_theorem(pi)
    assert result.agree
    assert result.ks_rank == result.arthur_rank == 1
    counted = [row for row in result.witness if row.counted]
    assert len(counted) == 1 and counted[0].summand.rho.label == "x"
    member = next(r for r in result.witness if r.summand.rho.label == "a")
    assert member.self_dual and member.same_type and member.in_jordan
    opposite = next(r for r in result.witness if r.summand.rho.label == "y")
    assert opposite.self_dual and not opposite.same_type


def test_pure_sigma_instance_has_trivial_r_groups():
    pi = InducingData((), sp_sigma())
    result = verify_theorem(pi)
    assert result.ks_rank == result.arthur_rank == 0


def test_witness_rows_match_counting_rule():
    for seed in range(200):
        pi = random_instance(seed)
        result = verify_theorem(pi)
        assert result.ks_rank == sum(row.counted for row in result.witness)
        for row in result.witness:
            assert row.counted == (
                row.self_dual and row.same_type and not row.in_jordan
            )


def test_random_instance_is_deterministic():
    bounds = FuzzBounds(family=Family.EVEN_ORTHOGONAL)
    assert random_instance(123, bounds) == random_instance(123, bounds)


def test_random_instance_always_validates():
    for family in CLASSICAL_FAMILIES:
        bounds = FuzzBounds(family=family)
        for seed in range(100):
            pi = random_instance(seed, bounds)
            assert validate_inducing(pi).ok
            assert pi.sigma.group.family is family


def test_random_instance_covers_all_witness_kinds():
    seen = set()
    for seed in range(300):
        result = verify_theorem(random_instance(seed))
        for row in result.witness:
            if not row.self_dual:
                seen.add("pair")
            elif not row.same_type:
                seen.add("opposite")
            elif row.in_jordan:
                seen.add("member")
            else:
                seen.add("reducible")
    assert seen == {"pair", "opposite", "member", "reducible"}


def test_random_instance_max_deltas_zero():
    bounds = FuzzBounds(max_deltas=0)
    pi = random_instance(7, bounds)
    assert pi.deltas == ()
    result = verify_theorem(pi)
    assert result.ks_rank == result.arthur_rank == 0


def test_infeasible_bounds():
    with pytest.raises(BoundsInfeasible):
        FuzzBounds(max_a=0)
    with pytest.raises(BoundsInfeasible):
        FuzzBounds(max_dim=0)
    with pytest.raises(ValueError):
        FuzzBounds(family=Family.UNITARY)


def test_multiplicity_invariance_spot_checks():
    for seed in range(50):
        pi = random_instance(seed)
        base = verify_theorem(pi)
        for index in range(len(pi.deltas)):
            for mult in (1, 2, 3):
                mutated = InducingData(
                    tuple(
                        DeltaFactor(d.summand, mult if i == index else d.multiplicity)
                        for i, d in enumerate(pi.deltas)
                    ),
                    pi.sigma,
                )
                result = verify_theorem(mutated)
                assert result.ks_rank == base.ks_rank
                assert result.arthur_rank == base.arthur_rank


def test_adding_non_self_dual_delta_changes_nothing():
    for seed in range(50):
        pi = random_instance(seed)
        base = verify_theorem(pi)
        extra = DeltaFactor(Summand(pair("zzz-extra", 2), 4), 2)
        grown = InducingData(pi.deltas + (extra,), pi.sigma)
        result = verify_theorem(grown)
        assert (result.ks_rank, result.arthur_rank) == (
            base.ks_rank,
            base.arthur_rank,
        )
        assert result.agree
