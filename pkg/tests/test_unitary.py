"""Tests for the unitary-group machinery: sign arithmetic, Jordan data,
centralizers and the maximal-Levi two-sided check."""

import pytest

from rgroups import (
    FactorKind,
    UnitaryCuspidalSymbol,
    UnitaryJordanData,
    UnitarySummand,
    descriptor_rank,
    lambda_tensor,
    unitary_centralizer,
    unitary_jordan_condition,
    unitary_maximal_levi_r_group,
    validate_unitary_jordan,
    weyl_quotient,
)
from rgroups.errors import (
    DimensionMismatch,
    InvalidUnitaryData,
    OddMultiplicitySp,
)
from rgroups.unitary import maximal_levi_phi, parity_sign

GL = FactorKind.GENERAL_LINEAR
SP = FactorKind.SYMPLECTIC
O = FactorKind.FULL_ORTHOGONAL


def csd(label: str, lam: int, dim: int = 1, matches: bool = True) -> UnitaryCuspidalSymbol:
    return UnitaryCuspidalSymbol(label, dim, True, lam, lambda_rho_matches=matches)


def ncsd(label: str, dim: int = 1) -> UnitaryCuspidalSymbol:
    return UnitaryCuspidalSymbol(label, dim, False, dual_label=label + "t")


def filler_sigma(rank: int, extra: UnitarySummand | None = None) -> UnitaryJordanData:
    """Jordan data of U(rank): the optional block plus 1-dim fillers."""
    blocks = []
    used = 0
    if extra is not None:
        blocks.append(extra)
        used = extra.dim
    lam = parity_sign(rank + 1)
    for i in range(rank - used):
        blocks.append(UnitarySummand(csd(f"f{i}", lam), 1))
    return UnitaryJordanData(rank, tuple(blocks))


# ---------------------------------------------------------------------------
# Sign arithmetic
# ---------------------------------------------------------------------------


def test_lambda_tensor_values():
    assert lambda_tensor(1, 1) == 1
    assert lambda_tensor(1, 2) == -1
    assert lambda_tensor(-1, 4) == 1
    for lam in (1, -1):
        for a in range(1, 11):
            assert lambda_tensor(lam, a) == parity_sign(a + 1) * lam


def test_lambda_tensor_parity_behaviour():
    for lam in (1, -1):
        for a in range(1, 11):
            twice = lambda_tensor(lambda_tensor(lam, a), a)
            assert twice == lam  # identity for a odd, double flip for a even
            if a % 2:
                assert lambda_tensor(lam, a) == lam
            else:
                assert lambda_tensor(lam, a) == -lam


def test_lambda_tensor_input_validation():
    with pytest.raises(ValueError):
        lambda_tensor(0, 1)
    with pytest.raises(ValueError):
        lambda_tensor(1, 0)


def test_unitary_jordan_condition_table():
    for n in range(1, 7):
        lam_matching = parity_sign(n)
        assert unitary_jordan_condition(lam_matching, 2, n)
        assert not unitary_jordan_condition(lam_matching, 1, n)
        assert unitary_jordan_condition(parity_sign(n + 1), 1, n)
        assert not unitary_jordan_condition(parity_sign(n + 1), 2, n)


def test_unitary_jordan_condition_selects_one_parity():
    for lam in (1, -1):
        for n in range(1, 8):
            parities = {
                a % 2 for a in range(1, 9) if unitary_jordan_condition(lam, a, n)
            }
            assert len(parities) == 1


# ---------------------------------------------------------------------------
# Symbols and Jordan data
# ---------------------------------------------------------------------------


def test_unitary_symbol_validation():
    with pytest.raises(ValueError):
        UnitaryCuspidalSymbol("x", 1, True)  # missing lam
    with pytest.raises(ValueError):
        UnitaryCuspidalSymbol("x", 1, True, 2)  # bad sign
    with pytest.raises(ValueError):
        UnitaryCuspidalSymbol("x", 1, False)  # missing dual
    with pytest.raises(ValueError):
        UnitaryCuspidalSymbol("x", 1, False, dual_label="x")
    with pytest.raises(ValueError):
        UnitaryCuspidalSymbol("x", 3, True, 1, lambda_rho_matches=False)
    sym = csd("x", -1, dim=2, matches=False)
    assert not sym.sign_usable
    assert csd("y", 1, dim=2).sign_usable
    partner = ncsd("p", 3).dual_partner()
    assert partner.label == "pt" and partner.dual_label == "p"


def test_unitary_summand_sign():
    s = UnitarySummand(csd("x", 1), 2)
    assert s.dim == 2 and s.lam == -1
    with pytest.raises(InvalidUnitaryData):
        UnitarySummand(csd("x", 1, dim=2, matches=False), 1).lam


def test_validate_unitary_jordan():
    assert validate_unitary_jordan(filler_sigma(3)).ok
    assert validate_unitary_jordan(filler_sigma(0)).ok

    bad_sign = UnitaryJordanData(
        2, (UnitarySummand(csd("x", parity_sign(2), dim=2), 1),)
    )
    report = validate_unitary_jordan(bad_sign)
    assert any(v.rule == "J-1" for v in report.violations)

    bad_dim = UnitaryJordanData(3, (UnitarySummand(csd("x", 1), 1),))
    report = validate_unitary_jordan(bad_dim)
    assert any(v.rule == "dimension" for v in report.violations)

    not_csd = UnitaryJordanData(1, (UnitarySummand(ncsd("p"), 1),))
    report = validate_unitary_jordan(not_csd)
    assert any(v.rule == "conjugate-self-dual" for v in report.violations)

    no_hypothesis = UnitaryJordanData(
        2, (UnitarySummand(csd("x", -1, dim=2, matches=False), 1),)
    )
    report = validate_unitary_jordan(no_hypothesis)
    assert any(v.rule == "sign-hypothesis" for v in report.violations)


# ---------------------------------------------------------------------------
# Centralizers
# ---------------------------------------------------------------------------


def test_unitary_centralizer_pair_case():
    sigma = filler_sigma(3)
    delta = UnitarySummand(ncsd("p"), 1)
    entries = maximal_levi_phi(delta, sigma)
    n = 3 + 2 * delta.dim
    desc = unitary_centralizer(entries, n)
    assert desc.det_constraint is None
    gl_factors = [f for f in desc.factors if f.kind is GL]
    assert len(gl_factors) == 2
    assert all(f.size == 1 for f in gl_factors)
    assert all(f.size == 1 for f in desc.factors)
    assert descriptor_rank(desc).rank == 0


def test_unitary_centralizer_merged_block_gives_odd_orthogonal():
    lam = parity_sign(3 + 1)
    block = UnitarySummand(csd("x", lam), 1)
    sigma = filler_sigma(3, block)
    desc = unitary_centralizer(maximal_levi_phi(block, sigma), 5)
    merged = next(f for f in desc.factors if f.size == 3)
    assert merged.kind is O
    assert descriptor_rank(desc).rank == 0


def test_unitary_centralizer_sp2_case():
    sigma = filler_sigma(3)
    delta = UnitarySummand(csd("x", parity_sign(3)), 1)  # condition fails
    desc = unitary_centralizer(maximal_levi_phi(delta, sigma), 5)
    assert any(f.kind is SP and f.size == 2 for f in desc.factors)


def test_unitary_centralizer_o2_case():
    sigma = filler_sigma(3)
    delta = UnitarySummand(csd("x", parity_sign(3 + 1)), 1)
    desc = unitary_centralizer(maximal_levi_phi(delta, sigma), 5)
    assert any(f.kind is O and f.size == 2 for f in desc.factors)
    assert descriptor_rank(desc).rank == 1


def test_unitary_centralizer_errors():
    with pytest.raises(DimensionMismatch):
        unitary_centralizer([(UnitarySummand(csd("x", 1), 1), 2)], 3)
    with pytest.raises(OddMultiplicitySp):
        unitary_centralizer([(UnitarySummand(csd("x", parity_sign(3)), 1), 3)], 3)


# ---------------------------------------------------------------------------
# Maximal-Levi two-sided check
# ---------------------------------------------------------------------------


def case_of(delta: UnitarySummand, sigma: UnitaryJordanData) -> str:
    if not delta.conj_self_dual:
        return "pair"
    if delta in sigma.blocks:
        return "member"
    if unitary_jordan_condition(delta.rho.lam, delta.a, sigma.rank):
        return "reducible"
    return "irreducible"


EXPECTED = {
    "pair": (0, 0),
    "member": (0, 0),
    "irreducible": (0, 0),
    "reducible": (1, 1),
}


def test_maximal_levi_three_case_table():
    seen = set()
    for lam in (1, -1):
        for a in range(1, 7):
            for d in (1, 2):
                for rank in range(0, 13):
                    ambient = rank + 2 * d * a
                    if ambient > 12:
                        continue
                    for build in ("pair", "csd", "member"):
                        if build == "pair":
                            delta = UnitarySummand(ncsd("z", d), a)
                            sigma = filler_sigma(rank)
                        elif build == "csd":
                            delta = UnitarySummand(csd("z", lam, dim=d), a)
                            sigma = filler_sigma(rank)
                        else:
                            delta = UnitarySummand(csd("z", lam, dim=d), a)
                            if (
                                delta.dim > rank
                                or not unitary_jordan_condition(lam, a, rank)
                            ):
                                continue
                            sigma = filler_sigma(rank, delta)
                        result = unitary_maximal_levi_r_group(delta, sigma)
                        kind = case_of(delta, sigma)
                        seen.add(kind)
                        assert (result.ks_rank, result.arthur_rank) == EXPECTED[kind]
                        assert result.agree
    assert seen == {"pair", "member", "reducible", "irreducible"}


def test_maximal_levi_cases_are_exclusive_and_exhaustive():
    sigma = filler_sigma(3)
    deltas = [
        UnitarySummand(ncsd("p"), 1),
        UnitarySummand(csd("m", parity_sign(4)), 1),
        UnitarySummand(csd("x", parity_sign(3)), 1),
        sigma.blocks[0],
    ]
    kinds = {case_of(d, sigma) for d in deltas}
    assert kinds == {"pair", "reducible", "irreducible", "member"}


def test_maximal_levi_oracle_equivalence():
    for lam in (1, -1):
        for a in (1, 2, 3):
            for rank in (0, 2, 3):
                delta = UnitarySummand(csd("z", lam), a)
                sigma = filler_sigma(rank)
                result = unitary_maximal_levi_r_group(delta, sigma)
                desc = unitary_centralizer(
                    maximal_levi_phi(delta, sigma), rank + 2 * delta.dim
                )
                assert weyl_quotient(desc).rank == result.arthur_rank


def test_maximal_levi_rejects_invalid_sigma():
    bad = UnitaryJordanData(3, (UnitarySummand(csd("x", 1), 1),))
    with pytest.raises(InvalidUnitaryData):
        unitary_maximal_levi_r_group(UnitarySummand(ncsd("p"), 1), bad)


def test_maximal_levi_rejects_unusable_sign():
    sigma = filler_sigma(2)
    delta = UnitarySummand(csd("x", 1, dim=2, matches=False), 1)
    with pytest.raises(InvalidUnitaryData):
        unitary_maximal_levi_r_group(delta, sigma)
