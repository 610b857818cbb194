"""Skeleton-plus-padding structure of the parity-constrained classes.

Every member of one of the four constrained classes splits uniquely into a
basis member ("skeleton") of the same length plus a weakly decreasing stack of
even parts ("padding").  The split is computed bottom-up: the last skeleton
row is 1 or 2, matching the parity of the last part, and each higher row
exceeds the one below by the single admissible gap that matches the parity of
the corresponding part.  This module implements the split, its inverse, an
exhaustive verifier, and the two generating-function assemblies the structure
yields (single-variable counts and the four-parameter weight).
"""

from __future__ import annotations

import dataclasses

from .partitions import (
    Partition,
    PartitionClass,
    basis_members_of_length,
    enumerate_partitions,
    is_member,
    omega_exponents,
)
from .reporting import CheckReport
from .series import FOUR_PARAM, SINGLE_Q, Series, SeriesRing


class SipError(Exception):
    """Base class for structural decomposition failures."""


class NotInClass(SipError):
    """The partition is not a member of the requested class or basis."""


class LengthViolation(SipError):
    """The padding has more rows than the skeleton."""


class NonEvenMu(SipError):
    """The padding contains a part the modulus does not divide."""


class InternalError(SipError):
    """A derived skeleton/padding pair failed its own invariants."""


_DECOMPOSABLE = (
    PartitionClass.G1,
    PartitionClass.G2,
    PartitionClass.P1,
    PartitionClass.P2,
)


def _require_decomposable(cls: PartitionClass) -> None:
    if cls not in _DECOMPOSABLE:
        raise ValueError(f"no basis structure for class {cls.value!r}")


@dataclasses.dataclass(frozen=True)
class SipDecomposition:
    """A partition split as ``lam[i] = beta[i] + mu[i]`` (``mu`` zero-padded)."""

    beta: Partition
    mu: Partition
    modulus: int = 2


def decompose(cls: PartitionClass, lam: Partition) -> SipDecomposition:
    """Split a class member into its skeleton and even padding.

    The skeleton is forced row by row from the bottom, so the result is the
    unique valid split; :class:`InternalError` therefore signals a bug in the
    basis definition rather than bad input.
    """
    _require_decomposable(cls)
    if not is_member(cls, lam):
        raise NotInClass(f"{lam!r} is not in class {cls.value!r}")
    if not lam:
        return SipDecomposition(Partition(), Partition())
    n = len(lam)
    beta = [0] * n
    beta[-1] = 1 if lam[-1] % 2 else 2
    gaps = cls.gaps
    for i in range(n - 2, -1, -1):
        matches = [beta[i + 1] + g for g in gaps if (beta[i + 1] + g) % 2 == lam[i] % 2]
        if len(matches) != 1:
            raise InternalError(f"gap choice not unique at row {i + 1} of {lam!r}")
        beta[i] = matches[0]
    diffs = [a - b for a, b in zip(lam, beta)]
    if any(d < 0 for d in diffs):
        raise InternalError(f"skeleton exceeds {lam!r} at some row")
    if any(d % 2 for d in diffs):
        raise InternalError(f"padding for {lam!r} has an odd part")
    if any(diffs[i] < diffs[i + 1] for i in range(n - 1)):
        raise InternalError(f"padding for {lam!r} is not weakly decreasing")
    while diffs and diffs[-1] == 0:
        diffs.pop()
    beta_p = Partition(tuple(beta))
    if not is_member(cls.basis, beta_p):
        raise InternalError(f"derived skeleton {beta_p!r} is outside the basis")
    return SipDecomposition(beta_p, Partition(tuple(diffs)))


def compose(cls: PartitionClass, beta: Partition, mu: Partition) -> Partition:
    """Rebuild the class member from a skeleton and padding (inverse of
    :func:`decompose`)."""
    _require_decomposable(cls)
    if not is_member(cls.basis, beta):
        raise NotInClass(f"{beta!r} is not in the basis of {cls.value!r}")
    if len(mu) > len(beta):
        raise LengthViolation(f"padding {mu!r} is longer than skeleton {beta!r}")
    if any(p % 2 for p in mu):
        raise NonEvenMu(f"padding {mu!r} has an odd part")
    parts = [b + (mu[i] if i < len(mu) else 0) for i, b in enumerate(beta)]
    lam = Partition(tuple(parts))
    if not is_member(cls, lam):
        raise InternalError(f"composed partition {lam!r} left class {cls.value!r}")
    return lam


def _split_count(cls: PartitionClass, lam: Partition) -> int:
    """Number of valid (skeleton, padding) splits of ``lam`` — must be 1."""
    count = 0
    for beta in basis_members_of_length(cls.basis, len(lam)):
        diffs = [a - b for a, b in zip(lam, beta)]
        if any(d < 0 or d % 2 for d in diffs):
            continue
        if any(diffs[i] < diffs[i + 1] for i in range(len(diffs) - 1)):
            continue
        count += 1
    return count


def verify_sip_property(
    cls: PartitionClass,
    basis: PartitionClass,
    modulus: int,
    weight_max: int,
) -> CheckReport:
    """Round-trip and uniqueness of the split for every member up to a weight.

    Uniqueness is checked independently of :func:`decompose` by re-composing
    every basis member of matching length and counting the valid splits.
    """
    _require_decomposable(cls)
    if basis is not cls.basis:
        raise ValueError(f"{basis} is not the basis of {cls.value!r}")
    if modulus != 2:
        raise ValueError("the shipped bases use modulus 2")
    failures: list[str] = []
    checks = 0
    for w in range(weight_max + 1):
        for lam in enumerate_partitions(cls, w):
            checks += 1
            dec = decompose(cls, lam)
            if len(dec.beta) != len(lam):
                failures.append(f"{lam!r}: skeleton length {len(dec.beta)} != {len(lam)}")
            back = compose(cls, dec.beta, dec.mu)
            if back != lam:
                failures.append(f"{lam!r}: round-trip gave {back!r}")
            n_splits = _split_count(cls, lam)
            if n_splits != 1:
                failures.append(f"{lam!r}: {n_splits} valid splits, expected 1")
    return CheckReport(f"sip-property[{cls.value}]", not failures, checks, tuple(failures))


def _geometric_inverse(ring: SeriesRing, exps: tuple[int, ...], trunc: int) -> Series:
    """``1 / (1 - monomial)`` to the given order."""
    return (Series.one(ring) - Series.monomial(ring, 1, exps)).invert_unit(trunc)


def sip_gf_single_variable(
    cls: PartitionClass,
    basis: PartitionClass,
    modulus: int,
    weight_max: int,
) -> CheckReport:
    """Compare class counts with the basis-driven series, weight by weight.

    The series side is ``sum_n B_n(q) / prod_{i=1..n}(1 - q^{modulus*i})``
    where ``B_n`` collects ``q^|beta|`` over basis members of length ``n``;
    every basis member of length ``n`` has weight at least ``n``, so lengths
    beyond ``weight_max`` cannot contribute.
    """
    _require_decomposable(cls)
    if basis is not cls.basis:
        raise ValueError(f"{basis} is not the basis of {cls.value!r}")
    if modulus < 1:
        raise ValueError("modulus must be positive")
    n_max = weight_max
    series_side = Series.zero(SINGLE_Q, weight_max)
    inv = Series.one(SINGLE_Q, weight_max)
    for n in range(n_max + 1):
        if n > 0 and modulus * n <= weight_max:
            inv = inv * _geometric_inverse(SINGLE_Q, (modulus * n,), weight_max)
        weights = [beta.weight for beta in basis_members_of_length(basis, n)]
        if not weights:
            continue
        poly = Series.from_terms(SINGLE_Q, (((w,), 1) for w in weights), weight_max)
        series_side = series_side + poly * inv
    failures: list[str] = []
    for w in range(weight_max + 1):
        counted = len(enumerate_partitions(cls, w))
        from_series = series_side.coefficient((w,))
        if counted != from_series:
            failures.append(f"weight {w}: enumerated {counted} != series {from_series}")
    return CheckReport(
        f"sip-gf-single[{cls.value}]", not failures, weight_max + 1, tuple(failures)
    )


def basis_weight_poly(cls: PartitionClass, length: int) -> Series:
    """Four-parameter weight polynomial of all basis members of one length."""
    if not cls.is_basis:
        raise ValueError(f"{cls} is not a basis tag")
    return Series.from_terms(
        FOUR_PARAM,
        ((omega_exponents(beta).vector(), 1) for beta in basis_members_of_length(cls, length)),
        None,
    )


def sip_gf_four_parameter(cls: PartitionClass, trunc: int) -> Series:
    """Assemble the class's four-parameter weight series from its basis.

    Lengths are summed with their forced denominators: a length-``2n`` block
    contributes ``B_{2n} / ((ab;Q)_n (Q;Q)_n)`` and a length-``2n+1`` block
    ``B_{2n+1} / ((ab;Q)_{n+1} (Q;Q)_n)``, with ``Q = abcd``.  Since a basis
    member of length ``m`` has total degree at least ``m``, lengths beyond
    ``trunc`` cannot contribute.
    """
    _require_decomposable(cls)
    if trunc < 0:
        raise ValueError("trunc must be nonnegative")
    total = Series.zero(FOUR_PARAM, trunc)
    inv = Series.one(FOUR_PARAM, trunc)
    for m in range(trunc + 1):
        if m > 0:
            if m % 2:
                k = (m - 1) // 2
                exps = (1 + k, 1 + k, k, k)
            else:
                k = m // 2
                exps = (k, k, k, k)
            if sum(exps) <= trunc:
                inv = inv * _geometric_inverse(FOUR_PARAM, exps, trunc)
        poly = basis_weight_poly(cls.basis, m).truncate(trunc)
        if poly.is_zero():
            continue
        total = total + poly * inv
    return total


def check_sip_gf_four_parameter(cls: PartitionClass, trunc: int) -> CheckReport:
    """Slice-by-slice comparison of the assembly against direct enumeration."""
    assembled = sip_gf_four_parameter(cls, trunc)
    enumerated = Series.from_terms(
        FOUR_PARAM,
        (
            (omega_exponents(lam).vector(), 1)
            for w in range(trunc + 1)
            for lam in enumerate_partitions(cls, w)
        ),
        trunc,
        complete=False,
    )
    failures: list[str] = []
    for d in range(trunc + 1):
        left = assembled.degree_slice(d)
        right = enumerated.degree_slice(d)
        if left != right:
            failures.append(f"degree {d}: assembly {left} != enumeration {right}")
    return CheckReport(
        f"sip-gf-four[{cls.value}]", not failures, trunc + 1, tuple(failures)
    )
