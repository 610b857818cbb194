"""Weight polynomials of basis members, tabulated by (length, largest part).

Each of the four bases gets its table three independent ways: direct
enumeration of members, a two-row-stripping recurrence with explicit initial
values, and a closed form built from base-``Q`` binomial coefficients.  The
three must agree exactly; :func:`cross_check_tables` asserts it entry by
entry.  Everything is exact (no truncation), and although some closed forms
carry inverse powers of ``c`` or ``d``, every fully expanded entry has only
nonnegative exponents because it is a sum of weights of actual partitions.
"""

from __future__ import annotations

from functools import lru_cache

from .partitions import PartitionClass, enumerate_basis_by_shape, omega_exponents
from .qseries import gauss_binomial
from .reporting import CheckReport
from .series import FOUR_PARAM, Series

_ZERO = Series.zero(FOUR_PARAM)
_ONE = Series.one(FOUR_PARAM)


def _require_basis(cls: PartitionClass) -> None:
    if not cls.is_basis:
        raise ValueError(f"{cls} is not a basis tag")


def _mono(coeff: int, a: int = 0, b: int = 0, c: int = 0, d: int = 0) -> Series:
    return Series.monomial(FOUR_PARAM, coeff, (a, b, c, d))


def _q_power(n: int) -> Series:
    return _mono(1, n, n, n, n)


def _c2(m: int) -> int:
    return m * (m - 1) // 2


@lru_cache(maxsize=None)
def table_enumerated(cls: PartitionClass, n: int, h: int) -> Series:
    """Sum of the weights of basis members with length ``n``, largest ``h``."""
    _require_basis(cls)
    return Series.from_terms(
        FOUR_PARAM,
        ((omega_exponents(beta).vector(), 1) for beta in enumerate_basis_by_shape(cls, n, h)),
        None,
    )


@lru_cache(maxsize=None)
def table_recurrence(cls: PartitionClass, n: int, h: int) -> Series:
    """The same table from two-row-stripping recurrences and initial values.

    Stripping the two largest rows of a basis member leaves a basis member of
    the same family; each family's rule records what those two rows carry.
    The short lengths that the stripping argument cannot reach are hardwired.
    """
    _require_basis(cls)
    if n < 0 or n == 0:
        return _ONE if (n == 0 and h == 0) else _ZERO
    if h <= 0:
        return _ZERO
    if cls is PartitionClass.BASIS_G1:
        if n == 1:
            return _mono(1, 1) if h == 1 else (_mono(1, 1, 1) if h == 2 else _ZERO)
        if h % 2 == 0:
            return _mono(1, 0, 1) * table_recurrence(cls, n, h - 1)
        if n == 2 and h == 3:
            return _mono(1, 2, 1, 1, 1)
        half = (h + 1) // 2
        return _mono(1, half, half - 1, half - 1, half - 1) * table_recurrence(
            cls, n - 2, h - 2
        ) + _mono(1, half, half, half - 1, half - 1) * table_recurrence(cls, n - 2, h - 4)
    if cls is PartitionClass.BASIS_G2:
        if h % 2:
            return _ZERO
        if n == 1:
            return _mono(1, 1, 1) if h == 2 else _ZERO
        half = h // 2
        return _mono(1, half, half, half, half - 1) * table_recurrence(
            cls, n - 2, h - 2
        ) + _mono(1, half, half, half - 1, half - 1) * table_recurrence(cls, n - 2, h - 4)
    if cls is PartitionClass.BASIS_P1:
        if n == 1:
            return _mono(1, 1) if h == 1 else (_mono(1, 1, 1) if h == 2 else _ZERO)
        if h % 2:
            return _mono(1, 1) * table_recurrence(cls, n, h - 1)
        if n == 2 and h == 2:
            return _q_power(1)
        half = h // 2
        return _q_power(half) * (
            table_recurrence(cls, n - 2, h) + table_recurrence(cls, n - 2, h - 1)
        )
    if cls is PartitionClass.BASIS_P2:
        if h % 2:
            return _ZERO
        if n == 1:
            return _mono(1, 1, 1) if h == 2 else _ZERO
        if n == 2 and h == 2:
            return _q_power(1) + _mono(1, 1, 1, 1)
        half = h // 2
        return _q_power(half) * table_recurrence(cls, n - 2, h) + _mono(
            1, half, half, half, half - 1
        ) * table_recurrence(cls, n - 2, h - 2)
    raise ValueError(f"no recurrence for {cls}")


@lru_cache(maxsize=None)
def table_closed_form(cls: PartitionClass, n: int, h: int) -> Series:
    """The same table in closed form, one product per parity case of (n, h).

    The binomial factor is computed first; when it vanishes the whole entry
    is zero and the accompanying monomial (whose exponents may be negative in
    intermediate form) is never materialized.
    """
    _require_basis(cls)
    if n == 0:
        return _ONE if h == 0 else _ZERO
    if h <= 0:
        return _ZERO
    if cls is PartitionClass.BASIS_G1:
        if n % 2:
            k = (n + 1) // 2
            if h % 2:
                j = (h + 1) // 2
                gauss = gauss_binomial(k - 1, j - k)
                if gauss.is_zero():
                    return _ZERO
                e = _c2(k) + _c2(j - k + 1)
                return gauss * _mono(1, k + e, j - k + e, e, e)
            j = h // 2
            gauss = gauss_binomial(k - 1, j - k)
            if gauss.is_zero():
                return _ZERO
            e = _c2(k) + _c2(j - k + 1)
            return gauss * _mono(1, k + e, j - k + 1 + e, e, e)
        k = n // 2
        if h % 2:
            j = (h + 1) // 2
            gauss = gauss_binomial(k - 1, j - k - 1)
            if gauss.is_zero():
                return _ZERO
            e = _c2(k + 1) + _c2(j - k)
            return gauss * _mono(1, k + e, j - k - 1 + e, e, e)
        j = h // 2
        gauss = gauss_binomial(k - 1, j - k - 1)
        if gauss.is_zero():
            return _ZERO
        e = _c2(k + 1) + _c2(j - k)
        return gauss * _mono(1, k + e, j - k + e, e, e)
    if cls is PartitionClass.BASIS_G2:
        if h % 2:
            return _ZERO
        j = h // 2
        if n % 2:
            k = (n + 1) // 2
            gauss = gauss_binomial(k - 1, j - k)
            if gauss.is_zero():
                return _ZERO
            e = _c2(k + 1) + _c2(j - k + 1)
            return gauss * _mono(1, e, e, k - j - 1 + e, -k + e)
        k = n // 2
        gauss = gauss_binomial(k, j - k)
        if gauss.is_zero():
            return _ZERO
        e = _c2(k + 1) + _c2(j - k + 1)
        return gauss * _mono(1, e, e, k - j + e, -k + e)
    if cls is PartitionClass.BASIS_P1:
        if n == 1:
            return _mono(1, 1) if h == 1 else (_mono(1, 1, 1) if h == 2 else _ZERO)
        if n % 2 == 0:
            k = n // 2
            if h % 2 == 0:
                j = h // 2
                gauss = gauss_binomial(k - 1, j - 1)
                if gauss.is_zero():
                    return _ZERO
                e = _c2(j) + k
                return gauss * _mono(1, j - 1 + e, e, e, e)
            j = (h + 1) // 2
            gauss = gauss_binomial(k - 1, j - 2)
            if gauss.is_zero():
                return _ZERO
            e = _c2(j - 1) + k
            return gauss * _mono(1, j - 1 + e, e, e, e)
        k = (n - 1) // 2
        if h % 2 == 0:
            j = h // 2
            gauss = gauss_binomial(k - 1, j - 1)
            if gauss.is_zero():
                return _ZERO
            e = _c2(j) + k
            return gauss * (_ONE + _mono(1, 0, 1)) * _mono(1, j + e, e, e, e)
        j = (h + 1) // 2
        gauss = gauss_binomial(k - 1, j - 2)
        if gauss.is_zero():
            return _ZERO
        e = _c2(j - 1) + k
        return gauss * (_ONE + _mono(1, 0, 1)) * _mono(1, j + e, e, e, e)
    if cls is PartitionClass.BASIS_P2:
        if h % 2:
            return _ZERO
        j = h // 2
        if n % 2 == 0:
            k = n // 2
            gauss = gauss_binomial(k - 1, j - 1)
            if gauss.is_zero():
                return _ZERO
            e = _c2(j) + k
            return gauss * (_ONE + _mono(1, 0, 0, 0, -1)) * _mono(1, e, e, e, 1 - j + e)
        k = (n + 1) // 2
        gauss = gauss_binomial(k - 1, j - 1)
        if gauss.is_zero():
            return _ZERO
        e = _c2(j) + k - 1
        return gauss * _mono(1, 1 + e, 1 + e, e, 1 - j + e)
    raise ValueError(f"no closed form for {cls}")


_METHODS = (
    ("enumerated", table_enumerated),
    ("recurrence", table_recurrence),
    ("closed-form", table_closed_form),
)


def cross_check_tables(cls: PartitionClass, n_max: int, h_max: int) -> CheckReport:
    """Three-way agreement over the full (length, largest) grid.

    Beyond equality this asserts that every entry expands with nonnegative
    exponents only, that entries vanish for ``h > 2n`` and (for the two
    even-largest bases) odd ``h``, and that ``B(n, 0) = 0`` for ``n >= 1``.
    """
    _require_basis(cls)
    failures: list[str] = []
    checks = 0
    for n in range(n_max + 1):
        for h in range(h_max + 1):
            checks += 1
            reference = table_enumerated(cls, n, h)
            for method, fn in _METHODS[1:]:
                cmp = fn(cls, n, h).equal_to(reference)
                if not cmp.equal:
                    failures.append(
                        f"n={n} h={h} {method}: at {cmp.exps} got {cmp.left},"
                        f" enumeration has {cmp.right}"
                    )
            if any(e < 0 for exps in reference.terms for e in exps):
                failures.append(f"n={n} h={h}: negative exponent in {reference!r}")
            must_vanish = h > 2 * n or (n >= 1 and h == 0)
            if cls in (PartitionClass.BASIS_G2, PartitionClass.BASIS_P2) and h % 2:
                must_vanish = True
            if must_vanish and not reference.is_zero():
                failures.append(f"n={n} h={h}: expected empty support, got {reference!r}")
    return CheckReport(
        f"basis-tables[{cls.value}]", not failures, checks, tuple(failures)
    )
