"""Catalog of the series = product identities and their exact verifier.

Each :class:`TheoremSpec` packages up to four independently computed sides:

* ``combinatorial`` — a sum of partition weights over a class, optionally
  pushed through a variable substitution;
* ``series`` — one or two summed families of Pochhammer-quotient terms;
* ``product`` — an infinite product, truncated;
* ``product-alt`` — an equivalent rewriting of the product when the catalog
  records one (different bases, same value).

:func:`verify` expands every available side to the requested truncation and
demands exact agreement pairwise.  Series summation stops at the first index
whose term provably exceeds the truncation in minimum degree; the bound uses
the numerator's most negative achievable degree, so early terms with inverse
variables are never dropped.
"""

from __future__ import annotations

import dataclasses
from typing import Callable

from .partitions import (
    PartitionClass,
    conjugate,
    enumerate_partitions,
    omega_exponents,
    stats,
)
from .qseries import pochhammer_finite, pochhammer_infinite
from .reporting import CheckReport
from .series import FOUR_PARAM, XZQ, Series, SeriesRing, SubstitutionMap


class UnknownTheorem(Exception):
    """No registered identity has the requested key."""


# Substitutions that collapse the four-variable weight onto marked statistics:
# per partition, the image collects x^(odd parts) z^(alternating sum) q^(weight),
# with the x- or z-mark dropped (or the z-mark flipped into the
# odd-index/even-index imbalance) depending on the map.
OMEGA_TO_XZQ = SubstitutionMap(
    FOUR_PARAM, XZQ, ((1, 1, 1), (-1, 1, 1), (1, -1, 1), (-1, -1, 1))
)
OMEGA_TO_XQ = SubstitutionMap(
    FOUR_PARAM, XZQ, ((1, 0, 1), (-1, 0, 1), (1, 0, 1), (-1, 0, 1))
)
OMEGA_TO_ZQ = SubstitutionMap(
    FOUR_PARAM, XZQ, ((0, 1, 1), (0, 1, 1), (0, -1, 1), (0, -1, 1))
)
OMEGA_TO_BG = SubstitutionMap(
    FOUR_PARAM, XZQ, ((0, 1, 1), (0, -1, 1), (0, -1, 1), (0, 1, 1))
)

_MAPS = {"xzq": OMEGA_TO_XZQ, "xq": OMEGA_TO_XQ, "zq": OMEGA_TO_ZQ, "bg": OMEGA_TO_BG}


@dataclasses.dataclass(frozen=True)
class PochFamily:
    """``prod_{i=0}^{m-1} (1 - sign * arg * base^i)`` with ``m`` linear in n."""

    sign: int
    arg_exps: tuple[int, ...]
    base_exps: tuple[int, ...]
    count: tuple[int, int]

    def factors(self, n: int) -> int:
        return self.count[0] * n + self.count[1]


@dataclasses.dataclass(frozen=True)
class SumFamily:
    """One summed family: monomial prefactor times a Pochhammer quotient."""

    prefactor: Callable[[int], tuple[int, ...]]
    numerator: PochFamily | None
    denominators: tuple[PochFamily, ...]


@dataclasses.dataclass(frozen=True)
class ProductFactor:
    sign: int
    arg_exps: tuple[int, ...]
    base_exps: tuple[int, ...]
    inverted: bool = False


@dataclasses.dataclass(frozen=True)
class TheoremSpec:
    key: str
    description: str
    ring: SeriesRing
    partition_class: PartitionClass | None
    weight_map: SubstitutionMap | None
    series: tuple[SumFamily, ...]
    product: tuple[ProductFactor, ...]
    product_alt: tuple[ProductFactor, ...] | None = None


def _map_exps(smap: SubstitutionMap, exps: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * smap.target.nvars
    for e, img in zip(exps, smap.images):
        for i, v in enumerate(img):
            out[i] += e * v
    return tuple(out)


def combinatorial_side(spec: TheoremSpec, trunc: int) -> Series:
    """Sum of (possibly substituted) weights over the statement's class."""
    if spec.partition_class is None:
        raise ValueError(f"{spec.key} has no combinatorial side")
    items = []
    for w in range(trunc + 1):
        for lam in enumerate_partitions(spec.partition_class, w):
            v = omega_exponents(lam).vector()
            items.append((v if spec.weight_map is None else _map_exps(spec.weight_map, v), 1))
    return Series.from_terms(spec.ring, items, trunc, complete=False)


def _tail_floor(ring: SeriesRing, num: PochFamily | None) -> int:
    """A lower bound on the degree any numerator term can subtract.

    The numerator's terms pick subsets of factors; choosing the ``k`` lowest
    indices gives degree ``k * deg(arg) + deg(base) * k(k-1)/2``, which is
    minimized over ``k`` here.  Nonnegative-degree arguments contribute
    nothing below zero.
    """
    if num is None:
        return 0
    arg_deg = ring.degree(num.arg_exps)
    if arg_deg >= 0:
        return 0
    base_deg = ring.degree(num.base_exps)
    best = 0
    k = 1
    while True:
        best = min(best, k * arg_deg + base_deg * k * (k - 1) // 2)
        if arg_deg + k * base_deg >= 0:
            return best
        k += 1


def _sum_family(
    ring: SeriesRing,
    fam: SumFamily,
    trunc: int,
    n_limit: int | None = None,
    nonneg_failures: list[str] | None = None,
) -> Series:
    """Sum the family's terms until they provably exceed the truncation.

    Prefactor degrees must be nondecreasing in ``n`` (true for every
    registered family); with ``n_limit`` the sum is cut off there instead,
    giving a partial sum.
    """
    total = Series.zero(ring, trunc)
    inverses = [Series.one(ring, trunc) for _ in fam.denominators]
    built = [0] * len(fam.denominators)
    floor = _tail_floor(ring, fam.numerator)
    n = 0
    while True:
        if n_limit is not None and n > n_limit:
            break
        pref = fam.prefactor(n)
        if n_limit is None and ring.degree(pref) + floor > trunc:
            break
        term = Series.monomial(ring, 1, pref)
        if fam.numerator is not None:
            arg = Series.monomial(ring, fam.numerator.sign, fam.numerator.arg_exps)
            base = Series.monomial(ring, 1, fam.numerator.base_exps)
            term = term * pochhammer_finite(arg, base, fam.numerator.factors(n), None)
        term = term.truncate(trunc)
        for j, den in enumerate(fam.denominators):
            want = den.factors(n)
            while built[j] < want:
                factor = Series.one(ring) - Series.monomial(
                    ring,
                    den.sign,
                    tuple(a + built[j] * b for a, b in zip(den.arg_exps, den.base_exps)),
                )
                inverses[j] = inverses[j] * factor.invert_unit(trunc)
                built[j] += 1
            term = term * inverses[j]
        if nonneg_failures is not None and any(
            e < 0 for exps in term.terms for e in exps
        ):
            nonneg_failures.append(f"summand n={n}: negative exponent in expansion")
        total = total + term
        n += 1
    return total


def series_side(
    spec: TheoremSpec,
    trunc: int,
    nonneg_failures: list[str] | None = None,
) -> Series:
    if not spec.series:
        raise ValueError(f"{spec.key} has no series side")
    total = Series.zero(spec.ring, trunc)
    for fam in spec.series:
        total = total + _sum_family(
            spec.ring,
            fam,
            trunc,
            nonneg_failures=nonneg_failures if spec.ring is FOUR_PARAM else None,
        )
    return total


def product_side(spec: TheoremSpec, trunc: int, alt: bool = False) -> Series:
    factors = spec.product_alt if alt else spec.product
    if factors is None:
        raise ValueError(f"{spec.key} has no alternate product")
    out = Series.one(spec.ring, trunc)
    for f in factors:
        arg = Series.monomial(spec.ring, f.sign, f.arg_exps)
        base = Series.monomial(spec.ring, 1, f.base_exps)
        p = pochhammer_infinite(arg, base, trunc)
        out = out * (p.invert_unit(trunc) if f.inverted else p)
    return out


def _slice_text(s: Series, degree: int) -> str:
    return str(sorted(s.degree_slice(degree).items()))


def verify_spec(spec: TheoremSpec, trunc: int) -> CheckReport:
    """Expand every available side to ``trunc`` and compare them pairwise."""
    if trunc < 0:
        raise ValueError("trunc must be nonnegative")
    failures: list[str] = []
    sides: list[tuple[str, Series]] = []
    checks = 0
    if spec.partition_class is not None:
        sides.append(("combinatorial", combinatorial_side(spec, trunc)))
    if spec.series:
        checks += 1  # the summand nonnegativity assertion
        sides.append(("series", series_side(spec, trunc, nonneg_failures=failures)))
    sides.append(("product", product_side(spec, trunc)))
    if spec.product_alt is not None:
        sides.append(("product-alt", product_side(spec, trunc, alt=True)))
    for i in range(len(sides)):
        for j in range(i + 1, len(sides)):
            checks += 1
            (ln, ls), (rn, rs) = sides[i], sides[j]
            cmp = ls.equal_to(rs)
            if not cmp.equal:
                d = spec.ring.degree(cmp.exps)
                failures.append(
                    f"{ln} != {rn}: first difference at {cmp.exps}"
                    f" ({cmp.left} vs {cmp.right}); degree-{d} slices"
                    f" {_slice_text(ls, d)} vs {_slice_text(rs, d)}"
                )
    return CheckReport(f"identity[{spec.key}]", not failures, checks, tuple(failures))


# -- the catalog ---------------------------------------------------------------

_Q4 = (1, 1, 1, 1)
_AB = (1, 1, 0, 0)
_DEN_AB = PochFamily(1, _AB, _Q4, (1, 0))
_DEN_AB1 = PochFamily(1, _AB, _Q4, (1, 1))
_DEN_Q = PochFamily(1, _Q4, _Q4, (1, 0))
# Three-variable denominators: z²q² and q⁴ in base q⁴, q² in base q².
_DEN_ZZQQ = PochFamily(1, (0, 2, 2), (0, 0, 4), (1, 0))
_DEN_Q4 = PochFamily(1, (0, 0, 4), (0, 0, 4), (1, 0))
_DEN_QQ_2N = PochFamily(1, (0, 0, 2), (0, 0, 2), (2, 0))
_DEN_QQ_2N1 = PochFamily(1, (0, 0, 2), (0, 0, 2), (2, 1))


def _tri(n: int) -> int:
    return n * (n - 1) // 2


def _tri1(n: int) -> int:
    return n * (n + 1) // 2


def _build_registry() -> tuple[TheoremSpec, ...]:
    specs = [
        TheoremSpec(
            key="g1-four",
            description=(
                "distinct parts, even-indexed parts even: four-parameter weight"
                " series and product"
            ),
            ring=FOUR_PARAM,
            partition_class=PartitionClass.G1,
            weight_map=None,
            series=(
                SumFamily(
                    lambda n: (n + _tri(n), _tri(n), _tri(n), _tri(n)),
                    PochFamily(-1, (0, 1, 0, 0), _Q4, (1, 0)),
                    (_DEN_AB, _DEN_Q),
                ),
            ),
            product=(
                ProductFactor(-1, (1, 0, 0, 0), _Q4),
                ProductFactor(1, _AB, _Q4, inverted=True),
            ),
        ),
        TheoremSpec(
            key="g2-four",
            description=(
                "distinct parts, odd-indexed parts even: four-parameter weight"
                " series and product"
            ),
            ring=FOUR_PARAM,
            partition_class=PartitionClass.G2,
            weight_map=None,
            series=(
                SumFamily(
                    lambda n: (_tri1(n), _tri1(n), _tri1(n), _tri1(n) - n),
                    PochFamily(-1, (0, 0, -1, 0), _Q4, (1, 0)),
                    (_DEN_AB, _DEN_Q),
                ),
            ),
            product=(
                ProductFactor(-1, (1, 1, 1, 0), _Q4),
                ProductFactor(1, _AB, _Q4, inverted=True),
            ),
        ),
        TheoremSpec(
            key="p1-four",
            description=(
                "even-indexed parts even: four-parameter weight series (two"
                " families) and product"
            ),
            ring=FOUR_PARAM,
            partition_class=PartitionClass.P1,
            weight_map=None,
            series=(
                SumFamily(
                    lambda n: (n, n, n, n),
                    PochFamily(-1, (0, -1, -1, -1), _Q4, (1, 0)),
                    (_DEN_AB, _DEN_Q),
                ),
                SumFamily(
                    lambda n: (n + 1, n + 1, n, n),
                    PochFamily(-1, (1, 0, 0, 0), _Q4, (1, 0)),
                    (_DEN_AB1, _DEN_Q),
                ),
            ),
            product=(
                ProductFactor(-1, (1, 0, 0, 0), _Q4),
                ProductFactor(1, _AB, _Q4, inverted=True),
                ProductFactor(1, _Q4, _Q4, inverted=True),
            ),
        ),
        TheoremSpec(
            key="p2-four",
            description=(
                "odd-indexed parts even: four-parameter weight series (two"
                " families) and product"
            ),
            ring=FOUR_PARAM,
            partition_class=PartitionClass.P2,
            weight_map=None,
            series=(
                SumFamily(
                    lambda n: (n, n, n, n),
                    PochFamily(-1, (0, 0, 0, -1), _Q4, (1, 0)),
                    (_DEN_AB, _DEN_Q),
                ),
                SumFamily(
                    lambda n: (n + 1, n + 1, n, n),
                    PochFamily(-1, (1, 1, 1, 0), _Q4, (1, 0)),
                    (_DEN_AB1, _DEN_Q),
                ),
            ),
            product=(
                ProductFactor(-1, (1, 1, 1, 0), _Q4),
                ProductFactor(1, _AB, _Q4, inverted=True),
                ProductFactor(1, _Q4, _Q4, inverted=True),
            ),
        ),
        TheoremSpec(
            key="boulet-p",
            description="all partitions: four-parameter weight product",
            ring=FOUR_PARAM,
            partition_class=PartitionClass.ALL,
            weight_map=None,
            series=(),
            product=(
                ProductFactor(-1, (1, 0, 0, 0), _Q4),
                ProductFactor(-1, (1, 1, 1, 0), _Q4),
                ProductFactor(1, (1, 1, 0, 0), _Q4, inverted=True),
                ProductFactor(1, (1, 0, 1, 0), _Q4, inverted=True),
                ProductFactor(1, _Q4, _Q4, inverted=True),
            ),
        ),
        TheoremSpec(
            key="andrews-xzq",
            description=(
                "all partitions: odd-part count and alternating sum marked, as"
                " a three-variable product"
            ),
            ring=XZQ,
            partition_class=PartitionClass.ALL,
            weight_map=OMEGA_TO_XZQ,
            series=(),
            product=(
                ProductFactor(-1, (1, 1, 1), (0, 0, 2)),
                ProductFactor(1, (2, 0, 2), (0, 0, 4), inverted=True),
                ProductFactor(1, (0, 2, 2), (0, 0, 4), inverted=True),
                ProductFactor(1, (0, 0, 4), (0, 0, 4), inverted=True),
            ),
        ),
        TheoremSpec(
            key="g1-oddparts",
            description=(
                "distinct parts, even-indexed parts even: odd-part count marked"
            ),
            ring=XZQ,
            partition_class=PartitionClass.G1,
            weight_map=OMEGA_TO_XQ,
            series=(
                SumFamily(
                    lambda n: (n, 0, 2 * n * n - n),
                    PochFamily(-1, (-1, 0, 1), (0, 0, 4), (1, 0)),
                    (_DEN_QQ_2N,),
                ),
            ),
            product=(
                ProductFactor(-1, (1, 0, 1), (0, 0, 4)),
                ProductFactor(1, (0, 0, 2), (0, 0, 4), inverted=True),
            ),
        ),
        TheoremSpec(
            key="g2-oddparts",
            description=(
                "distinct parts, odd-indexed parts even: odd-part count marked"
            ),
            ring=XZQ,
            partition_class=PartitionClass.G2,
            weight_map=OMEGA_TO_XQ,
            series=(
                SumFamily(
                    lambda n: (n, 0, 2 * n * n + n),
                    PochFamily(-1, (-1, 0, -1), (0, 0, 4), (1, 0)),
                    (_DEN_QQ_2N,),
                ),
            ),
            product=(
                ProductFactor(-1, (1, 0, 3), (0, 0, 4)),
                ProductFactor(1, (0, 0, 2), (0, 0, 4), inverted=True),
            ),
        ),
        TheoremSpec(
            key="g1-altsum",
            description=(
                "distinct parts, even-indexed parts even: alternating sum"
                " marked, with an equivalent two-base product"
            ),
            ring=XZQ,
            partition_class=PartitionClass.G1,
            weight_map=OMEGA_TO_ZQ,
            series=(
                SumFamily(
                    lambda n: (0, n, 2 * n * n - n),
                    PochFamily(-1, (0, 1, 1), (0, 0, 4), (1, 0)),
                    (_DEN_Q4, _DEN_ZZQQ),
                ),
            ),
            product=(
                ProductFactor(-1, (0, 1, 1), (0, 0, 4)),
                ProductFactor(1, (0, 2, 2), (0, 0, 4), inverted=True),
            ),
            product_alt=(
                ProductFactor(1, (0, 1, 1), (0, 0, 4), inverted=True),
                ProductFactor(1, (0, 2, 6), (0, 0, 8), inverted=True),
            ),
        ),
        TheoremSpec(
            key="g2-altsum",
            description=(
                "distinct parts, odd-indexed parts even: alternating sum"
                " marked, with an equivalent two-base product"
            ),
            ring=XZQ,
            partition_class=PartitionClass.G2,
            weight_map=OMEGA_TO_ZQ,
            series=(
                SumFamily(
                    lambda n: (0, n, 2 * n * n + n),
                    PochFamily(-1, (0, 1, -1), (0, 0, 4), (1, 0)),
                    (_DEN_Q4, _DEN_ZZQQ),
                ),
            ),
            product=(
                ProductFactor(-1, (0, 1, 3), (0, 0, 4)),
                ProductFactor(1, (0, 2, 2), (0, 0, 4), inverted=True),
            ),
            product_alt=(
                ProductFactor(1, (0, 1, 3), (0, 0, 4), inverted=True),
                ProductFactor(1, (0, 2, 2), (0, 0, 8), inverted=True),
            ),
        ),
        TheoremSpec(
            key="g1-xzq",
            description=(
                "distinct parts, even-indexed parts even: odd-part count and"
                " alternating sum marked"
            ),
            ring=XZQ,
            partition_class=PartitionClass.G1,
            weight_map=OMEGA_TO_XZQ,
            series=(
                SumFamily(
                    lambda n: (n, n, 2 * n * n - n),
                    PochFamily(-1, (-1, 1, 1), (0, 0, 4), (1, 0)),
                    (_DEN_ZZQQ, _DEN_Q4),
                ),
            ),
            product=(
                ProductFactor(-1, (1, 1, 1), (0, 0, 4)),
                ProductFactor(1, (0, 2, 2), (0, 0, 4), inverted=True),
            ),
        ),
        TheoremSpec(
            key="g2-xzq",
            description=(
                "distinct parts, odd-indexed parts even: odd-part count and"
                " alternating sum marked"
            ),
            ring=XZQ,
            partition_class=PartitionClass.G2,
            weight_map=OMEGA_TO_XZQ,
            series=(
                SumFamily(
                    lambda n: (n, n, 2 * n * n + n),
                    PochFamily(-1, (-1, 1, -1), (0, 0, 4), (1, 0)),
                    (_DEN_ZZQQ, _DEN_Q4),
                ),
            ),
            product=(
                ProductFactor(-1, (1, 1, 3), (0, 0, 4)),
                ProductFactor(1, (0, 2, 2), (0, 0, 4), inverted=True),
            ),
        ),
        TheoremSpec(
            key="p1-xzq",
            description=(
                "even-indexed parts even: odd-part count and alternating sum"
                " marked (two series families)"
            ),
            ring=XZQ,
            partition_class=PartitionClass.P1,
            weight_map=OMEGA_TO_XZQ,
            series=(
                SumFamily(
                    lambda n: (0, 0, 4 * n),
                    PochFamily(-1, (1, 1, -3), (0, 0, 4), (1, 0)),
                    (_DEN_ZZQQ, _DEN_Q4),
                ),
                SumFamily(
                    lambda n: (0, 2, 4 * n + 2),
                    PochFamily(-1, (1, 1, 1), (0, 0, 4), (1, 0)),
                    (PochFamily(1, (0, 2, 2), (0, 0, 4), (1, 1)), _DEN_Q4),
                ),
            ),
            product=(
                ProductFactor(-1, (1, 1, 1), (0, 0, 4)),
                ProductFactor(1, (0, 2, 2), (0, 0, 4), inverted=True),
                ProductFactor(1, (0, 0, 4), (0, 0, 4), inverted=True),
            ),
        ),
        TheoremSpec(
            key="p2-xzq",
            description=(
                "odd-indexed parts even: odd-part count and alternating sum"
                " marked (two series families)"
            ),
            ring=XZQ,
            partition_class=PartitionClass.P2,
            weight_map=OMEGA_TO_XZQ,
            series=(
                SumFamily(
                    lambda n: (0, 0, 4 * n),
                    PochFamily(-1, (1, 1, -1), (0, 0, 4), (1, 0)),
                    (_DEN_ZZQQ, _DEN_Q4),
                ),
                SumFamily(
                    lambda n: (0, 2, 4 * n + 2),
                    PochFamily(-1, (1, 1, 3), (0, 0, 4), (1, 0)),
                    (PochFamily(1, (0, 2, 2), (0, 0, 4), (1, 1)), _DEN_Q4),
                ),
            ),
            product=(
                ProductFactor(-1, (1, 1, 3), (0, 0, 4)),
                ProductFactor(1, (0, 2, 2), (0, 0, 4), inverted=True),
                ProductFactor(1, (0, 0, 4), (0, 0, 4), inverted=True),
            ),
        ),
        TheoremSpec(
            key="g1-bg",
            description=(
                "distinct parts, even-indexed parts even: odd-index/even-index"
                " imbalance marked"
            ),
            ring=XZQ,
            partition_class=PartitionClass.G1,
            weight_map=OMEGA_TO_BG,
            series=(
                SumFamily(
                    lambda n: (0, n, 2 * n * n - n),
                    PochFamily(-1, (0, -1, 1), (0, 0, 4), (1, 0)),
                    (_DEN_QQ_2N,),
                ),
            ),
            product=(
                ProductFactor(-1, (0, 1, 1), (0, 0, 4)),
                ProductFactor(1, (0, 0, 2), (0, 0, 4), inverted=True),
            ),
        ),
        TheoremSpec(
            key="g2-bg",
            description=(
                "distinct parts, odd-indexed parts even: odd-index/even-index"
                " imbalance marked"
            ),
            ring=XZQ,
            partition_class=PartitionClass.G2,
            weight_map=OMEGA_TO_BG,
            series=(
                SumFamily(
                    lambda n: (0, -n, 2 * n * n + n),
                    PochFamily(-1, (0, 1, -1), (0, 0, 4), (1, 0)),
                    (_DEN_QQ_2N,),
                ),
            ),
            product=(
                ProductFactor(-1, (0, -1, 3), (0, 0, 4)),
                ProductFactor(1, (0, 0, 2), (0, 0, 4), inverted=True),
            ),
        ),
        TheoremSpec(
            key="p1-bg",
            description=(
                "even-indexed parts even: odd-index/even-index imbalance marked"
                " (two series families)"
            ),
            ring=XZQ,
            partition_class=PartitionClass.P1,
            weight_map=OMEGA_TO_BG,
            series=(
                SumFamily(
                    lambda n: (0, 0, 4 * n),
                    PochFamily(-1, (0, 1, -3), (0, 0, 4), (1, 0)),
                    (_DEN_QQ_2N,),
                ),
                SumFamily(
                    lambda n: (0, 0, 4 * n + 2),
                    PochFamily(-1, (0, 1, 1), (0, 0, 4), (1, 0)),
                    (_DEN_QQ_2N1,),
                ),
            ),
            product=(
                ProductFactor(-1, (0, 1, 1), (0, 0, 4)),
                ProductFactor(1, (0, 0, 2), (0, 0, 2), inverted=True),
            ),
        ),
        TheoremSpec(
            key="p2-bg",
            description=(
                "odd-indexed parts even: odd-index/even-index imbalance marked"
                " (two series families)"
            ),
            ring=XZQ,
            partition_class=PartitionClass.P2,
            weight_map=OMEGA_TO_BG,
            series=(
                SumFamily(
                    lambda n: (0, 0, 4 * n),
                    PochFamily(-1, (0, -1, -1), (0, 0, 4), (1, 0)),
                    (_DEN_QQ_2N,),
                ),
                SumFamily(
                    lambda n: (0, 0, 4 * n + 2),
                    PochFamily(-1, (0, -1, 3), (0, 0, 4), (1, 0)),
                    (_DEN_QQ_2N1,),
                ),
            ),
            product=(
                ProductFactor(-1, (0, -1, 3), (0, 0, 4)),
                ProductFactor(1, (0, 0, 2), (0, 0, 2), inverted=True),
            ),
        ),
    ]
    return tuple(specs)


_REGISTRY = _build_registry()
_BY_KEY = {spec.key: spec for spec in _REGISTRY}


def registry() -> list[TheoremSpec]:
    """All registered identities, in catalog order."""
    return list(_REGISTRY)


def spec_by_key(key: str) -> TheoremSpec:
    try:
        return _BY_KEY[key]
    except KeyError:
        raise UnknownTheorem(key) from None


def verify(key: str, trunc: int) -> CheckReport:
    return verify_spec(spec_by_key(key), trunc)


# -- telescoping partial sums ---------------------------------------------------


def _poch_poly(sign: int, arg: tuple[int, ...], count: int) -> Series:
    return pochhammer_finite(
        Series.monomial(FOUR_PARAM, sign, arg),
        Series.monomial(FOUR_PARAM, 1, _Q4),
        count,
        None,
    )


def _closed_partial(family: PartitionClass, upto: int, trunc: int) -> Series:
    """Closed form for the partial sum: a finite Pochhammer quotient."""
    arg = (1, 0, 0, 0) if family is PartitionClass.P1 else (1, 1, 1, 0)
    num = _poch_poly(-1, arg, upto).truncate(trunc)
    den1 = _poch_poly(1, _AB, upto + 1).invert_unit(trunc)
    den2 = _poch_poly(1, _Q4, upto).invert_unit(trunc)
    return num * den1 * den2


def verify_partial_sums(family: PartitionClass, n_max: int, trunc: int) -> CheckReport:
    """Partial sums of the two-family series match their closed quotient form.

    Checks ``F(N) = T(N)`` for each ``N <= n_max`` and the telescoping step
    ``T(N+1) - T(N) = F(N+1) - F(N)``.
    """
    if family not in (PartitionClass.P1, PartitionClass.P2):
        raise ValueError("partial sums are recorded for classes p1 and p2")
    spec = _BY_KEY["p1-four" if family is PartitionClass.P1 else "p2-four"]
    failures: list[str] = []
    checks = 0

    def partial(upto: int) -> Series:
        total = Series.zero(FOUR_PARAM, trunc)
        for fam in spec.series:
            total = total + _sum_family(FOUR_PARAM, fam, trunc, n_limit=upto)
        return total

    prev_f: Series | None = None
    prev_t: Series | None = None
    for upto in range(n_max + 1):
        f = partial(upto)
        t = _closed_partial(family, upto, trunc)
        checks += 1
        cmp = f.equal_to(t)
        if not cmp.equal:
            failures.append(
                f"N={upto}: partial sum differs from closed form at {cmp.exps}"
                f" ({cmp.left} vs {cmp.right})"
            )
        if prev_f is not None and prev_t is not None:
            checks += 1
            step = (t - prev_t).equal_to(f - prev_f)
            if not step.equal:
                failures.append(
                    f"N={upto}: step increments differ at {step.exps}"
                    f" ({step.left} vs {step.right})"
                )
        prev_f, prev_t = f, t
    return CheckReport(
        f"partial-sums[{family.value}]", not failures, checks, tuple(failures)
    )


# -- statistics consistency ------------------------------------------------------


def verify_substitution_consistency(map_id: str, weight_max: int) -> CheckReport:
    """Per-partition agreement of substituted weights with direct statistics.

    For the ``xzq`` map the image of the weight monomial must be
    ``x^(odd-part count) z^(alternating sum) q^(weight)``; for ``bg`` the
    z-exponent must be the odd-index/even-index imbalance of the odd parts.
    The conjugation law (odd-part count of the transpose equals the
    alternating sum) is checked alongside, since the corollaries rely on it.
    """
    if map_id not in ("xzq", "bg"):
        raise ValueError("map_id must be 'xzq' or 'bg'")
    smap = _MAPS[map_id]
    failures: list[str] = []
    checks = 0
    for w in range(weight_max + 1):
        for lam in enumerate_partitions(PartitionClass.ALL, w):
            st = stats(lam)
            image = _map_exps(smap, omega_exponents(lam).vector())
            if map_id == "xzq":
                expected = (st.odd_parts, st.alt_sum, st.weight)
            else:
                expected = (0, st.bg_rank, st.weight)
            checks += 1
            if image != expected:
                failures.append(f"{lam!r}: image {image}, statistics say {expected}")
            checks += 1
            if stats(conjugate(lam)).odd_parts != st.alt_sum:
                failures.append(f"{lam!r}: transpose odd-part count != alternating sum")
    return CheckReport(
        f"substitution[{map_id}]", not failures, checks, tuple(failures)
    )
