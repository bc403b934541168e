"""Y-seeds over rational functions, Y-seed mutation, and the y-hat bridge.

Y-values are unreduced rational functions (or any field-like values supporting
+, *, ** with ints, such as Fraction); equality checks go through
cross-multiplication on the RationalFunction side.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .laurent import LaurentPolynomial, RationalFunction, TropicalMonomial, tropicalize_positive
from .matrices import check_skew_symmetrizable, freeze, mutate_int_matrix
from .seeds import Seed, parse_polynomial


class YPatternError(ValueError):
    pass


class ZeroDenominator(YPatternError):
    """A required inverse or (Y_k + 1) factor degenerated to zero."""


@dataclass(frozen=True)
class YSeed:
    yvals: Tuple
    matrix: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "matrix", freeze(self.matrix))
        if check_skew_symmetrizable(self.matrix) is None:
            raise YPatternError("Y-seed matrix must be skew-symmetrizable")
        if len(self.yvals) != len(self.matrix):
            raise YPatternError("need one Y-value per matrix row")

    @property
    def n(self) -> int:
        return len(self.yvals)


def _is_zero(v) -> bool:
    if isinstance(v, RationalFunction):
        return v.is_zero()
    return v == 0


def mutate_y(ys: YSeed, k: int) -> YSeed:
    """Y-seed mutation in direction k (1-based); involutive."""
    n = ys.n
    if not 1 <= k <= n:
        raise YPatternError(f"direction {k} not in 1..{n}")
    kk = k - 1
    yk = ys.yvals[kk]
    if _is_zero(yk):
        raise ZeroDenominator("Y_k = 0 cannot be inverted")
    yk_inv = yk ** (-1)
    new: List = []
    for j in range(n):
        if j == kk:
            new.append(yk_inv)
            continue
        b = ys.matrix[kk][j]
        if b <= 0:
            factor = yk + 1
        else:
            factor = yk_inv + 1
        if b != 0 and _is_zero(factor):
            raise ZeroDenominator("(Y_k + 1) factor degenerated to zero")
        new.append(ys.yvals[j] * factor ** (-b) if b != 0 else ys.yvals[j])
    return YSeed(tuple(new), mutate_int_matrix(ys.matrix, k))


def y_pattern_orbit(ys: YSeed, word: Sequence[int]) -> List[YSeed]:
    """Iterated mutation along a word, including the starting seed."""
    out = [ys]
    for k in word:
        out.append(mutate_y(out[-1], k))
    return out


def hat_y(s: Seed) -> YSeed:
    """The tuple yhat_k = prod_i x_i^{b_ik} over the full extended cluster.

    The map intertwines seed mutation with Y-seed mutation.
    """
    n, m = s.n, s.m
    vals = []
    for k in range(1, n + 1):
        num = LaurentPolynomial.one(m)
        den = LaurentPolynomial.one(m)
        for i in range(1, m + 1):
            b = s.matrix.entry(i, k)
            if b == 0:
                continue
            xi = s.extended_entry(i)
            if b > 0:
                num = num * xi ** b
            else:
                den = den * xi ** (-b)
        vals.append(RationalFunction(num, den))
    return YSeed(tuple(vals), s.matrix.top())


def coefficient_tuple_of_hat(ys: YSeed, num_mutable: int) -> Tuple[TropicalMonomial, ...]:
    """Tropicalize each (subtraction-free) Y-value; the bridge to coefficient
    tuples for seeds whose first num_mutable variables are mutable."""
    out = []
    for v in ys.yvals:
        if not isinstance(v, RationalFunction):
            raise YPatternError("tropicalization needs RationalFunction values")
        fn = tropicalize_positive(v.num, num_mutable)
        fd = tropicalize_positive(v.den, num_mutable)
        out.append(fn * fd.inverse())
    return tuple(out)


def yseed_to_json(ys: YSeed) -> str:
    ys_vals = []
    for v in ys.yvals:
        if not isinstance(v, RationalFunction):
            raise YPatternError("only RationalFunction Y-seeds serialize")
        ys_vals.append({"num": v.num.canonical_str(), "den": v.den.canonical_str()})
    return json.dumps({"matrix": [list(r) for r in ys.matrix], "y": ys_vals})


def yseed_from_json(text: str, num_vars: int) -> YSeed:
    doc = json.loads(text)
    vals = tuple(
        RationalFunction(
            parse_polynomial(item["num"], num_vars),
            parse_polynomial(item["den"], num_vars),
        )
        for item in doc["y"]
    )
    return YSeed(vals, freeze(doc["matrix"]))
