"""Exact multivariate Laurent polynomial arithmetic over arbitrary-precision integers.

A Laurent polynomial in m variables is stored as a dictionary mapping exponent
vectors (length-m tuples of signed ints) to nonzero integer coefficients.  The
zero polynomial is the empty dictionary.  All operations are exact; there is no
floating point anywhere in this module.

The module also provides unreduced rational functions (equality by
cross-multiplication, no gcd machinery) and the tropical semifield of Laurent
monomials with componentwise-min addition.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Sequence, Tuple

Exponent = Tuple[int, ...]


class ExactAlgebraError(ValueError):
    """Base class for errors raised by the exact-algebra layer."""


class DimensionMismatch(ExactAlgebraError):
    """Operands disagree on the number of variables / index set."""


class NonExactDivision(ExactAlgebraError):
    """No Laurent-polynomial quotient exists for the requested division."""


class NonPositiveInput(ExactAlgebraError):
    """Tropicalization was asked for a polynomial with a coefficient <= 0."""


def _grlex_key(e: Exponent) -> Tuple[int, Exponent]:
    return (sum(e), e)


class LaurentPolynomial:
    """Immutable multivariate Laurent polynomial with integer coefficients."""

    __slots__ = ("num_vars", "_terms", "_hash")

    def __init__(self, num_vars: int, terms: Mapping[Exponent, int]):
        if num_vars < 0:
            raise ExactAlgebraError("num_vars must be nonnegative")
        clean: Dict[Exponent, int] = {}
        for e, c in terms.items():
            if c == 0:
                continue
            if len(e) != num_vars:
                raise DimensionMismatch(
                    f"exponent vector {e} has length {len(e)}, expected {num_vars}"
                )
            clean[tuple(e)] = c
        self.num_vars = num_vars
        self._terms = clean
        self._hash = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(num_vars: int) -> "LaurentPolynomial":
        return LaurentPolynomial(num_vars, {})

    @staticmethod
    def constant(c: int, num_vars: int) -> "LaurentPolynomial":
        return LaurentPolynomial(num_vars, {(0,) * num_vars: c})

    @staticmethod
    def one(num_vars: int) -> "LaurentPolynomial":
        return LaurentPolynomial.constant(1, num_vars)

    @staticmethod
    def variable(i: int, num_vars: int) -> "LaurentPolynomial":
        """The variable x_i (1-based index)."""
        if not 1 <= i <= num_vars:
            raise DimensionMismatch(f"variable index {i} not in 1..{num_vars}")
        e = [0] * num_vars
        e[i - 1] = 1
        return LaurentPolynomial(num_vars, {tuple(e): 1})

    @staticmethod
    def monomial(exps: Sequence[int], coeff: int = 1) -> "LaurentPolynomial":
        return LaurentPolynomial(len(exps), {tuple(exps): coeff})

    # -- queries -----------------------------------------------------------

    @property
    def terms(self) -> Dict[Exponent, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {(0,) * self.num_vars: 1}

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_positive(self) -> bool:
        """True iff the polynomial is nonzero and every coefficient is > 0."""
        return bool(self._terms) and all(c > 0 for c in self._terms.values())

    def sorted_terms(self):
        """Terms in the canonical order: graded lexicographic, descending."""
        return sorted(self._terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def leading_term(self) -> Tuple[Exponent, int]:
        if not self._terms:
            raise ExactAlgebraError("zero polynomial has no leading term")
        e = max(self._terms, key=_grlex_key)
        return e, self._terms[e]

    def denominator_vector(self) -> Exponent:
        """Componentwise max(0, -min exponent); the monomial denominator shape.

        Raises on the zero polynomial (no denominator is defined for it).
        """
        if not self._terms:
            raise ExactAlgebraError("denominator vector of the zero polynomial")
        mins = [0] * self.num_vars
        first = True
        for e in self._terms:
            if first:
                mins = list(e)
                first = False
            else:
                for i, v in enumerate(e):
                    if v < mins[i]:
                        mins[i] = v
        return tuple(max(0, -v) for v in mins)

    def min_exponents(self) -> Exponent:
        """Componentwise minimum exponent over all terms (the monomial content)."""
        if not self._terms:
            raise ExactAlgebraError("monomial content of the zero polynomial")
        it = iter(self._terms)
        mins = list(next(it))
        for e in it:
            for i, v in enumerate(e):
                if v < mins[i]:
                    mins[i] = v
        return tuple(mins)

    # -- arithmetic --------------------------------------------------------

    def _check_compatible(self, other: "LaurentPolynomial") -> None:
        if self.num_vars != other.num_vars:
            raise DimensionMismatch(
                f"operands have {self.num_vars} and {other.num_vars} variables"
            )

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other, self.num_vars)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        self._check_compatible(other)
        acc = dict(self._terms)
        for e, c in other._terms.items():
            s = acc.get(e, 0) + c
            if s:
                acc[e] = s
            elif e in acc:
                del acc[e]
        return LaurentPolynomial(self.num_vars, acc)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial(self.num_vars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other, self.num_vars)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        if isinstance(other, int):
            return LaurentPolynomial.constant(other, self.num_vars) - self
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPolynomial.zero(self.num_vars)
            return LaurentPolynomial(
                self.num_vars, {e: c * other for e, c in self._terms.items()}
            )
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        self._check_compatible(other)
        acc: Dict[Exponent, int] = {}
        # iterate over the smaller operand for fewer dict rebuilds
        a, b = self._terms, other._terms
        if len(a) > len(b):
            a, b = b, a
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                s = acc.get(e, 0) + ca * cb
                if s:
                    acc[e] = s
                elif e in acc:
                    del acc[e]
        return LaurentPolynomial(self.num_vars, acc)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if not self.is_monomial():
                raise NonExactDivision(
                    "negative powers are only defined for monomials"
                )
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise NonExactDivision(
                    "negative powers require a unit coefficient"
                )
            return LaurentPolynomial(
                self.num_vars, {tuple(-x for x in e): c}
            ) ** (-k)
        result = LaurentPolynomial.one(self.num_vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def divide_exact(self, den: "LaurentPolynomial") -> "LaurentPolynomial":
        """Exact division: returns q with q*den == self, else NonExactDivision.

        Strategy: strip the monomial content off both operands, then run plain
        multivariate polynomial division under the graded-lex term order and
        demand a zero remainder.
        """
        if not isinstance(den, LaurentPolynomial):
            raise TypeError("divisor must be a LaurentPolynomial")
        self._check_compatible(den)
        if den.is_zero():
            raise NonExactDivision("division by the zero polynomial")
        if self.is_zero():
            return self
        num_shift = self.min_exponents()
        den_shift = den.min_exponents()
        shift = tuple(a - b for a, b in zip(num_shift, den_shift))
        num = {tuple(x - s for x, s in zip(e, num_shift)): c for e, c in self._terms.items()}
        dpoly = {tuple(x - s for x, s in zip(e, den_shift)): c for e, c in den._terms.items()}
        de = max(dpoly, key=_grlex_key)
        dc = dpoly[de]
        quot: Dict[Exponent, int] = {}
        rem = num
        while rem:
            re = max(rem, key=_grlex_key)
            rc = rem[re]
            qe = tuple(a - b for a, b in zip(re, de))
            if any(x < 0 for x in qe) or rc % dc != 0:
                raise NonExactDivision("remainder is nonzero")
            qc = rc // dc
            quot[qe] = qc
            for e, c in dpoly.items():
                t = tuple(a + b for a, b in zip(qe, e))
                s = rem.get(t, 0) - qc * c
                if s:
                    rem[t] = s
                elif t in rem:
                    del rem[t]
        return LaurentPolynomial(
            self.num_vars,
            {tuple(a + b for a, b in zip(e, shift)): c for e, c in quot.items()},
        )

    def eval_rational(self, point: Sequence[Fraction]) -> Fraction:
        """Evaluate exactly at a point of exact rationals.

        A coordinate may be zero only if no term carries a negative exponent
        for it.
        """
        if len(point) != self.num_vars:
            raise DimensionMismatch("point has wrong dimension")
        vals = [Fraction(p) for p in point]
        total = Fraction(0)
        for e, c in self._terms.items():
            term = Fraction(c)
            for x, k in zip(vals, e):
                if k == 0:
                    continue
                if x == 0:
                    if k < 0:
                        raise ZeroDivisionError(
                            "zero coordinate raised to a negative exponent"
                        )
                    term = Fraction(0)
                    break
                term *= x ** k
            total += term
        return total

    def subs(self, values: Sequence):
        """Substitute arbitrary field-like values (supporting +, *, ** int).

        Useful for substituting RationalFunction values; evaluation is exact.
        """
        if len(values) != self.num_vars:
            raise DimensionMismatch("substitution has wrong dimension")
        total = None
        for e, c in self._terms.items():
            term = None
            for v, k in zip(values, e):
                if k == 0:
                    continue
                f = v ** k
                term = f if term is None else term * f
            term = c if term is None else term * c
            total = term if total is None else total + term
        return 0 if total is None else total

    # -- canonical form ----------------------------------------------------

    def canonical_str(self, names: Sequence[str] | None = None) -> str:
        """The canonical serialization, the key used by golden tests.

        Terms are sorted by descending graded-lex order and rendered as
        `c * x1^e1*...*xm^em`, joined by ` + `; a negative coefficient keeps
        its leading `-`.
        """
        if not self._terms:
            return "0"
        if names is None:
            names = [f"x{i}" for i in range(1, self.num_vars + 1)]
        parts = []
        for e, c in self.sorted_terms():
            if self.num_vars:
                mono = "*".join(f"{names[i]}^{e[i]}" for i in range(self.num_vars))
                parts.append(f"{c} * {mono}")
            else:
                parts.append(str(c))
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.canonical_str()

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self.canonical_str()!r})"

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self == LaurentPolynomial.constant(other, self.num_vars)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.num_vars == other.num_vars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num_vars, frozenset(self._terms.items())))
        return self._hash


def lp_arith(a: LaurentPolynomial, b: LaurentPolynomial, op: str) -> LaurentPolynomial:
    """Dispatch wrapper over the basic ring operations."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "neg-of-a":
        return -a
    raise ExactAlgebraError(f"unknown operation {op!r}")


def lp_divide_exact(num: LaurentPolynomial, den: LaurentPolynomial) -> LaurentPolynomial:
    return num.divide_exact(den)


def lp_denominator_vector(p: LaurentPolynomial) -> Exponent:
    return p.denominator_vector()


def lp_eval_rational(p: LaurentPolynomial, point: Sequence[Fraction]) -> Fraction:
    return p.eval_rational(point)


def lp_is_positive(p: LaurentPolynomial) -> bool:
    return p.is_positive()


class RationalFunction:
    """Unreduced quotient of Laurent polynomials.

    Equality is by cross-multiplication; no gcd is ever computed.  A light
    normalization (dividing out the denominator's monomial content and leading
    sign) keeps serializations stable without a factorization engine.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPolynomial, den: LaurentPolynomial | None = None, normalize: bool = True):
        if den is None:
            den = LaurentPolynomial.one(num.num_vars)
        if num.num_vars != den.num_vars:
            raise DimensionMismatch("numerator and denominator dimensions differ")
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if normalize and not num.is_zero():
            shift = den.min_exponents()
            lead_c = den.sorted_terms()[0][1]
            sign = -1 if lead_c < 0 else 1
            adjust = LaurentPolynomial.monomial(tuple(-s for s in shift), sign)
            num = num * adjust
            den = den * adjust
        elif normalize:
            den = LaurentPolynomial.one(den.num_vars)
        self.num = num
        self.den = den

    @staticmethod
    def from_int(c: int, num_vars: int) -> "RationalFunction":
        return RationalFunction(LaurentPolynomial.constant(c, num_vars))

    @staticmethod
    def variable(i: int, num_vars: int) -> "RationalFunction":
        return RationalFunction(LaurentPolynomial.variable(i, num_vars))

    @property
    def num_vars(self) -> int:
        return self.num.num_vars

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def _coerce(self, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, int):
            return RationalFunction.from_int(other, self.num_vars)
        if isinstance(other, LaurentPolynomial):
            return RationalFunction(other)
        raise TypeError(f"cannot coerce {other!r} to RationalFunction")

    def __add__(self, other):
        o = self._coerce(other)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, normalize=False)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k == 0:
            return RationalFunction.from_int(1, self.num_vars)
        if k < 0:
            if self.num.is_zero():
                raise ZeroDivisionError("inverse of the zero rational function")
            return RationalFunction(self.den, self.num) ** (-k)
        return RationalFunction(self.num ** k, self.den ** k)

    def __eq__(self, other) -> bool:
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    def __hash__(self):
        raise TypeError("RationalFunction is unhashable (equality is by cross-multiplication)")

    def __str__(self) -> str:
        return f"({self.num}) / ({self.den})"

    def __repr__(self) -> str:
        return f"RationalFunction({self.num!r}, {self.den!r})"


class TropicalMonomial:
    """Laurent monomial in the tropical semifield Trop(q_1, ..., q_l).

    Multiplication adds exponent vectors; the auxiliary addition (+) takes the
    componentwise minimum.
    """

    __slots__ = ("exps",)

    def __init__(self, exps: Sequence[int]):
        self.exps = tuple(int(e) for e in exps)

    @staticmethod
    def one(size: int) -> "TropicalMonomial":
        return TropicalMonomial((0,) * size)

    @staticmethod
    def generator(i: int, size: int) -> "TropicalMonomial":
        """The i-th generator (1-based)."""
        e = [0] * size
        e[i - 1] = 1
        return TropicalMonomial(e)

    def _check(self, other: "TropicalMonomial") -> None:
        if len(self.exps) != len(other.exps):
            raise DimensionMismatch("tropical monomials over different index sets")

    def __mul__(self, other: "TropicalMonomial") -> "TropicalMonomial":
        self._check(other)
        return TropicalMonomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def __pow__(self, k: int) -> "TropicalMonomial":
        return TropicalMonomial(tuple(a * k for a in self.exps))

    def inverse(self) -> "TropicalMonomial":
        return self ** (-1)

    def trop_add(self, other: "TropicalMonomial") -> "TropicalMonomial":
        self._check(other)
        return TropicalMonomial(tuple(min(a, b) for a, b in zip(self.exps, other.exps)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, TropicalMonomial):
            return NotImplemented
        return self.exps == other.exps

    def __hash__(self):
        return hash(self.exps)

    def as_string(self, names: Sequence[str]) -> str:
        parts = [f"{names[i]}^{e}" for i, e in enumerate(self.exps) if e != 0]
        return "*".join(parts) if parts else "1"

    def __str__(self) -> str:
        return self.as_string([f"q{i+1}" for i in range(len(self.exps))])

    def __repr__(self) -> str:
        return f"TropicalMonomial({self.exps})"


def trop_mul(a: TropicalMonomial, b: TropicalMonomial) -> TropicalMonomial:
    return a * b


def trop_add(a: TropicalMonomial, b: TropicalMonomial) -> TropicalMonomial:
    return a.trop_add(b)


def tropicalize_positive(p: LaurentPolynomial, num_mutable: int) -> TropicalMonomial:
    """Apply the semifield homomorphism sending x_i -> 1 for mutable i.

    The image of a positive Laurent polynomial in Trop(x_{n+1},...,x_m) is the
    tropical sum over terms of the frozen-exponent restrictions, i.e. the
    componentwise minimum of the frozen exponents.
    """
    if p.is_zero() or not p.is_positive():
        raise NonPositiveInput("tropicalization needs strictly positive coefficients")
    if not 0 <= num_mutable <= p.num_vars:
        raise DimensionMismatch("mutable count out of range")
    frozen = p.num_vars - num_mutable
    mins = None
    for e in p._terms:
        tail = e[num_mutable:]
        if mins is None:
            mins = list(tail)
        else:
            for i, v in enumerate(tail):
                if v < mins[i]:
                    mins[i] = v
    return TropicalMonomial(tuple(mins if mins is not None else (0,) * frozen))
