"""Labeled seeds, seed mutation, seed patterns, and the (x, y, B) triple form.

A seed stores the expansions of its n cluster variables as Laurent polynomials
in the m initial variables (frozen variables are x_{n+1}..x_m and stay fixed).
Mutation applies the exchange relation and divides exactly; the Laurent
phenomenon guarantees the division succeeds, so a failure is an engine bug and
surfaces as NonExactDivision.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

from .laurent import (
    LaurentPolynomial,
    NonExactDivision,
    TropicalMonomial,
)
from .matrices import ExtendedExchangeMatrix, freeze, mutate_int_matrix


class SeedError(ValueError):
    pass


def collapse_word(word: Iterable[int], n: int) -> Tuple[int, ...]:
    """Normalize a mutation word: indices in 1..n, immediate repeats collapse."""
    out: List[int] = []
    for k in word:
        if not 1 <= k <= n:
            raise SeedError(f"mutation index {k} not in 1..{n}")
        if out and out[-1] == k:
            out.pop()
        else:
            out.append(k)
    return tuple(out)


@dataclass(frozen=True)
class Seed:
    matrix: ExtendedExchangeMatrix
    cluster: Tuple[LaurentPolynomial, ...]
    word: Tuple[int, ...] = ()

    def __post_init__(self):
        n, m = self.matrix.n, self.matrix.m
        if len(self.cluster) != n:
            raise SeedError("cluster must have n entries")
        for x in self.cluster:
            if x.num_vars != m:
                raise SeedError("cluster entries must live in the m initial variables")
            if x.is_zero():
                raise SeedError("cluster entries are nonzero by the Laurent phenomenon")

    @property
    def n(self) -> int:
        return self.matrix.n

    @property
    def m(self) -> int:
        return self.matrix.m

    def cluster_strings(self) -> Tuple[str, ...]:
        return tuple(x.canonical_str() for x in self.cluster)

    def extended_entry(self, i: int) -> LaurentPolynomial:
        """Entry i of the extended cluster (frozen entries are plain variables)."""
        if i <= self.n:
            return self.cluster[i - 1]
        return LaurentPolynomial.variable(i, self.m)


def initial_seed(Bt: ExtendedExchangeMatrix) -> Seed:
    cluster = tuple(LaurentPolynomial.variable(i, Bt.m) for i in range(1, Bt.n + 1))
    return Seed(Bt, cluster, ())


def exchange_binomial(s: Seed, k: int) -> LaurentPolynomial:
    """The right-hand side of the exchange relation at direction k."""
    m = s.m
    pos = LaurentPolynomial.one(m)
    neg = LaurentPolynomial.one(m)
    for i in range(1, m + 1):
        b = s.matrix.entry(i, k)
        if b == 0:
            continue
        xi = s.extended_entry(i)
        if b > 0:
            pos = pos * xi ** b
        else:
            neg = neg * xi ** (-b)
    return pos + neg


def mutate_seed(s: Seed, k: int) -> Seed:
    if not 1 <= k <= s.n:
        raise SeedError(f"mutation direction {k} not in 1..{s.n}")
    rhs = exchange_binomial(s, k)
    new_x = rhs.divide_exact(s.cluster[k - 1])
    cluster = tuple(
        new_x if i == k - 1 else x for i, x in enumerate(s.cluster)
    )
    return Seed(s.matrix.mutate(k), cluster, collapse_word(s.word + (k,), s.n))


def seed_at(Bt: ExtendedExchangeMatrix, word: Iterable[int]) -> Seed:
    s = initial_seed(Bt)
    for k in collapse_word(word, Bt.n):
        s = mutate_seed(s, k)
    return s


def unlabeled_key(s: Seed) -> Tuple:
    """Canonical key identifying seeds up to permutation of cluster positions.

    The n cluster strings are sorted; the same permutation is applied to the
    mutable rows/columns of the extended matrix, and among permutations fixing
    the sorted strings the lexicographically least matrix is chosen.
    """
    strings = s.cluster_strings()
    order = sorted(range(s.n), key=lambda i: strings[i])
    sorted_strings = tuple(strings[i] for i in order)
    # group tied positions (equal strings cannot happen for honest seeds, but
    # the tie-break is implemented as specified)
    groups: List[List[int]] = []
    for idx, i in enumerate(order):
        if idx and strings[i] == strings[order[idx - 1]]:
            groups[-1].append(i)
        else:
            groups.append([i])
    best_rows = None
    for arrangement in _tie_arrangements(groups):
        perm = [0] * s.n  # old 0-based position -> new 0-based position
        for new_pos, old_pos in enumerate(arrangement):
            perm[old_pos] = new_pos
        rows = _permute_matrix(s.matrix, perm)
        if best_rows is None or rows < best_rows:
            best_rows = rows
    return (sorted_strings, best_rows)


def _tie_arrangements(groups: List[List[int]]):
    import itertools

    for parts in itertools.product(*(itertools.permutations(g) for g in groups)):
        flat: List[int] = []
        for part in parts:
            flat.extend(part)
        yield flat


def _permute_matrix(Bt: ExtendedExchangeMatrix, perm: Sequence[int]) -> Tuple:
    n, m = Bt.n, Bt.m
    new = [[0] * n for _ in range(m)]
    for i in range(m):
        for j in range(n):
            ni = perm[i] if i < n else i
            new[ni][perm[j]] = Bt.rows[i][j]
    return tuple(tuple(row) for row in new)


def check_laurent_sharp(s: Seed) -> List[Tuple[int, int]]:
    """Violations of the sharp Laurent property: pairs (cluster position,
    frozen index) where a frozen variable shows up in a denominator.

    An empty report is the expected outcome.
    """
    bad = []
    for pos, x in enumerate(s.cluster, start=1):
        dvec = x.denominator_vector()
        for i in range(s.n, s.m):
            if dvec[i] > 0:
                bad.append((pos, i + 1))
    return bad


# -- triple form (x, y, B) with tropical coefficients ------------------------


@dataclass(frozen=True)
class SeedTriple:
    n: int
    m: int
    cluster: Tuple[LaurentPolynomial, ...]
    coeffs: Tuple[TropicalMonomial, ...]
    matrix: Tuple[Tuple[int, ...], ...]  # n x n exchange matrix
    word: Tuple[int, ...] = ()


def to_triple(s: Seed) -> SeedTriple:
    n, m = s.n, s.m
    coeffs = tuple(
        TropicalMonomial(tuple(s.matrix.rows[i][j] for i in range(n, m)))
        for j in range(n)
    )
    return SeedTriple(n, m, s.cluster, coeffs, s.matrix.top(), s.word)


def _trop_to_monomial(t: TropicalMonomial, n: int, m: int) -> LaurentPolynomial:
    exps = (0,) * n + t.exps
    return LaurentPolynomial.monomial(exps, 1)


def mutate_triple(t: SeedTriple, k: int) -> SeedTriple:
    """One mutation in the (x, y, B) picture.

    The coefficient tuple follows the tropical Y-seed rule and the cluster
    follows the exchange relation with coefficients y_k/(y_k (+) 1) and
    1/(y_k (+) 1).
    """
    if not 1 <= k <= t.n:
        raise SeedError(f"mutation direction {k} not in 1..{t.n}")
    n, m = t.n, t.m
    kk = k - 1
    one = TropicalMonomial.one(m - n)
    yk = t.coeffs[kk]
    new_coeffs: List[TropicalMonomial] = []
    for j in range(n):
        if j == kk:
            new_coeffs.append(yk.inverse())
            continue
        b = t.matrix[kk][j]
        if b <= 0:
            new_coeffs.append(t.coeffs[j] * (yk.trop_add(one)) ** (-b))
        else:
            new_coeffs.append(t.coeffs[j] * (yk.inverse().trop_add(one)) ** (-b))
    denom = yk.trop_add(one)
    coeff_pos = _trop_to_monomial(yk * denom.inverse(), n, m)
    coeff_neg = _trop_to_monomial(denom.inverse(), n, m)
    pos = coeff_pos
    neg = coeff_neg
    for i in range(n):
        b = t.matrix[i][kk]
        if b > 0:
            pos = pos * t.cluster[i] ** b
        elif b < 0:
            neg = neg * t.cluster[i] ** (-b)
    new_x = (pos + neg).divide_exact(t.cluster[kk])
    cluster = tuple(new_x if i == kk else x for i, x in enumerate(t.cluster))
    return SeedTriple(
        n,
        m,
        cluster,
        tuple(new_coeffs),
        mutate_int_matrix(t.matrix, k),
        collapse_word(t.word + (k,), n),
    )


# -- serialization -------------------------------------------------------------


_TERM_RE = re.compile(r"^\s*(-?\d+)(?:\s*\*\s*(.*))?$")
_FACTOR_RE = re.compile(r"^x(\d+)\^(-?\d+)$")


def parse_polynomial(text: str, num_vars: int) -> LaurentPolynomial:
    """Parse the canonical polynomial serialization back into a value."""
    text = text.strip()
    if text == "0":
        return LaurentPolynomial.zero(num_vars)
    terms: Dict[Tuple[int, ...], int] = {}
    for chunk in text.split(" + "):
        mt = _TERM_RE.match(chunk)
        if not mt:
            raise SeedError(f"cannot parse term {chunk!r}")
        coeff = int(mt.group(1))
        exps = [0] * num_vars
        body = mt.group(2)
        if body:
            for factor in body.split("*"):
                mf = _FACTOR_RE.match(factor.strip())
                if not mf:
                    raise SeedError(f"cannot parse factor {factor!r}")
                idx, e = int(mf.group(1)), int(mf.group(2))
                if not 1 <= idx <= num_vars:
                    raise SeedError(f"variable x{idx} out of range")
                exps[idx - 1] = e
        key = tuple(exps)
        if key in terms:
            raise SeedError("duplicate exponent vector in serialized polynomial")
        terms[key] = coeff
    return LaurentPolynomial(num_vars, terms)


def seed_to_json(s: Seed) -> str:
    doc = {
        "m": s.m,
        "n": s.n,
        "matrix": [list(row) for row in s.matrix.rows],
        "cluster": list(s.cluster_strings()),
        "word": list(s.word),
    }
    return json.dumps(doc)


def seed_from_json(text: str) -> Seed:
    doc = json.loads(text)
    Bt = ExtendedExchangeMatrix(freeze(doc["matrix"]), doc["n"])
    if Bt.m != doc["m"]:
        raise SeedError("matrix row count disagrees with m")
    cluster = tuple(parse_polynomial(p, doc["m"]) for p in doc["cluster"])
    return Seed(Bt, cluster, tuple(int(k) for k in doc["word"]))
