"""Sparse integer polynomials and the operators built on them.

A polynomial keeps a fixed number of variables n and a dict mapping
exponent tuples of length n to nonzero integer coefficients.
"""

from __future__ import annotations

import json

from .compositions import check_composition, compositions_of, dominates, flatten, pad, refines
from .perms import (Permutation, check_permutation, compose, longest,
                    reduced_word, sort_and_minimal_perm)


class ExpansionError(ValueError):
    pass


class IntPolynomial:
    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict[tuple[int, ...], int]):
        self.n = n
        clean = {}
        for exps, coef in terms.items():
            exps = tuple(exps)
            if len(exps) != n or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent tuple {exps} for n={n}")
            if coef:
                clean[exps] = coef
        self.terms = clean

    @staticmethod
    def zero(n: int) -> "IntPolynomial":
        return IntPolynomial(n, {})

    @staticmethod
    def one(n: int) -> "IntPolynomial":
        return IntPolynomial(n, {(0,) * n: 1})

    @staticmethod
    def monomial(exps, coef: int = 1) -> "IntPolynomial":
        exps = tuple(exps)
        return IntPolynomial(len(exps), {exps: coef})

    @staticmethod
    def variable(i: int, n: int) -> "IntPolynomial":
        exps = tuple(1 if j == i else 0 for j in range(1, n + 1))
        return IntPolynomial(n, {exps: 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (isinstance(other, IntPolynomial)
                and self.n == other.n and self.terms == other.terms)

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.n != other.n:
            raise ValueError("variable count mismatch")
        terms = dict(self.terms)
        for exps, coef in other.terms.items():
            terms[exps] = terms.get(exps, 0) + coef
        return IntPolynomial(self.n, terms)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def scale(self, k: int) -> "IntPolynomial":
        return IntPolynomial(self.n, {e: k * c for e, c in self.terms.items()})

    def __mul__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            return self.scale(other)
        if self.n != other.n:
            raise ValueError("variable count mismatch")
        terms: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return IntPolynomial(self.n, terms)

    __rmul__ = __mul__

    def pad_to(self, n: int) -> "IntPolynomial":
        if n == self.n:
            return self
        return IntPolynomial(n, {pad(e, n): c for e, c in self.terms.items()})

    def matches(self, other: "IntPolynomial") -> bool:
        """Equality after padding both to a common number of variables."""
        n = max(self.n, other.n)
        return self.pad_to(n).terms == other.pad_to(n).terms

    def swap_vars(self, i: int) -> "IntPolynomial":
        """Apply the substitution exchanging x_i and x_{i+1}."""
        if not 1 <= i < self.n:
            raise ValueError(f"need 1 <= i < n, got i={i}, n={self.n}")
        out: dict[tuple[int, ...], int] = {}
        for e, c in self.terms.items():
            s = list(e)
            s[i - 1], s[i] = s[i], s[i - 1]
            key = tuple(s)
            out[key] = out.get(key, 0) + c
        return IntPolynomial(self.n, out)

    def eval_ones(self) -> int:
        return sum(self.terms.values())

    def __repr__(self) -> str:
        if not self.terms:
            return f"IntPolynomial({self.n}, 0)"
        bits = []
        for e in sorted(self.terms, key=lambda t: t[::-1], reverse=True)[:4]:
            bits.append(f"{self.terms[e]}*x^{e}")
        more = "+..." if len(self.terms) > 4 else ""
        return f"IntPolynomial({self.n}, {' + '.join(bits)}{more})"

    def to_json_dict(self) -> dict:
        order = sorted(self.terms, reverse=True)
        return {"n": self.n,
                "terms": [{"exps": list(e), "coef": self.terms[e]} for e in order]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @staticmethod
    def from_json_dict(data: dict) -> "IntPolynomial":
        n = data["n"]
        terms: dict[tuple[int, ...], int] = {}
        for item in data["terms"]:
            exps = tuple(item["exps"])
            terms[exps] = terms.get(exps, 0) + item["coef"]
        return IntPolynomial(n, terms)

    @staticmethod
    def from_json(text: str) -> "IntPolynomial":
        return IntPolynomial.from_json_dict(json.loads(text))


def divided_difference(f: IntPolynomial, i: int) -> IntPolynomial:
    """(f - s_i f) / (x_i - x_{i+1}), computed exactly term by term."""
    if not 1 <= i < f.n:
        raise ValueError(f"need 1 <= i < n, got i={i}, n={f.n}")
    out: dict[tuple[int, ...], int] = {}
    for e, c in f.terms.items():
        a, b = e[i - 1], e[i]
        if a == b:
            continue
        lo, hi, sign = (b, a, c) if a > b else (a, b, -c)
        # (x^hi y^lo - x^lo y^hi)/(x - y) = sum of x^k y^(hi+lo-1-k)
        base = list(e)
        for k in range(lo, hi):
            base[i - 1], base[i] = k, hi + lo - 1 - k
            key = tuple(base)
            out[key] = out.get(key, 0) + sign
    return IntPolynomial(f.n, out)


def pi_op(f: IntPolynomial, i: int) -> IntPolynomial:
    """Demazure operator: divided difference of x_i * f."""
    shifted = {tuple(e[j] + (1 if j == i - 1 else 0) for j in range(f.n)): c
               for e, c in f.terms.items()}
    return divided_difference(IntPolynomial(f.n, shifted), i)


def apply_word(f: IntPolynomial, word, op=divided_difference) -> IntPolynomial:
    for i in word:
        f = op(f, i)
    return f


def schubert_polynomial(w: Permutation) -> IntPolynomial:
    """Divided differences applied to the staircase monomial.

    Applying a word (i_1, ..., i_l) first-to-last realises the operator
    indexed by the inverse, so the word here belongs to w0 o w, whose
    inverse is w^-1 o w0 as required.
    """
    w = check_permutation(w)
    n = len(w)
    staircase = IntPolynomial.monomial(tuple(range(n - 1, -1, -1)))
    return apply_word(staircase, reduced_word(compose(longest(n), w)))


def demazure_character(a, n: int | None = None) -> IntPolynomial:
    """Demazure operators applied to the dominant monomial of sort(a)."""
    a = check_composition(a)
    if n is None:
        n = len(a)
    lam, w = sort_and_minimal_perm(a)
    f = IntPolynomial.monomial(lam)
    return apply_word(f, reduced_word(w), pi_op).pad_to(n)


def fundamental_slide(a, n: int | None = None) -> IntPolynomial:
    """Sum of x^b over b dominating a whose flattening refines flat(a)."""
    a = check_composition(a)
    if n is None:
        n = len(a)
    if n < len(a):
        raise ValueError("n smaller than the number of parts")
    a = pad(a, n)
    fa = flatten(a)
    total = sum(a)
    terms: dict[tuple[int, ...], int] = {}
    for b in compositions_of(total, n):
        if dominates(b, a) and refines(flatten(b), fa):
            terms[b] = 1
    return IntPolynomial(n, terms)


def monomial_generating(weights, n: int) -> IntPolynomial:
    """Sum of x^wt over a multiset of weights, padded to n variables."""
    terms: dict[tuple[int, ...], int] = {}
    for wt in weights:
        e = pad(tuple(wt), n)
        terms[e] = terms.get(e, 0) + 1
    return IntPolynomial(n, terms)


_BASES = {
    "key": demazure_character,
    "slide": fundamental_slide,
}


def expand_in_basis(f: IntPolynomial, basis: str) -> dict[tuple[int, ...], int]:
    """Expand f as a nonnegative sum of key or slide polynomials.

    Works by repeatedly stripping the basis element indexed by the
    surviving monomial that is last in the dominance order (largest when
    exponent tuples are compared reversed).  Raises ExpansionError if a
    negative coefficient turns up.
    """
    if basis not in _BASES:
        raise ValueError(f"unknown basis {basis!r}")
    gen = _BASES[basis]
    out: dict[tuple[int, ...], int] = {}
    while not f.is_zero():
        a = max(f.terms, key=lambda e: e[::-1])
        coef = f.terms[a]
        if coef < 0:
            raise ExpansionError("not nonnegative in this basis")
        out[a] = coef
        f = f - gen(a, f.n).scale(coef)
    return out
