"""Exact sparse multivariate polynomials over the rationals.

A polynomial in ``n`` variables ``t0, ..., t_{n-1}`` is a map from exponent
tuples to nonzero :class:`fractions.Fraction` coefficients.  The zero
polynomial is the empty map.  Variable 0 is, by convention, the homogenizing
variable.

Text form::

    1/5040*t0^7*t1^2 + 1/2160*t0^6*t1^3 - 3*t2 + 7

JSON form::

    {"num_vars": 3, "terms": [{"exp": [7, 2, 0], "coef": "1/5040"}, ...]}

Both are emitted in graded lexicographic order (highest total degree first,
ties broken lexicographically with variable 0 most significant).
"""

from __future__ import annotations

import json
import math
import re
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence, Tuple, Union

Exponent = Tuple[int, ...]
Number = Union[int, Fraction]


class PolynomialError(ValueError):
    """Raised when a polynomial operation's contract is violated."""


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, float):
        raise TypeError("floating point coefficients are not accepted")
    return Fraction(c)


class Polynomial:
    """Immutable sparse polynomial with rational coefficients."""

    __slots__ = ("_n", "_terms", "_hash")

    def __init__(self, num_vars: int, terms: Mapping[Sequence[int], Number] | Iterable = ()):
        if num_vars < 0:
            raise PolynomialError("num_vars must be nonnegative")
        items = terms.items() if isinstance(terms, Mapping) else terms
        out: dict[Exponent, Fraction] = {}
        for exp, coef in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != num_vars:
                raise PolynomialError(f"exponent {exp} has length {len(exp)}, expected {num_vars}")
            if any(e < 0 for e in exp):
                raise PolynomialError(f"negative exponent in {exp}")
            c = _as_fraction(coef)
            if c:
                c = out.get(exp, 0) + c
                if c:
                    out[exp] = c
                else:
                    out.pop(exp, None)
        self._n = num_vars
        self._terms = out
        self._hash = None

    # construction helpers

    @classmethod
    def _raw(cls, num_vars: int, terms: dict) -> "Polynomial":
        # trusted path: terms already canonical
        p = cls.__new__(cls)
        p._n = num_vars
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, num_vars: int) -> "Polynomial":
        return cls._raw(num_vars, {})

    @classmethod
    def constant(cls, num_vars: int, c: Number) -> "Polynomial":
        return cls(num_vars, {(0,) * num_vars: c})

    @classmethod
    def var(cls, num_vars: int, i: int) -> "Polynomial":
        if not 0 <= i < num_vars:
            raise PolynomialError(f"variable index {i} out of range for {num_vars} variables")
        e = [0] * num_vars
        e[i] = 1
        return cls._raw(num_vars, {tuple(e): Fraction(1)})

    @classmethod
    def linear_form(cls, coeffs: Sequence[Number]) -> "Polynomial":
        """The form ``c0*t0 + c1*t1 + ...``."""
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            e = [0] * n
            e[i] = 1
            terms[tuple(e)] = c
        return cls(n, terms)

    @classmethod
    def univariate(cls, coeffs: Sequence[Number]) -> "Polynomial":
        """One-variable polynomial from ascending coefficients."""
        return cls(1, {(k,): c for k, c in enumerate(coeffs)})

    # data access

    @property
    def num_vars(self) -> int:
        return self._n

    @property
    def terms(self) -> Mapping[Exponent, Fraction]:
        return MappingProxyType(self._terms)

    def coefficient(self, exp: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exp), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: (-sum(kv[0]), tuple(-e for e in kv[0])))

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._n == other._n and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self._n, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"Polynomial({self._n}, {to_text(self)!r})"

    def __str__(self) -> str:
        return to_text(self)

    # arithmetic

    def _check(self, other: "Polynomial") -> None:
        if self._n != other._n:
            raise PolynomialError(f"variable-count mismatch: {self._n} vs {other._n}")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self._n, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(self, other)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self._n, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(self, -other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(other, -self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise PolynomialError("negative powers are not polynomials")
        result = Polynomial.constant(self._n, 1)
        base = self
        while k:
            if k & 1:
                result = mul(result, base)
            k >>= 1
            if k:
                base = mul(base, base)
        return result

    def scale(self, c: Number) -> "Polynomial":
        c = _as_fraction(c)
        if not c:
            return Polynomial.zero(self._n)
        return Polynomial._raw(self._n, {e: v * c for e, v in self._terms.items()})

    def __call__(self, *values):
        return evaluate(self, values)


def add(f: Polynomial, g: Polynomial) -> Polynomial:
    f._check(g)
    out = dict(f._terms)
    for e, c in g._terms.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return Polynomial._raw(f._n, out)


def mul(f: Polynomial, g: Polynomial) -> Polynomial:
    f._check(g)
    out: dict[Exponent, Fraction] = {}
    for ea, ca in f._terms.items():
        for eb, cb in g._terms.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return Polynomial._raw(f._n, {e: c for e, c in out.items() if c})


def evaluate(f: Polynomial, values: Sequence) -> Fraction:
    if len(values) != f.num_vars:
        raise PolynomialError("wrong number of values")
    total = Fraction(0)
    for e, c in f.terms.items():
        term = c
        for v, k in zip(values, e):
            if k:
                term *= v ** k
        total += term
    return total


# combinatorial data

def support(f: Polynomial) -> frozenset:
    return frozenset(f.terms)


def degree_in_var(f: Polynomial, j: int) -> int:
    """Degree of ``f`` in variable ``j``; ``-1`` for the zero polynomial."""
    if not 0 <= j < f.num_vars:
        raise PolynomialError(f"variable index {j} out of range")
    return max((e[j] for e in f.terms), default=-1)


def degrees(f: Polynomial) -> tuple[int, ...]:
    return tuple(max((e[j] for e in f.terms), default=0) for j in range(f.num_vars))


def total_degree(f: Polynomial) -> int:
    """Total degree; ``-1`` for the zero polynomial."""
    return max((sum(e) for e in f.terms), default=-1)


def is_homogeneous(f: Polynomial) -> bool:
    return len({sum(e) for e in f.terms}) <= 1


def homogeneous_part(f: Polynomial, d: int) -> Polynomial:
    return Polynomial._raw(f.num_vars, {e: c for e, c in f.terms.items() if sum(e) == d})


def trailing_degree(f: Polynomial) -> int:
    return min((sum(e) for e in f.terms), default=-1)


# transforms

def partial_derivative(f: Polynomial, alpha: Sequence[int]) -> Polynomial:
    """The iterated derivative d^alpha f."""
    alpha = tuple(alpha)
    if len(alpha) != f.num_vars:
        raise PolynomialError("multi-index length does not match num_vars")
    out = {}
    for e, c in f.terms.items():
        if any(k > x for k, x in zip(alpha, e)):
            continue
        factor = 1
        for k, x in zip(alpha, e):
            factor *= math.perm(x, k)
        out[tuple(x - k for k, x in zip(alpha, e))] = c * factor
    return Polynomial._raw(f.num_vars, out)


def normalize(f: Polynomial) -> Polynomial:
    """Divide the coefficient of each monomial t^a by a_0! a_1! ... ."""
    out = {}
    for e, c in f.terms.items():
        denom = 1
        for x in e:
            denom *= math.factorial(x)
        out[e] = c / denom
    return Polynomial._raw(f.num_vars, out)


def homogenize(f: Polynomial, target_degree: int) -> Polynomial:
    """Insert a new variable in position 0 making ``f`` homogeneous of ``target_degree``."""
    d = total_degree(f)
    if target_degree < d:
        raise PolynomialError(f"target degree {target_degree} is below the total degree {d}")
    return Polynomial._raw(
        f.num_vars + 1, {(target_degree - sum(e),) + e: c for e, c in f.terms.items()}
    )


def dehomogenize(f: Polynomial, var_index: int = 0) -> Polynomial:
    """Set variable ``var_index`` to 1 and drop it."""
    if not 0 <= var_index < f.num_vars:
        raise PolynomialError(f"variable index {var_index} out of range")
    return Polynomial(
        f.num_vars - 1, ((e[:var_index] + e[var_index + 1:], c) for e, c in f.terms.items())
    )


def flip(f: Polynomial, n: Sequence[int]) -> Polynomial:
    """The exponent reversal u^n * f(1/u)."""
    n = tuple(n)
    if len(n) != f.num_vars:
        raise PolynomialError("degree vector length does not match num_vars")
    for j, d in enumerate(degrees(f)):
        if f and d > n[j]:
            raise PolynomialError(f"n[{j}] = {n[j]} is below the degree {d} of variable {j}")
    return Polynomial._raw(f.num_vars, {tuple(m - x for m, x in zip(n, e)): c for e, c in f.terms.items()})


def substitute_matrix(f: Polynomial, A) -> Polynomial:
    """Evaluate ``f`` at ``t = A u``: variable ``t_i`` becomes ``sum_j A[i][j] u_j``."""
    rows = [list(r) for r in _matrix_rows(A)]
    if len(rows) != f.num_vars:
        raise PolynomialError(f"matrix has {len(rows)} rows, polynomial has {f.num_vars} variables")
    m = len(rows[0]) if rows else 0
    if any(len(r) != m for r in rows):
        raise PolynomialError("ragged matrix")
    forms = [Polynomial.linear_form([_as_fraction(x) for x in r]) if m else None for r in rows]
    return substitute(f, forms, m)


def substitute(f: Polynomial, images: Sequence[Polynomial], num_vars: int) -> Polynomial:
    """Replace ``t_i`` by ``images[i]`` (polynomials in ``num_vars`` variables)."""
    if len(images) != f.num_vars:
        raise PolynomialError("one image per variable is required")
    powers: list[dict[int, Polynomial]] = [{0: Polynomial.constant(num_vars, 1)} for _ in images]

    def power(i: int, k: int) -> Polynomial:
        cache = powers[i]
        if k not in cache:
            cache[k] = mul(power(i, k - 1), images[i])
        return cache[k]

    out: dict[Exponent, Fraction] = {}
    for e, c in f.terms.items():
        term = Polynomial.constant(num_vars, c)
        for i, k in enumerate(e):
            if k:
                term = mul(term, power(i, k))
        for ee, cc in term.terms.items():
            out[ee] = out.get(ee, 0) + cc
    return Polynomial._raw(num_vars, {e: c for e, c in out.items() if c})


def diagonalize(f: Polynomial) -> Polynomial:
    """Set every variable equal to a single variable ``t``."""
    out: dict[Exponent, Fraction] = {}
    for e, c in f.terms.items():
        k = (sum(e),)
        out[k] = out.get(k, 0) + c
    return Polynomial._raw(1, {e: c for e, c in out.items() if c})


def truncate(f: Polynomial, order: int) -> Polynomial:
    """Drop every term of total degree above ``order``."""
    return Polynomial._raw(f.num_vars, {e: c for e, c in f.terms.items() if sum(e) <= order})


def truncated_mul(f: Polynomial, g: Polynomial, order: int) -> Polynomial:
    f._check(g)
    out: dict[Exponent, Fraction] = {}
    for ea, ca in f.terms.items():
        da = sum(ea)
        if da > order:
            continue
        for eb, cb in g.terms.items():
            if da + sum(eb) > order:
                continue
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return Polynomial._raw(f.num_vars, {e: c for e, c in out.items() if c})


def monomials_of_degree(num_vars: int, d: int):
    """All exponent tuples in ``num_vars`` variables with entries summing to ``d``."""
    if num_vars == 0:
        if d == 0:
            yield ()
        return
    if num_vars == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(num_vars - 1, d - first):
            yield (first,) + rest


def _matrix_rows(A):
    rows = getattr(A, "rows", None)
    if rows is not None and not callable(rows):
        return rows
    return A


# serialization

def _fmt_frac(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _fmt_monomial(e: Exponent) -> str:
    parts = []
    for i, k in enumerate(e):
        if k == 1:
            parts.append(f"t{i}")
        elif k > 1:
            parts.append(f"t{i}^{k}")
    return "*".join(parts)


def to_text(f: Polynomial) -> str:
    if not f:
        return "0"
    out = []
    for idx, (e, c) in enumerate(f.sorted_terms()):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        mono = _fmt_monomial(e)
        if not mono:
            body = _fmt_frac(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_fmt_frac(a)}*{mono}"
        if idx == 0:
            out.append(body if sign == "+" else "-" + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


_VAR_RE = re.compile(r"^t(\d+)(?:\^(\d+))?$")
_NUM_RE = re.compile(r"^\d+(?:/\d+)?$")


def from_text(text: str, num_vars: int | None = None) -> Polynomial:
    """Parse the text form; ``num_vars`` defaults to one past the largest index seen."""
    s = re.sub(r"\s+", "", text)
    if not s:
        raise PolynomialError("empty polynomial text")
    if s[0] not in "+-":
        s = "+" + s
    chunks = re.findall(r"[+-][^+-]*", s)
    if "".join(chunks) != s:
        raise PolynomialError(f"cannot parse {text!r}")
    parsed = []
    max_var = -1
    for chunk in chunks:
        sign = -1 if chunk[0] == "-" else 1
        body = chunk[1:]
        if not body:
            raise PolynomialError(f"dangling sign in {text!r}")
        coef = Fraction(sign)
        powers: dict[int, int] = {}
        for factor in body.split("*"):
            if _NUM_RE.match(factor):
                coef *= Fraction(factor)
                continue
            m = _VAR_RE.match(factor)
            if not m:
                raise PolynomialError(f"bad factor {factor!r} in {text!r}")
            i = int(m.group(1))
            powers[i] = powers.get(i, 0) + int(m.group(2) or 1)
            max_var = max(max_var, i)
        parsed.append((coef, powers))
    n = max_var + 1 if num_vars is None else num_vars
    if max_var >= n:
        raise PolynomialError(f"variable t{max_var} exceeds num_vars={n}")
    terms = []
    for coef, powers in parsed:
        e = [0] * n
        for i, k in powers.items():
            e[i] = k
        terms.append((tuple(e), coef))
    return Polynomial(n, terms)


def to_json_obj(f: Polynomial) -> dict:
    return {
        "num_vars": f.num_vars,
        "terms": [{"exp": list(e), "coef": _fmt_frac(c)} for e, c in f.sorted_terms()],
    }


def from_json_obj(obj: dict) -> Polynomial:
    try:
        n = int(obj["num_vars"])
        terms = [(tuple(t["exp"]), Fraction(str(t["coef"]))) for t in obj["terms"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise PolynomialError(f"malformed polynomial JSON: {exc}") from exc
    return Polynomial(n, terms)


def to_json(f: Polynomial) -> str:
    return json.dumps(to_json_obj(f))


def from_json(text: str) -> Polynomial:
    return from_json_obj(json.loads(text))


def parse(text: str, num_vars: int | None = None) -> Polynomial:
    """Accept either serialization."""
    stripped = text.strip()
    if stripped.startswith("{"):
        f = from_json(stripped)
        if num_vars is not None and f.num_vars != num_vars:
            raise PolynomialError(f"expected {num_vars} variables, file has {f.num_vars}")
        return f
    return from_text(stripped, num_vars)


__all__ = [
    "Exponent", "Polynomial", "PolynomialError", "add", "mul", "evaluate", "support",
    "degree_in_var", "degrees", "total_degree", "is_homogeneous", "homogeneous_part",
    "trailing_degree", "partial_derivative", "normalize", "homogenize", "dehomogenize",
    "flip", "substitute_matrix", "substitute", "diagonalize", "truncate", "truncated_mul",
    "monomials_of_degree", "to_text", "from_text", "to_json_obj", "from_json_obj",
    "to_json", "from_json", "parse",
]
