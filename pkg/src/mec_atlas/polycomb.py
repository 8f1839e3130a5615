"""Exact integer polynomials, Fibonacci/Lucas polynomials and the
composition/partition generators behind the closed-form size spectra."""

from __future__ import annotations

import re
from collections.abc import Iterator, Mapping
from math import comb, factorial
from functools import lru_cache
from typing import Iterable


class Polynomial:
    """Univariate polynomial with Python-int coefficients, stored densely.

    ``coeffs[k]`` is the coefficient of ``x**k``; trailing zeros are trimmed, so
    the zero polynomial has an empty coefficient tuple. Coefficients may be
    negative in intermediate results (some recursions subtract), but every
    count polynomial produced by the library is nonnegative.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def constant(cls, c: int) -> "Polynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "Polynomial":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other) -> "Polynomial":
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> "Polynomial":
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, int):
            return Polynomial(c * other for c in self.coeffs)
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Polynomial":
        result = Polynomial.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, k: int) -> "Polynomial":
        """Multiply by ``x**k``."""
        return Polynomial([0] * k + list(self.coeffs)) if self.coeffs else self

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_at_one(self) -> int:
        return sum(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        return format_polynomial(self)


X = Polynomial((0, 1))
ONE = Polynomial((1,))
ZERO = Polynomial()


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def poly_scale(p: Polynomial, c: int) -> Polynomial:
    return p * c


def poly_eval_at_one(p: Polynomial) -> int:
    return p.eval_at_one()


def format_polynomial(p: Polynomial) -> str:
    """Render in ascending order, e.g. ``1 + 3*x + x^2``; zero terms are omitted."""
    terms = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            var = "x" if k == 1 else f"x^{k}"
            body = var if mag == 1 else f"{mag}*{var}"
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    sign, body = terms[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


_TERM = re.compile(r"^(?:(\d+)(?:\*?x(?:\^(\d+))?)?|x(?:\^(\d+))?)$")


def parse_polynomial(text: str) -> Polynomial:
    """Inverse of :func:`format_polynomial`; also accepts ``3x`` without ``*``."""
    s = text.replace(" ", "")
    if s in ("", "0"):
        return Polynomial()
    if s[0] not in "+-":
        s = "+" + s
    coeffs: dict[int, int] = {}
    for sign, term in re.findall(r"([+-])([^+-]+)", s):
        m = _TERM.match(term)
        if not m:
            raise ValueError(f"cannot parse polynomial term {term!r} in {text!r}")
        if m.group(1) is not None:
            c = int(m.group(1))
            if "x" in term:
                k = int(m.group(2)) if m.group(2) else 1
            else:
                k = 0
        else:
            c = 1
            k = int(m.group(3)) if m.group(3) else 1
        coeffs[k] = coeffs.get(k, 0) + (c if sign == "+" else -c)
    deg = max(coeffs)
    return Polynomial(coeffs.get(k, 0) for k in range(deg + 1))


# ---------------------------------------------------------------------------
# Size spectra
# ---------------------------------------------------------------------------

class SizeSpectrum(Mapping):
    """Class size -> number of classes of that size. Zero counts are dropped."""

    __slots__ = ("_data",)

    def __init__(self, entries: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = entries.items() if isinstance(entries, Mapping) else entries
        data: dict[int, int] = {}
        for size, count in items:
            size, count = int(size), int(count)
            if size < 1:
                raise ValueError(f"class size must be positive, got {size}")
            if count < 0:
                raise ValueError(f"class count must be nonnegative, got {count} for size {size}")
            data[size] = data.get(size, 0) + count
        self._data = {s: c for s, c in sorted(data.items()) if c}

    @classmethod
    def from_sizes(cls, sizes: Iterable[int]) -> "SizeSpectrum":
        return cls((s, 1) for s in sizes)

    def __getitem__(self, size: int) -> int:
        return self._data[size]

    def __iter__(self):
        return iter(self._data)

    def __len__(self) -> int:
        return len(self._data)

    def __eq__(self, other) -> bool:
        if isinstance(other, SizeSpectrum):
            return self._data == other._data
        if isinstance(other, Mapping):
            return self == SizeSpectrum(other)
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self._data.items()))

    def __add__(self, other: "SizeSpectrum") -> "SizeSpectrum":
        return SizeSpectrum(list(self.items()) + list(other.items()))

    def __mul__(self, other: "SizeSpectrum") -> "SizeSpectrum":
        """Spectrum of a disjoint union: sizes multiply, counts multiply."""
        return SizeSpectrum((s * t, a * b) for s, a in self.items() for t, b in other.items())

    def total(self) -> int:
        """Number of classes."""
        return sum(self._data.values())

    def orientations(self) -> int:
        """Number of DAGs covered: sum of size times count."""
        return sum(s * c for s, c in self._data.items())

    def __repr__(self) -> str:
        return f"SizeSpectrum({self._data})"

    def __str__(self) -> str:
        return "{" + ", ".join(f"{s}:{c}" for s, c in self._data.items()) + "}"


# ---------------------------------------------------------------------------
# Fibonacci and Lucas
# ---------------------------------------------------------------------------

def fibonacci(p: int) -> int:
    """Fibonacci numbers with ``F_0 = F_1 = 1``."""
    if p < 0:
        raise ValueError(f"Fibonacci index must be nonnegative, got {p}")
    a, b = 1, 1
    for _ in range(p):
        a, b = b, a + b
    return a


def lucas(p: int) -> int:
    """Lucas numbers ``2, 1, 3, 4, 7, 11, ...``."""
    if p < 0:
        raise ValueError(f"Lucas index must be nonnegative, got {p}")
    a, b = 2, 1
    for _ in range(p):
        a, b = b, a + b
    return a


@lru_cache(maxsize=None)
def fibonacci_polynomial(p: int) -> Polynomial:
    """``F_p(x) = sum_k C(p-k, k) x^k``."""
    if p < 0:
        raise ValueError(f"Fibonacci polynomial index must be nonnegative, got {p}")
    return Polynomial(comb(p - k, k) for k in range(p // 2 + 1))


@lru_cache(maxsize=None)
def lucas_polynomial(p: int) -> Polynomial:
    """``L_0 = 2``, ``L_1 = 1``, ``L_p = L_{p-1} + x L_{p-2}``."""
    if p < 0:
        raise ValueError(f"Lucas polynomial index must be nonnegative, got {p}")
    if p == 0:
        return Polynomial.constant(2)
    prev, cur = Polynomial.constant(2), Polynomial.constant(1)
    for _ in range(p - 1):
        prev, cur = cur, cur + prev.shift(1)
    return cur


# ---------------------------------------------------------------------------
# Compositions and partitions
# ---------------------------------------------------------------------------

def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Ordered tuples of ``parts`` positive integers summing to ``total``, in lex order."""
    if parts < 1:
        raise ValueError(f"number of parts must be positive, got {parts}")
    if total < parts:
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def bounded_partitions(max_part: int, parts: int, total: int) -> Iterator[tuple[int, ...]]:
    """Partitions of ``total`` into exactly ``parts`` parts, each at most ``max_part``.

    Each partition is yielded as a multiplicity vector ``(m_1, ..., m_j)`` where
    ``m_i`` counts the parts equal to ``i`` and ``j = max_part``. Partitions are
    generated with the largest part first, in decreasing lexicographic order of
    the part sequence.
    """
    if min(max_part, parts, total) < 0:
        raise ValueError("max_part, parts and total must be nonnegative")

    def rec(limit: int, k: int, n: int, mult: list[int]):
        if k == 0:
            if n == 0:
                yield tuple(mult)
            return
        if n < k or n > k * limit:
            return
        for part in range(min(limit, n - k + 1), 0, -1):
            mult[part - 1] += 1
            yield from rec(part, k - 1, n - part, mult)
            mult[part - 1] -= 1

    yield from rec(max_part, parts, total, [0] * max_part)


def multinomial(k: int, mult: Iterable[int]) -> int:
    """``k! / prod(m_i!)`` for multiplicities summing to ``k``."""
    mult = list(mult)
    if any(m < 0 for m in mult) or sum(mult) != k:
        raise ValueError(f"multiplicities {mult} do not sum to {k}")
    out = factorial(k)
    for m in mult:
        out //= factorial(m)
    return out


def lucas_triangle_coefficient(p: int, k: int) -> int:
    """Coefficient of ``x^k`` in ``L_p(x)`` as a sum over bounded partitions.

    The per-partition terms ``p/k * multinomial`` need not be integers
    individually, so the numerators are accumulated and the total divided by
    ``k`` once.
    """
    if k == 0:
        return lucas_polynomial(p)[0]
    if k < 0 or 2 * k > p:
        raise ValueError(f"need 1 <= k and 2k <= p, got p={p}, k={k}")
    acc = 0
    for mult in bounded_partitions(p - 2 * k + 1, k, p - k):
        acc += p * multinomial(k, mult)
    q, r = divmod(acc, k)
    if r:
        raise ArithmeticError(f"partition sum for p={p}, k={k} is not divisible by k")
    return q
