"""Exact integer Laurent polynomials in t and Gaussian binomials."""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Iterable, Mapping


class LaurentPoly:
    """Immutable integer Laurent polynomial, stored as {exponent: coefficient}."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[int, int] = {}
        for e, a in items:
            e, a = int(e), int(a)
            c[e] = c.get(e, 0) + a
        self._c = {e: c[e] for e in sorted(c) if c[e] != 0}
        self._hash = None

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> LaurentPoly:
        return cls({exponent: coeff})

    @classmethod
    def from_dense(cls, coeffs: Iterable[int], step: int = 1, offset: int = 0) -> LaurentPoly:
        return cls((offset + step * n, a) for n, a in enumerate(coeffs))

    def terms(self) -> list[tuple[int, int]]:
        return list(self._c.items())

    def coeff(self, e: int) -> int:
        return self._c.get(e, 0)

    def is_zero(self) -> bool:
        return not self._c

    @property
    def min_degree(self) -> int | None:
        return next(iter(self._c), None)

    @property
    def max_degree(self) -> int | None:
        return next(reversed(self._c), None) if self._c else None

    def dense(self, step: int = 1, start: int = 0, stop: int | None = None) -> list[int]:
        """Coefficients at start, start+step, ..., stop (inclusive)."""
        if stop is None:
            stop = self.max_degree if self._c else start
        return [self.coeff(e) for e in range(start, stop + 1, step)]

    def __call__(self, x):
        return sum(a * x**e for e, a in self._c.items())

    def __add__(self, other):
        other = _coerce(other)
        out = dict(self._c)
        for e, a in other._c.items():
            out[e] = out.get(e, 0) + a
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -a for e, a in self._c.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        out: dict[int, int] = {}
        for e1, a1 in self._c.items():
            for e2, a2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + a1 * a2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def shift(self, s: int) -> LaurentPoly:
        return LaurentPoly({e + s: a for e, a in self._c.items()})

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._c.items()))
        return self._hash

    def to_json(self) -> list[list[int]]:
        return [[e, a] for e, a in self._c.items()]

    @classmethod
    def from_json(cls, pairs) -> LaurentPoly:
        return cls((e, a) for e, a in pairs)

    def __str__(self) -> str:
        if not self._c:
            return "0"
        out = []
        for e, a in self._c.items():
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            out.append((sign, body))
        first_sign, first = out[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"LaurentPoly({self._c!r})"


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})

_TERM = re.compile(r"^(?:(\d+)\*?)?(t(?:\^(-?\d+))?)?$")


def parse_poly(text: str) -> LaurentPoly:
    """Inverse of ``str(LaurentPoly)``."""
    s = text.replace(" ", "")
    if s in ("", "0"):
        return ZERO
    if s[0] not in "+-":
        s = "+" + s
    coeffs: dict[int, int] = {}
    for chunk in re.split(r"(?<!\^)(?=[+-])", s):
        if not chunk:
            continue
        sign, body = chunk[0], chunk[1:]
        m = _TERM.match(body)
        if not m or (m.group(1) is None and m.group(2) is None):
            raise ValueError(f"bad polynomial term {body!r}")
        a = int(m.group(1)) if m.group(1) else 1
        if m.group(2) is None:
            e = 0
        else:
            e = int(m.group(3)) if m.group(3) is not None else 1
        coeffs[e] = coeffs.get(e, 0) + (a if sign == "+" else -a)
    return LaurentPoly(coeffs)


def _coerce(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly({0: x})
    raise TypeError(f"cannot use {type(x).__name__} as LaurentPoly")


def poly_add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def poly_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def poly_shift(a: LaurentPoly, s: int) -> LaurentPoly:
    return a.shift(s)


def poly_scale(a: LaurentPoly, n: int) -> LaurentPoly:
    return LaurentPoly({e: n * c for e, c in a.terms()})


@lru_cache(maxsize=None)
def _gauss_q(n: int, k: int) -> tuple[int, ...]:
    # coefficients in q of [n choose k]_q, Pascal: [n-1,k-1] + q^k [n-1,k]
    if k < 0 or k > n:
        return ()
    if k == 0 or k == n:
        return (1,)
    a = _gauss_q(n - 1, k - 1)
    b = _gauss_q(n - 1, k)
    out = [0] * (k * (n - k) + 1)
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i + k] += x
    return tuple(out)


def gaussian_binomial(n: int, k: int, step: int = 2) -> LaurentPoly:
    """q-binomial [n choose k] with q = t**step; zero outside 0 <= k <= n."""
    if step <= 0:
        raise ValueError("step must be positive")
    if n < 0 or k < 0 or k > n:
        return ZERO
    # fill the cache bottom-up so deep rows never hit the recursion limit
    for m in range(n):
        for j in range(min(k, m) + 1):
            _gauss_q(m, j)
    return LaurentPoly.from_dense(_gauss_q(n, k), step=step)


def grassmannian_poincare(a: int, b: int) -> LaurentPoly:
    """Poincaré polynomial of the Grassmannian of a-planes in C^b."""
    return gaussian_binomial(b, a, 2)


def is_palindromic(P: LaurentPoly, center: int) -> bool:
    return all(P.coeff(2 * center - e) == a for e, a in P.terms())


def evaluate_at_one(P: LaurentPoly) -> int:
    return sum(a for _, a in P.terms())
