"""Exact univariate polynomial arithmetic over Python's big integers.

A polynomial c0 + c1*λ + ... + cd*λ^d is stored as the coefficient tuple
(c0, c1, ..., cd) with a nonzero last entry; the zero polynomial is the
empty tuple.  Values are immutable, hashable and safe to share between
concurrently running tasks.

Every weight-system quantity in this package lives in Z[λ], so there is no
rational or floating-point arithmetic anywhere: all results are exact.
"""

from __future__ import annotations

from collections.abc import Iterable

DEFAULT_VARIABLE = "λ"


class IntPoly:
    """Polynomial in one variable with arbitrary-precision integer coefficients."""

    __slots__ = ("coeffs",)

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"integer coefficients required, got {type(c).__name__}")
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def constant(cls, c: int) -> IntPoly:
        return cls((c,))

    @property
    def degree(self) -> int | None:
        """Degree of the polynomial; None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def coefficient(self, k: int) -> int:
        """Coefficient of the k-th power (0 beyond the degree)."""
        if k < 0:
            raise ValueError("power index must be nonnegative")
        return self.coeffs[k] if k < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == (IntPoly.constant(other)).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({self.coeffs!r})"

    def __str__(self) -> str:
        return self.to_text()

    @staticmethod
    def _coerce(value) -> IntPoly | None:
        if isinstance(value, IntPoly):
            return value
        if isinstance(value, int):
            return IntPoly((value,))
        return None

    def __add__(self, other) -> IntPoly:
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        a, b = self.coeffs, q.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self) -> IntPoly:
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> IntPoly:
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other) -> IntPoly:
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return q + (-self)

    def __mul__(self, other) -> IntPoly:
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        a, b = self.coeffs, q.coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> IntPoly:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = ONE
        for _ in range(exponent):
            result = result * self
        return result

    def evaluate(self, x: int) -> int:
        """Evaluate at an integer by Horner's rule."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: IntPoly) -> IntPoly:
        """Substitute another polynomial for the variable (Horner over the ring)."""
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def to_text(self, var: str = DEFAULT_VARIABLE) -> str:
        """Canonical text form: terms in descending powers with explicit signs.

        The layout matches computer-algebra output: "4 x^4 + 16 x^3 - 4 x^2 - 40 x".
        Unit coefficients are dropped in front of powers; zero prints as "0".
        """
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = var if k == 1 else f"{var}^{k}"
                body = power if mag == 1 else f"{mag} {power}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


ZERO = IntPoly()
ONE = IntPoly((1,))
LAM = IntPoly((0, 1))
LAM_PLUS_TWO = IntPoly((2, 1))

# The basis change d = λ + 2 and its inverse λ = d - 2, as substitutions.
_D_MINUS_TWO = IntPoly((-2, 1))


def to_d_basis(p: IntPoly) -> IntPoly:
    """Re-express p(λ) in powers of d = λ + 2, i.e. return q with q(d) = p(d - 2)."""
    return p.compose(_D_MINUS_TWO)


def from_d_basis(q: IntPoly) -> IntPoly:
    """Inverse of to_d_basis: substitute d = λ + 2."""
    return q.compose(LAM_PLUS_TWO)
