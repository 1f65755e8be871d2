"""Integer Laurent polynomials in q^(1/2).

Elements are stored sparsely as {half_exponent: coefficient} where the key
counts half-units: the monomial q^(k/2) is stored under key k. Working in
w = q^(1/2) keeps every exponent an integer, so arithmetic never leaves Z.
The rendering layer is the only place halves reappear.

The quantum integer [a] = (q^(a/2) - q^(-a/2)) / (q^(1/2) - q^(-1/2)) is the
building block of refined multiplicities; products of quantum integers are
symmetric under q -> 1/q and evaluate at q=1 to ordinary integers.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .errors import NonPositive, NotDivisible


class HalfLaurent:
    """Immutable sparse Laurent polynomial in w = q^(1/2) over Z."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | int = 0):
        if isinstance(coeffs, int):
            coeffs = {0: coeffs} if coeffs else {}
        clean = {}
        for k, c in coeffs.items():
            if not isinstance(k, int) or not isinstance(c, int):
                raise TypeError("exponents and coefficients must be integers")
            if c:
                clean[k] = c
        object.__setattr__(self, "_c", clean)

    def __setattr__(self, name, value):
        raise AttributeError("HalfLaurent is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def monomial(cls, half_exp: int, coeff: int = 1) -> "HalfLaurent":
        """coeff * q^(half_exp / 2)."""
        return cls({half_exp: coeff})

    @classmethod
    def q_power(cls, exp: int, coeff: int = 1) -> "HalfLaurent":
        """coeff * q^exp for a whole exponent."""
        return cls({2 * exp: coeff})

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "HalfLaurent":
        d: dict[int, int] = {}
        for k, c in pairs:
            d[k] = d.get(k, 0) + c
        return cls(d)

    # -- inspection --------------------------------------------------------

    def coeff(self, half_exp: int) -> int:
        return self._c.get(half_exp, 0)

    def items(self) -> Iterator[tuple[int, int]]:
        """(half_exponent, coefficient) pairs, descending by exponent."""
        return iter(sorted(self._c.items(), reverse=True))

    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self._c))

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = HalfLaurent(other)
        if not isinstance(other, HalfLaurent):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = HalfLaurent(other)
        if not isinstance(other, HalfLaurent):
            return NotImplemented
        d = dict(self._c)
        for k, c in other._c.items():
            d[k] = d.get(k, 0) + c
        return HalfLaurent(d)

    __radd__ = __add__

    def __neg__(self):
        return HalfLaurent({k: -c for k, c in self._c.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = HalfLaurent(other)
        if not isinstance(other, HalfLaurent):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return HalfLaurent(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return HalfLaurent({k: c * other for k, c in self._c.items()})
        if not isinstance(other, HalfLaurent):
            return NotImplemented
        d: dict[int, int] = {}
        for k1, c1 in self._c.items():
            for k2, c2 in other._c.items():
                k = k1 + k2
                d[k] = d.get(k, 0) + c1 * c2
        return HalfLaurent(d)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        out = HalfLaurent(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- the operations the invariants need --------------------------------

    def exact_div(self, den: "HalfLaurent") -> "HalfLaurent":
        """Exact quotient in Z[q^(1/2), q^(-1/2)].

        Raises NotDivisible (carrying the remainder) if den does not divide
        self over the integers.
        """
        if isinstance(den, int):
            den = HalfLaurent(den)
        if not den:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self:
            return HalfLaurent(0)
        nlo, nhi = min(self._c), max(self._c)
        dlo, dhi = min(den._c), max(den._c)
        # dense coefficient lists of self * w^-nlo and den * w^-dlo
        num = [Fraction(self._c.get(k, 0)) for k in range(nlo, nhi + 1)]
        div = [den._c.get(k, 0) for k in range(dlo, dhi + 1)]
        if len(num) < len(div):
            raise NotDivisible("denominator has larger span", remainder=self)
        lead = div[-1]
        quot = [Fraction(0)] * (len(num) - len(div) + 1)
        for i in range(len(quot) - 1, -1, -1):
            c = num[i + len(div) - 1] / lead
            quot[i] = c
            if c:
                for j, dj in enumerate(div):
                    num[i + j] -= c * dj
        if any(num):
            rem = HalfLaurent.from_pairs(
                (nlo + i, int(c)) for i, c in enumerate(num)
                if c and c.denominator == 1)
            # a fractional remainder still means "not divisible"; report the
            # integer part of what is left for diagnostics
            raise NotDivisible("division leaves a remainder", remainder=rem)
        if any(c.denominator != 1 for c in quot):
            raise NotDivisible("quotient is not integral", remainder=HalfLaurent(0))
        shift = nlo - dlo
        return HalfLaurent.from_pairs(
            (shift + i, int(c)) for i, c in enumerate(quot))

    def eval_q1(self) -> int:
        """Value at q = 1 (the classical specialization): sum of coefficients."""
        return sum(self._c.values())

    def eval_q_minus1(self) -> tuple[int, int]:
        """Value at q = -1 taken through w = q^(1/2) -> i.

        Returns the Gaussian integer (a, b) meaning a + b*i. For polynomials
        symmetric under q -> 1/q the imaginary part vanishes.
        """
        re = im = 0
        for k, c in self._c.items():
            r = k % 4
            if r == 0:
                re += c
            elif r == 1:
                im += c
            elif r == 2:
                re -= c
            else:
                im -= c
        return re, im

    def is_symmetric(self) -> bool:
        """True when invariant under q -> 1/q (palindromic coefficients)."""
        return all(self._c.get(-k, 0) == c for k, c in self._c.items())

    # -- presentation ------------------------------------------------------

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts: list[str] = []
        for k, c in self.items():
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                if k % 2 == 0:
                    e = k // 2
                    name = "q" if e == 1 else f"q^{e}"
                else:
                    name = f"q^{k}/2"
                body = name if mag == 1 else f"{mag}*{name}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"HalfLaurent({self._c!r})"

    def to_json_pairs(self) -> list[list[int]]:
        """[[half_exponent, coeff], ...] sorted by descending exponent."""
        return [[k, c] for k, c in self.items()]

    @classmethod
    def from_json_pairs(cls, pairs) -> "HalfLaurent":
        return cls.from_pairs((int(k), int(c)) for k, c in pairs)


ZERO = HalfLaurent(0)
ONE = HalfLaurent(1)
Q = HalfLaurent.q_power(1)
Q_HALF = HalfLaurent.monomial(1)


def q_analog(a: int) -> HalfLaurent:
    """The quantum integer [a] = q^((a-1)/2) + q^((a-3)/2) + ... + q^(-(a-1)/2)."""
    if a < 1:
        raise NonPositive(f"quantum integer needs a >= 1, got {a}")
    return HalfLaurent({k: 1 for k in range(-(a - 1), a, 2)})


def w_pow_minus_inverse(a: int) -> HalfLaurent:
    """q^(a/2) - q^(-a/2), the numerator of the quantum integer [a]."""
    if a < 1:
        raise NonPositive(f"need a >= 1, got {a}")
    return HalfLaurent({a: 1, -a: -1})
