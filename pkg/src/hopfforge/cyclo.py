"""
Exact arithmetic in cyclotomic fields Q(zeta_N).

A :class:`CycloNumber` stores a conductor ``N`` and the coordinates of the value
in the power basis ``1, zeta_N, ..., zeta_N^(phi(N)-1)`` reduced modulo the N-th
cyclotomic polynomial. Every constructor reduces to the smallest conductor that
supports the value, so equal numbers always have identical representations.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from sympy import Matrix, Poly, QQ, Rational as SympyRational, cyclotomic_poly
from sympy import divisors, symbols, totient

from .exceptions import DivisionByZeroError, PreconditionError

Scalar = Union["CycloNumber", int, Fraction]

_X = symbols("x")


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, SympyRational):
        return Fraction(int(value.p), int(value.q))
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    raise TypeError(f"Cannot read {value!r} as an exact rational")


@lru_cache(maxsize=None)
def _phi(n: int) -> int:
    return int(totient(n))


@lru_cache(maxsize=None)
def _power_table(n: int) -> Tuple[Tuple[int, ...], ...]:
    """Rows k = 0..n-1 hold the coordinates of x^k modulo the n-th cyclotomic polynomial."""
    degree = _phi(n)
    # monic, lowest degree first
    poly = [int(c) for c in reversed(cyclotomic_poly(n, _X, polys=True).all_coeffs())]
    rows = []
    current = [0] * degree
    current[0] = 1
    for _ in range(n):
        rows.append(tuple(current))
        shifted = [0] + current
        top = shifted[degree]
        if top:
            shifted = [shifted[i] - top * poly[i] for i in range(degree + 1)]
        current = shifted[:degree]
    return tuple(rows)


def _reduce_powers(n: int, terms: Iterable[Tuple[int, Fraction]]) -> List[Fraction]:
    """Sum c * zeta_n^k over (k, c) pairs, returned in the reduced power basis."""
    table = _power_table(n)
    out = [Fraction(0)] * _phi(n)
    for k, c in terms:
        if not c:
            continue
        row = table[k % n]
        for i, r in enumerate(row):
            if r:
                out[i] += c * r
    return out


@lru_cache(maxsize=None)
def _descent_data(m: int, n: int):
    """
    Embedding of Q(zeta_m) into Q(zeta_n) (m | n) together with a left inverse
    read off a set of pivot columns.
    """
    step = n // m
    lifted = [
        _reduce_powers(n, [(j * step, Fraction(1))]) for j in range(_phi(m))
    ]
    embedding = Matrix(
        [[SympyRational(c.numerator, c.denominator) for c in row] for row in lifted]
    )
    _, pivots = embedding.rref()
    square = embedding.extract(list(range(_phi(m))), list(pivots))
    inverse = square.inv()
    inverse_rows = tuple(
        tuple(_to_fraction(inverse[i, j]) for j in range(inverse.cols))
        for i in range(inverse.rows)
    )
    return tuple(tuple(row) for row in lifted), tuple(pivots), inverse_rows


class CycloNumber:
    """
    Immutable exact element of a cyclotomic field.

    Construct with a conductor and power-basis coordinates of any length; the
    value is reduced modulo the cyclotomic polynomial and then moved to its
    smallest conductor.
    """

    __slots__ = ("_conductor", "_coeffs", "_hash")

    def __init__(self, conductor: int = 1, coeffs: Sequence = (0,)):
        if conductor < 1:
            raise PreconditionError(f"Conductor must be positive, got {conductor}")
        fractions = [_to_fraction(c) for c in coeffs]
        if len(fractions) != _phi(conductor) or conductor % 4 == 2:
            fractions = _reduce_powers(conductor, enumerate(fractions))
        self._conductor, self._coeffs = _minimize(conductor, fractions)
        self._hash = None

    @classmethod
    def _raw(cls, conductor: int, coeffs: Tuple[Fraction, ...]) -> "CycloNumber":
        obj = cls.__new__(cls)
        obj._conductor = conductor
        obj._coeffs = coeffs
        obj._hash = None
        return obj

    @classmethod
    def _from_reduced(cls, conductor: int, coeffs: List[Fraction]) -> "CycloNumber":
        return cls._raw(*_minimize(conductor, coeffs))

    # ------------------------------------------------------------------ constructors

    @classmethod
    def from_rational(cls, value) -> "CycloNumber":
        return cls._raw(1, (_to_fraction(value),))

    @classmethod
    def zero(cls) -> "CycloNumber":
        return _ZERO

    @classmethod
    def one(cls) -> "CycloNumber":
        return _ONE

    # ------------------------------------------------------------------ accessors

    @property
    def conductor(self) -> int:
        return self._conductor

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return self._coeffs

    def is_rational(self) -> bool:
        return self._conductor == 1

    def is_zero(self) -> bool:
        return self._conductor == 1 and self._coeffs[0] == 0

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise PreconditionError(f"{self} is not rational")
        return self._coeffs[0]

    # ------------------------------------------------------------------ arithmetic

    def _lifted(self, n: int) -> List[Fraction]:
        if n == self._conductor:
            return list(self._coeffs)
        step = n // self._conductor
        return _reduce_powers(
            n, ((j * step, c) for j, c in enumerate(self._coeffs))
        )

    def __add__(self, other: Scalar) -> "CycloNumber":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self._conductor == 1 and other._conductor == 1:
            return CycloNumber._raw(1, (self._coeffs[0] + other._coeffs[0],))
        n = _lcm(self._conductor, other._conductor)
        a, b = self._lifted(n), other._lifted(n)
        return CycloNumber._from_reduced(n, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self) -> "CycloNumber":
        return CycloNumber._raw(self._conductor, tuple(-c for c in self._coeffs))

    def __sub__(self, other: Scalar) -> "CycloNumber":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "CycloNumber":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: Scalar) -> "CycloNumber":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self._conductor == 1 and other._conductor == 1:
            return CycloNumber._raw(1, (self._coeffs[0] * other._coeffs[0],))
        if other._conductor == 1:
            return self._scaled(other._coeffs[0])
        if self._conductor == 1:
            return other._scaled(self._coeffs[0])
        n = _lcm(self._conductor, other._conductor)
        a, b = self._lifted(n), other._lifted(n)
        terms = {}
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    terms[i + j] = terms.get(i + j, 0) + x * y
        return CycloNumber._from_reduced(n, _reduce_powers(n, terms.items()))

    __rmul__ = __mul__

    def _scaled(self, factor: Fraction) -> "CycloNumber":
        if not factor:
            return _ZERO
        return CycloNumber._raw(self._conductor, tuple(c * factor for c in self._coeffs))

    def inverse(self) -> "CycloNumber":
        if self.is_zero():
            raise DivisionByZeroError("Cannot invert zero")
        if self._conductor == 1:
            return CycloNumber._raw(1, (1 / self._coeffs[0],))
        n = self._conductor
        value = Poly(
            [SympyRational(c.numerator, c.denominator) for c in reversed(self._coeffs)],
            _X,
            domain=QQ,
        )
        modulus = cyclotomic_poly(n, _X, polys=True).set_domain(QQ)
        inverse = value.invert(modulus)
        coeffs = [_to_fraction(c) for c in reversed(inverse.all_coeffs())]
        return CycloNumber(n, coeffs)

    def __truediv__(self, other: Scalar) -> "CycloNumber":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: Scalar) -> "CycloNumber":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int) -> "CycloNumber":
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        exponent = abs(exponent)
        result = _ONE
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self) -> "CycloNumber":
        n = self._conductor
        if n == 1:
            return self
        return CycloNumber._from_reduced(
            n, _reduce_powers(n, ((-k, c) for k, c in enumerate(self._coeffs)))
        )

    # ------------------------------------------------------------------ comparison

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._conductor == other._conductor and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            if self._conductor == 1:
                self._hash = hash(self._coeffs[0])
            else:
                self._hash = hash((self._conductor, self._coeffs))
        return self._hash

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        return f"CycloNumber({self._conductor}, {[str(c) for c in self._coeffs]})"

    def __str__(self) -> str:
        if self._conductor == 1:
            return str(self._coeffs[0])
        parts = []
        for k, c in enumerate(self._coeffs):
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
                continue
            power = f"z{self._conductor}" if k == 1 else f"z{self._conductor}^{k}"
            if c == 1:
                parts.append(power)
            elif c == -1:
                parts.append(f"-{power}")
            else:
                parts.append(f"{c}*{power}")
        return " + ".join(parts).replace("+ -", "- ")


def _coerce(value) -> "CycloNumber":
    if isinstance(value, CycloNumber):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return CycloNumber._raw(1, (Fraction(value),))
    return NotImplemented


def _minimize(n: int, coeffs: List[Fraction]) -> Tuple[int, Tuple[Fraction, ...]]:
    """Move a reduced coordinate vector to the smallest conductor supporting it."""
    if all(not c for c in coeffs[1:]):
        return 1, (coeffs[0],)
    for m in divisors(n):
        m = int(m)
        if m == 1 or m == n or m % 4 == 2:
            continue
        lifted, pivots, inverse_rows = _descent_data(m, n)
        picked = [coeffs[p] for p in pivots]
        candidate = [
            sum((picked[i] * inverse_rows[i][j] for i in range(len(picked))), Fraction(0))
            for j in range(len(inverse_rows[0]))
        ]
        rebuilt = [Fraction(0)] * len(coeffs)
        for j, c in enumerate(candidate):
            if c:
                for t, r in enumerate(lifted[j]):
                    if r:
                        rebuilt[t] += c * r
        if rebuilt == list(coeffs):
            return m, tuple(candidate)
    return n, tuple(coeffs)


_ZERO = CycloNumber._raw(1, (Fraction(0),))
_ONE = CycloNumber._raw(1, (Fraction(1),))


def as_cyclo(value: Scalar) -> CycloNumber:
    """Coerce ints, Fractions and CycloNumbers to a CycloNumber."""
    coerced = _coerce(value)
    if coerced is NotImplemented:
        raise TypeError(f"Cannot use {value!r} as a field element")
    return coerced


def root_of_unity(n: int, k: int = 1) -> CycloNumber:
    """Return zeta_n^k in canonical form."""
    if n < 1:
        raise PreconditionError(f"Root of unity order must be positive, got {n}")
    return CycloNumber._from_reduced(n, _reduce_powers(n, [(k, Fraction(1))]))


def discrete_log(value: CycloNumber, n: int) -> Optional[int]:
    """The exponent k in [0, n) with zeta_n^k == value, or None."""
    for k in range(n):
        if root_of_unity(n, k) == value:
            return k
    return None
