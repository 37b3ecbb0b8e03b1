"""Exact truncated formal power series in q over Z and over Z[x].

Everything here is exact integer arithmetic at a fixed truncation order: a
series of order N tracks the coefficients of q^0..q^N and nothing beyond.
Mixing orders raises :class:`OrderMismatch` rather than coercing silently.

The building blocks are Pochhammer products

    (a; b)_n = prod_{t=0}^{n-1} (1 - a b^t),       n finite or infinite,

with monomial arguments a = +-x^e q^f (f >= 1 so infinite products
terminate at any truncation), series inversion for unit constant terms, and
on top of them the q-series that drive the identity checks:

* ``series_w(k, i, order)`` -- the alternating sum

      sum_{n>=0} (-1)^n q^{(2k-1)C(n+1,2) - in} x^{(k-1)n}
                 (1 - x^i q^{(2n+1)i}) (-xq)_inf / ((q)_n (xq^{n+1})_inf)

  whose x^m q^n coefficient counts the overpartitions with m parts and
  weight n meeting the ``main`` multiplicity conditions (k >= 2).

* ``bilateral_theta(k, i, order)`` -- the two-sided theta sum
  sum_{n in Z} (-1)^n q^{(2k-1)C(n+1,2) - in}, which the Jacobi triple
  product turns into ``triple_product(k, i, order)``.

* ``residue_product(modulus, allowed_plain, allowed_over, order)`` -- the
  generating function of overpartitions with residue-restricted parts.

>>> invert(pochhammer([Monomial(1, 0, 1)], Monomial(1, 0, 1), None, 4)).at_x_one()
QSeries(order=4, coeffs=(1, 1, 2, 3, 5))
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import count as _count
from math import isqrt

from .core import InvalidParameters


class OrderMismatch(ValueError):
    """Series of different truncation orders were combined."""


class IllFormedMonomial(ValueError):
    """A monomial violating the Pochhammer argument rules was supplied."""


class NonUnitConstantTerm(ValueError):
    """Inversion requested for a series whose constant term is not +-1."""

    def __init__(self, message: str, span: tuple[int, int] | None = None):
        super().__init__(message)
        self.span = span


@dataclass(frozen=True)
class Monomial:
    """``sign * x^x_exp * q^q_exp`` with sign in {+1, -1}."""

    sign: int
    x_exp: int
    q_exp: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise IllFormedMonomial(f"sign must be +-1, got {self.sign}")
        if self.x_exp < 0:
            raise IllFormedMonomial(f"negative x exponent {self.x_exp}")


def _check_poch_monomial(mono: Monomial, role: str) -> None:
    if mono.q_exp < 1:
        raise IllFormedMonomial(f"Pochhammer {role} needs q exponent >= 1, got {mono.q_exp}")


# ---------------------------------------------------------------------------
# dense integer polynomials in x, as trimmed tuples

def _ptrim(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _padd(a, b) -> tuple[int, ...]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for j, v in enumerate(b):
        out[j] += v
    return _ptrim(out)


def _pmul(a, b) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for j, u in enumerate(a):
        if u:
            for t, v in enumerate(b):
                out[j + t] += u * v
    return _ptrim(out)


def _pscale(a, c: int) -> tuple[int, ...]:
    if c == 0:
        return ()
    return tuple(v * c for v in a)


def _pshift(a, e: int) -> tuple[int, ...]:
    if not a:
        return ()
    return (0,) * e + tuple(a)


@dataclass(frozen=True)
class QSeries:
    """Truncated series in q with exact integer coefficients."""

    order: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.order < 0:
            raise InvalidParameters(f"order must be >= 0, got {self.order}")
        c = tuple(self.coeffs)
        if len(c) > self.order + 1:
            raise InvalidParameters("more coefficients than the order allows")
        c = c + (0,) * (self.order + 1 - len(c))
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def zero(cls, order: int) -> "QSeries":
        return cls(order, ())

    @classmethod
    def one(cls, order: int) -> "QSeries":
        return cls(order, (1,))

    @classmethod
    def monomial(cls, order: int, q_exp: int, coeff: int = 1) -> "QSeries":
        if q_exp < 0:
            raise InvalidParameters(f"negative q exponent {q_exp}")
        if q_exp > order:
            return cls.zero(order)
        return cls(order, (0,) * q_exp + (coeff,))

    def __getitem__(self, n: int) -> int:
        if not 0 <= n <= self.order:
            raise IndexError(f"exponent {n} outside 0..{self.order}")
        return self.coeffs[n]

    def _match(self, other: "QSeries") -> None:
        if not isinstance(other, QSeries):
            raise TypeError(f"expected QSeries, got {type(other).__name__}")
        if self.order != other.order:
            raise OrderMismatch(f"orders {self.order} and {other.order} differ")

    def __add__(self, other: "QSeries") -> "QSeries":
        self._match(other)
        return QSeries(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "QSeries") -> "QSeries":
        self._match(other)
        return QSeries(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "QSeries":
        return QSeries(self.order, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return QSeries(self.order, tuple(a * other for a in self.coeffs))
        self._match(other)
        out = [0] * (self.order + 1)
        for j, u in enumerate(self.coeffs):
            if u:
                for t in range(self.order + 1 - j):
                    v = other.coeffs[t]
                    if v:
                        out[j + t] += u * v
        return QSeries(self.order, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "QSeries":
        if e < 0:
            return self.invert() ** (-e)
        out = QSeries.one(self.order)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base if e > 1 else base
            e >>= 1
        return out

    def invert(self) -> "QSeries":
        """Multiplicative inverse at this order; constant term must be +-1."""
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise NonUnitConstantTerm(f"constant term {c0} is not +-1")
        inv = [c0] + [0] * self.order
        for n in range(1, self.order + 1):
            acc = 0
            for j in range(1, n + 1):
                if self.coeffs[j]:
                    acc += self.coeffs[j] * inv[n - j]
            inv[n] = -c0 * acc
        return QSeries(self.order, tuple(inv))

    def to_x(self) -> "XQSeries":
        return XQSeries(self.order, tuple((c,) if c else () for c in self.coeffs))


@dataclass(frozen=True)
class XQSeries:
    """Truncated series in q whose q^n coefficient is an integer polynomial
    in x, stored dense in q and trimmed in x."""

    order: int
    coeffs: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.order < 0:
            raise InvalidParameters(f"order must be >= 0, got {self.order}")
        c = [_ptrim(list(p)) for p in self.coeffs]
        if len(c) > self.order + 1:
            raise InvalidParameters("more coefficients than the order allows")
        c.extend(() for _ in range(self.order + 1 - len(c)))
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def zero(cls, order: int) -> "XQSeries":
        return cls(order, ())

    @classmethod
    def one(cls, order: int) -> "XQSeries":
        return cls(order, ((1,),))

    @classmethod
    def monomial(cls, order: int, sign: int, x_exp: int, q_exp: int) -> "XQSeries":
        if q_exp < 0 or x_exp < 0:
            raise InvalidParameters("negative exponent in monomial series")
        if q_exp > order:
            return cls.zero(order)
        poly = (0,) * x_exp + (sign,)
        return cls(order, ((),) * q_exp + (poly,))

    def coeff(self, m: int, n: int) -> int:
        """Coefficient of x^m q^n."""
        if not 0 <= n <= self.order:
            raise IndexError(f"q exponent {n} outside 0..{self.order}")
        poly = self.coeffs[n]
        return poly[m] if 0 <= m < len(poly) else 0

    def _match(self, other: "XQSeries") -> None:
        if not isinstance(other, XQSeries):
            raise TypeError(f"expected XQSeries, got {type(other).__name__}")
        if self.order != other.order:
            raise OrderMismatch(f"orders {self.order} and {other.order} differ")

    def __add__(self, other: "XQSeries") -> "XQSeries":
        self._match(other)
        return XQSeries(self.order, tuple(_padd(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "XQSeries") -> "XQSeries":
        return self + (-other)

    def __neg__(self) -> "XQSeries":
        return XQSeries(self.order, tuple(_pscale(a, -1) for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return XQSeries(self.order, tuple(_pscale(a, other) for a in self.coeffs))
        self._match(other)
        out: list[tuple[int, ...]] = [() for _ in range(self.order + 1)]
        for j, u in enumerate(self.coeffs):
            if u:
                for t in range(self.order + 1 - j):
                    v = other.coeffs[t]
                    if v:
                        out[j + t] = _padd(out[j + t], _pmul(u, v))
        return XQSeries(self.order, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "XQSeries":
        if e < 0:
            return self.invert() ** (-e)
        out = XQSeries.one(self.order)
        for _ in range(e):
            out = out * self
        return out

    def mul_monomial(self, sign: int, x_exp: int, q_exp: int) -> "XQSeries":
        """Multiply by ``sign * x^x_exp * q^q_exp`` exactly, dropping terms
        past the order."""
        out = [() for _ in range(self.order + 1)]
        for n in range(self.order + 1 - q_exp):
            poly = self.coeffs[n]
            if poly:
                out[n + q_exp] = _pshift(_pscale(poly, sign), x_exp)
        return XQSeries(self.order, tuple(out))

    def one_minus_times(self, sign: int, x_exp: int, q_exp: int) -> "XQSeries":
        """Multiply by the factor ``1 - sign * x^x_exp * q^q_exp``."""
        return self - self.mul_monomial(sign, x_exp, q_exp)

    def invert(self) -> "XQSeries":
        """Inverse at this order; the constant term must be the scalar +-1."""
        c0 = self.coeffs[0]
        if c0 not in ((1,), (-1,)):
            raise NonUnitConstantTerm(f"constant term {c0 or 0} is not +-1")
        unit = c0[0]
        inv: list[tuple[int, ...]] = [(unit,)] + [() for _ in range(self.order)]
        for n in range(1, self.order + 1):
            acc: tuple[int, ...] = ()
            for j in range(1, n + 1):
                if self.coeffs[j]:
                    acc = _padd(acc, _pmul(self.coeffs[j], inv[n - j]))
            inv[n] = _pscale(acc, -unit)
        return XQSeries(self.order, tuple(inv))

    def subs_x_to_xq(self) -> "XQSeries":
        """The exact substitution x -> xq: x^a q^b becomes x^a q^{a+b}."""
        out: list[list[int]] = [[] for _ in range(self.order + 1)]
        for b, poly in enumerate(self.coeffs):
            for a, c in enumerate(poly):
                if c and a + b <= self.order:
                    row = out[a + b]
                    if len(row) <= a:
                        row.extend(0 for _ in range(a + 1 - len(row)))
                    row[a] += c
        return XQSeries(self.order, tuple(_ptrim(row) for row in out))

    def at_x_one(self) -> QSeries:
        """Specialise x = 1."""
        return QSeries(self.order, tuple(sum(poly) for poly in self.coeffs))

    def to_qseries(self) -> QSeries:
        """View an x-free series as a plain :class:`QSeries`."""
        for n, poly in enumerate(self.coeffs):
            if len(poly) > 1:
                raise ValueError(f"series involves x at q^{n}")
        return QSeries(self.order, tuple(poly[0] if poly else 0 for poly in self.coeffs))

    def x_degrees(self) -> list[int]:
        """Degree in x of each q coefficient (-1 for zero)."""
        return [len(poly) - 1 for poly in self.coeffs]


def invert(series):
    """Inverse of a :class:`QSeries` or :class:`XQSeries` at its own order."""
    return series.invert()


# ---------------------------------------------------------------------------
# products and sums

def pochhammer(args, base: Monomial, length: int | None, order: int) -> XQSeries:
    """Expand ``prod_j (a_j; base)_length`` at the given order.

    ``length`` may be a non-negative integer or None for the infinite
    product, which terminates automatically once factor exponents pass the
    order.  Arguments and base must have q exponent >= 1.
    """
    if order < 0:
        raise InvalidParameters(f"order must be >= 0, got {order}")
    if length is not None and length < 0:
        raise InvalidParameters(f"length must be >= 0, got {length}")
    args = list(args)
    for mono in args:
        _check_poch_monomial(mono, "argument")
    _check_poch_monomial(base, "base")
    acc = XQSeries.one(order)
    for mono in args:
        for t in _count() if length is None else range(length):
            sign = mono.sign * (base.sign ** (t % 2))
            q_exp = mono.q_exp + t * base.q_exp
            if q_exp > order:
                break
            acc = acc.one_minus_times(sign, mono.x_exp + t * base.x_exp, q_exp)
    return acc


def residue_product(modulus: int, allowed_plain, allowed_over, order: int) -> QSeries:
    """Generating function of overpartitions whose plain part sizes lie in
    ``allowed_plain`` and overlined sizes in ``allowed_over`` mod ``modulus``:
    a factor 1/(1-q^j) per allowed plain j and (1+q^j) per allowed
    overlined j."""
    if modulus < 1:
        raise InvalidParameters(f"modulus must be >= 1, got {modulus}")
    if order < 0:
        raise InvalidParameters(f"order must be >= 0, got {order}")
    allowed_plain = frozenset(allowed_plain)
    allowed_over = frozenset(allowed_over)
    for residues in (allowed_plain, allowed_over):
        if not all(0 <= r < modulus for r in residues):
            raise InvalidParameters("residues must lie in 0..modulus-1")
    coeffs = [1] + [0] * order
    for j in range(1, order + 1):
        if j % modulus in allowed_plain:
            for t in range(j, order + 1):
                coeffs[t] += coeffs[t - j]
    for j in range(1, order + 1):
        if j % modulus in allowed_over:
            for t in range(order, j - 1, -1):
                coeffs[t] += coeffs[t - j]
    return QSeries(order, tuple(coeffs))


def _q_factorial_inverses(order: int, nmax: int) -> list[XQSeries]:
    # 1/(q;q)_n for n = 0..nmax, built incrementally
    out = [XQSeries.one(order)]
    finite = XQSeries.one(order)
    for n in range(1, nmax + 1):
        if n <= order:
            finite = finite.one_minus_times(1, 0, n)
        out.append(finite.invert())
    return out


def series_w(k: int, i: int, order: int) -> XQSeries:
    """The alternating sum whose x^m q^n coefficient counts ``main``
    condition-side overpartitions with m parts and weight n (for k >= 2).

    The n-th summand carries a leading factor q^{(2k-1)C(n+1,2) - in}, so
    only finitely many summands reach any truncation order.  For i = 0 the
    bracket (1 - x^0 q^0) kills every term and the zero series returns.
    """
    if order < 0:
        raise InvalidParameters(f"order must be >= 0, got {order}")
    if k < 1 or not 0 <= i <= k:
        raise InvalidParameters(f"need k >= 1 and 0 <= i <= k, got k={k}, i={i}")
    if i == 0:
        return XQSeries.zero(order)
    minus_xq = pochhammer([Monomial(-1, 1, 1)], Monomial(1, 0, 1), None, order)
    acc = XQSeries.zero(order)
    inv_qfac = XQSeries.one(order)
    qfac = XQSeries.one(order)
    for n in _count():
        lead = (2 * k - 1) * n * (n + 1) // 2 - i * n
        if lead > order:
            break
        if n > 0:
            if n <= order:
                qfac = qfac.one_minus_times(1, 0, n)
                inv_qfac = qfac.invert()
        tail = pochhammer([Monomial(1, 1, n + 1)], Monomial(1, 0, 1), None, order)
        term = minus_xq * inv_qfac * tail.invert()
        term = term.one_minus_times(1, i, (2 * n + 1) * i)
        acc = acc + term.mul_monomial(-1 if n % 2 else 1, (k - 1) * n, lead)
    return acc


def series_j(k: int, i: int, order: int) -> XQSeries:
    """The companion series ``series_w(k, i) - x * series_w(k, i-1)``; at
    i = 1 this is just ``series_w(k, 1)``."""
    if k < 1 or not 1 <= i <= k:
        raise InvalidParameters(f"need 1 <= i <= k, got k={k}, i={i}")
    w_i = series_w(k, i, order)
    if i == 1:
        return w_i
    return w_i - series_w(k, i - 1, order).mul_monomial(1, 1, 0)


def gen_d(k: int, i: int, order: int) -> QSeries:
    """Weight generating function of the ``main`` condition side: the x = 1
    specialisation of :func:`series_w`."""
    if not 1 <= i <= k:
        raise InvalidParameters(f"need 1 <= i <= k, got k={k}, i={i}")
    return series_w(k, i, order).at_x_one()


def bilateral_theta(k: int, i: int, order: int) -> QSeries:
    """The two-sided sum over all integers n of
    (-1)^n q^{(2k-1)C(n+1,2) - in}, truncated at ``order``."""
    if k < 1 or not 1 <= i <= k:
        raise InvalidParameters(f"need 1 <= i <= k, got k={k}, i={i}")
    if order < 0:
        raise InvalidParameters(f"order must be >= 0, got {order}")
    coeffs = [0] * (order + 1)
    bound = isqrt(2 * order) + 3
    for n in range(-bound, bound + 1):
        exp = (2 * k - 1) * n * (n + 1) // 2 - i * n
        if 0 <= exp <= order:
            coeffs[exp] += -1 if n % 2 else 1
    return QSeries(order, tuple(coeffs))


def theta_halves(k: int, i: int, order: int) -> tuple[QSeries, QSeries]:
    """The two one-sided sums adding up to :func:`bilateral_theta`: the
    n >= 0 part, sum (-1)^n q^{(2k-1)C(n+1,2) - in}, and the n < 0 part,
    which after reindexing n -> -(n+1) reads
    sum (-1)^{n+1} q^{(2k-1)C(n+1,2) + i(n+1)}."""
    if k < 1 or not 1 <= i <= k:
        raise InvalidParameters(f"need 1 <= i <= k, got k={k}, i={i}")
    first = [0] * (order + 1)
    second = [0] * (order + 1)
    for n in range(isqrt(2 * order) + 3):
        tri = (2 * k - 1) * n * (n + 1) // 2
        sign = -1 if n % 2 else 1
        if 0 <= tri - i * n <= order:
            first[tri - i * n] += sign
        if tri + i * (n + 1) <= order:
            second[tri + i * (n + 1)] -= sign
    return QSeries(order, tuple(first)), QSeries(order, tuple(second))


def triple_product(k: int, i: int, order: int) -> QSeries:
    """The Jacobi-triple-product form of :func:`bilateral_theta`:
    (q^i, q^{2k-1-i}, q^{2k-1}; q^{2k-1})_inf.  Needs 1 <= i <= 2k-2, since
    otherwise an argument degenerates to q^0."""
    if not 1 <= i <= k:
        raise InvalidParameters(f"need 1 <= i <= k, got k={k}, i={i}")
    mod = 2 * k - 1
    args = [Monomial(1, 0, i), Monomial(1, 0, mod - i), Monomial(1, 0, mod)]
    return pochhammer(args, Monomial(1, 0, mod), None, order).to_qseries()


# ---------------------------------------------------------------------------
# coefficient dumps

def qseries_rows(series: QSeries) -> list[tuple[int, int]]:
    """Dense (n, coefficient) rows for a univariate series."""
    return list(enumerate(series.coeffs))


def xqseries_rows(series: XQSeries) -> list[tuple[int, int, int]]:
    """Nonzero (m, n, coefficient) triples, ordered n-major."""
    rows = []
    for n, poly in enumerate(series.coeffs):
        for m, c in enumerate(poly):
            if c:
                rows.append((m, n, c))
    return rows
