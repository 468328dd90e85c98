"""Univariate polynomials over F_q.

``PolyFq`` stores ascending coefficient *indices* (see :mod:`gl2fix.ff`) with
no trailing zeros; the zero polynomial has no coefficients and degree
``-inf``.  The underscore helpers work on plain int lists and field tables
and are what the exhaustive searches call in their inner loops.
"""

from __future__ import annotations

import math
from itertools import product
from typing import Callable, Iterable, Iterator, Sequence

from .errors import (
    CapExceeded,
    ConstantPolynomial,
    DivisionByZero,
    FieldMismatch,
    NotMonic,
    ReducibleInput,
    ZeroPolynomial,
    ZeroScalar,
)
from .ff import Field, FqElem, pow_index
from .numutil import divisors, divisors_coprime_to, moebius, prime_factors

DEFAULT_CAP = 2**22

NEG_INF = -math.inf


# -- kernels on ascending index lists --

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _add(t, a: Sequence[int], b: Sequence[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    add = t.add
    for i, y in enumerate(b):
        out[i] = add[out[i]][y]
    return _trim(out)


def _sub(t, a: Sequence[int], b: Sequence[int]) -> list[int]:
    neg = t.neg
    return _add(t, a, [neg[y] for y in b])


def _scale(t, a: Sequence[int], c: int) -> list[int]:
    if c == 0:
        return []
    row = t.mul[c]
    return [row[x] for x in a]


def _mul(t, a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    add, mul = t.add, t.mul
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            row = mul[x]
            for j, y in enumerate(b):
                if y:
                    out[i + j] = add[out[i + j]][row[y]]
    return _trim(out)


def _divmod(t, a: Sequence[int], b: Sequence[int]) -> tuple[list[int], list[int]]:
    if not b:
        raise DivisionByZero("polynomial division by zero")
    rem = list(a)
    db = len(b) - 1
    if len(rem) - 1 < db:
        return [], _trim(rem)
    add, mul, neg = t.add, t.mul, t.neg
    inv_lead = t.inv[b[-1]]
    quo = [0] * (len(rem) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        if c:
            c = mul[c][inv_lead]
            quo[i - db] = c
            nc = neg[c]
            row = mul[nc]
            shift = i - db
            for j, y in enumerate(b):
                if y:
                    rem[shift + j] = add[rem[shift + j]][row[y]]
    return _trim(quo), _trim(rem[:db])


def _rem(t, a: Sequence[int], b: Sequence[int]) -> list[int]:
    return _divmod(t, a, b)[1]


def _monic(t, a: Sequence[int]) -> list[int]:
    if not a:
        return []
    return _scale(t, a, t.inv[a[-1]])


def _gcd(t, a: Sequence[int], b: Sequence[int]) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _rem(t, a, b)
    return _monic(t, a)


def _mulmod(t, a, b, f) -> list[int]:
    return _rem(t, _mul(t, a, b), f)


def _powmod(t, a: Sequence[int], e: int, f: Sequence[int]) -> list[int]:
    result = [1]
    base = _rem(t, a, f)
    while e:
        if e & 1:
            result = _mulmod(t, result, base, f)
        e >>= 1
        if e:
            base = _mulmod(t, base, base, f)
    return result


def _eval(t, a: Sequence[int], x: int) -> int:
    add, row = t.add, t.mul[x]
    acc = 0
    for c in reversed(a):
        acc = add[row[acc]][c]
    return acc


def _compose(t, f: Sequence[int], g: Sequence[int]) -> list[int]:
    # Horner in g
    acc: list[int] = []
    for c in reversed(f):
        acc = _mul(t, acc, g)
        acc = _add(t, acc, [c]) if c else acc
    return acc


def _translate(t, f: Sequence[int], b: int) -> list[int]:
    return _compose(t, f, [b, 1])


def _is_irreducible(field: Field, f: Sequence[int]) -> bool:
    """Rabin's test using the Frobenius matrix of F_q[x]/(f).

    Coefficients lie in F_q, so (sum c_j x^j)^q = sum c_j (x^q)^j and each
    further q-th power is a linear map on residues.
    """
    t = field.tables
    n = len(f) - 1
    if n < 1:
        raise ConstantPolynomial("irreducibility is undefined for constants")
    if n == 1:
        return True
    if f[0] == 0:
        return False
    f = _monic(t, f)
    x = [0, 1]
    xq = _powmod(t, x, field.q, f)
    frob_rows = [[1]]
    for _ in range(1, n):
        frob_rows.append(_mulmod(t, frob_rows[-1], xq, f))

    add, mul = t.add, t.mul

    def apply(r: Sequence[int]) -> list[int]:
        out = [0] * n
        for j, c in enumerate(r):
            if c:
                row = mul[c]
                for i, y in enumerate(frob_rows[j]):
                    if y:
                        out[i] = add[out[i]][row[y]]
        return _trim(out)

    powers = [None, xq]
    for _ in range(2, n + 1):
        powers.append(apply(powers[-1]))
    if powers[n] != x:
        return False
    for ell in prime_factors(n):
        h = _sub(t, powers[n // ell], x)
        if len(_gcd(t, f, h)) != 1:
            return False
    return True


def _monic_candidates(q: int, n: int) -> Iterator[tuple[int, ...]]:
    """All monic degree-n coefficient tuples in canonical ascending order."""
    for high_first in product(range(q), repeat=n):
        yield high_first[::-1] + (1,)


def _check_cap(field: Field, n: int, cap: int | None) -> None:
    cap = DEFAULT_CAP if cap is None else cap
    if field.q**n > cap:
        raise CapExceeded(f"q^n = {field.q}^{n} = {field.q**n} exceeds the enumeration cap {cap}")


_IRREDUCIBLES: dict[tuple[Field, int], tuple[tuple[int, ...], ...]] = {}


def _irreducible_tuples(field: Field, n: int) -> tuple[tuple[int, ...], ...]:
    key = (field, n)
    if key not in _IRREDUCIBLES:
        _IRREDUCIBLES[key] = tuple(
            c for c in _monic_candidates(field.q, n) if _is_irreducible(field, c)
        )
    return _IRREDUCIBLES[key]


def filter_irreducibles(field: Field, n: int, predicate: Callable[[tuple[int, ...]], bool],
                        cap: int | None = None) -> list[tuple[int, ...]]:
    """Coefficient tuples of the monic irreducibles of degree n satisfying ``predicate``.

    Same result as filtering :func:`enumerate_irreducibles`; when that list is
    not cached yet the (usually cheaper) predicate runs first.
    """
    _check_cap(field, n, cap)
    cached = _IRREDUCIBLES.get((field, n))
    if cached is not None:
        return [c for c in cached if predicate(c)]
    return [c for c in _monic_candidates(field.q, n)
            if predicate(c) and _is_irreducible(field, c)]


# -- public type --

class PolyFq:
    """Polynomial over F_q; immutable, hashable."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Iterable[int] = ()):
        """``coeffs`` are ascending element indices."""
        c = _trim([int(i) for i in coeffs])
        q = field.q
        for i in c:
            if not 0 <= i < q:
                raise ValueError(f"coefficient index {i} out of range for q={q}")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("PolyFq is immutable")

    @classmethod
    def from_elements(cls, field: Field, coeffs: Iterable[FqElem | int]) -> "PolyFq":
        """Ascending coefficients given as elements or integers (read mod p)."""
        return cls(field, [field(c).index for c in coeffs])

    @classmethod
    def x(cls, field: Field) -> "PolyFq":
        return cls(field, [0, 1])

    @classmethod
    def constant(cls, field: Field, c: FqElem | int) -> "PolyFq":
        return cls(field, [field(c).index])

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def leading(self) -> FqElem:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.field.element(self.coeffs[-1])

    def coefficient(self, i: int) -> FqElem:
        return self.field.element(self.coeffs[i] if 0 <= i < len(self.coeffs) else 0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def _same(self, other: "PolyFq") -> None:
        if other.field != self.field:
            raise FieldMismatch(f"polynomials over {self.field} and {other.field}")

    def _lift(self, other) -> "PolyFq":
        if isinstance(other, PolyFq):
            self._same(other)
            return other
        if isinstance(other, (FqElem, int)):
            return PolyFq.constant(self.field, other)
        return NotImplemented

    def _new(self, coeffs: Sequence[int]) -> "PolyFq":
        out = object.__new__(PolyFq)
        object.__setattr__(out, "field", self.field)
        object.__setattr__(out, "coeffs", tuple(coeffs))
        return out

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self._new(_add(self.field.tables, self.coeffs, o.coeffs))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self._new(_sub(self.field.tables, self.coeffs, o.coeffs))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        neg = self.field.tables.neg
        return self._new([neg[c] for c in self.coeffs])

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self._new(_mul(self.field.tables, self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial power")
        result = self._new([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        qu, r = _divmod(self.field.tables, self.coeffs, o.coeffs)
        return self._new(qu), self._new(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, a: FqElem | int | "PolyFq"):
        if isinstance(a, PolyFq):
            return poly_compose(self, a)
        return poly_eval(self, a)

    def __eq__(self, other):
        if isinstance(other, PolyFq):
            return self.field == other.field and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def sort_key(self) -> tuple:
        """Canonical order: as base-q integers, leading coefficient most significant."""
        return (len(self.coeffs), self.coeffs[::-1])

    def __lt__(self, other: "PolyFq") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"PolyFq({self}, q={self.field.q})"


def format_poly(f: PolyFq, var: str = "x") -> str:
    if not f.coeffs:
        return "0"
    fmt = f.field.format_index
    terms = []
    for i in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[i]
        if not c:
            continue
        cs = fmt(c)
        if "t" in cs:
            cs = f"({cs})"
        if i == 0:
            terms.append(cs)
            continue
        power = var if i == 1 else f"{var}^{i}"
        terms.append(power if c == 1 else f"{cs}*{power}")
    return " + ".join(terms)


def make_poly(field: Field, coeffs: Iterable[FqElem | int]) -> PolyFq:
    return PolyFq.from_elements(field, coeffs)


def monomial(field: Field, n: int, c: FqElem | int = 1) -> PolyFq:
    return PolyFq(field, [0] * n + [field(c).index])


# -- operations --

def _same_field(*objs) -> Field:
    field = objs[0].field
    for o in objs[1:]:
        if o.field != field:
            raise FieldMismatch(f"objects over {field} and {o.field}")
    return field


def poly_arith(f: PolyFq, g: PolyFq, op: str):
    """``add|sub|mul`` return a polynomial, ``divrem`` a (quotient, remainder)
    pair and ``gcd`` the monic gcd."""
    _same_field(f, g)
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "divrem":
        return divmod(f, g)
    if op == "gcd":
        return poly_gcd(f, g)
    raise ValueError(f"unknown operation {op!r}")


def poly_gcd(f: PolyFq, g: PolyFq) -> PolyFq:
    _same_field(f, g)
    return PolyFq(f.field, _gcd(f.field.tables, f.coeffs, g.coeffs))


def poly_eval(f: PolyFq, a: FqElem | int) -> FqElem:
    field = f.field
    a = field(a)
    return field.element(_eval(field.tables, f.coeffs, a.index))


def poly_compose(f: PolyFq, g: PolyFq) -> PolyFq:
    """f(g(x))."""
    _same_field(f, g)
    return PolyFq(f.field, _compose(f.field.tables, f.coeffs, g.coeffs))


def translate(f: PolyFq, b: FqElem | int) -> PolyFq:
    """f(x + b)."""
    b = f.field(b)
    return PolyFq(f.field, _translate(f.field.tables, f.coeffs, b.index))


def scale_transform(f: PolyFq, a: FqElem | int) -> PolyFq:
    """a^n f(x/a) with n = deg f; coefficient i picks up a^(n-i)."""
    field = f.field
    a = field(a)
    if not a:
        raise ZeroScalar("scale_transform needs a nonzero scalar")
    n = len(f.coeffs) - 1
    mul = field.tables.mul
    return PolyFq(field, [mul[c][pow_index(field, a.index, n - i)] for i, c in enumerate(f.coeffs)])


def substitute_scaled(f: PolyFq, a: FqElem | int) -> PolyFq:
    """f(a x)."""
    field = f.field
    a = field(a)
    mul = field.tables.mul
    return PolyFq(field, [mul[c][pow_index(field, a.index, i)] for i, c in enumerate(f.coeffs)])


def normalize_monic(f: PolyFq) -> PolyFq:
    if f.is_zero():
        raise ZeroPolynomial("cannot normalize the zero polynomial")
    return PolyFq(f.field, _monic(f.field.tables, f.coeffs))


def is_irreducible(f: PolyFq) -> bool:
    if len(f.coeffs) < 2:
        raise ConstantPolynomial("irreducibility needs degree >= 1")
    return _is_irreducible(f.field, f.coeffs)


def monic_polynomials(field: Field, n: int, cap: int | None = None) -> Iterator[PolyFq]:
    """Every monic polynomial of degree n, in canonical order."""
    _check_cap(field, n, cap)
    for c in _monic_candidates(field.q, n):
        yield PolyFq(field, c)


def enumerate_irreducibles(field: Field, n: int, cap: int | None = None) -> Iterator[PolyFq]:
    """Monic irreducibles of degree n in canonical order (qⁿ candidates filtered)."""
    if n < 1:
        raise ValueError("degree must be >= 1")
    _check_cap(field, n, cap)
    for c in _irreducible_tuples(field, n):
        yield PolyFq(field, c)


def count_irreducibles(field: Field, n: int) -> int:
    """Gauss: (1/n) sum_{d | n} mu(d) q^(n/d)."""
    total = sum(moebius(d) * field.q ** (n // d) for d in divisors(n))
    assert total % n == 0
    return total // n


def count_irreducibles_with_trace(field: Field, n: int) -> int:
    """Monic irreducibles of degree n whose roots sum to a fixed nonzero value."""
    q = field.q
    total = sum(moebius(d) * q ** (n // d) for d in divisors_coprime_to(n, field.p))
    assert total % (q * n) == 0
    return total // (q * n)


def poly_trace(f: PolyFq) -> FqElem:
    """Sum of the roots of a monic f, i.e. minus the x^(n-1) coefficient."""
    return -f.coefficient(len(f.coeffs) - 2)


def artin_schreier_polynomial(field: Field, b: FqElem | int) -> PolyFq:
    """x^p - x - b."""
    p = field.p
    b = field(b)
    coeffs = [0] * (p + 1)
    t = field.tables
    coeffs[0] = t.neg[b.index]
    coeffs[1] = t.add[coeffs[1]][t.neg[1]]
    coeffs[p] = t.add[coeffs[p]][1]
    return PolyFq(field, coeffs)


def _require_monic_irreducible(f: PolyFq) -> None:
    if len(f.coeffs) < 2:
        raise ConstantPolynomial("expected a polynomial of degree >= 1")
    if not f.is_monic():
        raise NotMonic(f"{f} is not monic")
    if not _is_irreducible(f.field, f.coeffs):
        raise ReducibleInput(f"{f} is reducible")


def artin_schreier_irreducible(f: PolyFq, b: FqElem | int) -> bool:
    """Whether f(x^p - x - b) is irreducible, decided by the trace of n*b - a_(n-1)."""
    _require_monic_irreducible(f)
    field = f.field
    b = field(b)
    n = len(f.coeffs) - 1
    value = b * n - field.element(f.coeffs[n - 1])
    return value.trace() != 0
