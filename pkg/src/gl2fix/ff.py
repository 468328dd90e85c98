"""Arithmetic in F_p and F_q = F_p[t]/(modulus).

An element is identified by its *index*: the integer whose base-p digits are
its coordinates in the basis 1, t, ..., t^(k-1) (coefficient of t^i is digit
i).  Index order is the canonical element order used everywhere else.  All
arithmetic goes through lookup tables built once per field, which keeps the
exhaustive checks in the test-suite fast.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product
from typing import Iterator, Sequence

import numpy as np

from .errors import (
    DegreeMismatch,
    DivisionByZero,
    FieldMismatch,
    FieldTooLarge,
    NotPrime,
    ReducibleModulus,
    ZeroElement,
)
from .numutil import is_prime, prime_factors

MAX_FIELD_ORDER = 1024


# -- polynomials over F_p as ascending int lists, only for modulus checks --

def _fp_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_rem(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = _fp_trim([x % p for x in a])
    inv_lead = pow(b[-1], -1, p)
    db = len(b) - 1
    while len(a) - 1 >= db:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - db
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
        _fp_trim(a)
    return a


def fp_is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    f = _fp_trim([c % p for c in coeffs])
    n = len(f) - 1
    if n < 1:
        return False
    for d in range(1, n // 2 + 1):
        for tail in product(range(p), repeat=d):
            divisor = list(tail[::-1]) + [1]
            if not _fp_rem(f, divisor, p):
                return False
    return True


def default_modulus(p: int, k: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree k; (a_0..a_{k-1}) read base p, a_{k-1} most significant."""
    for number in range(p**k):
        low = [(number // p**i) % p for i in range(k)]
        cand = tuple(low) + (1,)
        if fp_is_irreducible(cand, p):
            return cand
    raise AssertionError("no irreducible polynomial found")  # impossible


# -- tables --

@dataclass(frozen=True)
class _Tables:
    add: list[list[int]]
    mul: list[list[int]]
    neg: list[int]
    inv: list[int]  # inv[0] is unused
    exp: list[int]  # powers of a primitive element, length q-1
    log: list[int]  # log[0] is unused
    frob: list[int]  # x -> x^p
    trace: list[int]  # absolute trace, as a residue mod p


def _mul_coords(a: Sequence[int], b: Sequence[int], p: int, modulus: Sequence[int]) -> list[int]:
    k = len(modulus) - 1
    prod = [0] * (2 * k - 1 if k else 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    for i in range(len(prod) - 1, k - 1, -1):
        c = prod[i]
        if c:
            for j in range(k + 1):
                prod[i - k + j] = (prod[i - k + j] - c * modulus[j]) % p
    return prod[:k]


@lru_cache(maxsize=64)
def _build_tables(p: int, k: int, modulus: tuple[int, ...]) -> _Tables:
    q = p**k
    digits = np.array([[(i // p**j) % p for j in range(k)] for i in range(q)], dtype=np.int64)
    weights = np.array([p**j for j in range(k)], dtype=np.int64)
    add = (((digits[:, None, :] + digits[None, :, :]) % p) @ weights).tolist()
    neg = (((-digits) % p) @ weights).tolist()

    def index(coords: Sequence[int]) -> int:
        return sum(int(c) * p**j for j, c in enumerate(coords))

    # locate a primitive element by walking powers with coordinate arithmetic
    exp: list[int] = []
    for g in range(1, q):
        gc = digits[g].tolist()
        powers = [1]
        cur = [1] + [0] * (k - 1)
        while True:
            cur = _mul_coords(cur, gc, p, modulus)
            i = index(cur)
            if i == 1:
                break
            powers.append(i)
        if len(powers) == q - 1:
            exp = powers
            break
    log = [0] * q
    for e, v in enumerate(exp):
        log[v] = e
    n = q - 1
    mul = [[0] * q for _ in range(q)]
    for i in range(1, q):
        li = log[i]
        row = mul[i]
        for j in range(1, q):
            row[j] = exp[(li + log[j]) % n]
    inv = [0] + [exp[(-log[i]) % n] for i in range(1, q)]
    frob = [0] + [exp[(log[i] * p) % n] for i in range(1, q)]
    trace = []
    for i in range(q):
        s, cur = 0, i
        for _ in range(k):
            s = add[s][cur]
            cur = frob[cur]
        assert s < p, "trace must land in the prime field"
        trace.append(s)
    return _Tables(add, mul, neg, inv, exp, log, frob, trace)


@dataclass(frozen=True)
class Field:
    """The field F_q, q = p^k, presented as F_p[t]/(modulus).

    ``modulus`` holds ascending coefficients (a_0, ..., a_{k-1}, 1).
    Construct through :func:`make_field`, which validates.
    """

    p: int
    k: int
    modulus: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p**self.k

    @cached_property
    def tables(self) -> _Tables:
        return _build_tables(self.p, self.k, self.modulus)

    def __call__(self, value: int | Sequence[int] | "FqElem") -> "FqElem":
        """Coerce an integer (reduced mod p) or a coordinate sequence."""
        if isinstance(value, FqElem):
            if value.field != self:
                raise FieldMismatch(f"element of {value.field} used in {self}")
            return value
        if isinstance(value, (int, np.integer)):
            return FqElem(self, int(value) % self.p)
        coords = [int(c) % self.p for c in value]
        if len(coords) > self.k:
            raise DegreeMismatch(f"expected at most {self.k} coordinates, got {len(coords)}")
        return FqElem(self, sum(c * self.p**j for j, c in enumerate(coords)))

    def element(self, index: int) -> "FqElem":
        if not 0 <= index < self.q:
            raise ValueError(f"element index {index} out of range for q={self.q}")
        return FqElem(self, index)

    @property
    def zero(self) -> "FqElem":
        return FqElem(self, 0)

    @property
    def one(self) -> "FqElem":
        return FqElem(self, 1)

    @property
    def gen(self) -> "FqElem":
        """The class of t."""
        if self.k == 1:
            return FqElem(self, (-self.modulus[0]) % self.p)
        return FqElem(self, self.p)

    def elements(self) -> Iterator["FqElem"]:
        for i in range(self.q):
            yield FqElem(self, i)

    def prime_subfield(self) -> list["FqElem"]:
        return [FqElem(self, i) for i in range(self.p)]

    def format_index(self, index: int) -> str:
        return format_element(self.p, self.k, index)

    def format_modulus(self) -> str:
        return "+".join(reversed([_term(c, i, "t") for i, c in enumerate(self.modulus) if c]))

    def __str__(self) -> str:
        if self.k == 1:
            return f"GF({self.p})"
        return f"GF({self.q}) = GF({self.p})[t]/({self.format_modulus()})"


def make_field(p: int, k: int = 1, modulus: Sequence[int] | None = None) -> Field:
    """Validated field; without a modulus the smallest irreducible one is used."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if not isinstance(k, int) or k < 1:
        raise DegreeMismatch(f"extension degree must be >= 1, got {k!r}")
    if p**k > MAX_FIELD_ORDER:
        raise FieldTooLarge(f"q = {p}^{k} exceeds the supported order {MAX_FIELD_ORDER}")
    if modulus is None:
        mod = default_modulus(p, k)
    else:
        mod = tuple(int(c) % p for c in modulus)
        while len(mod) > 1 and mod[-1] == 0:
            mod = mod[:-1]
        if len(mod) - 1 != k:
            raise DegreeMismatch(f"modulus has degree {len(mod) - 1}, expected {k}")
        if mod[-1] != 1:
            raise DegreeMismatch("modulus must be monic")
        if not fp_is_irreducible(mod, p):
            raise ReducibleModulus(f"modulus {mod} is reducible over GF({p})")
    return Field(p, k, mod)


def _term(c: int, i: int, sym: str) -> str:
    if i == 0:
        return str(c)
    power = sym if i == 1 else f"{sym}^{i}"
    return power if c == 1 else f"{c}*{power}"


def format_element(p: int, k: int, index: int) -> str:
    if index == 0:
        return "0"
    terms = []
    for i in range(k - 1, -1, -1):
        c = (index // p**i) % p
        if c:
            terms.append(_term(c, i, "t"))
    return "+".join(terms)


class FqElem:
    """An element of F_q.  Immutable; hashable; ordered by index."""

    __slots__ = ("field", "index")

    def __init__(self, field: Field, index: int):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "index", index)

    def __setattr__(self, name, value):
        raise AttributeError("FqElem is immutable")

    @property
    def coords(self) -> tuple[int, ...]:
        p = self.field.p
        return tuple((self.index // p**j) % p for j in range(self.field.k))

    def _other(self, other) -> int:
        if isinstance(other, FqElem):
            if other.field != self.field:
                raise FieldMismatch(f"cannot combine elements of {self.field} and {other.field}")
            return other.index
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented

    def __add__(self, other):
        j = self._other(other)
        if j is NotImplemented:
            return j
        return FqElem(self.field, self.field.tables.add[self.index][j])

    __radd__ = __add__

    def __neg__(self):
        return FqElem(self.field, self.field.tables.neg[self.index])

    def __sub__(self, other):
        j = self._other(other)
        if j is NotImplemented:
            return j
        t = self.field.tables
        return FqElem(self.field, t.add[self.index][t.neg[j]])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        j = self._other(other)
        if j is NotImplemented:
            return j
        return FqElem(self.field, self.field.tables.mul[self.index][j])

    __rmul__ = __mul__

    def inverse(self) -> "FqElem":
        if self.index == 0:
            raise DivisionByZero("zero has no inverse")
        return FqElem(self.field, self.field.tables.inv[self.index])

    def __truediv__(self, other):
        j = self._other(other)
        if j is NotImplemented:
            return j
        if j == 0:
            raise DivisionByZero("division by zero in " + str(self.field))
        t = self.field.tables
        return FqElem(self.field, t.mul[self.index][t.inv[j]])

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int):
        return FqElem(self.field, pow_index(self.field, self.index, e))

    def __eq__(self, other):
        if isinstance(other, FqElem):
            return self.field == other.field and self.index == other.index
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.index))

    def __lt__(self, other: "FqElem") -> bool:
        return self.index < self._other(other)

    def __bool__(self):
        return self.index != 0

    def __str__(self):
        return format_element(self.field.p, self.field.k, self.index)

    def __repr__(self):
        return f"FqElem({self}, q={self.field.q})"

    def trace(self) -> int:
        return self.field.tables.trace[self.index]

    def frobenius(self, i: int = 1) -> "FqElem":
        return frobenius(self, i)

    def order(self) -> int:
        return element_order(self)


def pow_index(field: Field, index: int, e: int) -> int:
    if index == 0:
        if e > 0:
            return 0
        if e == 0:
            return 1
        raise DivisionByZero("zero raised to a negative power")
    t = field.tables
    return t.exp[(t.log[index] * e) % (field.q - 1)]


def fq_arith(a: FqElem, b: FqElem | int | None, op: str) -> FqElem:
    """Dispatch ``add|sub|mul|div|pow|inv|neg``.

    ``b`` is an integer exponent for ``pow`` and is ignored by ``inv``/``neg``.
    """
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "pow":
        return a ** int(b)
    if op == "inv":
        return a.inverse()
    if op == "neg":
        return -a
    raise ValueError(f"unknown operation {op!r}")


def trace_to_prime(a: FqElem) -> int:
    """Absolute trace a + a^p + ... + a^(p^(k-1)), as a residue mod p."""
    return a.field.tables.trace[a.index]


def frobenius(a: FqElem, i: int = 1) -> FqElem:
    if i < 0:
        raise ValueError("frobenius exponent must be non-negative")
    frob = a.field.tables.frob
    idx = a.index
    for _ in range(i % a.field.k):
        idx = frob[idx]
    return FqElem(a.field, idx)


def element_order(a: FqElem) -> int:
    if a.index == 0:
        raise ZeroElement("zero has no multiplicative order")
    field = a.field
    order = field.q - 1
    for ell in prime_factors(order) if order > 1 else []:
        while order % ell == 0 and pow_index(field, a.index, order // ell) == 1:
            order //= ell
    return order
