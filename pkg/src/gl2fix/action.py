"""GL2(F_q) acting on polynomials by A∘f = (cx+d)^n f((ax+b)/(cx+d)).

With this formula ``A∘(B∘f)`` is a scalar multiple of ``(BA)∘f`` (the
substitutions compose in reverse), so fixed-point sets of subgroups are
unaffected but conjugations have to be written accordingly.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .errors import ConstantPolynomial, FieldMismatch, NotMonic, ReducibleInput, SingularMatrix
from .ff import Field, FqElem
from .poly import (
    PolyFq,
    _add,
    _is_irreducible,
    _monic,
    _mul,
    _scale,
    enumerate_irreducibles,
)

STRICT = "strict"
PROJECTIVE = "projective"
MODES = (STRICT, PROJECTIVE)


class Mat2:
    """Invertible 2x2 matrix ((a, b), (c, d)) over F_q, entries stored as indices."""

    __slots__ = ("field", "entries")

    def __init__(self, field: Field, a, b, c, d):
        idx = tuple(field(v).index for v in (a, b, c, d))
        t = field.tables
        det = t.add[t.mul[idx[0]][idx[3]]][t.neg[t.mul[idx[1]][idx[2]]]]
        if det == 0:
            raise SingularMatrix("matrix is singular: " + _format(field, idx))
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "entries", idx)

    def __setattr__(self, name, value):
        raise AttributeError("Mat2 is immutable")

    @classmethod
    def _raw(cls, field: Field, idx: tuple[int, int, int, int]) -> "Mat2":
        m = object.__new__(cls)
        object.__setattr__(m, "field", field)
        object.__setattr__(m, "entries", idx)
        return m

    @classmethod
    def identity(cls, field: Field) -> "Mat2":
        return cls._raw(field, (1, 0, 0, 1))

    @classmethod
    def translation(cls, field: Field, b) -> "Mat2":
        return cls._raw(field, (1, field(b).index, 0, 1))

    @classmethod
    def homothety(cls, field: Field, a) -> "Mat2":
        return cls(field, a, 0, 0, 1)

    @property
    def a(self) -> FqElem:
        return self.field.element(self.entries[0])

    @property
    def b(self) -> FqElem:
        return self.field.element(self.entries[1])

    @property
    def c(self) -> FqElem:
        return self.field.element(self.entries[2])

    @property
    def d(self) -> FqElem:
        return self.field.element(self.entries[3])

    def det(self) -> FqElem:
        return self.a * self.d - self.b * self.c

    def _check(self, other: "Mat2") -> None:
        if other.field != self.field:
            raise FieldMismatch(f"matrices over {self.field} and {other.field}")

    def __matmul__(self, other: "Mat2") -> "Mat2":
        self._check(other)
        t = self.field.tables
        add, mul = t.add, t.mul
        a, b, c, d = self.entries
        e, f, g, h = other.entries
        return Mat2._raw(self.field, (
            add[mul[a][e]][mul[b][g]], add[mul[a][f]][mul[b][h]],
            add[mul[c][e]][mul[d][g]], add[mul[c][f]][mul[d][h]],
        ))

    __mul__ = __matmul__

    def inverse(self) -> "Mat2":
        t = self.field.tables
        a, b, c, d = self.entries
        di = t.inv[self.det().index]
        mul, neg = t.mul, t.neg
        return Mat2._raw(self.field, (mul[d][di], mul[neg[b]][di], mul[neg[c]][di], mul[a][di]))

    def __pow__(self, e: int) -> "Mat2":
        base = self if e >= 0 else self.inverse()
        e = abs(e)
        result = Mat2.identity(self.field)
        while e:
            if e & 1:
                result = result @ base
            e >>= 1
            if e:
                base = base @ base
        return result

    def scaled(self, lam) -> "Mat2":
        li = self.field(lam).index
        mul = self.field.tables.mul
        return Mat2(self.field, *(mul[x][li] for x in self.entries))

    def is_identity(self) -> bool:
        return self.entries == (1, 0, 0, 1)

    def is_upper_unitriangular(self) -> bool:
        a, _, c, d = self.entries
        return a == 1 and c == 0 and d == 1

    def is_unipotent(self) -> bool:
        """(E - I)^2 == 0."""
        t = self.field.tables
        add, mul, neg = t.add, t.mul, t.neg
        a, b, c, d = self.entries
        a1, d1 = add[a][neg[1]], add[d][neg[1]]
        sq = (
            add[mul[a1][a1]][mul[b][c]], add[mul[a1][b]][mul[b][d1]],
            add[mul[c][a1]][mul[d1][c]], add[mul[c][b]][mul[d1][d1]],
        )
        return sq == (0, 0, 0, 0)

    def __eq__(self, other):
        if isinstance(other, Mat2):
            return self.field == other.field and self.entries == other.entries
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.entries))

    def __lt__(self, other: "Mat2") -> bool:
        return self.entries < other.entries

    def __str__(self):
        return _format(self.field, self.entries)

    def __repr__(self):
        return f"Mat2({self}, q={self.field.q})"


def _format(field: Field, idx: Sequence[int]) -> str:
    f = field.format_index
    return f"[[{f(idx[0])},{f(idx[1])}],[{f(idx[2])},{f(idx[3])}]]"


def mat_ops(A: Mat2, B: Mat2 | None, op: str):
    """``mul|inv|det|eq``; ``B`` is ignored for the unary ops."""
    if op == "mul":
        return A @ B
    if op == "inv":
        return A.inverse()
    if op == "det":
        return A.det()
    if op == "eq":
        A._check(B)
        return A == B
    raise ValueError(f"unknown operation {op!r}")


def _act(t, entries: tuple[int, int, int, int], f: Sequence[int]) -> list[int]:
    # Horner: R <- R*(ax+b) + f_{n-j} (cx+d)^j
    a, b, c, d = entries
    u = [b, a] if a else [b]
    v = [d, c] if c else [d]
    u = u if any(u) else []
    n = len(f) - 1
    r = [f[n]]
    vpow = [1]
    for j in range(1, n + 1):
        vpow = _mul(t, vpow, v)
        r = _add(t, _mul(t, r, u), _scale(t, vpow, f[n - j]))
    return r


def act(A: Mat2, f: PolyFq) -> PolyFq:
    if A.field != f.field:
        raise FieldMismatch(f"matrix over {A.field}, polynomial over {f.field}")
    if len(f.coeffs) < 2:
        raise ConstantPolynomial("the action is defined for degree >= 1")
    return PolyFq(f.field, _act(f.field.tables, A.entries, f.coeffs))


def _fixed(t, entries, f: Sequence[int], mode: str) -> bool:
    image = _act(t, entries, f)
    if mode == PROJECTIVE:
        image = _monic(t, image)
    return tuple(image) == tuple(f)


def _require_query_input(f: PolyFq) -> None:
    if len(f.coeffs) < 3:
        raise ConstantPolynomial("fixed-point queries need degree >= 2")
    if not f.is_monic():
        raise NotMonic(f"{f} is not monic")
    if not _is_irreducible(f.field, f.coeffs):
        raise ReducibleInput(f"{f} is reducible")


def _check_mode(mode: str) -> None:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")


def is_fixed(A: Mat2, f: PolyFq, mode: str = PROJECTIVE) -> bool:
    """strict: A∘f == f.  projective: A∘f is a scalar multiple of f."""
    _check_mode(mode)
    if A.field != f.field:
        raise FieldMismatch(f"matrix over {A.field}, polynomial over {f.field}")
    _require_query_input(f)
    return _fixed(f.field.tables, A.entries, f.coeffs, mode)


def fixed_by_set(f: PolyFq, mats: Iterable[Mat2], mode: str = PROJECTIVE) -> bool:
    _check_mode(mode)
    _require_query_input(f)
    t = f.field.tables
    for A in mats:
        if A.field != f.field:
            raise FieldMismatch(f"matrix over {A.field}, polynomial over {f.field}")
        if not _fixed(t, A.entries, f.coeffs, mode):
            return False
    return True


def pgl_representatives(field: Field) -> Iterator[Mat2]:
    """One matrix per class of GL2 modulo scalars: first nonzero of (a, b, c, d) is 1."""
    t = field.tables
    q = field.q
    add, mul, neg = t.add, t.mul, t.neg
    for lead_pos in range(4):
        for rest in _tuples(q, 3 - lead_pos):
            entries = (0,) * lead_pos + (1,) + rest
            a, b, c, d = entries
            if add[mul[a][d]][neg[mul[b][c]]]:
                yield Mat2._raw(field, entries)


def _tuples(q: int, n: int):
    if n == 0:
        yield ()
        return
    for head in range(q):
        for tail in _tuples(q, n - 1):
            yield (head,) + tail


def pgl_fixed_scan(field: Field, max_degree: int, mode: str = PROJECTIVE,
                   cap: int | None = None) -> list[PolyFq]:
    """Monic irreducibles of degree 2..max_degree fixed by every class of PGL2(F_q)."""
    _check_mode(mode)
    reps = list(pgl_representatives(field))
    # translations and homotheties reject most candidates immediately
    reps.sort(key=lambda m: (not m.is_upper_unitriangular(), m.entries[2] != 0, m.entries))
    t = field.tables
    found = []
    for n in range(2, max_degree + 1):
        for f in enumerate_irreducibles(field, n, cap):
            if all(_fixed(t, A.entries, f.coeffs, mode) for A in reps):
                found.append(f)
    return found
