"""Polynomials invariant under additive translations x -> x + s (s in an
F_p-subspace S) and under homotheties x -> a x.

Invariant polynomials are exactly compositions with the subspace polynomial
P_S(x) = prod_{s in S} (x - s), resp. with x^k - 1 where k = ord(a).  Counts
come in two flavours: the closed forms, and brute force over an explicit
enumeration.  Reports keep both so callers can compare.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product
from math import comb
from typing import Any, Iterable, Sequence

from .errors import CapExceeded, DegenerateScalar, FieldMismatch, NotInvariant, ZeroSpan
from .ff import Field, FqElem, element_order, pow_index
from .numutil import divisors_coprime_to, euler_phi, moebius
from .poly import (
    DEFAULT_CAP,
    PolyFq,
    _compose,
    _divmod,
    _eval,
    _is_irreducible,
    _sub,
    _translate,
    artin_schreier_irreducible,
    enumerate_irreducibles,
    filter_irreducibles,
    monomial,
    poly_compose,
    scale_transform,
    substitute_scaled,
)


# -- subspaces --

@dataclass(frozen=True)
class Subspace:
    """F_p-subspace of F_q held as its reduced row echelon basis.

    Coordinates are the polynomial-basis digits (constant digit first);
    pivots are searched from the constant digit upward.
    """

    field: Field
    basis: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def order(self) -> int:
        return self.field.p ** self.dim

    def basis_elements(self) -> list[FqElem]:
        return [self.field.element(b) for b in self.basis]

    def element_indices(self) -> list[int]:
        add, mul = self.field.tables.add, self.field.tables.mul
        out = []
        for combo in product(range(self.field.p), repeat=self.dim):
            acc = 0
            for c, b in zip(combo, self.basis):
                acc = add[acc][mul[c][b]]
            out.append(acc)
        return sorted(out)

    def elements(self) -> list[FqElem]:
        return [self.field.element(i) for i in self.element_indices()]

    def __contains__(self, a: FqElem) -> bool:
        return a.field == self.field and a.index in set(self.element_indices())

    def __str__(self) -> str:
        return ",".join(self.field.format_index(b) for b in self.basis)


def _rref_mod_p(rows: list[list[int]], p: int) -> list[list[int]]:
    rows = [list(r) for r in rows]
    if not rows:
        return []
    ncols = len(rows[0])
    pivot_row = 0
    for col in range(ncols):
        sel = next((r for r in range(pivot_row, len(rows)) if rows[r][col] % p), None)
        if sel is None:
            continue
        rows[pivot_row], rows[sel] = rows[sel], rows[pivot_row]
        inv = pow(rows[pivot_row][col], -1, p)
        rows[pivot_row] = [v * inv % p for v in rows[pivot_row]]
        for r in range(len(rows)):
            if r != pivot_row and rows[r][col] % p:
                c = rows[r][col]
                rows[r] = [(v - c * w) % p for v, w in zip(rows[r], rows[pivot_row])]
        pivot_row += 1
        if pivot_row == len(rows):
            break
    return [r for r in rows[:pivot_row]]


def subspace_from_generators(field: Field, gens: Iterable[FqElem | int]) -> Subspace:
    """Canonical basis of the F_p-span of ``gens``."""
    vectors = []
    for g in gens:
        g = field(g)
        vectors.append(list(g.coords))
    basis_rows = _rref_mod_p(vectors, field.p)
    if not basis_rows:
        raise ZeroSpan("generators span the zero subspace")
    return Subspace(field, tuple(field(r).index for r in basis_rows))


def prime_subspace(field: Field) -> Subspace:
    return subspace_from_generators(field, [1])


def full_subspace(field: Field) -> Subspace:
    return subspace_from_generators(field, [field.element(field.p**j) for j in range(field.k)])


def all_subspaces(field: Field, dim: int | None = None) -> list[Subspace]:
    """Every nonzero subspace (or those of one dimension), sorted by basis."""
    found = set()
    nonzero = range(1, field.q)
    frontier = {subspace_from_generators(field, [field.element(i)]) for i in nonzero}
    found |= frontier
    while frontier:
        nxt = set()
        for S in frontier:
            members = set(S.element_indices())
            for i in nonzero:
                if i not in members:
                    nxt.add(subspace_from_generators(field, S.basis_elements() + [field.element(i)]))
        nxt -= found
        found |= nxt
        frontier = nxt
    out = sorted(found, key=lambda S: (S.dim, S.basis))
    return [S for S in out if dim is None or S.dim == dim]


def scaled_subspace(S: Subspace, a: FqElem) -> Subspace:
    """aS = {a s : s in S}."""
    return subspace_from_generators(S.field, [a * b for b in S.basis_elements()])


# -- subspace polynomials --

def subspace_polynomial(S: Subspace) -> PolyFq:
    """prod_{s in S} (x - s), by direct multiplication."""
    field = S.field
    neg = field.tables.neg
    result = PolyFq(field, [1])
    for s in S.element_indices():
        result = result * PolyFq(field, [neg[s], 1])
    return result


def subspace_polynomial_linearized(S: Subspace) -> PolyFq:
    """Same polynomial through P_{U+<b>} = P_U^p - P_U(b)^(p-1) P_U, starting from U = 0."""
    field = S.field
    p = field.p
    P = PolyFq.x(field)
    for b in S.basis_elements():
        value = P(b) ** (p - 1)
        P = P**p - P * value
    return P


def plane_subspace_polynomial(field: Field, a: FqElem) -> PolyFq:
    """x^(p^2) - x^p (1 + (a - a^p)^(p-1)) + x (a - a^p)^(p-1), the closed form for <1, a>."""
    p = field.p
    a = field(a)
    w = (a - a**p) ** (p - 1)
    return monomial(field, p * p) - monomial(field, p, w + 1) + monomial(field, 1, w)


# -- translation invariance --

def _check_field(f: PolyFq, S: Subspace) -> None:
    if f.field != S.field:
        raise FieldMismatch(f"polynomial over {f.field}, subspace of {S.field}")


def _invariant_under_basis(t, coeffs: Sequence[int], basis: Sequence[int]) -> bool:
    target = list(coeffs)
    return all(_translate(t, coeffs, s) == target for s in basis)


def is_translation_invariant(g: PolyFq, S: Subspace) -> bool:
    """g(x + s) == g(x) for every s in S; checking the basis suffices."""
    _check_field(g, S)
    return _invariant_under_basis(g.field.tables, g.coeffs, S.basis)


def _iterated_decomposition(g: PolyFq, P: PolyFq, root: int) -> PolyFq:
    # g = sum c_i P^i: peel c = g(root) (P(root) = 0), divide by P, repeat
    t = g.field.tables
    rest = list(g.coeffs)
    digits = []
    while rest:
        c = _eval(t, rest, root)
        digits.append(c)
        quo, rem = _divmod(t, _sub(t, rest, [c]), P.coeffs)
        if rem:
            raise NotInvariant("nonzero remainder while dividing by " + str(P))
        rest = quo
    return PolyFq(g.field, digits)


def decompose_translation_invariant(g: PolyFq, S: Subspace) -> PolyFq:
    """The unique f with f(P_S(x)) == g."""
    _check_field(g, S)
    if g.is_zero():
        return g
    deg = len(g.coeffs) - 1
    if deg % S.order:
        raise NotInvariant(f"degree {deg} is not divisible by |S| = {S.order}")
    return _iterated_decomposition(g, subspace_polynomial(S), 0)


def linearly_equivalent(S: Subspace, S2: Subspace) -> FqElem | None:
    """Smallest a != 0 (in element order) with S2 == aS, or None."""
    if S.field != S2.field:
        raise FieldMismatch(f"subspaces of {S.field} and {S2.field}")
    if S.dim != S2.dim:
        return None
    b0 = S.basis_elements()[0]
    candidates = sorted(S2.field.element(s) / b0 for s in S2.element_indices() if s)
    for a in candidates:
        if scaled_subspace(S, a) == S2:
            return a
    return None


@dataclass(frozen=True)
class CountReport:
    params: dict[str, Any]
    formula_count: int
    brute_force_count: int | None = None
    auxiliary: dict[str, Any] = dc_field(default_factory=dict)

    @property
    def match(self) -> bool | None:
        if self.brute_force_count is None:
            return None
        return self.formula_count == self.brute_force_count

    def to_dict(self) -> dict[str, Any]:
        out = {
            "params": dict(self.params),
            "formula_count": self.formula_count,
            "brute_force_count": self.brute_force_count,
            "match": self.match,
        }
        if self.auxiliary:
            out["auxiliary"] = dict(self.auxiliary)
        return out


def translation_invariant_formula(field: Field, dim: int, n: int) -> int:
    """|C_S(n)| for an F_p-subspace S of dimension ``dim``."""
    p, q = field.p, field.q
    if dim > 1 or n % p:
        return 0
    m = n // p
    total = sum(q ** (m // d) * moebius(d) for d in divisors_coprime_to(m, p))
    numerator = (p - 1) * total
    assert numerator % (p * m) == 0
    return numerator // (p * m)


def _require_degree(n: int) -> None:
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"invariant counts are defined for degree >= 2, got {n!r}")


def translation_invariant_candidates(S: Subspace, n: int,
                                     cap: int | None = None) -> list[tuple[int, ...]]:
    """All monic degree-n polynomials fixed by x -> x + s, s in S, found by
    solving the linear invariance conditions on the coefficients.

    Independent of the composition characterization: the translation map is
    linear on coefficient vectors, so its fixed monic polynomials form an
    affine subspace that is enumerated exhaustively.
    """
    field = S.field
    t = field.tables
    add, mul, neg = t.add, t.mul, t.neg
    rows: list[list[int]] = []
    for s in S.basis:
        spow = [pow_index(field, s, e) for e in range(n + 1)]
        # coefficient j of g(x+s) - g(x): sum_{i>j} C(i,j) s^(i-j) g_i
        for j in range(n):
            row = []
            for i in range(n + 1):
                if i <= j:
                    row.append(0)
                else:
                    row.append(mul[comb(i, j) % field.p][spow[i - j]])
            # move the g_n = 1 column to the right-hand side
            row[n] = neg[row[n]]
            rows.append(row)
    solution = _solve_affine(t, rows, n)
    if solution is None:
        return []
    particular, kernel = solution
    cap = DEFAULT_CAP if cap is None else cap
    if field.q ** len(kernel) > cap:
        raise CapExceeded(f"{field.q}^{len(kernel)} invariant candidates exceed the cap {cap}")
    out = []
    for combo in product(range(field.q), repeat=len(kernel)):
        vec = list(particular)
        for c, k_vec in zip(combo, kernel):
            if c:
                row = mul[c]
                vec = [add[v][row[w]] for v, w in zip(vec, k_vec)]
        out.append(tuple(vec) + (1,))
    out.sort(key=lambda c: c[::-1])
    return out


def _solve_affine(t, rows: list[list[int]], nvars: int):
    """Solve A h = rhs over F_q; each row is nvars coefficients then rhs.

    Returns (particular solution, kernel basis) or None when inconsistent.
    """
    add, mul, neg, inv = t.add, t.mul, t.neg, t.inv
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    for col in range(nvars):
        sel = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if sel is None:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        iv = inv[rows[r][col]]
        rows[r] = [mul[v][iv] for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                c = neg[rows[i][col]]
                rows[i] = [add[v][mul[c][w]] for v, w in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    if any(row[nvars] for row in rows[r:]):
        return None
    free = [c for c in range(nvars) if c not in pivots]
    particular = [0] * nvars
    for i, col in enumerate(pivots):
        particular[col] = rows[i][nvars]
    kernel = []
    for fcol in free:
        vec = [0] * nvars
        vec[fcol] = 1
        for i, col in enumerate(pivots):
            vec[col] = neg[rows[i][fcol]]
        kernel.append(vec)
    return particular, kernel


def brute_force_translation_invariant(S: Subspace, n: int, cap: int | None = None,
                                      method: str = "enumerate") -> list[PolyFq]:
    """C_S(n) found without the closed form.

    ``enumerate`` filters the q^n monic candidates; ``linear`` tests only the
    solutions of the invariance equations, which stays feasible past the cap.
    """
    field = S.field
    t = field.tables
    if method == "enumerate":
        basis = S.basis
        found = filter_irreducibles(field, n, lambda c: _invariant_under_basis(t, c, basis), cap)
    elif method == "linear":
        found = [c for c in translation_invariant_candidates(S, n, cap) if _is_irreducible(field, c)]
    else:
        raise ValueError(f"unknown brute-force method {method!r}")
    return [PolyFq(field, c) for c in found]


def count_translation_invariant(S: Subspace, n: int, with_brute_force: bool = False,
                                cap: int | None = None, method: str = "enumerate") -> CountReport:
    _require_degree(n)
    field = S.field
    formula = translation_invariant_formula(field, S.dim, n)
    brute = None
    if with_brute_force:
        brute = len(brute_force_translation_invariant(S, n, cap, method))
    params = {"q": field.q, "p": field.p, "subspace": str(S), "dim": S.dim, "degree": n}
    return CountReport(params, formula, brute)


def enumerate_translation_invariant(S: Subspace, n: int, cap: int | None = None) -> list[PolyFq]:
    """C_S(n) built constructively, in canonical order.

    For S = F_p these are f(x^p - x) with f monic irreducible of degree n/p
    and Tr(a_(n/p - 1)) != 0.  A line S = s F_p is reached by the scaling
    g -> s^n g(x/s), which carries F_p-invariant polynomials to S-invariant ones.
    """
    _require_degree(n)
    field = S.field
    p = field.p
    if S.dim != 1 or n % p:
        return []
    m = n // p
    s = S.basis_elements()[0]
    x = PolyFq.x(field)
    as_poly = x**p - x
    out = []
    for f in enumerate_irreducibles(field, m, cap):
        if artin_schreier_irreducible(f, 0):
            g = poly_compose(f, as_poly)
            out.append(scale_transform(g, s))
    return sorted(out)


# -- homotheties --

def _check_homothety_scalar(field: Field, a: FqElem | int) -> FqElem:
    a = field(a)
    if a.index in (0, 1):
        raise DegenerateScalar("homothety scalar must lie outside {0, 1}")
    return a


def homothety_polynomial(a: FqElem) -> PolyFq:
    """x^k - 1 with k = ord(a)."""
    a = _check_homothety_scalar(a.field, a)
    k = element_order(a)
    return monomial(a.field, k) - 1


def is_homothety_invariant(f: PolyFq, a: FqElem | int) -> bool:
    return substitute_scaled(f, a) == f


def decompose_homothety(f: PolyFq, a: FqElem) -> PolyFq:
    """The unique g with g(x^k - 1) == f."""
    a = _check_homothety_scalar(f.field, a)
    if f.field != a.field:
        raise FieldMismatch(f"polynomial over {f.field}, scalar in {a.field}")
    if not is_homothety_invariant(f, a):
        raise NotInvariant(f"f(a x) != f(x) for a = {a}")
    if f.is_zero():
        return f
    k = element_order(a)
    if (len(f.coeffs) - 1) % k:
        raise NotInvariant(f"degree is not divisible by ord(a) = {k}")
    return _iterated_decomposition(f, homothety_polynomial(a), 1)


def homothety_formula(field: Field, k: int, n: int) -> int:
    """N_a(n) for ord(a) = k."""
    if n % k:
        return 0
    m = n // k
    total = sum(moebius(d) * (field.q ** (m // d) - 1) for d in divisors_coprime_to(m, k))
    numerator = euler_phi(k) * total
    assert numerator % (m * k) == 0
    return numerator // (m * k)


def count_power_compositions(field: Field, m: int, k: int, cap: int | None = None) -> int:
    """L(m, k): monic irreducible F of degree m with F(x^k) irreducible."""
    t = field.tables
    xk = [0] * k + [1]
    return sum(
        1 for f in enumerate_irreducibles(field, m, cap)
        if _is_irreducible(field, _compose(t, f.coeffs, xk))
    )


def brute_force_homothety_invariant(a: FqElem, n: int, cap: int | None = None) -> list[PolyFq]:
    field = a.field
    mul = field.tables.mul
    powers = [pow_index(field, a.index, i) for i in range(n + 1)]

    def invariant(c: tuple[int, ...]) -> bool:
        return all(mul[ci][powers[i]] == ci for i, ci in enumerate(c))

    return [PolyFq(field, c) for c in filter_irreducibles(field, n, invariant, cap)]


def count_homothety_invariant(a: FqElem, n: int, with_brute_force: bool = False,
                              cap: int | None = None) -> CountReport:
    """N_a(n); with brute force also L(n/k, k) from direct x^k-compositions."""
    _require_degree(n)
    a = _check_homothety_scalar(a.field, a)
    field = a.field
    k = element_order(a)
    formula = homothety_formula(field, k, n)
    brute = None
    aux: dict[str, Any] = {}
    if with_brute_force:
        brute = len(brute_force_homothety_invariant(a, n, cap))
        if n % k == 0:
            aux["composition_count"] = count_power_compositions(field, n // k, k, cap)
    params = {"q": field.q, "p": field.p, "scalar": str(a), "order": k, "degree": n}
    return CountReport(params, formula, brute, aux)


def enumerate_homothety_invariant(a: FqElem, n: int, cap: int | None = None) -> list[PolyFq]:
    """Invariant monic irreducibles of degree n, built as g(x^k - 1)."""
    _require_degree(n)
    a = _check_homothety_scalar(a.field, a)
    field = a.field
    k = element_order(a)
    if n % k:
        return []
    P = homothety_polynomial(a)
    out = []
    for g in enumerate_irreducibles(field, n // k, cap):
        h = poly_compose(g, P)
        if _is_irreducible(field, h.coeffs):
            out.append(h)
    return sorted(out)
