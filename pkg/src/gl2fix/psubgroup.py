"""p-subgroups of GL2(F_q).

Every element of a p-subgroup is unipotent, so the subgroup fixes a common
line; moving that line to e1 conjugates the whole group into the upper
unitriangular translations ((1, s), (0, 1)).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .action import PROJECTIVE, Mat2, _fixed, _require_query_input, act
from .errors import CapExceeded, NoCommonFixedLine, NotFixed, NotPGroup
from .ff import Field
from .invariant import CountReport, Subspace, subspace_from_generators, translation_invariant_formula
from .poly import PolyFq, filter_irreducibles, normalize_monic


@dataclass(frozen=True)
class PSubgroup:
    field: Field
    generators: tuple[Mat2, ...]
    elements: tuple[Mat2, ...]  # sorted by entries

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def rank(self) -> int:
        """r with order == p^r."""
        r, n = 0, self.order
        while n > 1:
            n //= self.field.p
            r += 1
        return r

    def __contains__(self, A: Mat2) -> bool:
        return A in set(self.elements)

    def conjugate(self, B: Mat2) -> "PSubgroup":
        """B^-1 H B."""
        Bi = B.inverse()
        return closure(self.field, [Bi @ g @ B for g in self.generators])

    def __str__(self) -> str:
        return ";".join(str(g) for g in self.generators)


def _is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def closure(field: Field, generators: Sequence[Mat2], cap: int | None = None) -> PSubgroup:
    """Materialize the group generated by ``generators``; it must be a nontrivial p-group."""
    gens = tuple(generators)
    if not gens:
        raise NotPGroup("need at least one generator")
    cap = field.q**2 if cap is None else cap
    for g in gens:
        if g.field != field:
            raise NotPGroup(f"generator {g} is over {g.field}, expected {field}")
        if not g.is_unipotent():
            raise NotPGroup(f"generator {g} is not unipotent, so it has order prime to p")
    identity = Mat2.identity(field)
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for e in frontier:
            for g in gens:
                h = e @ g
                if h not in seen:
                    if not h.is_unipotent():
                        raise NotPGroup(f"product {h} is not unipotent")
                    seen.add(h)
                    nxt.append(h)
                    if len(seen) > cap:
                        raise CapExceeded(f"closure exceeds {cap} elements")
        frontier = nxt
    if len(seen) == 1:
        raise NotPGroup("the generators only give the trivial group")
    if not _is_p_power(len(seen), field.p):
        raise NotPGroup(f"order {len(seen)} is not a power of {field.p}")
    return PSubgroup(field, gens, tuple(sorted(seen)))


def translation_group(S: Subspace) -> PSubgroup:
    """H_S = {((1, s), (0, 1)) : s in S}."""
    field = S.field
    return closure(field, [Mat2.translation(field, b) for b in S.basis_elements()])


def _kernel_line(E: Mat2) -> tuple[int, int] | None:
    """Spanning vector of ker(E - I), scaled so its first nonzero entry is 1; None for E = I."""
    t = E.field.tables
    add, neg, mul, inv = t.add, t.neg, t.mul, t.inv
    a, b, c, d = E.entries
    m = (add[a][neg[1]], b, c, add[d][neg[1]])
    if m == (0, 0, 0, 0):
        return None
    # a nonzero row (u, w) of E - I; the kernel is spanned by (w, -u)
    u, w = (m[0], m[1]) if (m[0] or m[1]) else (m[2], m[3])
    v = (w, neg[u])
    lead = v[0] if v[0] else v[1]
    li = inv[lead]
    return (mul[v[0]][li], mul[v[1]][li])


def conjugate_to_translations(H: PSubgroup) -> tuple[Mat2, Subspace]:
    """A with A^-1 E A upper unitriangular for all E in H, and the subspace S of their entries."""
    field = H.field
    lines = {_kernel_line(E) for E in H.generators} - {None}
    if len(lines) != 1:
        raise NoCommonFixedLine(f"generators fix {len(lines)} different lines")
    v0, v1 = lines.pop()
    # first column v, second column the first standard vector not parallel to v
    w0, w1 = (1, 0) if v1 else (0, 1)
    A = Mat2(field, field.element(v0), field.element(w0), field.element(v1), field.element(w1))
    Ai = A.inverse()
    entries = []
    for E in H.elements:
        C = Ai @ E @ A
        if not C.is_upper_unitriangular():
            raise NoCommonFixedLine(f"conjugate {C} of {E} is not unitriangular")
        entries.append(C.b)
    S = subspace_from_generators(field, entries)
    if S.order != H.order:
        raise NoCommonFixedLine(f"|S| = {S.order} differs from |H| = {H.order}")
    return A, S


def brute_force_fixed(H: PSubgroup, n: int, cap: int | None = None,
                      mode: str = PROJECTIVE) -> list[PolyFq]:
    """I_H(n) by testing every element of H against every monic irreducible of degree n."""
    field = H.field
    t = field.tables
    mats = [E.entries for E in H.elements if not E.is_identity()]
    found = filter_irreducibles(field, n, lambda c: all(_fixed(t, e, c, mode) for e in mats), cap)
    return [PolyFq(field, c) for c in found]


def count_fixed_by_p_subgroup(H: PSubgroup, n: int, with_brute_force: bool = False,
                              cap: int | None = None) -> CountReport:
    """|I_H(n)| through the conjugate translation subspace."""
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"invariant counts are defined for degree >= 2, got {n!r}")
    field = H.field
    A, S = conjugate_to_translations(H)
    formula = translation_invariant_formula(field, S.dim, n)
    brute = len(brute_force_fixed(H, n, cap)) if with_brute_force else None
    params = {"q": field.q, "p": field.p, "generators": str(H), "order": H.order,
              "degree": n}
    aux = {"conjugator": str(A), "subspace": str(S)}
    return CountReport(params, formula, brute, aux)


def normalized_conjugation_map(H: PSubgroup, A: Mat2, f: PolyFq) -> PolyFq:
    """Send f in I_H(n) to the monic member of I_{A^-1 H A}(n) it corresponds to.

    Because A∘(B∘f) ~ (BA)∘f for this action, the polynomial fixed by
    A^-1 H A is the monic multiple of A∘f.
    """
    _require_query_input(f)
    t = f.field.tables
    for E in H.elements:
        if not _fixed(t, E.entries, f.coeffs, PROJECTIVE):
            raise NotFixed(f"{f} is not fixed by {E}")
    return normalize_monic(act(A, f))
