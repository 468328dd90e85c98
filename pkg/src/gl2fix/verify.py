"""Formula-versus-enumeration checks over every small field within given bounds."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterator

from .action import PROJECTIVE, STRICT, Mat2, act, pgl_fixed_scan
from .errors import SingularMatrix
from .ff import Field, make_field
from .invariant import (
    Subspace,
    all_subspaces,
    brute_force_translation_invariant,
    plane_subspace_polynomial,
    count_homothety_invariant,
    count_translation_invariant,
    decompose_homothety,
    decompose_translation_invariant,
    enumerate_homothety_invariant,
    enumerate_translation_invariant,
    homothety_polynomial,
    is_translation_invariant,
    subspace_from_generators,
    subspace_polynomial,
    subspace_polynomial_linearized,
)
from .numutil import prime_power
from .poly import (
    DEFAULT_CAP,
    PolyFq,
    artin_schreier_irreducible,
    artin_schreier_polynomial,
    count_irreducibles,
    count_irreducibles_with_trace,
    enumerate_irreducibles,
    is_irreducible,
    monic_polynomials,
    normalize_monic,
    poly_compose,
    poly_trace,
)
from .psubgroup import brute_force_fixed, count_fixed_by_p_subgroup, translation_group


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


def desk_fields(max_q: int) -> list[Field]:
    """Default-modulus fields for every prime power q <= max_q."""
    out = []
    for q in range(2, max_q + 1):
        pk = prime_power(q)
        if pk:
            out.append(make_field(*pk))
    return out


def random_invertible(field: Field, rng: random.Random) -> Mat2:
    while True:
        entries = [field.element(rng.randrange(field.q)) for _ in range(4)]
        try:
            return Mat2(field, *entries)
        except SingularMatrix:
            continue


def random_polynomial(field: Field, rng: random.Random, n: int) -> PolyFq:
    return PolyFq(field, [rng.randrange(field.q) for _ in range(n)] + [1])


def _summary(failures: list[str], total: int) -> str:
    if failures:
        shown = "; ".join(failures[:5])
        return f"{len(failures)}/{total} failed: {shown}"
    return f"{total} cases"


# -- individual checks; each returns (failures, number of cases) --

def check_translation_counts(fields, max_degree, want: Callable[[Subspace, int], bool],
                             cap: int | None = None) -> tuple[list[str], int]:
    failures, total = [], 0
    for F in fields:
        for S in all_subspaces(F):
            for n in range(2, max_degree + 1):
                if not want(S, n):
                    continue
                method = "enumerate" if F.q**n <= (cap or DEFAULT_CAP) else "linear"
                r = count_translation_invariant(S, n, True, cap, method)
                total += 1
                if not r.match:
                    failures.append(f"q={F.q} S=<{S}> n={n}: {r.formula_count} vs {r.brute_force_count}")
    return failures, total


def check_artin_schreier(fields, max_degree: int = 3) -> tuple[list[str], int]:
    failures, total = [], 0
    for F in fields:
        x = PolyFq.x(F)
        for m in range(1, max_degree + 1):
            for f in enumerate_irreducibles(F, m):
                for b in F.elements():
                    direct = is_irreducible(poly_compose(f, artin_schreier_polynomial(F, b)))
                    total += 1
                    if artin_schreier_irreducible(f, b) != direct:
                        failures.append(f"q={F.q} f={f} b={b}")
    return failures, total


def check_trace_counts(fields, max_degree: int) -> tuple[list[str], int]:
    failures, total = [], 0
    for F in fields:
        for n in range(1, max_degree + 1):
            tally = Counter(poly_trace(f).index for f in enumerate_irreducibles(F, n))
            expected = count_irreducibles_with_trace(F, n)
            values = {tally.get(a, 0) for a in range(1, F.q)}
            total += 1
            if values != {expected}:
                failures.append(f"q={F.q} n={n}: tallies {sorted(values)} vs {expected}")
    return failures, total


def check_homothety_counts(fields, max_degree: int, cap: int | None = None) -> tuple[list[str], int]:
    failures, total = [], 0
    for F in fields:
        for a in list(F.elements())[2:]:
            for n in range(2, max_degree + 1):
                r = count_homothety_invariant(a, n, True, cap)
                total += 1
                comp = r.auxiliary.get("composition_count", r.formula_count)
                if not r.match or comp != r.formula_count:
                    failures.append(f"q={F.q} a={a} n={n}: {r.formula_count} vs "
                                    f"{r.brute_force_count}, L={comp}")
    return failures, total


def check_pgl_scan(fields, max_degree: int) -> tuple[list[str], int]:
    failures = []
    for F in fields:
        found = [str(f) for f in pgl_fixed_scan(F, max_degree, PROJECTIVE)]
        expected = ["x^2 + x + 1"] if F.q == 2 else []
        if found != expected:
            failures.append(f"q={F.q}: {found}")
    return failures, len(fields)


def check_p_subgroups(fields, max_degree: int, per_field: int, rng: random.Random,
                      cap: int | None = None) -> tuple[list[str], int]:
    failures, total = [], 0
    for F in fields:
        subspaces = all_subspaces(F)
        for _ in range(per_field):
            S = rng.choice(subspaces)
            B = random_invertible(F, rng)
            H_S = translation_group(S)
            H = H_S.conjugate(B)
            for n in range(2, max_degree + 1):
                r = count_fixed_by_p_subgroup(H, n, True, cap)
                base = len(brute_force_fixed(H_S, n, cap))
                total += 1
                if not r.match or base != r.brute_force_count:
                    failures.append(f"q={F.q} S=<{S}> B={B} n={n}: formula {r.formula_count}, "
                                    f"brute {r.brute_force_count}, unconjugated {base}")
    return failures, total


def check_composition_law(fields, samples: int, rng: random.Random,
                          max_degree: int = 4) -> tuple[list[str], int]:
    """A∘(B∘f) and (BA)∘f agree up to a scalar."""
    failures, total = [], 0
    for F in fields:
        done = 0
        while done < samples:
            A, B = random_invertible(F, rng), random_invertible(F, rng)
            f = random_polynomial(F, rng, rng.randint(1, max_degree))
            Bf = act(B, f)
            if Bf.degree != f.degree:  # a root went to infinity; the law needs fixed n
                continue
            lhs = act(A, Bf)
            done += 1
            total += 1
            if normalize_monic(lhs) != normalize_monic(act(B @ A, f)):
                failures.append(f"q={F.q} A={A} B={B} f={f}")
    return failures, total


def check_unitriangular_strict(fields, samples: int, rng: random.Random) -> tuple[list[str], int]:
    failures, total = [], 0
    for F in fields:
        for _ in range(samples):
            A = Mat2.translation(F, F.element(rng.randrange(F.q)))
            B = Mat2.translation(F, F.element(rng.randrange(F.q)))
            f = random_polynomial(F, rng, rng.randint(1, 5))
            total += 1
            if act(A, act(B, f)) != act(A @ B, f):
                failures.append(f"q={F.q} A={A} B={B} f={f}")
    return failures, total


def check_roundtrips(fields, max_degree: int) -> tuple[list[str], int]:
    failures, total = [], 0
    for F in fields:
        for S in all_subspaces(F, 1):
            P = subspace_polynomial(S)
            for n in range(2, max_degree + 1):
                for g in enumerate_translation_invariant(S, n):
                    total += 1
                    if poly_compose(decompose_translation_invariant(g, S), P) != g:
                        failures.append(f"translation q={F.q} S=<{S}> g={g}")
        for a in list(F.elements())[2:]:
            Pa = homothety_polynomial(a)
            for n in range(2, max_degree + 1):
                for g in enumerate_homothety_invariant(a, n):
                    total += 1
                    if poly_compose(decompose_homothety(g, a), Pa) != g:
                        failures.append(f"homothety q={F.q} a={a} g={g}")
    return failures, total


def check_plane_closed_form(fields) -> tuple[list[str], int]:
    failures, total = [], 0
    for F in fields:
        if F.k < 2:
            continue
        prime = {e.index for e in F.prime_subfield()}
        for a in F.elements():
            if a.index in prime:
                continue
            total += 1
            S = subspace_from_generators(F, [F.one, a])
            if subspace_polynomial(S) != plane_subspace_polynomial(F, a):
                failures.append(f"q={F.q} a={a}")
    return failures, total


def check_subspace_polynomials(fields) -> tuple[list[str], int]:
    """Additivity, F_p-linearity, zero set, and the linearized recursion."""
    failures, total = [], 0
    for F in fields:
        for S in all_subspaces(F):
            P = subspace_polynomial(S)
            total += 1
            values = {u.index: P(u) for u in F.elements()}
            zeros = sorted(i for i, v in values.items() if not v)
            ok = zeros == S.element_indices() and P == subspace_polynomial_linearized(S)
            for u, v in product(F.elements(), repeat=2):
                if values[(u + v).index] != values[u.index] + values[v.index]:
                    ok = False
                    break
            for u, c in product(F.elements(), F.prime_subfield()):
                if values[(c * u).index] != c * values[u.index]:
                    ok = False
                    break
            if not ok:
                failures.append(f"q={F.q} S=<{S}>")
    return failures, total


def check_composition_characterization(fields, max_degree: int) -> tuple[list[str], int]:
    """S-invariant monic polynomials of degree n are exactly f(P_S) with deg f = n/|S|."""
    failures, total = [], 0
    for F in fields:
        for S in all_subspaces(F):
            P = subspace_polynomial(S)
            for n in range(1, max_degree + 1):
                invariant = {f for f in monic_polynomials(F, n) if is_translation_invariant(f, S)}
                if n % S.order:
                    composed = set()
                else:
                    composed = {poly_compose(f, P) for f in monic_polynomials(F, n // S.order)}
                total += 1
                if invariant != composed:
                    failures.append(f"q={F.q} S=<{S}> n={n}: {len(invariant)} vs {len(composed)}")
    return failures, total


def check_gauss_counts(fields, max_degree: int) -> tuple[list[str], int]:
    failures, total = [], 0
    for F in fields:
        for n in range(1, max_degree + 1):
            total += 1
            got = len(list(enumerate_irreducibles(F, n)))
            if got != count_irreducibles(F, n):
                failures.append(f"q={F.q} n={n}: {got} vs {count_irreducibles(F, n)}")
    return failures, total


def run_checks(max_q: int = 5, max_degree: int = 6, seed: int = 0,
               cap: int | None = None) -> Iterator[Check]:
    """Yield one Check per family, scaled to fields q <= max_q and degrees <= max_degree."""
    fields = desk_fields(max_q)
    rng = random.Random(seed)

    def dim1_divisible(S, n):
        return S.dim == 1 and n % S.field.p == 0

    def dim1_not_divisible(S, n):
        return S.dim == 1 and n % S.field.p != 0

    def higher_dim(S, n):
        return S.dim > 1

    plan = [
        ("gauss count vs enumeration", lambda: check_gauss_counts(fields, max_degree)),
        ("translation formula vs brute force (dim 1, p | n)",
         lambda: check_translation_counts(fields, max_degree, dim1_divisible, cap)),
        ("translation zero count (dim > 1)",
         lambda: check_translation_counts(fields, max_degree, higher_dim, cap)),
        ("translation zero count (p does not divide n)",
         lambda: check_translation_counts(fields, max_degree, dim1_not_divisible, cap)),
        ("artin-schreier criterion vs direct irreducibility",
         lambda: check_artin_schreier(fields, min(3, max_degree))),
        ("trace-restricted counts vs tallies", lambda: check_trace_counts(fields, min(5, max_degree))),
        ("homothety formula vs brute force and x^k compositions",
         lambda: check_homothety_counts(fields, max_degree, cap)),
        ("pgl2 fixed-polynomial scan", lambda: check_pgl_scan(fields, max_degree)),
        ("p-subgroup formula vs brute force, conjugation invariance",
         lambda: check_p_subgroups([F for F in fields if F.q <= 4], min(4, max_degree), 10, rng, cap)),
        ("composition law A∘(B∘f) ~ (BA)∘f", lambda: check_composition_law(fields, 200, rng)),
        ("strict composition for translations", lambda: check_unitriangular_strict(fields, 50, rng)),
        ("decompose/compose roundtrips", lambda: check_roundtrips(fields, max_degree)),
        ("two-dimensional subspace polynomial closed form", lambda: check_plane_closed_form(fields)),
        ("subspace polynomial additivity and recursion", lambda: check_subspace_polynomials(fields)),
        ("invariant polynomials are compositions with P_S",
         lambda: check_composition_characterization(fields, max_degree)),
    ]
    for name, run in plan:
        failures, total = run()
        yield Check(name, not failures and total > 0, _summary(failures, total))
