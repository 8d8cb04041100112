"""Named machine checks of the classification, group and inverse results.

Each check returns a :class:`CheckResult`; ``run`` executes a selection in
order.  Randomized checks draw exact rationals from ``random.Random`` seeded
by ``BICX_SEED`` (default 20221).
"""

from __future__ import annotations

import os
import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import reference
from .core import (
    E1,
    E2,
    I1,
    I2,
    J1,
    ONE,
    Bicomplex,
    NonInvertible,
    Vec4,
    inverse_idempotent,
    is_invertible,
    square_roots,
    to_idempotent,
)
from .geometry import A4, A5, factorization_check, reflect_hyperplane
from .group import cayley_table, d8_table, rho, subgroups, verify_group_axioms, verify_isomorphism
from .involution import (
    TAGS,
    BasisUnit,
    ConjTag,
    UnitAssignment,
    apply,
    apply_idempotent,
    as_matrix,
    assignment_for,
    candidate_assignments,
    classify_n_involutions,
    enumerate_unit_homomorphisms,
    imaginary_permutation,
    iterate,
    order,
    permutation_order,
)
from .invert import KINDS, conjugate_product, inverse_via_conjugates

DEFAULT_SEED = 20221
DEFAULT_SAMPLES = 1000


def seed_from_env() -> int:
    return int(os.environ.get("BICX_SEED", DEFAULT_SEED))


def random_rational(rng: random.Random, bound: int = 20) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_bicomplex(rng: random.Random, bound: int = 20) -> Bicomplex:
    return Bicomplex.from_parts(*(random_rational(rng, bound) for _ in range(4)))


@dataclass
class CheckResult:
    name: str
    passed: bool = True
    details: list[str] = field(default_factory=list)

    def require(self, condition: bool, message: str) -> bool:
        if not condition:
            self.passed = False
            self.details.append(message)
        return condition

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "details": list(self.details)}


def _tags(labels) -> str:
    return "{" + ", ".join(sorted(str(x) for x in labels)) + "}"


def check_enumeration(samples: int, seed: int) -> CheckResult:
    res = CheckResult("enumeration")
    found = enumerate_unit_homomorphisms()
    res.require(len(candidate_assignments()) == 64, "candidate pool is not 64")
    res.require(len(found) == 8, f"found {len(found)} unit homomorphisms, expected 8")
    tags = [a.tag() for a in found]
    res.require(None not in tags, "an accepted assignment matches no conjugation")
    res.require(set(tags) == set(TAGS) and len(set(tags)) == len(tags), "assignments are not in bijection with tags")
    res.require(found == {assignment_for(t) for t in TAGS}, "assignments differ from those induced by the tags")
    res.require(
        UnitAssignment(BasisUnit(1, "j1"), BasisUnit(1, "i2")) not in found,
        "i1 -> j1 was accepted",
    )
    for a in found:
        res.require(
            all(a.extend(u.value) in (I1, -I1, I2, -I2) for u in _IMAGINARY),
            f"{a} sends an imaginary unit outside the signed imaginary units",
        )
        res.require(a.extend(J1) in (J1, -J1), f"{a} sends j1 outside the signed hyperbolic units")
    return res


_IMAGINARY = tuple(BasisUnit(s, n) for n in ("i1", "i2") for s in (1, -1))


def check_classification(samples: int, seed: int) -> CheckResult:
    res = CheckResult("classification")
    counts = Counter(order(t) for t in TAGS)
    res.require(counts == Counter({1: 1, 2: 5, 4: 2}), f"order multiset {dict(counts)}")
    expected = {2: 6, 3: 1, 4: 8, 8: 8}
    for n, size in expected.items():
        got = classify_n_involutions(n)
        res.require(len(got) == size, f"n={n}: {len(got)} maps {_tags(got)}, expected {size}")
    res.require(
        classify_n_involutions(2) == frozenset(t for t in TAGS if t.is_conjugate),
        "2-involutions are not dag0..dag5",
    )
    res.require(classify_n_involutions(3) == {ConjTag.D0}, "3-involutions are not just the identity")
    for p in (5, 7, 11, 13):
        res.require(classify_n_involutions(p) == {ConjTag.D0}, f"nontrivial {p}-involution")
    for t in TAGS:
        perm = imaginary_permutation(t)
        res.require(sorted(perm) == sorted(_IMAGINARY), f"{t} does not permute the signed imaginary units")
        res.require(permutation_order(perm) == order(t), f"{t}: permutation order differs from map order")
    return res


def check_square_roots(samples: int, seed: int) -> CheckResult:
    res = CheckResult("square-roots-of-minus-one")
    roots = square_roots(-ONE)
    res.require(roots == {I1, -I1, I2, -I2}, f"square roots of -1: {_tags(roots)}")
    return res


def check_cayley_table(samples: int, seed: int) -> CheckResult:
    res = CheckResult("cayley-table")
    conj = cayley_table()
    for i, (got, want) in enumerate(zip(conj.labels(), reference.CONJ_TABLE)):
        for j, (g, w) in enumerate(zip(got, want)):
            res.require(g == w, f"conj table [{reference.CONJ_ORDER[i]}][{reference.CONJ_ORDER[j]}] = {g}, published {w}")
    res.require([str(t) for t in conj.order] == list(reference.CONJ_ORDER), "conj ordering differs")
    d8 = d8_table()
    for i, (got, want) in enumerate(zip(d8.labels(), reference.D8_TABLE)):
        for j, (g, w) in enumerate(zip(got, want)):
            res.require(g == w, f"D8 table [{reference.D8_ORDER[i]}][{reference.D8_ORDER[j]}] = {g}, published {w}")
    res.require([str(g) for g in d8.order] == list(reference.D8_ORDER), "D8 ordering differs")
    sub = [[str(x) for x in row] for row in conj.restrict(TAGS[:4])]
    res.require(sub == [list(r) for r in reference.FIRST_FOUR_TABLE], "first-four sub-table differs")
    return res


def check_group_axioms(samples: int, seed: int) -> CheckResult:
    res = CheckResult("group-axioms")
    table = cayley_table()
    report = verify_group_axioms(table)
    res.require(report.is_group, f"not a group: {report.summary()}")
    res.require(report.identity is ConjTag.D0, f"identity is {report.identity}")
    res.require(
        (ConjTag.D1, ConjTag.P6) in report.noncommuting_pairs,
        "dag1 and pdag6 commute",
    )
    res.require(
        table.product(ConjTag.D1, ConjTag.P6) is ConjTag.D4 and table.product(ConjTag.P6, ConjTag.D1) is ConjTag.D5,
        "dag1 o pdag6 / pdag6 o dag1 are not dag4 / dag5",
    )
    six = verify_group_axioms(table, TAGS[:6])
    res.require(
        (ConjTag.D1, ConjTag.D4, ConjTag.P6) in six.closure_failures,
        f"the six conjugates do not fail closure at dag1 o dag4 = pdag6: {six.summary()}",
    )
    return res


def check_subgroups(samples: int, seed: int) -> CheckResult:
    res = CheckResult("subgroups")
    found = subgroups(cayley_table())
    res.require(len(found) == 10, f"{len(found)} subgroups, expected 10")
    sizes = Counter(len(g) for g in found)
    res.require(sizes == Counter({1: 1, 2: 5, 4: 3, 8: 1}), f"subgroup sizes {dict(sizes)}")
    labelled = {frozenset(str(t) for t in g) for g in found}
    proper = {g for g in labelled if len(g) < 8}
    res.require(proper == set(reference.CONJ_PROPER_SUBGROUPS), "proper subgroups differ from the published list")
    res.require(frozenset(reference.CONJ_ORDER) in labelled, "whole group missing")
    return res


def check_isomorphism(samples: int, seed: int) -> CheckResult:
    res = CheckResult("d8-isomorphism")
    report = verify_isomorphism()
    res.require(report.bijective, "rho is not a bijection")
    for f, g, lhs, rhs in report.homomorphism_failures[:5]:
        res.require(False, f"rho({f} o {g}) = {lhs} but rho({f}) rho({g}) = {rhs}")
    res.require(not report.order_mismatches, f"orders differ for {_tags(report.order_mismatches)}")
    res.require(report.order4_counts == (2, 2), f"order-4 element counts {report.order4_counts}")
    res.require(report.subgroups_match, "rho does not carry the subgroups onto the published D8 list")
    res.require(
        {str(rho(t)) for t in TAGS} == set(reference.D8_ORDER), "rho image is not D8"
    )
    res.require({str(k): str(rho(k)) for k in TAGS} == reference.RHO, "rho differs from the published map")
    return res


def check_homomorphism(samples: int, seed: int) -> CheckResult:
    res = CheckResult("involution-homomorphism")
    rng = random.Random(seed)
    moved = {ConjTag.P6: False, ConjTag.P7: False}
    for _ in range(samples):
        s, t = random_bicomplex(rng), random_bicomplex(rng)
        lam = random_rational(rng)
        for tag in TAGS:
            if not res.require(apply(tag, s + t) == apply(tag, s) + apply(tag, t), f"{tag} not additive at {s}, {t}"):
                return res
            if not res.require(apply(tag, s * lam) == apply(tag, s) * lam, f"{tag} not homogeneous at {s}, {lam}"):
                return res
            if not res.require(apply(tag, s * t) == apply(tag, s) * apply(tag, t), f"{tag} not multiplicative at {s}, {t}"):
                return res
            k = 1 if tag is ConjTag.D0 else 2 if tag.is_conjugate else 4
            res.require(iterate(tag, k, s) == s, f"{tag} applied {k} times moves {s}")
            if tag in moved and iterate(tag, 2, s) != s:
                moved[tag] = True
    for tag, seen in moved.items():
        res.require(seen, f"{tag} applied twice fixed every sample")
    return res


def check_idempotent(samples: int, seed: int) -> CheckResult:
    res = CheckResult("idempotent-agreement")
    rng = random.Random(seed + 1)
    for _ in range(samples):
        s = random_bicomplex(rng)
        f = to_idempotent(s)
        for tag in TAGS:
            if not res.require(
                to_idempotent(apply(tag, s)) == apply_idempotent(tag, f),
                f"{tag}: Cartesian and idempotent actions differ at {s}",
            ):
                return res
    res.require(E1 * E1 == E1, "e1^2 != e1")
    res.require(E2 * E2 == E2, "e2^2 != e2")
    res.require((E1 * E2).is_zero(), "e1 e2 != 0")
    res.require(E1 + E2 == ONE, "e1 + e2 != 1")
    res.require(J1 * J1 == ONE, "j1^2 != 1")
    return res


def _zero_divisors(rng: random.Random, count: int) -> list[Bicomplex]:
    out = []
    for _ in range(count):
        lam = random_rational(rng)
        while lam == 0:
            lam = random_rational(rng)
        out += [E1 * lam, E2 * lam]
    return out


def check_inverse_formulas(samples: int, seed: int) -> CheckResult:
    res = CheckResult("inverse-formulas")
    rng = random.Random(seed + 2)
    done = 0
    while done < samples:
        s = random_bicomplex(rng)
        if not is_invertible(s):
            continue
        done += 1
        inv = inverse_idempotent(s)
        res.require(s * inv == ONE, f"s s^-1 != 1 at {s}")
        for kind in KINDS:
            res.require(not conjugate_product(s, kind).is_zero(), f"{kind.name} product vanishes at invertible {s}")
            got = inverse_via_conjugates(s, kind)
            if not res.require(got == inv, f"{kind.name} inverse differs at {s}"):
                return res
    for z in _zero_divisors(rng, 20):
        for kind in KINDS:
            p = conjugate_product(z, kind)
            res.require(p.is_zero(), f"{kind.name} product of zero divisor {z} is {p}, expected 0")
            try:
                inverse_via_conjugates(z, kind)
            except NonInvertible:
                pass
            else:
                res.require(False, f"{kind.name} inverted zero divisor {z}")
    return res


def check_conjugate_products(samples: int, seed: int) -> CheckResult:
    res = CheckResult("conjugate-products-real")
    rng = random.Random(seed + 3)
    for _ in range(samples):
        s = random_bicomplex(rng)
        p = {kind: conjugate_product(s, kind) for kind in KINDS}
        for kind, value in p.items():
            res.require(value.is_real(), f"{kind.name} product of {s} is {value}, not real")
        full, a, b, c = (p[k] for k in KINDS)
        res.require(full == a * a, f"FULL != SUB123^2 at {s}")
        res.require(a == b, f"SUB123 = {a} but SUB345 = {b} at {s}")
        res.require(a == c, f"SUB123 = {a} but SUB367 = {c} at {s}")
        if not res.passed:
            break
    return res


def check_reflections(samples: int, seed: int) -> CheckResult:
    res = CheckResult("reflection-factorizations")
    report = factorization_check()
    res.require(len(report.entries) == len(reference.FACTORIZATIONS), "factorization list incomplete")
    for f in report.failures:
        res.require(False, str(f))
    probe = Vec4(1, 2, 3, 4)
    res.require(tuple(reflect_hyperplane(A4, probe)) == reference.VECTOR_FORMS["dag4"], "R_a4(1,2,3,4) differs")
    res.require(tuple(reflect_hyperplane(A5, probe)) == reference.VECTOR_FORMS["dag5"], "R_a5(1,2,3,4) differs")
    for label, form in reference.VECTOR_FORMS.items():
        tag = ConjTag.parse(label)
        res.require(tuple(as_matrix(tag) @ probe) == form, f"{label} vector form differs")
        res.require(as_matrix(tag).is_signed_permutation(), f"{label} matrix is not a signed permutation")
    return res


CHECKS: dict[str, Callable[[int, int], CheckResult]] = {
    "enumeration": check_enumeration,
    "classification": check_classification,
    "square-roots-of-minus-one": check_square_roots,
    "cayley-table": check_cayley_table,
    "group-axioms": check_group_axioms,
    "subgroups": check_subgroups,
    "d8-isomorphism": check_isomorphism,
    "involution-homomorphism": check_homomorphism,
    "idempotent-agreement": check_idempotent,
    "inverse-formulas": check_inverse_formulas,
    "conjugate-products-real": check_conjugate_products,
    "reflection-factorizations": check_reflections,
}


def run(names=None, samples: int = DEFAULT_SAMPLES, seed: int | None = None) -> list[CheckResult]:
    seed = seed_from_env() if seed is None else seed
    names = list(CHECKS) if names is None else list(names)
    unknown = [n for n in names if n not in CHECKS]
    if unknown:
        raise KeyError(f"unknown check(s): {', '.join(unknown)}")
    return [_run_one(n, samples, seed) for n in names]


def _run_one(name: str, samples: int, seed: int) -> CheckResult:
    # a check whose computation breaks down (say, a composition that matches
    # no known map) has failed; report it rather than abort the whole run
    try:
        return CHECKS[name](samples, seed)
    except (ArithmeticError, LookupError, ValueError) as exc:
        return CheckResult(name, False, [f"{type(exc).__name__}: {exc}"])
