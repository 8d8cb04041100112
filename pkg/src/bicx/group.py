"""The composition group of the eight conjugations and its D8 model.

Composition convention: ``table[r][c]`` is ``r o c``, i.e. ``c`` is applied
first and ``r`` second.  This is the only reading under which applying
``dag4`` then ``dag1`` gives ``pdag6`` and the published tables agree.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
from dataclasses import dataclass, field
from typing import Generic, Hashable, Sequence, TypeVar

from . import reference
from .involution import TAGS, ConjTag, compose, identify

E = TypeVar("E", bound=Hashable)


class UnidentifiableComposition(LookupError):
    pass


@dataclass(frozen=True)
class CayleyTable(Generic[E]):
    order: tuple[E, ...]
    rows: tuple[tuple[E, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.order)
        if len(self.rows) != n or any(len(r) != n for r in self.rows):
            raise ValueError("Cayley table must be square and match its ordering")

    def product(self, r: E, c: E) -> E:
        return self.rows[self.order.index(r)][self.order.index(c)]

    def restrict(self, elements: Sequence[E]) -> list[list[E]]:
        return [[self.product(r, c) for c in elements] for r in elements]

    def labels(self) -> list[list[str]]:
        return [[str(x) for x in row] for row in self.rows]

    def to_markdown(self) -> str:
        header = ["∘"] + [str(x) for x in self.order]
        lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
        for head, row in zip(self.order, self.rows):
            lines.append("| " + " | ".join([str(head)] + [str(x) for x in row]) + " |")
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["∘"] + [str(x) for x in self.order])
        for head, row in zip(self.order, self.rows):
            writer.writerow([str(head)] + [str(x) for x in row])
        return buf.getvalue()

    def to_dict(self) -> dict:
        return {"order": [str(x) for x in self.order], "table": self.labels()}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False) + "\n"


def compose_tags(r: ConjTag, c: ConjTag) -> ConjTag:
    tag = identify(compose(r, c))
    if tag is None:
        raise UnidentifiableComposition(f"{r} o {c} matches no conjugation")
    return tag


def cayley_table() -> CayleyTable[ConjTag]:
    return CayleyTable(TAGS, tuple(tuple(compose_tags(r, c) for c in TAGS) for r in TAGS))


@dataclass
class GroupReport:
    elements: tuple
    closure_failures: list[tuple] = field(default_factory=list)
    identity: object = None
    missing_inverses: list = field(default_factory=list)
    associativity_failures: list[tuple] = field(default_factory=list)
    noncommuting_pairs: list[tuple] = field(default_factory=list)

    @property
    def closed(self) -> bool:
        return not self.closure_failures

    @property
    def associative(self) -> bool:
        return not self.associativity_failures

    @property
    def commutative(self) -> bool:
        return not self.noncommuting_pairs

    @property
    def is_group(self) -> bool:
        return (
            self.closed
            and self.identity is not None
            and not self.missing_inverses
            and self.associative
        )

    def summary(self) -> str:
        parts = [
            f"closed={self.closed}",
            f"identity={self.identity}",
            f"inverses={not self.missing_inverses}",
            f"associative={self.associative}",
            f"commutative={self.commutative}",
        ]
        if self.closure_failures:
            r, c, p = self.closure_failures[0]
            parts.append(f"first closure failure: {r} o {c} = {p}")
        if self.noncommuting_pairs:
            r, c = self.noncommuting_pairs[0]
            parts.append(f"noncommuting: ({r}, {c})")
        return ", ".join(parts)


def verify_group_axioms(t: CayleyTable, elements: Sequence | None = None) -> GroupReport:
    """Check the group axioms for ``t`` restricted to ``elements``.

    Associativity is checked on every triple.  For a non-closed subset the
    remaining axioms are evaluated in the full table.
    """
    elems = tuple(t.order if elements is None else elements)
    members = set(elems)
    report = GroupReport(elements=elems)
    for r, c in itertools.product(elems, repeat=2):
        p = t.product(r, c)
        if p not in members:
            report.closure_failures.append((r, c, p))
    for e in elems:
        if all(t.product(e, x) == x == t.product(x, e) for x in elems):
            report.identity = e
            break
    if report.identity is not None:
        for x in elems:
            if not any(t.product(x, y) == report.identity == t.product(y, x) for y in elems):
                report.missing_inverses.append(x)
    else:
        report.missing_inverses = list(elems)
    for a, b, c in itertools.product(elems, repeat=3):
        if t.product(t.product(a, b), c) != t.product(a, t.product(b, c)):
            report.associativity_failures.append((a, b, c))
    for a, b in itertools.combinations(elems, 2):
        if t.product(a, b) != t.product(b, a):
            report.noncommuting_pairs.append((a, b))
    return report


def is_subgroup(t: CayleyTable, subset) -> bool:
    report = verify_group_axioms(t, [x for x in t.order if x in subset])
    return bool(subset) and report.closed and report.identity is not None and not report.missing_inverses


def subgroups(t: CayleyTable) -> list[frozenset]:
    """Every subgroup, found by testing all ``2**n`` subsets.

    Sorted by size, then by position of members in ``t.order``.
    """
    n = len(t.order)
    found = []
    for mask in range(1, 2**n):
        subset = frozenset(t.order[i] for i in range(n) if mask >> i & 1)
        if is_subgroup(t, subset):
            found.append(subset)
    return sorted(found, key=lambda g: (len(g), sorted(t.order.index(x) for x in g)))


def element_order(t: CayleyTable, g, identity=None) -> int:
    identity = t.order[0] if identity is None else identity
    k, x = 1, g
    while x != identity:
        x = t.product(x, g)
        k += 1
    return k


# -- dihedral group of order 8 -----------------------------------------------


@dataclass(frozen=True)
class D8Element:
    """``a**rot * x**flip`` with ``a**4 = x**2 = Id`` and ``x a = a**3 x``."""

    rot: int = 0
    flip: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "rot", self.rot % 4)
        object.__setattr__(self, "flip", bool(self.flip))

    def __mul__(self, other: D8Element) -> D8Element:
        return d8_multiply(self, other)

    @classmethod
    def parse(cls, label: str) -> D8Element:
        for g in D8_ELEMENTS:
            if str(g) == label:
                return g
        raise ValueError(f"unknown D8 element {label!r}")

    def __str__(self) -> str:
        if self.rot == 0:
            return "x" if self.flip else "Id"
        rot = "a" if self.rot == 1 else f"a^{self.rot}"
        return rot + ("x" if self.flip else "")


def d8_multiply(g: D8Element, h: D8Element) -> D8Element:
    # a^r x^f a^s x^e = a^(r + (-1)^f s) x^(f+e), using x a^s = a^(-s) x
    rot = g.rot - h.rot if g.flip else g.rot + h.rot
    return D8Element(rot, g.flip != h.flip)


D8_IDENTITY = D8Element()
A = D8Element(1)
X = D8Element(0, True)
D8_ELEMENTS: tuple[D8Element, ...] = (
    D8Element(0, False),
    D8Element(0, True),
    D8Element(2, True),
    D8Element(2, False),
    D8Element(3, True),
    D8Element(1, True),
    D8Element(1, False),
    D8Element(3, False),
)


def d8_table() -> CayleyTable[D8Element]:
    return CayleyTable(
        D8_ELEMENTS, tuple(tuple(d8_multiply(g, h) for h in D8_ELEMENTS) for g in D8_ELEMENTS)
    )


RHO: dict[ConjTag, D8Element] = {
    ConjTag.D0: D8Element(0, False),
    ConjTag.D1: D8Element(0, True),
    ConjTag.D2: D8Element(2, True),
    ConjTag.D3: D8Element(2, False),
    ConjTag.D4: D8Element(3, True),
    ConjTag.D5: D8Element(1, True),
    ConjTag.P6: D8Element(1, False),
    ConjTag.P7: D8Element(3, False),
}


def rho(tag: ConjTag) -> D8Element:
    return RHO[tag]


@dataclass
class IsomorphismReport:
    bijective: bool
    homomorphism_failures: list[tuple] = field(default_factory=list)
    order_mismatches: list = field(default_factory=list)
    image_subgroups: list[frozenset] = field(default_factory=list)
    subgroups_match: bool = False
    order4_counts: tuple[int, int] = (0, 0)

    @property
    def ok(self) -> bool:
        return (
            self.bijective
            and not self.homomorphism_failures
            and not self.order_mismatches
            and self.subgroups_match
        )


def verify_isomorphism(
    conj: CayleyTable | None = None, d8: CayleyTable | None = None, mapping=None
) -> IsomorphismReport:
    """Check that ``mapping`` (default ``RHO``) is an isomorphism onto D8.

    Also checks that it carries the subgroup lattice onto the published
    list of D8 subgroups.
    """
    conj = cayley_table() if conj is None else conj
    d8 = d8_table() if d8 is None else d8
    mapping = RHO if mapping is None else mapping
    images = [mapping[t] for t in conj.order]
    report = IsomorphismReport(bijective=len(set(images)) == len(d8.order) == len(conj.order))
    for f, g in itertools.product(conj.order, repeat=2):
        lhs = mapping[conj.product(f, g)]
        rhs = d8.product(mapping[f], mapping[g])
        if lhs != rhs:
            report.homomorphism_failures.append((f, g, lhs, rhs))
    for f in conj.order:
        if element_order(conj, f) != element_order(d8, mapping[f]):
            report.order_mismatches.append(f)
    report.order4_counts = (
        sum(element_order(conj, f) == 4 for f in conj.order),
        sum(element_order(d8, g) == 4 for g in d8.order),
    )
    report.image_subgroups = [frozenset(mapping[x] for x in h) for h in subgroups(conj)]
    proper = {frozenset(str(g) for g in h) for h in report.image_subgroups if len(h) < len(conj.order)}
    report.subgroups_match = proper == set(reference.D8_PROPER_SUBGROUPS)
    return report


__all__ = [
    "CayleyTable",
    "GroupReport",
    "IsomorphismReport",
    "UnidentifiableComposition",
    "D8Element",
    "D8_ELEMENTS",
    "RHO",
    "compose_tags",
    "cayley_table",
    "verify_group_axioms",
    "is_subgroup",
    "subgroups",
    "element_order",
    "d8_multiply",
    "d8_table",
    "rho",
    "verify_isomorphism",
]
