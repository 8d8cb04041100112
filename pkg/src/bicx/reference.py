"""Published ground-truth data, transcribed verbatim.

Tables are given as rows of labels: the conjugation tables use the
serialized tag names, the dihedral table uses ``Id, x, a^2x, ...``.  Row
``r``, column ``c`` holds ``r o c`` (apply ``c`` first).  The verification
checks compare generated objects against these literals.
"""

from __future__ import annotations

CONJ_ORDER = ("dag0", "dag1", "dag2", "dag3", "dag4", "dag5", "pdag6", "pdag7")

FIRST_FOUR_TABLE = (
    ("dag0", "dag1", "dag2", "dag3"),
    ("dag1", "dag0", "dag3", "dag2"),
    ("dag2", "dag3", "dag0", "dag1"),
    ("dag3", "dag2", "dag1", "dag0"),
)

CONJ_TABLE = (
    ("dag0", "dag1", "dag2", "dag3", "dag4", "dag5", "pdag6", "pdag7"),
    ("dag1", "dag0", "dag3", "dag2", "pdag6", "pdag7", "dag4", "dag5"),
    ("dag2", "dag3", "dag0", "dag1", "pdag7", "pdag6", "dag5", "dag4"),
    ("dag3", "dag2", "dag1", "dag0", "dag5", "dag4", "pdag7", "pdag6"),
    ("dag4", "pdag7", "pdag6", "dag5", "dag0", "dag3", "dag2", "dag1"),
    ("dag5", "pdag6", "pdag7", "dag4", "dag3", "dag0", "dag1", "dag2"),
    ("pdag6", "dag5", "dag4", "pdag7", "dag1", "dag2", "dag3", "dag0"),
    ("pdag7", "dag4", "dag5", "pdag6", "dag2", "dag1", "dag0", "dag3"),
)

D8_ORDER = ("Id", "x", "a^2x", "a^2", "a^3x", "ax", "a", "a^3")

D8_TABLE = (
    ("Id", "x", "a^2x", "a^2", "a^3x", "ax", "a", "a^3"),
    ("x", "Id", "a^2", "a^2x", "a", "a^3", "a^3x", "ax"),
    ("a^2x", "a^2", "Id", "x", "a^3", "a", "ax", "a^3x"),
    ("a^2", "a^2x", "x", "Id", "ax", "a^3x", "a^3", "a"),
    ("a^3x", "a^3", "a", "ax", "Id", "a^2", "a^2x", "x"),
    ("ax", "a", "a^3", "a^3x", "a^2", "Id", "x", "a^2x"),
    ("a", "ax", "a^3x", "a^3", "x", "a^2x", "a^2", "Id"),
    ("a^3", "a^3x", "ax", "a", "a^2x", "x", "Id", "a^2"),
)

RHO = {
    "dag0": "Id",
    "dag1": "x",
    "dag2": "a^2x",
    "dag3": "a^2",
    "dag4": "a^3x",
    "dag5": "ax",
    "pdag6": "a",
    "pdag7": "a^3",
}

CONJ_PROPER_SUBGROUPS = (
    frozenset({"dag0", "dag1", "dag2", "dag3"}),
    frozenset({"dag0", "dag3", "dag4", "dag5"}),
    frozenset({"dag0", "dag3", "pdag6", "pdag7"}),
    frozenset({"dag0", "dag1"}),
    frozenset({"dag0", "dag2"}),
    frozenset({"dag0", "dag3"}),
    frozenset({"dag0", "dag4"}),
    frozenset({"dag0", "dag5"}),
    frozenset({"dag0"}),
)

D8_PROPER_SUBGROUPS = (
    frozenset({"Id", "x", "a^2", "a^2x"}),
    frozenset({"Id", "ax", "a^2", "a^3x"}),
    frozenset({"Id", "a", "a^2", "a^3"}),
    frozenset({"Id", "x"}),
    frozenset({"Id", "a^2x"}),
    frozenset({"Id", "a^2"}),
    frozenset({"Id", "a^3x"}),
    frozenset({"Id", "ax"}),
    frozenset({"Id"}),
)

# signed coordinate images of (x1, x_i1, x_i2, x_j1); e.g. (1, -3, -2, 4)
# reads (x1, -x_i2, -x_i1, x_j1)
VECTOR_FORMS = {
    "dag1": (1, 2, -3, -4),
    "dag2": (1, -2, 3, -4),
    "dag3": (1, -2, -3, 4),
    "dag4": (1, -3, -2, 4),
    "dag5": (1, 3, 2, 4),
    "pdag6": (1, -3, 2, -4),
    "pdag7": (1, 3, -2, -4),
}

# each entry composes right to left: ("i2", "j1") means R_i2 o R_j1
FACTORIZATIONS = (
    ("dag1", ("i2", "j1")),
    ("dag2", ("i1", "j1")),
    ("dag3", ("i1", "i2")),
    ("dag4", ("a4",)),
    ("dag5", ("a5",)),
    ("pdag6", ("i1", "j1", "a5")),
    ("pdag6", ("i2", "j1", "a4")),
    ("pdag7", ("i1", "j1", "a4")),
    ("pdag7", ("i2", "j1", "a5")),
)
