import json

import pytest

from bicx import reference, verify
from bicx.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eval(capsys):
    assert run(capsys, "eval", "(1+i2)*(1-i2)") == (0, "2\n", "")
    assert run(capsys, "eval", "j1^2")[1] == "1\n"
    assert run(capsys, "eval", "inv(i2)")[1] == "-i2\n"
    assert run(capsys, "eval", "idem(i2)")[1] == "(-i1)*e1 + (i1)*e2\n"
    assert run(capsys, "eval", "vec(1+2*i1+3*i2+4*j1)")[1] == "(1, 2, 3, 4)\n"


def test_eval_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "eval", "e1")
    assert code == 0
    data = json.loads(out)
    assert data["value"] == {"cartesian": "1/2 + 1/2*j1", "vec": ["1/2", "0", "0", "1/2"], "idem": ["1", "0"]}


def test_global_flags_after_subcommand(capsys):
    code, out, _ = run(capsys, "eval", "1/4", "--mode", "float")
    assert (code, out) == (0, "0.25\n")


def test_exit_codes(capsys):
    code, _, err = run(capsys, "eval", "inv(e1)")
    assert code == 1 and "NonInvertible" in err
    code, _, err = run(capsys, "eval", "1+")
    assert code == 2 and "offset 2" in err
    code, _, err = run(capsys, "roots", "2")
    assert code == 1 and "NotRepresentable" in err
    code, _, err = run(capsys, "--mode", "float", "eval", "(10*i1+1)^400")
    assert code == 1 and "Overflow" in err
    with pytest.raises(SystemExit) as info:
        main(["nosuchcommand"])
    assert info.value.code == 2
    capsys.readouterr()


def test_conj(capsys):
    code, out, _ = run(capsys, "conj", "2+3*i1-i2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "dag0: 2 + 3*i1 - i2"
    assert lines[3] == "dag3: 2 - 3*i1 + i2"
    assert len(lines) == 8
    code, out, _ = run(capsys, "conj", "i1", "--tag", "dag4", "--tag", "pdag6")
    assert out == "dag4: -i2\npdag6: i2\n"


def test_inverse(capsys):
    code, out, _ = run(capsys, "inverse", "i2")
    assert code == 0
    assert out.splitlines() == ["idempotent: -i2", "full: -i2", "sub123: -i2", "sub345: -i2", "sub367: -i2"]
    code, out, _ = run(capsys, "--format", "json", "inverse", "1+2*i1+3*i2+5*j1", "--kind", "sub123")
    data = json.loads(out)
    assert data["inverse"]["sub123"] == data["inverse"]["idempotent"]
    assert data["conjugate_products"]["sub345"] == "1525 - 156*j1"
    assert run(capsys, "inverse", "e2")[0] == 1


def test_roots(capsys):
    code, out, _ = run(capsys, "roots", "-1")
    assert code == 0
    assert set(out.split()) == {"i1", "-i1", "i2", "-i2"}
    assert set(run(capsys, "roots", "1")[1].split()) == {"1", "-1", "j1", "-j1"}
    assert run(capsys, "roots", "0")[1] == "0\n"


def test_reflect(capsys):
    code, out, _ = run(capsys, "reflect", "1+2*i1+3*i2+4*j1", "--normal", "0,1,1,0")
    assert code == 0
    assert out.splitlines()[0] == "R_(0, 1, 1, 0)(1, 2, 3, 4) = (1, -3, -2, 4)"
    code, out, _ = run(capsys, "--format", "json", "reflect", "1+2*i1+3*i2+4*j1", "--axis", "j1")
    assert json.loads(out)["vec"] == ["1", "2", "3", "-4"]
    assert run(capsys, "reflect", "i1", "--normal", "0,0,0,0")[0] == 2
    assert run(capsys, "reflect", "i1", "--normal", "1,2")[0] == 2


def test_table_formats(capsys):
    code, out, _ = run(capsys, "table", "--which", "conj", "--format", "csv")
    rows = [line.split(",") for line in out.splitlines()]
    assert [r[1:] for r in rows[1:]] == [list(r) for r in reference.CONJ_TABLE]
    code, out, _ = run(capsys, "table", "--which", "d8", "--format", "md")
    md_rows = [[c.strip() for c in line.strip("|").split("|")] for line in out.splitlines()[2:]]
    assert [r[1:] for r in md_rows] == [list(r) for r in reference.D8_TABLE]
    code, out, _ = run(capsys, "table", "--which", "conj", "--format", "json")
    assert json.loads(out) == {"order": list(reference.CONJ_ORDER), "table": [list(r) for r in reference.CONJ_TABLE]}


def test_subgroups(capsys):
    code, out, _ = run(capsys, "subgroups")
    assert code == 0 and len(out.splitlines()) == 10
    code, out, _ = run(capsys, "--format", "json", "subgroups", "--which", "d8")
    groups = {frozenset(g) for g in json.loads(out)["subgroups"]}
    assert {g for g in groups if len(g) < 8} == set(reference.D8_PROPER_SUBGROUPS)


@pytest.mark.parametrize("name", ["cayley-table", "d8-isomorphism", "square-roots-of-minus-one"])
def test_verify_passing_theorems(capsys, name):
    code, out, _ = run(capsys, "verify", "--theorem", name)
    assert code == 0
    assert out.splitlines()[0] == f"PASS {name}"


def test_verify_unknown_theorem(capsys):
    code, _, err = run(capsys, "verify", "--theorem", "nope")
    assert code == 2 and "known checks" in err


def test_verify_float_mode_rejected(capsys):
    assert run(capsys, "--mode", "float", "verify", "--theorem", "cayley-table")[0] == 2


def test_verify_all_json(capsys, monkeypatch):
    monkeypatch.setenv("BICX_SEED", "7")
    code, out, _ = run(capsys, "--format", "json", "verify", "--all", "--samples", "20")
    data = json.loads(out)
    assert data["seed"] == 7
    assert [c["name"] for c in data["checks"]] == list(verify.CHECKS)
    failing = [c["name"] for c in data["checks"] if not c["passed"]]
    # the SUB345 conjugate-product claims do not hold; everything else does
    assert failing == ["inverse-formulas", "conjugate-products-real"]
    assert data["first_failure"] == "inverse-formulas"
    assert code == 1


def test_deterministic_output(capsys):
    first = run(capsys, "--format", "json", "verify", "--theorem", "involution-homomorphism", "--samples", "30")
    second = run(capsys, "--format", "json", "verify", "--theorem", "involution-homomorphism", "--samples", "30")
    assert first == second
    assert run(capsys, "conj", "1/3+i2") == run(capsys, "conj", "1/3+i2")


# -- mutation tests: perturbing any published datum or formula is caught ----------


def _passes(name, samples=30):
    return verify.run([name], samples=samples)[0].passed


def test_mutated_table_entry(monkeypatch):
    rows = [list(r) for r in reference.CONJ_TABLE]
    rows[4][5], rows[4][6] = rows[4][6], rows[4][5]
    monkeypatch.setattr(reference, "CONJ_TABLE", tuple(map(tuple, rows)))
    assert not _passes("cayley-table")


def test_mutated_d8_entry(monkeypatch):
    rows = [list(r) for r in reference.D8_TABLE]
    rows[1][4] = "a^3"
    monkeypatch.setattr(reference, "D8_TABLE", tuple(map(tuple, rows)))
    assert not _passes("cayley-table")


def test_mutated_subgroup(monkeypatch):
    groups = list(reference.CONJ_PROPER_SUBGROUPS)
    groups[2] = frozenset({"dag0", "dag3", "pdag6", "dag4"})
    monkeypatch.setattr(reference, "CONJ_PROPER_SUBGROUPS", tuple(groups))
    assert not _passes("subgroups")


def test_mutated_d8_subgroup(monkeypatch):
    groups = list(reference.D8_PROPER_SUBGROUPS)
    groups[3] = frozenset({"Id", "a"})
    monkeypatch.setattr(reference, "D8_PROPER_SUBGROUPS", tuple(groups))
    assert not _passes("d8-isomorphism")


def test_mutated_rho(monkeypatch):
    monkeypatch.setitem(reference.RHO, "dag1", "a^2x")
    assert not _passes("d8-isomorphism")


def test_mutated_factorization(monkeypatch):
    facts = list(reference.FACTORIZATIONS)
    facts[5] = ("pdag6", ("i1", "j1", "a4"))
    monkeypatch.setattr(reference, "FACTORIZATIONS", tuple(facts))
    assert not _passes("reflection-factorizations")


def test_mutated_vector_form(monkeypatch):
    monkeypatch.setitem(reference.VECTOR_FORMS, "dag4", (1, 3, 2, 4))
    assert not _passes("reflection-factorizations")


def test_mutated_formula(monkeypatch):
    import bicx.involution as inv
    from bicx.core import Bicomplex, Complex

    original = inv._cartesian

    def broken(tag, s):
        if tag is inv.ConjTag.D5:
            # drop the sign swap in the i1 <-> i2 exchange
            return Bicomplex(Complex(s.z1.re, -s.z2.re), Complex(s.z1.im, s.z2.im))
        return original(tag, s)

    monkeypatch.setattr(inv, "_cartesian", broken)
    for name in ("enumeration", "cayley-table", "involution-homomorphism", "idempotent-agreement", "reflection-factorizations"):
        assert not _passes(name), name


def test_mutated_idempotent_action(monkeypatch):
    import bicx.involution as inv

    monkeypatch.setitem(inv._IDEMPOTENT_ACTION, inv.ConjTag.D4, (False, True, False))
    assert not _passes("idempotent-agreement")


def test_mutated_d8_relation(monkeypatch):
    import bicx.group as g

    monkeypatch.setattr(g, "d8_multiply", lambda a, b: g.D8Element(a.rot + b.rot, a.flip != b.flip))
    assert not _passes("cayley-table")
    assert not _passes("d8-isomorphism")


def test_mutated_inverse(monkeypatch):
    import bicx.verify as v
    from bicx.core import ONE

    monkeypatch.setattr(v, "inverse_via_conjugates", lambda s, kind: ONE)
    assert not _passes("inverse-formulas", samples=5)
