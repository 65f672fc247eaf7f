import os
import pathlib

import pytest

import algaudit

EXAMPLES = pathlib.Path(os.environ.get("ALGAUDIT_EXAMPLES", pathlib.Path(__file__).parents[2] / "data" / "examples"))


def read(name):
    return (EXAMPLES / name).read_text()


def test_derivations_of_two_dim_fixture():
    text = read("As_2^1.alg")
    assert algaudit.der_dim(text) == 2
    assert algaudit.tangent_dim(text) == 2
    basis = algaudit.derivations(text)
    assert len(basis) == 2
    assert all(len(m) == 2 and len(m[0]) == 2 for m in basis)


def test_families():
    res = algaudit.verify_families(read("As_3^8.alg"), read("As_3^8.fam"))
    assert [r["status"] for r in res] == ["VERIFIED"]
    bad = algaudit.verify_families(read("As_2^1.alg"), read("As_2^1_corrupted.fam"))
    assert bad[0]["status"] == "FAILED"
    assert set(bad[0]["witness"]) == {"a11", "a21"}


def test_census():
    r = algaudit.census(read("As_2^1.alg"), p=7, threads=2)
    assert r["aut_count"] == 42
    assert r["der_count"] == 49
    assert algaudit.census(read("zero2.alg"), p=2)["aut_count"] == 6


def test_errors():
    with pytest.raises(algaudit.ParseError, match="1:1"):
        algaudit.der_dim("")
    with pytest.raises(algaudit.AlgauditError):
        algaudit.census(read("As_2^1.alg"), p=4)
    assert issubclass(algaudit.ParseError, algaudit.AlgauditError)


def test_commands():
    code, out, _ = algaudit.cmd_check(read("broken.alg"))
    assert code == 1 and "(e1*e1)*e1" in out
    code, out, _ = algaudit.cmd_der(read("As_4^2.alg"), compare_pattern=True)
    assert "MISMATCH" in out
    assert algaudit.canonical_table("algebra x dim 2\ne2*e1 = e1\ne1*e1 = e2\n").startswith("algebra x dim 2\ne1*e1")


def test_audit():
    assert len(algaudit.catalog_names()) == 63
    code, records, jsonl = algaudit.audit(threads=2)
    assert code == 0
    assert len(records) == jsonl.count("\n")
    span = [r for r in records if r["entry"] == "As_2^1" and r["check"] == "DER_SPAN"]
    assert span[0]["verdict"] == "MATCH"
