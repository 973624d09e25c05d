"""CLI verbs, exit codes and JSON schema conformance."""

from __future__ import annotations

import json
from pathlib import Path

import pytest

jsonschema = pytest.importorskip("jsonschema")

from idealforms import cli


SCHEMA_DIR = Path(__file__).resolve().parent.parent / "docs" / "schemas"


def _registry():
    from referencing import Registry, Resource

    resources = []
    for path in SCHEMA_DIR.glob("*.json"):
        doc = json.loads(path.read_text())
        resources.append((path.name, Resource.from_contents(doc)))
    return Registry().with_resources(resources)


def _validate(payload: dict, schema_name: str) -> None:
    schema = json.loads((SCHEMA_DIR / schema_name).read_text())
    try:
        validator = jsonschema.Draft202012Validator(schema, registry=_registry())
    except TypeError:  # older jsonschema without the referencing API
        resolver = jsonschema.RefResolver(
            base_uri=f"{SCHEMA_DIR.as_uri()}/", referrer=schema
        )
        validator = jsonschema.Draft202012Validator(schema, resolver=resolver)
    validator.validate(payload)


def run(capsys, *argv) -> tuple[int, str]:
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, schema_name, *argv) -> dict:
    code, out = run(capsys, "--json", *argv)
    assert code == 0, out
    payload = json.loads(out)
    _validate(payload, schema_name)
    return payload


def test_normalize(capsys):
    code, out = run(capsys, "normalize", "omega(FIN)")
    assert code == 0 and out.strip() == "P(1)"
    payload = run_json(capsys, "canonical_form.json", "normalize", "omega(FIN)")
    assert payload == {"kind": "P", "rank": "1", "printed": "P(1)"}


def test_rank_and_perp(capsys):
    assert run(capsys, "rank", "limsum(w*2)") == (0, "w*2\n")
    assert run(capsys, "perp", "P(3)")[1].strip() == "Q(3)"
    run_json(capsys, "rank.json", "rank", "P(w)")
    run_json(capsys, "canonical_form.json", "perp", "mix(P(1);omega(FIN))")


def test_iso(capsys):
    code, out = run(capsys, "iso", "P(1)", "Q(1)")
    assert code == 0 and out.strip() == "non-isomorphic"
    payload = run_json(capsys, "iso.json", "iso", "sum(P(2),Q(1))", "P(2)")
    assert payload["isomorphic"] is True


def test_compile_and_emitters(capsys):
    code, out = run(capsys, "compile", "P(1)")
    assert code == 0 and out.strip() == "fan([];const(chain))"
    payload = run_json(capsys, "compile.json", "compile", "P(1)", "--emit", "json",
                       "--depth", "2", "--width", "1")
    assert payload["elements"] == [[0, 0], [1, 0]]
    payload = run_json(capsys, "compile.json", "compile", "FIN", "--emit", "dot")
    assert payload["dot"].startswith("digraph")


def test_classify_verbs(capsys):
    code, out = run(capsys, "classify", "full")
    assert code == 0 and out.startswith("NON-BOREL")
    payload = run_json(capsys, "classify.json", "classify", "full")
    assert payload["verdict"] == "non-borel"
    payload = run_json(capsys, "classify.json", "classify",
                       "spine([];const(fan([];const(eps))))", "--via", "derivative")
    assert payload == {"verdict": "borel",
                       "form": {"kind": "Q", "rank": "1", "printed": "Q(1)"}}


def test_treerank(capsys):
    code, out = run(capsys, "treerank", "fan([];const(chain))")
    assert code == 0 and out.strip() == "rank 2, core empty"
    payload = run_json(capsys, "treerank.json", "treerank", "fan([];qdiag(w))")
    assert payload == {"rank": "w+1", "coreEmpty": True}


def test_member_and_witness_verbs(capsys):
    code, out = run(capsys, "member", "fan([chain];const(empty))", "in", "P(1)")
    assert code == 0 and out.startswith("not a member")
    payload = run_json(capsys, "member.json", "member",
                       "fan([chain];const(empty))", "in", "P(1)", "--perp")
    assert payload["member"] is True
    payload = run_json(capsys, "witness.json", "frechet",
                       "fan([];const(chain))", "in", "P(1)")
    assert payload["kind"] == "frechet-subset"
    payload = run_json(capsys, "witness.json", "idwitness", "spine([];const(chain))")
    assert payload["kind"] == "dominating-branch"
    assert payload["data"] == {"prefix": [], "period": [1]}
    payload = run_json(capsys, "witness.json", "idwitness", "fan([];const(eps))")
    assert payload["kind"] == "unbounded-family"


def test_enumerate(capsys):
    code, out = run(capsys, "enumerate", "chain", "--budget", "3,3,10")
    assert code == 0 and out.split() == ["<0>", "<0,0>", "<0,0,0>"]
    run_json(capsys, "enumerate.json", "enumerate",
             "transversal(fan([];const(chain)))", "--budget", "4,4,10")


def test_wo_verbs(capsys):
    code, out = run(capsys, "wo", "classify", "cat(N,rev(N))")
    assert code == 0 and out.strip() == "scattered, PQ(0)"
    payload = run_json(capsys, "wo_classify.json", "wo", "classify", "QQ")
    assert payload["scattered"] is False
    payload = run_json(capsys, "wo_reverse.json", "wo", "reverse", "osum([];rev(N))")
    assert payload["classification"]["form"]["printed"] == "Q(1)"
    payload = run_json(capsys, "wo_rationalize.json", "wo", "rationalize",
                       "cat(N,rev(N))", "--count", "4")
    assert payload["rationals"] == ["-1", "1", "-1/2", "1/2"]


def test_selftest(capsys):
    payload = run_json(capsys, "selftest.json", "selftest", "--seed", "5", "--trials", "2")
    assert payload["allPass"] is True


def test_exit_codes(capsys):
    assert run(capsys, "normalize", "omega(")[0] == 1
    assert run(capsys, "normalize", "limsum(3)")[0] == 2
    assert run(capsys, "classify", "eps")[0] == 2
    assert run(capsys, "member", "finset{<1,1>}", "in", "FIN")[0] == 2
    assert run(capsys, "member", "chain", "inn", "FIN")[0] == 1
    assert run(capsys, "treerank", "fan([;const(eps))")[0] == 1
