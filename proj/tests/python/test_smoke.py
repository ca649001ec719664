import json
import os
import sys

module_dir = os.environ.get("HKA_MODULE_DIR")
if module_dir:
    sys.path.insert(0, module_dir)

import _hka as hka  # noqa: E402

FIXTURES = os.environ.get(
    "HKA_FIXTURES_DIR",
    os.path.join(os.path.dirname(__file__), "..", "..", "fixtures"),
)


def read_fixture(name):
    with open(os.path.join(FIXTURES, name)) as f:
        return f.read()


def test_validate():
    assert hka.validate_spec(read_fixture("kite.json"))


def test_laws_pass_and_mutant_fails():
    reports = json.loads(hka.check_laws_kpg(read_fixture("kite.json"),
                                            max_len=4, max_tiles=3, budget=40))
    assert all(not r["failures"] for r in reports)

    mutated = json.loads(hka.check_laws_rel(carrier=2, mutant="star-no-unit"))
    assert any(r["failures"] for r in mutated)


def test_analyze_kite():
    summary = json.loads(hka.analyze(read_fixture("kite.json")))
    assert summary["terminating"]
    assert summary["newman"]["conclusion"]["holds"]


def test_pave_and_missing_filler():
    cert = json.loads(hka.pave(read_fixture("kite.json"), "f-.g"))
    assert [t["gen"] for t in cert["tiles"]] == ["jn_f_g"]

    try:
        hka.pave(read_fixture("kite_bare.json"), "f-.g")
    except hka.MissingFillerError:
        pass
    else:
        raise AssertionError("expected MissingFillerError")


def test_dot():
    dot = hka.spec_dot(read_fixture("kite.json"))
    assert '"a" -> "b" [label="f"]' in dot
