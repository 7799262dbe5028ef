"""Worked-example corpus: every fixture replays green against its recorded
values, and the runner reports results in a stable shape."""

import pytest

from liftcheck.corpus import CORPUS, corpus_names, run_all, run_fixture

_EXPECTED_NAMES = [
    "hochster-grothendieck",
    "hochster-prime-dim11",
    "jorgensen",
    "group-ring-p3",
    "group-ring-p5",
    "group-ring-p7",
    "group-ring-presentation",
    "quadric-locus",
    "cm1-curve",
    "betti-additivity",
    "shamash-periodic",
    "gor0-family",
]


def test_registry_names_and_order():
    assert corpus_names() == _EXPECTED_NAMES
    assert set(CORPUS) == set(_EXPECTED_NAMES)


def test_fixtures_carry_references():
    for fx in CORPUS.values():
        assert fx.reference
        assert fx.name in _EXPECTED_NAMES


def test_run_fixture_shape():
    res = run_fixture("group-ring-p3")
    assert set(res) == {"name", "reference", "checks", "ok"}
    assert res["name"] == "group-ring-p3"
    assert res["checks"]
    for check in res["checks"]:
        assert set(check) == {"name", "expected", "got", "ok"}
        assert check["ok"] == (check["expected"] == check["got"])


def test_run_fixture_unknown_name():
    with pytest.raises(KeyError, match="unknown corpus fixture 'nope'"):
        run_fixture("nope")


def test_whole_corpus_replays_green():
    results = run_all()
    assert [r["name"] for r in results] == _EXPECTED_NAMES
    failing = [
        (r["name"], c["name"])
        for r in results
        for c in r["checks"]
        if not c["ok"]
    ]
    assert failing == []
    assert all(r["ok"] for r in results)
