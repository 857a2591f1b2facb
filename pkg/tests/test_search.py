import json
from math import gcd

import pytest

from iepoly.errors import InvalidParameters, PersistenceError
from iepoly.search import (
    MANIFEST_SUFFIX,
    SearchTask,
    enumerate_coprime_pairs,
    enumerate_coprime_triples,
    find_bound_attained_pairs,
    find_sharp_step_pairs,
    read_results,
    sweep_heights,
)

RANGES = ((3, 9), (3, 9), (3, 9))


def test_enumeration_matches_brute():
    got = [t.as_tuple() for t in enumerate_coprime_triples(RANGES)]
    brute = [
        (p, q, r)
        for p in range(3, 10)
        for q in range(p + 1, 10)
        for r in range(q + 1, 10)
        if gcd(p, q) == gcd(p, r) == gcd(q, r) == 1
    ]
    assert got == brute
    assert got == sorted(got)  # lexicographic


def test_enumeration_excludes_shared_factors():
    for t in enumerate_coprime_triples(((3, 12), (3, 12), (3, 12))):
        p, q, r = t.as_tuple()
        assert gcd(p, q) == gcd(q, r) == gcd(p, r) == 1


def test_pair_enumeration_coprime_to():
    pairs = list(enumerate_coprime_pairs(10, 10, coprime_to=2))
    assert all(p % 2 and q % 2 for p, q in pairs)


class TestTaskValidation:
    def test_bad_kind(self):
        with pytest.raises(InvalidParameters):
            SearchTask("no-such", RANGES)

    def test_missing_s(self):
        with pytest.raises(InvalidParameters):
            SearchTask("bound-attained", ((3, 5), (3, 9)))

    def test_wrong_arity(self):
        with pytest.raises(InvalidParameters):
            SearchTask("height-sweep", ((3, 5), (3, 9)))

    def test_empty_range(self):
        with pytest.raises(InvalidParameters):
            SearchTask("height-sweep", ((5, 3), (3, 9), (3, 9)))


def test_sweep_and_readback(tmp_path):
    out = str(tmp_path / "run.jsonl")
    task = SearchTask("height-sweep", RANGES)
    summary = sweep_heights(task, out)
    records = read_results(out)
    assert summary.total == summary.written == len(records)
    assert [tuple(r["key"]) for r in records] == [
        t.as_tuple() for t in enumerate_coprime_triples(RANGES)
    ]
    # spot re-validation: persisted stats match a fresh computation
    from iepoly.height import height
    from iepoly.represent import Triple

    probe = records[len(records) // 2]
    fresh = height(Triple(*probe["key"])).to_dict()
    assert {k: probe[k] for k in fresh} == fresh


def test_rerun_and_workers_byte_identical(tmp_path):
    task = SearchTask("height-sweep", RANGES)
    a, b = str(tmp_path / "a.jsonl"), str(tmp_path / "b.jsonl")
    sweep_heights(task, a, workers=1)
    sweep_heights(task, b, workers=3)
    assert open(a, "rb").read() == open(b, "rb").read()


def test_resume_after_partial_line(tmp_path):
    task = SearchTask("height-sweep", RANGES)
    ref = str(tmp_path / "ref.jsonl")
    sweep_heights(task, ref)
    blob = open(ref, "rb").read()

    cut = str(tmp_path / "cut.jsonl")
    with open(cut, "wb") as fh:
        fh.write(blob[: len(blob) // 2])  # ends mid-line
    resumed = SearchTask("height-sweep", RANGES, resume_from=cut)
    summary = sweep_heights(resumed, cut)
    assert summary.skipped > 0
    assert open(cut, "rb").read() == blob


def test_resume_rejects_foreign_file(tmp_path):
    out = str(tmp_path / "x.jsonl")
    with open(out, "w") as fh:
        fh.write(json.dumps({"task": "height-sweep", "key": [99, 100, 101]}) + "\n")
    task = SearchTask("height-sweep", RANGES, resume_from=out)
    with pytest.raises(PersistenceError):
        sweep_heights(task, out)


def test_manifest_written_deterministically(tmp_path):
    out = str(tmp_path / "m.jsonl")
    task = SearchTask("flat-hunt", ((3, 5), (3, 7), (3, 150)))
    sweep_heights(task, out)
    first = open(out + MANIFEST_SUFFIX).read()
    sweep_heights(task, out)
    assert open(out + MANIFEST_SUFFIX).read() == first
    manifest = json.loads(first)
    assert manifest["task"]["kind"] == "flat-hunt"
    assert "timestamp" not in first


def test_flat_hunt_all_flat(tmp_path):
    out = str(tmp_path / "f.jsonl")
    sweep_heights(SearchTask("flat-hunt", ((3, 9), (3, 9), (3, 400))), out)
    records = read_results(out)
    assert records, "hunt found nothing"
    for rec in records:
        p, q, r = rec["key"]
        assert r % (p * q) in (1, p * q - 1)
        assert rec["flat"] is True


def test_error_records_not_fatal(tmp_path, monkeypatch):
    monkeypatch.setenv("IEPOLY_DEGREE_CAP", "500")
    out = str(tmp_path / "err.jsonl")
    summary = sweep_heights(SearchTask("height-sweep", ((3, 5), (3, 7), (3, 60))), out)
    records = read_results(out)
    assert summary.errors > 0
    errs = [r for r in records if "error" in r]
    assert errs and all(r["error"] == "DegreeCapExceeded" for r in errs)
    assert any("error" not in r for r in records)  # small keys still computed


def test_bound_attained_kinds(tmp_path):
    out = str(tmp_path / "ba.jsonl")
    task = SearchTask("bound-attained", ((3, 10), (3, 10)), s=2)
    summary = sweep_heights(task, out)
    assert (3, 5) in summary.solutions
    # record fields are self-describing
    rec = read_results(out)[0]
    assert rec["r"] == rec["key"][0] * rec["key"][1] + 2


def test_find_bound_attained():
    res = find_bound_attained_pairs(1, 10)
    assert len(res["pairs"]) == res["checked"] > 0  # every pair solves at offset 1
    res2 = find_bound_attained_pairs(2, 10)
    assert (3, 5) in res2["pairs"]


def test_find_sharp_step():
    res = find_sharp_step_pairs(3, 20)
    assert res["target"] == 3
    assert res["conditional"] is False
    assert (7, 16) in res["pairs"]
    res1 = find_sharp_step_pairs(1, 8)
    assert res1["target"] == 1
    assert res1["pairs"] == [list(p) if isinstance(p, list) else p for p in res1["pairs"]]
    assert len(res1["pairs"]) == res1["checked"]  # flatness: every pair steps to 1


def test_solution_lists_grow_monotonically():
    small = find_bound_attained_pairs(2, 8)["pairs"]
    large = find_bound_attained_pairs(2, 12)["pairs"]
    assert set(small) <= set(large)
