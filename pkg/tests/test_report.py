import pytest

from qmsw.connect import RegionVariant
from qmsw.report import Case, SweepConfig, VerificationReport, digest, parse_range
from qmsw.sums import Reading
from qmsw.suites import SUITES, consecutive_pairs, run_suite


def test_range_syntax():
    assert parse_range("2..5") == [2, 3, 4, 5]
    assert parse_range("3") == [3]
    assert parse_range("1,4,6") == [1, 4, 6]
    for bad in ("5..2", "a..b", "x"):
        with pytest.raises(ValueError):
            parse_range(bad)


def test_digest_ignores_key_order():
    assert digest({"a": 1, "b": [1, 2]}) == digest({"b": [1, 2], "a": 1})


def test_passed_cases_keep_only_digests():
    c = Case.make({"k": [1]}, {"num": []}, {"num": []}, True)
    assert set(c.lhs) == {"sha256"}
    bad = Case.make({"k": [1]}, {"num": [1]}, {"num": [2]}, False, {"why": "x"})
    assert bad.lhs == {"num": [1]} and bad.detail == {"why": "x"}


def test_config_validation_and_round_trip():
    cfg = SweepConfig(max_weight=2, uppers=[1, 2], readings=["first-plain"], variants=["shifted"])
    assert cfg.readings == [Reading.FIRST_PLAIN]
    assert cfg.variants == [RegionVariant.SHIFTED]
    again = SweepConfig.from_json(cfg.to_json())
    assert again.to_json() == cfg.to_json()
    assert SweepConfig.from_json({"uppers": "1..3"}).uppers == [1, 2, 3]
    with pytest.raises(ValueError):
        SweepConfig.from_json({"bogus": 1})
    with pytest.raises(ValueError):
        SweepConfig(evaluators=["fast"])
    with pytest.raises(ValueError):
        SweepConfig(uppers=[0])


def test_consecutive_pairs_are_consecutive():
    from qmsw.combinat import is_consecutive

    pairs = consecutive_pairs(3)
    assert all(is_consecutive(J, Jp) for J, Jp in pairs)
    assert len(pairs) == len(set(pairs))


@pytest.mark.parametrize("name", sorted(SUITES))
def test_every_suite_runs_on_a_tiny_grid(name):
    cfg = SweepConfig(max_weight=2, uppers=[2, 3], levels=[2, 3], max_cells=2, max_span=2)
    report = run_suite(name, cfg)
    assert report.summary["total"] > 0
    assert report.ok, [c.to_json() for c in report.cases if not c.equal][:3]
    again = VerificationReport.loads(report.dumps())
    assert again.to_json() == report.to_json()


def test_report_summary_is_validated_on_load():
    report = run_suite("msw-q", SweepConfig(max_weight=1, uppers=[2]))
    obj = report.to_json()
    obj["summary"]["failed"] = 7
    with pytest.raises(ValueError):
        VerificationReport.from_json(obj)


def test_resolution_names_a_single_winner():
    report = run_suite("transport-linear", SweepConfig(max_weight=3, uppers=[1, 2, 3]))
    rv = report.resolved_variants
    assert rv["linear_region"] == "shifted"
    assert rv["linear_regions_passing"] == ["shifted"]
    assert rv["linear_region_failures"]["printed"] > 0


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("nope", SweepConfig())
