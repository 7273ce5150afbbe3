from __future__ import annotations

import json
from importlib import resources

import pytest

from softsets.cli import main
from softsets.io import (
    FIXTURE_NAMES,
    fixture_text,
    load_fixture,
    parse_document,
    parse_softset,
    serialize,
)


@pytest.fixture(scope="module")
def fixture_dir(tmp_path_factory):
    """Materialize the shipped fixtures as plain files for CLI calls."""
    root = tmp_path_factory.mktemp("fixtures")
    for name in FIXTURE_NAMES:
        (root / f"{name}.json").write_text(fixture_text(name), encoding="utf-8")
    return root


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestRoundTrip:
    def test_serialize_parse_identity_on_all_fixtures(self):
        for name in FIXTURE_NAMES:
            text = fixture_text(name)
            value = parse_softset(text)
            assert serialize(value) == text
            assert parse_softset(serialize(value)) == value

    def test_duplicate_keys_rejected(self):
        from softsets.core import ValidationError

        bad = '{"kind": "t1ss", "universe": ["x1"], "assignments": {"a": [], "a": []}}'
        with pytest.raises(ValidationError):
            parse_document(bad)

    def test_unknown_kind_rejected(self):
        from softsets.core import ValidationError

        with pytest.raises(ValidationError):
            parse_document('{"kind": "t3ss", "universe": []}')

    def test_worked_example_parses(self):
        f = load_fixture("houses_F")
        assert len(f.primary) == 2 and len(f.underlying) == 3


class TestCommands:
    def test_distance2_dp_prints_six(self, capsys, fixture_dir):
        code, out, _ = run(
            capsys, "distance2", "--measure", "Dp",
            str(fixture_dir / "houses_F.json"), str(fixture_dir / "houses_G.json"),
        )
        assert code == 0
        assert out.strip() == "6"

    def test_similarity_sm_prints_0167(self, capsys, fixture_dir):
        code, out, _ = run(
            capsys, "similarity", "--measure", "sm",
            str(fixture_dir / "houses_F.json"), str(fixture_dir / "houses_G.json"),
        )
        assert code == 0
        assert out.startswith("0.167")

    def test_entropy_value(self, capsys, fixture_dir):
        code, out, _ = run(capsys, "entropy", str(fixture_dir / "houses_F.json"))
        assert code == 0
        assert "7/17" in out

    def test_profile_rows(self, capsys, fixture_dir):
        code, out, _ = run(
            capsys, "profile",
            str(fixture_dir / "diet_ideal.json"), str(fixture_dir / "diet_pantry1.json"),
        )
        assert code == 0
        assert "breakfast: 0.222" in out
        assert "supper: 0.000" in out

    def test_decide_reproduces_selection(self, capsys, fixture_dir):
        code, out, _ = run(
            capsys, "decide", "--ideal", str(fixture_dir / "diet_ideal.json"),
            str(fixture_dir / "diet_pantry1.json"), str(fixture_dir / "diet_pantry2.json"),
        )
        assert code == 0
        assert "breakfast: winner=" in out and "pantry2" in out.splitlines()[0]

    def test_check_finds_seeded_counterexample(self, capsys):
        code, out, _ = run(
            capsys, "check", "--target", "e", "--max-universe", "5", "--max-primary", "3",
        )
        assert code == 2
        assert "M3" in out and "fails" in out

    def test_check_metric_exits_zero(self, capsys):
        code, out, _ = run(capsys, "check", "--target", "dm")
        assert code == 0
        assert "classification: metric" in out

    def test_check_random_mode(self, capsys):
        code, out, _ = run(
            capsys, "check", "--target", "Em", "--max-universe", "2",
            "--random", "300", "--seed", "5",
        )
        assert code == 2  # boundary witnesses exist even on samples


class TestExitCodes:
    def test_validation_error_is_one(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text('{"kind": "t3ss", "universe": ["x"]}')
        code, _, err = run(capsys, "entropy", str(bad))
        assert code == 1 and "error" in err

    def test_syntax_error_is_three(self, capsys, tmp_path):
        bad = tmp_path / "syn.json"
        bad.write_text("{nope")
        code, _, err = run(capsys, "entropy", str(bad))
        assert code == 3

    def test_missing_file_is_three(self, capsys, tmp_path):
        code, _, _ = run(capsys, "entropy", str(tmp_path / "absent.json"))
        assert code == 3

    def test_unknown_flag_is_one(self, capsys, fixture_dir):
        code, _, _ = run(capsys, "entropy", "--bogus", str(fixture_dir / "houses_F.json"))
        assert code == 1

    def test_arity_mismatch_is_one(self, capsys, fixture_dir):
        code, _, err = run(
            capsys, "distance", "--measure", "dp",
            str(fixture_dir / "houses_F.json"), str(fixture_dir / "houses_G.json"),
        )
        assert code == 1 and "expected a t1ss" in err


class TestDeterminism:
    def test_json_output_byte_identical(self, capsys, fixture_dir):
        args = (
            "--json", "decide", "--ideal", str(fixture_dir / "diet_ideal.json"),
            str(fixture_dir / "diet_pantry1.json"), str(fixture_dir / "diet_pantry2.json"),
        )
        _, out1, _ = run(capsys, *args)
        _, out2, _ = run(capsys, *args)
        assert out1 == out2
        payload = json.loads(out1)
        assert payload["tool"] == "softsets"
        assert set(payload["inputs"]) == {
            str(fixture_dir / "diet_ideal.json"),
            str(fixture_dir / "diet_pantry1.json"),
            str(fixture_dir / "diet_pantry2.json"),
        }

    def test_json_check_deterministic(self, capsys):
        args = ("--json", "check", "--target", "dp")
        _, out1, _ = run(capsys, *args)
        _, out2, _ = run(capsys, *args)
        assert out1 == out2
        payload = json.loads(out1)
        assert payload["result"]["classification"] == "pseudo-metric"

    def test_scalar_results_carry_exact_and_decimal(self, capsys, fixture_dir):
        _, out, _ = run(
            capsys, "--json", "similarity", "--measure", "sd:NDm",
            str(fixture_dir / "houses_F.json"), str(fixture_dir / "houses_G.json"),
        )
        value = json.loads(out)["result"]["value"]
        assert value == {"decimal": "0.915", "exact": "75/82"}
