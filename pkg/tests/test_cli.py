import json

import pytest

from penkite.cli import main


def _run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr().out
    return rc, out


def test_generate_verify_render(tmp_path, capsys):
    patch = tmp_path / "p.jsonl"
    rc, out = _run(capsys, "tile", "generate", "--seed", "delta-plus-0", "--steps", "5", "--out", str(patch))
    payload = json.loads(out)
    assert rc == 0 and next(iter(payload)) == "status" and payload["status"] == "pass"
    assert payload["half_tiles"] == len(patch.read_text().splitlines())
    assert patch.with_suffix(".png").stat().st_size > 0

    report = tmp_path / "r.json"
    rc, out = _run(capsys, "tile", "verify", str(patch), "--out", str(report))
    assert rc == 0 and json.loads(out)["report"]["violations"] == []
    assert json.loads(report.read_text())["report"]["tiles"] == payload["half_tiles"]

    svgs = []
    for name in ("a.svg", "b.svg"):
        rc, _ = _run(capsys, "tile", "render", str(patch), "--out", str(tmp_path / name), "--no-figure")
        assert rc == 0
        svgs.append((tmp_path / name).read_bytes())
    assert svgs[0] == svgs[1] and svgs[0].startswith(b"<")
    assert not (tmp_path / "a.png").exists()


def test_verify_reports_violation(tmp_path, capsys):
    patch = tmp_path / "bad.jsonl"
    tile = {"kind": "HalfKiteL", "vertices": [[0, 0, 0, 0, 0], [1, 0, 0, 0, 0], [1, -1, 0, 0, 0]], "level": 0}
    patch.write_text(json.dumps(tile) + "\n")
    rc, out = _run(capsys, "tile", "verify", str(patch))
    payload = json.loads(out)
    assert rc == 1 and payload["status"] == "fail"
    assert payload["report"]["violations"]


def test_delzant_verify(capsys, tmp_path):
    rc, out = _run(capsys, "delzant", "verify", "--pair", "12-34", "--samples", "300", "--out", str(tmp_path / "d.json"))
    payload = json.loads(out)
    assert rc == 0, out
    names = {c["check"] for c in payload["report"]["checks"]}
    assert {"equivariance", "symplectic", "obstruction.generators_leave_deck_group"} <= names
    assert payload["lift"]["F"] == [[0, 0, 0, -1], [0, -1, -1, 0], [-1, 0, 0, 1], [0, -1, 0, 0]]


def test_delzant_report(capsys, tmp_path):
    rc, out = _run(capsys, "delzant", "report", "--kite", "2", "--sign", "-", "--samples", "200",
                   "--out", str(tmp_path / "k.json"))
    assert rc == 0
    payload = json.loads(out)
    assert set(payload["charts"]) == {"12", "23", "34", "41"}
    assert (tmp_path / "k.png").exists()


@pytest.mark.parametrize("argv", [
    ["tile", "generate", "--seed", "moon"],
    ["tile", "generate", "--steps", "-1"],
    ["delzant", "verify", "--pair", "12-99"],
    ["delzant", "report", "--kite", "7"],
    ["tile", "verify", "/nonexistent/patch.jsonl"],
    ["frobnicate"],
])
def test_usage_errors(argv, capsys):
    try:
        rc = main(argv)
    except SystemExit as exc:
        rc = exc.code
    assert rc == 2
