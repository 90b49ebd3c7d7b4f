"""SVG rendering determinism and the command-line surface."""

import io
import json
import math

from squarenodal import nodal_topology, render
from squarenodal.cli import parse_theta, run_cli

PI = math.pi


def run(argv):
    buf = io.StringIO()
    code = run_cli(argv, out=buf)
    return code, buf.getvalue()


def test_parse_theta():
    assert parse_theta("0.25pi") == PI / 4
    assert parse_theta("0.7853981633974483") == PI / 4
    assert parse_theta("pi") == 0.0
    assert parse_theta("1.25pi") == PI / 4


def test_svg_deterministic_and_structured():
    summary = nodal_topology.nodal_summary(1, 4, PI / 4, resolution=128)
    grid = nodal_topology.build_grid(1, 4, PI / 4, summary.resolution)
    spec = render.RenderSpec()
    doc1 = render.render_nodal_svg(summary, grid, spec)
    doc2 = render.render_nodal_svg(summary, grid, spec)
    assert doc1 == doc2
    assert doc1.startswith("<svg")
    assert doc1.count("<line") > 100
    assert doc1.count("<circle") >= 9  # lattice dots at least
    flipped = render.render_nodal_svg(summary, grid, render.RenderSpec(math_axes=True))
    assert flipped != doc1


def test_svg_rejects_mismatched_inputs():
    summary = nodal_topology.nodal_summary(1, 4, PI / 4, resolution=128)
    grid = nodal_topology.build_grid(1, 4, 0.3, 128)
    try:
        render.render_nodal_svg(summary, grid, render.RenderSpec())
    except ValueError:
        pass
    else:
        raise AssertionError("mismatched inputs must raise")


def test_marching_segments_cover_product_lines():
    grid = nodal_topology.build_grid(1, 3, 0.0, 96)
    segs = render.marching_segments(grid)
    ys = {round(0.5 * (s[1] + s[3]), 2) for s in segs}
    assert round(PI / 3, 2) in ys and round(2 * PI / 3, 2) in ys


def test_cli_spectrum_csv():
    code, out = run(["spectrum", "--max", "73"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "k,lambda,mult,modes"
    assert len(lines) == 51
    assert lines[1] == "1,2,1,1x1"
    assert lines[-1].startswith("50,73,2,3x8")


def test_cli_spectrum_json():
    code, out = run(["spectrum", "--max", "8", "--json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == 1
    assert [e["eigenvalue"] for e in payload["entries"]] == [2, 5, 5, 8]


def test_cli_special_theta_json():
    code, out = run(["special-theta", "--R", "8", "--json"])
    assert code == 0
    payload = json.loads(out)
    assert abs(payload["theta_minus_over_pi"] - 0.25) < 1e-12
    assert abs(payload["T_x_over_pi"][0] - 0.040363) < 1e-5
    assert len(payload["q_over_pi"]) == 6


def test_cli_nodal_json():
    code, out = run(["nodal", "--m", "1", "--n", "4", "--theta", "0.25pi", "--json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["domain_count"] == 4
    assert payload["closed_curve_count"] == 1


def test_cli_critical():
    code, out = run(["critical", "--m", "1", "--n", "8", "--theta", "0.25pi", "--json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["source"] == "analytic"
    interior = [z for z in payload["critical_zeroes"] if z["locus"] == "interior"]
    assert len(interior) == 6


def test_cli_sweep_csv_columns():
    code, out = run(["sweep", "--m", "1", "--n", "3", "--range", "0,0.5pi"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "theta_over_pi,domain_count,n_interior_cz,n_edge_cz,anomaly_flag"
    assert all(len(line.split(",")) == 5 for line in lines[1:])


def test_cli_usage_error():
    code, _ = run(["nodal", "--badflag"])
    assert code == 2
    code, _ = run(["nosuchcommand"])
    assert code == 2


def test_cli_verify_catalogs_suite():
    code, out = run(["verify", "--suite", "catalogs"])
    assert code == 0
    assert "PASS" in out


def test_cli_svg_atomic_write(tmp_path):
    target = tmp_path / "out.svg"
    args = [
        "nodal", "--m", "1", "--n", "3", "--theta", "0.25pi",
        "--grid", "96", "--svg", str(target),
    ]
    code, _ = run(args)
    assert code == 0
    first = target.read_bytes()
    code, _ = run(args)
    assert code == 0
    assert target.read_bytes() == first
    leftovers = [p for p in tmp_path.iterdir() if p.name.startswith(".tmp-")]
    assert not leftovers
