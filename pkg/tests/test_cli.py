import json
import math
import re

from qshape.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def bar_fills(svg_text):
    return re.findall(r'<rect class="bar"[^>]*fill="([^"]+)"', svg_text)


def bar_heights(svg_text):
    return [
        float(h) for h in re.findall(r'<rect class="bar"[^>]*height="([^"]+)"', svg_text)
    ]


class TestQbinom:
    def test_coeff_lines(self, capsys):
        code, out = run(capsys, "qbinom", "--n", "2", "--k", "2")
        assert code == 0
        assert out == "1\n1\n2\n1\n1\n"

    def test_empty_box(self, capsys):
        code, out = run(capsys, "qbinom", "--n", "0", "--k", "5")
        assert code == 0
        assert out == "1\n"

    def test_negative_n_is_usage_error(self, capsys):
        code = main(["qbinom", "--n", "-1", "--k", "2"])
        capsys.readouterr()
        assert code == 2

    def test_csv_roundtrip_sums_to_binomial(self, capsys):
        code, out = run(capsys, "qbinom", "--n", "7", "--k", "4", "--format", "csv")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "index,coefficient"
        total = sum(int(line.split(",")[1]) for line in lines[1:])
        assert total == math.comb(11, 4)
        assert [int(line.split(",")[0]) for line in lines[1:]] == list(range(29))

    def test_json(self, capsys):
        code, out = run(capsys, "qbinom", "--n", "2", "--k", "2", "--format", "json")
        doc = json.loads(out)
        assert doc["degree"] == 4
        assert doc["coefficients"] == [1, 1, 2, 1, 1]


class TestRegions:
    def test_k4_report_mentions_table_row(self, capsys):
        code, out = run(capsys, "regions", "--n", "50", "--k", "4")
        assert code == 0
        assert out.count("region ") == 4
        assert "period 12, degree 3" in out
        assert "m = 0 (mod 12): 1/144 m^3 + 5/48 m^2 + 1/2 m + 1" in out
        assert out.count("transition zone") == 3

    def test_k1_single_region(self, capsys):
        code, out = run(capsys, "regions", "--n", "50", "--k", "1")
        assert code == 0
        assert "region 0: interval [0, 50]" in out
        assert "m = 0 (mod 1): 1" in out
        assert "transition zone" not in out

    def test_n_too_small_is_usage_error(self, capsys):
        code = main(["regions", "--n", "5", "--k", "4"])
        capsys.readouterr()
        assert code == 2

    def test_zone_values_are_true_coefficients(self, capsys):
        from qshape.qcore import q_binomial_box

        code, out = run(capsys, "regions", "--n", "50", "--k", "4")
        truth = q_binomial_box(50, 4)
        line = next(l for l in out.splitlines() if l.startswith("transition zone [51, 53]"))
        values = [int(v) for v in line.split(":")[1].split()]
        assert values == [truth.coefficient(m) for m in (51, 52, 53)]

    def test_json_structure(self, capsys):
        code, out = run(capsys, "regions", "--n", "40", "--k", "3", "--format", "json")
        doc = json.loads(out)
        assert [r["index"] for r in doc["regions"]] == [0, 1, 2]
        assert all(r["period"] == 6 for r in doc["regions"])
        assert len(doc["transition_zones"]) == 2


class TestShape:
    def test_exact_k3(self, capsys):
        code, out = run(capsys, "shape", "--k", "3", "--exact")
        assert code == 0
        assert "piece 0 on [0, 1/3]: 27/2 x^2" in out
        assert "piece 1 on [1/3, 2/3]: -27 x^2 + 27 x - 9/2" in out
        assert "piece 2 on [2/3, 1]: 27/2 x^2 - 27 x + 27/2" in out

    def test_exact_k2(self, capsys):
        code, out = run(capsys, "shape", "--k", "2", "--exact")
        assert "piece 0 on [0, 1/2]: 4 x" in out
        assert "piece 1 on [1/2, 1]: -4 x + 4" in out

    def test_sampled_k1(self, capsys):
        code, out = run(capsys, "shape", "--k", "1", "--samples", "3")
        assert out == "x,value\n0,1\n1/2,1\n1,1\n"


class TestConverge:
    def test_strictly_decreasing(self, capsys):
        code, out = run(capsys, "converge", "--k", "3", "--n-list", "5,20,50")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "n,ks"
        ks = [float(line.split(",")[1]) for line in lines[1:]]
        assert ks[0] > ks[1] > ks[2]

    def test_k1_bound(self, capsys):
        code, out = run(capsys, "converge", "--k", "1", "--n-list", "10")
        ks = float(out.splitlines()[1].split(",")[1])
        assert ks <= 0.1

    def test_empty_list_is_usage_error(self, capsys):
        code = main(["converge", "--k", "3", "--n-list", ""])
        capsys.readouterr()
        assert code == 2


class TestPlot:
    def test_plain_bars(self, tmp_path, capsys):
        out_file = tmp_path / "p.svg"
        assert main(["plot", "--n", "2", "--k", "2", "--out", str(out_file)]) == 0
        svg = out_file.read_text()
        heights = bar_heights(svg)
        assert len(heights) == 5
        top = max(heights)
        assert [h / top for h in heights] == [0.5, 0.5, 1.0, 0.5, 0.5]

    def test_max_bar_is_exact_height(self, tmp_path):
        out_file = tmp_path / "p.svg"
        main(["plot", "--n", "12", "--k", "3", "--height", "240", "--out", str(out_file)])
        assert max(bar_heights(out_file.read_text())) == 240.0

    def test_first_last_equal(self, tmp_path):
        out_file = tmp_path / "p.svg"
        main(["plot", "--n", "10", "--k", "4", "--out", str(out_file)])
        heights = bar_heights(out_file.read_text())
        assert heights[0] == heights[-1]

    def test_byte_identical_reruns(self, tmp_path):
        a, b = tmp_path / "a.svg", tmp_path / "b.svg"
        for target in (a, b):
            main(["plot", "--n", "20", "--k", "3", "--overlay", "--out", str(target)])
        assert a.read_bytes() == b.read_bytes()

    def test_color_regions_bands(self, tmp_path):
        out_file = tmp_path / "c.svg"
        main(["plot", "--n", "50", "--k", "4", "--color-regions", "--out", str(out_file)])
        fills = bar_fills(out_file.read_text())
        assert len(fills) == 201
        runs = [fills[0]]
        for fill in fills[1:]:
            if fill != runs[-1]:
                runs.append(fill)
        assert runs == ["red", "black", "yellow", "black", "green", "black", "blue"]

    def test_overlay_polyline_present(self, tmp_path):
        out_file = tmp_path / "p.svg"
        main(["plot", "--n", "20", "--k", "3", "--overlay", "--out", str(out_file)])
        assert "<polyline points=" in out_file.read_text()

    def test_demo_two_branches(self, tmp_path):
        out_file = tmp_path / "d.svg"
        assert main(["plot", "--demo", "--out", str(out_file)]) == 0
        heights = bar_heights(out_file.read_text())
        assert len(heights) == 41
        # even branch 10m dominates early, odd branch (m^2-m)/2 catches up late
        assert heights[10] > heights[9]
        assert heights[39] > heights[38]

    def test_plot_without_n_k_or_demo_is_usage_error(self, tmp_path, capsys):
        code = main(["plot", "--out", str(tmp_path / "x.svg")])
        capsys.readouterr()
        assert code == 2


class TestParser:
    def test_unknown_command(self, capsys):
        code = main(["frobnicate"])
        capsys.readouterr()
        assert code == 2

    def test_help_exits_zero(self, capsys):
        code = main(["--help"])
        capsys.readouterr()
        assert code == 0
