import json

import pytest

from lexcount.cli import main


@pytest.fixture
def run(capsys):
    def _run(*argv):
        code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out.rstrip("\n"), captured.err
    return _run


class TestCount:
    def test_formula_route(self, run):
        code, out, _ = run("count", "--poset", "EN:4x3", "--avoid", "1243")
        assert code == 0
        assert out == "55\nroute: Cor4.6"

    def test_transfer_route(self, run):
        code, out, _ = run("count", "--poset", "EN:5x4", "--avoid", "2143",
                           "--route", "transfer")
        assert code == 0
        assert out.splitlines()[0] == "9841"

    def test_no_patterns_uses_dp(self, run):
        code, out, _ = run("count", "--poset", "EN:6x6",
                           "--route", "ideal-dp")
        assert code == 0
        value, route = out.splitlines()
        assert int(value) > 10 ** 9
        assert route == "route: ideal-dp"

    def test_json_schema(self, run):
        code, out, _ = run("count", "--poset", "EN:4x3", "--avoid", "1243",
                           "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload == {"value": 55, "route": "Cor4.6",
                           "poset": "EN:4x3", "patterns": ["1243"]}

    def test_csv(self, run):
        code, out, _ = run("count", "--poset", "NE:2x3", "--avoid", "213",
                           "--format", "csv")
        assert code == 0
        assert out == "value,route\n3,Thm3.5"

    def test_augmented_poset(self, run):
        code, out, _ = run("count", "--poset", "EN:4x3+saw")
        assert code == 0
        assert out.splitlines()[0] == "55"

    def test_size_guard(self, run):
        code, out, err = run("count", "--poset", "EN:6x6", "--avoid", "12345",
                             "--route", "oracle")
        assert code == 1
        assert "force" in err

    def test_bad_poset_spec(self, run):
        code, _, err = run("count", "--poset", "EN:4y3")
        assert code == 1
        assert "error" in err

    def test_bad_pattern(self, run):
        code, _, err = run("count", "--poset", "EN:2x2", "--avoid", "122")
        assert code == 1

    def test_routes_cross_checked(self, run):
        # several routes fire here; agreement means exit 0
        code, out, _ = run("count", "--poset", "EN:3x3", "--avoid", "2143")
        assert code == 0
        assert out.splitlines()[0] == "21"


class TestList:
    def test_plain(self, run):
        code, out, _ = run("list", "--poset", "EN:2x2", "--avoid", "123")
        assert code == 0
        assert out.splitlines() == ["3142", "3412"]

    def test_json(self, run):
        code, out, _ = run("list", "--poset", "EN:2x2", "--format", "json")
        payload = json.loads(out)
        assert payload["extensions"] == ["3142", "3412"]

    def test_guard(self, run):
        code, _, err = run("list", "--poset", "EN:6x6")
        assert code == 1
        assert "force" in err


class TestTable:
    def test_json_rows(self, run):
        code, out, _ = run("table", "--family", "NE", "--avoid", "123",
                           "--max-s", "4", "--max-t", "4", "--format", "json")
        assert code == 0
        rows = json.loads(out)["rows"]
        assert rows[3][3] == 4146
        assert rows[0] == [1, 1, 1, 1]

    def test_csv(self, run):
        code, out, _ = run("table", "--family", "EN", "--avoid", "2143",
                           "--max-s", "3", "--max-t", "3", "--format", "csv")
        lines = out.splitlines()
        assert lines[0] == "s/t,1,2,3"
        assert lines[3] == "3,1,4,21"

    def test_plain_alignment(self, run):
        code, out, _ = run("table", "--family", "EN", "--max-s", "2",
                           "--max-t", "3")
        lines = out.splitlines()
        assert lines[0].split() == ["s/t", "1", "2", "3"]
        assert lines[2].split() == ["2", "1", "2", "5"]

    def test_unavailable_cells_dashed(self, run):
        # cells too big for the oracle with no formula fall back to "-"
        code, out, _ = run("table", "--family", "NE", "--avoid", "123",
                           "--max-s", "3", "--max-t", "9", "--format", "csv")
        assert code == 0
        assert out.splitlines()[3].endswith(",-")


class TestQpoly:
    def test_plain(self, run):
        code, out, _ = run("qpoly", "--poset", "EN:2x2", "--avoid", "123")
        assert code == 0
        assert out == "q^3 + q^4"

    def test_json(self, run):
        code, out, _ = run("qpoly", "--poset", "EN:2x2", "--avoid", "123",
                           "--format", "json")
        payload = json.loads(out)
        assert payload["coeffs"] == [0, 0, 0, 1, 1]
        assert payload["stat"] == "inv"

    def test_csv_skips_zero_coefficients(self, run):
        code, out, _ = run("qpoly", "--poset", "EN:2x2", "--avoid", "123",
                           "--format", "csv")
        assert out.splitlines() == ["power,coefficient", "3,1", "4,1"]

    def test_maj(self, run):
        code, out, _ = run("qpoly", "--poset", "NE:2x2", "--avoid", "123",
                           "--stat", "maj")
        assert code == 0


class TestBijection:
    def test_fcpath_forward(self, run):
        code, out, _ = run("bijection", "--poset", "EN:4x3+saw",
                           "--kind", "fcpath",
                           "--perm", "10,11,7,12,8,9,4,5,1,6,2,3")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "NNNENENNNENE"
        assert lines[1].startswith("extension descents:")
        assert lines[2].startswith("path descents:")

    def test_fcpath_inverse(self, run):
        code, out, _ = run("bijection", "--poset", "EN:4x3+saw",
                           "--kind", "fcpath", "--word", "NNNENENNNENE")
        assert code == 0
        assert out == "10,11,7,12,8,9,4,5,1,6,2,3"

    def test_tableau_roundtrip(self, run):
        code, out, _ = run("bijection", "--poset", "EN:2x2",
                           "--kind", "tableau", "--perm", "3142",
                           "--format", "json")
        rows = json.loads(out)["tableau"]
        code2, out2, _ = run("bijection", "--poset", "EN:2x2",
                             "--kind", "tableau", "--word", json.dumps(rows))
        assert code2 == 0
        assert out2 == "3142"

    def test_zipper(self, run):
        code, out, _ = run("bijection", "--poset", "EN:2x2+zip",
                           "--kind", "zipper", "--perm", "3142")
        assert code == 0
        assert out == "N1 N2 N1 N2"
        code2, out2, _ = run("bijection", "--poset", "EN:2x2+zip",
                             "--kind", "zipper", "--word", "N1 N2 N1 N2")
        assert out2 == "3142"

    def test_requires_exactly_one_input(self, run):
        code, _, err = run("bijection", "--poset", "EN:2x2",
                           "--kind", "tableau")
        assert code == 1
        code, _, err = run("bijection", "--poset", "EN:2x2",
                           "--kind", "zipper", "--perm", "3142",
                           "--word", "N1 N2")
        assert code == 1

    def test_invalid_domain(self, run):
        code, _, err = run("bijection", "--poset", "EN:2x2",
                           "--kind", "tableau", "--perm", "1234")
        assert code == 1


class TestCharpoly:
    def test_plain(self, run):
        assert run("charpoly", "--t", "3")[1] == "1 - 4x - x^2"
        assert run("charpoly", "--t", "4")[1] == "1 - 8x - 9x^2"

    def test_json(self, run):
        code, out, _ = run("charpoly", "--t", "3", "--format", "json")
        assert json.loads(out) == {"coeffs": [1, -4, -1], "t": 3}


class TestVerify:
    def test_theorems_fast(self, run):
        code, out, _ = run("verify", "--suite", "theorems", "--fast")
        assert code == 0
        assert all(line.startswith("[ok  ]") for line in out.splitlines())

    def test_conjectures_report_failures(self, run):
        code, out, _ = run("verify", "--suite", "conjectures", "--fast")
        assert code == 2
        assert any(line.startswith("[FAIL]") for line in out.splitlines())
        assert any(line.startswith("[info]") for line in out.splitlines())

    def test_json(self, run):
        code, out, _ = run("verify", "--suite", "theorems", "--fast",
                           "--format", "json")
        payload = json.loads(out)
        assert payload["suite"] == "theorems"
        assert all(c["status"] == "pass" for c in payload["checks"])


class TestCache:
    def test_cache_hit_is_byte_identical(self, run, tmp_path):
        argv = ("count", "--poset", "EN:4x3", "--avoid", "1243")
        code1, out1, _ = run("--cache-dir", str(tmp_path), *argv)
        files = list(tmp_path.iterdir())
        assert len(files) == 1
        code2, out2, _ = run("--cache-dir", str(tmp_path), *argv)
        assert (code1, out1) == (code2, out2) == (0, "55\nroute: Cor4.6")

    def test_env_var(self, run, tmp_path, monkeypatch):
        monkeypatch.setenv("LEXCOUNT_CACHE_DIR", str(tmp_path))
        run("count", "--poset", "EN:2x2")
        assert list(tmp_path.iterdir())

    def test_errors_not_cached(self, run, tmp_path):
        run("--cache-dir", str(tmp_path), "count", "--poset", "EN:9x9",
            "--avoid", "12345", "--route", "oracle")
        assert not list(tmp_path.iterdir())

    def test_uncacheable_commands_skip_cache(self, run, tmp_path):
        run("--cache-dir", str(tmp_path), "charpoly", "--t", "3")
        assert not list(tmp_path.iterdir())


class TestUsage:
    def test_missing_subcommand(self, capsys):
        assert main([]) == 1
        capsys.readouterr()

    def test_help_exits_zero(self, capsys):
        assert main(["--help"]) == 0
        assert "count" in capsys.readouterr().out
