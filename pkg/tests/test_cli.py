import io
import json
import subprocess
import sys

import numpy as np
import pytest

from quadmorph import osystem, qhm, serialize
from quadmorph.cli import run
from quadmorph.osystem import OSystem

from conftest import eight_dim_triple


@pytest.fixture()
def triple_doc(tmp_path):
    phi = qhm.verify_qhm(eight_dim_triple())
    path = tmp_path / "triple.json"
    path.write_text(serialize.dumps(serialize.encode(phi)))
    return str(path)


def write_doc(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(serialize.dumps(serialize.encode(obj)))
    return str(path)


class TestSigma:
    def test_text_line(self, capsys):
        assert run(["sigma", "16"]) == 0
        assert capsys.readouterr().out == "m=16 r=0 c=0 d=1 sigma=9\n"
        assert run(["sigma", "12"]) == 0
        assert capsys.readouterr().out == "m=12 r=1 c=2 d=0 sigma=4\n"

    def test_json_format(self, capsys):
        assert run(["sigma", "16", "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload == {"m": 16, "r": 0, "c": 0, "d": 1, "sigma": 9}

    def test_bad_dimension(self, capsys):
        assert run(["sigma", "0"]) == 2
        assert "error" in capsys.readouterr().err


class TestConstructVerify:
    @pytest.mark.parametrize("argv", [
        ["construct", "clifford", "--n", "3"],
        ["construct", "osystem", "--m", "8"],
        ["construct", "orthomul", "--n", "4"],
        ["construct", "qhm", "--hopf", "2"],
        ["construct", "qhm", "--n", "2"],
    ])
    def test_constructed_documents_verify(self, argv, tmp_path, capsys):
        out = str(tmp_path / "obj.json")
        assert run(argv + ["--out", out]) == 0
        assert capsys.readouterr().out == ""
        assert run(["verify", out]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["valid"] is True
        assert payload["kind"] == argv[1]

    def test_construct_output_is_deterministic(self, tmp_path):
        a, b = str(tmp_path / "a.json"), str(tmp_path / "b.json")
        assert run(["construct", "osystem", "--m", "16", "--out", a]) == 0
        assert run(["construct", "osystem", "--m", "16", "--out", b]) == 0
        assert (tmp_path / "a.json").read_bytes() == (tmp_path / "b.json").read_bytes()

    def test_construct_needs_its_dimension_flag(self, capsys):
        assert run(["construct", "clifford"]) == 2
        assert "--n" in capsys.readouterr().err
        assert run(["construct", "qhm", "--hopf", "2", "--n", "3"]) == 2
        capsys.readouterr()

    def test_verify_rejects_broken_math(self, tmp_path, capsys):
        eye = np.eye(3, dtype=np.int64)
        bad = OSystem(m=3, n=2, matrices=(eye, eye.copy()))
        path = write_doc(tmp_path, "bad.json", bad)
        assert run(["verify", path]) == 1
        err = capsys.readouterr().err
        assert "rejected" in err and "odd" in err

    def test_verify_reports_format_problems(self, tmp_path, capsys):
        path = tmp_path / "trunc.json"
        path.write_text('{"kind": "osystem", "dims"')
        assert run(["verify", str(path)]) == 2
        assert run(["verify", str(tmp_path / "missing.json")]) == 2
        capsys.readouterr()

    def test_verify_reads_stdin(self, monkeypatch, capsys):
        text = serialize.dumps(serialize.encode(osystem.construct_range_maximal(4)))
        monkeypatch.setattr("sys.stdin", io.StringIO(text))
        assert run(["verify", "-"]) == 0
        assert json.loads(capsys.readouterr().out)["valid"] is True


class TestClassifySplit:
    def test_classify_payload(self, triple_doc, capsys):
        assert run(["classify", triple_doc]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["q_rank"] == 8
        assert payload["is_umbilical"] is False
        assert payload["is_q_nonsingular"] is True
        assert payload["scales"] == [3.0, 2.0]
        assert payload["summand_dims"] == [4, 4]
        assert payload["positive_eigenvalues"] == pytest.approx([3, 3, 2, 2])

    def test_split_payload(self, triple_doc, capsys):
        assert run(["split", triple_doc]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["projection"] is None
        assert len(payload["summands"]) == 2
        change = np.array(payload["split_change"])
        assert change.shape == (8, 8)
        assert np.max(np.abs(change @ change.T - np.eye(8))) < 1e-9
        for sub in payload["summands"]:
            decoded = serialize.decode(sub)
            qhm.verify_qhm(decoded.components)

    def test_classify_needs_a_qhm_document(self, tmp_path, capsys):
        path = write_doc(tmp_path, "os.json", osystem.construct_range_maximal(4))
        assert run(["classify", path]) == 2
        assert "qhm" in capsys.readouterr().err


class TestConvert:
    def test_osystem_clifford_round_trip(self, tmp_path, capsys):
        src = write_doc(tmp_path, "os.json", osystem.construct_range_maximal(4))
        mid = str(tmp_path / "cs.json")
        back = str(tmp_path / "os2.json")
        assert run(["convert", src, "--to", "clifford", "--out", mid]) == 0
        assert run(["convert", mid, "--to", "osystem", "--out", back]) == 0
        a = serialize.decode(serialize.loads((tmp_path / "os.json").read_text()))
        b = serialize.decode(serialize.loads((tmp_path / "os2.json").read_text()))
        assert all(np.array_equal(x, y) for x, y in zip(a.matrices, b.matrices))
        capsys.readouterr()

    def test_umbilical_map_scales_to_a_system(self, tmp_path, capsys):
        src = str(tmp_path / "hopf.json")
        assert run(["construct", "qhm", "--hopf", "4", "--out", src]) == 0
        assert run(["convert", src, "--to", "clifford"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["kind"] == "clifford" and payload["dims"] == {"two_m": 8, "n": 5}

    def test_two_scale_map_does_not_convert(self, triple_doc, capsys):
        assert run(["convert", triple_doc, "--to", "clifford"]) == 1
        assert "rejected" in capsys.readouterr().err

    def test_unsupported_direction(self, tmp_path, capsys):
        src = write_doc(tmp_path, "os.json", osystem.construct_range_maximal(2))
        assert run(["convert", src, "--to", "qhm"]) == 2
        assert "no conversion" in capsys.readouterr().err


class TestExtend:
    def test_extend_minimal_map(self, tmp_path, capsys):
        src = str(tmp_path / "phi.json")
        assert run(["construct", "qhm", "--n", "3", "--out", src]) == 0
        assert run(["extend", src]) == 0
        payload = json.loads(capsys.readouterr().out)
        extended = serialize.decode(payload)
        assert (extended.m, extended.n) == (8, 5)
        qhm.verify_qhm(extended.components)

    def test_extend_rejects_split_map(self, triple_doc, capsys):
        assert run(["extend", triple_doc]) == 1
        assert "rejected" in capsys.readouterr().err


class TestEval:
    def test_qhm_point(self, tmp_path, capsys):
        src = str(tmp_path / "hopf1.json")
        assert run(["construct", "qhm", "--hopf", "1", "--out", src]) == 0
        assert run(["eval", src, "--point", "1,0"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload == {"kind": "qhm", "values": [1.0, 0.0]}

    def test_orthomul_factors(self, tmp_path, capsys):
        src = str(tmp_path / "mul.json")
        assert run(["construct", "orthomul", "--n", "2", "--out", src]) == 0
        assert run(["eval", src, "--x", "0,1", "--y", "0,1"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload == {"kind": "orthomul", "values": [-1.0, 0.0]}

    def test_missing_flags(self, tmp_path, capsys):
        src = str(tmp_path / "hopf1.json")
        assert run(["construct", "qhm", "--hopf", "1", "--out", src]) == 0
        assert run(["eval", src]) == 2
        assert "--point" in capsys.readouterr().err
        assert run(["eval", src, "--point", "1,oops"]) == 2
        capsys.readouterr()


class TestSeedsAndUsage:
    def test_env_seed_lands_in_metadata(self, tmp_path, monkeypatch):
        monkeypatch.setenv("QHM_SEED", "123")
        out = str(tmp_path / "os.json")
        assert run(["construct", "osystem", "--m", "2", "--out", out]) == 0
        doc = json.loads((tmp_path / "os.json").read_text())
        assert doc["meta"]["seed"] == 123

    def test_explicit_seed_wins(self, tmp_path, monkeypatch):
        monkeypatch.setenv("QHM_SEED", "123")
        out = str(tmp_path / "os.json")
        assert run(["construct", "osystem", "--m", "2", "--seed", "9", "--out", out]) == 0
        doc = json.loads((tmp_path / "os.json").read_text())
        assert doc["meta"]["seed"] == 9

    def test_garbage_env_seed_falls_back(self, tmp_path, monkeypatch):
        monkeypatch.setenv("QHM_SEED", "not-a-number")
        out = str(tmp_path / "os.json")
        assert run(["construct", "osystem", "--m", "2", "--out", out]) == 0
        doc = json.loads((tmp_path / "os.json").read_text())
        assert doc["meta"]["seed"] == 0

    def test_missing_subcommand_is_a_usage_error(self):
        with pytest.raises(SystemExit) as err:
            run([])
        assert err.value.code == 2

    def test_fresh_process_invocation(self):
        proc = subprocess.run([sys.executable, "-m", "quadmorph.cli", "sigma", "8"],
                              capture_output=True, text=True)
        assert proc.returncode == 0
        assert proc.stdout == "m=8 r=0 c=3 d=0 sigma=8\n"
