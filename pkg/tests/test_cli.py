import json
import subprocess
import sys

import pytest

from subwords import signature_of_word
from subwords.cli import run
from subwords.signature import loads
from subwords.testkit import doubling_slp


@pytest.fixture
def cli(capsysbinary):
    def call(*argv):
        code = run(list(argv))
        out, err = capsysbinary.readouterr()
        return code, out.decode("utf-8"), err.decode("utf-8")

    return call


def test_iota_zeta_factorize(cli):
    assert cli("iota", "aabcbcaabc") == (0, "3\n", "")
    assert cli("zeta", "aabb") == (0, "2\n", "")
    assert cli("factorize", "baccabbcbaabacba") == (0, "bac|cab|bcba|abac·ba\n", "")
    assert cli("factorize", "abab")[1] == "ab|ab·\n"


def test_explicit_alphabet(cli):
    assert cli("iota", "abc", "--alphabet", "abcd")[1] == "0\n"
    code, out, err = cli("iota", "abx", "--alphabet", "ab")
    assert code == 1 and "not in alphabet" in err


def test_file_input(cli, tmp_path):
    path = tmp_path / "w.txt"
    path.write_bytes(b"aabb")
    assert cli("zeta", "--file", str(path))[1] == "2\n"
    assert cli("iota", "--file", str(tmp_path / "missing"))[0] == 1


def test_json_output(cli):
    code, out, _ = cli("factorize", "--json", "baccabbcbaabacba")
    assert json.loads(out) == {
        "arches": ["bac", "cab", "bcba", "abac"],
        "rest": "ba",
        "lambdas": [3, 6, 10, 14],
        "iota": 4,
    }
    assert json.loads(cli("iota", "--json", "aabb")[1]) == {"iota": 1}
    assert json.loads(cli("zeta", "--json", "aabb")[1]) == {"zeta": 2}


def test_signature_and_compose(cli, tmp_path):
    code, out, _ = cli("signature", "aabac")
    assert code == 0
    assert "c ↦ ⟨1, {a,c}⟩" in out and "bc ↦ ⟨2, ∅⟩" in out

    a, b = tmp_path / "a.json", tmp_path / "b.json"
    a.write_text(cli("signature", "--json", "aabac")[1])
    b.write_text(cli("signature", "--json", "cb")[1])
    code, out, _ = cli("compose", "--json", str(a), str(b))
    assert code == 0
    assert loads(out) == signature_of_word(b"aabaccb")

    b.write_text('{"e": "ab"}')
    code, _, err = cli("compose", str(a), str(b))
    assert code == 1 and "b.json" in err


def test_slp_commands(cli, tmp_path):
    path = tmp_path / "x.slp"
    path.write_bytes(doubling_slp(b"ab", 40).to_bytes())
    assert cli("slp", str(path), "--iota")[1] == f"{2**40}\n"
    assert cli("slp", str(path), "--zeta")[1] == f"{2**40}\n"
    assert cli("slp", str(path), "--length")[1] == f"{2**41}\n"
    code, _, err = cli("slp", str(path), "--expand", "--max-len", "100")
    assert code == 1 and str(2**41) in err
    assert json.loads(cli("slp", "--json", str(path), "--iota")[1]) == {"iota": str(2**40)}

    small = tmp_path / "small.slp"
    small.write_text("A = 'a'\nB = 'b'\nR = A B\nS = R R\n")
    assert cli("slp", str(small), "--expand")[1] == "abab\n"


def test_slp_parse_error_exit_code(cli, tmp_path):
    path = tmp_path / "bad.slp"
    path.write_text("X1 = 'a'\nX1 = 'b'\n")
    code, _, err = cli("slp", str(path), "--iota")
    assert code == 1 and "line 2" in err


def test_usage_errors(cli):
    assert cli()[0] == 2
    assert cli("bogus")[0] == 2
    assert cli("iota")[0] == 2
    assert cli("slp", "x.slp")[0] == 2
    assert cli("slp", "x.slp", "--iota", "--zeta")[0] == 2


def test_selftest(cli):
    code, out, _ = cli("selftest", "--cases", "200", "--seed", "3")
    assert code == 0 and "OK" in out
    code, out, _ = cli("selftest", "--json", "--cases", "50", "--alphabet-size", "2")
    assert code == 0 and json.loads(out)["ok"] is True


def test_selftest_reports_counterexample(cli, monkeypatch):
    import subwords.selftest as st

    monkeypatch.setattr(st, "zeta", lambda u: 99)
    code, out, _ = cli("selftest", "--cases", "20")
    assert code == 1 and "MISMATCH: [zeta]" in out


def test_console_script_entry():
    result = subprocess.run(
        [sys.executable, "-m", "subwords.cli", "iota", "aabcbcaabc"],
        capture_output=True,
        check=False,
    )
    assert result.returncode == 0 and result.stdout == b"3\n"
