import subprocess
import sys

import pytest

from nmonoid import formats
from nmonoid.cli import main
from nmonoid.monoid import is_unit
from nmonoid.tables import compose, morphism_equal, normalize


@pytest.fixture
def files(tmp_path):
    data = {
        "f.nm": "monoid n=1 k=2\nmap 0 -> 0\nmap 1 -> 00\n",
        "g.nm": "monoid n=1 k=2\nmap 0 -> 0\nmap 1 -> 0\n",
        "h.nm": "monoid n=1 k=2\nmap 0 -> 0\nmap 1 -> 10\n",
        "bad.nm": "monoid n=1 k=2\nmap 0 -> 2\n",
        "rm2.nm": "monoid n=2 k=2\nmap 0,0 -> e,e\nmap 0,1 -> e,0\nmap 1,0 -> 0,e\n",
        "gens.nm": "monoid n=1 k=2\ngen f\nmap 0 -> 0\nmap 1 -> 10\n"
        "gen g\nmap 0 -> 0\nmap 1 -> 0\ngen h\nmap 0 -> 0\nmap 1 -> 00\n",
        "q.nm": "code n=2 k=2\n1,1\n",
        "full.nm": "code n=2 k=2\n0,0\n0,1\n1,0\n1,1\n",
        "and12.ckt": "circuit inputs=2\ng1 = AND x1 x2\nout g1\n",
        "and21.ckt": "circuit inputs=2\ng1 = AND x2 x1\nout g1\n",
        "or12.ckt": "circuit inputs=2\ng1 = OR x1 x2\nout g1\n",
    }
    for name, text in data.items():
        (tmp_path / name).write_text(text)
    return tmp_path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_check(files, capsys):
    assert run(capsys, "check", files / "f.nm") == (0, "RM2\n", "")
    code, out, err = run(capsys, "check", files / "bad.nm")
    assert code == 2 and out == ""
    assert "bad.nm:2:10:" in err


def test_missing_file_and_bad_usage(files, capsys):
    code, _, err = run(capsys, "check", files / "nope.nm")
    assert code == 2 and "error" in err
    assert run(capsys, "frobnicate")[0] == 2


def test_normalize_prints_three_entries(files, capsys):
    code, out, _ = run(capsys, "normalize", "--oracle", files / "f.nm")
    assert code == 0
    assert out == "monoid n=1 k=2\nmap 00 -> 00\nmap 01 -> 01\nmap 1 -> 00\n"


def test_compose_writes_output(files, capsys):
    out_path = files / "gf.nm"
    assert run(capsys, "--oracle", "compose", files / "g.nm", files / "h.nm", "-o", out_path)[0] == 0
    assert out_path.read_text() == "monoid n=1 k=2\nmap 0 -> 0\nmap 1 -> 00\n"


def test_equal_exit_codes(files, capsys):
    g = files / "gens.nm"
    assert run(capsys, "equal", "-g", g, "f", "f") == (0, "equal\n", "")
    assert run(capsys, "equal", "--oracle", "-g", g, "g f", "h")[0] == 0
    assert run(capsys, "equal", "--certificate", "-g", g, "g f", "h")[0] == 0
    assert run(capsys, "equal", "-g", g, "f", "g") == (1, "not equal\n", "")
    code, _, err = run(capsys, "equal", "-g", g, "f", "zz")
    assert code == 2 and "zz" in err


def test_eval(files, capsys):
    g = files / "gens.nm"
    assert run(capsys, "eval", "-g", g, "-w", "g f", "-x", "11") == (0, "001\n", "")
    assert run(capsys, "eval", "-g", g, "-w", "", "-x", "e") == (0, "e\n", "")
    assert run(capsys, "eval", "-g", g, "-w", "f", "-x", "3")[0] == 2


def test_code_commands(files, capsys):
    code, out, _ = run(capsys, "complete", files / "q.nm")
    assert code == 0 and out == (files / "full.nm").read_text()
    assert run(capsys, "complement", files / "q.nm")[1] == "code n=2 k=2\n0,0\n0,1\n1,0\n"
    assert run(capsys, "maximal", files / "full.nm") == (0, "maximal\n", "")
    assert run(capsys, "maximal", files / "q.nm") == (1, "not maximal\n", "")


def test_factorize(files, capsys):
    out_dir = files / "fac"
    code, out, _ = run(capsys, "--oracle", "factorize", files / "rm2.nm", "-d", out_dir)
    assert code == 0 and out == "case 3\n"
    g2, h, g1 = (formats.parse_table((out_dir / f"{n}.nm").read_text()) for n in ("g2", "h", "g1"))
    f = formats.parse_table((files / "rm2.nm").read_text())
    assert is_unit(g1) and is_unit(g2)
    assert morphism_equal(compose(g2, compose(h, g1)), normalize(f))


def test_circuit_equal(files, capsys):
    assert run(capsys, "circuit-equal", files / "and12.ckt", files / "and21.ckt")[0] == 0
    assert run(capsys, "--oracle", "circuit-equal", files / "and12.ckt", files / "or12.ckt")[0] == 1


def test_cap_flag(files, capsys):
    code, _, err = run(capsys, "--cap", "2", "normalize", files / "rm2.nm")
    assert code == 0
    code, _, err = run(capsys, "--cap", "0", "check", files / "f.nm")
    assert code == 2 and "cap" in err


def test_random_is_deterministic(capsys):
    first = run(capsys, "--seed", "7", "random", "table")
    second = run(capsys, "random", "table", "--seed", "7")
    assert first == second and first[0] == 0
    assert len(formats.parse_table(first[1])) > 0
    for kind, parse, fmt in (
        ("circuit", formats.parse_circuit, formats.format_circuit),
        ("code", formats.parse_code, formats.format_code),
    ):
        text = run(capsys, "random", kind, "--seed", "3")[1]
        assert fmt(parse(text)) == text


def test_output_is_byte_identical(files, capsys):
    a = run(capsys, "normalize", files / "rm2.nm")
    b = run(capsys, "normalize", files / "rm2.nm")
    assert a == b


def test_module_entry_point(files):
    proc = subprocess.run(
        [sys.executable, "-m", "nmonoid", "check", str(files / "rm2.nm")],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "RM2\n"
