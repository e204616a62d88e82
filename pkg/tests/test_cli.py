import doctest
import io
import json
import re
import shlex
import subprocess
import sys
from pathlib import Path

import pytest

from minorrel.cli import run

README = Path(__file__).resolve().parent.parent / "README.md"


def call(argv, stdin=None):
    out, err = io.StringIO(), io.StringIO()
    old = sys.stdin
    if stdin is not None:
        sys.stdin = io.StringIO(stdin)
    try:
        code = run(argv, out, err)
    finally:
        sys.stdin = old
    return code, out.getvalue(), err.getvalue()


def readme_console_examples():
    text = README.read_text()
    examples = []
    for block in re.findall(r"```console\n(.*?)```", text, re.S):
        cmd, expected = None, []
        for line in block.splitlines():
            if line.startswith("$ "):
                if cmd:
                    examples.append((cmd, "\n".join(expected) + "\n"))
                cmd, expected = line[2:], []
            else:
                expected.append(line)
        if cmd:
            examples.append((cmd, "\n".join(expected) + "\n"))
    return examples


EXAMPLES = readme_console_examples()


def test_readme_has_examples():
    assert len(EXAMPLES) >= 15


@pytest.mark.parametrize("cmd,expected", EXAMPLES, ids=[c for c, _ in EXAMPLES])
def test_readme_console(cmd, expected):
    argv = shlex.split(cmd)
    assert argv[0] == "minorrel"
    code, out, err = call(argv[1:])
    assert out + err == expected
    assert code == (2 if err.startswith("rejected") else 0)


def test_readme_python():
    text = README.read_text()
    blocks = re.findall(r"```pycon\n(.*?)```", text, re.S)
    assert blocks
    parser = doctest.DocTestParser()
    runner = doctest.DocTestRunner(optionflags=doctest.ELLIPSIS)
    for i, block in enumerate(blocks):
        test = parser.get_doctest(block, {}, f"README[{i}]", str(README), 0)
        runner.run(test)
    assert runner.failures == 0


def test_spec_examples():
    assert call(["plethysm", "--mu", "3", "--t", "2", "--format", "json"])[1] == \
        '[{"partition":[4,1,1],"mult":1},{"partition":[3,3],"mult":1}]\n'
    assert call(["regularity", "--t", "2", "--m", "3", "--n", "4"])[1] == '{"case":"ii","k0":2,"reg":3}\n'


def test_usage_errors():
    assert call(["bogus"])[0] == 64
    assert call(["plethysm", "--mu", "3"])[0] == 64
    assert call(["plethysm", "--mu", "3", "--t", "2", "--nope"])[0] == 64
    assert call(["plethysm", "--mu", "1,2", "--t", "2"])[0] == 64
    assert call([])[0] == 64


def test_domain_errors():
    code, out, err = call(["relation", "--kind", "h", "--t", "2", "--u", "2"])
    assert code == 2 and err.startswith("rejected")
    code, _, err = call(["plethysm", "--mu", "1,1,1,1,1,1,1", "--t", "2"])
    assert code == 2 and "--confirm-large" in err
    assert call(["plethysm", "--mu", "1,1,1,1,1,1,1", "--t", "2", "--confirm-large"])[0] == 0
    code, _, err = call(["hilbert", "--t", "2", "--m", "4", "--n", "5", "--d", "4", "--brute"])
    assert code == 2 and "cap" in err
    code, _, err = call(["minimality", "--row", "6", "--col", "5,1", "--t", "2"])
    assert code == 2


def test_verify_stdin_and_file(tmp_path):
    lines = "1 * [1,2|1,2][1,2|3,4] - 1 * [1,2|1,3][1,2|2,4] + 1 * [1,2|1,4][1,2|2,3]\n1 * [1,2|1,2]\n"
    code, out, _ = call(["verify", "--m", "2", "--n", "4"], stdin=lines)
    assert code == 0
    assert json.loads(out) == [{"terms": 3, "is_relation": True}, {"terms": 1, "is_relation": False}]
    f = tmp_path / "rels.txt"
    f.write_text(lines)
    code, out, _ = call(["verify", "--m", "2", "--n", "4", "--file", str(f), "--format", "text"])
    assert out == "true\nfalse\n"


def test_export_roundtrip():
    _, out, _ = call(["export", "--t", "3", "--m", "5", "--n", "6"])
    code, res, _ = call(["verify", "--m", "5", "--n", "6", "--probe", "--seed", "2", "--format", "text"],
                        stdin=out)
    assert code == 0
    assert res.splitlines() == ["true"] * len(out.splitlines())
    assert call(["export", "--t", "1", "--m", "3", "--n", "4"])[1] == ""
    assert call(["export", "--t", "2", "--m", "2", "--n", "3"])[1] == ""


@pytest.mark.parametrize("argv", [
    ["verify", "--m", "3", "--n", "3", "--probe", "--seed", "5", "--poly", "1 * [1,2|1,2]"],
    ["minimality", "--row", "6,2", "--col", "7,1", "--t", "2"],
    ["decompose", "--t", "3", "--d", "3", "--m", "4", "--format", "csv"],
    ["tshape", "--t", "4", "--d", "3", "--format", "json"],
])
def test_deterministic(argv):
    assert call(argv) == call(argv)


def test_formats():
    code, out, _ = call(["decompose", "--t", "2", "--d", "2", "--m", "3", "--n", "4", "--format", "csv"])
    assert out.splitlines()[0] == "partition,tensor_mult,single_type,dim"
    code, out, _ = call(["tshape", "--t", "2", "--d", "3", "--format", "json"])
    assert json.loads(out)[0] == {"row": [4, 1, 1], "col": [3, 3]}
    code, out, _ = call(["regularity", "--t", "2", "--m", "3", "--n", "4", "--format", "csv"])
    assert out == "case,k0,reg\nii,2,3\n"


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "minorrel", "regularity", "--t", "2", "--m", "4", "--n", "4"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == {"case": "i", "k0": None, "reg": 8}
