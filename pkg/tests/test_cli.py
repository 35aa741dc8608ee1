import csv
import io
import json
import subprocess
import sys

import pytest

from qary_cw.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_encode(capsys):
    assert run(capsys, "encode", "--q", "3", "--k", "3", "--e", "1", "--W", "8", "--x", "212")[:2] == (0, "202022 z=2\n")
    assert run(capsys, "encode", "--q", "3", "--k", "3", "--e", "2", "--W", "12", "--x", "212")[:2] == (0, "2222211 z=8\n")


def test_encode_errors(capsys):
    code, _, err = run(capsys, "encode", "--q", "3", "--k", "4", "--W", "4", "--x", "2102")
    assert code == 1 and "UnsupportedLength" in err
    with pytest.warns(UserWarning):
        code, _, err = run(capsys, "encode", "--q", "3", "--k", "3", "--W", "12", "--x", "000")
    assert code == 2 and "range" in err
    code, _, _ = run(capsys, "encode", "--q", "3", "--k", "3", "--W", "4", "--x", "2132")
    assert code == 1
    with pytest.raises(SystemExit) as exc:
        main(["encode", "--q", "three"])
    assert exc.value.code == 1


def test_decode(capsys):
    assert run(capsys, "decode", "--q", "4", "--k", "4", "--e", "1", "--c", "2313113")[:2] == (0, "3120\n")
    assert run(capsys, "decode", "--q", "3", "--k", "3", "--e", "2", "--c", "2222211")[:2] == (0, "212\n")
    assert run(capsys, "decode", "--q", "3", "--k", "3", "--e", "2", "--c", "222221")[0] == 1


def test_decode_json_steps(capsys):
    _, out, _ = run(capsys, "decode", "--q", "4", "--k", "4", "--c", "2313113", "--format", "json")
    row = json.loads(out)["rows"][0]
    assert (row["g"], row["d"], row["z"], row["b(z)"], row["x"]) == ("31", "32", 14, "0033", "3120")


@pytest.mark.parametrize("args", [("3", "3", "1", "8", "212"), ("3", "9", "2", "14", "210120012"), ("2", "8", "3", "7", "11111111")])
def test_scripted_roundtrip(capsys, args):
    q, k, e, W, x = args
    _, out, _ = run(capsys, "encode", "--q", q, "--k", k, "--e", e, "--W", W, "--x", x)
    c = out.split()[0]
    assert run(capsys, "decode", "--q", q, "--k", k, "--e", e, "--c", c)[1].strip() == x


def test_trace_weighting_only(capsys):
    code, out, _ = run(capsys, "trace", "--q", "3", "--k", "4", "--x", "2102", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 12
    assert [int(r["w(y)"]) for r in rows] == [5, 3, 4, 5, 3, 4, 2, 3, 4, 5, 6, 4]
    _, out, _ = run(capsys, "trace", "--q", "2", "--k", "3", "--x", "000", "--format", "json")
    assert json.loads(out)["rows"][0]["y"] == "000"


def test_trace_flags(capsys):
    _, out, _ = run(capsys, "trace", "--q", "3", "--k", "3", "--W", "6", "--x", "102", "--format", "json")
    doc = json.loads(out)
    assert [r["z"] for r in doc["rows"] if r["flag"]] == [1, 3, 6, 8]
    assert doc["params"]["chosen_z"] == 1
    assert doc["series"] == [[r["z"], r["w(c)"]] for r in doc["rows"]]


def test_formats_agree(capsys):
    base = ["trace", "--q", "3", "--k", "3", "--W", "8", "--x", "212"]
    _, text, _ = run(capsys, *base)
    _, csv_out, _ = run(capsys, *base, "--format", "csv")
    _, js, _ = run(capsys, *base, "--format", "json")
    csv_rows = list(csv.reader(io.StringIO(csv_out)))
    text_rows = [line.split() for line in text.splitlines()[2:]]
    json_rows = json.loads(js)["rows"]
    assert len(csv_rows) - 1 == len(text_rows) == len(json_rows) == 9
    for t_row, c_row, j_row in zip(text_rows, csv_rows[1:], json_rows):
        assert t_row == [v for v in c_row if v]
        assert [str(v) if not isinstance(v, bool) else ("*" if v else "") for v in j_row.values()] == c_row


def test_range(capsys):
    code, out, _ = run(capsys, "range", "--q", "3", "--k", "3", "--e", "1", "--format", "json")
    rows = {r["source"]: r for r in json.loads(out)["rows"]}
    assert code == 0
    assert rows["thm2"]["upper"] == 10
    assert (rows["oracle"]["lower"], rows["oracle"]["upper"]) == (4, 8)
    assert run(capsys, "range", "--q", "4", "--k", "16", "--e", "1")[0] == 3


def test_cardinality(capsys):
    assert run(capsys, "cardinality", "--q", "2", "--n", "12", "--W", "6", "--k", "8")[1] == "N1=924 N2=256 feasible=yes\n"


def test_graytable(capsys):
    _, out, _ = run(capsys, "graytable", "--q", "3", "--r", "2", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["z", "s,p", "b(z)", "d", "g"]
    assert rows[4] == ["3", "1,0", "111", "10", "12"]
    assert len(rows) == 10


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qary_cw", "decode", "--q", "4", "--k", "4", "--c", "2313113"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "3120\n"
