import csv
import io
import json

import pytest

from zerohecke.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def doc(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    return json.loads(out)


def test_envelope(capsys):
    d = doc(capsys, "idempotents", "--n", "3")
    assert list(d) == ["schema_version", "command", "parameters", "anchor", "ok", "results"]
    assert d["command"] == "idempotents" and d["parameters"] == {"n": 3} and d["ok"]
    assert d["results"]["count"] == 4


def test_idempotent_expansions(capsys):
    rows = doc(capsys, "idempotents", "--n", "3")["results"]["idempotents"]
    got = {r["diagram"]: r["idempotent"] for r in rows}
    assert got == {"++": "π_121", "+-": "π_1 - π_121", "-+": "π_2 - π_12 - π_21 + π_121",
                   "--": "1 - π_1 - π_2 + π_12 + π_21 - π_121"}


def test_negative_diagram(capsys):
    d = doc(capsys, "demipotent", "--n", "3", "--diagram=-+")
    assert d["results"]["C"] == "π_2 - π_12 - π_21 + π_121"


def test_timing_and_determinism(capsys):
    _, a, _ = run(capsys, "fibers", "--n", "4")
    _, b, _ = run(capsys, "fibers", "--n", "4")
    assert a == b and "timing" not in json.loads(a)
    assert "seconds" in doc(capsys, "fibers", "--n", "4", "--timing")["timing"]


def test_omega_fibers(capsys):
    r = doc(capsys, "omega-fibers", "--n", "4")["results"]
    assert r["components"] == 23 and r["bad"] == 0


def test_dot_output(capsys):
    for argv in (["omega-fibers", "--n", "4"], ["crystal-gen", "--crystal", "A2:2,1"]):
        code, out, _ = run(capsys, *argv, "--format", "dot")
        assert code == 0 and out.startswith("digraph")
        assert out.count("{") == out.count("}")


def test_csv_output(capsys):
    code, out, _ = run(capsys, "nilpotence-table", "--n", "4", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 8 and set(rows[0]) >= {"diagram", "degree"}


@pytest.mark.parametrize("argv,key,val", [
    (["bndpf-count", "--n", "3"], "count", 33),
    (["orp", "--poset", "chain4"], "monoid_size", 14),
    (["cartan-check", "--poset", "N5"], "triangular", True),
    (["semilattice-demipotents", "--poset", "B2"], "orthogonal", True),
    (["crystal-tensor", "--crystal", "A1:1", "--crystal", "A1:1"], "component_sizes", [3, 1]),
    (["stembridge-check", "--crystal", "A2:2,1"], "passes", True),
    (["promotion-search", "--crystal", "A2:2,2"], "operators", 1),
    (["universal-check", "--n", "4"], "matched", 8),
    (["affine-quotient", "--n", "3", "--max-length", "5"], "fibers_with_one_avoider", None),
    (["affine-reconstruct", "--window", "0,2,3"], "R", "[0,2,4]"),
    (["q-identities", "--n", "4"], "all_hold", True),
])
def test_commands(capsys, argv, key, val):
    r = doc(capsys, *argv)["results"]
    if val is None:
        assert r[key] == r["fibers"]
    else:
        assert r[key] == val


def test_exit_codes(capsys):
    assert run(capsys, "bndpf-count", "--n", "9")[0] == 2
    code, _, err = run(capsys, "omega-fibers", "--n", "9")
    assert code == 2 and "--max-n" in err
    assert run(capsys, "demipotent", "--n", "3", "--diagram", "+x")[0] == 2
    assert run(capsys, "crystal-gen", "--crystal", "A1:1,1,1")[0] == 2
    assert run(capsys, "crystal-tensor", "--crystal", "A1:1")[0] == 2
    assert run(capsys, "bndpf-count", "--format", "dot", "--n", "2")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2
