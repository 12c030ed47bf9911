from __future__ import annotations

import json

import pytest

from treecodes.cli import main
from treecodes.documents import read_code


def run(capsys, *argv):
    code = main(list(map(str, argv)))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_construct_and_verify(tmp_path, capsys):
    f = tmp_path / "c.json"
    assert run(capsys, "construct", "--family", "affine-n4", "--p", 5, "-o", f)[0] == 0
    code = read_code(f)
    assert len(code) == 8 and code.n == 15
    rc, out, _ = run(capsys, "verify", f, "--expect-distance", 11)
    assert rc == 0 and json.loads(out)["min_distance"] == 11


def test_construct_params(tmp_path, capsys):
    rc, out, _ = run(capsys, "construct", "--family", "stars", "--n", 3)
    assert rc == 0 and len(json.loads(out)["trees"]) == 3
    f = tmp_path / "b.json"
    assert run(capsys, "construct", "--family", "bibd-8-28-5", "-o", f)[0] == 0
    assert len(read_code(f)) == 28
    assert run(capsys, "construct", "--family", "cubic-n13")[0] == 2
    assert run(capsys, "construct", "--family", "stars", "--n", 2)[0] == 2
    assert run(capsys, "construct", "--family", "nope")[0] == 2


def test_verify_exit_codes(tmp_path, capsys):
    fur, st = tmp_path / "f.json", tmp_path / "s.json"
    run(capsys, "construct", "--family", "furedi-11-35-8", "-o", fur)
    assert run(capsys, "verify", fur, "--expect-distance", 8)[0] == 0
    run(capsys, "construct", "--family", "stars", "--n", 6, "-o", st)
    rc, out, _ = run(capsys, "verify", st, "--expect-distance", 5)
    assert rc == 1 and json.loads(out)["min_distance"] == 4
    doc = json.loads(st.read_text())
    doc["trees"] = doc["trees"][:1]
    del doc["meta"]["content_hash"]
    one = tmp_path / "one.json"
    one.write_text(json.dumps(doc))
    assert run(capsys, "verify", one, "--expect-distance", 1)[0] == 2
    (tmp_path / "junk.json").write_text("{not json")
    assert run(capsys, "verify", tmp_path / "junk.json", "--expect-distance", 1)[0] == 2


def test_tampered_document_is_integrity_error(tmp_path, capsys):
    st = tmp_path / "s.json"
    run(capsys, "construct", "--family", "stars", "--n", 6, "-o", st)
    doc = json.loads(st.read_text())
    doc["trees"][0][0] = [0, 5] if doc["trees"][0][0] != [0, 5] else [0, 4]
    doc["trees"][0] = sorted(set(map(tuple, doc["trees"][0])))
    st.write_text(json.dumps(doc))
    assert run(capsys, "verify", st)[0] == 3


def test_decode(tmp_path, capsys):
    st = tmp_path / "s.json"
    run(capsys, "construct", "--family", "stars", "--n", 6, "-o", st)
    rec = tmp_path / "r.json"
    rec.write_text(json.dumps([[3, 0], [3, 5]]))
    rc, out, _ = run(capsys, "decode", "--code", st, "--received", rec, "--mode", "erasure")
    assert rc == 0 and json.loads(out)["candidates"] == [3]
    rec.write_text("[]")
    rc, out, _ = run(capsys, "decode", "--code", st, "--received", rec)
    assert rc == 4 and json.loads(out)["candidates"] == [0, 1, 2, 3, 4, 5]
    rc, out, _ = run(capsys, "decode", "--code", st, "--received", rec, "--permissive")
    assert rc == 4 and len(json.loads(out)["trees"]) == 6
    rec.write_text(json.dumps([[0, 1], [0, 2], [0, 3], [0, 4], [1, 5]]))
    rc, out, _ = run(capsys, "decode", "--code", st, "--received", rec, "--mode", "error")
    assert rc == 0 and json.loads(out)["candidates"] == [0]


def test_bounds_and_curves(tmp_path, capsys):
    rc, out, _ = run(capsys, "bounds", "--n", 8, "--d", 5)
    assert rc == 0 and "128" in out
    rc, out, _ = run(capsys, "bounds", "--n", 8, "--d", 5, "--json")
    names = {e["name"]: e for e in json.loads(out)["entries"]}
    assert names["first_upper"]["rounded"] == 128
    csv = tmp_path / "curves.csv"
    assert run(capsys, "curves", "--from", 0.01, "--to", 0.99, "--step", 0.01, "--out", csv)[0] == 0
    lines = csv.read_text().splitlines()
    assert lines[0] == "delta,C_delta,c_delta" and len(lines) == 100
    row = next(l for l in lines[1:] if l.startswith("0.5,"))
    _, C, c = row.split(",")
    assert abs(float(C) - 0.679570457) < 1e-9 and float(c) == 0.125
    assert run(capsys, "bounds", "--n", 4, "--d", 9)[0] == 2


def test_oracle_and_export(tmp_path, capsys):
    rc, out, _ = run(capsys, "oracle", "exact-a", "--n", 4, "--d", 3)
    rec = json.loads(out)
    assert rc == 0 and rec["value"] == 2 and rec["certified"] and "nodes" in rec
    rc, out, _ = run(capsys, "oracle", "forests", "--n", 4, "--d", 2)
    assert json.loads(out)["forests"] == 15
    rc, out, _ = run(capsys, "oracle", "rooted-forests", "--n", 5, "--X", "0,1,2")
    assert json.loads(out)["count"] == 15
    rc, out, _ = run(capsys, "oracle", "trees-containing", "--n", 5, "--edges", "0-1,2-3")
    assert json.loads(out)["count"] == 20
    g = tmp_path / "g.json"
    rc, out, _ = run(capsys, "oracle", "greedy", "--n", 5, "--d", 3, "--seed", 1, "-o", g)
    assert rc == 0 and len(read_code(g)) == json.loads(out)["size"]
    assert run(capsys, "oracle", "exact-a", "--n", 6, "--d", 3)[0] == 2
    st = tmp_path / "s.json"
    run(capsys, "construct", "--family", "stars", "--n", 4, "-o", st)
    rc, out, _ = run(capsys, "export", st, "--dot", "--index", 0)
    assert rc == 0 and out.count("--") == 3


def test_global_threads_flag(capsys):
    rc, out, _ = run(capsys, "--threads", 4, "oracle", "forests", "--n", 4, "--d", 2)
    assert rc == 0


@pytest.mark.parametrize("family,args", [
    ("stars", ["--n", 7]), ("ham-paths", ["--n", 8]), ("paths-stars", ["--n", 9]),
    ("affine-n4", ["--p", 7]), ("cubic-n13", ["--q", 9]),
    ("bibd-8-28-5", []), ("furedi-11-35-8", []),
])
def test_document_roundtrip_is_byte_stable(tmp_path, capsys, family, args):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(capsys, "construct", "--family", family, *args, "-o", a)
    run(capsys, "construct", "--family", family, *args, "-o", b)
    assert a.read_bytes() == b.read_bytes()
    code = read_code(a)
    from treecodes.documents import code_to_document, dumps
    assert dumps(code_to_document(code)) == a.read_text()
    assert run(capsys, "verify", a)[0] == 0
