import io
import json

import pytest
from hypothesis import given

from strategies import complexes
from srtor.cli import main
from srtor.corpus import corpus_names, load
from srtor.io import DocumentError, document_for, parse_complex, serialize


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


def test_parse_examples():
    doc = parse_complex('{"m":4,"facets":[[1,2],[2,3],[3,4],[1,4]]}')
    assert doc.m == 4 and len(doc.complex.facets) == 4
    doc = parse_complex('{"m":2,"facets":[[1],[2]]}')
    assert doc.facets == ((1,), (2,))
    with pytest.raises(DocumentError, match="is a face"):
        parse_complex('{"m":4,"facets":[[1,2],[2,3]],"complement":[[1,2]]}')


@pytest.mark.parametrize("text, fragment", [
    ("{not json", "malformed"),
    ('{"m":2,"facets":[[1,3]]}', "outside"),
    ('{"m":0,"facets":[]}', "m must be"),
    ('{"m":2}', "facets"),
    ('{"m":2,"facets":[["a"]]}', "integers"),
    ('{"m":2,"facets":[[1]],"colour":1}', "unknown"),
    ("[1, 2]", "object"),
])
def test_parse_errors(text, fragment):
    with pytest.raises(DocumentError, match=fragment):
        parse_complex(text)


def test_downward_closure_on_load():
    doc = parse_complex('{"m":3,"facets":[[1,2,3],[1,2],[3]]}')
    assert doc.facets == ((1, 2, 3),)


@given(complexes())
def test_round_trip(data):
    K, _ = data
    doc = document_for(K, "x")
    again = parse_complex(serialize(doc))
    assert again == parse_complex(serialize(again)) == doc
    assert again.complex == K


def test_round_trip_with_complement():
    doc = parse_complex('{"name":"c","m":4,"facets":[[1,2],[2,3],[3,4],[1,4]],"complement":[[1,2,3],[1,3]]}')
    assert doc.complement == ((1, 3), (1, 2, 3))
    assert parse_complex(serialize(doc)) == doc
    assert len(doc.given_complement()) == 3


def test_corpus_contents():
    names = corpus_names()
    for want in ["simplex3", "boundary_simplex2", "cycle4", "cycle8", "two_points", "two_edges", "rp2_6", "octahedron"]:
        assert want in names
    assert all(load(n).m <= 8 for n in names)


def test_betti_text():
    code, out = run(["betti", "cycle4", "--coeffs", "Q", "--route", "hochster"])
    assert code == 0
    lines = out.splitlines()
    assert lines[1] == "i | J | rank | torsion"
    assert lines[2:6] == ["0 | [] | 1 | []", "1 | [1, 3] | 1 | []", "1 | [2, 4] | 1 | []", "2 | [1, 2, 3, 4] | 1 | []"]
    assert lines[6] == "poincare: 1 + 2t^3 + t^6"


def test_betti_simplex_and_rp2():
    code, out = run(["betti", "simplex3", "--format", "machine"])
    recs = [json.loads(x) for x in out.splitlines()]
    assert recs[0] == {"i": 0, "J": [], "rank": 1, "torsion": []}
    assert recs[1]["text"] == "1" and len(recs) == 2
    code, out = run(["betti", "rp2_6", "--coeffs", "Z", "--route", "complement"])
    assert code == 0 and "3 | [1, 2, 3, 4, 5, 6] | 0 | [2]" in out
    assert "poincare" not in out


def test_betti_machine_has_polynomial_over_fields_only():
    _, out = run(["betti", "cycle4", "--format", "machine", "--coeffs", "Fp:2"])
    last = json.loads(out.splitlines()[-1])
    assert last["poincare"] == {"0": 1, "3": 2, "6": 1}
    _, out = run(["betti", "cycle4", "--format", "machine", "--coeffs", "Z"])
    assert all("poincare" not in json.loads(x) for x in out.splitlines())


def test_betti_from_file(tmp_path):
    f = tmp_path / "k.json"
    f.write_text('{"m":2,"facets":[[1],[2]]}')
    code, out = run(["betti", str(f)])
    assert code == 0 and "1 | [1, 2] | 1 | []" in out


def test_verify_exit_codes():
    code, out = run(["verify", "cycle4"])
    assert code == 0 and out.rstrip().endswith("verdict: pass")
    code, out = run(["verify", "rp2_6", "--coeffs", "Z", "--coeffs", "Fp:2", "--coeffs", "Fp:3"])
    assert code == 0 and "skipped maximal complement" in out
    code, out = run(["verify", "rp2_6", "--coeffs", "Z", "--inject-fault"])
    assert code == 1
    assert "MISMATCH [hochster] Fp" not in out and "MISMATCH [hochster] Z" in out
    assert "J={1,2,3,4,5,6}" in out and out.rstrip().endswith("verdict: fail")


def test_verify_machine_diff():
    code, out = run(["verify", "cycle4", "--coeffs", "Z", "--format", "machine", "--inject-fault"])
    assert code == 1
    lines = [json.loads(x) for x in out.splitlines()]
    assert lines[0]["verdict"] == "fail"
    assert all(rec["J"] for rec in lines[1:])


def test_cap_exit_code(capsys):
    code, _ = run(["betti", "cycle6", "--complement", "maximal"])
    assert code == 3
    err = capsys.readouterr().err
    assert "J = {1,2,3,4,5,6}" in err and "|P_J| = 51" in err
    code, _ = run(["verify", "cycle4", "--max-gens", "1"])
    assert code == 3


def test_input_errors(capsys, tmp_path):
    assert run(["betti", "no_such_thing"])[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"m":4,"facets":[[1,2],[2,3]],"complement":[[1,2]]}')
    assert run(["betti", str(bad)])[0] == 2
    assert run(["betti", "cycle4", "--coeffs", "Fp:4"])[0] == 2
    assert run(["betti", "cycle4", "--complement", "given"])[0] == 2
    assert run(["nerve", "simplex3"])[0] == 2


def test_nerve_command():
    code, out = run(["nerve", "cycle4"])
    assert code == 0
    assert "2 | k | k" in out and "shift: agrees" in out
    code, out = run(["nerve", "rp2_6", "--format", "machine"])
    recs = [json.loads(x) for x in out.splitlines()]
    assert {"n": 3, "complement": {"rank": 0, "torsion": [2]}, "nerve": {"rank": 0, "torsion": [2]}} in recs


def test_corpus_list():
    code, out = run(["corpus", "list"])
    assert code == 0 and len(out.splitlines()) == len(corpus_names())
    code, out = run(["corpus", "show", "octahedron"])
    assert parse_complex(out).name == "octahedron"


@pytest.mark.parametrize("argv", [
    ["betti", "rp2_6", "--coeffs", "Z"],
    ["verify", "cycle4", "--format", "machine"],
    ["nerve", "octahedron"],
    ["corpus", "list", "--format", "machine"],
])
def test_output_is_deterministic(argv):
    assert run(argv) == run(argv)
