import json

from matsim.cli import main

Z2 = '{"kind":"ZLoc","p":2}'


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_similar_x2_minus_5(capsys):
    code, out, _ = run(
        capsys,
        "similar",
        "--ring",
        Z2,
        "--in",
        '{"A": [["0","1"],["5","0"]], "B": [["-1","2"],["2","1"]]}',
    )
    assert code == 0
    doc = json.loads(out)
    assert doc == {
        "similar": False,
        "forms": ["Case22Main{n=0}", "Case22Extra{r=1,i=1}"],
    }


def test_class_number(capsys):
    code, out, _ = run(capsys, "class-number", "--ring", Z2, "--in", '{"f": "x^2-5"}')
    assert code == 0
    assert json.loads(out) == {"class_number": 2}


def test_lattice_free_x2_x_7(capsys):
    payload = json.dumps(
        {
            "d": -5,
            "f": "x^2-x+7",
            "generators": [["1/3", "0", "1/3", "0"], ["2", "1", "0", "0"]],
        }
    )
    code, out, _ = run(capsys, "lattice-free", "--in", payload)
    assert code == 0
    doc = json.loads(out)
    assert doc["free"] is False
    assert doc["steinitz"] == "(3, 2+w)"
    assert doc["coefficient_ideal"] == "(1)"
    assert doc["intersect_base"] == "(3, 2+w)"


def test_lattice_free_x2_minus_2(capsys):
    payload = json.dumps(
        {
            "d": -5,
            "f": "x^2-2",
            "generators": [["2", "0", "0", "0"], ["0", "0", "1/2", "1/2"]],
        }
    )
    code, out, _ = run(capsys, "lattice-free", "--in", payload)
    assert code == 0
    doc = json.loads(out)
    assert doc["free"] is True
    assert doc["steinitz"] == "(2)"
    assert doc["steinitz_generator"] == "2"
    assert "free_basis" in doc and "mult_matrix" in doc


def test_classify_witness_verified(capsys):
    code, out, _ = run(capsys, "classify", "--ring", Z2, "--in", '{"matrix": [["3","7"],["2","-3"]]}')
    assert code == 0
    doc = json.loads(out)
    assert doc["verified"] is True
    assert set(doc) == {"form", "canonical_matrix", "witness", "verified"}


def test_witness_command(capsys):
    code, out, _ = run(
        capsys,
        "witness",
        "--ring",
        Z2,
        "--in",
        '{"A": [["0","1"],["5","0"]], "B": [["1","1"],["4","-1"]]}',
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["similar"] is True and doc["verified"] is True


def test_class_list_insep(capsys):
    code, out, _ = run(
        capsys,
        "class-list",
        "--ring",
        '{"kind":"FpTLoc","p":2}',
        "--insep-bound",
        "5",
        "--in",
        '{"f": "x^2-t^3"}',
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["count"] == 2
    assert [c["form"] for c in doc["classes"]] == [
        "Insep{i=0,u=0,s=t^3}",
        "Insep{i=1,u=0,s=t^2}",
    ]


def test_lm_round_trip(capsys):
    code, out, _ = run(
        capsys,
        "lm-to-ideal",
        "--ring",
        '{"kind":"ZZ"}',
        "--in",
        '{"f": "x^2+6", "matrix": [["0","2"],["-3","0"]]}',
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["reduced_form"] == [2, 0, 3]
    code, out, _ = run(
        capsys,
        "lm-to-matrix",
        "--ring",
        '{"kind":"ZZ"}',
        "--in",
        json.dumps({"f": "x^2+6", "basis": doc["basis"]}),
    )
    assert code == 0
    assert "matrix" in json.loads(out)


def test_cross_check_flag(capsys):
    code, out, _ = run(
        capsys,
        "similar",
        "--ring",
        Z2,
        "--cross-check",
        "--in",
        '{"A": [["0","1"],["5","0"]], "B": [["-1","2"],["2","1"]], "N": 3}',
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["oracle"] == {"N": 3, "witness_mod": None}


def test_cross_check_flag_similar_pair(capsys):
    code, out, _ = run(
        capsys,
        "similar",
        "--ring",
        Z2,
        "--cross-check",
        "--in",
        '{"A": [["0","1"],["5","0"]], "B": [["1","1"],["4","-1"]], "N": 3}',
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["similar"] is True
    assert doc["oracle"]["witness_mod"] is not None


def test_exit_code_parse_error(capsys):
    code, _, err = run(capsys, "similar", "--ring", Z2, "--in", "{not json")
    assert code == 2 and "error" in err


def test_exit_code_bad_ring(capsys):
    code, _, err = run(capsys, "classify", "--ring", '{"kind":"Nope"}', "--in", '{"matrix": [["1","0"],["0","1"]]}')
    assert code == 2


def test_exit_code_precondition(capsys):
    # non-integral entry: library error -> exit 3
    code, _, err = run(capsys, "classify", "--ring", Z2, "--in", '{"matrix": [["1/2","0"],["0","1"]]}')
    assert code == 3 and "NotIntegral" in err


def test_exit_code_insep_bound(capsys):
    code, _, err = run(capsys, "class-list", "--ring", '{"kind":"FpTLoc","p":2}', "--in", '{"f": "x^2-t^3"}')
    assert code == 3 and "InsepBoundRequired" in err


def test_deterministic_output(capsys):
    argv = ["class-list", "--ring", Z2, "--in", '{"f": "x^2-5"}']
    _, out1, _ = run(capsys, *argv)
    _, out2, _ = run(capsys, *argv)
    assert out1 == out2
    assert out1.endswith("\n")


def test_file_io(tmp_path, capsys):
    payload = tmp_path / "job.json"
    payload.write_text('{"f": "x^2-5"}', encoding="utf-8")
    outfile = tmp_path / "result.json"
    code = main(["class-number", "--ring", Z2, "--in", str(payload), "--out", str(outfile)])
    assert code == 0
    assert json.loads(outfile.read_text()) == {"class_number": 2}
