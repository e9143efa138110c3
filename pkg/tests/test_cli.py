"""Command-line interface: reports, file round trips, determinism, errors."""

import json

import pytest

from treescarf import SimplicialComplex, verify_sequence
from treescarf.cli import main
from treescarf.errors import InputFileError
from treescarf.io import (complex_to_data, ideal_to_data, load_complex,
                          load_ideal, load_sequence, parse_complex_data,
                          parse_ideal_data)

TAIL_FACETS = {"facets": [["1", "2", "3"], ["2", "3", "4"], ["4", "5"]]}
DIAMOND_FACETS = {"facets": [["1", "2", "4"], ["2", "3", "4"]]}
SPREAD_IDEAL = {"variables": ["x", "y", "z", "u"],
                "generators": ["x*y^2", "y*z", "x*z^2", "z*u"]}


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, data in (("tail", TAIL_FACETS), ("diamond", DIAMOND_FACETS),
                       ("ideal", SPREAD_IDEAL)):
        p = tmp_path / f"{name}.json"
        p.write_text(json.dumps(data))
        paths[name] = str(p)
    paths["tmp"] = tmp_path
    return paths


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- file formats -----------------------------------------------------------------

def test_complex_file_round_trip():
    c = parse_complex_data(TAIL_FACETS)
    assert parse_complex_data(complex_to_data(c)) == c


def test_ideal_file_round_trip():
    ideal = parse_ideal_data(SPREAD_IDEAL)
    assert parse_ideal_data(ideal_to_data(ideal)) == ideal


@pytest.mark.parametrize("data", [
    {},
    {"facets": []},
    {"facets": [[]]},
    {"facets": [["1", "1"]]},
    {"facets": [["1", "2"], ["2", "1"]]},
    {"facets": [["1", 2]]},
])
def test_bad_complex_data_rejected(data):
    with pytest.raises(InputFileError):
        parse_complex_data(data)


@pytest.mark.parametrize("data", [
    {"variables": ["x"]},
    {"variables": ["x"], "generators": []},
    {"variables": ["x"], "generators": ["x*"]},
    {"variables": ["x"], "generators": ["y"]},
    {"variables": ["x", "y"], "generators": ["x", "x*y"]},
])
def test_bad_ideal_data_rejected(data):
    with pytest.raises(InputFileError):
        parse_ideal_data(data)


def test_json_error_reports_location(tmp_path):
    p = tmp_path / "broken.json"
    p.write_text('{"facets": [["1",]}')
    with pytest.raises(InputFileError) as err:
        load_complex(str(p))
    assert "line" in str(err.value)


# -- commands ---------------------------------------------------------------------

def test_check_reports_tree_and_certificate(files, capsys):
    code, out, _ = run(capsys, "check", files["tail"])
    assert code == 0
    report = json.loads(out)
    assert report["command"] == "check"
    result = report["result"]
    assert result["tree"] and result["connected"] and result["forest"]
    assert result["f_vector"] == [5, 6, 2]
    assert result["collapse"]["steps"] == 6


def test_check_reports_witness_for_cycles(files, capsys):
    p = files["tmp"] / "cycle.json"
    p.write_text(json.dumps({"facets": [["1", "2"], ["2", "3"], ["1", "3"]]}))
    code, out, _ = run(capsys, "check", str(p))
    assert code == 0
    result = json.loads(out)["result"]
    assert not result["tree"]
    assert len(result["witness"]) == 3


def test_fvector_command(files, capsys):
    code, out, _ = run(capsys, "fvector", files["diamond"])
    assert code == 0
    assert json.loads(out)["result"]["f_vector"] == [4, 5, 2]


def test_supports_command(files, capsys):
    code, out, _ = run(capsys, "supports", files["diamond"], files["ideal"],
                       "--verify")
    assert code == 0
    result = json.loads(out)["result"]
    assert result == {
        "supports": True,
        "minimal": False,
        "failing_degree": None,
        "betti": [4, 4, 1],
        "f_vector": [4, 5, 2],
    }


def test_supports_reports_failing_degree(files, capsys):
    code, out, _ = run(capsys, "supports", files["diamond"], files["ideal"],
                       "--labels", "1,3,2,4")
    assert code == 0
    result = json.loads(out)["result"]
    assert not result["supports"]
    assert result["failing_degree"] == "x*y^2*z"


def test_supports_arity_mismatch(files, capsys):
    p = files["tmp"] / "short.json"
    p.write_text(json.dumps({"variables": ["x", "y"], "generators": ["x", "y"]}))
    code, out, err = run(capsys, "supports", files["diamond"], str(p))
    assert code == 2
    assert json.loads(err)["error"] == "ArityMismatchError"


def test_scarf_command(files, capsys):
    code, out, _ = run(capsys, "scarf", files["ideal"])
    assert code == 0
    result = json.loads(out)["result"]
    assert result["f_vector"] == [4, 4, 1]
    assert result["facets"] == [["1", "2"], ["2", "3", "4"]]


def test_betti_command(files, capsys):
    code, out, _ = run(capsys, "betti", files["ideal"])
    assert code == 0
    result = json.loads(out)["result"]
    assert result["betti"] == [4, 4, 1]
    assert result["by_degree"]["x*y^2*z"] == [0, 1]


def test_build_scarf_writes_a_loadable_ideal(files, capsys):
    out_path = str(files["tmp"] / "built.json")
    code, out, _ = run(capsys, "build-scarf", files["tail"],
                       "--variant", "Jprime", "--out", out_path)
    assert code == 0
    result = json.loads(out)["result"]
    assert result["verification"] == "EQUAL"
    ideal = load_ideal(out_path)
    assert len(ideal.generators) == 5
    assert ideal_to_data(ideal) == {k: result[k] for k in ("variables", "generators")}


def test_build_scarf_reduced_generators_print_exactly(files, capsys):
    p = files["tmp"] / "edge_triangle.json"
    p.write_text(json.dumps({"facets": [["1", "2"], ["2", "3", "4"]]}))
    code, out, _ = run(capsys, "build-scarf", str(p), "--variant", "Jprime")
    assert code == 0
    result = json.loads(out)["result"]
    assert result["generators"] == [
        "x_2*x_23*x_24*x_34*x_234",
        "x_1*x_34",
        "x_1*x_2*x_12*x_24",
        "x_1*x_2*x_12*x_23",
    ]


def test_supports_on_a_minimal_support(files, capsys):
    p = files["tmp"] / "edge_triangle.json"
    p.write_text(json.dumps({"facets": [["1", "2"], ["2", "3", "4"]]}))
    code, out, _ = run(capsys, "supports", str(p), files["ideal"])
    assert code == 0
    result = json.loads(out)["result"]
    assert result["supports"] and result["minimal"]
    assert result["betti"] == result["f_vector"] == [4, 4, 1]


def test_build_scarf_intermediate_is_seeded(files, capsys):
    code, first, _ = run(capsys, "build-scarf", files["tail"],
                         "--variant", "intermediate", "--seed", "9")
    code2, second, _ = run(capsys, "build-scarf", files["tail"],
                           "--variant", "intermediate", "--seed", "9")
    assert code == code2 == 0
    assert first == second
    report = json.loads(first)
    assert report["result"]["verification"] in ("EQUAL", "CONTAINS")
    assert "h" in report["result"]


def test_collapse_command_writes_verifiable_certificate(files, capsys):
    out_path = str(files["tmp"] / "cert.json")
    code, out, _ = run(capsys, "collapse", files["tail"], "--out", out_path)
    assert code == 0
    result = json.loads(out)["result"]
    assert result["collapsed_to_point"]
    sequence = load_sequence(out_path)
    complex_ = SimplicialComplex([set(f) for f in TAIL_FACETS["facets"]])
    assert verify_sequence(complex_, sequence) == (True, None)


def test_collapse_command_on_a_point(files, capsys):
    p = files["tmp"] / "point.json"
    p.write_text(json.dumps({"facets": [["1"]]}))
    code, out, _ = run(capsys, "collapse", str(p))
    assert code == 0
    result = json.loads(out)["result"]
    assert result["steps"] == 0 and result["collapsed_to_point"]


def test_reports_are_byte_identical_across_runs(files, capsys):
    first = run(capsys, "supports", files["diamond"], files["ideal"])
    second = run(capsys, "supports", files["diamond"], files["ideal"])
    assert first == second


def test_malformed_file_is_an_operational_error(files, capsys):
    p = files["tmp"] / "bad.json"
    p.write_text("{nope")
    code, out, err = run(capsys, "check", str(p))
    assert code == 2 and out == ""
    assert json.loads(err)["error"] == "InputFileError"


def test_missing_file_is_an_operational_error(files, capsys):
    code, _, err = run(capsys, "check", str(files["tmp"] / "absent.json"))
    assert code == 2
    assert "absent.json" in json.loads(err)["message"]


def test_bad_field_flag(files, capsys):
    code, _, err = run(capsys, "betti", files["ideal"], "--field", "6")
    assert code == 2
