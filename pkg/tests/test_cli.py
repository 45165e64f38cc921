import json
import subprocess
import sys
import textwrap
from fractions import Fraction as Q

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nndideals.cli import main
from nndideals.documents import (
    family_from_document,
    ideal_from_document,
    ideal_from_infix,
    ideal_to_document,
    load_ideal,
    parse_infix,
    parse_rational,
    polyhedron_from_dict,
    polyhedron_to_dict,
)
from nndideals.errors import ParseError, UnsupportedDimension
from nndideals.geometry import hull_staircase
from nndideals.svg import staircase_svg

DEGENERATE_DOC = textwrap.dedent(
    """\
    variables: [x, y]
    generators:
      - - {coeff: "1", exp: [4, 0]}
        - {coeff: "1", exp: [0, 4]}
      - - {coeff: "1", exp: [1, 2]}
        - {coeff: 1, exp: [2, 1]}
    """
)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def degenerate_file(tmp_path):
    path = tmp_path / "degenerate.yaml"
    path.write_text(DEGENERATE_DOC)
    return str(path)


class TestParsing:
    def test_rationals(self):
        assert parse_rational("3/4") == Q(3, 4)
        assert parse_rational(-2) == -2
        assert parse_rational(" -5 / 10 ") == Q(-1, 2)
        for bad in (0.5, True, "1.5", "1/0", None):
            with pytest.raises(ParseError):
                parse_rational(bad)

    def test_infix(self):
        f = parse_infix("x^4 + y^4 - 3/2*x*y^2 + 2xy", "xy")
        assert f.as_dict() == {(4, 0): 1, (0, 4): 1, (1, 2): Q(-3, 2), (1, 1): 2}
        assert parse_infix("x*y*x", "xy").as_dict() == {(2, 1): 1}
        assert parse_infix("x - x", "xy").is_zero()
        for bad in ("", "x^", "w", "x + + y", "(x+y)"):
            with pytest.raises(ParseError):
                parse_infix(bad, "xy")

    def test_infix_ideal(self):
        names, I = ideal_from_infix("x^4+y^4, xy^2+x^2y")
        assert names == ["x", "y"] and len(I) == 2
        names, I = ideal_from_infix("z^2, x", "xyz")
        assert I.dim == 3

    def test_document(self):
        names, I = ideal_from_document(__import__("yaml").safe_load(DEGENERATE_DOC))
        assert names == ["x", "y"]
        assert I.generators[1].as_dict() == {(1, 2): 1, (2, 1): 1}

    def test_document_with_infix_generator(self):
        doc = {"variables": ["x", "y"], "generators": ["x^2 + y^2", "xy"]}
        assert len(ideal_from_document(doc)[1]) == 2

    @pytest.mark.parametrize(
        "doc, fragment",
        [
            ({"variables": ["x", "y"], "generators": [[{"coeff": 0.5, "exp": [1, 0]}]]}, "generators[0][0].coeff"),
            ({"variables": ["x", "y"], "generators": [[{"coeff": "1", "exp": [1]}]]}, "generators[0][0].exp"),
            ({"variables": ["x", "y"], "generators": [[{"coeff": "0", "exp": [1, 0]}]]}, "nonzero"),
            ({"variables": ["x", "y"], "generators": [[{"coeff": "1", "exp": [1, -1]}]]}, "nonnegative"),
            ({"variables": ["x", "x"], "generators": ["x"]}, "duplicate"),
            ({"generators": ["x"]}, "variables"),
            ({"variables": ["x"], "generators": []}, "generators"),
            ([1, 2], "mapping"),
        ],
    )
    def test_document_errors(self, doc, fragment):
        with pytest.raises(ParseError, match=fragment.replace("[", r"\[").replace("]", r"\]")):
            ideal_from_document(doc)

    def test_malformed_yaml_reports_line(self, tmp_path):
        path = tmp_path / "bad.yaml"
        path.write_text("variables: [x, y]\ngenerators:\n  - [ {coeff: 1, exp: [1, 0]\n")
        with pytest.raises(ParseError, match="line"):
            load_ideal(path)

    def test_family_documents(self):
        ideal_doc = {"variables": ["x", "y"], "generators": ["x^2+y^2", "xy"]}
        names, F = family_from_document({"kind": "power", "ideal": ideal_doc})
        assert F.kind == "power"
        names, F = family_from_document({"kind": "prefix", "members": [ideal_doc, ideal_doc], "period": 1, "rule": "constant"})
        assert F.period == 1 and F.note == "constant"
        with pytest.raises(ParseError):
            family_from_document({"kind": "prefix", "members": [ideal_doc], "period": 2})
        with pytest.raises(ParseError):
            family_from_document({"kind": "other"})
        with pytest.raises(ParseError, match=r"members\[1\]"):
            family_from_document({"kind": "prefix", "members": [ideal_doc, {"variables": ["x", "y"], "generators": [[{"coeff": 1.0, "exp": [1, 1]}]]}]})

    def test_ideal_document_round_trip(self):
        names, I = ideal_from_infix("x^4+y^4, -3/2xy^2+x^2y")
        again = ideal_from_document(ideal_to_document(I, names))[1]
        assert again == I


points = st.lists(
    st.tuples(st.fractions(0, 6, max_denominator=4), st.fractions(0, 6, max_denominator=4)), min_size=1, max_size=5
)


class TestSerialization:
    @given(points)
    def test_polyhedron_round_trip(self, pts):
        P = hull_staircase(pts)
        data = json.loads(json.dumps(polyhedron_to_dict(P)))
        assert polyhedron_from_dict(data) == P

    def test_inconsistent_facets(self):
        data = polyhedron_to_dict(hull_staircase([(1, 0), (0, 1)]))
        data["facets"][0]["rhs"] = "7"
        with pytest.raises(ParseError):
            polyhedron_from_dict(data)


class TestSvg:
    def test_deterministic(self):
        P = hull_staircase([(4, 0), (2, 1), (1, 2), (0, 4)])
        a, b = staircase_svg(P), staircase_svg(hull_staircase([(0, 4), (1, 2), (2, 1), (4, 0)]))
        assert a == b
        assert a.count('class="vertex"') == 4 and "(2,1)" in a and 'class="axis"' in a
        assert 'class="covolume"' in a and 'class="polyhedron"' in a

    def test_dimension(self):
        with pytest.raises(UnsupportedDimension):
            staircase_svg(hull_staircase([(1, 0, 0)]))

    def test_not_cofinite_has_no_covolume_region(self):
        svg = staircase_svg(hull_staircase([(2, 1), (1, 3)]))
        assert 'class="covolume"' not in svg and "(1,3)" in svg


class TestCommands:
    def test_gamma(self, capsys, degenerate_file, tmp_path):
        code, out, _ = run(capsys, "gamma", "@rsop-principal", "--json")
        assert code == 0
        assert json.loads(out)["vertices"] == [["1", "3"], ["2", "1"]]
        code, out, _ = run(capsys, "gamma", "@three-variables")
        assert code == 0 and "(0, 3, 1)" in out and "(2, 5, 4)" not in out
        code, out, _ = run(capsys, "gamma", "-e", "x^2y^3", "--json")
        assert json.loads(out)["vertices"] == [["2", "3"]]
        svg = tmp_path / "plot.svg"
        code, out, _ = run(capsys, "gamma", degenerate_file, "--svg", str(svg))
        first = svg.read_bytes()
        run(capsys, "gamma", degenerate_file, "--svg", str(svg))
        assert code == 0 and first == svg.read_bytes()

    def test_gamma_svg_needs_two_variables(self, capsys, tmp_path):
        code, _, err = run(capsys, "gamma", "@three-variables", "--svg", str(tmp_path / "p.svg"))
        assert code == 3 and "UnsupportedDimension" in err

    def test_covol_and_mult(self, capsys, degenerate_file):
        code, out, _ = run(capsys, "mult", degenerate_file, "--json")
        report = json.loads(out)
        assert code == 0
        assert (report["covol"], report["d_factorial_covol"], report["multiplicity"]) == ("11/2", "11", 12)
        code, out, _ = run(capsys, "mult", "-e", "x^2, y^3")
        assert "co-volume: 3" in out and "multiplicity: 6" in out and "EQUAL" in out
        code, out, _ = run(capsys, "mult", "-e", "x^2+y^2, xy", "--json")
        report = json.loads(out)
        assert (report["covol"], report["d_factorial_covol"], report["multiplicity"]) == ("2", "4", 4)
        code, out, _ = run(capsys, "covol", "@degenerate")
        assert "11/2" in out

    def test_nnd(self, capsys, degenerate_file):
        code, out, _ = run(capsys, "nnd", degenerate_file, "--route", "both", "--json")
        report = json.loads(out)
        assert code == 0 and report["nnd"] is False and report["failing_faces"] == ["conv{(1,2), (2,1)}"]
        code, out, _ = run(capsys, "nnd", "@J3", "--route", "both", "--json")
        report = json.loads(out)
        assert report["nnd"] is True and report["closure"] == [[0, 3], [1, 2], [2, 1], [3, 0]]
        code, out, _ = run(capsys, "nnd", "-e", "x^3, xy, y^4")
        assert code == 0 and "verdict: NND" in out

    def test_face_route_dimension(self, capsys):
        code, _, err = run(capsys, "nnd", "@three-variables", "--route", "face")
        assert code == 3

    def test_family(self, capsys):
        code, out, _ = run(capsys, "family", "@period-two", "--json")
        fam = json.loads(out)["family"]
        assert code == 0 and fam["c"] == 2 and fam["e"] == "1" and fam["verdict"] == "noetherian-certified"
        code, out, _ = run(capsys, "family", "@half-ceiling", "--budget", "40", "--json")
        fam = json.loads(out)["family"]
        assert fam["verdict"] == "non-polyhedral-up-to-N" and fam["c"] is None
        code, out, _ = run(capsys, "family", "@degenerate-powers", "--budget", "3")
        assert "c = 1" in out and "e = 12" in out and "= 11" in out and "UNEQUAL" in out

    def test_family_document(self, capsys, tmp_path):
        path = tmp_path / "fam.yaml"
        path.write_text(
            "kind: power\nrule: squares\nideal:\n  variables: [x, y]\n  generators: ['x^2', 'y^2']\n"
        )
        code, out, _ = run(capsys, "family", str(path), "--budget", "3")
        assert code == 0 and "EQUAL" in out

    def test_exit_codes(self, capsys, tmp_path):
        assert run(capsys, "gamma", str(tmp_path / "missing.yaml"))[0] == 2
        bad = tmp_path / "bad.yaml"
        bad.write_text("variables: [x, y]\ngenerators: [[{coeff: 0.25, exp: [1, 0]}]]\n")
        code, _, err = run(capsys, "gamma", str(bad))
        assert code == 2 and "generators[0][0].coeff" in err
        assert run(capsys, "covol", "-e", "xy")[0] == 3
        assert run(capsys, "mult", "-e", "x + y")[0] == 3
        assert run(capsys, "mult", "-e", "x^3+y^3, x^2y, xy^2", "--budget", "3")[0] == 4
        assert run(capsys, "gamma", "@nope")[0] == 2

    def test_route_disagreement_exit(self, capsys, monkeypatch):
        import nndideals.cli as cli
        from nndideals.nnd import MultiplicityComparison

        monkeypatch.setattr(cli, "compare_multiplicity", lambda I, **kw: MultiplicityComparison(13, Q(12)))
        code, out, _ = run(capsys, "nnd", "-e", "x^3+y^3, x^2y, xy^2", "--route", "both")
        assert code == 5 and "DISAGREE" in out

    def test_module_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-m", "nndideals", "covol", "-e", "x^4+y^4, xy^2+x^2y", "--json"],
            capture_output=True,
            text=True,
            check=True,
        )
        assert json.loads(proc.stdout)["covol"] == "11/2"
