import hallinv
import pytest


def test_parse_roundtrip():
    p = hallinv.parse_presentation("gens: x, y\nrels: [x,y]")
    assert p.generators == ["x", "y"]
    assert p.relators == ["x*y*x^-1*y^-1"]
    assert hallinv.parse_presentation(str(p)) == p


def test_abelianization_klein_bottle():
    assert hallinv.abelianization(hallinv.fixture("N2")) == (1, [2])


def test_beta_horizontal_arrangement():
    beta = hallinv.beta(hallinv.fixture("A31425"), 2, 3)
    assert {d: c for d, c in beta.items() if d > 0} == {1: 5, 2: 1, 3: 10}


def test_hall_invariants():
    f4 = hallinv.fixture("F4")
    assert hallinv.delta_abelian(f4, [2, 4]) == 420
    assert hallinv.delta_mpqs(f4, 3, 2) == 840
    assert hallinv.delta_mpqs(hallinv.fixture("S4"), 3, 2) == 4477200


def test_oracle_matches_formula():
    s2 = hallinv.fixture("S2")
    assert hallinv.hom_count(s2, "a4", epi=True) == 24 * hallinv.delta_mpqs(s2, 3, 2)


def test_census_and_cover():
    assert hallinv.a2_a3(hallinv.fixture("braid_arrangement")) == (63, 409)
    assert hallinv.b1_cover_cyclic(hallinv.fixture("F2"), [1, 0], 2, 0) == 3


def test_cli_exit_codes():
    code, out, _ = hallinv.run(["delta", "--fixture", "A21345", "--target", "mpq:2,3", "--format", "text"])
    assert (code, out) == (0, "168\n")
    code, _, err = hallinv.run(["beta", "--fixture", "nope", "--p", "2", "--q", "0"])
    assert code == 1 and "unknown fixture" in err


def test_errors_are_python_exceptions():
    with pytest.raises(ValueError):
        hallinv.parse_presentation("gens: x\nrels: y")
