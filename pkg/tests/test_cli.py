import io
import json
import subprocess
import sys
import time
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st
from strategies import X, measures, rationals

from measmonad import (
    FiniteLabeled,
    IntegerLine,
    KindMismatch,
    MeasureSpace,
    ProductSpace,
    RationalLine,
    RationalVector,
    SignedMeasure,
    from_atoms,
    vector_algebra,
)
from measmonad.cli import (
    EmptyRegion,
    MalformedRational,
    ParseError,
    SchemaError,
    dump_measure_document,
    grid_uniform,
    parse_measure_document,
    run,
)
from measmonad.cli.grid import box, triangle
from measmonad.monad import kappa


def doc(space, atoms):
    return json.dumps({"format_version": 1, "space": space, "atoms": atoms})


FINITE_AB = {"kind": "finite", "labels": ["a", "b"]}


def invoke(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


@pytest.fixture
def write(tmp_path):
    def _write(text, name="m.json"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return _write


# documents


def test_duplicate_atoms_merge():
    mu = parse_measure_document(doc(FINITE_AB, [["a", "1/2"], ["a", "1/2"]]))
    assert mu == from_atoms(FiniteLabeled(frozenset("ab")), [("a", 1)])


def test_zero_denominator_is_malformed():
    with pytest.raises(MalformedRational):
        parse_measure_document(doc(FINITE_AB, [["a", "1/0"]]))


@pytest.mark.parametrize("weight", ["0.5", "1e3", "1/2/3", " ", "half", True, 0.5, None])
def test_non_rational_weights_are_malformed(weight):
    with pytest.raises(MalformedRational):
        parse_measure_document(doc(FINITE_AB, [["a", weight]]))


def test_vector_of_wrong_arity():
    with pytest.raises(KindMismatch):
        parse_measure_document(doc({"kind": "vector", "dimension": 2}, [[["1", "2", "3"], "1"]]))


@pytest.mark.parametrize(
    "space, point",
    [(FINITE_AB, "z"), ({"kind": "integers"}, "1/2"), ({"kind": "rationals"}, ["1"]), (FINITE_AB, 1)],
)
def test_points_must_fit_the_space(space, point):
    with pytest.raises(KindMismatch):
        parse_measure_document(doc(space, [[point, "1"]]))


def test_json_errors_carry_a_position():
    with pytest.raises(ParseError) as info:
        parse_measure_document('{\n  "format_version": 1,\n  "space": }')
    assert info.value.line == 3 and info.value.column is not None


@pytest.mark.parametrize(
    "text",
    [
        "[]",
        json.dumps({"space": FINITE_AB, "atoms": []}),
        json.dumps({"format_version": 2, "space": FINITE_AB, "atoms": []}),
        doc({"kind": "torus"}, []),
        doc({"kind": "vector", "dimension": 0}, []),
        doc({"kind": "finite", "labels": []}, []),
        doc(FINITE_AB, [["a"]]),
        doc(FINITE_AB, "a"),
    ],
)
def test_schema_violations(text):
    with pytest.raises(SchemaError):
        parse_measure_document(text)


@given(measures())
def test_round_trip_on_labels(mu):
    text = dump_measure_document(mu)
    assert parse_measure_document(text) == mu
    assert dump_measure_document(parse_measure_document(text)) == text


@given(st.lists(st.tuples(st.tuples(rationals, rationals), rationals), max_size=5))
def test_round_trip_on_vectors(pairs):
    mu = from_atoms(RationalVector(2), pairs)
    assert parse_measure_document(dump_measure_document(mu)) == mu


@given(measures(MeasureSpace(X), points=measures(max_atoms=3), max_atoms=3))
def test_round_trip_on_nested_measures(M):
    assert parse_measure_document(dump_measure_document(M)) == M


def test_round_trip_on_other_kinds():
    P = ProductSpace((IntegerLine(), RationalLine()))
    for mu in (
        from_atoms(IntegerLine(), [(-3, F(1, 2)), (7, 2)]),
        from_atoms(RationalLine(), [(F(-1, 3), 1)]),
        from_atoms(P, [((1, F(1, 2)), 3)]),
    ):
        assert parse_measure_document(dump_measure_document(mu)) == mu


# grid measures


def test_unit_square_at_resolution_one_is_a_point_mass():
    mu = grid_uniform("unit-square", 1)
    assert mu == from_atoms(RationalVector(2), [((F(1, 2), F(1, 2)), 1)])


@pytest.mark.parametrize("k", [1, 2, 3, 7, 16, 64])
def test_unit_square_barycentre_is_exact(k):
    mu = grid_uniform("unit-square", k)
    assert len(mu.atoms) == k * k
    assert sum(w for _, w in mu.atoms) == 1
    assert vector_algebra(2)(mu) == (F(1, 2), F(1, 2))


def triangle_centres(k):
    """Grid centres ((2i+1)/2k, (2j+1)/2k) inside x + y <= 1: exactly i + j <= k - 1."""
    return [(F(2 * i + 1, 2 * k), F(2 * j + 1, 2 * k)) for i in range(k) for j in range(k) if i + j <= k - 1]


@pytest.mark.parametrize("k", [1, 2, 5, 64])
def test_triangle_grid_matches_the_index_oracle(k):
    mu = grid_uniform(triangle((0, 0), (1, 0), (0, 1)), k)
    assert sorted(mu.support) == triangle_centres(k)
    assert {w for _, w in mu.atoms} == {F(1, len(triangle_centres(k)))}


def test_triangle_centroid_converges():
    T = triangle((0, 0), (1, 0), (0, 1))
    errors = []
    for k in (64, 128, 256):
        x = vector_algebra(2)(grid_uniform(T, k))
        errors.append(max(abs(c - F(1, 3)) for c in x))
    assert errors[-1] <= F(1, 50)
    # x-coordinate of the grid centroid is 1/3 + 1/(6k)
    assert errors == [F(1, 6 * k) for k in (64, 128, 256)]


def closed_triangle_contains(t, p):
    a, b, c = t

    def cross(o, u, v):
        return (u[0] - o[0]) * (v[1] - o[1]) - (u[1] - o[1]) * (v[0] - o[0])

    d = [cross(a, b, p), cross(b, c, p), cross(c, a, p)]
    return not (any(x < 0 for x in d) and any(x > 0 for x in d))


vertices = st.tuples(st.integers(0, 12), st.integers(0, 12)).map(lambda v: (F(v[0], 12), F(v[1], 12)))


@given(st.tuples(vertices, vertices, vertices), st.integers(1, 6))
def test_triangle_grid_matches_pointwise_membership(t, k):
    xs, ys = [v[0] for v in t], [v[1] for v in t]
    if min(xs) == max(xs) or min(ys) == max(ys):
        return
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    centres = [
        (x0 + (2 * i + 1) * (x1 - x0) / (2 * k), y0 + (2 * j + 1) * (y1 - y0) / (2 * k))
        for i in range(k)
        for j in range(k)
    ]
    expected = sorted(p for p in centres if closed_triangle_contains(t, p))
    assert sorted(grid_uniform(triangle(*t), k).support) == expected


def test_box_region():
    mu = grid_uniform(box((0, 0), (2, 1)), 4)
    assert vector_algebra(2)(mu) == (1, F(1, 2))
    with pytest.raises(EmptyRegion):
        box((0, 0), (0, 1))


def test_flat_triangle_is_empty():
    with pytest.raises(EmptyRegion):
        grid_uniform(triangle((F(1, 2), 0), (F(1, 2), 1), (F(1, 2), F(1, 3))), 4)


def test_resolution_must_be_positive():
    with pytest.raises(ValueError):
        grid_uniform("unit-square", 0)


# commands


def test_tv(write):
    code, out = invoke("tv", write(doc(FINITE_AB, [["a", "2"], ["b", "-3"]])))
    assert (code, out) == (0, "5\n")


def test_jordan(write):
    code, out = invoke("jordan", write(doc(FINITE_AB, [["a", "2"], ["b", "-3"]])))
    result = json.loads(out)
    assert code == 0
    assert result["positive_part"]["atoms"] == [["a", "2"]]
    assert result["negative_part"]["atoms"] == [["b", "3"]]
    assert result["hahn_positive_set"] == ["a"] and result["hahn_negative_set"] == ["b"]


def test_push_mod(write):
    path = write(doc({"kind": "integers"}, [[1, "1"], [3, "1/2"], [4, "-1"]]))
    code, out = invoke("push", path, "--map", "mod", "--k", "2")
    assert code == 0
    assert parse_measure_document(out) == from_atoms(IntegerLine(), [(1, F(3, 2)), (0, -1)])


def test_push_affine(write):
    path = write(doc({"kind": "vector", "dimension": 2}, [[["1", "1"], "2"]]))
    code, out = invoke("push", path, "--map", "affine", "--matrix", "1,0;0,2", "--offset", "0,1")
    assert code == 0
    assert parse_measure_document(out) == from_atoms(RationalVector(2), [((1, 3), 2)])


def test_kappa(write):
    M = from_atoms(
        MeasureSpace(X),
        [(from_atoms(X, [("a", 1)]), 2), (from_atoms(X, [("b", 3)]), -1)],
    )
    code, out = invoke("kappa", write(dump_measure_document(M)))
    assert code == 0
    assert parse_measure_document(out) == kappa(M) == from_atoms(X, [("a", 2), ("b", -3)])


def test_kappa_needs_a_nested_measure(write):
    code, _ = invoke("kappa", write(doc(FINITE_AB, [["a", "1"]])))
    assert code == 2


def test_integrate_and_barycenter(write):
    path = write(doc({"kind": "vector", "dimension": 2}, [[["0", "0"], "1/4"], [["4", "0"], "3/4"]]))
    assert invoke("barycenter", path) == (0, "(3, 0)\n")
    assert invoke("integrate", path, "--map", "proj", "--index", "0") == (0, "3\n")
    assert invoke("--decimal", "2", "integrate", path, "--map", "affine", "--matrix", "1,1") == (0, "(3.00)\n")


def test_integrate_on_the_integers(write):
    path = write(doc({"kind": "integers"}, [[2, "1/2"], [-1, "3"]]))
    assert invoke("integrate", path) == (0, "-2\n")


def test_barycenter_rejects_signed_measures(write):
    path = write(doc({"kind": "rationals"}, [["1", "2"], ["0", "-1"]]))
    assert invoke("barycenter", path)[0] == 2


def test_pettis(write):
    path = write(doc({"kind": "vector", "dimension": 2}, [[["1", "0"], "1/2"], [["0", "2"], "1/2"]]))
    assert invoke("pettis", path, "--functionals", "1,1;2,-3") == (0, "(1/2, 1)\n")
    assert invoke("pettis", path, "--functionals", "1,1,1")[0] == 2


def test_bad_inputs_exit_two(write, tmp_path):
    assert invoke("tv", str(tmp_path / "missing.json"))[0] == 2
    assert invoke("tv", write("{not json"))[0] == 2
    assert invoke("tv", write(doc(FINITE_AB, [["a", "1/0"]])))[0] == 2
    assert invoke("push", write(doc(FINITE_AB, [["a", "1"]])), "--map", "mod", "--k", "2")[0] == 2
    assert invoke("frobnicate")[0] == 2
    assert invoke("check-laws", "--cases", "0")[0] == 2
    assert invoke("demo-centroid", "--region", "triangle", "--vertices", "0,0;1,0")[0] == 2


def test_demo_centroid():
    assert invoke("demo-centroid", "--region", "unit-square", "--resolution", "64") == (0, "(1/2, 1/2)\n")
    code, out = invoke("--decimal", "4", "demo-centroid", "--region", "triangle", "--resolution", "256")
    assert (code, out) == (0, "(0.3340, 0.3340)\n")
    assert invoke("demo-centroid", "--region", "box", "--lo", "0,0", "--hi", "2,1", "--resolution", "3") == (
        0,
        "(1, 1/2)\n",
    )


def test_check_laws_passes():
    code, out = invoke("check-laws", "--seed", "42", "--cases", "20")
    assert code == 0
    assert out.strip().endswith("ALL LAWS HOLD")
    assert "PASS monad:associativity@IntegerLine: 20 cases" in out


def test_check_laws_json():
    code, out = invoke("check-laws", "--seed", "1", "--cases", "5", "--suite", "pettis", "--json")
    report = json.loads(out)
    assert code == 0 and report["passed"] and report["seed"] == 1
    assert all("pettis" in law for law in report["checks"])


def test_check_laws_exits_one_on_failure(monkeypatch):
    cli_main = sys.modules["measmonad.cli.main"]
    real = cli_main.check_monad_laws

    def broken(X, seed, cases):
        return real(X, seed, cases, flatten=lambda M: kappa(SignedMeasure(M.space, M.atoms[:-1])))

    monkeypatch.setattr(cli_main, "check_monad_laws", broken)
    code, out = invoke("check-laws", "--seed", "42", "--cases", "10", "--suite", "monad")
    assert code == 1
    assert "FAILURE monad:" in out


def test_stdin_and_module_entry_point():
    text = doc(FINITE_AB, [["a", "2"], ["b", "-3"]])
    proc = subprocess.run(
        [sys.executable, "-m", "measmonad", "tv", "-"], input=text, capture_output=True, text=True, timeout=60
    )
    assert proc.returncode == 0 and proc.stdout == "5\n"


def test_demo_is_fast():
    start = time.perf_counter()
    assert invoke("demo-centroid", "--region", "triangle", "--resolution", "256")[0] == 0
    assert time.perf_counter() - start <= 5
