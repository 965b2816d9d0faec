import os
from pathlib import Path

import pytest

import quivalg

FIXTURES = Path(os.environ.get("QUIVALG_FIXTURES", Path(__file__).resolve().parents[2] / "fixtures"))


def load(name, field="rat"):
    return quivalg.load_file(FIXTURES / name, field)


def test_dimensions():
    a = load("six_vertex_bound.quiver")
    assert a.dim == 20
    assert not a.relation_free
    assert quivalg.axioms_hold(a)
    assert len(a.basis) == 20
    t = quivalg.load("vertex 1 2\narrow a 1 2\n")
    assert quivalg.derivation_dim(t) == 2
    assert quivalg.lie_dim(t) == 4


def test_structural_checks():
    a = load("four_vertex.quiver")
    assert quivalg.jordan_equals_der(a)
    assert quivalg.lie_equals_der_plus_phi(a)
    assert quivalg.central_derivations_vanish(a)
    assert quivalg.w_full(a)
    assert quivalg.strip_report(a)["all_conditions_hold"]


def test_decompose_and_check():
    a = load("three_vertex.quiver")
    theta = (FIXTURES / "three_vertex_theta.json").read_text()
    assert quivalg.is_map_of_kind(a, theta, "lie")
    assert not quivalg.is_map_of_kind(a, theta, "der")
    rep = quivalg.decompose(a, theta)
    assert rep["k"] == {"1": "1/1", "2": "2/1", "3": "3/1"}


def test_faithful():
    rep = quivalg.faithful(load("four_vertex.quiver"), "1-e_1")
    assert rep["left"]["faithful"] is False
    assert rep["left"]["witness_verified"] is True


def test_errors():
    with pytest.raises(quivalg.InputError):
        quivalg.load("vertex 1 2\narrow a 1 2\narrow b 2 1\n")
    with pytest.raises(quivalg.PreconditionError):
        quivalg.jordan_dim(load("four_vertex.quiver", "fp:2"))
    assert issubclass(quivalg.InputError, quivalg.QuivalgError)


def test_verify_small_corpus():
    rep = quivalg.verify(count=10, seed=3)
    assert rep["ok"] is True
    assert rep["instances"] == 10
