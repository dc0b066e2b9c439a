import dataclasses
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from tarski_models import cartesian as cart
from tarski_models import klein
from tarski_models.axioms import (
    AXIOM_IDS,
    AXIOMS,
    Outcome,
    check_axiom,
    check_suite,
    evaluate_instance,
    get_axiom,
    parse_axiom_list,
    sample_check,
    trial_rng,
    verify_certificate,
)
from tarski_models.bindings import cartesian_binding, klein_binding
from tarski_models.cartesian import vec
from tarski_models.errors import InputError, NotCheckableError
from tarski_models.klein import kp
from tarski_models.report import Certificate

CART = cartesian_binding(2)
KLEIN = klein_binding()


def V(*xs):
    return vec(*(F(x) for x in xs))


# ------------------------------------------------------------ statements


def test_axiom_ids():
    expected = {"A0", "A1", "A2", "A2p", "A3", "A4", "A5", "A6", "A7", "A7p", "A8",
                "A9", "A9p", "A10", "A10p", "A11", "A11p", "A14", "A15"}
    assert set(AXIOM_IDS) == expected
    assert not AXIOMS["A11"].checkable and not AXIOMS["A11p"].checkable


@pytest.mark.parametrize("alias,canon", [("A2'", "A2p"), ("A10′", "A10p"), (" A7p ", "A7p")])
def test_aliases(alias, canon):
    assert get_axiom(alias).id == canon


def test_axiom_list_parsing():
    assert parse_axiom_list("A1, A2',A10p") == ["A1", "A2p", "A10p"]
    with pytest.raises(InputError):
        parse_axiom_list("A1,A12")
    with pytest.raises(InputError):
        parse_axiom_list(" , ")


# ------------------------------------------------------------ evaluation


def test_evaluate_examples():
    ev = evaluate_instance("A14", CART, (V(0, 0), V(1, 1), V(2, 2)))
    assert ev.outcome is Outcome.CONCLUSION_TRUE
    ev = evaluate_instance("A3", CART, (V(0, 0), V(1, 0), V(5, 5)))
    assert ev.outcome is Outcome.PREMISE_FALSE


def test_klein_proclus_instance_fails_with_forced_y():
    from tarski_models.klein import proclus_instance

    ev = evaluate_instance("A10p", KLEIN, proclus_instance(kp(0, F(3, 4))))
    assert ev.outcome is Outcome.CONCLUSION_FALSE
    assert ev.evidence["meet"] == "3/2,0"
    assert ev.evidence["forced_y"]["y"] == "3/2,0"
    assert ev.evidence["forced_y"]["y_norm2"] == "9/4"


def test_arity_and_missing_oracle():
    with pytest.raises(InputError):
        evaluate_instance("A1", CART, (V(0, 0),))
    with pytest.raises(NotCheckableError):
        evaluate_instance("A10", KLEIN, klein.euclid_counterexample_config())
    with pytest.raises(NotCheckableError):
        evaluate_instance("A11", CART, ())


def test_oracle_witnesses_are_checked():
    liar = dataclasses.replace(CART, witnesses={"A4": lambda a, b, c, d: (a,)})
    ev = evaluate_instance("A4", liar, (V(0, 0), V(1, 0), V(0, 0), V(0, 1)))
    assert ev.outcome is Outcome.CONCLUSION_FALSE
    assert ev.evidence["witness"] == ["0,0"]


# -------------------------------------------------------------- sampling


def test_sample_check_a15():
    r = sample_check("A15", CART, 1000, 42)
    assert (r.status, r.premise_hits, r.failures) == ("PASS", 1000, 0)


def test_sample_check_a5():
    r = sample_check("A5", CART, 500, 7)
    assert r.failures == 0 and r.premise_hits == 500


def test_sample_check_klein_proclus():
    r = sample_check("A10p", KLEIN, 200, 3)
    assert r.status == "FAIL" and r.failures >= 1
    assert r.certificate is not None
    assert verify_certificate(r.certificate, KLEIN)


def test_vacuity_guard():
    never = dataclasses.replace(CART, generators={"A3": lambda rng: (V(0, 0), V(1, 0), V(2, 2))})
    r = sample_check("A3", never, 20, 0)
    assert r.status == "UNKNOWN" and r.premise_hits == 0 and r.note


def test_missing_generator_is_not_checked():
    r = check_axiom("A10", KLEIN, 10, 0)
    assert r.status == "NOT-CHECKED" and r.certificate is None
    assert check_axiom("A11", CART, 10, 0).status == "NOT-CHECKED"


def test_trial_rng_is_order_independent():
    assert trial_rng(5, "A1", 3).random() == trial_rng(5, "A1", 3).random()
    assert trial_rng(5, "A1", 3).random() != trial_rng(5, "A1", 4).random()


def test_determinism():
    a = [r.to_record() for r in check_suite(CART, ["A2p", "A7p", "A9p"], 50, 11)]
    b = [r.to_record() for r in check_suite(cartesian_binding(2), ["A2p", "A7p", "A9p"], 50, 11)]
    assert a == b


def test_generators_satisfy_premises():
    for ax in ("A2", "A2p", "A3", "A5", "A7", "A7p", "A9", "A9p", "A10", "A10p", "A14", "A15"):
        r = sample_check(ax, CART, 100, 1)
        assert r.premise_hits == 100, ax


@pytest.mark.parametrize("dim", [1, 3])
def test_other_dimensions(dim):
    b = cartesian_binding(dim)
    for ax in ("A1", "A2p", "A3", "A4", "A5", "A7", "A7p", "A10", "A14", "A15"):
        r = check_axiom(ax, b, 60, 2)
        assert r.status in ("PASS", "UNKNOWN"), (ax, r.status)
        assert r.failures == 0
    assert check_axiom("A8", b, 5, 2).status == ("PASS" if dim == 3 else "NOT-CHECKED")


def test_one_dimensional_pasch_is_vacuous():
    # a line holds no non-collinear triangle, so the premise never fires
    r = check_axiom("A7p", cartesian_binding(1), 20, 0)
    assert r.status == "UNKNOWN" and r.premise_hits == 0


# ----------------------------------------------- cross-model consistency


@settings(max_examples=60)
@given(st.integers(0, 10**6))
def test_pasch_witness_satisfies_a7p(seed):
    pts = CART.generators["A7p"](trial_rng(seed, "A7p", 0))
    x, _, _ = cart.pasch_witness(*pts)
    assert AXIOMS["A7p"].conclusion(CART, *pts, x)
    assert evaluate_instance("A7p", CART, pts).outcome is Outcome.CONCLUSION_TRUE


@settings(max_examples=60)
@given(st.integers(0, 10**6))
def test_perpendicular_bisector_instances_are_collinear(seed):
    a, b, c, p, q = CART.generators["A9p"](trial_rng(seed, "A9p", 0))
    assert all(cart.cong_perp_check(z, p, q) for z in (a, b, c))
    assert cart.col_2d(a, b, c)
    assert evaluate_instance("A9p", CART, (a, b, c, p, q)).outcome is Outcome.CONCLUSION_TRUE


def test_klein_positive_suite():
    reports = check_suite(KLEIN, ["A1", "A2p", "A3", "A14", "A15"], 100, 5)
    assert all(r.status == "PASS" and r.premise_hits == 100 for r in reports)


# ---------------------------------------------------------- certificates


def test_tampered_certificate_is_rejected():
    r = sample_check("A10p", KLEIN, 5, 3)
    cert = r.certificate
    assert verify_certificate(cert, KLEIN)
    pts = list(cert.points)
    pts[-1] = "0,4/5" if pts[-1] != "0,4/5" else "0,5/6"
    assert not verify_certificate(dataclasses.replace(cert, points=tuple(pts)), KLEIN)
    pts = list(cert.points)
    pts[0] = "1/100,1/2"
    assert not verify_certificate(dataclasses.replace(cert, points=tuple(pts)), KLEIN)


def test_malformed_certificates_are_rejected():
    good = sample_check("A10p", KLEIN, 1, 3).certificate
    assert not verify_certificate(dataclasses.replace(good, points=good.points[:-1]), KLEIN)
    assert not verify_certificate(dataclasses.replace(good, points=("2,2",) * 6), KLEIN)
    assert not verify_certificate(dataclasses.replace(good, axiom="A99"), KLEIN)
    assert not verify_certificate(dataclasses.replace(good, model="cartesian:2"), KLEIN)
    assert not verify_certificate(Certificate("A1", "klein", ("0,0", "0,1/2")), KLEIN)


def test_certificate_json_round_trip(tmp_path):
    cert = sample_check("A10p", KLEIN, 1, 3).certificate
    path = tmp_path / "c.json"
    path.write_text(cert.to_json())
    assert Certificate.load(path) == cert
