"""Python smoke tests for the hlfcensus extension module."""

from fractions import Fraction

import pytest

import hlfcensus as hc


def test_modulus_and_weights():
    assert hc.modulus(3) == 28
    assert hc.modulus(4) == 18
    assert hc.separating_weight(1) == 12
    assert hc.separating_weight(2) == 40
    with pytest.raises(hc.CensusError):
        hc.modulus(0)


def test_invariants_of_a_published_row():
    v = hc.FiberTypeVector(5, 8, [0, 2])
    inv = hc.invariant_set(v)
    assert (inv.e, inv.sigma, inv.c1_sq) == (-6, -2, -18)
    assert inv.chi_h == Fraction(-2)
    assert inv.residue == 0


def test_signature_integrality_error():
    with pytest.raises(hc.CensusError):
        hc.signature(hc.FiberTypeVector(4, 1, [0, 0]))


def test_enumeration_genus4():
    vs = hc.enumerate_vectors(4, 12)
    assert sorted((v.n, tuple(v.s)) for v in vs) == [
        (6, (0, 3)),
        (6, (1, 0)),
        (6, (4, 0)),
        (8, (2, 1)),
    ]
    assert hc.n_lower_bound(7) == 11


def test_survivors_and_bounds():
    general = hc.Profile.general()
    assert hc.survivors(9, 24, general) == []
    s8 = hc.survivors(8, 20, general)
    assert len(s8) == 1
    assert (s8[0].vector.n, tuple(s8[0].vector.s)) == (14, (0, 1, 2, 2))
    assert hc.lower_bound(8, 20, general) == (19, "CONDITIONAL")
    assert hc.lower_bound(6, 16, general) == (16, "PROVEN_AT_LEAST")

    report = hc.bounds_report(8, general)
    assert report["conclusion"] == "N_8 ∈ {19, 20}"
    assert report["upper_source"] == "EVEN_2G4"


def test_complex_profile_excludes_e5():
    complex_profile = hc.Profile.complex_surfaces()
    verdict = hc.evaluate(hc.FiberTypeVector(8, 14, [0, 1, 2, 2]), complex_profile)
    assert verdict.status == hc.VerdictStatus.EXCLUDED
    assert verdict.fired("R7")


def test_adjunction_checker():
    target = hc.RuledTarget(2, 3, 4)
    assert hc.degree_bound(target) == 2
    assert hc.completion_constant(target, 1) == -13
    assert hc.completion_constant(target, 2) == -4
    assert hc.decide(target).outcome == hc.AdjunctionOutcome.NO_SOLUTION

    roomy = hc.decide(hc.RuledTarget(2, 4, 6))
    assert roomy.outcome == hc.AdjunctionOutcome.SOLUTIONS_EXIST
    sols = [(s.a, s.b, tuple(s.c)) for d in roomy.per_degree for s in d.solutions]
    assert (4, 1, (0, 0, -2, -2)) in sols

    with pytest.raises(hc.CensusError):
        hc.RuledTarget(1, 3, 4)


def test_twist_words():
    word = hc.parse_word(4, "N N N N N N S1")
    assert hc.abelianization_image(word) == 0
    v = hc.to_fiber_vector(word)
    assert (v.n, list(v.s)) == (6, [1, 0])
    assert hc.h1_order(2, hc.McgGroup.FULL) == 10
    assert hc.h1_order(6, hc.McgGroup.HYPERELLIPTIC) == 26
    with pytest.raises(hc.CensusError):
        hc.parse_word(4, "S3")


def test_census_render_is_deterministic():
    general = hc.Profile.general()
    a = hc.run_census(10, 24, general, threads=1).render("json")
    b = hc.run_census(10, 24, general, threads=4).render("json")
    assert a == b
    assert '"conclusion"' in a
