import pytest

from udsmimic.benefits import BenefitId as B, Rating, SchemeProfile
from udsmimic.combiner import CombineError, CombinedScheme, Override, combine_profiles, uses_min

F, P, A = Rating.FULL, Rating.PARTIAL, Rating.ABSENT


def test_pw_plus_otp2(ref):
    c = combine_profiles([ref.schemes["pw"], ref.schemes["otp2"]])
    assert c.vector[B.U3] is A
    assert c.vector[B.S5] is F
    assert c.vector[B.S8] is F


def test_security_exceptions_take_min(ref):
    c = combine_profiles([ref.schemes["pw"], ref.schemes["puf2"]])
    assert c.vector[B.S9] is A
    assert c.vector[B.S11] is A


def test_partials(ref):
    c = combine_profiles([ref.schemes["pw"], ref.schemes["l1"]])
    assert c.vector[B.S2] is P
    assert c.vector[B.U7] is P


def test_self_combination_is_identity(ref):
    for s in ref.schemes.values():
        assert combine_profiles([s, s]).vector == s.vector


def test_rule_per_class():
    assert uses_min(B.U1) and uses_min(B.D6) and uses_min(B.S9) and uses_min(B.S11)
    assert not any(uses_min(b) for b in (B.S1, B.S8, B.S10, B.M1, B.M4))


def test_overrides_apply_last(ref):
    c = combine_profiles(
        [ref.schemes["pw"], ref.schemes["l1"]], [Override(B.S9, F, "own GPS receiver")]
    )
    assert c.vector[B.S9] is F


def test_defaults(ref):
    c = combine_profiles([ref.schemes["l4"], ref.schemes["pw"]])
    assert c.id == "l4_pw"
    assert c.name == "L4: Robust location verification + PW: Web passwords"
    assert c.category == "geolocation"
    both = combine_profiles([ref.schemes["l4"], ref.schemes["fp4"]])
    assert both.category == "other"


def test_errors(ref):
    with pytest.raises(CombineError):
        combine_profiles([ref.schemes["pw"]])
    with pytest.raises(CombineError):
        Override(B.S9, A, "  ")
    with pytest.raises(CombineError):
        CombinedScheme("x", ("pw",))


def test_bottom_half_reproduced(ref, combined_rows):
    for cid in ref.combined:
        derived = ref.profile(cid)
        assert derived.vector == combined_rows.schemes[cid].vector, cid
