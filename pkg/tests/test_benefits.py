import pytest

from udsmimic.benefits import (
    ALL_BENEFITS,
    EMPTY_VECTOR,
    BenefitClass,
    BenefitId,
    BenefitVector,
    Rating,
    SchemeProfile,
    merged_s6,
    rating_of,
)

F, P, A = Rating.FULL, Rating.PARTIAL, Rating.ABSENT


def test_identifier_set():
    names = [b.name for b in ALL_BENEFITS]
    assert len(names) == len(set(names)) == 31
    assert names[:10] == [f"U{i}" for i in range(1, 11)]
    assert names[10:16] == [f"D{i}" for i in range(1, 7)]
    assert names[16:27] == [f"S{i}" for i in range(1, 12)]
    assert names[27:] == ["M1", "M2", "M3", "M4"]


@pytest.mark.parametrize(
    "benefit,cls",
    [(BenefitId.U10, BenefitClass.USABILITY), (BenefitId.D3, BenefitClass.DEPLOYABILITY),
     (BenefitId.S11, BenefitClass.SECURITY), (BenefitId.M4, BenefitClass.MIMICRY)],
)
def test_class_from_prefix(benefit, cls):
    assert benefit.benefit_class is cls


def test_display_names():
    assert BenefitId.S3.display_name == "Resilient-to-Throttled-Guessing"
    assert BenefitId.U8.display_name == "Easy-Recovery-from-Loss"
    assert BenefitId.M2.display_name == "Resilient-to-Infrequent-Capture-or-Intercept"
    assert BenefitId.U10.display_name == "Easy-to-Change-Credentials"


def test_parse_is_case_insensitive():
    assert BenefitId.parse("s10") is BenefitId.S10
    with pytest.raises(KeyError):
        BenefitId.parse("S12")


def test_rating_order():
    assert A < P < F
    for r in Rating:
        assert min(r, F) is r
        assert max(r, A) is r
    with pytest.raises(ValueError):
        Rating.parse("ful")


def test_vector_is_total():
    assert all(EMPTY_VECTOR[b] is A for b in ALL_BENEFITS)
    v = BenefitVector.from_mapping({BenefitId.U3: F})
    assert v[BenefitId.U3] is F and v[BenefitId.U1] is A
    assert v.offered() == {BenefitId.U3: F}
    with pytest.raises(ValueError):
        BenefitVector((F,) * 30)


def test_rating_of(ref):
    assert rating_of(ref.schemes["pw"], BenefitId.S8) is F
    assert rating_of(ref.schemes["otp2"], BenefitId.S5) is F
    assert rating_of(SchemeProfile("x", "X", "other"), BenefitId.U1) is A


def test_merged_s6(ref):
    assert merged_s6(ref.schemes["sound_proof"].vector) is F
    assert merged_s6(ref.schemes["puf2"].vector) is A
    assert merged_s6(BenefitVector.from_mapping({BenefitId.S6: P, BenefitId.S9: F})) is P


def test_profile_id_validation():
    with pytest.raises(ValueError):
        SchemeProfile("Bad Id", "x", "other")
    with pytest.raises(ValueError):
        SchemeProfile("ok", "x", "biometric")
    assert SchemeProfile("otp2", "OTP2: OTP USB token", "otp").label == "OTP2"
