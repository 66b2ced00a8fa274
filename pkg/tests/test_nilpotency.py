from __future__ import annotations

import pytest

import grouplab as gl

AGREEMENT_SPECS = [
    "C(1)", "C(12)", "C(16)", "D(8)", "D(10)", "D(18)", "S(3)", "S(4)", "A(4)",
    "A(5)", "E(3^3)", "E(5^3)", "prod(C(6), S(3))", "prod(C(2), A(4))",
    "semi(C(7), C(3), action=pow2)",
    "semi(prod(C(5), C(5)), C(3), action=cyclo3)", "G375",
]


def test_nilpotent_examples(built, lattices):
    for text in ["C(1)", "C(12)", "C(16)"]:
        assert gl.is_nilpotent_sylow(built(text), lattices(text))
    assert not gl.is_nilpotent_sylow(built("S(3)"), lattices("S(3)"))
    assert not gl.is_nilpotent_sylow(
        built("prod(C(6), S(3))"), lattices("prod(C(6), S(3))")
    )


def test_lower_central_series_examples(built):
    nilpotent, cls = gl.is_nilpotent_lcs(built("C(12)"))
    assert nilpotent and cls == 1
    nilpotent, cls = gl.is_nilpotent_lcs(built("E(5^3)"))
    assert nilpotent and cls == 2
    series = gl.lower_central_series(built("E(5^3)"))
    assert [s.order for s in series] == [125, 5, 1]
    assert series[1].mask == gl.center(built("E(5^3)")).mask
    nilpotent, cls = gl.is_nilpotent_lcs(built("G375"))
    assert not nilpotent and cls is None
    nilpotent, cls = gl.is_nilpotent_lcs(built("C(1)"))
    assert nilpotent and cls == 0
    nilpotent, cls = gl.is_nilpotent_lcs(built("D(8)"))
    assert nilpotent and cls == 2


@pytest.mark.parametrize("text", AGREEMENT_SPECS)
def test_nilpotency_tests_agree(built, lattices, text):
    # raises NilpotencyTestDisagreement on any mismatch
    gl.nilpotency_checked(built(text), lattices(text))


def test_is_schmidt_examples(built, lattices):
    assert gl.is_schmidt(built("S(3)"), lattices("S(3)"))
    assert gl.is_schmidt(built("A(4)"), lattices("A(4)"))
    assert gl.is_schmidt(built("D(10)"), lattices("D(10)"))
    assert gl.is_schmidt(built("G375"), lattices("G375"))
    # non-nilpotent but with a non-nilpotent proper subgroup
    assert not gl.is_schmidt(
        built("prod(C(6), S(3))"), lattices("prod(C(6), S(3))")
    )
    # D(18) contains a dihedral subgroup of order 6, which is non-nilpotent
    assert not gl.is_schmidt(built("D(18)"), lattices("D(18)"))
    # nilpotent groups are never minimal non-nilpotent
    assert not gl.is_schmidt(built("C(12)"), lattices("C(12)"))


def test_schmidt_certificate_requires_schmidt(built, lattices):
    with pytest.raises(gl.NotSchmidt):
        gl.schmidt_certificate(built("C(6)"), lattices("C(6)"))


def test_certificate_s3(built, lattices):
    cert = gl.schmidt_certificate(built("S(3)"), lattices("S(3)"))
    assert (cert.p, cert.q, cert.m, cert.n, cert.r) == (3, 2, 1, 1, 1)
    assert cert.sylow_p.order == 3
    assert cert.sylow_q.order == 2
    assert cert.center.order == 1
    assert cert.quotient_s.order == 6
    assert all(ok for _, ok, _ in cert.checklist)
    assert [letter for letter, _, _ in cert.checklist] == list("abcdefghijklm")


def test_certificate_a4_abelian_branch(built, lattices):
    cert = gl.schmidt_certificate(built("A(4)"), lattices("A(4)"))
    assert (cert.p, cert.q, cert.r) == (2, 3, 2)
    assert cert.sylow_p.order == 4  # Klein four-group = p^r
    by_letter = {letter: detail for letter, _, detail in cert.checklist}
    assert "abelian" in by_letter["j"]


def test_certificate_frobenius21(built, lattices):
    text = "semi(C(7), C(3), action=pow2)"
    cert = gl.schmidt_certificate(built(text), lattices(text))
    assert (cert.p, cert.q, cert.r) == (7, 3, 1)
    assert cert.center.order == 1
    assert cert.quotient_s.order == 21
    prof = gl.profile(cert.quotient_s)
    assert prof.exponent == 21 and prof.phi == 0


def test_certificate_order75(built, lattices):
    text = "semi(prod(C(5), C(5)), C(3), action=cyclo3)"
    cert = gl.schmidt_certificate(built(text), lattices(text))
    assert (cert.p, cert.q, cert.r) == (5, 3, 2)
    assert cert.sylow_p.order == 25
    prof = gl.profile(cert.quotient_s)
    assert prof.exponent == 15 and prof.phi == 0


def test_certificate_g375_nonabelian_branch(built, lattices):
    cert = gl.schmidt_certificate(built("G375"), lattices("G375"))
    assert (cert.p, cert.q, cert.m, cert.n, cert.r) == (5, 3, 3, 1, 2)
    assert cert.sylow_p.order == 125
    assert cert.center.order == 5
    assert cert.derived.order == 125  # G' = P
    assert cert.frattini_of_p.order == 5
    assert cert.quotient_s.order == 75
    prof = gl.profile(cert.quotient_s)
    assert prof.exponent == 15 and prof.phi == 0
    by_letter = {letter: detail for letter, _, detail in cert.checklist}
    assert "non-abelian" in by_letter["k"]


@pytest.mark.parametrize(
    "text",
    ["S(3)", "A(4)", "semi(C(7), C(3), action=pow2)",
     "semi(prod(C(5), C(5)), C(3), action=cyclo3)", "G375"],
)
def test_certified_groups_are_solvable(built, lattices, text):
    gl.schmidt_certificate(built(text), lattices(text))
    series = gl.derived_series(built(text))
    assert series[-1].order == 1


def test_certificate_json_shape(built, lattices):
    cert = gl.schmidt_certificate(built("S(3)"), lattices("S(3)"))
    payload = cert.to_json_dict()
    assert set(payload["checklist"].keys()) == set("abcdefghijklm")
    assert all(entry["ok"] for entry in payload["checklist"].values())
    for key in ("p", "q", "m", "n", "r"):
        assert isinstance(payload[key], int)


def test_certificate_failure_surfaces(built, lattices, monkeypatch):
    # force a bogus multiplicative order to hit the (i) check
    import grouplab.nilpotency as nil

    monkeypatch.setattr(nil, "multiplicative_order", lambda a, m: 7)
    with pytest.raises(gl.CertificateFailure) as info:
        nil.schmidt_certificate(built("S(3)"), lattices("S(3)"))
    assert info.value.entry == "i"
