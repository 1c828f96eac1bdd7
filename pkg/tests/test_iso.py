"""The induced actor action, the lifted amalgam, and the distribution map."""

import random

import pytest

from amalg import (
    SIDE_A,
    SIDE_B,
    CompatibleActionTriple,
    NormalForm,
    SmallSemidirect,
    check_group_axioms,
    enumerate_forms,
    identity_form,
    identity_hom,
    induce_action_on_amalgam,
    inversion_action,
    make_amalgam,
    make_big_amalgam,
    make_cyclic,
    mu,
    nu,
    phi,
    phi_inv,
    random_form,
    tau,
    trivial_action,
    verify_exact_sequence,
    verify_split,
    word_inv,
    word_mul,
)


def inversion_triple(spec):
    c2 = make_cyclic(2)
    return CompatibleActionTriple(
        inversion_action(c2, spec.a),
        inversion_action(c2, spec.b),
        inversion_action(c2, spec.d),
    )


def test_compatibility_accepts_the_inversion_triple(small_spec):
    action = induce_action_on_amalgam(small_spec, inversion_triple(small_spec))
    assert action.spec == small_spec


def test_compatibility_rejects_mismatched_subgroup_action():
    z4 = make_cyclic(4)
    spec = make_amalgam(z4, z4, z4, identity_hom(z4), identity_hom(z4))
    c2 = make_cyclic(2)
    acts = CompatibleActionTriple(
        inversion_action(c2, z4),
        inversion_action(c2, z4),
        trivial_action(c2, z4),
    )
    with pytest.raises(ValueError, match=r"compatibility violation.*\(c, d\) = \(1, 1\)"):
        induce_action_on_amalgam(spec, acts)


def test_compatibility_rejects_mixed_actors(small_spec):
    c2, c3 = make_cyclic(2), make_cyclic(3)
    acts = CompatibleActionTriple(
        inversion_action(c2, small_spec.a),
        inversion_action(c2, small_spec.b),
        trivial_action(c3, small_spec.d),
    )
    with pytest.raises(ValueError, match="different actors"):
        induce_action_on_amalgam(small_spec, acts)


def test_induced_action_satisfies_the_action_laws(big):
    action = big.action
    actor = big.actor
    forms = enumerate_forms(big.small, 3)
    for w in forms:
        assert action.apply(actor.identity, w) == w
        for c1 in actor.elements():
            for c2 in actor.elements():
                composed = action.apply(c1, action.apply(c2, w))
                assert composed == action.apply(actor.mul[c1][c2], w)


def test_induced_action_acts_by_automorphisms(big):
    rng = random.Random(11)
    action = big.action
    for _ in range(200):
        u = random_form(rng, big.small, 4)
        v = random_form(rng, big.small, 4)
        for c in big.actor.elements():
            lhs = action.apply(c, word_mul(big.small, u, v))
            rhs = word_mul(
                big.small, action.apply(c, u), action.apply(c, v)
            )
            assert lhs == rhs


def test_big_amalgam_structure(big):
    assert big.spec.label == "Z4:Z2 *[Z2:Z2] Z6:Z2"
    assert big.spec.trans_a == (0, 2)
    assert big.spec.trans_b == (0, 2, 4)
    # Lifted embedding sends (d, c) to (iota(d), c) in flat coordinates.
    assert big.spec.iota_a.image == (0, 1, 4, 5)
    assert big.spec.iota_b.image == (0, 1, 6, 7)
    for sd in (big.sd_a, big.sd_b, big.sd_d):
        assert check_group_axioms(sd.flat).ok


def test_nu_preserves_structure(big):
    assert nu(big, identity_form(big.small)) == identity_form(big.spec)
    assert nu(big, NormalForm(((SIDE_A, 1),), 0)) == NormalForm(((SIDE_A, 2),), 0)
    forms = enumerate_forms(big.small, 3)
    images = [nu(big, w) for w in forms]
    assert len(set(images)) == len(forms)
    for w, g in zip(forms, images):
        assert len(g.head) == len(w.head)


def test_mu_tau_section_and_kernel(big):
    for c in big.actor.elements():
        assert mu(big, tau(big, c)) == c
    assert tau(big, 0) == identity_form(big.spec)
    assert tau(big, 1) == NormalForm((), 1)
    for w in enumerate_forms(big.small, 2):
        assert mu(big, nu(big, w)) == big.actor.identity


def test_phi_is_a_bijection_at_bound_three(big):
    domain = [
        (w, c)
        for w in enumerate_forms(big.small, 3)
        for c in big.actor.elements()
    ]
    images = [phi(big, w, c) for w, c in domain]
    assert len(set(images)) == len(domain) == 56
    assert set(images) == set(enumerate_forms(big.spec, 3))


def test_phi_inv_inverts_phi_exhaustively_at_bound_three(big):
    for w in enumerate_forms(big.small, 3):
        for c in big.actor.elements():
            assert phi_inv(big, phi(big, w, c)) == (w, c)


def test_phi_satisfies_the_hom_law_on_short_forms(big):
    sd = SmallSemidirect(big)
    elements = [
        (w, c)
        for w in enumerate_forms(big.small, 1)
        for c in big.actor.elements()
    ]
    for x in elements:
        for y in elements:
            lhs = phi(big, *sd.mul(x, y))
            rhs = word_mul(big.spec, phi(big, *x), phi(big, *y))
            assert lhs == rhs


def test_conjugation_by_tau_realizes_the_action(big):
    rng = random.Random(12)
    for _ in range(100):
        w = random_form(rng, big.small, 4)
        for c in big.actor.elements():
            conj = word_mul(
                big.spec,
                word_mul(big.spec, tau(big, c), nu(big, w)),
                word_inv(big.spec, tau(big, c)),
            )
            assert conj == nu(big, big.action.apply(c, w))


def test_small_semidirect_group_laws(big):
    sd = SmallSemidirect(big)
    rng = random.Random(13)
    e = sd.identity()
    samples = [
        (random_form(rng, big.small, 3), rng.randrange(big.actor.order))
        for _ in range(30)
    ]
    for x in samples:
        assert sd.mul(x, e) == x
        assert sd.mul(e, x) == x
        assert sd.mul(x, sd.inv(x)) == e
        assert sd.mul(sd.inv(x), x) == e
    for x in samples[:10]:
        for y in samples[:10]:
            for z in samples[:10]:
                assert sd.mul(sd.mul(x, y), z) == sd.mul(x, sd.mul(y, z))


def test_exact_sequence_verifier_passes(big):
    report = verify_exact_sequence(big, 3)
    assert report.ok, report.first_failure()
    assert [r.check for r in report.records] == [
        "nu-injective",
        "mu-surjective",
        "kernel-equals-image",
    ]


def test_split_verifier_passes(big):
    report = verify_split(big, 300, 0)
    assert report.ok, report.first_failure()
    assert [r.check for r in report.records] == [
        "mu-tau-identity",
        "tau-homomorphism",
        "phi-hom-single-syllable",
        "phi-homomorphism",
        "phi-inv-after-phi",
        "phi-after-phi-inv",
        "nu-homomorphism",
    ]


def test_trivial_actor_gives_an_isomorphic_copy(small_spec):
    z1 = make_cyclic(1)
    acts = CompatibleActionTriple(
        trivial_action(z1, small_spec.a),
        trivial_action(z1, small_spec.b),
        trivial_action(z1, small_spec.d),
    )
    big = make_big_amalgam(small_spec, acts)
    assert verify_exact_sequence(big, 2).ok
    assert verify_split(big, 100, 0).ok
    for w in enumerate_forms(small_spec, 2):
        assert mu(big, nu(big, w)) == 0
        assert phi(big, w, 0) == nu(big, w)
