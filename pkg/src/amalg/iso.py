"""Distributing a semidirect action over an amalgam.

Given compatible actions of C on A, B, and D (compatible meaning the
embeddings intertwine them), C acts on A *_D B syllable-wise, so the
semidirect product (A *_D B) x| C makes sense.  On the other side, the lifted
embeddings (d, c) -> (iota(d), c) exhibit a second amalgam
(A x| C) *_(D x| C) (B x| C).  This module builds both and the mutually
inverse maps between them:

  nu   embeds the plain amalgam into the big one (syllables pick up a
       trivial C-component),
  mu   projects the big amalgam onto C (product of the C-components in word
       order),
  tau  sections mu through the subgroup side (c -> the class of (e_A, c)),
  phi  (w, c) -> nu(w) * tau(c), with inverse phi_inv.

verify_exact_sequence checks image nu = kernel mu at a head-length bound,
and verify_split checks the section and hom laws plus both round trips.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .amalgam import (
    SIDE_A,
    SIDE_B,
    AmalgamSpec,
    NormalForm,
    Syllable,
    enumerate_forms,
    identity_form,
    make_amalgam,
    random_form,
    reduce_word,
    to_word,
    word_inv,
    word_mul,
)
from .groups import FiniteGroup, GroupAction, make_hom
from .products import SemidirectGroup, semidirect
from .reporting import CheckRecord, Report

__all__ = [
    "CompatibleActionTriple",
    "AmalgamAction",
    "induce_action_on_amalgam",
    "BigAmalgam",
    "make_big_amalgam",
    "SmallSemidirect",
    "nu",
    "mu",
    "tau",
    "phi",
    "phi_inv",
    "verify_exact_sequence",
    "verify_split",
]


@dataclass(frozen=True)
class CompatibleActionTriple:
    """Actions of one actor C on the two factors and the subgroup."""

    act_a: GroupAction
    act_b: GroupAction
    act_d: GroupAction

    @property
    def actor(self) -> FiniteGroup:
        return self.act_a.actor


def _require_compatible(spec: AmalgamSpec, acts: CompatibleActionTriple) -> None:
    """The embeddings must intertwine the subgroup action with each side's."""
    c_group = acts.act_a.actor
    if acts.act_b.actor != c_group or acts.act_d.actor != c_group:
        raise ValueError("compatibility violation: actions have different actors")
    if (
        acts.act_a.space != spec.a
        or acts.act_b.space != spec.b
        or acts.act_d.space != spec.d
    ):
        raise ValueError("compatibility violation: actions do not match the amalgam")
    for side, act, iota in (
        (SIDE_A, acts.act_a, spec.iota_a),
        (SIDE_B, acts.act_b, spec.iota_b),
    ):
        for c in c_group.elements():
            for d in spec.d.elements():
                if iota.image[acts.act_d.table[c][d]] != act.table[c][iota.image[d]]:
                    raise ValueError(
                        f"compatibility violation on side {side}: "
                        f"witness (c, d) = ({c}, {d})"
                    )


@dataclass(frozen=True)
class AmalgamAction:
    """The syllable-wise action of C on normal forms, re-reduced."""

    spec: AmalgamSpec
    acts: CompatibleActionTriple

    def apply(self, c: int, form: NormalForm) -> NormalForm:
        table = {SIDE_A: self.acts.act_a.table[c], SIDE_B: self.acts.act_b.table[c]}
        word: list[Syllable] = [(s, table[s][x]) for s, x in form.head]
        d_img = self.acts.act_d.table[c][form.tail]
        if d_img != self.spec.d.identity:
            word.append((SIDE_A, self.spec.iota_a.image[d_img]))
        return reduce_word(self.spec, word)


def induce_action_on_amalgam(
    spec: AmalgamSpec, acts: CompatibleActionTriple
) -> AmalgamAction:
    """Validate compatibility and return the induced action on normal forms."""
    _require_compatible(spec, acts)
    return AmalgamAction(spec, acts)


@dataclass(frozen=True)
class BigAmalgam:
    """The amalgam of the three semidirect products, plus its ingredients."""

    small: AmalgamSpec
    acts: CompatibleActionTriple
    sd_a: SemidirectGroup
    sd_b: SemidirectGroup
    sd_d: SemidirectGroup
    spec: AmalgamSpec
    action: AmalgamAction

    @property
    def actor(self) -> FiniteGroup:
        return self.acts.actor

    def side_sd(self, side: str) -> SemidirectGroup:
        return self.sd_a if side == SIDE_A else self.sd_b


def make_big_amalgam(spec: AmalgamSpec, acts: CompatibleActionTriple) -> BigAmalgam:
    """Build (A x| C) *_(D x| C) (B x| C) with the lifted embeddings."""
    action = induce_action_on_amalgam(spec, acts)
    c_group = acts.actor
    sd_a = semidirect(spec.a, c_group, acts.act_a)
    sd_b = semidirect(spec.b, c_group, acts.act_b)
    sd_d = semidirect(spec.d, c_group, acts.act_d)
    lift_a = make_hom(
        sd_d.flat,
        sd_a.flat,
        tuple(
            sd_a.encode(spec.iota_a.image[d], c)
            for d in spec.d.elements()
            for c in c_group.elements()
        ),
    )
    lift_b = make_hom(
        sd_d.flat,
        sd_b.flat,
        tuple(
            sd_b.encode(spec.iota_b.image[d], c)
            for d in spec.d.elements()
            for c in c_group.elements()
        ),
    )
    big_spec = make_amalgam(
        sd_a.flat,
        sd_b.flat,
        sd_d.flat,
        lift_a,
        lift_b,
        label=f"{sd_a.flat.label} *[{sd_d.flat.label}] {sd_b.flat.label}",
    )
    return BigAmalgam(spec, acts, sd_a, sd_b, sd_d, big_spec, action)


class SmallSemidirect:
    """(A *_D B) x| C: pairs (normal form, actor element)."""

    def __init__(self, big: BigAmalgam):
        self.big = big
        self.spec = big.small
        self.actor = big.actor
        self.action = big.action

    def identity(self) -> tuple[NormalForm, int]:
        return identity_form(self.spec), self.actor.identity

    def mul(
        self, x: tuple[NormalForm, int], y: tuple[NormalForm, int]
    ) -> tuple[NormalForm, int]:
        (w1, c1), (w2, c2) = x, y
        return (
            word_mul(self.spec, w1, self.action.apply(c1, w2)),
            self.actor.mul[c1][c2],
        )

    def inv(self, x: tuple[NormalForm, int]) -> tuple[NormalForm, int]:
        w, c = x
        ci = self.actor.inv[c]
        return self.action.apply(ci, word_inv(self.spec, w)), ci


def nu(big: BigAmalgam, form: NormalForm) -> NormalForm:
    """Embed a plain normal form: each syllable gains a trivial C-component."""
    e_c = big.actor.identity
    word: list[Syllable] = [
        (s, big.side_sd(s).encode(t, e_c)) for s, t in form.head
    ]
    if form.tail != big.small.d.identity:
        dd = big.sd_d.encode(form.tail, e_c)
        word.append((SIDE_A, big.spec.iota_a.image[dd]))
    return reduce_word(big.spec, word)


def mu(big: BigAmalgam, form: NormalForm) -> int:
    """Project onto C: multiply the C-components in word order."""
    c_group = big.actor
    acc = c_group.identity
    for s, x in form.head:
        acc = c_group.mul[acc][big.side_sd(s).decode(x).c]
    return c_group.mul[acc][big.sd_d.decode(form.tail).c]


def tau(big: BigAmalgam, c: int) -> NormalForm:
    """Section of mu: the class of (e_A, c), a pure subgroup element."""
    return reduce_word(
        big.spec, [(SIDE_A, big.sd_a.encode(big.small.a.identity, c))]
    )


def phi(big: BigAmalgam, form: NormalForm, c: int) -> NormalForm:
    """The distribution isomorphism: (w, c) -> nu(w) * tau(c)."""
    return word_mul(big.spec, nu(big, form), tau(big, c))


def phi_inv(big: BigAmalgam, g: NormalForm) -> tuple[NormalForm, int]:
    """Invert phi: split off the C-part, then strip trivialized components.

    The C-component of each syllable is pushed rightward through the word via
    the induced actions; after stripping tau(mu(g)) the accumulated component
    must vanish, or the input was not a valid big-amalgam form.
    """
    c_group = big.actor
    c = mu(big, g)
    h = word_mul(big.spec, g, word_inv(big.spec, tau(big, c)))
    act = {SIDE_A: big.acts.act_a.table, SIDE_B: big.acts.act_b.table}
    acc = c_group.identity
    word: list[Syllable] = []
    for s, x in h.head:
        n, cx = big.side_sd(s).decode(x)
        word.append((s, act[s][acc][n]))
        acc = c_group.mul[acc][cx]
    d0, c0 = big.sd_d.decode(h.tail)
    d_final = big.acts.act_d.table[acc][d0]
    acc = c_group.mul[acc][c0]
    if acc != c_group.identity:
        raise RuntimeError(
            f"internal inconsistency: residual actor component {acc} "
            f"after stripping the section"
        )
    if d_final != big.small.d.identity:
        word.append((SIDE_A, big.small.iota_a.image[d_final]))
    return reduce_word(big.small, word), c


def verify_exact_sequence(big: BigAmalgam, bound: int) -> Report:
    """Check that nu is injective, mu is onto C, and image nu = kernel mu,
    over all big-amalgam forms of head length at most ``bound``."""
    label = big.spec.label
    records: list[CheckRecord] = []

    small_forms = enumerate_forms(big.small, bound)
    images = [nu(big, w) for w in small_forms]
    distinct = len(set(images)) == len(images)
    records.append(
        CheckRecord(
            "nu-injective",
            label,
            distinct,
            None if distinct else "nu collides within the bound",
        )
    )

    big_forms = enumerate_forms(big.spec, bound)
    seen_c = {mu(big, g) for g in big_forms}
    onto = seen_c == set(big.actor.elements())
    records.append(
        CheckRecord(
            "mu-surjective",
            label,
            onto,
            None if onto else f"missing actor elements {sorted(set(big.actor.elements()) - seen_c)}",
        )
    )

    kernel = {g for g in big_forms if mu(big, g) == big.actor.identity}
    image = set(images)
    ok = kernel == image
    witness = None
    if not ok:
        stray = (kernel - image) or (image - kernel)
        witness = f"symmetric difference sample: {next(iter(stray))}"
    records.append(CheckRecord("kernel-equals-image", label, ok, witness))
    return Report(tuple(records))


def verify_split(big: BigAmalgam, samples: int, seed: int) -> Report:
    """Check the splitting: mu o tau = id, tau is a hom, phi satisfies the
    hom law on seeded samples, and phi/phi_inv invert each other."""
    label = big.spec.label
    c_group = big.actor
    records: list[CheckRecord] = []
    sd = SmallSemidirect(big)

    bad = next(
        (c for c in c_group.elements() if mu(big, tau(big, c)) != c), None
    )
    records.append(
        CheckRecord(
            "mu-tau-identity", label, bad is None,
            None if bad is None else f"c = {bad}",
        )
    )

    ok, witness = True, None
    for c1 in c_group.elements():
        for c2 in c_group.elements():
            lhs = word_mul(big.spec, tau(big, c1), tau(big, c2))
            if lhs != tau(big, c_group.mul[c1][c2]):
                ok, witness = False, f"(c1, c2) = ({c1}, {c2})"
                break
        if not ok:
            break
    records.append(CheckRecord("tau-homomorphism", label, ok, witness))

    # Exhaustive hom law on single-syllable pairs.
    shorts = [
        (w, c)
        for w in enumerate_forms(big.small, 1)
        for c in c_group.elements()
    ]
    ok, witness = True, None
    for x in shorts:
        for y in shorts:
            lhs = phi(big, *sd.mul(x, y))
            rhs = word_mul(big.spec, phi(big, *x), phi(big, *y))
            if lhs != rhs:
                ok, witness = False, f"x = {x}, y = {y}"
                break
        if not ok:
            break
    records.append(CheckRecord("phi-hom-single-syllable", label, ok, witness))

    rng = random.Random(seed)
    max_head = 6
    ok, witness = True, None
    for _ in range(samples):
        x = (random_form(rng, big.small, max_head), rng.randrange(c_group.order))
        y = (random_form(rng, big.small, max_head), rng.randrange(c_group.order))
        lhs = phi(big, *sd.mul(x, y))
        rhs = word_mul(big.spec, phi(big, *x), phi(big, *y))
        if lhs != rhs:
            ok, witness = False, f"x = {x}, y = {y}"
            break
    records.append(CheckRecord("phi-homomorphism", label, ok, witness))

    ok, witness = True, None
    for _ in range(samples):
        x = (random_form(rng, big.small, max_head), rng.randrange(c_group.order))
        if phi_inv(big, phi(big, *x)) != x:
            ok, witness = False, f"x = {x}"
            break
    records.append(CheckRecord("phi-inv-after-phi", label, ok, witness))

    ok, witness = True, None
    for _ in range(samples):
        g = random_form(rng, big.spec, max_head)
        w, c = phi_inv(big, g)
        if phi(big, w, c) != g:
            ok, witness = False, f"g = {g}"
            break
    records.append(CheckRecord("phi-after-phi-inv", label, ok, witness))

    ok, witness = True, None
    for _ in range(samples):
        u = random_form(rng, big.small, max_head)
        v = random_form(rng, big.small, max_head)
        if nu(big, word_mul(big.small, u, v)) != word_mul(
            big.spec, nu(big, u), nu(big, v)
        ):
            ok, witness = False, f"u = {u}, v = {v}"
            break
    records.append(CheckRecord("nu-homomorphism", label, ok, witness))
    return Report(tuple(records))
