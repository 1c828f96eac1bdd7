"""Amalgamated free products A *_D B with canonical transversal normal forms.

Elements are words in the disjoint union of A and B subject to the relations
of both groups and the identification iota_a(d) = iota_b(d).  Every element
has a unique normal form

    t_1 t_2 ... t_k * d

where the t_i are non-identity coset representatives alternating between the
two sides and d lies in the amalgamated subgroup D.  Representatives are
fixed per side: identity for the subgroup's own coset, lowest element index
for every other coset, and the subgroup part always trails (a = t * iota(d)).

Reduction folds a raw word right to left.  Prepending a syllable x on side S
merges x into the leading syllable when the sides match, splits the result
into representative * subgroup part via the decomposition table, and pushes
the subgroup part rightward through the head, converting it into each next
syllable's side through the embeddings, until it is absorbed by the tail (or
dies at the subgroup identity).  No search is involved; every step is a
table lookup.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .groups import FiniteGroup, GroupHom, is_injective, make_hom

__all__ = [
    "SIDE_A",
    "SIDE_B",
    "AmalgamSpec",
    "AmalgamWord",
    "NormalForm",
    "make_amalgam",
    "identity_form",
    "reduce_word",
    "to_word",
    "word_mul",
    "word_inv",
    "word_eq",
    "syllable_count",
    "enumerate_forms",
    "random_form",
]

SIDE_A = "a"
SIDE_B = "b"

Syllable = tuple[str, int]


@dataclass(frozen=True)
class AmalgamWord:
    """A raw, unreduced word: syllables (side, element index)."""

    syllables: tuple[Syllable, ...]

    def __mul__(self, other: "AmalgamWord") -> "AmalgamWord":
        return AmalgamWord(self.syllables + other.syllables)


@dataclass(frozen=True)
class NormalForm:
    """Canonical form: alternating non-identity representatives, then a
    trailing element of the amalgamated subgroup."""

    head: tuple[Syllable, ...]
    tail: int


@dataclass(frozen=True)
class AmalgamSpec:
    """The two factor groups, the embedded subgroup, and the coset data.

    ``trans_a`` lists the chosen representatives (identity first), and
    ``decomp_a[x] = (t, d)`` is the unique splitting x = t * iota_a(d) with t
    a representative; likewise for the b side.
    """

    a: FiniteGroup
    b: FiniteGroup
    d: FiniteGroup
    iota_a: GroupHom
    iota_b: GroupHom
    trans_a: tuple[int, ...]
    trans_b: tuple[int, ...]
    decomp_a: tuple[tuple[int, int], ...]
    decomp_b: tuple[tuple[int, int], ...]
    label: str

    def side_group(self, side: str) -> FiniteGroup:
        return self.a if side == SIDE_A else self.b

    def iota(self, side: str) -> GroupHom:
        return self.iota_a if side == SIDE_A else self.iota_b

    def trans(self, side: str) -> tuple[int, ...]:
        return self.trans_a if side == SIDE_A else self.trans_b

    def decomp(self, side: str) -> tuple[tuple[int, int], ...]:
        return self.decomp_a if side == SIDE_A else self.decomp_b


def _coset_data(
    g: FiniteGroup, iota: GroupHom
) -> tuple[tuple[int, ...], tuple[tuple[int, int], ...]]:
    """Representatives and splitting table for the cosets t * iota(D) in g."""
    sub = iota.image
    assigned: list[tuple[int, int] | None] = [None] * g.order
    reps: list[int] = []
    scan = [g.identity] + [x for x in range(g.order) if x != g.identity]
    for t in scan:
        if assigned[t] is not None:
            continue
        reps.append(t)
        for dj, h in enumerate(sub):
            y = g.mul[t][h]
            if assigned[y] is not None:
                raise ValueError(
                    f"coset splitting in {g.label} is not unique at element {y}"
                )
            assigned[y] = (t, dj)
    decomp = tuple(assigned)  # type: ignore[arg-type]
    return tuple(reps), decomp


def make_amalgam(
    a: FiniteGroup,
    b: FiniteGroup,
    d: FiniteGroup,
    iota_a: GroupHom,
    iota_b: GroupHom,
    label: str | None = None,
) -> AmalgamSpec:
    """Assemble the amalgam data for A *_D B from two verified embeddings."""
    for name, hom, src, tgt in (
        ("iota_a", iota_a, d, a),
        ("iota_b", iota_b, d, b),
    ):
        if hom.source != src or hom.target != tgt:
            raise ValueError(f"{name} must map {src.label} into {tgt.label}")
        make_hom(hom.source, hom.target, hom.image)
        if not is_injective(hom):
            raise ValueError(f"{name} is not injective")
    trans_a, decomp_a = _coset_data(a, iota_a)
    trans_b, decomp_b = _coset_data(b, iota_b)
    for g, trans, decomp, iota in (
        (a, trans_a, decomp_a, iota_a),
        (b, trans_b, decomp_b, iota_b),
    ):
        if trans[0] != g.identity:
            raise ValueError(f"first representative in {g.label} is not the identity")
        for x in g.elements():
            t, dj = decomp[x]
            if g.mul[t][iota.image[dj]] != x:
                raise ValueError(f"splitting table wrong at element {x} of {g.label}")
    if label is None:
        label = f"{a.label} *[{d.label}] {b.label}"
    return AmalgamSpec(
        a, b, d, iota_a, iota_b, trans_a, trans_b, decomp_a, decomp_b, label
    )


def identity_form(spec: AmalgamSpec) -> NormalForm:
    return NormalForm((), spec.d.identity)


def _prepend(
    spec: AmalgamSpec, head: list[Syllable], tail: int, side: str, x: int
) -> int:
    """Prepend syllable (side, x) to the normal form (head, tail) in place.

    Returns the new tail.  ``head`` is mutated.
    """
    if side == SIDE_A:
        g, dec, img = spec.a, spec.decomp_a, spec.iota_a.image
    else:
        g, dec, img = spec.b, spec.decomp_b, spec.iota_b.image
    if head and head[0][0] == side:
        x = g.mul[x][head[0][1]]
        head.pop(0)
    t, d_run = dec[x]
    lead = (side, t) if t != g.identity else None
    e_d = spec.d.identity
    if d_run != e_d:
        i = 0
        while d_run != e_d and i < len(head):
            s2, t2 = head[i]
            if s2 == SIDE_A:
                g2, dec2, img2 = spec.a, spec.decomp_a, spec.iota_a.image
            else:
                g2, dec2, img2 = spec.b, spec.decomp_b, spec.iota_b.image
            t2n, d_run = dec2[g2.mul[img2[d_run]][t2]]
            head[i] = (s2, t2n)
            i += 1
        if d_run != e_d:
            tail = spec.d.mul[d_run][tail]
    if lead is not None:
        head.insert(0, lead)
    return tail


def _syllables(word: AmalgamWord | Sequence[Syllable] | Iterable[Syllable]) -> tuple[Syllable, ...]:
    if isinstance(word, AmalgamWord):
        return word.syllables
    return tuple(word)


def reduce_word(spec: AmalgamSpec, word: AmalgamWord | Sequence[Syllable]) -> NormalForm:
    """Fold a raw word into its unique normal form, right to left."""
    syls = _syllables(word)
    head: list[Syllable] = []
    tail = spec.d.identity
    for side, x in reversed(syls):
        if side not in (SIDE_A, SIDE_B):
            raise ValueError(f"unknown side {side!r}")
        if not 0 <= x < spec.side_group(side).order:
            raise ValueError(
                f"element {x} out of range for side {side} of {spec.label}"
            )
        tail = _prepend(spec, head, tail, side, x)
    return NormalForm(tuple(head), tail)


def to_word(spec: AmalgamSpec, form: NormalForm) -> AmalgamWord:
    """Embed a normal form back into raw-word syllables (tail on side a)."""
    syls = list(form.head)
    if form.tail != spec.d.identity:
        syls.append((SIDE_A, spec.iota_a.image[form.tail]))
    return AmalgamWord(tuple(syls))


def syllable_count(spec: AmalgamSpec, form: NormalForm) -> int:
    return len(form.head) + (1 if form.tail != spec.d.identity else 0)


def word_mul(spec: AmalgamSpec, u: NormalForm, v: NormalForm) -> NormalForm:
    """Product of two normal forms (prepend u onto the already-reduced v)."""
    head = list(v.head)
    tail = v.tail
    for side, x in reversed(to_word(spec, u).syllables):
        tail = _prepend(spec, head, tail, side, x)
    return NormalForm(tuple(head), tail)


def word_inv(spec: AmalgamSpec, u: NormalForm) -> NormalForm:
    """Inverse: reverse the embedded word and invert each syllable."""
    syls = to_word(spec, u).syllables
    inverted = [
        (side, spec.side_group(side).inv[x]) for side, x in reversed(syls)
    ]
    return reduce_word(spec, inverted)


def word_eq(
    spec: AmalgamSpec,
    u: AmalgamWord | NormalForm,
    v: AmalgamWord | NormalForm,
) -> bool:
    """Whether two words (raw or reduced) name the same group element."""
    nu = u if isinstance(u, NormalForm) else reduce_word(spec, u)
    nv = v if isinstance(v, NormalForm) else reduce_word(spec, v)
    return nu == nv


def _heads(spec: AmalgamSpec, max_len: int) -> list[tuple[Syllable, ...]]:
    reps = {
        SIDE_A: [t for t in spec.trans_a if t != spec.a.identity],
        SIDE_B: [t for t in spec.trans_b if t != spec.b.identity],
    }
    out: list[tuple[Syllable, ...]] = [()]
    layer: list[tuple[Syllable, ...]] = [()]
    for _ in range(max_len):
        nxt = []
        for h in layer:
            sides = (SIDE_A, SIDE_B) if not h else (
                (SIDE_B,) if h[-1][0] == SIDE_A else (SIDE_A,)
            )
            for s in sides:
                for t in reps[s]:
                    nxt.append(h + ((s, t),))
        out.extend(nxt)
        layer = nxt
    return out


def enumerate_forms(spec: AmalgamSpec, max_head: int) -> list[NormalForm]:
    """All normal forms with head length at most max_head, in a fixed order."""
    return [
        NormalForm(h, d)
        for h in _heads(spec, max_head)
        for d in spec.d.elements()
    ]


def random_form(rng: random.Random, spec: AmalgamSpec, max_head: int) -> NormalForm:
    """A seeded random normal form with head length at most max_head."""
    reps_a = [t for t in spec.trans_a if t != spec.a.identity]
    reps_b = [t for t in spec.trans_b if t != spec.b.identity]
    length = rng.randint(0, max_head)
    head: list[Syllable] = []
    if reps_a or reps_b:
        if not reps_a:
            side = SIDE_B
        elif not reps_b:
            side = SIDE_A
        else:
            side = rng.choice((SIDE_A, SIDE_B))
        for _ in range(length):
            reps = reps_a if side == SIDE_A else reps_b
            if not reps:
                break
            head.append((side, rng.choice(reps)))
            side = SIDE_B if side == SIDE_A else SIDE_A
    tail = rng.randrange(spec.d.order)
    return NormalForm(tuple(head), tail)
