"""Finite groups as explicit multiplication tables with 0-based element indices.

Every group here is a complete order x order table; nothing is lazy or
presented by relations.  Homomorphisms are full image tables and actions are
full permutation tables, so all structural claims can be (and are) checked
exhaustively.
"""

from __future__ import annotations

from dataclasses import dataclass

from .reporting import CheckRecord, Report

__all__ = [
    "FiniteGroup",
    "GroupHom",
    "GroupAction",
    "make_cyclic",
    "make_dihedral",
    "check_group_axioms",
    "make_hom",
    "identity_hom",
    "hom_from_generators",
    "hom_compose",
    "is_injective",
    "make_action",
    "trivial_action",
    "inversion_action",
    "element_order",
    "is_abelian",
    "find_isomorphism",
]


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group: label, multiplication table, identity, inverses, generators.

    ``mul[x][y]`` is the product xy.  ``generators`` is a tuple of
    (name, element index) pairs whose closure under the table is the whole
    element set.
    """

    label: str
    mul: tuple[tuple[int, ...], ...]
    identity: int
    inv: tuple[int, ...]
    generators: tuple[tuple[str, int], ...]

    @property
    def order(self) -> int:
        return len(self.mul)

    def elements(self) -> range:
        return range(len(self.mul))

    def power(self, x: int, k: int) -> int:
        """x**k via the table; k may be negative."""
        if k < 0:
            x, k = self.inv[x], -k
        acc = self.identity
        row = self.mul
        while k:
            if k & 1:
                acc = row[acc][x]
            x = row[x][x]
            k >>= 1
        return acc


@dataclass(frozen=True)
class GroupHom:
    """A homomorphism given by its full image table: image[x] in the target."""

    source: FiniteGroup
    target: FiniteGroup
    image: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.image[x]


@dataclass(frozen=True)
class GroupAction:
    """A left action of ``actor`` on ``space`` by automorphisms.

    ``table[c]`` is the permutation of the space induced by actor element c,
    and table[c1 * c2] = table[c1] o table[c2].
    """

    actor: FiniteGroup
    space: FiniteGroup
    table: tuple[tuple[int, ...], ...]

    def __call__(self, c: int, x: int) -> int:
        return self.table[c][x]


def make_cyclic(n: int) -> FiniteGroup:
    """Cyclic group of order n with elements the residues 0..n-1."""
    if n <= 0:
        raise ValueError(f"cyclic group order must be positive, got {n}")
    mul = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    inv = tuple((-i) % n for i in range(n))
    gens = (("g", 1),) if n > 1 else ()
    return FiniteGroup(f"Z{n}", mul, 0, inv, gens)


def make_dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n: index i < n is r^i, index n + i is r^i * f.

    Relations r^n = f^2 = e and f r f = r^-1, so
    (r^i f^s)(r^j f^t) = r^(i + j or i - j) f^(s+t).
    """
    if n <= 0:
        raise ValueError(f"dihedral rotation order must be positive, got {n}")

    def enc(i: int, s: int) -> int:
        return i % n + (n if s % 2 else 0)

    def dec(x: int) -> tuple[int, int]:
        return (x % n, x // n)

    order = 2 * n
    mul = []
    for x in range(order):
        i, s = dec(x)
        row = []
        for y in range(order):
            j, t = dec(y)
            row.append(enc(i + (-j if s else j), s + t))
        mul.append(tuple(row))
    inv = []
    for x in range(order):
        i, s = dec(x)
        inv.append(enc(i, s) if s else enc(-i, 0))
    gens = (("r", 1), ("f", n)) if n >= 2 else (("f", 1),)
    return FiniteGroup(f"D{n}", tuple(mul), 0, tuple(inv), gens)


def _generated_set(g: FiniteGroup) -> set[int]:
    """Closure of the generators (and their inverses) under the table."""
    seen = {g.identity}
    step = [g.identity]
    gen_idx = [i for _, i in g.generators]
    while step:
        nxt = []
        for x in step:
            for h in gen_idx:
                for y in (g.mul[x][h], g.mul[x][g.inv[h]]):
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
        step = nxt
    return seen


def check_group_axioms(g: FiniteGroup) -> Report:
    """Exhaustively verify associativity, identity, inverses, and generation.

    Stops at the first violated axiom and reports a witness for it.
    """
    records: list[CheckRecord] = []
    n = g.order
    mul = g.mul

    ok = True
    witness = None
    if len(mul) != n or any(len(row) != n for row in mul):
        ok, witness = False, "table is not square"
    else:
        for row in mul:
            for v in row:
                if not 0 <= v < n:
                    ok, witness = False, f"entry {v} out of range"
                    break
            if not ok:
                break
    if ok:
        for x in range(n):
            for y in range(n):
                xy = mul[x][y]
                for z in range(n):
                    if mul[xy][z] != mul[x][mul[y][z]]:
                        ok, witness = False, f"(x, y, z) = ({x}, {y}, {z})"
                        break
                if not ok:
                    break
            if not ok:
                break
    records.append(CheckRecord("associativity", g.label, ok, witness))
    if not ok:
        return Report(tuple(records))

    e = g.identity
    ok, witness = True, None
    if not 0 <= e < n:
        ok, witness = False, f"identity index {e} out of range"
    else:
        for x in range(n):
            if mul[e][x] != x or mul[x][e] != x:
                ok, witness = False, f"x = {x}"
                break
    records.append(CheckRecord("identity", g.label, ok, witness))
    if not ok:
        return Report(tuple(records))

    ok, witness = True, None
    if len(g.inv) != n:
        ok, witness = False, "inverse table has wrong length"
    else:
        for x in range(n):
            y = g.inv[x]
            if not 0 <= y < n or mul[x][y] != e or mul[y][x] != e:
                ok, witness = False, f"x = {x}, claimed inverse {y}"
                break
    records.append(CheckRecord("inverses", g.label, ok, witness))
    if not ok:
        return Report(tuple(records))

    reached = _generated_set(g)
    ok = len(reached) == n
    witness = None if ok else f"unreached element {min(set(range(n)) - reached)}"
    records.append(CheckRecord("generation", g.label, ok, witness))
    return Report(tuple(records))


def make_hom(source: FiniteGroup, target: FiniteGroup, image: tuple[int, ...]) -> GroupHom:
    """Build a GroupHom after exhaustively verifying the homomorphism law."""
    if len(image) != source.order:
        raise ValueError(
            f"image table has length {len(image)}, expected {source.order}"
        )
    for v in image:
        if not 0 <= v < target.order:
            raise ValueError(f"image entry {v} out of range for {target.label}")
    if image[source.identity] != target.identity:
        raise ValueError(
            f"not a homomorphism {source.label} -> {target.label}: "
            f"identity maps to {image[source.identity]}"
        )
    for x in source.elements():
        for y in source.elements():
            if image[source.mul[x][y]] != target.mul[image[x]][image[y]]:
                raise ValueError(
                    f"not a homomorphism {source.label} -> {target.label}: "
                    f"witness pair ({x}, {y})"
                )
    return GroupHom(source, target, tuple(image))


def identity_hom(g: FiniteGroup) -> GroupHom:
    return GroupHom(g, g, tuple(g.elements()))


def _extend_generator_images(
    source: FiniteGroup, target: FiniteGroup, gen_images: dict[int, int]
) -> tuple[list[int] | None, str | None]:
    """Extend generator images by closure; return (table, None) or (None, why)."""
    image: list[int | None] = [None] * source.order
    image[source.identity] = target.identity
    if source.identity in gen_images and gen_images[source.identity] != target.identity:
        return None, f"generator {source.identity} is the identity but maps elsewhere"
    frontier = [source.identity]
    while frontier:
        nxt = []
        for x in frontier:
            ix = image[x]
            for g, ig in gen_images.items():
                y = source.mul[x][g]
                iy = target.mul[ix][ig]
                if image[y] is None:
                    image[y] = iy
                    nxt.append(y)
                elif image[y] != iy:
                    return None, f"ambiguous image for element {y}"
        frontier = nxt
    if any(v is None for v in image):
        missing = image.index(None)
        return None, f"generators do not reach element {missing}"
    return [v for v in image if v is not None], None


def hom_from_generators(
    source: FiniteGroup, target: FiniteGroup, gen_images: dict[int, int]
) -> GroupHom:
    """Extend images of the source generators to a verified homomorphism.

    ``gen_images`` maps each generator's element index to a target element
    index.  Raises ValueError if the assignment does not extend.
    """
    gen_idx = {i for _, i in source.generators}
    if set(gen_images) != gen_idx:
        raise ValueError(
            f"generator images must be given for exactly {sorted(gen_idx)}, "
            f"got {sorted(gen_images)}"
        )
    for v in gen_images.values():
        if not 0 <= v < target.order:
            raise ValueError(f"image {v} out of range for {target.label}")
    table, why = _extend_generator_images(source, target, gen_images)
    if table is None:
        raise ValueError(
            f"not a homomorphism {source.label} -> {target.label}: {why}"
        )
    return make_hom(source, target, tuple(table))


def hom_compose(f: GroupHom, g: GroupHom) -> GroupHom:
    """The composite 'f then g'; requires f.target = g.source."""
    if f.target != g.source:
        raise ValueError(
            f"cannot compose: {f.source.label} -> {f.target.label} "
            f"then {g.source.label} -> {g.target.label}"
        )
    return make_hom(f.source, g.target, tuple(g.image[v] for v in f.image))


def is_injective(f: GroupHom) -> bool:
    return len(set(f.image)) == len(f.image)


def make_action(
    actor: FiniteGroup, space: FiniteGroup, table: tuple[tuple[int, ...], ...]
) -> GroupAction:
    """Build a GroupAction after verifying it acts by automorphisms.

    Checks: each row is a permutation and a homomorphism of the space, the
    identity row is trivial, and rows compose as a left action:
    table[c1 c2] = table[c1] o table[c2].
    """
    if len(table) != actor.order:
        raise ValueError(
            f"action table has {len(table)} rows, expected {actor.order}"
        )
    n = space.order
    for c, row in enumerate(table):
        if len(row) != n or set(row) != set(range(n)):
            raise ValueError(f"action invariant violation: row {c} is not a permutation")
        for x in range(n):
            for y in range(n):
                if row[space.mul[x][y]] != space.mul[row[x]][row[y]]:
                    raise ValueError(
                        f"action invariant violation: row {c} is not an "
                        f"automorphism, witness ({x}, {y})"
                    )
    e = actor.identity
    if any(table[e][x] != x for x in range(n)):
        raise ValueError("action invariant violation: identity row is not trivial")
    for c1 in actor.elements():
        for c2 in actor.elements():
            row = table[actor.mul[c1][c2]]
            for x in range(n):
                if row[x] != table[c1][table[c2][x]]:
                    raise ValueError(
                        f"action invariant violation: rows do not compose, "
                        f"witness (c1, c2, x) = ({c1}, {c2}, {x})"
                    )
    return GroupAction(actor, space, tuple(tuple(r) for r in table))


def trivial_action(actor: FiniteGroup, space: FiniteGroup) -> GroupAction:
    row = tuple(space.elements())
    return GroupAction(actor, space, tuple(row for _ in actor.elements()))


def inversion_action(actor: FiniteGroup, space: FiniteGroup) -> GroupAction:
    """The order-2 actor acts on an abelian space by x -> x^-1."""
    if actor.order != 2:
        raise ValueError(
            f"inversion action needs an order-2 actor, got order {actor.order}"
        )
    if not is_abelian(space):
        raise ValueError(f"inversion action needs an abelian space, {space.label} is not")
    table = (tuple(space.elements()), space.inv)
    return make_action(actor, space, table)


def element_order(g: FiniteGroup, x: int) -> int:
    k, acc = 1, x
    while acc != g.identity:
        acc = g.mul[acc][x]
        k += 1
    return k


def is_abelian(g: FiniteGroup) -> bool:
    return all(
        g.mul[x][y] == g.mul[y][x] for x in g.elements() for y in g.elements()
    )


def find_isomorphism(g: FiniteGroup, h: FiniteGroup) -> GroupHom | None:
    """Exhaustive generator-image search for an isomorphism g -> h, or None."""
    if g.order != h.order:
        return None
    gen_idx = [i for _, i in g.generators]
    if not gen_idx:
        return identity_hom(g) if g == h else make_hom(g, h, (h.identity,))
    candidates = []
    for i in gen_idx:
        k = element_order(g, i)
        candidates.append([x for x in h.elements() if element_order(h, x) == k])

    def search(pos: int, chosen: dict[int, int]) -> GroupHom | None:
        if pos == len(gen_idx):
            table, _ = _extend_generator_images(g, h, chosen)
            if table is not None and len(set(table)) == g.order:
                hom = make_hom(g, h, tuple(table))
                return hom
            return None
        for x in candidates[pos]:
            chosen[gen_idx[pos]] = x
            found = search(pos + 1, chosen)
            if found is not None:
                return found
        chosen.pop(gen_idx[pos], None)
        return None

    return search(0, {})
