"""Bit-vector set families and the intersection-structure predicates.

Sets are Python ints used as bit masks over a ground set 0..ground-1.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, NamedTuple


def mask_of(elems: Iterable[int]) -> int:
    m = 0
    for e in elems:
        m |= 1 << e
    return m


def elems_of(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


@dataclass(frozen=True)
class SetFamily:
    """Sorted list of bit-vector sets over a fixed ground size.

    Generic constructions are duplicate-free; families projected from
    path subgraphs may carry duplicates, flagged in note.
    """

    ground: int
    sets: tuple[int, ...]
    name: str = ""
    note: str | None = None

    def __post_init__(self) -> None:
        full = (1 << self.ground) - 1
        for s in self.sets:
            if s & ~full:
                raise ValueError("set exceeds ground range")
        if list(self.sets) != sorted(self.sets):
            raise ValueError("sets must be sorted")

    @classmethod
    def from_masks(cls, ground: int, masks: Iterable[int], name: str = "") -> "SetFamily":
        return cls(ground=ground, sets=tuple(sorted(set(masks))), name=name)

    @classmethod
    def from_vertex_sets(cls, ground: int, sets: Iterable[Iterable[int]],
                         name: str = "") -> "SetFamily":
        return cls.from_masks(ground, (mask_of(s) for s in sets), name)

    def __len__(self) -> int:
        return len(self.sets)

    def member(self, i: int) -> tuple[int, ...]:
        return elems_of(self.sets[i])


@dataclass(frozen=True)
class FamilyStats:
    m: int
    delta: int
    delta_s: dict[int, int]
    min_size: int
    common: int


class StarCheck(NamedTuple):
    is_star: bool
    common: int | None
    empty_family: bool


def is_s_intersecting(fam: SetFamily, s: int) -> bool:
    """Every pair of members meets in at least s elements."""
    if s < 1:
        raise ValueError(f"need s >= 1, got {s}")
    sets = fam.sets
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            if (sets[i] & sets[j]).bit_count() < s:
                return False
    return True


def is_exactly_s_intersecting(fam: SetFamily, s: int) -> bool:
    if s < 1:
        raise ValueError(f"need s >= 1, got {s}")
    sets = fam.sets
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            if (sets[i] & sets[j]).bit_count() != s:
                return False
    return True


def full_star(fam: SetFamily, center: int) -> SetFamily:
    """Members containing the fixed set (a bit mask)."""
    kept = tuple(s for s in fam.sets if s & center == center)
    return SetFamily(ground=fam.ground, sets=kept,
                     name=f"{fam.name}|star@{elems_of(center)}", note=fam.note)


def stats(fam: SetFamily, s_max: int = 1) -> FamilyStats:
    """Exact degree statistics; Delta_s scans s-subsets of members only."""
    if s_max < 1:
        raise ValueError(f"need s_max >= 1, got {s_max}")
    if not fam.sets:
        return FamilyStats(m=0, delta=0, delta_s={s: 0 for s in range(1, s_max + 1)},
                           min_size=0, common=0)
    delta_s: dict[int, int] = {}
    for s in range(1, s_max + 1):
        counts: Counter[tuple[int, ...]] = Counter()
        for mask in fam.sets:
            for sub in combinations(elems_of(mask), s):
                counts[sub] += 1
        delta_s[s] = max(counts.values()) if counts else 0
    common = fam.sets[0]
    for mask in fam.sets[1:]:
        common &= mask
    return FamilyStats(m=len(fam.sets), delta=delta_s[1], delta_s=delta_s,
                       min_size=min(m.bit_count() for m in fam.sets), common=common)


def best_full_star(fam: SetFamily, s: int) -> tuple[int, int]:
    """(size, center mask) of the largest full s-star, lex-least center.

    Any candidate center with a nonempty star is an s-subset of some
    member, so only those are scanned.
    """
    if s < 1:
        raise ValueError(f"need s >= 1, got {s}")
    counts: Counter[tuple[int, ...]] = Counter()
    for mask in fam.sets:
        for sub in combinations(elems_of(mask), s):
            counts[sub] += 1
    if not counts:
        return 0, 0
    size = max(counts.values())
    center = min(sub for sub, c in counts.items() if c == size)
    return size, mask_of(center)


def is_triangular(fam: SetFamily) -> bool:
    """Every three members have empty common intersection."""
    if len(fam.sets) < 3:
        return True
    return stats(fam).delta <= 2


def is_sperner(fam: SetFamily) -> bool:
    """No member contains another (duplicates count as containment)."""
    sets = fam.sets
    for i in range(len(sets)):
        for j in range(len(sets)):
            if i != j and sets[i] & sets[j] == sets[i]:
                return False
    return True


def is_s_star(fam: SetFamily, s: int) -> StarCheck:
    """Whether all members share at least s common elements.

    The common intersection of an empty family is undefined, so the
    empty family reports not-a-star with the empty_family flag set.
    """
    if s < 1:
        raise ValueError(f"need s >= 1, got {s}")
    if not fam.sets:
        return StarCheck(is_star=False, common=None, empty_family=True)
    common = fam.sets[0]
    for mask in fam.sets[1:]:
        common &= mask
    return StarCheck(is_star=common.bit_count() >= s, common=common, empty_family=False)


def parse_family(text: str) -> SetFamily:
    """Read the '# ground=n count=m' + one-set-per-line text format."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("#"):
        raise ValueError("missing '# ground=n count=m' header")
    fields = dict(part.split("=") for part in lines[0].lstrip("# ").split())
    ground = int(fields["ground"])
    count = int(fields["count"])
    body = lines[1:]
    if len(body) != count:
        raise ValueError(f"expected {count} sets, found {len(body)}")
    masks = []
    for ln in body:
        elems = [int(x) for x in ln.split()]
        if elems != sorted(elems):
            raise ValueError(f"set line not ascending: {ln!r}")
        if any(not 0 <= e < ground for e in elems):
            raise ValueError(f"element out of range: {ln!r}")
        masks.append(mask_of(elems))
    return SetFamily(ground=ground, sets=tuple(sorted(masks)), name="parsed")


def emit_family(fam: SetFamily) -> str:
    out = [f"# ground={fam.ground} count={len(fam.sets)}"]
    out.extend(" ".join(str(e) for e in elems_of(mask)) for mask in fam.sets)
    return "\n".join(out) + "\n"
