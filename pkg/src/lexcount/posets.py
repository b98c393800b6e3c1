"""
Rectangular grid posets on [s*t] and their two augmentations.

Coordinates: an element sits on a tooth i (1..s) and a spine j (1..t).
The element at (i, j) must precede the element at (i', j') in every
linear extension whenever i >= i' and j >= j' (and the coordinates
differ).  Two label conventions cover the eight compass-named families:

    EN: label(i, j) = i*t - j + 1
    NE: label(i, j) = (i - 1)*t + j

The remaining six families are obtained by swapping (s, t) (vertical
mirror, an identical poset) and/or dualizing (horizontal mirror, which
reverses every extension):

    WN(s,t) = EN(t,s)         NW(s,t) = NE(t,s)
    WS(s,t) = dual EN(s,t)    ES(s,t) = dual EN(t,s)
    SW(s,t) = dual NE(s,t)    SE(s,t) = dual NE(t,s)

CLI spec strings look like "EN:4x3", optionally suffixed "+saw" or "+zip".
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .perms import Perm, reverse as perm_reverse

FAMILIES = ("EN", "NE", "ES", "SE", "WN", "NW", "WS", "SW")

# families whose declared (s, t) swap against the internal grid
_SWAPPED = {"WN", "NW", "ES", "SE"}
# families built as duals (extensions are reversed relative to the base grid)
_DUAL = {"WS", "ES", "SW", "SE"}
_NE_BASED = {"NE", "NW", "SW", "SE"}


@dataclass(frozen=True)
class GridPoset:
    """A labeled grid order, possibly with extra precedence constraints.

    ``coords[x - 1]`` is the (tooth, spine) pair of element x relative to
    the internal grid of ``grid_s`` teeth and ``grid_t`` spines.
    ``extra_before`` holds pairs (a, b): a must precede b beyond the grid
    order.  ``dualized`` means the grid order is reversed.
    """

    family: str
    s: int
    t: int
    grid_s: int
    grid_t: int
    coords: tuple[tuple[int, int], ...]
    extra_before: frozenset[tuple[int, int]] = frozenset()
    dualized: bool = False
    tag: str = ""

    @property
    def n(self) -> int:
        return self.grid_s * self.grid_t

    def label_of(self, tooth: int, spine: int) -> int:
        return self.coords.index((tooth, spine)) + 1

    def _check_element(self, x: int) -> None:
        if not 1 <= x <= self.n:
            raise ValueError(f"element {x} out of range 1..{self.n}")

    def tooth_of(self, x: int) -> int:
        self._check_element(x)
        return self.coords[x - 1][0]

    def spine_of(self, x: int) -> int:
        self._check_element(x)
        return self.coords[x - 1][1]

    @cached_property
    def direct_preds(self) -> tuple[frozenset[int], ...]:
        """For each element, the elements that must come directly before it
        (grid covers plus extra_before pairs)."""
        preds: list[set[int]] = [set() for _ in range(self.n)]
        lab = {c: x + 1 for x, c in enumerate(self.coords)}
        for x, (i, j) in enumerate(self.coords, start=1):
            # grid covers: (i, j) is covered by (i-1, j) and (i, j-1)
            for i2, j2 in ((i - 1, j), (i, j - 1)):
                if (i2, j2) in lab:
                    a, b = x, lab[(i2, j2)]
                    if self.dualized:
                        a, b = b, a
                    preds[b - 1].add(a)
        for a, b in self.extra_before:
            preds[b - 1].add(a)
        return tuple(frozenset(p) for p in preds)

    @cached_property
    def _closure(self) -> tuple[frozenset[int], ...]:
        """ancestors[x-1]: all elements that must precede x."""
        n = self.n
        order = _topo_order(n, self.direct_preds)
        anc: list[set[int]] = [set() for _ in range(n)]
        for x in order:
            acc: set[int] = set()
            for p in self.direct_preds[x - 1]:
                acc.add(p)
                acc |= anc[p - 1]
            anc[x - 1] = acc
        return tuple(frozenset(a) for a in anc)

    def must_precede(self, a: int, b: int) -> bool:
        """Strict precedence in the transitive closure."""
        self._check_element(a)
        self._check_element(b)
        return a in self._closure[b - 1]

    def spec_string(self) -> str:
        suffix = f"+{self.tag}" if self.tag else ""
        return f"{self.family}:{self.s}x{self.t}{suffix}"


def _topo_order(n: int, preds: Sequence[frozenset[int]]) -> list[int]:
    indeg = [len(p) for p in preds]
    succs: list[list[int]] = [[] for _ in range(n)]
    for b in range(1, n + 1):
        for a in preds[b - 1]:
            succs[a - 1].append(b)
    ready = [x for x in range(1, n + 1) if indeg[x - 1] == 0]
    order: list[int] = []
    while ready:
        x = ready.pop()
        order.append(x)
        for y in succs[x - 1]:
            indeg[y - 1] -= 1
            if indeg[y - 1] == 0:
                ready.append(y)
    if len(order) != n:
        raise ValueError("precedence constraints contain a cycle")
    return order


def _grid_coords(gs: int, gt: int, ne: bool) -> tuple[tuple[int, int], ...]:
    coords: list[tuple[int, int] | None] = [None] * (gs * gt)
    for i in range(1, gs + 1):
        for j in range(1, gt + 1):
            x = (i - 1) * gt + j if ne else i * gt - j + 1
            coords[x - 1] = (i, j)
    return tuple(coords)  # type: ignore[arg-type]


def build(family: str, s: int, t: int) -> GridPoset:
    """Construct one of the eight rectangular posets on [s*t]."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if s <= 0 or t <= 0:
        raise ValueError(f"dimensions must be positive, got s={s}, t={t}")
    gs, gt = (t, s) if family in _SWAPPED else (s, t)
    coords = _grid_coords(gs, gt, ne=family in _NE_BASED)
    return GridPoset(family=family, s=s, t=t, grid_s=gs, grid_t=gt,
                     coords=coords, dualized=family in _DUAL)


def saw_poset(s: int, t: int) -> GridPoset:
    """EN grid plus the pairs ((j+1)t before (j-1)t+2), 1 <= j <= s-1.

    Its linear extensions are exactly the 1243-avoiding extensions of the
    EN grid.  s = 0 gives the empty poset (one empty extension).  For
    t = 1 the extra pairs degenerate to self-loops and every extension of
    the chain avoids 1243 anyway, so the plain chain is returned.
    """
    if t <= 0:
        raise ValueError(f"t must be positive, got {t}")
    if s < 0:
        raise ValueError(f"s must be non-negative, got {s}")
    if s == 0:
        return GridPoset(family="EN", s=0, t=t, grid_s=0, grid_t=t,
                         coords=(), tag="saw")
    if t == 1:
        return build("EN", s, t)
    extra = frozenset(((j + 1) * t, (j - 1) * t + 2) for j in range(1, s))
    base = build("EN", s, t)
    return GridPoset(family="EN", s=s, t=t, grid_s=s, grid_t=t,
                     coords=base.coords, extra_before=extra, tag="saw")


def zip_poset(s: int, t: int) -> GridPoset:
    """EN grid plus the pairs (jt before (j-3)t+1), 3 <= j <= s.

    Its linear extensions are exactly the 2143-avoiding extensions of the
    EN grid.  For t = 1 the plain chain is returned unchanged.
    """
    base = build("EN", s, t)
    if t == 1:
        return base
    extra = frozenset((j * t, (j - 3) * t + 1) for j in range(3, s + 1))
    return GridPoset(family="EN", s=s, t=t, grid_s=s, grid_t=t,
                     coords=base.coords, extra_before=extra, tag="zip")


def empty_poset() -> GridPoset:
    return GridPoset(family="EN", s=0, t=1, grid_s=0, grid_t=1, coords=())


@dataclass(frozen=True)
class CanonicalProblem:
    family: str  # "EN" or "NE"
    s: int
    t: int
    patterns: frozenset[Perm] = frozenset()

    def poset(self) -> GridPoset:
        return build(self.family, self.s, self.t)


def canonicalize(family: str, s: int, t: int,
                 patterns: Iterable[Sequence[int]] = ()) -> CanonicalProblem:
    """Reduce any of the eight families to an EN or NE problem with the
    same avoider count.  Swapped families exchange (s, t); dual families
    additionally reverse every forbidden pattern."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    ps = frozenset(tuple(p) for p in patterns)
    if family in _SWAPPED:
        s, t = t, s
    if family in _DUAL:
        ps = frozenset(perm_reverse(p) for p in ps)
    canon = "EN" if family in ("EN", "WN", "WS", "ES") else "NE"
    return CanonicalProblem(family=canon, s=s, t=t, patterns=ps)


_SPEC_RE = re.compile(r"^([A-Z]{2}):(\d+)x(\d+)(\+saw|\+zip)?$")


def parse_poset_spec(text: str) -> GridPoset:
    """Parse a CLI poset spec like "EN:4x3", "EN:4x3+saw", "SW:2x4"."""
    m = _SPEC_RE.match(text.strip())
    if not m:
        raise ValueError(f"bad poset spec {text!r}; expected FAMILY:SxT[+saw|+zip]")
    family, s, t, suffix = m.group(1), int(m.group(2)), int(m.group(3)), m.group(4)
    if suffix:
        if family != "EN":
            raise ValueError(f"{suffix[1:]} augmentation is defined on EN only")
        return saw_poset(s, t) if suffix == "+saw" else zip_poset(s, t)
    return build(family, s, t)
