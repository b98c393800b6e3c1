"""
Lattice words, standard tableaux, and the constructive bijections.

Word conventions:

* Paths over {N, E} are plain strings like "NNENE".
* Zipper words use one letter N_j per tooth index; they are tuples of
  integers (j stands for N_j) and serialize as space-separated tokens
  "N1 N2 ...", which stays unambiguous past nine teeth.
* The three-letter words attached to 12354-avoidance are tuples over the
  tokens "N1", "N2", "E".

All bijections validate their inputs and raise ValueError on anything
outside their domain.
"""
from __future__ import annotations

from itertools import combinations, combinations_with_replacement
from typing import Iterator, Sequence

from .engine import is_extension
from .perms import Perm, perm
from .posets import build, saw_poset, zip_poset

Tableau = tuple[tuple[int, ...], ...]
ZipperWord = tuple[int, ...]


# ---------------------------------------------------------------------------
# Fuss-Catalan paths

def is_fuss_catalan(w: str, t: int) -> bool:
    """True iff w is a t-Fuss-Catalan path: s Es and (t-1)s Ns for some s,
    with every prefix holding at least t-1 times as many Ns as Es."""
    if t < 1 or any(ch not in "NE" for ch in w):
        return False
    ns = es = 0
    for ch in w:
        if ch == "N":
            ns += 1
        else:
            es += 1
            if ns < (t - 1) * es:
                return False
    return ns == (t - 1) * es


def fc_paths(s: int, t: int) -> Iterator[str]:
    """All t-Fuss-Catalan paths of semilength s, built independently of
    the defining predicate by choosing the E positions directly."""
    n = s * t
    for epos in combinations(range(n), s):
        word = ["N"] * n
        for p in epos:
            word[p] = "E"
        w = "".join(word)
        if is_fuss_catalan(w, t):
            yield w


def ext_to_fcpath(pi: Sequence[int], s: int, t: int) -> str:
    """Encode a sawblade extension as a t-Fuss-Catalan path: the roots
    (the elements 1, t+1, ..., (s-1)t+1) become Es, at the positions
    complementary to where the roots sit in pi."""
    ext = perm(pi)
    if not is_extension(saw_poset(s, t), ext):
        raise ValueError("not a linear extension of the sawblade poset")
    n = s * t
    word = ["N"] * n
    for i in range(s):
        root = i * t + 1
        word[n - (ext.index(root) + 1)] = "E"
    return "".join(word)


def fcpath_to_ext(w: str, s: int, t: int) -> Perm:
    """Inverse of ext_to_fcpath.  Root positions are read off the Es from
    the right; roots fill them in decreasing order, and the remaining
    positions take each tooth's other elements top tooth first."""
    if len(w) != s * t or not is_fuss_catalan(w, t) or w.count("E") != s:
        raise ValueError(f"not a {t}-Fuss-Catalan path of semilength {s}")
    n = s * t
    out = [0] * n
    root_positions = sorted(n - 1 - p for p, ch in enumerate(w) if ch == "E")
    for i, pos in enumerate(root_positions):
        out[pos] = (s - 1 - i) * t + 1
    rest = [x for i in range(s - 1, -1, -1) for x in range(i * t + 2, i * t + t + 1)]
    it = iter(rest)
    for pos in range(n):
        if out[pos] == 0:
            out[pos] = next(it)
    return tuple(out)


# ---------------------------------------------------------------------------
# standard tableaux

def ext_to_tableau(pi: Sequence[int], s: int, t: int) -> Tableau:
    """Row r, column c of the tableau records the position in pi of the
    element (s-r)t + c; rows and columns come out strictly increasing."""
    ext = perm(pi)
    if not is_extension(build("EN", s, t), ext):
        raise ValueError("not a linear extension of the EN grid")
    pos = {x: k + 1 for k, x in enumerate(ext)}
    return tuple(tuple(pos[(s - r) * t + c] for c in range(1, t + 1))
                 for r in range(1, s + 1))


def is_standard_tableau(rows: Sequence[Sequence[int]]) -> bool:
    entries = [x for row in rows for x in row]
    if sorted(entries) != list(range(1, len(entries) + 1)):
        return False
    widths = {len(row) for row in rows}
    if len(widths) > 1:
        return False
    for row in rows:
        if any(a >= b for a, b in zip(row, row[1:])):
            return False
    for up, down in zip(rows, rows[1:]):
        if any(a >= b for a, b in zip(up, down)):
            return False
    return True


def tableau_to_ext(rows: Sequence[Sequence[int]]) -> Perm:
    """Inverse of ext_to_tableau."""
    if not rows or not is_standard_tableau(rows):
        raise ValueError("not a standard rectangular tableau")
    s, t = len(rows), len(rows[0])
    out = [0] * (s * t)
    for r, row in enumerate(rows, start=1):
        for c, position in enumerate(row, start=1):
            out[position - 1] = (s - r) * t + c
    return tuple(out)


def standard_tableaux(s: int, t: int) -> Iterator[Tableau]:
    """All standard tableaux of rectangular shape with s rows of length t,
    generated by placing 1, 2, ... at the frontier of each row."""
    filled = [0] * s  # how many cells of each row are filled

    rows: list[list[int]] = [[] for _ in range(s)]

    def rec(k: int) -> Iterator[Tableau]:
        if k > s * t:
            yield tuple(tuple(row) for row in rows)
            return
        for r in range(s):
            if filled[r] < t and (r == 0 or filled[r - 1] > filled[r]):
                filled[r] += 1
                rows[r].append(k)
                yield from rec(k + 1)
                rows[r].pop()
                filled[r] -= 1

    return rec(1)


# ---------------------------------------------------------------------------
# Catalan zippers

def is_zipper(w: Sequence[int], s: int, t: int) -> bool:
    """True iff w is a Catalan zipper of dimension s and length t: each of
    N_1..N_s appears t times, each adjacent projection (N_j as N, N_{j+1}
    as E) is a Catalan path, and the rightmost N_j precedes the leftmost
    N_{j+2}."""
    if s < 1 or t < 1:
        return False
    word = tuple(w)
    if len(word) != s * t or any(not 1 <= x <= s for x in word):
        return False
    if any(word.count(j) != t for j in range(1, s + 1)):
        return False
    for j in range(1, s):
        bal = 0
        for x in word:
            if x == j:
                bal += 1
            elif x == j + 1:
                bal -= 1
                if bal < 0:
                    return False
    for j in range(1, s - 1):
        last_j = max(p for p, x in enumerate(word) if x == j)
        first_j2 = min(p for p, x in enumerate(word) if x == j + 2)
        if last_j > first_j2:
            return False
    return True


def zippers(s: int, t: int) -> Iterator[ZipperWord]:
    """All Catalan zippers of dimension s and length t, built letter class
    by letter class so only valid interleavings are explored."""
    n = s * t

    def rec(word: tuple[int, ...], j: int) -> Iterator[ZipperWord]:
        if j > s:
            yield word
            return
        lo = 0
        if j >= 3:
            lo = max(p for p, x in enumerate(word) if x == j - 2) + 1
        slots = range(lo, len(word) + 1)
        for places in combinations_with_replacement(slots, t):
            merged: list[int] = []
            prev = 0
            for p in places:
                merged.extend(word[prev:p])
                merged.append(j)
                prev = p
            merged.extend(word[prev:])
            # Catalan projection against the previous letter
            if j >= 2:
                bal = 0
                ok = True
                for x in merged:
                    if x == j - 1:
                        bal += 1
                    elif x == j:
                        bal -= 1
                        if bal < 0:
                            ok = False
                            break
                if not ok:
                    continue
            yield from rec(tuple(merged), j + 1)

    if s < 1 or t < 1:
        return iter(())
    return rec((), 1)


def ext_to_zipper(pi: Sequence[int], s: int, t: int) -> ZipperWord:
    """Encode a 2143-avoiding EN extension by replacing each entry with
    the letter indexed by s + 1 minus its tooth."""
    ext = perm(pi)
    if not is_extension(zip_poset(s, t), ext):
        raise ValueError("not a 2143-avoiding extension of the EN grid")
    return tuple(s + 1 - ((x - 1) // t + 1) for x in ext)


def zipper_to_ext(w: Sequence[int], s: int, t: int) -> Perm:
    """Inverse of ext_to_zipper: the positions of N_k receive the elements
    of tooth s + 1 - k in increasing order."""
    if not is_zipper(w, s, t):
        raise ValueError(f"not a Catalan zipper of dimension {s}, length {t}")
    nxt = {j: (s - j) * t + 1 for j in range(1, s + 1)}
    out = []
    for letter in w:
        out.append(nxt[letter])
        nxt[letter] += 1
    return tuple(out)


def format_zipper(w: Sequence[int]) -> str:
    return " ".join(f"N{x}" for x in w)


def parse_zipper(text: str) -> ZipperWord:
    toks = text.split()
    out = []
    for tok in toks:
        if not tok.startswith("N") or not tok[1:].isdigit():
            raise ValueError(f"bad zipper letter {tok!r}")
        out.append(int(tok[1:]))
    return tuple(out)


# ---------------------------------------------------------------------------
# j,k-Catalan paths

def is_jk_catalan(w: str, n: int, j: int, k: int) -> bool:
    """True iff w consists of j Ns and n Es, becomes a Catalan path after
    prepending n - j Ns, and ends with N followed by k Es (or k = n and
    w is all Es)."""
    if not (0 <= j <= n and 1 <= k <= n):
        return False
    if w.count("N") != j or w.count("E") != n or len(w) != j + n:
        return False
    tail_ok = (len(w) >= k + 1 and w[-(k + 1):] == "N" + "E" * k) or \
              (k == n and w == "E" * n)
    if not tail_ok:
        return False
    bal = n - j
    for ch in w:
        bal += 1 if ch == "N" else -1
        if bal < 0:
            return False
    return True


def jk_paths(n: int, j: int, k: int) -> Iterator[str]:
    for npos in combinations(range(j + n), j):
        word = ["E"] * (j + n)
        for p in npos:
            word[p] = "N"
        w = "".join(word)
        if is_jk_catalan(w, n, j, k):
            yield w


def enumerate_jk(n: int, j: int, k: int) -> int:
    """Count of j,k-Catalan paths by direct generation; the slow oracle
    the transfer-matrix recurrence is checked against."""
    return sum(1 for _ in jk_paths(n, j, k))


# ---------------------------------------------------------------------------
# the three-letter paths counting 12354-avoiders

def is_12354_path(w: Sequence[str], s: int, t: int) -> bool:
    """True iff w has s N1s, s N2s, and (t-2)s Es, every prefix has at
    least as many N1s as N2s, and every prefix has at least t-2 times as
    many Es as N1s."""
    if t < 2 or s < 0:
        return False
    word = tuple(w)
    if len(word) != s * t or any(x not in ("N1", "N2", "E") for x in word):
        return False
    if word.count("N1") != s or word.count("N2") != s:
        return False
    n1 = n2 = es = 0
    for x in word:
        if x == "N1":
            n1 += 1
        elif x == "N2":
            n2 += 1
        else:
            es += 1
        if n1 < n2 or es < (t - 2) * n1:
            return False
    return True


def paths_12354(s: int, t: int) -> Iterator[tuple[str, ...]]:
    n = s * t
    for n1pos in combinations(range(n), s):
        remaining = [p for p in range(n) if p not in set(n1pos)]
        for n2sel in combinations(remaining, s):
            word = ["E"] * n
            for p in n1pos:
                word[p] = "N1"
            for p in n2sel:
                word[p] = "N2"
            w = tuple(word)
            if is_12354_path(w, s, t):
                yield w


def enumerate_12354_paths(s: int, t: int) -> int:
    return sum(1 for _ in paths_12354(s, t))


def ext_to_12354_path(pi: Sequence[int], s: int, t: int) -> tuple[str, ...]:
    """Encode a 12354-avoiding EN extension: spine-t elements become N2s,
    spine-(t-1) elements N1s, the rest Es, at position-complemented slots
    (mirroring the Fuss-Catalan encoding)."""
    ext = perm(pi)
    if t < 2:
        raise ValueError("defined for t >= 2 only")
    if not is_extension(build("EN", s, t), ext):
        raise ValueError("not a linear extension of the EN grid")
    n = s * t
    word = ["E"] * n
    for x in ext:
        spine = t - ((x - 1) % t)
        if spine == t:
            word[n - (ext.index(x) + 1)] = "N2"
        elif spine == t - 1:
            word[n - (ext.index(x) + 1)] = "N1"
    return tuple(word)
