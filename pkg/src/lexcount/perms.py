"""
Permutations in one-line notation.

A permutation of length n is a tuple of the integers 1..n, each appearing
exactly once.  The empty tuple is the (valid) empty permutation.  All
functions here are pure; permutations are never mutated.

Serialization convention: a permutation of length <= 9 prints as a bare
digit string ("1243"), longer ones as comma-separated integers
("10,7,11,4").  `parse_perm` accepts both forms.
"""
from __future__ import annotations

from typing import Iterable, Sequence

Perm = tuple[int, ...]


def perm(entries: Iterable[int]) -> Perm:
    """Validate and freeze a sequence of entries as a permutation of [n]."""
    p = tuple(entries)
    n = len(p)
    if sorted(p) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {p}")
    return p


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def decreasing(n: int) -> Perm:
    return tuple(range(n, 0, -1))


def reverse(pi: Sequence[int]) -> Perm:
    return tuple(reversed(pi))


def complement(pi: Sequence[int]) -> Perm:
    n = len(pi)
    return tuple(n + 1 - x for x in pi)


def reverse_complement(pi: Sequence[int]) -> Perm:
    n = len(pi)
    return tuple(n + 1 - x for x in reversed(pi))


def contains(pi: Sequence[int], sigma: Sequence[int]) -> bool:
    """
    True iff some subsequence of pi is order-isomorphic to sigma.

    Pruned depth-first subsequence matching: entries of sigma are matched
    left to right, and a candidate entry is accepted only if its relative
    order against all previously chosen entries agrees with sigma.  The
    empty pattern is contained in everything.
    """
    m = len(sigma)
    n = len(pi)
    if m == 0:
        return True
    if m > n:
        return False

    def dfs(k: int, start: int, chosen: list[int]) -> bool:
        if k == m:
            return True
        sk = sigma[k]
        for p in range(start, n - (m - k) + 1):
            x = pi[p]
            ok = True
            for q, v in enumerate(chosen):
                if (x > v) != (sk > sigma[q]):
                    ok = False
                    break
            if ok:
                chosen.append(x)
                if dfs(k + 1, p + 1, chosen):
                    return True
                chosen.pop()
        return False

    return dfs(0, 0, [])


def avoids(pi: Sequence[int], sigma: Sequence[int]) -> bool:
    return not contains(pi, sigma)


def avoids_all(pi: Sequence[int], patterns: Iterable[Sequence[int]]) -> bool:
    """True iff pi contains none of the given patterns (empty set: True)."""
    return all(not contains(pi, sigma) for sigma in patterns)


def inv(pi: Sequence[int]) -> int:
    """Number of pairs i < j with pi(i) > pi(j)."""
    n = len(pi)
    return sum(1 for i in range(n) for j in range(i + 1, n) if pi[i] > pi[j])


def descents(pi: Sequence[int]) -> set[int]:
    """Positions i (1-based) with pi(i) > pi(i+1)."""
    return {i + 1 for i in range(len(pi) - 1) if pi[i] > pi[i + 1]}


def maj(pi: Sequence[int]) -> int:
    """Major index: the sum of the descent positions."""
    return sum(descents(pi))


def normalize_pattern_set(patterns: Iterable[Sequence[int]]) -> frozenset[Perm]:
    """Collapse duplicates into a canonical frozenset of tuples."""
    return frozenset(perm(p) for p in patterns)


def rc_closure_key(patterns: Iterable[Sequence[int]]) -> frozenset[Perm]:
    """
    Canonical key of a pattern set under simultaneous reverse-complement:
    the lexicographically smaller of the set and its rc-image.  Two pattern
    sets with equal keys have equinumerous avoiding extension sets on every
    rectangular poset.
    """
    ps = normalize_pattern_set(patterns)
    rc = frozenset(reverse_complement(p) for p in ps)
    return min(ps, rc, key=lambda s: sorted(s))


def format_perm(pi: Sequence[int]) -> str:
    if len(pi) <= 9:
        return "".join(str(x) for x in pi)
    return ",".join(str(x) for x in pi)


def parse_perm(text: str) -> Perm:
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        return perm(int(tok) for tok in text.split(","))
    if not text.isdigit():
        raise ValueError(f"cannot parse permutation: {text!r}")
    return perm(int(ch) for ch in text)
