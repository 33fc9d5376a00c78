"""Length-reducing rewriting of words over S and Gamma, and local confluence.

Words are tuples of int letters.  For a gamma-semigroup with carrier size
n, letter values below n are carrier letters and value n + j is gamma
letter j.  Three rules rewrite a word:

    (g1, g2)   ->  (g1,)            keep the first gamma
    (x, g, y)  ->  (x g y,)         the triple product
    (x, y)     ->  (x gamma0 y,)    adjacent carrier letters collapse

Every rule shortens the word, so reduction terminates; the five overlap
families checked by :func:`check_local_confluence` are the only ways two
redexes can share letters.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .core import GammaSemigroup

GAMMA_GAMMA = "gamma_gamma"
S_GAMMA_S = "s_gamma_s"
S_S = "s_s"

RULES = (GAMMA_GAMMA, S_GAMMA_S, S_S)

_SPAN = {GAMMA_GAMMA: 2, S_GAMMA_S: 3, S_S: 2}

Word = tuple


def s_letter(gs: GammaSemigroup, i: int) -> int:
    if not 0 <= i < gs.s_size:
        raise IndexError(f"carrier index {i} out of range [0, {gs.s_size})")
    return i


def g_letter(gs: GammaSemigroup, j: int) -> int:
    if not 0 <= j < gs.gamma_size:
        raise IndexError(f"gamma index {j} out of range [0, {gs.gamma_size})")
    return gs.s_size + j


def is_s_letter(gs: GammaSemigroup, letter: int) -> bool:
    return letter < gs.s_size


def word(gs: GammaSemigroup, tokens) -> Word:
    """Build a word from tokens like ``s0`` and ``g1`` (or one spaced string)."""
    if isinstance(tokens, str):
        tokens = tokens.split()
    letters = []
    for tok in tokens:
        kind, digits = tok[:1], tok[1:]
        if kind not in ("s", "g") or not digits.isdigit():
            raise ValueError(f"bad word token {tok!r}, expected s<i> or g<j>")
        index = int(digits)
        letters.append(s_letter(gs, index) if kind == "s" else g_letter(gs, index))
    if not letters:
        raise ValueError("words are nonempty")
    return tuple(letters)


def word_str(gs: GammaSemigroup, w: Word) -> str:
    n = gs.s_size
    return " ".join(f"s{v}" if v < n else f"g{v - n}" for v in w)


@dataclass(frozen=True)
class Redex:
    position: int
    rule: str


def _scan(w, n):
    """Raw (position, rule) pairs, left to right.

    At a fixed position at most one rule can match, since the patterns
    disagree on their first two letters.
    """
    out = []
    last = len(w) - 1
    for p in range(last):
        a, b = w[p], w[p + 1]
        if a < n:
            if b < n:
                out.append((p, S_S))
            elif p + 1 < last and w[p + 2] < n:
                out.append((p, S_GAMMA_S))
        elif b >= n:
            out.append((p, GAMMA_GAMMA))
    return out


def find_redexes(gs: GammaSemigroup, w: Word) -> list:
    return [Redex(p, rule) for p, rule in _scan(w, gs.s_size)]


def redex_matches(gs: GammaSemigroup, w: Word, r: Redex) -> bool:
    n = gs.s_size
    p = r.position
    if p < 0 or p + _SPAN[r.rule] > len(w):
        return False
    if r.rule == GAMMA_GAMMA:
        return w[p] >= n and w[p + 1] >= n
    if r.rule == S_S:
        return w[p] < n and w[p + 1] < n
    if r.rule == S_GAMMA_S:
        return w[p] < n and w[p + 1] >= n and w[p + 2] < n
    raise ValueError(f"unknown rule {r.rule!r}")


def rewrite_once(gs: GammaSemigroup, w: Word, r: Redex) -> Word:
    """Apply one rule at one position; the redex must match."""
    if not redex_matches(gs, w, r):
        raise ValueError(f"redex {r} does not match in {word_str(gs, w)}")
    n = gs.s_size
    p = r.position
    if r.rule == GAMMA_GAMMA:
        return w[: p + 1] + w[p + 2 :]
    if r.rule == S_GAMMA_S:
        return w[:p] + (gs.table[w[p]][w[p + 1] - n][w[p + 2]],) + w[p + 3 :]
    return w[:p] + (gs.table[w[p]][gs.gamma0][w[p + 1]],) + w[p + 2 :]


def reduce(gs: GammaSemigroup, w: Word) -> Word:
    """Reduce to normal form with the deterministic leftmost strategy.

    Single left-to-right pass keeping an irreducible prefix: a rewrite
    only creates redexes touching the rewritten cell, so rescanning is
    confined to the top of the prefix.  This picks the leftmost redex at
    every step, so on confluent instances it returns the unique normal
    form and on broken instances it is still reproducible.
    """
    if not w:
        raise ValueError("words are nonempty")
    n = gs.s_size
    table = gs.table
    g0 = gs.gamma0
    out = []
    push = out.append
    for letter in w:
        push(letter)
        while len(out) >= 2:
            a, b = out[-2], out[-1]
            if a < n:
                if b < n:
                    out[-2:] = (table[a][g0][b],)
                    continue
            elif b >= n:
                out.pop()
                continue
            elif len(out) >= 3 and out[-3] < n:
                out[-3:] = (table[out[-3]][a - n][b],)
                continue
            break
    return tuple(out)


def reduce_with_strategy(gs: GammaSemigroup, w: Word, pick) -> Word:
    """Reduce choosing among redexes with ``pick(redex_list) -> index``."""
    n = gs.s_size
    current = list(w)
    while True:
        found = _scan(current, n)
        if not found:
            return tuple(current)
        p, rule = found[pick(found)]
        if rule == S_GAMMA_S:
            current[p : p + 3] = (gs.table[current[p]][current[p + 1] - n][current[p + 2]],)
        elif rule == S_S:
            current[p : p + 2] = (gs.table[current[p]][gs.gamma0][current[p + 1]],)
        else:
            del current[p + 1]


def reduce_random_strategy(gs: GammaSemigroup, w: Word, rng: random.Random) -> Word:
    return reduce_with_strategy(gs, w, lambda found: rng.randrange(len(found)))


def random_word(gs: GammaSemigroup, rng: random.Random, max_len: int = 12) -> Word:
    alphabet = gs.s_size + gs.gamma_size
    length = rng.randint(1, max_len)
    return tuple(rng.randrange(alphabet) for _ in range(length))


# The five ways two redexes can overlap, as (pattern, first redex, second
# redex).  Pattern letters: "s" ranges over the carrier, "g" over gammas.
OVERLAP_FAMILIES = (
    (1, "ssgs", Redex(0, S_S), Redex(1, S_GAMMA_S)),
    (2, "sgss", Redex(0, S_GAMMA_S), Redex(2, S_S)),
    (3, "sgsgs", Redex(0, S_GAMMA_S), Redex(2, S_GAMMA_S)),
    (4, "sss", Redex(0, S_S), Redex(1, S_S)),
    (5, "ggg", Redex(0, GAMMA_GAMMA), Redex(1, GAMMA_GAMMA)),
)


@dataclass(frozen=True)
class OverlapFailure:
    family: int
    word: Word
    left_nf: Word
    right_nf: Word


@dataclass(frozen=True)
class ConfluenceReport:
    passed: bool
    mode: str
    checked: int
    failures: tuple
    seed: int | None = None


def _family_instances(gs, pattern):
    n, m = gs.s_size, gs.gamma_size
    import itertools

    choices = [range(n) if c == "s" else range(n, n + m) for c in pattern]
    return itertools.product(*choices)


def _joins(gs, w, r1, r2):
    u1 = reduce(gs, rewrite_once(gs, w, r1))
    u2 = reduce(gs, rewrite_once(gs, w, r2))
    return u1 == u2, u1, u2


def check_local_confluence(
    gs: GammaSemigroup,
    mode: str = "exhaustive",
    sample_size: int = 1000,
    seed: int = 0,
) -> ConfluenceReport:
    """Instantiate the five overlap families and test that both reducts join.

    Exhaustive mode walks every index combination of every family and
    records the first failure per family; sample mode draws
    ``sample_size`` random instances from a seeded generator (the seed is
    echoed in the report).
    """
    if mode not in ("exhaustive", "sample"):
        raise ValueError(f"unknown mode {mode!r}")
    failures = []
    checked = 0
    if mode == "exhaustive":
        for family, pattern, r1, r2 in OVERLAP_FAMILIES:
            for w in _family_instances(gs, pattern):
                checked += 1
                ok, u1, u2 = _joins(gs, w, r1, r2)
                if not ok:
                    failures.append(OverlapFailure(family, w, u1, u2))
                    break
        return ConfluenceReport(not failures, mode, checked, tuple(failures))
    rng = random.Random(seed)
    n, m = gs.s_size, gs.gamma_size
    seen_families = set()
    for _ in range(sample_size):
        family, pattern, r1, r2 = OVERLAP_FAMILIES[rng.randrange(5)]
        w = tuple(
            rng.randrange(n) if c == "s" else n + rng.randrange(m) for c in pattern
        )
        checked += 1
        ok, u1, u2 = _joins(gs, w, r1, r2)
        if not ok and family not in seen_families:
            seen_families.add(family)
            failures.append(OverlapFailure(family, w, u1, u2))
    return ConfluenceReport(not failures, mode, checked, tuple(failures), seed=seed)
