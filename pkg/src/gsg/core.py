"""Finite gamma-semigroups and plain finite semigroups as dense index tables."""

from __future__ import annotations

import itertools
from dataclasses import dataclass


class InternalInvariantError(RuntimeError):
    """An impossible state: signals a bug in this package, not bad input."""


def _freeze3(table) -> tuple:
    return tuple(tuple(tuple(row) for row in block) for block in table)


@dataclass(frozen=True)
class GammaSemigroup:
    """A finite gamma-semigroup on carrier indices 0..n-1 and gammas 0..m-1.

    ``table[a][g][b]`` is the triple product of carrier elements a, b
    through gamma g.  ``gamma0`` is the distinguished gamma used by the
    two-letter collapse rule and everything built on top of it.

    Construction checks only the shape of the table; entries may be out
    of range and the mixed associativity law may fail.  Use
    :func:`validate_gamma_semigroup` to check both.
    """

    s_size: int
    gamma_size: int
    table: tuple
    gamma0: int = 0

    def __post_init__(self):
        if self.s_size < 1 or self.gamma_size < 1:
            raise ValueError("carrier and gamma sets must be nonempty")
        if not 0 <= self.gamma0 < self.gamma_size:
            raise ValueError(
                f"gamma0 {self.gamma0} out of range [0, {self.gamma_size})"
            )
        table = _freeze3(self.table)
        if len(table) != self.s_size or any(
            len(block) != self.gamma_size
            or any(len(row) != self.s_size for row in block)
            for block in table
        ):
            raise ValueError("table must have shape n x m x n")
        object.__setattr__(self, "table", table)

    def product(self, a: int, gamma: int, b: int) -> int:
        return gamma_product(self, a, gamma, b)


@dataclass(frozen=True)
class FiniteSemigroup:
    """A plain finite semigroup given by its n x n product table."""

    size: int
    product: tuple
    labels: tuple | None = None

    def __post_init__(self):
        if self.size < 1:
            raise ValueError("semigroup must be nonempty")
        product = tuple(tuple(row) for row in self.product)
        if len(product) != self.size or any(len(row) != self.size for row in product):
            raise ValueError("product table must be size x size")
        object.__setattr__(self, "product", product)
        if self.labels is not None:
            labels = tuple(self.labels)
            if len(labels) != self.size:
                raise ValueError("labels must match size")
            object.__setattr__(self, "labels", labels)

    def mul(self, a: int, b: int) -> int:
        return self.product[a][b]

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels is not None else f"x{a}"


def associativity_witness(sg: FiniteSemigroup):
    """First triple (a, b, c) with (ab)c != a(bc), or None if associative."""
    p = sg.product
    r = range(sg.size)
    for a in r:
        for b in r:
            ab = p[a][b]
            for c in r:
                if p[ab][c] != p[a][p[b][c]]:
                    return (a, b, c)
    return None


@dataclass(frozen=True)
class GroupCheck:
    ok: bool
    identity: object | None
    reason: str | None


def group_check(elements, mul) -> GroupCheck:
    """Exhaustive group axioms for a finite set under a binary callable.

    Checks closure, a two-sided identity and two-sided inverses.  The
    elements may be any hashable values; ``mul`` must accept two of them.
    """
    elems = list(elements)
    members = set(elems)
    if not members:
        return GroupCheck(False, None, "empty set")
    for a in elems:
        for b in elems:
            if mul(a, b) not in members:
                return GroupCheck(False, None, f"not closed at ({a}, {b})")
    identity = None
    for e in elems:
        if all(mul(e, a) == a and mul(a, e) == a for a in elems):
            identity = e
            break
    if identity is None:
        return GroupCheck(False, None, "no identity")
    for a in elems:
        if not any(mul(a, b) == identity and mul(b, a) == identity for b in elems):
            return GroupCheck(False, identity, f"no inverse for {a}")
    return GroupCheck(True, identity, None)


def is_group(sg: FiniteSemigroup) -> bool:
    return group_check(range(sg.size), sg.mul).ok


@dataclass(frozen=True)
class RangeViolation:
    a: int
    gamma: int
    b: int
    value: int


@dataclass(frozen=True)
class AssociativityViolation:
    """Witness quintuple with both sides of the failed equation."""

    a: int
    b: int
    c: int
    alpha: int
    beta: int
    left: int
    right: int


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple


def validate_gamma_semigroup(gs: GammaSemigroup) -> ValidationReport:
    """Range check plus the mixed associativity law, by exhaustive loops.

    Violations are data, not exceptions.  Associativity is only scanned
    once every entry is in range, since out-of-range entries make the
    nested lookups meaningless.
    """
    n, m = gs.s_size, gs.gamma_size
    t = gs.table
    bad = []
    for a in range(n):
        for g in range(m):
            for b in range(n):
                v = t[a][g][b]
                if not isinstance(v, int) or not 0 <= v < n:
                    bad.append(RangeViolation(a, g, b, v))
    if not bad:
        for a, alpha, b in itertools.product(range(n), range(m), range(n)):
            left_inner = t[a][alpha][b]
            for beta in range(m):
                row = t[left_inner][beta]
                for c in range(n):
                    left = row[c]
                    right = t[a][alpha][t[b][beta][c]]
                    if left != right:
                        bad.append(
                            AssociativityViolation(a, b, c, alpha, beta, left, right)
                        )
    return ValidationReport(not bad, tuple(bad))


def gamma_product(gs: GammaSemigroup, a: int, gamma: int, b: int) -> int:
    if not 0 <= a < gs.s_size or not 0 <= b < gs.s_size:
        raise IndexError(f"carrier index out of range [0, {gs.s_size})")
    if not 0 <= gamma < gs.gamma_size:
        raise IndexError(f"gamma index out of range [0, {gs.gamma_size})")
    return gs.table[a][gamma][b]


def derived_semigroup(gs: GammaSemigroup, gamma: int) -> FiniteSemigroup:
    """The plain semigroup on S with x*y = x gamma y (associative by the axiom)."""
    if not 0 <= gamma < gs.gamma_size:
        raise IndexError(f"gamma index out of range [0, {gs.gamma_size})")
    n = gs.s_size
    table = tuple(tuple(gs.table[a][gamma][b] for b in range(n)) for a in range(n))
    return FiniteSemigroup(n, table, labels=tuple(f"x{i}" for i in range(n)))


def sandwich_gamma_semigroup(seed_table, gamma_elements, gamma0: int = 0) -> GammaSemigroup:
    """Gamma-semigroup from a seed semigroup T and a subset of T as gammas.

    The triple product is a * g * b computed in T.  ``gamma_elements``
    lists T-indices; ``gamma0`` indexes into that list.
    """
    t = tuple(tuple(row) for row in seed_table)
    n = len(t)
    if n < 1 or any(len(row) != n for row in t):
        raise ValueError("seed table must be square and nonempty")
    for row in t:
        for v in row:
            if not isinstance(v, int) or not 0 <= v < n:
                raise ValueError(f"seed table entry {v} out of range [0, {n})")
    seed = FiniteSemigroup(n, t)
    witness = associativity_witness(seed)
    if witness is not None:
        raise ValueError(f"seed table is not associative, witness {witness}")
    gammas = tuple(gamma_elements)
    if not gammas:
        raise ValueError("gamma subset must be nonempty")
    if len(set(gammas)) != len(gammas):
        raise ValueError("gamma subset must not repeat elements")
    for g in gammas:
        if not 0 <= g < n:
            raise ValueError(f"gamma element {g} out of range [0, {n})")
    table = tuple(
        tuple(tuple(t[t[a][g]][b] for b in range(n)) for g in gammas)
        for a in range(n)
    )
    return GammaSemigroup(n, len(gammas), table, gamma0=gamma0)


def funcomp_gamma_semigroup(a_size: int, b_size: int) -> GammaSemigroup:
    """Gamma-semigroup of all maps A -> B with gammas all maps B -> A.

    Maps are enumerated lexicographically as value tuples.  Composition
    applies right to left: the triple product of x, g, y sends t to
    x(g(y(t))).
    """
    if a_size < 1 or b_size < 1:
        raise ValueError("both sets must be nonempty")
    s_maps = list(itertools.product(range(b_size), repeat=a_size))
    g_maps = list(itertools.product(range(a_size), repeat=b_size))
    s_index = {f: i for i, f in enumerate(s_maps)}
    table = tuple(
        tuple(
            tuple(
                s_index[tuple(x[g[y[t]]] for t in range(a_size))]
                for y in s_maps
            )
            for g in g_maps
        )
        for x in s_maps
    )
    return GammaSemigroup(len(s_maps), len(g_maps), table, gamma0=0)


def generate_example(kind: str, **params) -> GammaSemigroup:
    """Dispatcher over the two example families, for the command line."""
    if kind == "funcomp":
        return funcomp_gamma_semigroup(params["a_size"], params["b_size"])
    if kind == "sandwich":
        return sandwich_gamma_semigroup(
            params["seed_table"],
            params["gamma_elements"],
            gamma0=params.get("gamma0", 0),
        )
    raise ValueError(f"unknown example kind {kind!r}")
