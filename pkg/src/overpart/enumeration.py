"""Exhaustive (over)partition generation and exact evaluation of the
counting functions on both sides of the Rogers-Ramanujan-Gordon/Bressoud
family of identities.

Each identity family pairs a *condition side* (multiplicity or gap
conditions on the parts) with a *residue side* (parts restricted to residue
classes).  Both sides are computed exactly: the condition side by brute
enumeration, the residue side by an integer DP over allowed part sizes.

Families
--------
``gordon``      ordinary partitions, gap >= 2 across k-1 consecutive
                indices, at most i-1 ones / parts not 0, +-i mod 2k+1.
``bressoud``    ordinary partitions, f_l + f_{l+1} <= k-1 with a parity
                constraint at equality / parts not 0, +-i mod 2k.  The
                stated i = k case is refutable by enumeration, so verified
                campaigns use 1 <= i < k; the predicate still accepts i = k
                so the counterexample can be exhibited.
``css``         overpartitions, gap conditions relaxed at overlined parts,
                at most i-1 plain ones / plain parts not 0, +-i mod 2k for
                i < k, all parts not divisible by k for i = k.
``lovejoy_b``   the i = k specialisation of ``css`` (no cap on ones).
``lovejoy_d``   the i = 1 specialisation of ``css`` (no plain ones).
``main``        overpartitions, f_l + f_lbar + f_{l+1} <= k-1 with a parity
                constraint involving the overline count V(l) at equality /
                plain parts not 0, +-i mod 2k-1.
``clm``         the i = 1 specialisation of ``main``.

Enumeration order is deterministic: parts largest first, and at equal size
the overlined copy first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .core import InvalidParameters, Overpartition

FAMILIES = ("gordon", "bressoud", "lovejoy_b", "lovejoy_d", "css", "clm", "main")
PARTITION_FAMILIES = frozenset({"gordon", "bressoud"})

_Parts = tuple[tuple[int, bool], ...]


def require_params(family: str, k: int, i: int) -> None:
    """Validate (k, i) for ``family``; raise :class:`InvalidParameters`."""
    if family not in FAMILIES:
        raise InvalidParameters(f"unknown family {family!r}")
    if k < 1:
        raise InvalidParameters(f"k must be >= 1, got {k}")
    if family == "main":
        if not 0 <= i <= k:
            raise InvalidParameters(f"main family needs 0 <= i <= k, got i={i}, k={k}")
    elif family == "lovejoy_b":
        if i != k:
            raise InvalidParameters(f"lovejoy_b is the i=k family, got i={i}, k={k}")
    elif family in ("lovejoy_d", "clm"):
        if i != 1:
            raise InvalidParameters(f"{family} is the i=1 family, got i={i}")
    elif not 1 <= i <= k:
        raise InvalidParameters(f"{family} needs 1 <= i <= k, got i={i}, k={k}")


# ---------------------------------------------------------------------------
# generation


def _raw_overpartitions(n: int, cap: int, over_ok: bool, m: Optional[int]) -> Iterator[_Parts]:
    # parts with sizes <= cap; at size == cap an overline is allowed only
    # when over_ok (the overlined copy must precede the plain copies)
    if n == 0:
        if m is None or m == 0:
            yield ()
        return
    if m is not None and (m == 0 or n < m):
        return
    rest = None if m is None else m - 1
    for size in range(min(n, cap), 0, -1):
        for overlined in (True, False):
            if overlined and size == cap and not over_ok:
                continue
            head = (size, overlined)
            for tail in _raw_overpartitions(n - size, size, False, rest):
                yield (head,) + tail


def _raw_partitions(n: int, cap: int, m: Optional[int]) -> Iterator[tuple[int, ...]]:
    if n == 0:
        if m is None or m == 0:
            yield ()
        return
    if m is not None and (m == 0 or n < m):
        return
    rest = None if m is None else m - 1
    for size in range(min(n, cap), 0, -1):
        for tail in _raw_partitions(n - size, size, rest):
            yield (size,) + tail


def overpartitions_of(n: int, m: Optional[int] = None) -> Iterator[Overpartition]:
    """All overpartitions of weight ``n`` (with exactly ``m`` parts when
    given), each exactly once, in a stable deterministic order."""
    if n < 0:
        raise InvalidParameters(f"weight must be >= 0, got {n}")
    if m is not None and m < 0:
        raise InvalidParameters(f"part count must be >= 0, got {m}")
    for parts in _raw_overpartitions(n, n, True, m):
        yield Overpartition(parts)


def partitions_of(n: int, m: Optional[int] = None) -> Iterator[Overpartition]:
    """All ordinary partitions of ``n`` as overline-free overpartitions;
    same objects as filtering :func:`overpartitions_of` for no overlines."""
    if n < 0:
        raise InvalidParameters(f"weight must be >= 0, got {n}")
    if m is not None and m < 0:
        raise InvalidParameters(f"part count must be >= 0, got {m}")
    for sizes in _raw_partitions(n, n, m):
        yield Overpartition(tuple((s, False) for s in sizes))


def text_lines(stream) -> Iterator[str]:
    """Dump a stream of overpartitions, one text form per line."""
    for lam in stream:
        yield str(lam)


# ---------------------------------------------------------------------------
# condition-side predicates

def _levels(parts: _Parts) -> list[tuple[int, int, int]]:
    # ascending (size, plain count, overlined count); parts arrive descending
    out: list[tuple[int, int, int]] = []
    for size, overlined in reversed(parts):
        if out and out[-1][0] == size:
            s, f, fb = out[-1]
            out[-1] = (s, f + (not overlined), fb + overlined)
        else:
            out.append((size, int(not overlined), int(overlined)))
    return out


def _prep_multiplicity(parts: _Parts) -> tuple[int, bool, tuple[tuple[int, int, int], ...]]:
    # everything the bressoud/main walker needs that is independent of
    # (k, i): the plain count of ones, non-emptiness, and per relevant
    # level l a row (f_l + f_lbar + f_{l+1}, l*(f_l + f_lbar) + (l+1)*f_{l+1}, V(l))
    levels = _levels(parts)
    f1 = levels[0][1] if levels and levels[0][0] == 1 else 0
    plain = {s: f for s, f, _ in levels}
    over = {s: fb for s, _, fb in levels}
    over_sizes = [s for s, _, fb in levels if fb]
    cands = sorted({s for s, _, _ in levels} | {s - 1 for s, _, _ in levels if s >= 2})
    rows = []
    vi = 0
    v = 0
    for level in cands:
        while vi < len(over_sizes) and over_sizes[vi] <= level:
            v += 1
            vi += 1
        a = plain.get(level, 0)
        b = over.get(level, 0)
        c = plain.get(level + 1, 0)
        rows.append((a + b + c, level * (a + b) + (level + 1) * c, v))
    return f1, bool(levels), tuple(rows)


def _multiplicity_ok(k: int, i: int, prep, use_v: bool) -> bool:
    # the bressoud/main style conditions:
    #   (i)   f_1 <= i-1
    #   (ii)  f_l (+ f_lbar) + f_{l+1} <= k-1 for every l >= 1
    #   (iii) at equality, l*f_l (+ l*f_lbar) + (l+1)*f_{l+1} must match
    #         V(l) + i - 1 (or i - 1 when use_v is false) mod 2
    f1, nonempty, rows = prep
    if f1 > i - 1:
        return False
    if k == 1:
        # any part breaks (ii); for the empty object (iii) degenerates to a
        # parity constraint on i at every level
        return not nonempty and (i - 1) % 2 == 0
    cap = k - 1
    for total, lhs, v in rows:
        if total > cap:
            return False
        if total == cap and (lhs - (v if use_v else 0) - (i - 1)) % 2:
            return False
    return True


def _gap_ok(k: int, parts: _Parts, relax_overlined: bool) -> bool:
    # lambda_j - lambda_{j+k-1} >= 2, or >= 1 at an overlined lambda_j when
    # relaxed; evaluated against the canonical order
    span = k - 1
    for j in range(len(parts) - span):
        size_a, over_a = parts[j]
        need = 1 if (relax_overlined and over_a) else 2
        if size_a - parts[j + span][0] < need:
            return False
    return True


def _plain_ones(parts: _Parts) -> int:
    return sum(1 for size, overlined in parts if size == 1 and not overlined)


_MULTIPLICITY_FAMILIES = frozenset({"bressoud", "main", "clm"})


def _satisfies_parts(family: str, k: int, i: int, parts: _Parts) -> bool:
    if family == "gordon":
        return _plain_ones(parts) <= i - 1 and _gap_ok(k, parts, relax_overlined=False)
    if family in ("css", "lovejoy_b", "lovejoy_d"):
        return _plain_ones(parts) <= i - 1 and _gap_ok(k, parts, relax_overlined=True)
    if family in _MULTIPLICITY_FAMILIES:
        return _multiplicity_ok(k, i, _prep_multiplicity(parts), use_v=family != "bressoud")
    raise InvalidParameters(f"unknown family {family!r}")


def satisfies(family: str, k: int, i: int, lam: Overpartition) -> bool:
    """Does ``lam`` meet the condition-side requirements of ``family``?"""
    require_params(family, k, i)
    if family in PARTITION_FAMILIES and not lam.is_partition:
        raise InvalidParameters(f"{family} applies to ordinary partitions only")
    return _satisfies_parts(family, k, i, lam.parts)


# ---------------------------------------------------------------------------
# counting

def _stream(family: str, n: int, m: Optional[int]) -> Iterator[_Parts]:
    if family in PARTITION_FAMILIES:
        return (tuple((s, False) for s in sizes) for sizes in _raw_partitions(n, n, m))
    return _raw_overpartitions(n, n, True, m)


def count_condition_side(family: str, k: int, i: int, n: int, m: Optional[int] = None) -> int:
    """Exact number of weight-``n`` objects (with ``m`` parts when given)
    meeting the condition side of ``family``."""
    require_params(family, k, i)
    if n < 0:
        return 0
    return sum(1 for parts in _stream(family, n, m) if _satisfies_parts(family, k, i, parts))


def condition_counts(family: str, pairs: Sequence[tuple[int, int]], nmax: int) -> dict[tuple[int, int], list[int]]:
    """Counts by weight 0..nmax for many (k, i) pairs in one enumeration pass."""
    for k, i in pairs:
        require_params(family, k, i)
    out = {pair: [0] * (nmax + 1) for pair in pairs}
    shared = family in _MULTIPLICITY_FAMILIES
    use_v = family != "bressoud"
    for n in range(nmax + 1):
        for parts in _stream(family, n, None):
            if shared:
                prep = _prep_multiplicity(parts)
                for pair in pairs:
                    if _multiplicity_ok(pair[0], pair[1], prep, use_v):
                        out[pair][n] += 1
            else:
                for pair in pairs:
                    if _satisfies_parts(family, pair[0], pair[1], parts):
                        out[pair][n] += 1
    return out


@dataclass(frozen=True)
class ResidueRules:
    """Forbidden residue classes of the residue side of a family."""

    modulus: int
    forbidden_plain: frozenset[int]
    forbidden_over: frozenset[int]


def residue_rules(family: str, k: int, i: int) -> ResidueRules:
    """Modulus and forbidden classes of the residue side of ``family``.

    Partition families forbid every overlined residue; overpartition
    families leave overlined parts free except for the divisibility rules
    of ``lovejoy_b`` and ``css`` at i = k, which apply to every part.
    """
    require_params(family, k, i)
    if family == "gordon":
        mod = 2 * k + 1
        return ResidueRules(mod, frozenset({0, i % mod, (mod - i) % mod}), frozenset(range(mod)))
    if family == "bressoud":
        mod = 2 * k
        return ResidueRules(mod, frozenset({0, i % mod, (mod - i) % mod}), frozenset(range(mod)))
    if family in ("main", "clm"):
        mod = 2 * k - 1
        return ResidueRules(mod, frozenset({0, i % mod, (mod - i) % mod}), frozenset())
    if family == "lovejoy_b" or (family == "css" and i == k):
        return ResidueRules(k, frozenset({0}), frozenset({0}))
    # css with i < k, and lovejoy_d as its i = 1 case
    mod = 2 * k
    return ResidueRules(mod, frozenset({0, i % mod, (mod - i) % mod}), frozenset())


def restricted_counts(nmax: int, modulus: int, forbidden_plain, forbidden_over) -> list[int]:
    """Counts, for every weight 0..nmax, of overpartitions whose plain parts
    avoid ``forbidden_plain`` and overlined parts avoid ``forbidden_over``
    modulo ``modulus``.  Exact integer DP; partitions are the case where
    every overlined residue is forbidden."""
    if modulus < 1:
        raise InvalidParameters(f"modulus must be >= 1, got {modulus}")
    forbidden_plain = frozenset(forbidden_plain)
    forbidden_over = frozenset(forbidden_over)
    for residues in (forbidden_plain, forbidden_over):
        if not all(0 <= r < modulus for r in residues):
            raise InvalidParameters("residues must lie in 0..modulus-1")
    if nmax < 0:
        return []
    counts = [0] * (nmax + 1)
    counts[0] = 1
    for j in range(1, nmax + 1):
        if j % modulus not in forbidden_plain:
            for t in range(j, nmax + 1):
                counts[t] += counts[t - j]
    for j in range(1, nmax + 1):
        if j % modulus not in forbidden_over:
            for t in range(nmax, j - 1, -1):
                counts[t] += counts[t - j]
    return counts


def count_restricted(n: int, modulus: int, forbidden_plain, forbidden_over) -> int:
    """Single-weight form of :func:`restricted_counts`."""
    if n < 0:
        return 0
    return restricted_counts(n, modulus, forbidden_plain, forbidden_over)[n]


def count_residue_side(family: str, k: int, i: int, n: int) -> int:
    """Exact residue-side count of ``family`` at weight ``n``."""
    rules = residue_rules(family, k, i)
    return count_restricted(n, rules.modulus, rules.forbidden_plain, rules.forbidden_over)


def residue_counts(family: str, k: int, i: int, nmax: int) -> list[int]:
    """Residue-side counts for every weight 0..nmax."""
    rules = residue_rules(family, k, i)
    return restricted_counts(nmax, rules.modulus, rules.forbidden_plain, rules.forbidden_over)


# ---------------------------------------------------------------------------
# two-index tables

@dataclass(frozen=True)
class CountTable:
    """Grid of exact condition-side counts indexed by part count ``m`` and
    weight ``n``; indices outside the grid read as zero."""

    family: str
    k: int
    i: int
    mmax: int
    nmax: int
    cells: tuple[tuple[int, ...], ...]

    def cell(self, m: int, n: int) -> int:
        if m < 0 or n < 0 or m > self.mmax or n > self.nmax:
            return 0
        return self.cells[m][n]

    def column_sums(self) -> list[int]:
        """Counts by weight, summing over part counts."""
        return [sum(self.cells[m][n] for m in range(self.mmax + 1)) for n in range(self.nmax + 1)]


def count_tables(family: str, pairs: Sequence[tuple[int, int]], mmax: int, nmax: int) -> dict[tuple[int, int], CountTable]:
    """Tables for many (k, i) pairs from one enumeration pass."""
    if mmax < 0 or nmax < 0:
        raise InvalidParameters("table bounds must be >= 0")
    for k, i in pairs:
        require_params(family, k, i)
    grids = {pair: [[0] * (nmax + 1) for _ in range(mmax + 1)] for pair in pairs}
    shared = family in _MULTIPLICITY_FAMILIES
    use_v = family != "bressoud"
    for n in range(nmax + 1):
        for parts in _stream(family, n, None):
            m = len(parts)
            if m > mmax:
                continue
            if shared:
                prep = _prep_multiplicity(parts)
                for pair in pairs:
                    if _multiplicity_ok(pair[0], pair[1], prep, use_v):
                        grids[pair][m][n] += 1
            else:
                for pair in pairs:
                    if _satisfies_parts(family, pair[0], pair[1], parts):
                        grids[pair][m][n] += 1
    return {
        (k, i): CountTable(family, k, i, mmax, nmax, tuple(tuple(row) for row in grids[(k, i)]))
        for k, i in pairs
    }


def count_table(family: str, k: int, i: int, mmax: int, nmax: int) -> CountTable:
    """Condition-side counts on the grid 0..mmax x 0..nmax by enumeration."""
    return count_tables(family, [(k, i)], mmax, nmax)[(k, i)]
