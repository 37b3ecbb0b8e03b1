"""Executable overline-switch and part-stripping maps behind the count
decomposition of the ``main`` family, with extensional per-cell checks.

For fixed k, i and a cell (m parts, weight n) write U for the set of
``main`` condition-side overpartitions in that cell, S for those members
with an overlined 1 and exactly i-1 plain ones, and T for those with an
overlined 1 and exactly i-2 plain ones (for i = 1, T is instead the members
with no part of underlying size 1, which makes S and T partition U there).

Three maps are implemented:

* ``iota`` -- toggles the overline on the smallest underlying size, sending
  the (k, i-1) cell set into the (k, i) one and missing exactly S and T.
* ``phi`` -- strips all i parts of underlying size 1 then lowers every part
  by one, a bijection from S onto the (k, k-i) cell (m-i, n-m).
* ``chi`` -- strips the i-1 parts of underlying size 1 then lowers, a
  bijection from T onto the (k, k-i) cell (m-i+1, n-m), for i >= 2.  At
  i = 1 only the cardinality identity holds; the literal map does not land
  in the target cell, so ``chi`` refuses i = 1.

Domain membership is always recomputed; a :class:`DomainViolation` is a
caller bug, never undefined behaviour.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import InvalidParameters, Overpartition
from .enumeration import overpartitions_of, satisfies


class DomainViolation(ValueError):
    """The supplied overpartition is outside the map's domain."""


class UnsupportedRange(ValueError):
    """The map is not defined at these parameters (chi at i = 1)."""


@dataclass(frozen=True)
class CellSpec:
    """One verification cell: which of U, S, T at (k, i, m parts, weight n)."""

    k: int
    i: int
    m: int
    n: int
    which: str

    def __post_init__(self):
        if self.which not in ("U", "S", "T"):
            raise InvalidParameters(f"which must be U, S or T, got {self.which!r}")

    def __str__(self) -> str:
        return f"{self.which}(k={self.k},i={self.i},m={self.m},n={self.n})"


def _ones(lam: Overpartition) -> tuple[int, int]:
    plain = sum(1 for s, o in lam.parts if s == 1 and not o)
    over = sum(1 for s, o in lam.parts if s == 1 and o)
    return plain, over


def _in_s(k: int, i: int, lam: Overpartition) -> bool:
    plain, over = _ones(lam)
    return over == 1 and plain == i - 1 and satisfies("main", k, i, lam)


def _in_t(k: int, i: int, lam: Overpartition) -> bool:
    plain, over = _ones(lam)
    if i == 1:
        want = over == 0 and plain == 0
    else:
        want = over == 1 and plain == i - 2
    return want and satisfies("main", k, i, lam)


def members(cell: CellSpec) -> tuple[Overpartition, ...]:
    """All overpartitions in the cell, in enumeration order."""
    k, i = cell.k, cell.i
    if cell.m < 0 or cell.n < 0:
        return ()
    if cell.which == "U":
        keep = lambda lam: satisfies("main", k, i, lam)
    elif cell.which == "S":
        keep = lambda lam: _in_s(k, i, lam)
    else:
        keep = lambda lam: _in_t(k, i, lam)
    return tuple(lam for lam in overpartitions_of(cell.n, cell.m) if keep(lam))


def card(cell: CellSpec) -> int:
    """Exact size of the cell set."""
    return len(members(cell))


def card_u(k: int, i: int, m: int, n: int) -> int:
    return card(CellSpec(k, i, m, n, "U"))


def card_s(k: int, i: int, m: int, n: int) -> int:
    return card(CellSpec(k, i, m, n, "S"))


def card_t(k: int, i: int, m: int, n: int) -> int:
    return card(CellSpec(k, i, m, n, "T"))


# ---------------------------------------------------------------------------
# the maps

def iota(k: int, i: int, lam: Overpartition) -> Overpartition:
    """Overline switch at the smallest underlying size, from the (k, i-1)
    condition set into the (k, i) one; the empty overpartition is a fixed
    point.  If the smallest size carries an overline it is removed,
    otherwise the smallest plain part gains one."""
    if not 1 <= i <= k:
        raise InvalidParameters(f"need 1 <= i <= k, got k={k}, i={i}")
    if not satisfies("main", k, i - 1, lam):
        raise DomainViolation(f"{lam} fails the (k={k}, i={i - 1}) conditions")
    if not lam.parts:
        return lam
    smallest = lam.parts[-1][0]
    parts = list(lam.parts)
    if (smallest, True) in parts:
        parts[parts.index((smallest, True))] = (smallest, False)
    else:
        parts[parts.index((smallest, False))] = (smallest, True)
    return Overpartition(tuple(parts))


def _strip_ones_and_lower(lam: Overpartition) -> Overpartition:
    return Overpartition(tuple((s - 1, o) for s, o in lam.parts if s >= 2))


def phi(k: int, i: int, lam: Overpartition) -> Overpartition:
    """Strip the i parts of underlying size 1 (the overlined one and the
    i-1 plain copies), then subtract 1 from every remaining part."""
    if not 1 <= i <= k:
        raise InvalidParameters(f"need 1 <= i <= k, got k={k}, i={i}")
    if not _in_s(k, i, lam):
        raise DomainViolation(f"{lam} is not in S(k={k},i={i})")
    return _strip_ones_and_lower(lam)


def phi_inv(k: int, i: int, lam: Overpartition) -> Overpartition:
    """Add 1 to every part, then adjoin an overlined 1 and i-1 plain ones."""
    if not 1 <= i <= k:
        raise InvalidParameters(f"need 1 <= i <= k, got k={k}, i={i}")
    if not satisfies("main", k, k - i, lam):
        raise DomainViolation(f"{lam} fails the (k={k}, i={k - i}) conditions")
    parts = [(s + 1, o) for s, o in lam.parts]
    parts.append((1, True))
    parts.extend([(1, False)] * (i - 1))
    return Overpartition(tuple(parts))


def chi(k: int, i: int, lam: Overpartition) -> Overpartition:
    """Strip the i-1 parts of underlying size 1 (the overlined one and the
    i-2 plain copies), then subtract 1 from every remaining part.  Defined
    for i >= 2 only."""
    if i == 1:
        raise UnsupportedRange("chi is undefined at i = 1; only the cardinality identity holds there")
    if not 2 <= i <= k:
        raise InvalidParameters(f"need 2 <= i <= k, got k={k}, i={i}")
    if not _in_t(k, i, lam):
        raise DomainViolation(f"{lam} is not in T(k={k},i={i})")
    return _strip_ones_and_lower(lam)


def chi_inv(k: int, i: int, lam: Overpartition) -> Overpartition:
    """Add 1 to every part, then adjoin an overlined 1 and i-2 plain ones."""
    if i == 1:
        raise UnsupportedRange("chi is undefined at i = 1; only the cardinality identity holds there")
    if not 2 <= i <= k:
        raise InvalidParameters(f"need 2 <= i <= k, got k={k}, i={i}")
    if not satisfies("main", k, k - i, lam):
        raise DomainViolation(f"{lam} fails the (k={k}, i={k - i}) conditions")
    parts = [(s + 1, o) for s, o in lam.parts]
    parts.append((1, True))
    parts.extend([(1, False)] * (i - 2))
    return Overpartition(tuple(parts))


# ---------------------------------------------------------------------------
# per-cell verification

@dataclass(frozen=True)
class CellRecord:
    """Outcome of one extensional check on one cell."""

    cell_id: str
    map_name: str
    domain_size: int
    codomain_size: int
    image_size: int
    passed: bool
    counterexample: Optional[str] = None


def _bijection_record(map_name, cell_id, apply_fn, invert_fn, domain, codomain) -> CellRecord:
    codomain_set = set(codomain)
    image = []
    for lam in domain:
        out = apply_fn(lam)
        if out not in codomain_set:
            return CellRecord(cell_id, map_name, len(domain), len(codomain), len(set(image)),
                              False, f"{lam} -> {out} lands outside the target cell")
        if invert_fn(out) != lam:
            return CellRecord(cell_id, map_name, len(domain), len(codomain), len(set(image)),
                              False, f"{lam} -> {out} does not invert back")
        image.append(out)
    image_set = set(image)
    if len(image_set) != len(domain):
        return CellRecord(cell_id, map_name, len(domain), len(codomain), len(image_set),
                          False, "map is not injective on the cell")
    if image_set != codomain_set:
        missing = min(codomain_set - image_set, key=str)
        return CellRecord(cell_id, map_name, len(domain), len(codomain), len(image_set),
                          False, f"{missing} is not reached")
    return CellRecord(cell_id, map_name, len(domain), len(codomain), len(image_set), True)


def verify_phi_cell(k: int, i: int, m: int, n: int) -> CellRecord:
    """Check phi is a bijection S(k,i,m,n) -> U(k,k-i,m-i,n-m)."""
    domain = members(CellSpec(k, i, m, n, "S"))
    codomain = members(CellSpec(k, k - i, m - i, n - m, "U"))
    return _bijection_record("phi", str(CellSpec(k, i, m, n, "S")),
                             lambda lam: phi(k, i, lam), lambda lam: phi_inv(k, i, lam),
                             domain, codomain)


def verify_chi_cell(k: int, i: int, m: int, n: int) -> CellRecord:
    """Check chi is a bijection T(k,i,m,n) -> U(k,k-i,m-i+1,n-m); i >= 2."""
    domain = members(CellSpec(k, i, m, n, "T"))
    codomain = members(CellSpec(k, k - i, m - i + 1, n - m, "U"))
    return _bijection_record("chi", str(CellSpec(k, i, m, n, "T")),
                             lambda lam: chi(k, i, lam), lambda lam: chi_inv(k, i, lam),
                             domain, codomain)


def verify_iota_cell(k: int, i: int, m: int, n: int) -> CellRecord:
    """Check iota maps U(k,i-1,m,n) injectively into U(k,i,m,n) with image
    exactly the complement of S and T."""
    cell_id = str(CellSpec(k, i, m, n, "U"))
    domain = members(CellSpec(k, i - 1, m, n, "U"))
    target = members(CellSpec(k, i, m, n, "U"))
    target_set = set(target)
    image = set()
    for lam in domain:
        out = iota(k, i, lam)
        if out not in target_set:
            return CellRecord(cell_id, "iota", len(domain), len(target), len(image),
                              False, f"{lam} -> {out} lands outside the target cell")
        image.add(out)
    if len(image) != len(domain):
        return CellRecord(cell_id, "iota", len(domain), len(target), len(image),
                          False, "switch map is not injective on the cell")
    rest = set(members(CellSpec(k, i, m, n, "S"))) | set(members(CellSpec(k, i, m, n, "T")))
    if image != target_set - rest:
        bad = min(image.symmetric_difference(target_set - rest), key=str)
        return CellRecord(cell_id, "iota", len(domain), len(target), len(image),
                          False, f"image mismatch at {bad}")
    return CellRecord(cell_id, "iota", len(domain), len(target), len(image), True)


def verify_counts_cell(k: int, i: int, m: int, n: int) -> CellRecord:
    """Check the numeric decomposition on one cell: the (k,i) and (k,i-1)
    counts differ by |S| + |T|, |S| matches the (k,k-i) count at
    (m-i, n-m), and |T| matches it at (m-i+1, n-m)."""
    cell_id = str(CellSpec(k, i, m, n, "U"))
    u_i = card_u(k, i, m, n)
    u_prev = card_u(k, i - 1, m, n)
    s = card_s(k, i, m, n)
    t = card_t(k, i, m, n)
    checks = [
        (u_i - u_prev == s + t, f"count difference {u_i - u_prev} != |S|+|T| = {s + t}"),
        (s == card_u(k, k - i, m - i, n - m), f"|S| = {s} != target count {card_u(k, k - i, m - i, n - m)}"),
        (t == card_u(k, k - i, m - i + 1, n - m), f"|T| = {t} != target count {card_u(k, k - i, m - i + 1, n - m)}"),
    ]
    for ok, message in checks:
        if not ok:
            return CellRecord(cell_id, "counts", u_prev, u_i, s + t, False, message)
    return CellRecord(cell_id, "counts", u_prev, u_i, s + t, True)
