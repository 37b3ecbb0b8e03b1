"""Overpartitions in canonical form, with their part-multiplicity statistics.

An overpartition is a partition in which the first occurrence of each part
size may be overlined.  Parts are stored sorted with sizes non-increasing
and, among equal sizes, the overlined copy first, so that equality, hashing
and text round-trips are canonical.  All values are immutable and all
operations here are pure.

Text form: parts comma-separated, an overline written as a trailing ``~``,
the empty overpartition written ``-``.  For example ``7~,7,6,5~,2,1~`` is an
overpartition of 28 with six parts.
"""

from __future__ import annotations

from dataclasses import dataclass


class InvalidParameters(ValueError):
    """Parameters outside the admissible range of the requested operation."""


class NonPositivePart(ValueError):
    """A part size smaller than 1 was supplied."""


class DuplicateOverline(ValueError):
    """The same size was supplied with more than one overlined copy."""

    def __init__(self, size: int):
        super().__init__(f"size {size} carries more than one overline")
        self.size = size


def _canonical_key(part: tuple[int, bool]) -> tuple[int, int]:
    size, overlined = part
    return (-size, 0 if overlined else 1)


@dataclass(frozen=True)
class Overpartition:
    """A canonical overpartition; ``parts`` is a tuple of (size, overlined).

    Raw input may be in any order; construction sorts it canonically and
    rejects non-positive sizes and duplicate overlines.
    """

    parts: tuple[tuple[int, bool], ...] = ()

    def __post_init__(self):
        norm = []
        for size, overlined in self.parts:
            if size < 1:
                raise NonPositivePart(f"part size {size} is not positive")
            norm.append((int(size), bool(overlined)))
        norm.sort(key=_canonical_key)
        seen = set()
        for size, overlined in norm:
            if overlined:
                if size in seen:
                    raise DuplicateOverline(size)
                seen.add(size)
        object.__setattr__(self, "parts", tuple(norm))

    @property
    def weight(self) -> int:
        return sum(size for size, _ in self.parts)

    @property
    def num_parts(self) -> int:
        return len(self.parts)

    @property
    def max_size(self) -> int:
        return self.parts[0][0] if self.parts else 0

    @property
    def is_partition(self) -> bool:
        """True when no part is overlined."""
        return all(not overlined for _, overlined in self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        if not self.parts:
            return "-"
        return ",".join(f"{s}~" if o else str(s) for s, o in self.parts)

    def __repr__(self) -> str:
        return f"Overpartition({self})"

    @classmethod
    def parse(cls, text: str) -> "Overpartition":
        """Inverse of ``str``: ``7~,7,2`` style input, ``-`` for empty."""
        text = text.strip()
        if text == "-" or text == "":
            return cls()
        parts = []
        for token in text.split(","):
            token = token.strip()
            overlined = token.endswith("~")
            if overlined:
                token = token[:-1]
            if not token.isdigit():
                raise ValueError(f"bad part token {token!r}")
            parts.append((int(token), overlined))
        return cls(tuple(parts))


def make_overpartition(raw) -> Overpartition:
    """Build a canonical :class:`Overpartition` from (size, overlined) pairs."""
    return Overpartition(tuple(raw))


@dataclass(frozen=True)
class FrequencyProfile:
    """Multiplicities of an overpartition: ``f[l]`` counts plain copies of
    ``l``, ``fbar[l]`` (0 or 1) counts the overlined copy."""

    f: dict[int, int]
    fbar: dict[int, int]
    max_size: int

    def plain(self, size: int) -> int:
        return self.f.get(size, 0)

    def over(self, size: int) -> int:
        return self.fbar.get(size, 0)

    def v(self, bound: int) -> int:
        """Number of overlined parts with size at most ``bound``."""
        return sum(1 for size in self.fbar if size <= bound)

    def to_overpartition(self) -> Overpartition:
        parts = []
        for size, count in self.f.items():
            parts.extend([(size, False)] * count)
        parts.extend((size, True) for size in self.fbar)
        return Overpartition(tuple(parts))


def frequency_profile(lam: Overpartition) -> FrequencyProfile:
    """The maps l -> f_l and l -> f_lbar of ``lam``."""
    f: dict[int, int] = {}
    fbar: dict[int, int] = {}
    for size, overlined in lam.parts:
        if overlined:
            fbar[size] = fbar.get(size, 0) + 1
        else:
            f[size] = f.get(size, 0) + 1
    return FrequencyProfile(f=f, fbar=fbar, max_size=lam.max_size)


def v_stat(lam: Overpartition, bound: int) -> int:
    """Number of overlined parts of ``lam`` that are <= ``bound``."""
    return sum(1 for size, overlined in lam.parts if overlined and size <= bound)
