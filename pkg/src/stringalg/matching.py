"""Symmetric matchings on the points x_1..x_{n-1}, y_1..y_{n-1}."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

Point = tuple[str, int]


def point_name(p: Point) -> str:
    return f"{p[0]}{p[1]}"


def parse_point(text: str) -> Point:
    text = text.strip()
    if len(text) < 2 or text[0] not in "xy" or not text[1:].isdigit():
        raise ValueError(f"bad point name {text!r}")
    return (text[0], int(text[1:]))


def eta(p: Point) -> Point:
    return ("y" if p[0] == "x" else "x", p[1])


@dataclass(frozen=True)
class Matching:
    """A fixed-point-free involution Theta on Z(n-1)."""

    n: int
    theta: tuple[tuple[Point, Point], ...]

    def __post_init__(self):
        pts = [p for pair in self.theta for p in pair]
        expected = {(c, i) for c in "xy" for i in range(1, self.n)}
        if len(pts) != len(set(pts)) or set(pts) != expected:
            raise ValueError(f"theta is not a fixed-point-free involution on Z({self.n - 1})")
        canon = tuple(sorted(tuple(sorted(pair, key=_key)) for pair in self.theta))
        object.__setattr__(self, "theta", tuple(sorted(canon, key=lambda pr: (_key(pr[0]), _key(pr[1])))))

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable) -> "Matching":
        """Pairs of points given as tuples or names like ``"x1"``."""
        out = []
        for a, b in pairs:
            a = parse_point(a) if isinstance(a, str) else tuple(a)
            b = parse_point(b) if isinstance(b, str) else tuple(b)
            out.append((a, b))
        return cls(n, tuple(out))

    @classmethod
    def symmetric_from_x(cls, n: int, images: dict) -> "Matching":
        """Complete ``{i: "y3" | "x2"}`` (images of x_i) by symmetry."""
        pairs = set()
        for i, target in images.items():
            t = parse_point(target) if isinstance(target, str) else tuple(target)
            for a, b in ((("x", i), t), (("y", i), eta(t))):
                pairs.add(tuple(sorted((a, b), key=_key)))
        return cls(n, tuple(pairs))

    @classmethod
    def identity(cls, n: int) -> "Matching":
        return cls(n, tuple((("x", i), ("y", i)) for i in range(1, n)))

    def partner(self, p: Point) -> Point:
        for a, b in self.theta:
            if a == p:
                return b
            if b == p:
                return a
        raise KeyError(p)

    def as_map(self) -> dict:
        out = {}
        for a, b in self.theta:
            out[a] = b
            out[b] = a
        return out

    def to_dict(self) -> dict:
        return {"n": self.n, "theta": [[point_name(a), point_name(b)] for a, b in self.theta]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "Matching":
        return cls.from_pairs(int(data["n"]), data["theta"])

    def __str__(self):
        return ", ".join(f"{point_name(a)}<->{point_name(b)}" for a, b in self.theta)


def _key(p: Point):
    return (p[1], p[0])


def is_symmetric(t: Matching) -> bool:
    mp = t.as_map()
    return all(mp[eta(p)] == eta(q) for p, q in mp.items())


def linked_pairs(t: Matching) -> set[tuple[int, int]]:
    return {tuple(sorted((a[1], b[1]))) for a, b in t.theta}


def is_even(t: Matching) -> bool:
    for a, b in t.theta:
        diff = a[1] - b[1]
        if a[0] != b[0] and diff % 2:
            return False
        if a[0] == b[0] and diff % 2 == 0:
            return False
    return True


def is_unmixed(t: Matching) -> bool:
    links = [p for p in linked_pairs(t) if p[0] != p[1]]
    for i, k in links:
        for j, l in links:
            if i < j < k < l:
                return False
    return True


def reducible_index(t: Matching) -> int | None:
    """The first k with x_k linked to x_{k+1} (the pattern stripped by reduction)."""
    mp = t.as_map()
    for k in range(1, t.n - 1):
        if mp[("x", k)] == ("x", k + 1):
            return k
    return None


def is_irreducible(t: Matching) -> bool:
    return reducible_index(t) is None


def matching_predicates(t: Matching) -> dict:
    return {"symmetric": is_symmetric(t), "even": is_even(t), "unmixed": is_unmixed(t)}
