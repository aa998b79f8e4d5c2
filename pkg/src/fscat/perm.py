"""Permutations and permutation groups with stabilizer-chain membership.

Composition is right-to-left: (a * b) applies b first, then a.  All points in
the public interface are 1-based; storage is 0-based image tuples.
"""
from __future__ import annotations

import math
import re
from functools import reduce

from . import config


class BoundExceeded(RuntimeError):
    """A configured size limit would be exceeded by the requested computation."""

    def __init__(self, bound_name: str, limit: int, needed: int):
        self.bound_name = bound_name
        self.limit = limit
        self.needed = needed
        super().__init__(f"{bound_name} exceeded: need {needed}, limit is {limit}")


# ---------------------------------------------------------------------------
# raw image-tuple kernels (0-based), used by the hot loops throughout

def _identity(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def _mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    # (a o b)(i) = a(b(i))
    return tuple(map(a.__getitem__, b))


def _inv(a: tuple[int, ...]) -> tuple[int, ...]:
    r = [0] * len(a)
    for i, v in enumerate(a):
        r[v] = i
    return tuple(r)


def _conj(g: tuple[int, ...], x: tuple[int, ...]) -> tuple[int, ...]:
    # g |> x = g o x o g^-1
    return _mul(_mul(g, x), _inv(g))


def _min_moved(a: tuple[int, ...]) -> int | None:
    for i, v in enumerate(a):
        if v != i:
            return i
    return None


def _raw_cycles(img: tuple[int, ...]) -> list[list[int]]:
    seen = [False] * len(img)
    out = []
    for start in range(len(img)):
        if seen[start] or img[start] == start:
            seen[start] = True
            continue
        cyc = []
        j = start
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = img[j]
        out.append(cyc)
    return out


_CYCLE_RE = re.compile(r"\(([^()]*)\)")
_DEG_RE = re.compile(r"deg\s*=\s*(\d+)")


class Permutation:
    """An immutable permutation of {1..n}."""

    __slots__ = ("_img",)

    def __init__(self, images):
        img = tuple(int(i) - 1 for i in images)
        n = len(img)
        if n < 1 or sorted(img) != list(range(n)):
            raise ValueError(f"not a permutation of 1..{n}: {list(images)!r}")
        self._img = img

    @classmethod
    def _from_raw(cls, img: tuple[int, ...]) -> "Permutation":
        p = object.__new__(cls)
        p._img = img
        return p

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        if degree < 1:
            raise ValueError("degree must be positive")
        return cls._from_raw(_identity(degree))

    @classmethod
    def from_cycles(cls, cycles, degree: int) -> "Permutation":
        """Build from 1-based cycles, e.g. from_cycles([(1, 2), (3, 4)], 6)."""
        if degree < 1:
            raise ValueError("degree must be positive")
        img = list(range(degree))
        touched = set()
        for cyc in cycles:
            cyc = [int(c) for c in cyc]
            for c in cyc:
                if not 1 <= c <= degree:
                    raise ValueError(f"point {c} outside 1..{degree}")
                if c in touched:
                    raise ValueError(f"point {c} repeated across cycles")
                touched.add(c)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a - 1] = b - 1
        return cls._from_raw(tuple(img))

    @classmethod
    def from_text(cls, text: str, degree: int | None = None) -> "Permutation":
        """Parse cycle notation like "(1,2)(3,4)" with an optional "deg=n" suffix."""
        s = text.strip()
        m = _DEG_RE.search(s)
        if m:
            explicit = int(m.group(1))
            if degree is not None and degree != explicit:
                raise ValueError(f"degree mismatch: argument {degree}, text says {explicit}")
            degree = explicit
            s = s[: m.start()].strip()
        if not re.fullmatch(r"(?:\s*\(\s*(?:\d+(?:\s*,\s*\d+)*)?\s*\))*\s*", s):
            raise ValueError(f"cannot parse cycle text: {text!r}")
        cycles = []
        for grp in _CYCLE_RE.findall(s.replace(" ", "")):
            if grp == "":
                continue
            cycles.append([int(t) for t in grp.split(",")])
        top = max((max(c) for c in cycles), default=1)
        if degree is None:
            degree = top
        elif degree < top:
            raise ValueError(f"degree {degree} too small for point {top}")
        return cls.from_cycles(cycles, degree)

    # -- structure ----------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self._img)

    @property
    def images(self) -> tuple[int, ...]:
        """Images of 1..n as a 1-based tuple."""
        return tuple(v + 1 for v in self._img)

    def apply(self, point: int) -> int:
        return self._img[point - 1] + 1

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self._img))

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Nontrivial cycles, 1-based, each starting at its least point."""
        out = []
        for cyc in _raw_cycles(self._img):
            k = cyc.index(min(cyc))
            out.append(tuple(v + 1 for v in cyc[k:] + cyc[:k]))
        out.sort(key=lambda c: c[0])
        return tuple(out)

    def to_text(self, with_degree: bool = False) -> str:
        cycs = self.cycles()
        body = "".join("(" + ",".join(map(str, c)) + ")" for c in cycs) or "()"
        return f"{body} deg={self.degree}" if with_degree else body

    @property
    def sign(self) -> int:
        moved = sum(len(c) for c in _raw_cycles(self._img))
        ncyc = len(_raw_cycles(self._img))
        return -1 if (moved - ncyc) % 2 else 1

    @property
    def order(self) -> int:
        return reduce(math.lcm, (len(c) for c in _raw_cycles(self._img)), 1)

    def min_moved(self) -> int | None:
        m = _min_moved(self._img)
        return None if m is None else m + 1

    # -- arithmetic ---------------------------------------------------------

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        return Permutation._from_raw(_mul(self._img, other._img))

    def inverse(self) -> "Permutation":
        return Permutation._from_raw(_inv(self._img))

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        base, acc = self._img, _identity(self.degree)
        while k:
            if k & 1:
                acc = _mul(acc, base)
            base = _mul(base, base)
            k >>= 1
        return Permutation._from_raw(acc)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self._img == other._img

    def __hash__(self) -> int:
        return hash(self._img)

    def __lt__(self, other: "Permutation") -> bool:
        return (self.degree, self._img) < (other.degree, other._img)

    def __repr__(self) -> str:
        return f"Permutation.from_text({self.to_text(with_degree=True)!r})"


def compose(a: Permutation, b: Permutation) -> Permutation:
    """a composed with b, applying b first."""
    return a * b


def conjugate(g: Permutation, x: Permutation) -> Permutation:
    """g acting on x: g * x * g^-1."""
    if g.degree != x.degree:
        raise ValueError(f"degree mismatch: {g.degree} vs {x.degree}")
    return Permutation._from_raw(_conj(g._img, x._img))


def sign(p: Permutation) -> int:
    return p.sign


def element_order(p: Permutation) -> int:
    return p.order


# ---------------------------------------------------------------------------
# groups

class _Level:
    __slots__ = ("point", "orbit")

    def __init__(self, point: int):
        self.point = point
        self.orbit: dict[int, tuple[int, ...]] = {point: None}  # filled with raws


class PermGroup:
    """Permutation group given by generators; membership via a stabilizer chain.

    The chain uses the full natural base (points 0, 1, ... in storage order),
    which also supports computing the least element of a left coset.
    """

    def __init__(self, degree: int, generators):
        if degree < 1:
            raise ValueError("degree must be positive")
        gens = []
        seen = set()
        for g in generators:
            if not isinstance(g, Permutation):
                g = Permutation(g)
            if g.degree != degree:
                raise ValueError(f"generator degree {g.degree} != group degree {degree}")
            if not g.is_identity() and g._img not in seen:
                seen.add(g._img)
                gens.append(g)
        self.degree = degree
        self.generators = tuple(gens)
        self._levels: list[_Level] | None = None
        self._order: int | None = None
        self._elem_tuples: list[tuple[int, ...]] | None = None
        self._elem_set: frozenset | None = None

    # -- stabilizer chain ---------------------------------------------------

    def _chain(self) -> list[_Level]:
        if self._levels is None:
            self._build_chain()
        return self._levels

    def _build_chain(self) -> None:
        n = self.degree
        idt = _identity(n)
        levels = [_Level(b) for b in range(n - 1)]
        for lv in levels:
            lv.orbit[lv.point] = idt
        gens_by_min: list[list[tuple[int, ...]]] = [[] for _ in range(n)]
        for g in self.generators:
            gens_by_min[_min_moved(g._img)].append(g._img)

        def level_gens(b: int) -> list[tuple[int, ...]]:
            out = []
            for k in range(b, n):
                out.extend(gens_by_min[k])
            return out

        def rebuild_orbit(b: int, gens: list[tuple[int, ...]]) -> None:
            lv = levels[b]
            lv.orbit = {b: idt}
            queue = [b]
            for p in queue:
                up = lv.orbit[p]
                for s in gens:
                    q = s[p]
                    if q not in lv.orbit:
                        lv.orbit[q] = _mul(s, up)
                        queue.append(q)

        def sift_from(g: tuple[int, ...], start: int) -> tuple[int, ...]:
            for b in range(start, n - 1):
                p = g[b]
                if p == b:
                    continue
                u = levels[b].orbit.get(p)
                if u is None:
                    return g
                g = _mul(_inv(u), g)
            return g

        def complete(b: int) -> None:
            gens = level_gens(b)
            while True:
                rebuild_orbit(b, gens)
                lv = levels[b]
                residue = None
                for p in sorted(lv.orbit):
                    up = lv.orbit[p]
                    for s in gens:
                        usp = lv.orbit[s[p]]
                        schreier = _mul(_inv(usp), _mul(s, up))
                        r = sift_from(schreier, b + 1)
                        if r != idt:
                            residue = r
                            break
                    if residue is not None:
                        break
                if residue is None:
                    return
                k = _min_moved(residue)
                gens_by_min[k].append(residue)
                for j in range(min(k, n - 2), b, -1):
                    complete(j)
                gens = level_gens(b)

        for b in range(n - 2, -1, -1):
            complete(b)
        self._levels = levels
        self._order = math.prod(len(lv.orbit) for lv in levels)

    def order(self) -> int:
        if self._order is None:
            self._build_chain()
        return self._order

    def _sift(self, g: tuple[int, ...]) -> tuple[int, ...]:
        for lv in self._chain():
            p = g[lv.point]
            if p == lv.point:
                continue
            u = lv.orbit.get(p)
            if u is None:
                return g
            g = _mul(_inv(u), g)
        return g

    def member(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            return False
        return self._sift(p._img) == _identity(self.degree)

    def __contains__(self, p: Permutation) -> bool:
        return self.member(p)

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        if self.degree != other.degree:
            return False
        return all(other.member(g) for g in self.generators)

    # -- enumeration --------------------------------------------------------

    def element_tuples(self, limit: int | None = None) -> list[tuple[int, ...]]:
        """All elements as raw 0-based image tuples, in stabilizer-chain order."""
        if self._elem_tuples is not None:
            return self._elem_tuples
        limit = config.ENUMERATION_BOUND if limit is None else limit
        if self.order() > limit:
            raise BoundExceeded("enumeration bound", limit, self.order())
        levels = self._chain()
        out = [_identity(self.degree)]
        for lv in reversed(levels):
            if len(lv.orbit) == 1:
                continue
            trans = [lv.orbit[p] for p in sorted(lv.orbit)]
            out = [_mul(u, g) for u in trans for g in out]
        assert len(out) == self.order()
        self._elem_tuples = out
        return out

    def elements(self, limit: int | None = None) -> list[Permutation]:
        return [Permutation._from_raw(t) for t in self.element_tuples(limit)]

    def element_set(self, limit: int | None = None) -> frozenset:
        if self._elem_set is None:
            self._elem_set = frozenset(self.element_tuples(limit))
        return self._elem_set

    @classmethod
    def _from_element_tuples(cls, degree: int, tuples) -> "PermGroup":
        """Group from a closed element set, with a small generating set."""
        elems = sorted(set(tuples))
        gens: list[Permutation] = []
        grp = cls(degree, [])
        for t in elems:
            if grp._sift(t) != _identity(degree):
                gens.append(Permutation._from_raw(t))
                grp = cls(degree, gens)
        if grp.order() != len(elems):
            raise ValueError("element set is not closed under the group operation")
        grp._elem_tuples = elems
        return grp

    # -- cosets -------------------------------------------------------------

    def coset_min(self, y: tuple[int, ...]) -> tuple[int, ...]:
        """Lexicographically least image tuple in the left coset y * self."""
        cur = y
        for lv in self._chain():
            if len(lv.orbit) == 1:
                continue
            best = min(lv.orbit, key=cur.__getitem__)
            if best != lv.point:
                cur = _mul(cur, lv.orbit[best])
        return cur

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, ngens={len(self.generators)})"


# ---------------------------------------------------------------------------
# named families

def trivial(degree: int) -> PermGroup:
    return PermGroup(degree, [])


def sym(n: int) -> PermGroup:
    return sym_embed(n, n)


def alt(n: int) -> PermGroup:
    return alt_embed(n, n)


def cyclic(n: int) -> PermGroup:
    if n < 2:
        return trivial(max(n, 1))
    return PermGroup(n, [Permutation.from_cycles([range(1, n + 1)], n)])


def sym_embed(l: int, n: int) -> PermGroup:
    """Permutations of {1..l} inside degree n."""
    if not 1 <= l <= n:
        raise ValueError(f"need 1 <= l <= n, got l={l}, n={n}")
    if l == 1:
        return trivial(n)
    gens = [Permutation.from_cycles([(1, 2)], n)]
    if l > 2:
        gens.append(Permutation.from_cycles([range(1, l + 1)], n))
    return PermGroup(n, gens)


def alt_embed(l: int, n: int) -> PermGroup:
    """Even permutations of {1..l} inside degree n."""
    if not 1 <= l <= n:
        raise ValueError(f"need 1 <= l <= n, got l={l}, n={n}")
    if l <= 2:
        return trivial(n)
    gens = [Permutation.from_cycles([(1, 2, 3)], n)]
    if l > 3:
        if l % 2:
            gens.append(Permutation.from_cycles([range(1, l + 1)], n))
        else:
            gens.append(Permutation.from_cycles([range(2, l + 1)], n))
    return PermGroup(n, gens)


def sym_prime(k: int, n: int) -> PermGroup:
    """Permutations fixing 1..k pointwise, acting on {k+1..n}."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    if n - k < 2:
        return trivial(n)
    gens = [Permutation.from_cycles([(k + 1, k + 2)], n)]
    if n - k > 2:
        gens.append(Permutation.from_cycles([range(k + 1, n + 1)], n))
    return PermGroup(n, gens)


def tilde_sym(n: int, degree: int | None = None) -> PermGroup:
    """The even copy of S_{n-2} inside A_n: s for even s on {3..n}, (1 2)s for odd.

    Optional degree embeds the group at a larger ambient degree.
    """
    if n < 4:
        raise ValueError(f"need n >= 4, got {n}")
    if degree is None:
        degree = n
    if degree < n:
        raise ValueError(f"degree {degree} too small for n={n}")
    gens = [Permutation.from_cycles([(1, 2), (3, 4)], degree)]
    if n > 4:
        long = [(range(3, n + 1))]
        if (n - 2) % 2 == 0:
            gens.append(Permutation.from_cycles([(1, 2)] + long, degree))
        else:
            gens.append(Permutation.from_cycles(long, degree))
    return PermGroup(degree, gens)


def embedded(group: PermGroup, degree: int) -> PermGroup:
    """The same group acting at a larger degree, new points fixed."""
    if degree < group.degree:
        raise ValueError(f"degree {degree} smaller than current {group.degree}")
    if degree == group.degree:
        return group
    gens = [Permutation._from_raw(g._img + tuple(range(group.degree, degree)))
            for g in group.generators]
    return PermGroup(degree, gens)
