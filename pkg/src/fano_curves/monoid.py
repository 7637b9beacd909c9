"""Finitely presented, positively graded commutative monoids.

Words are exponent vectors over the generators. Two words are congruent
when one can be rewritten into the other by substituting relation sides,
never passing through a word with a negative exponent. The grading makes
every congruence class live inside a finite degree slice, so the word
problem is a graph search on that slice.
"""

from __future__ import annotations

import functools
import random
from collections import deque
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .errors import InputError
from .lattice.linalg import Vector, dot, solve

Word = tuple[int, ...]

MEMO_SIZE = 256


@dataclass(frozen=True)
class PresentedCommutativeMonoid:
    generator_labels: tuple[str, ...]
    degrees: tuple[int, ...]
    relations: tuple[tuple[Word, Word], ...]
    class_map: tuple[Vector, ...]
    degree_functional: tuple | None = field(default=None, compare=False)

    def __post_init__(self):
        k = len(self.generator_labels)
        if len(self.degrees) != k or len(self.class_map) != k:
            raise InputError("labels, degrees and class_map must have one entry per generator")
        if any(d <= 0 for d in self.degrees):
            raise InputError("generator degrees must be positive")
        if len({len(c) for c in self.class_map}) != 1:
            raise InputError("class_map rows must share a rank")
        for lhs, rhs in self.relations:
            if len(lhs) != k or len(rhs) != k or min(lhs + rhs) < 0:
                raise InputError(f"bad relation {lhs} = {rhs}")
            if self.degree(lhs) != self.degree(rhs):
                raise InputError(f"relation {lhs} = {rhs} is not homogeneous")
            if self.image(lhs) != self.image(rhs):
                raise InputError(f"relation {lhs} = {rhs} does not hold in the class lattice")
        if self.degree_functional is None:
            # degrees induced by a functional on classes, when one exists
            g = solve(list(self.class_map), list(self.degrees))
            if g is not None:
                object.__setattr__(self, "degree_functional", tuple(g))

    @property
    def k(self) -> int:
        return len(self.generator_labels)

    @property
    def class_rank(self) -> int:
        return len(self.class_map[0])

    def degree(self, w: Sequence[int]) -> int:
        return dot(self.degrees, w)

    def image(self, w: Sequence[int]) -> Vector:
        return tuple(sum(e * row[j] for e, row in zip(w, self.class_map)) for j in range(self.class_rank))

    def words_of_degree(self, d: int) -> list[Word]:
        return list(_words(self.degrees, d))

    def format(self, w: Sequence[int]) -> str:
        parts = []
        for e, lab in zip(w, self.generator_labels):
            if e:
                parts.append(lab if e == 1 else f"{e}{lab}")
        return " + ".join(parts) or "0"

    def without_relation(self, index: int) -> "PresentedCommutativeMonoid":
        rels = self.relations[:index] + self.relations[index + 1 :]
        return PresentedCommutativeMonoid(self.generator_labels, self.degrees, rels, self.class_map)


def _words(degrees: Sequence[int], d: int) -> Iterator[Word]:
    """All exponent vectors of total degree exactly ``d``, lexicographic."""
    k = len(degrees)

    def rec(i: int, left: int) -> Iterator[tuple[int, ...]]:
        if i == k - 1:
            if left % degrees[i] == 0:
                yield (left // degrees[i],)
            return
        for e in range(left // degrees[i], -1, -1):
            for rest in rec(i + 1, left - e * degrees[i]):
                yield (e,) + rest

    if d < 0:
        return
    yield from sorted(rec(0, d))


def rewrites(m: PresentedCommutativeMonoid, w: Word) -> Iterator[Word]:
    """Words reachable from ``w`` by one relation substitution."""
    for lhs, rhs in m.relations:
        for a, b in ((lhs, rhs), (rhs, lhs)):
            if all(x >= y for x, y in zip(w, a)):
                yield tuple(x - y + z for x, y, z in zip(w, a, b))


def congruence_path(m: PresentedCommutativeMonoid, u: Sequence[int], v: Sequence[int]) -> list[Word] | None:
    """A shortest rewrite sequence from ``u`` to ``v``, or None."""
    u, v = tuple(u), tuple(v)
    if m.degree(u) != m.degree(v):
        return None
    parent: dict[Word, Word | None] = {u: None}
    queue = deque([u])
    while queue:
        w = queue.popleft()
        if w == v:
            path = [w]
            while parent[path[-1]] is not None:
                path.append(parent[path[-1]])
            return path[::-1]
        for x in rewrites(m, w):
            if x not in parent:
                parent[x] = w
                queue.append(x)
    return None


def congruent(m: PresentedCommutativeMonoid, u: Sequence[int], v: Sequence[int]) -> bool:
    u, v = tuple(u), tuple(v)
    if m.degree(u) != m.degree(v):
        return False
    return _components(m, m.degree(u))[u] == _components(m, m.degree(v))[v]


@functools.lru_cache(maxsize=MEMO_SIZE)
def _components(m: PresentedCommutativeMonoid, d: int) -> dict[Word, Word]:
    """Map each degree-``d`` word to a canonical representative (the
    lexicographically least word) of its congruence class."""
    words = m.words_of_degree(d)
    parent = {w: w for w in words}

    def find(w: Word) -> Word:
        while parent[w] != w:
            parent[w] = parent[parent[w]]
            w = parent[w]
        return w

    for w in words:
        for x in rewrites(m, w):
            a, b = find(w), find(x)
            if a != b:
                parent[max(a, b)] = min(a, b)
    return {w: find(w) for w in words}


def factorizations(m: PresentedCommutativeMonoid, alpha: Sequence[int]) -> list[Word]:
    """All words whose class is ``alpha``, sorted lexicographically."""
    alpha = tuple(alpha)
    if len(alpha) != m.class_rank:
        raise InputError("class rank does not match the class map")
    if m.degree_functional is None:
        raise InputError("generator degrees are not induced by a linear functional on classes")
    d = sum(g * a for g, a in zip(m.degree_functional, alpha))
    if d != int(d) or d < 0:
        return []
    return sorted(w for w in _words(m.degrees, int(d)) if m.image(w) == alpha)


@dataclass
class PresentationReport:
    d_max: int
    classes_checked: int
    violations: list[dict]
    walks: int
    unsound: list[dict]

    @property
    def ok(self) -> bool:
        return not self.violations and not self.unsound

    def to_dict(self) -> dict:
        return {
            "d_max": self.d_max,
            "classes_checked": self.classes_checked,
            "random_walks": self.walks,
            "violations": self.violations,
            "unsound": self.unsound,
            "ok": self.ok,
        }


def verify_presentation(
    m: PresentedCommutativeMonoid, d_max: int, walks: int = 1000, seed: int = 0
) -> PresentationReport:
    """Check that words with equal class are congruent, for every class of
    degree at most ``d_max``, and re-check on random rewrite walks that
    congruent words have equal class."""
    violations = []
    checked = 0
    for d in range(1, d_max + 1):
        comp = _components(m, d)
        by_class: dict[Vector, list[Word]] = {}
        for w in comp:
            by_class.setdefault(m.image(w), []).append(w)
        for alpha in sorted(by_class):
            checked += 1
            reps = sorted({comp[w] for w in by_class[alpha]})
            if len(reps) > 1:
                violations.append(
                    {
                        "class": list(alpha),
                        "degree": d,
                        "representatives": [list(r) for r in reps],
                    }
                )

    rng = random.Random(seed)
    unsound = []
    for _ in range(walks if d_max >= 1 else 0):
        d = rng.randint(1, d_max)
        words = m.words_of_degree(d)
        if not words:
            continue
        w = rng.choice(words)
        start = m.image(w)
        for _step in range(rng.randint(1, 20)):
            nxt = list(rewrites(m, w))
            if not nxt:
                break
            w = rng.choice(nxt)
            if m.image(w) != start:
                unsound.append({"start_class": list(start), "word": list(w)})
                break
    violations.sort(key=lambda v: (v["degree"], v["class"]))
    return PresentationReport(d_max, checked, violations, walks, unsound)


def quotient_size(m: PresentedCommutativeMonoid, d: int) -> int:
    """Number of congruence classes among degree-``d`` words."""
    return len(set(_components(m, d).values()))


# ---------------------------------------------------------------------------
# construction helpers

_PRESENTATION_FIELDS = {"generators", "degrees", "relations", "class_map"}


def presentation_from_dict(data: dict) -> PresentedCommutativeMonoid:
    if not isinstance(data, dict):
        raise InputError("presentation must be an object")
    unknown = set(data) - _PRESENTATION_FIELDS
    missing = _PRESENTATION_FIELDS - set(data)
    if unknown or missing:
        raise InputError(f"presentation fields: unknown {sorted(unknown)}, missing {sorted(missing)}")
    rels = []
    for r in data["relations"]:
        if not (isinstance(r, list) and len(r) == 2):
            raise InputError("each relation is a pair of exponent arrays")
        rels.append((tuple(r[0]), tuple(r[1])))
    return PresentedCommutativeMonoid(
        tuple(data["generators"]),
        tuple(data["degrees"]),
        tuple(rels),
        tuple(tuple(row) for row in data["class_map"]),
    )


def presentation_to_dict(m: PresentedCommutativeMonoid) -> dict:
    return {
        "generators": list(m.generator_labels),
        "degrees": list(m.degrees),
        "relations": [[list(a), list(b)] for a, b in m.relations],
        "class_map": [list(r) for r in m.class_map],
    }


def _unit(k: int, *pairs: tuple[int, int]) -> Word:
    w = [0] * k
    for i, e in pairs:
        w[i - 1] += e
    return tuple(w)


def two_e5_presentation(model=None) -> PresentedCommutativeMonoid:
    """Generators R1..R6 of the nef monoid of the two-E5 threefold with its
    six relations."""
    from .models import builtin

    m = model or builtin("two_e5")
    names = m.metadata["named_curves"]
    labels = tuple(f"R{i}" for i in range(1, 7))
    classes = tuple(tuple(names[lab]) for lab in labels)
    u = functools.partial(_unit, 6)
    relations = (
        (u((2, 1), (3, 1)), u((5, 2))),
        (u((2, 1), (4, 1)), u((6, 2))),
        (u((1, 1), (2, 2)), u((5, 1), (6, 1))),
        (u((1, 1), (2, 1), (5, 1)), u((3, 1), (6, 1))),
        (u((1, 1), (2, 1), (6, 1)), u((4, 1), (5, 1))),
        (u((1, 1), (5, 1), (6, 1)), u((3, 1), (4, 1))),
    )
    degrees = tuple(m.degree(c) for c in classes)
    return PresentedCommutativeMonoid(labels, degrees, relations, classes)


def free_presentation(classes: Sequence[Sequence[int]], degrees: Sequence[int]) -> PresentedCommutativeMonoid:
    labels = tuple(f"g{i}" for i in range(1, len(classes) + 1))
    return PresentedCommutativeMonoid(labels, tuple(degrees), (), tuple(tuple(c) for c in classes))
