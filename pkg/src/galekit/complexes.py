"""Simplicial complexes on [m] with ghost vertices allowed."""

from dataclasses import dataclass, field
from itertools import combinations

from .errors import GalekitError, BAD_INPUT
from .sets import sorted_sets


def _all_subsets(face):
    items = sorted(face)
    for size in range(len(items) + 1):
        for sub in combinations(items, size):
            yield frozenset(sub)


@dataclass(frozen=True)
class SimplicialComplex:
    """Downward-closed family on [m] given by its facets; ∅ is always a face."""

    m: int
    facets: tuple
    _faces: frozenset = field(default=frozenset(), repr=False, compare=False)

    def __post_init__(self):
        raw = [frozenset(int(i) for i in f) for f in self.facets]
        for f in raw:
            if any(i < 1 or i > self.m for i in f):
                raise GalekitError(BAD_INPUT, f"facet {sorted(f)} leaves [1, {self.m}]")
        maximal = {f for f in raw if not any(f < g for g in raw)}
        if not maximal:
            maximal = {frozenset()}
        ordered = tuple(frozenset(t) for t in sorted_sets(maximal))
        object.__setattr__(self, "facets", ordered)
        faces = set()
        for f in ordered:
            faces.update(_all_subsets(f))
        object.__setattr__(self, "_faces", frozenset(faces))

    @classmethod
    def from_faces(cls, m, faces):
        return cls(m, tuple(faces))

    def faces(self):
        return [frozenset(t) for t in sorted_sets(self._faces)]

    def __contains__(self, face):
        return frozenset(face) in self._faces

    def __len__(self):
        return len(self._faces)

    def faces_of_size(self, size):
        return [f for f in self.faces() if len(f) == size]

    @property
    def dimension(self):
        return max(len(f) for f in self.facets) - 1

    def is_pure(self):
        return len({len(f) for f in self.facets}) == 1

    @property
    def ghost_vertices(self):
        return frozenset(i for i in range(1, self.m + 1) if frozenset({i}) not in self._faces)

    def link(self, face):
        face = frozenset(face)
        return SimplicialComplex(self.m, tuple(f - face for f in self.facets if face <= f))

    def f_vector(self):
        counts = {}
        for f in self._faces:
            counts[len(f)] = counts.get(len(f), 0) + 1
        return [counts.get(s, 0) for s in range(self.dimension + 2)]

    def with_ground_set(self, m):
        return SimplicialComplex(m, self.facets)
