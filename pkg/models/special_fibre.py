from collections import deque
from dataclasses import dataclass
from typing import Dict, Optional, Set, Tuple

from utils.number_theory import prime_power_base

Edge = Tuple[str, str]


@dataclass(frozen=True)
class FibreComponent:
    """A component of the reduced special fibre: multiplicity e, constant field degree f."""
    label: str
    e: int
    f: int

    def __post_init__(self):
        if self.e < 1 or self.f < 1:
            raise ValueError(f"Component {self.label} needs e >= 1 and f >= 1, got e={self.e}, f={self.f}")

    @property
    def weight(self) -> int:
        return self.e * self.f


@dataclass(frozen=True)
class SpecialFibre:
    """
    Special fibre data of a regular model.

    The dual graph is taken over the algebraic closure, so its vertices are geometric components
    and need not match the component labels. When given it must be connected.
    """
    components: Tuple[FibreComponent, ...]
    dual_graph: Optional[Tuple[Edge, ...]] = None

    def __post_init__(self):
        if not self.components:
            raise ValueError("A special fibre needs at least one component")
        labels = [component.label for component in self.components]
        if len(set(labels)) != len(labels):
            raise ValueError(f"Component labels must be unique: {labels}")
        if self.dual_graph is not None and not self.is_connected():
            raise ValueError(f"Dual graph is not connected: {self.dual_graph}")

    def vertices(self) -> Set[str]:
        return {vertex for edge in self.dual_graph or () for vertex in edge}

    def adjacency(self) -> Dict[str, Set[str]]:
        neighbours: Dict[str, Set[str]] = {vertex: set() for vertex in self.vertices()}
        for u, v in self.dual_graph or ():
            neighbours[u].add(v)
            neighbours[v].add(u)
        return neighbours

    def is_connected(self) -> bool:
        neighbours = self.adjacency()
        if not neighbours:
            return True
        start = next(iter(sorted(neighbours)))
        seen = {start}
        queue = deque([start])
        while queue:
            for nxt in neighbours[queue.popleft()]:
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        return len(seen) == len(neighbours)

    def is_cycle(self, length: int) -> bool:
        """True when the dual graph is a single circle through `length` vertices."""
        if self.dual_graph is None or len(self.dual_graph) != length:
            return False
        neighbours = self.adjacency()
        degrees = {vertex: 0 for vertex in neighbours}
        for u, v in self.dual_graph:
            degrees[u] += 1
            degrees[v] += 1
        return len(neighbours) == length and all(d == 2 for d in degrees.values()) and self.is_connected()


@dataclass(frozen=True)
class GluingSpec:
    """
    A curve C over F_q glued along a circle of n conjugate copies over F_{q^n}.

    automorphism_free records that C has no automorphisms; it is accepted without a check.
    """
    n: int
    q: int
    genus_c: int
    automorphism_free: bool = True

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"Circle gluing needs n >= 2, got {self.n}")
        if self.genus_c < 0:
            raise ValueError(f"Genus of C must be non-negative: {self.genus_c}")
        prime_power_base(self.q)

    @property
    def characteristic(self) -> int:
        return prime_power_base(self.q)
