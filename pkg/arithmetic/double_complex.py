"""
Finite double complexes of Z/n-modules and the d_2 differential of the column spectral sequence.

C^{p,q} is the free module (Z/n)^k, stored as its rank k. Two families of commuting maps are
given: the horizontal d_h: C^{p,q} -> C^{p+1,q} and the vertical d_v: C^{p,q} -> C^{p,q+1}.
The differentials of the double complex are d' = d_h and d'' = (-1)^p d_v, so d' and d''
anticommute and the total differential d' + d'' squares to zero.
"""
import itertools

from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np

from utils.clogger import get_logger

Position = Tuple[int, int]
TotalCochain = Dict[Position, np.ndarray]

_logger = get_logger("DoubleComplex")

DEFAULT_MAX_WITNESS_SEARCH = 1_000_000


@dataclass(frozen=True)
class LinearComplex:
    """A cochain complex of free Z/n-modules, maps[i]: (Z/n)^ranks[i] -> (Z/n)^ranks[i+1]."""
    modulus: int
    ranks: Tuple[int, ...]
    maps: Tuple[np.ndarray, ...]

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError(f"Modulus must be at least 2: {self.modulus}")
        if len(self.maps) != max(len(self.ranks) - 1, 0):
            raise ValueError(f"{len(self.ranks)} modules need {len(self.ranks) - 1} maps, got {len(self.maps)}")
        for i, matrix in enumerate(self.maps):
            if matrix.shape != (self.ranks[i + 1], self.ranks[i]):
                raise ValueError(f"Map {i} has shape {matrix.shape}, expected {(self.ranks[i + 1], self.ranks[i])}")

    def is_complex(self) -> bool:
        return all(
            not np.any((self.maps[i + 1] @ self.maps[i]) % self.modulus)
            for i in range(len(self.maps) - 1)
        )


@dataclass
class E2Class:
    """A class in E_2^{2,0}, given by the smallest representative of its coset."""
    representative: Tuple[int, ...]
    boundary_size: int
    position: Position = (2, 0)

    @property
    def is_zero(self) -> bool:
        return not any(self.representative)


@dataclass
class DoubleComplex:
    modulus: int
    ranks: Dict[Position, int]
    horizontal: Dict[Position, np.ndarray] = field(default_factory=dict)
    vertical: Dict[Position, np.ndarray] = field(default_factory=dict)

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError(f"Modulus must be at least 2: {self.modulus}")
        if any(p < 0 or q < 0 or k < 0 for (p, q), k in self.ranks.items()):
            raise ValueError(f"Positions and ranks must be non-negative: {self.ranks}")
        for table, step in ((self.horizontal, (1, 0)), (self.vertical, (0, 1))):
            for (p, q), matrix in table.items():
                expected = (self.rank((p + step[0], q + step[1])), self.rank((p, q)))
                if matrix.shape != expected:
                    raise ValueError(f"Map at {(p, q)} has shape {matrix.shape}, expected {expected}")

    @classmethod
    def tensor(cls, rows: LinearComplex, columns: LinearComplex) -> "DoubleComplex":
        """
        The tensor product of two complexes: C^{p,q} = U^p (x) V^q with d_h = A (x) 1 and d_v = 1 (x) B.
        """
        if rows.modulus != columns.modulus:
            raise ValueError(f"Moduli differ: {rows.modulus} and {columns.modulus}")
        ranks, horizontal, vertical = {}, {}, {}
        for p, u in enumerate(rows.ranks):
            for q, v in enumerate(columns.ranks):
                ranks[(p, q)] = u * v
                if p < len(rows.maps):
                    horizontal[(p, q)] = np.kron(rows.maps[p], np.eye(v, dtype=np.int64)).astype(np.int64)
                if q < len(columns.maps):
                    vertical[(p, q)] = np.kron(np.eye(u, dtype=np.int64), columns.maps[q]).astype(np.int64)
        return cls(rows.modulus, ranks, horizontal, vertical)

    def rank(self, position: Position) -> int:
        return self.ranks.get(position, 0)

    def positions(self) -> List[Position]:
        return sorted(self.ranks)

    def zero(self, position: Position) -> np.ndarray:
        return np.zeros(self.rank(position), dtype=np.int64)

    def _map(self, table: Dict[Position, np.ndarray], source: Position, target: Position) -> np.ndarray:
        matrix = table.get(source)
        if matrix is None:
            return np.zeros((self.rank(target), self.rank(source)), dtype=np.int64)
        return matrix

    def coerce(self, position: Position, x) -> np.ndarray:
        vector = np.asarray(x, dtype=np.int64).reshape(-1) % self.modulus
        if vector.shape[0] != self.rank(position):
            raise ValueError(f"Element of length {vector.shape[0]} does not live in C^{position} of rank {self.rank(position)}")
        return vector

    def d_prime(self, position: Position, x) -> np.ndarray:
        """Horizontal differential C^{p,q} -> C^{p+1,q}."""
        p, q = position
        return (self._map(self.horizontal, position, (p + 1, q)) @ self.coerce(position, x)) % self.modulus

    def d_double_prime(self, position: Position, x) -> np.ndarray:
        """Vertical differential with the sign (-1)^p, C^{p,q} -> C^{p,q+1}."""
        p, q = position
        sign = -1 if p % 2 else 1
        return (sign * (self._map(self.vertical, position, (p, q + 1)) @ self.coerce(position, x))) % self.modulus

    def is_double_complex(self) -> bool:
        """Check d_h^2 = 0, d_v^2 = 0 and d_h d_v = d_v d_h at every position."""
        n = self.modulus
        for p, q in self.positions():
            h1 = self._map(self.horizontal, (p, q), (p + 1, q))
            h2 = self._map(self.horizontal, (p + 1, q), (p + 2, q))
            v1 = self._map(self.vertical, (p, q), (p, q + 1))
            v2 = self._map(self.vertical, (p, q + 1), (p, q + 2))
            if np.any((h2 @ h1) % n) or np.any((v2 @ v1) % n):
                return False
            h_then_v = self._map(self.vertical, (p + 1, q), (p + 1, q + 1)) @ h1
            v_then_h = self._map(self.horizontal, (p, q + 1), (p + 1, q + 1)) @ v1
            if np.any((h_then_v - v_then_h) % n):
                return False
        return True

    def total_differential(self, z: TotalCochain) -> TotalCochain:
        """Apply d' + d'' to a cochain of the total complex given by its components."""
        result: TotalCochain = {}
        for (p, q), x in z.items():
            for target, image in (((p + 1, q), self.d_prime((p, q), x)),
                                  ((p, q + 1), self.d_double_prime((p, q), x))):
                if self.rank(target) == 0:
                    continue
                result[target] = (result.get(target, self.zero(target)) + image) % self.modulus
        return result

    def elements(self, position: Position, max_search: int = DEFAULT_MAX_WITNESS_SEARCH) -> Iterator[np.ndarray]:
        """
        Every element of C^{p,q} in lexicographic order.

        Raises:
            ValueError: If the module has more than max_search elements.
        """
        size = self.modulus ** self.rank(position)
        if size > max_search:
            raise ValueError(f"C^{position} has {size} elements, above the search limit {max_search}")
        for coordinates in itertools.product(range(self.modulus), repeat=self.rank(position)):
            yield np.array(coordinates, dtype=np.int64)


def d2_witnesses(dc: DoubleComplex, x, max_search: int = DEFAULT_MAX_WITNESS_SEARCH) -> List[np.ndarray]:
    """All y in C^{1,0} with d''(y) = d'(x), for x in C^{0,1}."""
    target = dc.d_prime((0, 1), x)
    return [y for y in dc.elements((1, 0), max_search) if np.array_equal(dc.d_double_prime((1, 0), y), target)]


def _boundaries(dc: DoubleComplex, max_search: int) -> List[Tuple[int, ...]]:
    # d' of the d''-cocycles in C^{1,0}
    cycles = (y for y in dc.elements((1, 0), max_search) if not np.any(dc.d_double_prime((1, 0), y)))
    return sorted({tuple(int(v) for v in dc.d_prime((1, 0), y)) for y in cycles})


def d2_class_from_witness(dc: DoubleComplex, y, max_search: int = DEFAULT_MAX_WITNESS_SEARCH) -> E2Class:
    """The class of -d'(y) in E_2^{2,0}, reduced to its smallest coset representative."""
    value = (-dc.d_prime((1, 0), y)) % dc.modulus
    boundaries = _boundaries(dc, max_search)
    representative = min(tuple(int(v) for v in (value + np.array(b, dtype=np.int64)) % dc.modulus)
                         for b in boundaries)
    return E2Class(representative, len(boundaries))


def total_complex_d2(dc: DoubleComplex, x, max_search: int = DEFAULT_MAX_WITNESS_SEARCH,
                     witness: Optional[np.ndarray] = None) -> E2Class:
    """
    Evaluate d_2^{0,1}([x]) = [-d'(y)] where d''(y) = d'(x).

    Cohomology is taken with respect to d'' first and d' second (column filtration). The class
    lives in E_2^{2,0} = ker d'' on C^{2,0} modulo d'(ker d'' on C^{1,0}).

    Args:
        dc (DoubleComplex): A finite double complex.
        x: An element of C^{0,1}.
        max_search (int): Upper bound on the number of elements enumerated in C^{1,0}.
        witness: A known y; searched for when omitted.

    Returns:
        E2Class: The class with its canonical representative.

    Raises:
        ValueError: If x is not a d''-cocycle or d'(x) is not a d''-boundary.
    """
    if not dc.is_double_complex():
        raise ValueError("Differentials do not form a double complex")
    vector = dc.coerce((0, 1), x)
    if np.any(dc.d_double_prime((0, 1), vector)):
        raise ValueError(f"{vector.tolist()} is not a d''-cocycle")

    target = dc.d_prime((0, 1), vector)
    if witness is None:
        witness = next(
            (y for y in dc.elements((1, 0), max_search)
             if np.array_equal(dc.d_double_prime((1, 0), y), target)),
            None
        )
        if witness is None:
            raise ValueError(f"d'({vector.tolist()}) = {target.tolist()} is not a d''-boundary, d_2 is undefined")
    elif not np.array_equal(dc.d_double_prime((1, 0), witness), target):
        raise ValueError(f"{np.asarray(witness).tolist()} is not a witness for {vector.tolist()}")

    _logger.debug(f"d_2 witness for {vector.tolist()}: {np.asarray(witness).tolist()}")
    return d2_class_from_witness(dc, witness, max_search)
