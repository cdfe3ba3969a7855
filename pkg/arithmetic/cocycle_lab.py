"""
Galois 2-cocycles over finite cyclic groups.

The group G = Z/m is written additively as exponents of a generator sigma, so the group
element i stands for sigma^i and composition is addition mod m. Modules are finite abelian
groups behind the FiniteAbelianModule interface; the same code serves additive toy modules
and the unit group of a finite field.
"""
import itertools

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from math import gcd
from typing import Any, Callable, Iterator, List, Optional, Sequence, Set, Tuple

from utils.clogger import get_logger
from utils.number_theory import prime_power_base

Element = Any
Monomial = Tuple[Element, int]

_logger = get_logger("CocycleLab")


class FiniteAbelianModule(ABC):
    """A finite abelian group with an automorphism playing the role of the generator sigma."""

    @property
    @abstractmethod
    def order(self) -> int:
        pass

    @property
    @abstractmethod
    def identity(self) -> Element:
        pass

    @abstractmethod
    def op(self, x: Element, y: Element) -> Element:
        pass

    @abstractmethod
    def inverse(self, x: Element) -> Element:
        pass

    @abstractmethod
    def elements(self) -> Iterator[Element]:
        pass

    @abstractmethod
    def apply_generator(self, x: Element) -> Element:
        pass

    def contains(self, x: Element) -> bool:
        return x in set(self.elements())

    def act(self, i: int, x: Element) -> Element:
        for _ in range(i):
            x = self.apply_generator(x)
        return x

    def combine(self, *values: Element) -> Element:
        result = self.identity
        for value in values:
            result = self.op(result, value)
        return result

    def is_periodic(self, m: int) -> bool:
        return all(self.act(m, x) == x for x in self.elements())

    def is_automorphism(self) -> bool:
        images = {self.apply_generator(x) for x in self.elements()}
        if len(images) != self.order:
            return False
        return all(
            self.apply_generator(self.op(x, y)) == self.op(self.apply_generator(x), self.apply_generator(y))
            for x in self.elements() for y in self.elements()
        )

    def invariant_orders(self, m: int) -> Tuple[int, int]:
        """
        Orders of the fixed points of sigma and of the image of the norm 1 + sigma + ... + sigma^(m-1).

        The default enumerates the module.
        """
        fixed = [x for x in self.elements() if self.apply_generator(x) == x]
        norms = {self.combine(*(self.act(i, x) for i in range(m))) for x in self.elements()}
        return len(fixed), len(norms)

    def render(self, x: Element) -> str:
        return str(x)


class CyclicModule(FiniteAbelianModule):
    """Z/n written additively, with sigma acting as multiplication by r."""

    def __init__(self, n: int, r: int = 1):
        if n <= 0:
            raise ValueError(f"Module order must be positive: {n}")
        if gcd(r, n) != 1:
            raise ValueError(f"Multiplication by {r} is not an automorphism of Z/{n}")
        self.n = n
        self.r = r % n

    @property
    def order(self) -> int:
        return self.n

    @property
    def identity(self) -> int:
        return 0

    def op(self, x: int, y: int) -> int:
        return (x + y) % self.n

    def inverse(self, x: int) -> int:
        return (-x) % self.n

    def elements(self) -> Iterator[int]:
        return iter(range(self.n))

    def contains(self, x: Element) -> bool:
        return isinstance(x, int) and 0 <= x < self.n

    def apply_generator(self, x: int) -> int:
        return (self.r * x) % self.n

    def act(self, i: int, x: int) -> int:
        return (pow(self.r, i, self.n) * x) % self.n

    def is_periodic(self, m: int) -> bool:
        return pow(self.r, m, self.n) == 1 % self.n

    def is_automorphism(self) -> bool:
        return gcd(self.r, self.n) == 1

    def norm_multiplier(self, m: int) -> int:
        return sum(pow(self.r, i, self.n) for i in range(m)) % self.n

    def invariant_orders(self, m: int) -> Tuple[int, int]:
        # fixed points are the kernel of multiplication by r - 1, norms the image of the norm multiplier
        fixed_order = gcd(self.r - 1, self.n)
        norm_image_order = self.n // gcd(self.norm_multiplier(m), self.n)
        return fixed_order, norm_image_order

    def __repr__(self):
        return f"CyclicModule(n={self.n}, r={self.r})"


class FiniteFieldUnits(CyclicModule):
    """
    The unit group of the field with q^m elements, sigma the Frobenius x -> x^q.

    The group is cyclic of order q^m - 1; an element is stored as its exponent k with respect
    to a fixed generator g, so multiplication adds exponents and Frobenius multiplies by q.
    """

    def __init__(self, q: int, m: int):
        if m <= 0:
            raise ValueError(f"Extension degree must be positive: {m}")
        self.characteristic = prime_power_base(q)
        self.q = q
        self.m = m
        super().__init__(q ** m - 1, q)

    def render(self, x: int) -> str:
        return "1" if x == 0 else f"g^{x}"

    def base_field_exponents(self) -> Set[int]:
        """Exponents of the units of the field with q elements (the Frobenius fixed points)."""
        step = self.n // (self.q - 1)
        return set(range(0, self.n, step))

    def __repr__(self):
        return f"FiniteFieldUnits(q={self.q}, m={self.m})"


class SignModule(CyclicModule):
    """The group {+1, -1} with trivial action; 0 stands for +1 and 1 for -1."""

    def __init__(self):
        super().__init__(2, 1)

    def render(self, x: int) -> str:
        return "-1" if x else "+1"


class TableModule(FiniteAbelianModule):
    """
    A finite abelian group given by its Cayley table on the elements 0..k-1, with sigma given
    by the list of images of the elements.

    Raises:
        ValueError: If the table is not an abelian group law or the image list has the wrong shape.
    """

    def __init__(self, table: Sequence[Sequence[int]], generator_image: Sequence[int],
                 names: Optional[Sequence[str]] = None):
        k = len(table)
        if k == 0 or any(len(row) != k for row in table):
            raise ValueError(f"Group table must be a nonempty square table, got {k} rows")
        if any(not 0 <= x < k for row in table for x in row):
            raise ValueError(f"Group table entries must lie in 0..{k - 1}")
        if len(generator_image) != k or any(not 0 <= x < k for x in generator_image):
            raise ValueError(f"Generator image must list {k} elements of 0..{k - 1}: {list(generator_image)}")
        if names is not None and len(names) != k:
            raise ValueError(f"Expected {k} element names, got {len(names)}")

        self.table = tuple(tuple(int(x) for x in row) for row in table)
        self.generator_image = tuple(int(x) for x in generator_image)
        self.names = tuple(str(name) for name in names) if names is not None else None

        elements = range(k)
        if any(self.table[x][y] != self.table[y][x] for x in elements for y in elements):
            raise ValueError("Group table is not commutative")
        if any(self.table[self.table[x][y]][z] != self.table[x][self.table[y][z]]
               for x in elements for y in elements for z in elements):
            raise ValueError("Group table is not associative")
        units = [e for e in elements if all(self.table[e][x] == x for x in elements)]
        if not units:
            raise ValueError("Group table has no identity")
        self._identity = units[0]
        self._inverses = {}
        for x in elements:
            inverse = next((y for y in elements if self.table[x][y] == self._identity), None)
            if inverse is None:
                raise ValueError(f"Element {self.render(x)} has no inverse")
            self._inverses[x] = inverse

    @classmethod
    def product_of_cyclic(cls, orders: Sequence[int], matrix: Sequence[Sequence[int]]) -> "TableModule":
        """
        Z/n_1 x ... x Z/n_r with sigma acting on coordinate vectors by an integer matrix.

        Elements are numbered in lexicographic order of their coordinates. The matrix only has to
        give a well defined map on the product; the action checks that it is an automorphism.
        """
        if not orders or any(n <= 0 for n in orders):
            raise ValueError(f"Factor orders must be positive: {list(orders)}")
        r = len(orders)
        if len(matrix) != r or any(len(row) != r for row in matrix):
            raise ValueError(f"Action matrix must be {r}x{r}")

        vectors = list(itertools.product(*(range(n) for n in orders)))
        index = {v: i for i, v in enumerate(vectors)}
        table = [[index[tuple((a + b) % n for a, b, n in zip(u, v, orders))] for v in vectors] for u in vectors]
        image = [index[tuple(sum(row[j] * v[j] for j in range(r)) % orders[i] for i, row in enumerate(matrix))]
                 for v in vectors]
        names = ["(" + ",".join(str(a) for a in v) + ")" for v in vectors]
        return cls(table, image, names)

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def identity(self) -> int:
        return self._identity

    def op(self, x: int, y: int) -> int:
        return self.table[x][y]

    def inverse(self, x: int) -> int:
        return self._inverses[x]

    def elements(self) -> Iterator[int]:
        return iter(range(len(self.table)))

    def apply_generator(self, x: int) -> int:
        return self.generator_image[x]

    def render(self, x: int) -> str:
        return self.names[x] if self.names is not None else str(x)

    def __repr__(self):
        return f"TableModule(order={self.order})"


@dataclass(frozen=True)
class CyclicGaloisAction:
    order: int
    module: FiniteAbelianModule

    def __post_init__(self):
        if self.order <= 0:
            raise ValueError(f"Group order must be positive: {self.order}")
        if not self.module.is_automorphism():
            raise ValueError(f"The generator does not act by automorphisms on {self.module}")
        if not self.module.is_periodic(self.order):
            raise ValueError(f"sigma^{self.order} does not act trivially on {self.module}")

    def group(self) -> range:
        return range(self.order)

    def compose(self, i: int, j: int) -> int:
        return (i + j) % self.order

    def action(self, i: int, x: Element) -> Element:
        return self.module.act(i % self.order, x)


@dataclass(frozen=True)
class OneCochain:
    values: Tuple[Element, ...]

    def __call__(self, i: int) -> Element:
        return self.values[i]


@dataclass(frozen=True)
class TwoCochain:
    values: Tuple[Tuple[Element, ...], ...]

    def __call__(self, i: int, j: int) -> Element:
        return self.values[i][j]

    @classmethod
    def from_function(cls, order: int, fn: Callable[[int, int], Element]) -> "TwoCochain":
        return cls(tuple(tuple(fn(i, j) for j in range(order)) for i in range(order)))

    @classmethod
    def trivial(cls, a: CyclicGaloisAction) -> "TwoCochain":
        return cls.from_function(a.order, lambda i, j: a.module.identity)

    def combine(self, a: CyclicGaloisAction, other: "TwoCochain") -> "TwoCochain":
        return TwoCochain.from_function(a.order, lambda i, j: a.module.op(self(i, j), other(i, j)))


def _check_one_cochain(a: CyclicGaloisAction, f: OneCochain) -> None:
    if len(f.values) != a.order:
        raise ValueError(f"1-cochain needs {a.order} values, got {len(f.values)}")
    if not all(a.module.contains(x) for x in f.values):
        raise ValueError(f"1-cochain has values outside the module: {f.values}")
    if f(0) != a.module.identity:
        raise ValueError(f"1-cochain is not normalized, f(1) = {a.module.render(f(0))}")


def _check_two_cochain(a: CyclicGaloisAction, c: TwoCochain) -> None:
    if len(c.values) != a.order or any(len(row) != a.order for row in c.values):
        raise ValueError(f"2-cochain must be a {a.order}x{a.order} table")
    if not all(a.module.contains(x) for row in c.values for x in row):
        raise ValueError("2-cochain has values outside the module")
    identity = a.module.identity
    if any(c(0, j) != identity or c(j, 0) != identity for j in a.group()):
        raise ValueError("2-cochain is not normalized on the identity row and column")


def normalized_two_cochains(a: CyclicGaloisAction) -> Iterator[TwoCochain]:
    """Every normalized 2-cochain of a (small) action, in a fixed order."""
    m = a.order
    free_pairs = [(i, j) for i in range(1, m) for j in range(1, m)]
    for choice in itertools.product(list(a.module.elements()), repeat=len(free_pairs)):
        table = [[a.module.identity] * m for _ in range(m)]
        for (i, j), value in zip(free_pairs, choice):
            table[i][j] = value
        yield TwoCochain(tuple(tuple(row) for row in table))


def normalized_one_cochains(a: CyclicGaloisAction) -> Iterator[OneCochain]:
    for choice in itertools.product(list(a.module.elements()), repeat=a.order - 1):
        yield OneCochain((a.module.identity,) + tuple(choice))


def coboundary(a: CyclicGaloisAction, f: OneCochain) -> TwoCochain:
    """
    The 2-cochain (df)(s, t) = s(f_t) * f_st^-1 * f_s.

    Args:
        a (CyclicGaloisAction): The group and the module it acts on.
        f (OneCochain): A normalized 1-cochain.
    """
    _check_one_cochain(a, f)
    module = a.module
    return TwoCochain.from_function(
        a.order,
        lambda s, t: module.combine(a.action(s, f(t)), module.inverse(f(a.compose(s, t))), f(s))
    )


def cocycle_defect(a: CyclicGaloisAction, c: TwoCochain) -> Optional[Tuple[int, int, int]]:
    """Return the first triple violating the cocycle condition, or None."""
    module = a.module
    for s, t, u in itertools.product(a.group(), repeat=3):
        lhs = module.op(a.action(s, c(t, u)), c(s, a.compose(t, u)))
        rhs = module.op(c(a.compose(s, t), u), c(s, t))
        if lhs != rhs:
            return s, t, u
    return None


def is_cocycle(a: CyclicGaloisAction, c: TwoCochain) -> bool:
    """Check s(c(t,u)) * c(s, tu) = c(st, u) * c(s, t) for every triple."""
    _check_two_cochain(a, c)
    return cocycle_defect(a, c) is None


def fixed_points(a: CyclicGaloisAction) -> List[Element]:
    return [x for x in a.module.elements() if a.action(1, x) == x]


def norm_map(a: CyclicGaloisAction, x: Element) -> Element:
    return a.module.combine(*(a.action(i, x) for i in a.group()))


@dataclass(frozen=True)
class CohomologyGroup:
    """H^2 of a cyclic group presented as fixed points modulo norms; it is cyclic when the module is."""
    fixed_order: int
    norm_image_order: int

    @property
    def order(self) -> int:
        return self.fixed_order // self.norm_image_order

    @property
    def is_trivial(self) -> bool:
        return self.order == 1


def h2_cyclic(a: CyclicGaloisAction) -> CohomologyGroup:
    """
    Second cohomology of the cyclic group acting on a finite module: M^G / N(M).

    For the unit group of F_{q^m} over F_q this is the relative Brauer group of the
    extension, which is trivial because the norm of a finite field extension is surjective.
    """
    fixed_order, norm_image_order = a.module.invariant_orders(a.order)
    if fixed_order % norm_image_order != 0:
        raise ValueError(f"Norm image of order {norm_image_order} is not inside the fixed points")
    return CohomologyGroup(fixed_order, norm_image_order)


@dataclass(frozen=True)
class CrossedProductTable:
    """
    Multiplication of monomials u*x_s in the crossed product attached to a 2-cocycle.

    (u x_s)(v x_t) = u * s(v) * c(s, t) x_st and x_s a = s(a) x_s.
    """
    base_action: CyclicGaloisAction
    cocycle: TwoCochain
    verified: bool = field(default=True, repr=False, compare=False)

    def __post_init__(self):
        _check_two_cochain(self.base_action, self.cocycle)
        if self.verified:
            defect = cocycle_defect(self.base_action, self.cocycle)
            if defect is not None:
                raise ValueError(f"Not a 2-cocycle, the condition fails at {defect}; the table would not be associative")

    @property
    def identity(self) -> Monomial:
        module = self.base_action.module
        return module.inverse(self.cocycle(0, 0)), 0

    def basis(self, s: int) -> Monomial:
        return self.base_action.module.identity, s

    def multiply(self, left: Monomial, right: Monomial) -> Monomial:
        a = self.base_action
        (u, s), (v, t) = left, right
        return a.module.combine(u, a.action(s, v), self.cocycle(s, t)), a.compose(s, t)

    def basis_table(self) -> List[List[Monomial]]:
        """The products x_s x_t = c(s, t) x_st for all s, t."""
        return [[self.multiply(self.basis(s), self.basis(t)) for t in self.base_action.group()]
                for s in self.base_action.group()]

    def monomials(self) -> Iterator[Monomial]:
        for s in self.base_action.group():
            for u in self.base_action.module.elements():
                yield u, s

    def is_associative(self, exhaustive: bool = False) -> bool:
        """
        Check associativity on all triples of basis elements x_s, or on all monomials when exhaustive.
        """
        if exhaustive:
            candidates = list(self.monomials())
        else:
            candidates = [self.basis(s) for s in self.base_action.group()]

        for x, y, z in itertools.product(candidates, repeat=3):
            if self.multiply(self.multiply(x, y), z) != self.multiply(x, self.multiply(y, z)):
                return False
        return True

    def monomial_center(self) -> List[Monomial]:
        """Monomials u x_s commuting with every monomial."""
        all_monomials = list(self.monomials())
        return [
            x for x in all_monomials
            if all(self.multiply(x, y) == self.multiply(y, x) for y in all_monomials)
        ]

    def rescaled(self, f: OneCochain) -> "CrossedProductTable":
        """The table of the cohomologous cocycle c * df, i.e. the same algebra in the basis f_s x_s."""
        a = self.base_action
        return CrossedProductTable(a, self.cocycle.combine(a, coboundary(a, f)))

    def rescaling_map(self, f: OneCochain) -> Callable[[Monomial], Monomial]:
        """The isomorphism from rescaled(f) to this table, u x_s -> u f_s x_s."""
        _check_one_cochain(self.base_action, f)
        module = self.base_action.module
        return lambda monomial: (module.op(monomial[0], f(monomial[1])), monomial[1])


def crossed_product(a: CyclicGaloisAction, c: TwoCochain) -> CrossedProductTable:
    """
    Build the crossed product table of a 2-cocycle.

    Raises:
        ValueError: If c is not a normalized 2-cocycle.
    """
    table = CrossedProductTable(a, c)
    _logger.debug(f"crossed product over {a.module} with {a.order} basis elements")
    return table


def associativity_iff_cocycle(a: CyclicGaloisAction, c: TwoCochain) -> bool:
    """
    Compare associativity of the table built from c with the cocycle condition.

    Both predicates agree for every cochain, so this always returns True.
    """
    table = CrossedProductTable(a, c, verified=False)
    return table.is_associative() == is_cocycle(a, c)
