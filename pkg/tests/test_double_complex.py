import itertools
import random
import unittest

import numpy as np

from arithmetic.double_complex import (DoubleComplex, LinearComplex, d2_class_from_witness, d2_witnesses,
                                       total_complex_d2)


def _unipotent(rng: random.Random, rank: int, modulus: int) -> np.ndarray:
    matrix = np.eye(rank, dtype=np.int64)
    for i in range(rank):
        for j in range(i + 1, rank):
            matrix[i, j] = rng.randrange(modulus)
    return matrix


def _unipotent_inverse(matrix: np.ndarray, modulus: int) -> np.ndarray:
    rank = matrix.shape[0]
    nilpotent = (np.eye(rank, dtype=np.int64) - matrix) % modulus
    inverse, power = np.eye(rank, dtype=np.int64), np.eye(rank, dtype=np.int64)
    for _ in range(1, rank):
        power = (power @ nilpotent) % modulus
        inverse = (inverse + power) % modulus
    return inverse


def random_linear_complex(rng: random.Random, modulus: int, length: int, max_rank: int) -> LinearComplex:
    """
    A sum of pieces Z/n -k-> Z/n between neighbouring degrees and isolated copies of Z/n,
    written in a random unipotent basis at every degree.
    """
    incoming, ranks, pairs, offsets = 0, [], [], []
    for i in range(length):
        room = max_rank - incoming
        outgoing = rng.randint(0, room) if i < length - 1 else 0
        isolated = rng.randint(0, room - outgoing)
        offsets.append(incoming)
        pairs.append(outgoing)
        ranks.append(incoming + outgoing + isolated)
        incoming = outgoing

    bases = [_unipotent(rng, rank, modulus) for rank in ranks]
    maps = []
    for i in range(length - 1):
        d = np.zeros((ranks[i + 1], ranks[i]), dtype=np.int64)
        for j in range(pairs[i]):
            # the j-th source sits after the incoming block of degree i, its target opens degree i+1
            d[j, offsets[i] + j] = rng.randrange(1, modulus)
        maps.append((bases[i + 1] @ d @ _unipotent_inverse(bases[i], modulus)) % modulus)
    return LinearComplex(modulus, tuple(ranks), tuple(maps))


def random_tensor_complex(rng: random.Random) -> DoubleComplex:
    modulus = rng.choice((2, 3))
    max_rank = 2 if modulus == 2 else 1
    rows = random_linear_complex(rng, modulus, 4, 2)
    columns = random_linear_complex(rng, modulus, 3, max_rank)
    return DoubleComplex.tensor(rows, columns)


def staircase(modulus: int, a: int, b: int, c: int) -> DoubleComplex:
    """
    Z/n at (0,1), (1,1), (1,0) and (2,0) with d_h = a on row 1, d_v = b on column 1 and d_h = c on row 0.

    With b a unit, d_2 sends x to the class of c * a * x / b.
    """
    return DoubleComplex(
        modulus,
        {(0, 1): 1, (1, 1): 1, (1, 0): 1, (2, 0): 1},
        horizontal={(0, 1): np.array([[a]], dtype=np.int64), (1, 0): np.array([[c]], dtype=np.int64)},
        vertical={(1, 0): np.array([[b]], dtype=np.int64)},
    )


def direct_sum(first: DoubleComplex, second: DoubleComplex) -> DoubleComplex:
    positions = set(first.ranks) | set(second.ranks)
    ranks = {pos: first.rank(pos) + second.rank(pos) for pos in positions}

    def block(dc, table, source, target):
        return table.get(source, np.zeros((dc.rank(target), dc.rank(source)), dtype=np.int64))

    def blocks(horizontal: bool):
        table = {}
        for p, q in positions:
            target = (p + 1, q) if horizontal else (p, q + 1)
            left = block(first, first.horizontal if horizontal else first.vertical, (p, q), target)
            right = block(second, second.horizontal if horizontal else second.vertical, (p, q), target)
            matrix = np.zeros((ranks.get(target, 0), ranks[(p, q)]), dtype=np.int64)
            matrix[:left.shape[0], :left.shape[1]] = left
            matrix[left.shape[0]:, left.shape[1]:] = right
            table[(p, q)] = matrix
        return table

    return DoubleComplex(first.modulus, ranks, blocks(True), blocks(False))


def change_basis(rng: random.Random, dc: DoubleComplex) -> DoubleComplex:
    """The same double complex written in a random unipotent basis at every position."""
    n = dc.modulus
    bases = {pos: _unipotent(rng, rank, n) for pos, rank in dc.ranks.items()}

    def basis(pos):
        return bases.get(pos, np.eye(0, dtype=np.int64))

    def conjugate(table, step):
        return {(p, q): (basis((p + step[0], q + step[1])) @ matrix @ _unipotent_inverse(basis((p, q)), n)) % n
                for (p, q), matrix in table.items()}

    return DoubleComplex(n, dict(dc.ranks), conjugate(dc.horizontal, (1, 0)), conjugate(dc.vertical, (0, 1)))


def random_twisted_complex(rng: random.Random) -> DoubleComplex:
    """
    A staircase carrying a nonzero d_2, summed with a tensor product and rewritten in a random basis.
    The result is not a tensor product.
    """
    tensor = random_tensor_complex(rng)
    n = tensor.modulus
    step = staircase(n, rng.randrange(1, n), rng.randrange(1, n), rng.randrange(1, n))
    return change_basis(rng, direct_sum(step, tensor))


def z2_example() -> DoubleComplex:
    one = np.array([[1]], dtype=np.int64)
    return DoubleComplex(
        2,
        {(0, 1): 1, (1, 1): 1, (1, 0): 1, (2, 0): 1},
        horizontal={(0, 1): one, (1, 0): one},
        vertical={(1, 0): one},
    )


class TestLinearComplex(unittest.TestCase):
    def test_random_complexes_square_to_zero(self):
        rng = random.Random(11)
        for _ in range(200):
            self.assertTrue(random_linear_complex(rng, rng.choice((2, 3, 4, 6)), 4, 3).is_complex())

    def test_shape_validation(self):
        with self.assertRaises(ValueError):
            LinearComplex(2, (1, 2), (np.zeros((1, 1), dtype=np.int64),))
        with self.assertRaises(ValueError):
            LinearComplex(2, (1, 2), ())


class TestDoubleComplex(unittest.TestCase):
    def setUp(self):
        self.rng = random.Random(2024)

    def test_generated_complexes_are_double_complexes(self):
        for _ in range(100):
            self.assertTrue(random_tensor_complex(self.rng).is_double_complex())
            self.assertTrue(random_twisted_complex(self.rng).is_double_complex())

    def test_total_differential_squares_to_zero(self):
        for i in range(100):
            dc = random_tensor_complex(self.rng) if i % 2 else random_twisted_complex(self.rng)
            for degree in range(5):
                z = {(p, degree - p): np.array([self.rng.randrange(dc.modulus) for _ in range(dc.rank((p, degree - p)))],
                                               dtype=np.int64)
                     for p in range(degree + 1) if dc.rank((p, degree - p))}
                dz = dc.total_differential(z)
                ddz = dc.total_differential(dz)
                self.assertTrue(all(not np.any(v) for v in ddz.values()), (degree, ddz))

    def test_detects_non_commuting_maps(self):
        one = np.array([[1]], dtype=np.int64)
        dc = DoubleComplex(3, {(0, 0): 1, (1, 0): 1, (0, 1): 1, (1, 1): 1},
                           horizontal={(0, 0): one, (0, 1): one}, vertical={(0, 0): one, (1, 0): 2 * one})
        self.assertFalse(dc.is_double_complex())

    def test_rejects_bad_shapes(self):
        with self.assertRaises(ValueError):
            DoubleComplex(2, {(0, 0): 1, (1, 0): 2}, horizontal={(0, 0): np.zeros((1, 1), dtype=np.int64)})


class TestSecondDifferential(unittest.TestCase):
    def test_unique_witness_example(self):
        dc = z2_example()
        self.assertTrue(dc.is_double_complex())
        self.assertEqual(len(d2_witnesses(dc, [1])), 1)
        e2 = total_complex_d2(dc, [1])
        self.assertEqual(e2.representative, (1,))
        self.assertEqual(e2.boundary_size, 1)
        self.assertFalse(e2.is_zero)

    def test_zero_maps_to_zero(self):
        rng = random.Random(5)
        for _ in range(50):
            dc = random_twisted_complex(rng)
            self.assertTrue(total_complex_d2(dc, dc.zero((0, 1))).is_zero)

    def test_staircase(self):
        for n in (2, 3, 5):
            for a, b, c in itertools.product(range(1, n), repeat=3):
                dc = staircase(n, a, b, c)
                for x in range(n):
                    expected = (c * a * x * pow(b, -1, n)) % n
                    self.assertEqual(total_complex_d2(dc, [x]).representative, (expected,), (n, a, b, c, x))

    def test_tensor_products_over_a_field_have_zero_d2(self):
        rng = random.Random(42)
        for _ in range(60):
            dc = random_tensor_complex(rng)
            x = np.array([rng.randrange(dc.modulus) for _ in range(dc.rank((0, 1)))], dtype=np.int64)
            if np.any(dc.d_double_prime((0, 1), x)) or not d2_witnesses(dc, x):
                continue
            self.assertTrue(total_complex_d2(dc, x).is_zero)

    def test_witness_independence(self):
        rng = random.Random(99)
        checked = nonzero = 0
        for _ in range(60):
            dc = random_twisted_complex(rng)
            self.assertTrue(dc.is_double_complex())
            for _ in range(3):
                x = np.array([rng.randrange(dc.modulus) for _ in range(dc.rank((0, 1)))], dtype=np.int64)
                if np.any(dc.d_double_prime((0, 1), x)):
                    continue
                witnesses = d2_witnesses(dc, x)
                if not witnesses:
                    continue
                classes = {d2_class_from_witness(dc, y).representative for y in witnesses}
                self.assertEqual(len(classes), 1)
                e2 = total_complex_d2(dc, x)
                self.assertEqual(e2.representative, classes.pop())
                checked += 1
                nonzero += not e2.is_zero
        self.assertGreater(checked, 0)
        self.assertGreater(nonzero, 0)

    def test_not_a_cocycle(self):
        one = np.array([[1]], dtype=np.int64)
        dc = DoubleComplex(2, {(0, 1): 1, (0, 2): 1}, vertical={(0, 1): one})
        with self.assertRaises(ValueError):
            total_complex_d2(dc, [1])

    def test_not_a_boundary(self):
        one = np.array([[1]], dtype=np.int64)
        dc = DoubleComplex(2, {(0, 1): 1, (1, 1): 1}, horizontal={(0, 1): one})
        with self.assertRaises(ValueError):
            total_complex_d2(dc, [1])

    def test_search_limit(self):
        with self.assertRaises(ValueError):
            total_complex_d2(z2_example(), [1], max_search=1)

    def test_explicit_witness(self):
        dc = z2_example()
        self.assertEqual(total_complex_d2(dc, [1], witness=np.array([1])).representative, (1,))
        with self.assertRaises(ValueError):
            total_complex_d2(dc, [1], witness=np.array([0]))


if __name__ == '__main__':
    unittest.main()
