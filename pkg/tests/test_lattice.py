#!/usr/bin/env python

"""Tests for `poincaredeg.lattice`."""

import itertools
import random
import unittest

from poincaredeg.lattice import AffineLattice, IntMatrix, coset_congruence_feasible, hnf, solve_linear, solve_vector


def in_lattice(lattice, point):
  diff = [p - q for p, q in zip(point, lattice.particular)]
  if not lattice.basis:
    return not any(diff)
  basis_columns = IntMatrix.from_rows([list(b) for b in lattice.basis]).transpose()
  return solve_vector(basis_columns, diff) is not None


def random_matrix(rng, rows, cols, bound=3):
  return IntMatrix.from_rows([[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)], cols=cols)


class TestIntMatrix(unittest.TestCase):
  """Matrix plumbing."""

  def test_entry_count_checked(self):
    with self.assertRaises(ValueError):
      IntMatrix(2, 2, (1, 2, 3))

  def test_ragged_rows_rejected(self):
    with self.assertRaises(ValueError):
      IntMatrix.from_rows([[1, 2], [3]])

  def test_product_and_transpose(self):
    A = IntMatrix.from_rows([[1, 2], [3, 4]])
    self.assertEqual((A @ A).to_rows(), [[7, 10], [15, 22]])
    self.assertEqual(A.transpose().to_rows(), [[1, 3], [2, 4]])
    with self.assertRaises(ValueError):
      A @ IntMatrix.from_rows([[1, 2, 3]])

  def test_determinant(self):
    self.assertEqual(IntMatrix.from_rows([[2, 1], [1, 1]]).determinant(), 1)
    self.assertEqual(IntMatrix.zeros(0, 0).determinant(), 1)
    with self.assertRaises(ValueError):
      IntMatrix.zeros(1, 2).determinant()

  def test_independence(self):
    self.assertTrue(AffineLattice((0, 0), ((1, 0), (0, 1))).is_independent())
    self.assertFalse(AffineLattice((0, 0), ((1, 2), (2, 4))).is_independent())


class TestHermiteNormalForm(unittest.TestCase):
  """Row Hermite normal form."""

  def assertHermite(self, A):
    H, U = hnf(A)
    self.assertEqual((U @ A).to_rows(), H.to_rows())
    self.assertEqual(abs(U.determinant()), 1)
    last_pivot = -1
    seen_zero_row = False
    for r in range(H.rows):
      row = H.row(r)
      nonzero = [j for j, x in enumerate(row) if x]
      if not nonzero:
        seen_zero_row = True
        continue
      self.assertFalse(seen_zero_row, "zero rows must come last")
      pivot = nonzero[0]
      self.assertGreater(pivot, last_pivot)
      self.assertGreater(row[pivot], 0)
      for above in range(r):
        self.assertTrue(0 <= H[above, pivot] < row[pivot])
      for below in range(r + 1, H.rows):
        self.assertEqual(H[below, pivot], 0)
      last_pivot = pivot

  def test_identity(self):
    H, U = hnf(IntMatrix.identity(2))
    self.assertEqual(H.to_rows(), [[1, 0], [0, 1]])
    self.assertEqual(U.to_rows(), [[1, 0], [0, 1]])

  def test_column(self):
    A = IntMatrix.from_rows([[2], [4]])
    H, _ = hnf(A)
    self.assertEqual(H.to_rows(), [[2], [0]])
    self.assertHermite(A)

  def test_zero(self):
    H, U = hnf(IntMatrix.from_rows([[0]]))
    self.assertEqual(H.to_rows(), [[0]])
    self.assertEqual(U.to_rows(), [[1]])

  def test_random_matrices(self):
    rng = random.Random(7)
    for _ in range(200):
      self.assertHermite(random_matrix(rng, rng.randint(1, 4), rng.randint(1, 4), bound=9))


class TestSolveLinear(unittest.TestCase):
  """Integral solution lattices."""

  def test_examples(self):
    lattice = solve_linear(IntMatrix.from_rows([[2]]), IntMatrix.from_rows([[6]]))
    self.assertEqual(lattice.particular, (3,))
    self.assertEqual(lattice.basis, ())
    self.assertIsNone(solve_linear(IntMatrix.from_rows([[2]]), IntMatrix.from_rows([[3]])))
    lattice = solve_linear(IntMatrix.from_rows([[1, 0]]), IntMatrix.from_rows([[5]]))
    self.assertEqual(lattice.particular, (5, 0))
    self.assertEqual(lattice.basis, ((0, 1),))

  def test_row_mismatch(self):
    with self.assertRaises(ValueError):
      solve_linear(IntMatrix.from_rows([[1]]), IntMatrix.from_rows([[1], [2]]))

  def test_column_stacking(self):
    A = IntMatrix.from_rows([[1, 1], [0, 1]])
    B = IntMatrix.from_rows([[3, 5], [1, 2]])
    lattice = solve_linear(A, B)
    X = [[lattice.particular[j * 2 + i] for j in range(2)] for i in range(2)]
    self.assertEqual((A @ IntMatrix.from_rows(X)).to_rows(), B.to_rows())

  def test_solutions_are_sound(self):
    rng = random.Random(11)
    for _ in range(100):
      rows, cols, width = rng.randint(1, 3), rng.randint(1, 3), rng.randint(1, 2)
      A = random_matrix(rng, rows, cols)
      B = A @ random_matrix(rng, cols, width)
      lattice = solve_linear(A, B)
      self.assertIsNotNone(lattice)
      self.assertTrue(lattice.is_independent())
      for _ in range(5):
        coefficients = [rng.randint(-3, 3) for _ in lattice.basis]
        point = lattice.point(coefficients)
        X = [[point[j * cols + i] for j in range(width)] for i in range(cols)]
        self.assertEqual((A @ IntMatrix.from_rows(X)).to_rows(), B.to_rows())

  def test_complete_against_brute_force(self):
    rng = random.Random(13)
    for size in (1, 2):
      box = range(-20, 21)
      for _ in range(25):
        A = random_matrix(rng, size, size)
        b = [rng.randint(-6, 6) for _ in range(size)]
        lattice = solve_vector(A, b)
        solutions = [x for x in itertools.product(box, repeat=size) if A.apply(x) == b]
        if lattice is None:
          self.assertEqual(solutions, [])
          continue
        self.assertEqual(A.apply(lattice.particular), b)
        for x in solutions:
          self.assertTrue(in_lattice(lattice, x))


class TestCosetCongruence(unittest.TestCase):
  """Congruence conditions on a solution coset."""

  def test_all_odd_members(self):
    lattice = AffineLattice((1,), ((2,),))
    self.assertIsNone(coset_congruence_feasible(lattice, IntMatrix.from_rows([[1]]), [0], 2))

  def test_even_member_of_one_mod_three(self):
    lattice = AffineLattice((1,), ((3,),))
    v = coset_congruence_feasible(lattice, IntMatrix.from_rows([[1]]), [0], 2)
    self.assertIsNotNone(v)
    self.assertEqual(v[0] % 3, 1)
    self.assertEqual(v[0] % 2, 0)

  def test_free_coordinate(self):
    lattice = AffineLattice((5, 0), ((0, 1),))
    self.assertEqual(coset_congruence_feasible(lattice, IntMatrix.from_rows([[0, 1]]), [2], 24), (5, 2))

  def test_no_conditions(self):
    lattice = AffineLattice((4, 4), ())
    self.assertEqual(coset_congruence_feasible(lattice, IntMatrix.zeros(0, 2), [], 5), (4, 4))

  def test_bad_modulus(self):
    with self.assertRaises(ValueError):
      coset_congruence_feasible(AffineLattice((0,)), IntMatrix.from_rows([[1]]), [0], 0)

  def test_agrees_with_enumeration(self):
    rng = random.Random(17)
    for _ in range(150):
      dim = rng.randint(1, 3)
      nbasis = rng.randint(0, min(dim, 2))
      q = rng.randint(2, 6)
      lattice = AffineLattice(
        tuple(rng.randint(-3, 3) for _ in range(dim)),
        tuple(tuple(rng.randint(-3, 3) for _ in range(dim)) for _ in range(nbasis)))
      L = random_matrix(rng, rng.randint(1, 2), dim)
      c = [rng.randint(0, q - 1) for _ in range(L.rows)]
      expected = any(
        all((x - y) % q == 0 for x, y in zip(L.apply(lattice.point(t)), c))
        for t in itertools.product(range(q), repeat=nbasis))
      v = coset_congruence_feasible(lattice, L, c, q)
      self.assertEqual(v is not None, expected)
      if v is not None:
        self.assertTrue(all((x - y) % q == 0 for x, y in zip(L.apply(v), c)))


if __name__ == "__main__":
  unittest.main()
