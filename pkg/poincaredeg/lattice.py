"""Exact integer linear algebra: Hermite normal form and integral solution lattices.

All arithmetic uses Python integers, so intermediate entries never overflow.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from sympy import Matrix

import logging

logging.basicConfig()
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IntMatrix:
  """A dense integer matrix stored row-major."""
  rows: int
  cols: int
  entries: Tuple[int, ...]

  def __post_init__(self):
    entries = tuple(int(x) for x in self.entries)
    if self.rows < 0 or self.cols < 0 or len(entries) != self.rows * self.cols:
      message = f"IntMatrix {self.rows}x{self.cols} needs {self.rows * self.cols} entries, got {len(entries)}"
      logger.error(message)
      raise ValueError(message)
    object.__setattr__(self, "entries", entries)

  @classmethod
  def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "IntMatrix":
    """Builds a matrix from a list of rows.

    ``cols`` is only needed for matrices without rows.
    """
    rows = [list(r) for r in rows]
    width = len(rows[0]) if rows else (cols or 0)
    if any(len(r) != width for r in rows):
      message = "All rows of an IntMatrix must have the same length"
      logger.error(message)
      raise ValueError(message)
    return cls(len(rows), width, tuple(x for r in rows for x in r))

  @classmethod
  def identity(cls, n: int) -> "IntMatrix":
    return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], cols=n)

  @classmethod
  def zeros(cls, rows: int, cols: int) -> "IntMatrix":
    return cls(rows, cols, (0,) * (rows * cols))

  def __getitem__(self, index: Tuple[int, int]) -> int:
    i, j = index
    return self.entries[i * self.cols + j]

  def row(self, i: int) -> List[int]:
    return list(self.entries[i * self.cols:(i + 1) * self.cols])

  def column(self, j: int) -> List[int]:
    return [self.entries[i * self.cols + j] for i in range(self.rows)]

  def to_rows(self) -> List[List[int]]:
    return [self.row(i) for i in range(self.rows)]

  def transpose(self) -> "IntMatrix":
    return IntMatrix.from_rows([self.column(j) for j in range(self.cols)], cols=self.rows)

  def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
    if self.cols != other.rows:
      message = f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
      logger.error(message)
      raise ValueError(message)
    cols = [other.column(j) for j in range(other.cols)]
    return IntMatrix.from_rows(
      [[sum(a * b for a, b in zip(self.row(i), c)) for c in cols] for i in range(self.rows)],
      cols=other.cols)

  def apply(self, vec: Sequence[int]) -> List[int]:
    """Matrix-vector product."""
    return [sum(a * b for a, b in zip(self.row(i), vec)) for i in range(self.rows)]

  def to_sympy(self) -> Matrix:
    return Matrix(self.rows, self.cols, list(self.entries))

  def determinant(self) -> int:
    if self.rows != self.cols:
      message = f"Determinant of a non-square {self.rows}x{self.cols} matrix"
      logger.error(message)
      raise ValueError(message)
    if self.rows == 0:
      return 1
    return int(self.to_sympy().det())


@dataclass(frozen=True)
class AffineLattice:
  """The set ``particular + span_Z(basis)``.

  Attributes:
      particular: One integer point of the lattice.
      basis: Generators of the homogeneous solution lattice, linearly independent.
  """
  particular: Tuple[int, ...]
  basis: Tuple[Tuple[int, ...], ...] = ()

  def __post_init__(self):
    particular = tuple(int(x) for x in self.particular)
    basis = tuple(tuple(int(x) for x in b) for b in self.basis)
    if any(len(b) != len(particular) for b in basis):
      message = "All basis vectors must share the dimension of the particular point"
      logger.error(message)
      raise ValueError(message)
    object.__setattr__(self, "particular", particular)
    object.__setattr__(self, "basis", basis)

  @property
  def dimension(self) -> int:
    return len(self.particular)

  def is_independent(self) -> bool:
    """True when the basis vectors are linearly independent over the rationals."""
    if not self.basis:
      return True
    return Matrix([list(b) for b in self.basis]).rank() == len(self.basis)

  def point(self, coefficients: Sequence[int]) -> Tuple[int, ...]:
    """The lattice point ``particular + sum(c_i * basis_i)``."""
    point = list(self.particular)
    for c, b in zip(coefficients, self.basis):
      for idx, x in enumerate(b):
        point[idx] += c * x
    return tuple(point)


def _xgcd(a, b):
  # Maintain the invariants:
  #          x * a +      y * b ==      g
  #     next_x * a + next_y * b == next_g
  x, next_x = 1, 0
  y, next_y = 0, 1
  g, next_g = a, b
  while next_g:
    q = g // next_g
    x, next_x = next_x, x - q * next_x
    y, next_y = next_y, y - q * next_y
    g, next_g = next_g, g - q * next_g
  return x, y, g


def _hnf_rows(rows: List[List[int]], ncols: int):
  """Row Hermite normal form of a list of rows, in place.

  Returns the transform rows and the pivot column of each nonzero row.
  """
  m = len(rows)
  transform = [[int(i == j) for j in range(m)] for i in range(m)]
  pivots = []
  r = 0
  for j in range(ncols):
    if r == m:
      break
    for i in range(r + 1, m):
      b = rows[i][j]
      if b == 0:
        continue
      a = rows[r][j]
      if a != 0 and b % a == 0:
        q = b // a
        rows[i] = [y - q * x for x, y in zip(rows[r], rows[i])]
        transform[i] = [y - q * x for x, y in zip(transform[r], transform[i])]
        continue
      x, y, g = _xgcd(a, b)
      ag, bg = a // g, b // g
      top, low = rows[r], rows[i]
      rows[r] = [x * u + y * v for u, v in zip(top, low)]
      rows[i] = [-bg * u + ag * v for u, v in zip(top, low)]
      top, low = transform[r], transform[i]
      transform[r] = [x * u + y * v for u, v in zip(top, low)]
      transform[i] = [-bg * u + ag * v for u, v in zip(top, low)]
    pivot = rows[r][j]
    if pivot == 0:
      continue
    if pivot < 0:
      rows[r] = [-v for v in rows[r]]
      transform[r] = [-v for v in transform[r]]
      pivot = -pivot
    for i in range(r):
      q = rows[i][j] // pivot
      if q:
        rows[i] = [v - q * u for u, v in zip(rows[r], rows[i])]
        transform[i] = [v - q * u for u, v in zip(transform[r], transform[i])]
    pivots.append(j)
    r += 1
  return transform, pivots


def hnf(A: IntMatrix) -> Tuple[IntMatrix, IntMatrix]:
  """Row Hermite normal form with its unimodular transform.

  Args:
      A: Any integer matrix.

  Returns:
      tuple: ``(H, U)`` with ``H == U @ A``, ``|det U| == 1`` and ``H`` upper
      echelon with positive pivots and entries above each pivot reduced into
      ``[0, pivot)``.

  Examples:
      >>> H, U = hnf(IntMatrix.from_rows([[2], [4]]))
      >>> H.to_rows()
      [[2], [0]]
  """
  rows = A.to_rows()
  transform, _ = _hnf_rows(rows, A.cols)
  return IntMatrix.from_rows(rows, cols=A.cols), IntMatrix.from_rows(transform, cols=A.rows)


def _solve_vector(A: IntMatrix, b: Sequence[int]) -> Optional[AffineLattice]:
  # U A^T = H, x = U^T y, so A x = H^T y.
  rows = A.transpose().to_rows()
  transform, pivots = _hnf_rows(rows, A.rows)
  y = []
  for p, j in enumerate(pivots):
    residual = b[j] - sum(rows[pp][j] * y[pp] for pp in range(p))
    if residual % rows[p][j]:
      return None
    y.append(residual // rows[p][j])
  for j in range(A.rows):
    if sum(rows[p][j] * y[p] for p in range(len(pivots))) != b[j]:
      return None
  particular = [0] * A.cols
  for p, coefficient in enumerate(y):
    for idx, u in enumerate(transform[p]):
      particular[idx] += coefficient * u
  basis = tuple(tuple(transform[p]) for p in range(len(pivots), A.cols))
  return AffineLattice(tuple(particular), basis)


def solve_linear(A: IntMatrix, B: IntMatrix) -> Optional[AffineLattice]:
  """All integer solutions X of ``A @ X == B``.

  The unknown matrix X (``A.cols x B.cols``) is stacked column by column into
  a single vector: entry ``X[i][j]`` sits at index ``j * A.cols + i``.

  Args:
      A: Coefficient matrix.
      B: Right-hand sides, one column per unknown column.

  Returns:
      AffineLattice or None: The full solution lattice of the stacked unknown,
      or None when no integer solution exists.

  Raises:
      ValueError: If ``A`` and ``B`` have different row counts.

  Examples:
      >>> solve_linear(IntMatrix.from_rows([[2]]), IntMatrix.from_rows([[6]])).particular
      (3,)
      >>> solve_linear(IntMatrix.from_rows([[2]]), IntMatrix.from_rows([[3]])) is None
      True
  """
  if A.rows != B.rows:
    message = f"solve_linear: A has {A.rows} rows but B has {B.rows}"
    logger.error(message)
    raise ValueError(message)
  particular = []
  basis = []
  offset = 0
  for j in range(B.cols):
    block = _solve_vector(A, B.column(j))
    if block is None:
      return None
    particular.extend(block.particular)
    for b in block.basis:
      vec = [0] * (A.cols * B.cols)
      vec[offset:offset + A.cols] = b
      basis.append(tuple(vec))
    offset += A.cols
  return AffineLattice(tuple(particular), tuple(basis))


def solve_vector(A: IntMatrix, b: Sequence[int]) -> Optional[AffineLattice]:
  """Single right-hand-side form of ``solve_linear``."""
  if A.rows != len(b):
    message = f"solve_vector: A has {A.rows} rows but b has {len(b)} entries"
    logger.error(message)
    raise ValueError(message)
  return _solve_vector(A, list(b))


def coset_congruence_feasible(sol: AffineLattice, L: IntMatrix, c: Sequence[int], q: int) -> Optional[Tuple[int, ...]]:
  """Finds a point ``v`` of ``sol`` with ``L @ v == c (mod q)``.

  Writes ``v = particular + basis^T t`` and solves the extended integer system
  ``(L basis^T) t - q z = c - L particular`` exactly.

  Args:
      sol: The affine lattice to search.
      L: Congruence coefficients, ``L.cols == sol.dimension``.
      c: Target residues, one per row of ``L``.
      q: Positive modulus.

  Returns:
      tuple or None: A witness point, or None when no lattice point qualifies.

  Raises:
      ValueError: On dimension mismatch or a non-positive modulus.
  """
  if q <= 0:
    message = f"Modulus must be positive, got {q}"
    logger.error(message)
    raise ValueError(message)
  if L.cols != sol.dimension or L.rows != len(c):
    message = f"coset_congruence_feasible: L is {L.rows}x{L.cols}, lattice dimension {sol.dimension}, {len(c)} targets"
    logger.error(message)
    raise ValueError(message)
  if L.rows == 0 or q == 1:
    return sol.particular
  rhs = [ci - li for ci, li in zip(c, L.apply(sol.particular))]
  images = [L.apply(b) for b in sol.basis]
  nb = len(images)
  system = IntMatrix.from_rows(
    [[images[t][r] for t in range(nb)] + [-q if rr == r else 0 for rr in range(L.rows)] for r in range(L.rows)],
    cols=nb + L.rows)
  extended = _solve_vector(system, rhs)
  if extended is None:
    return None
  return sol.point(extended.particular[:nb])
