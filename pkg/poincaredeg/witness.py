"""Coefficient matrices of skeleton maps and their algebra.

A map between the (2n-2)-skeleta of X (rank k) and Y (rank m) is recorded by
the 2k x 2m integer matrix (a_is). Its upper-right block B vanishes, so only
A (degree n-1 part), C (the eta-twisted part) and D (degree n part) are kept,
each k x m.
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from sympy import Matrix

from poincaredeg.lattice import IntMatrix

import logging

logging.basicConfig()
logger = logging.getLogger(__name__)

Block = Tuple[Tuple[int, ...], ...]


def _fail(message: str):
  logger.error(message)
  raise ValueError(message)


def _block(rows: Sequence[Sequence[int]]) -> Block:
  return tuple(tuple(int(x) for x in row) for row in rows)


@dataclass(frozen=True)
class WitnessMatrix:
  """The blocks A, C, D of a skeleton map, each k x m."""
  A: Block
  C: Block
  D: Block

  def __post_init__(self):
    A, C, D = _block(self.A), _block(self.C), _block(self.D)
    k = len(A)
    m = len(A[0]) if A else 0
    if k < 1 or m < 1:
      _fail("Witness blocks must be at least 1x1")
    for name, block in (("A", A), ("C", C), ("D", D)):
      if len(block) != k or any(len(row) != m for row in block):
        _fail(f"Witness block {name} must be {k}x{m}")
    object.__setattr__(self, "A", A)
    object.__setattr__(self, "C", C)
    object.__setattr__(self, "D", D)

  @property
  def k(self) -> int:
    return len(self.A)

  @property
  def m(self) -> int:
    return len(self.A[0])

  @classmethod
  def zero(cls, k: int, m: int) -> "WitnessMatrix":
    rows = tuple((0,) * m for _ in range(k))
    return cls(rows, rows, rows)

  def full_matrix(self) -> List[List[int]]:
    """The 2k x 2m matrix [[A, 0], [C, D]]."""
    top = [list(a) + [0] * self.m for a in self.A]
    bottom = [list(c) + list(d) for c, d in zip(self.C, self.D)]
    return top + bottom

  def to_document(self) -> dict:
    return {"A": [list(r) for r in self.A], "C": [list(r) for r in self.C], "D": [list(r) for r in self.D]}

  @classmethod
  def from_document(cls, doc: dict) -> "WitnessMatrix":
    try:
      return cls(doc["A"], doc["C"], doc["D"])
    except (KeyError, TypeError) as e:
      _fail(f"Malformed witness document: {e}")

  def __str__(self):
    return f"A={[list(r) for r in self.A]} C={[list(r) for r in self.C]} D={[list(r) for r in self.D]}"


def _matmul(X: Block, Y: Block) -> Block:
  return (IntMatrix.from_rows(X) @ IntMatrix.from_rows(Y)).to_rows()


def _mod2(X) -> Block:
  return tuple(tuple(x % 2 for x in row) for row in X)


def identity_witness(k: int) -> WitnessMatrix:
  """A = D = I_k and C = 0: the identity map of a rank-k complex."""
  eye = tuple(tuple(int(i == j) for j in range(k)) for i in range(k))
  return WitnessMatrix(eye, tuple((0,) * k for _ in range(k)), eye)


def is_identity(W: WitnessMatrix) -> bool:
  """True for identity blocks, with C compared mod 2."""
  if W.k != W.m:
    return False
  eye = identity_witness(W.k)
  return W.A == eye.A and W.D == eye.D and _mod2(W.C) == eye.C


def compose_witness(P: WitnessMatrix, Q: WitnessMatrix) -> WitnessMatrix:
  """Blocks of ``g f`` for ``f: X -> Y`` recorded by P and ``g: Y -> Z`` by Q.

  The transposed induced matrices multiply, giving ``A = A_P A_Q``,
  ``D = D_P D_Q`` and ``C = C_P A_Q + D_P C_Q`` reduced mod 2.

  Raises:
      ValueError: If the inner ranks differ.

  Examples:
      >>> W = WitnessMatrix([[1]], [[1]], [[1]])
      >>> compose_witness(W, W)
      WitnessMatrix(A=((1,),), C=((0,),), D=((1,),))
  """
  if P.m != Q.k:
    _fail(f"Cannot compose a {P.k}x{P.m} witness with a {Q.k}x{Q.m} witness")
  A = _matmul(P.A, Q.A)
  D = _matmul(P.D, Q.D)
  C1 = _matmul(P.C, Q.A)
  C2 = _matmul(P.D, Q.C)
  C = [[(x + y) % 2 for x, y in zip(r1, r2)] for r1, r2 in zip(C1, C2)]
  return WitnessMatrix(A, C, D)


def det_star(W: WitnessMatrix) -> int:
  """Determinant of the full block matrix, which equals ``det A * det D``.

  Raises:
      ValueError: If the blocks are not square.
  """
  if W.k != W.m:
    _fail(f"det_star needs square blocks, got {W.k}x{W.m}")
  return IntMatrix.from_rows(W.full_matrix()).determinant()


def homotopy_inverse(W: WitnessMatrix, d: int) -> WitnessMatrix:
  """Blocks of a homotopy inverse of a degree +-1 map.

  With ``A^T D = d I`` and ``d = +-1``, the inverse has ``A' = A^{-1}``,
  ``D' = d A^T`` and ``C' = A^T C A^{-1}`` (mod 2).

  Raises:
      ValueError: If the blocks are not square, ``d`` is not +-1 or ``A`` is not
          invertible over the integers.
  """
  if W.k != W.m:
    _fail(f"homotopy_inverse needs square blocks, got {W.k}x{W.m}")
  if d not in (1, -1):
    _fail(f"Only degree +1 or -1 maps are homotopy equivalences, got d={d}")
  A = Matrix([list(r) for r in W.A])
  if abs(A.det()) != 1:
    _fail("A block is not unimodular")
  inverse = A.inv()
  A_inv = _block(inverse.tolist())
  A_t = _block(A.T.tolist())
  C = _mod2(_matmul(_matmul(A_t, W.C), A_inv))
  D = tuple(tuple(d * x for x in row) for row in A_t)
  return WitnessMatrix(A_inv, C, D)
