"""Poincare complexes of the family J_n in normal form.

A complex of rank k is stored through the invariants of its top-cell attaching
map: the first-order components ``p_i alpha`` (k elements of g1 followed by k
elements of g2) and the mod-2 second-order bits ``m_ij`` for ``i < j``. The
Whitehead terms that encode the identity cup-product matrix carry no data and
are never stored.
"""

import itertools
from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple

from poincaredeg.abelian import GroupElement, reduce
from poincaredeg.homotopy_tables import GroupTable, builtin_table

import logging

logging.basicConfig()
logger = logging.getLogger(__name__)


def _fail(message: str):
  logger.error(message)
  raise ValueError(message)


@dataclass(frozen=True)
class ComplexSpec:
  """A torsion-free (n-2)-connected (2n-1)-dimensional Poincare complex.

  Attributes:
      table: The homotopy data for n.
      rank: k, the rank of H_{n-1}.
      first_low: p_i alpha for i = 1..k, elements of g1.
      first_high: p_{k+i} alpha for i = 1..k, elements of g2.
      second: strict upper triangle of the bits m_ij; row i holds m_{i,j} for j > i,
          so there are k - 1 rows of lengths k - 1, ..., 1.
  """
  table: GroupTable
  rank: int
  first_low: Tuple[GroupElement, ...]
  first_high: Tuple[GroupElement, ...]
  second: Tuple[Tuple[int, ...], ...] = ()

  def __post_init__(self):
    k = self.rank
    if k < 1:
      _fail(f"Complex rank must be at least 1, got {k}")
    if len(self.first_low) != k or len(self.first_high) != k:
      _fail(f"Rank {k} complex needs {k} first-order invariants in each of g1 and g2")
    for x in self.first_low:
      if x.group.orders != self.table.g1.orders:
        _fail(f"first_low entries must lie in g1 = {self.table.g1}")
    for x in self.first_high:
      if x.group.orders != self.table.g2.orders:
        _fail(f"first_high entries must lie in g2 = {self.table.g2}")
    second = tuple(tuple(row) for row in self.second)
    if len(second) == k and k > 0 and not second[-1]:
      second = second[:-1]
    if len(second) != k - 1 or any(len(row) != k - 1 - i for i, row in enumerate(second)):
      _fail(f"second must be the strict upper triangle of a {k}x{k} array")
    for row in second:
      for bit in row:
        if bit not in (0, 1) or isinstance(bit, bool):
          _fail(f"second-order invariants take values 0 or 1, got {bit!r}")
    object.__setattr__(self, "first_low", tuple(self.first_low))
    object.__setattr__(self, "first_high", tuple(self.first_high))
    object.__setattr__(self, "second", second)

  @property
  def n(self) -> int:
    return self.table.n

  def m(self, i: int, j: int) -> int:
    """The bit m_ij (0-based, symmetric, zero on the diagonal)."""
    if i == j:
      return 0
    if i > j:
      i, j = j, i
    return self.second[i][j - i - 1]

  def coordinates(self) -> Tuple[int, ...]:
    """The coordinate vector used by ``enumerate_complexes``."""
    coords = []
    for x in self.first_low + self.first_high:
      coords.extend(x.coeffs)
    for row in self.second:
      coords.extend(row)
    return tuple(coords)

  def __str__(self):
    low = ", ".join(str(x) for x in self.first_low)
    high = ", ".join(str(x) for x in self.first_high)
    text = f"n={self.n} k={self.rank} low=[{low}] high=[{high}]"
    if self.rank > 1:
      bits = "".join(str(b) for row in self.second for b in row)
      text += f" m={bits}"
    return text


def _zero_second(k: int) -> Tuple[Tuple[int, ...], ...]:
  return tuple((0,) * (k - 1 - i) for i in range(k - 1))


def rank_one_complex(table: GroupTable, low: Sequence[int], high: Sequence[int]) -> ComplexSpec:
  """The rank 1 complex with ``p_1 alpha = low`` and ``p_2 alpha = high``.

  Examples:
      >>> X = rank_one_complex(builtin_table(4), [2], [1])
      >>> str(X)
      'n=4 k=1 low=[2w] high=[eta^2]'
  """
  return ComplexSpec(table, 1, (reduce(table.g1, low),), (reduce(table.g2, high),))


def product_sum(table: GroupTable, k: int) -> ComplexSpec:
  """The k-fold connected sum of S^{n-1} x S^n: every invariant is zero."""
  if k < 1:
    _fail(f"product_sum needs k >= 1, got {k}")
  return ComplexSpec(
    table, k,
    tuple(table.g1.zero() for _ in range(k)),
    tuple(table.g2.zero() for _ in range(k)),
    _zero_second(k))


def homotopy_connected_sum(X: ComplexSpec, Y: ComplexSpec) -> ComplexSpec:
  """The homotopy cofibre of the sum of the two attaching maps.

  Invariants concatenate blockwise; bits between the two blocks are zero.

  Raises:
      ValueError: If the complexes use different tables.
  """
  if X.table != Y.table:
    _fail(f"Connected sum needs a shared table, got n={X.n} and n={Y.n}")
  k = X.rank + Y.rank
  second = []
  for i in range(k - 1):
    row = []
    for j in range(i + 1, k):
      if j < X.rank:
        row.append(X.m(i, j))
      elif i >= X.rank:
        row.append(Y.m(i - X.rank, j - X.rank))
      else:
        row.append(0)
    second.append(tuple(row))
  return ComplexSpec(X.table, k, X.first_low + Y.first_low, X.first_high + Y.first_high, tuple(second))


def z_complex(k: int, table: GroupTable = None) -> ComplexSpec:
  """Z_k = Z_1 # W_1^{#(k-1)} at n = 7, where Z_1 carries p_1 alpha = nu^2."""
  table = table or builtin_table(7)
  if table.n != 7:
    _fail(f"z_complex is defined for n=7, got n={table.n}")
  if k < 1:
    _fail(f"z_complex needs k >= 1, got {k}")
  z1 = rank_one_complex(table, [1], [])
  result = z1
  for _ in range(k - 1):
    result = homotopy_connected_sum(result, product_sum(table, 1))
  return result


def _radices(table: GroupTable, k: int) -> List[int]:
  return list(table.g1.orders) * k + list(table.g2.orders) * k + [2] * (k * (k - 1) // 2)


def complex_from_coordinates(table: GroupTable, k: int, coords: Sequence[int]) -> ComplexSpec:
  """Inverse of ``ComplexSpec.coordinates``."""
  r1, r2 = table.g1.rank, table.g2.rank
  coords = list(coords)
  low = tuple(reduce(table.g1, coords[i * r1:(i + 1) * r1]) for i in range(k))
  offset = k * r1
  high = tuple(reduce(table.g2, coords[offset + i * r2:offset + (i + 1) * r2]) for i in range(k))
  offset += k * r2
  second = []
  for i in range(k - 1):
    width = k - 1 - i
    second.append(tuple(coords[offset:offset + width]))
    offset += width
  return ComplexSpec(table, k, low, high, tuple(second))


def count_complexes(table: GroupTable, k: int) -> int:
  """|g1|^k * |g2|^k * 2^(k(k-1)/2)."""
  if not (table.g1.is_finite() and table.g2.is_finite()):
    _fail("Cannot count complexes over a table with infinite groups")
  return (table.g1.size() * table.g2.size()) ** k * 2 ** (k * (k - 1) // 2)


def enumerate_complexes(table: GroupTable, k: int) -> Iterator[ComplexSpec]:
  """Every rank-k complex over ``table`` exactly once.

  The coordinate vector (see ``ComplexSpec.coordinates``) is counted as a
  little-endian mixed-radix number, so the first coordinate varies fastest and
  ``product_sum(table, k)`` comes first.

  Raises:
      ValueError: If g1 or g2 has an infinite factor.

  Examples:
      >>> sum(1 for _ in enumerate_complexes(builtin_table(5), 1))
      96
  """
  if not (table.g1.is_finite() and table.g2.is_finite()):
    _fail("Cannot enumerate complexes over a table with infinite groups")
  if k < 1:
    _fail(f"Complex rank must be at least 1, got {k}")
  radices = _radices(table, k)
  for reversed_coords in itertools.product(*(range(q) for q in reversed(radices))):
    yield complex_from_coordinates(table, k, tuple(reversed(reversed_coords)))


def _coefficient_rows(values, count: int, width: int, name: str) -> List[List[int]]:
  if not isinstance(values, list) or len(values) != count:
    _fail(f"{name} must list {count} coefficient vectors")
  rows = []
  for row in values:
    if not isinstance(row, list) or len(row) != width:
      _fail(f"{name} entries must have {width} coefficients, got {row!r}")
    if any(isinstance(x, bool) or not isinstance(x, int) for x in row):
      _fail(f"{name} coefficients must be integers, got {row!r}")
    rows.append(row)
  return rows


def parse_complex(doc: dict, table: GroupTable) -> ComplexSpec:
  """Builds a complex from its document form.

  Args:
      doc: ``{"n", "rank", "first_low", "first_high", "second"}``; coefficients
          are reduced into canonical form.
      table: The table the complex lives over; ``doc["n"]`` must match it.

  Returns:
      ComplexSpec: The validated complex.

  Raises:
      ValueError: On schema violations, wrong coefficient counts or non-bit
          second-order entries.
  """
  if not isinstance(doc, dict):
    _fail("Complex document must be a mapping")
  missing = [key for key in ("n", "rank", "first_low", "first_high") if key not in doc]
  if missing:
    _fail(f"Complex document is missing {', '.join(missing)}")
  if doc["n"] != table.n:
    _fail(f"Complex document has n={doc['n']} but the table has n={table.n}")
  k = doc["rank"]
  if isinstance(k, bool) or not isinstance(k, int) or k < 1:
    _fail(f"Complex rank must be a positive integer, got {k!r}")
  low = _coefficient_rows(doc["first_low"], k, table.g1.rank, "first_low")
  high = _coefficient_rows(doc["first_high"], k, table.g2.rank, "first_high")
  second = doc.get("second") or []
  if not isinstance(second, list) or any(not isinstance(row, list) for row in second):
    _fail("second must be a list of bit rows")
  return ComplexSpec(
    table, k,
    tuple(reduce(table.g1, row) for row in low),
    tuple(reduce(table.g2, row) for row in high),
    tuple(tuple(row) for row in second))


def serialize_complex(X: ComplexSpec) -> dict:
  """The document form of ``X``, accepted back by ``parse_complex``."""
  return {
    "n": X.n,
    "rank": X.rank,
    "first_low": [list(x.coeffs) for x in X.first_low],
    "first_high": [list(x.coeffs) for x in X.first_high],
    "second": [list(row) for row in X.second],
  }
