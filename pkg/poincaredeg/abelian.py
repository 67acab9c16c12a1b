"""Finitely generated abelian groups presented as direct sums of cyclic groups.

The groups here are fixed presentations ``Z/q_1 + ... + Z/q_r`` where an order
of ``0`` stands for an infinite cyclic factor. Elements are kept in canonical
form (coefficients in ``[0, q)`` for finite factors) so equality is a plain
comparison of coefficient tuples.
"""

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple

import logging

logging.basicConfig()
logger = logging.getLogger(__name__)

INFINITE = "infinite"


@dataclass(frozen=True)
class AbGroup:
  """A direct sum of cyclic groups.

  Attributes:
      orders: order of each cyclic factor, 0 for an infinite factor.
      generator_names: labels for the factor generators (documentation only).
  """
  orders: Tuple[int, ...] = ()
  generator_names: Tuple[str, ...] = field(default=(), compare=False)

  def __post_init__(self):
    orders = tuple(int(q) for q in self.orders)
    if any(q < 0 for q in orders):
      message = f"Cyclic factor orders must be non-negative, got {list(orders)}"
      logger.error(message)
      raise ValueError(message)
    names = tuple(self.generator_names)
    if names and len(names) != len(orders):
      message = f"Expected {len(orders)} generator names, got {len(names)}"
      logger.error(message)
      raise ValueError(message)
    object.__setattr__(self, "orders", orders)
    object.__setattr__(self, "generator_names", names)

  @property
  def rank(self) -> int:
    """Number of cyclic factors in the presentation."""
    return len(self.orders)

  def is_finite(self) -> bool:
    return all(q > 0 for q in self.orders)

  def exponent(self) -> int:
    """Least common multiple of the factor orders.

    Returns 1 for the trivial group and 0 when an infinite factor is present.
    """
    if not self.is_finite():
      return 0
    return math.lcm(1, *self.orders)

  def size(self) -> Optional[int]:
    """Number of elements, or None for an infinite group."""
    if not self.is_finite():
      return None
    return math.prod(self.orders)

  def zero(self) -> "GroupElement":
    return GroupElement(self, (0,) * self.rank)

  def generator(self, index: int) -> "GroupElement":
    coeffs = [0] * self.rank
    coeffs[index] = 1
    return reduce(self, coeffs)

  def element(self, *coeffs: int) -> "GroupElement":
    """Shorthand for ``reduce(self, coeffs)``."""
    return reduce(self, coeffs)

  def reduced_modulo(self, q: int) -> "AbGroup":
    """The quotient ``G / qG`` in the same presentation.

    Each factor ``Z/o`` becomes ``Z/gcd(o, q)`` (``Z/q`` for infinite factors).
    """
    return AbGroup(tuple(math.gcd(o, q) for o in self.orders), self.generator_names)

  def __str__(self):
    if not self.orders:
      return "0"
    return " + ".join("Z" if q == 0 else f"Z/{q}" for q in self.orders)


@dataclass(frozen=True)
class GroupElement:
  """An element of an AbGroup in canonical form.

  Use ``reduce`` (or ``AbGroup.element``) to build elements from raw integers;
  the constructor assumes its coefficients are already canonical.
  """
  group: AbGroup
  coeffs: Tuple[int, ...]

  def is_zero(self) -> bool:
    return not any(self.coeffs)

  def __add__(self, other: "GroupElement") -> "GroupElement":
    return add(self, other)

  def __neg__(self) -> "GroupElement":
    return scale(-1, self)

  def __sub__(self, other: "GroupElement") -> "GroupElement":
    return add(self, scale(-1, other))

  def __rmul__(self, c: int) -> "GroupElement":
    return scale(c, self)

  def __str__(self):
    names = self.group.generator_names or tuple(f"g{i + 1}" for i in range(self.group.rank))
    terms = [f"{c}{name}" if c != 1 else name for c, name in zip(self.coeffs, names) if c]
    return " + ".join(terms) if terms else "0"


@dataclass(frozen=True)
class GroupHom:
  """A homomorphism between cyclic-sum groups given by an integer matrix.

  ``matrix[r][j]`` is the coefficient on codomain factor ``r`` of the image of
  domain generator ``j``; column ``j`` is the image of generator ``j``.
  """
  domain: AbGroup
  codomain: AbGroup
  matrix: Tuple[Tuple[int, ...], ...]

  def __post_init__(self):
    matrix = tuple(tuple(int(x) for x in row) for row in self.matrix)
    if self.codomain.rank == 0 and matrix == ():
      matrix = ()
    elif len(matrix) != self.codomain.rank or any(len(row) != self.domain.rank for row in matrix):
      message = (f"Homomorphism matrix must be {self.codomain.rank}x{self.domain.rank} "
                 f"(codomain rows, domain columns)")
      logger.error(message)
      raise ValueError(message)
    object.__setattr__(self, "matrix", matrix)

  def column(self, j: int) -> Tuple[int, ...]:
    return tuple(row[j] for row in self.matrix)

  def is_zero(self) -> bool:
    return all(apply_hom(self, self.domain.generator(j)).is_zero() for j in range(self.domain.rank))

  def image_exponent(self) -> int:
    """Exponent of the image subgroup: the lcm of the orders of the generator images.

    Returns 0 when some generator has infinite image order.
    """
    result = 1
    for j in range(self.domain.rank):
      order = element_order(reduce(self.codomain, self.column(j)))
      if order == INFINITE:
        return 0
      result = math.lcm(result, order)
    return result

  def __call__(self, a: GroupElement) -> GroupElement:
    return apply_hom(self, a)


def reduce(g: AbGroup, raw: Sequence[int]) -> GroupElement:
  """Brings a raw coefficient list into canonical form in ``g``.

  Args:
      g: The group the element lives in.
      raw: One integer per cyclic factor; any integers are accepted.

  Returns:
      GroupElement: The canonical element congruent to ``raw`` factor-wise.

  Raises:
      ValueError: If ``raw`` does not have one entry per factor.

  Examples:
      >>> reduce(AbGroup((12,)), [19]).coeffs
      (7,)
      >>> reduce(AbGroup((2, 24)), [3, -1]).coeffs
      (1, 23)
  """
  raw = tuple(raw)
  if len(raw) != g.rank:
    message = f"Expected {g.rank} coefficients for {g}, got {len(raw)}"
    logger.error(message)
    raise ValueError(message)
  return GroupElement(g, tuple(int(x) % q if q else int(x) for x, q in zip(raw, g.orders)))


def _same_group(a: GroupElement, b: GroupElement):
  if a.group.orders != b.group.orders:
    message = f"Group mismatch: {a.group} vs {b.group}"
    logger.error(message)
    raise ValueError(message)


def add(a: GroupElement, b: GroupElement) -> GroupElement:
  """Canonical sum of two elements of the same group.

  Raises:
      ValueError: If the elements live in different groups.
  """
  _same_group(a, b)
  return reduce(a.group, [x + y for x, y in zip(a.coeffs, b.coeffs)])


def scale(c: int, a: GroupElement) -> GroupElement:
  """Canonical form of ``c * a``; ``c`` may be negative."""
  return reduce(a.group, [c * x for x in a.coeffs])


def element_order(a: GroupElement):
  """Least ``t >= 1`` with ``t * a == 0``.

  Returns:
      int or str: The order, or ``INFINITE`` when a nonzero coefficient sits on
      an infinite factor.

  Examples:
      >>> element_order(reduce(AbGroup((12,)), [6]))
      2
  """
  order = 1
  for x, q in zip(a.coeffs, a.group.orders):
    if x == 0:
      continue
    if q == 0:
      return INFINITE
    order = math.lcm(order, q // math.gcd(x, q))
  return order


def apply_hom(h: GroupHom, a: GroupElement) -> GroupElement:
  """Image of ``a`` under ``h`` in canonical form.

  Raises:
      ValueError: If ``a`` does not belong to ``h.domain``.
  """
  if a.group.orders != h.domain.orders:
    message = f"Group mismatch: element of {a.group} given to a map from {h.domain}"
    logger.error(message)
    raise ValueError(message)
  raw = [sum(row[j] * a.coeffs[j] for j in range(h.domain.rank)) for row in h.matrix]
  return reduce(h.codomain, raw)


def validate_hom(h: GroupHom) -> Optional[str]:
  """Checks that ``h`` is well defined.

  For every finite domain factor of order ``q``, ``q`` times the image column
  must vanish in the codomain.

  Returns:
      None when the map is well defined, otherwise a description naming the
      offending factor.

  Examples:
      >>> validate_hom(GroupHom(AbGroup((2,)), AbGroup((3,)), ((1,),)))
      'factor 0: 2 * image [1] is not zero in Z/3'
  """
  for j, q in enumerate(h.domain.orders):
    if q == 0:
      continue
    image = h.column(j)
    if not reduce(h.codomain, [q * x for x in image]).is_zero():
      return f"factor {j}: {q} * image {list(image)} is not zero in {h.codomain}"
  return None
