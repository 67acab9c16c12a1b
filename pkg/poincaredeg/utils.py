"""Utility Functions for Supporting Other Modules"""
import itertools
import json
import math
from typing import Iterator, List, Tuple

import yaml
from sympy import divisors

import logging

logging.basicConfig()
logger = logging.getLogger(__name__)


def load_document(path):
  """Reads a JSON or YAML document from disk.

  YAML is a superset of JSON, so a single ``yaml.safe_load`` covers both.

  Args:
      path: Path of the document.

  Returns:
      The parsed document (usually a dict).

  Raises:
      ValueError: If the file cannot be parsed.
      FileNotFoundError: If the file does not exist.
  """
  with open(path) as f:
    try:
      return yaml.safe_load(f)
    except yaml.YAMLError as e:
      message = f"Could not parse {path}: {e}"
      logger.error(message)
      raise ValueError(message)


def dump_document(doc) -> str:
  """Canonical JSON text: sorted keys, 2-space indent."""
  return json.dumps(doc, indent=2, sort_keys=True)


def write_document(path, doc):
  """Writes ``doc`` as canonical JSON and returns the path."""
  with open(path, "w") as f:
    f.write(dump_document(doc))
    f.write("\n")
  return path


def lcm_all(*values: int) -> int:
  """lcm of positive integers, 1 for no arguments."""
  return math.lcm(1, *values)


def signed_divisors(d: int) -> List[int]:
  """Divisors of ``d`` of both signs, ordered 1, -1, 2, -2, ...

  Examples:
      >>> signed_divisors(-6)
      [1, -1, 2, -2, 3, -3, 6, -6]
  """
  if d == 0:
    message = "signed_divisors is undefined for 0"
    logger.error(message)
    raise ValueError(message)
  result = []
  for a in divisors(abs(d)):
    result.extend([int(a), -int(a)])
  return result


def shell(size: int, radius: int, low: int = None, high: int = None) -> Iterator[Tuple[int, ...]]:
  """Integer vectors of max-norm exactly ``radius``, optionally clipped to ``[low, high]``.

  Iterating radius 0, 1, 2, ... visits every vector of a box exactly once,
  smallest first. Within a shell the order is fixed, so searches built on it
  are deterministic.

  Examples:
      >>> list(shell(1, 1))
      [(1,), (-1,)]
      >>> list(shell(2, 1, low=-1, high=0))
      [(-1, -1), (-1, 0), (0, -1)]
  """
  low = -radius if low is None else max(low, -radius)
  high = radius if high is None else min(high, radius)
  if radius == 0:
    if low <= 0 <= high:
      yield (0,) * size
    return
  heads = [x for x in (radius, -radius) if low <= x <= high]
  inner = range(max(low, -radius + 1), min(high, radius - 1) + 1)
  outer = range(low, high + 1)
  for p in range(size):
    for prefix in itertools.product(inner, repeat=p):
      for head in heads:
        for suffix in itertools.product(outer, repeat=size - p - 1):
          yield prefix + (head,) + suffix
