"""Search parameters for the degree solver and where they come from"""

import os
from dataclasses import dataclass, replace
from typing import Optional, Tuple

from dotenv import load_dotenv

from poincaredeg.utils import load_document, write_document

import logging

logging.basicConfig()
logger = logging.getLogger(__name__)


CONFIG_VARIABLES = [
    'POINCAREDEG_MODULI',               # comma separated, e.g. "2,4,12"
    'POINCAREDEG_BOX',
    'POINCAREDEG_MAX_RESIDUE_CLASSES',
    'POINCAREDEG_MAX_MODULUS',
    'POINCAREDEG_JOBS',
]

DEFAULT_MAX_RESIDUE_CLASSES = 10 ** 6
DEFAULT_MAX_MODULUS = 48


@dataclass(frozen=True)
class SolverParams:
    """Bounds and certificate moduli for ``check_degree`` and friends.

    Attributes:
        moduli: Moduli tried for infeasibility certificates; None means the
            table default ``(2, 4, M_A, lcm(M_A, M_C, M_D, 4))``.
        box: Bound B on |A entries| in the general search; None means max(|d|, M_A).
        max_residue_classes: Largest residue space searched for one modulus.
        max_modulus: Largest modulus ``infer_progressions`` tries.
        jobs: Worker processes used by ``degree_set``.
    """
    moduli: Optional[Tuple[int, ...]] = None
    box: Optional[int] = None
    max_residue_classes: int = DEFAULT_MAX_RESIDUE_CLASSES
    max_modulus: int = DEFAULT_MAX_MODULUS
    jobs: int = 1

    def __post_init__(self):
        if self.moduli is not None:
            moduli = tuple(int(q) for q in self.moduli)
            if not moduli or any(q <= 0 for q in moduli):
                _fail(f"Certificate moduli must be positive integers, got {list(moduli)}")
            object.__setattr__(self, "moduli", moduli)
        if self.box is not None and self.box < 0:
            _fail(f"Search box must be non-negative, got {self.box}")
        if self.max_residue_classes < 1:
            _fail(f"max_residue_classes must be positive, got {self.max_residue_classes}")
        if self.max_modulus < 1:
            _fail(f"max_modulus must be positive, got {self.max_modulus}")
        if self.jobs < 1:
            _fail(f"jobs must be at least 1, got {self.jobs}")

    def with_overrides(self, **overrides) -> "SolverParams":
        """Copy with every non-None override applied."""
        return replace(self, **{key: value for key, value in overrides.items() if value is not None})

    def to_document(self) -> dict:
        return {
            "moduli": list(self.moduli) if self.moduli is not None else None,
            "box": self.box,
            "max_residue_classes": self.max_residue_classes,
            "max_modulus": self.max_modulus,
            "jobs": self.jobs,
        }


def _fail(message: str):
    logger.error(message)
    raise ValueError(message)


def parse_moduli(text) -> Optional[Tuple[int, ...]]:
    """Reads a modulus list from "2,4,12" or a list of integers.

    Examples:
        >>> parse_moduli("2, 4,12")
        (2, 4, 12)
    """
    if text is None or text == "":
        return None
    if isinstance(text, (list, tuple)):
        values = text
    else:
        values = [part for part in str(text).split(",") if part.strip()]
    try:
        return tuple(int(v) for v in values)
    except ValueError:
        _fail(f"Moduli must be integers, got {text!r}")


def _from_mapping(values: dict) -> dict:
    fields = {}
    if values.get("moduli") not in (None, ""):
        fields["moduli"] = parse_moduli(values["moduli"])
    for key in ("box", "max_residue_classes", "max_modulus", "jobs"):
        if values.get(key) not in (None, ""):
            try:
                fields[key] = int(values[key])
            except (TypeError, ValueError):
                _fail(f"Configuration value {key} must be an integer, got {values[key]!r}")
    return fields


def solver_config(moduli=None, box: int = None, max_residue_classes: int = None,
                  max_modulus: int = None, jobs: int = None, config_file: str = None) -> SolverParams:
    """Assembles solver parameters.

    Explicit arguments win. Remaining fields come from ``config_file`` (JSON or
    YAML) when one is given, otherwise from the ``POINCAREDEG_*`` environment
    variables (a ``.env`` file is loaded first). Anything still unset keeps
    its default.

    Args:
        moduli: Certificate moduli, as a list or "2,4,12".
        box: Search bound for A entries.
        max_residue_classes: Cap on the residue space per modulus.
        max_modulus: Cap for progression inference.
        jobs: Worker processes for degree sweeps.
        config_file: Path to a configuration document.

    Returns:
        SolverParams: The validated parameters.

    Raises:
        ValueError: On malformed or out-of-range values.

    Examples:
        >>> solver_config(box=5).box
        5
        >>> params = solver_config(config_file="poincaredeg_config.json")
    """
    explicit = {
        "moduli": parse_moduli(moduli),
        "box": box,
        "max_residue_classes": max_residue_classes,
        "max_modulus": max_modulus,
        "jobs": jobs,
    }

    if config_file:
        logger.info("Setting solver config from file...")
        sourced = _from_mapping(load_document(config_file) or {})
    else:
        load_dotenv()
        logger.info("Solver config file not provided, reading environment variables...")
        env = {}
        for var in CONFIG_VARIABLES:
            value = os.environ.get(var)
            if value:
                env[var[len("POINCAREDEG_"):].lower()] = value
        sourced = _from_mapping(env)

    return SolverParams(**sourced).with_overrides(**explicit)


def create_config_file(name="poincaredeg_config.json"):
    """Writes an unfilled configuration template.

    Args:
        name: Filename for the template.

    Returns:
        str: Path to the created file.
    """
    write_document(name, SolverParams().to_document())
    return name
