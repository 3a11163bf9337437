# src/qopolars/utils/setup_utils.py
import logging
import os
from dataclasses import dataclass
from typing import List, Optional, Tuple

from dotenv import load_dotenv

from qopolars.algebra.rational import Rational, rat
from qopolars.utils.errors import ConfigError

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


@dataclass(frozen=True)
class Settings:
    precision: Optional[Rational] = None
    log_level: str = "WARNING"
    substitutions: Optional[List[Tuple[int, ...]]] = None
    exact_resultant_max: int = 12


def _parse_precision(value: str) -> Rational:
    try:
        numerator, _, denominator = value.strip().partition("/")
        precision = rat(int(numerator), int(denominator or 1))
    except (ValueError, ZeroDivisionError):
        raise ConfigError(f"QO_PRECISION must be a rational such as 9 or 15/2, got {value!r}")
    if precision <= 0:
        raise ConfigError(f"QO_PRECISION must be positive, got {value!r}")
    return precision


def parse_substitutions(value: str) -> List[Tuple[int, ...]]:
    """'1:1, 1:2, 2:1' -> [(1, 1), (1, 2), (2, 1)]."""
    out = []
    for item in value.split(","):
        item = item.strip()
        if not item:
            continue
        try:
            r = tuple(int(x) for x in item.split(":"))
        except ValueError:
            raise ConfigError(f"QO_SUBSTITUTIONS entries look like 1:2, got {item!r}")
        if any(x <= 0 for x in r):
            raise ConfigError(f"QO_SUBSTITUTIONS weights must be positive, got {item!r}")
        out.append(r)
    if not out:
        raise ConfigError("QO_SUBSTITUTIONS is set but empty")
    return out


def setup_environment(load_env: bool = True) -> Settings:
    """
    Read the QO_* settings.

    Returns:
        Settings with the precision override, log level, substitution batch
        and the largest Sylvester size handled by the exact resultant oracle.
    """
    if load_env:
        load_dotenv()

    precision = os.getenv("QO_PRECISION")
    level = os.getenv("QO_LOG_LEVEL", "WARNING").strip().upper()
    if level not in LOG_LEVELS:
        raise ConfigError(f"QO_LOG_LEVEL must be one of {', '.join(LOG_LEVELS)}, got {level!r}")
    substitutions = os.getenv("QO_SUBSTITUTIONS")
    exact_max = os.getenv("QO_EXACT_RESULTANT_MAX", "12")
    try:
        exact_resultant_max = int(exact_max)
    except ValueError:
        raise ConfigError(f"QO_EXACT_RESULTANT_MAX must be an integer, got {exact_max!r}")
    if exact_resultant_max < 2:
        raise ConfigError(f"QO_EXACT_RESULTANT_MAX must be at least 2, got {exact_resultant_max}")

    settings = Settings(
        precision=_parse_precision(precision) if precision else None,
        log_level=level,
        substitutions=parse_substitutions(substitutions) if substitutions else None,
        exact_resultant_max=exact_resultant_max,
    )
    logging.getLogger(__name__).debug(f"settings: {settings}")
    return settings
