"""
Parsing of family config strings such as weibull(shape=2,scale=1)
"""

import re
from typing import Any, Dict, Union

from pydantic import TypeAdapter, ValidationError

from ..errors import ConfigError
from .families import DistributionBase, DistributionModel

_FAMILY_PATTERN = re.compile(r"^\s*([A-Za-z_]+)\s*\((.*)\)\s*$")

FAMILY_ALIASES = {
    "exp": "exp",
    "exponential": "exp",
    "weibull": "weibull",
    "lognormal": "lognormal",
    "normaltail": "normaltail",
    "normal": "normaltail",
}

FAMILY_SYNTAX = {
    "exp": "exp(rate=1.0)",
    "weibull": "weibull(shape=2,scale=1)",
    "lognormal": "lognormal(sigma=1)",
    "normaltail": "normaltail(sigma=1)",
}

_adapter = TypeAdapter(DistributionModel)


def parse_family(text: str, key: str = "family") -> DistributionBase:
    """
    Parse a family string into a distribution model

    Every family also accepts an optional x0=... parameter. Errors name the
    config key the string came from.
    """
    match = _FAMILY_PATTERN.match(text)
    if not match:
        raise ConfigError(key, f"cannot parse family string {text!r}")

    name = match.group(1).lower()
    family = FAMILY_ALIASES.get(name)
    if family is None:
        supported = ", ".join(sorted(FAMILY_SYNTAX))
        raise ConfigError(key, f"unknown family {name!r} (supported: {supported})")

    params: Dict[str, Any] = {"family": family}
    body = match.group(2).strip()
    if body:
        for item in body.split(","):
            if "=" not in item:
                raise ConfigError(key, f"expected name=value, got {item.strip()!r}")
            name, value = (part.strip() for part in item.split("=", 1))
            try:
                params[name] = float(value)
            except ValueError:
                raise ConfigError(key, f"{name} is not a number: {value!r}")

    return as_distribution(params, key)


def as_distribution(
    value: Union[str, Dict[str, Any], DistributionBase], key: str = "family"
) -> DistributionBase:
    """Accept a model, a family string or a field dictionary"""
    if isinstance(value, DistributionBase):
        return value
    if isinstance(value, str):
        return parse_family(value, key)
    try:
        return _adapter.validate_python(value)
    except ValidationError as e:
        first = e.errors()[0]
        where = ".".join(str(p) for p in first["loc"][1:]) or "family"
        raise ConfigError(key, f"{where}: {first['msg']}") from e
