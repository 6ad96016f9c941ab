import re
from typing import TYPE_CHECKING, Any, Callable, Dict, Tuple

from typing_extensions import Literal

from .utils.errors import ParseError

if TYPE_CHECKING:
    # Please keep SignatureFamilyHint updated with the keys of the SIGNATURE_FAMILIES dict
    SignatureFamilyHint = Literal["growing", "regular", "explicit"]


def validate_int(name: str, minimum: int) -> Callable[[str], int]:
    def inner(text: str) -> int:
        if not re.fullmatch(r"-?\d+", text.strip()):
            raise ParseError(f"Expecting an integer for '{name}' but got {text!r}")
        value = int(text)
        if value < minimum:
            raise ParseError(f"'{name}' must be at least {minimum}, got {value}")
        return value

    return inner


def validate_rank_list(text: str) -> Tuple[int, ...]:
    ranks = tuple(validate_int("ranks", 1)(tok) for tok in text.split(",") if tok.strip())
    if not ranks:
        raise ParseError("'ranks' must list at least one rank")
    return ranks


SIGNATURE_FAMILIES: Dict["SignatureFamilyHint", Dict[str, Any]] = {
    "growing": {
        "required": {"p": validate_int("p", 2)},
        "optional": {"shift": validate_int("shift", 0)},
        "self_similar": False,
    },
    "regular": {
        "required": {"p": validate_int("p", 3), "r": validate_int("r", 1)},
        "optional": {},
        "self_similar": True,
    },
    "explicit": {
        "required": {"p": validate_int("p", 2), "ranks": validate_rank_list},
        "optional": {},
        "self_similar": False,
    },
}

WREATH_FAMILY: Dict[str, Any] = {
    "required": {"p": validate_int("p", 2), "ranks": validate_rank_list},
    "optional": {},
}


def split_family_text(text: str) -> Tuple[str, Dict[str, str]]:
    """Split ``family:key=value,key=value`` text; a value may itself contain commas
    (``ranks=1,2,4``), so bare tokens extend the previous value.
    """
    family, sep, body = text.strip().partition(":")
    if not sep:
        raise ParseError(f"Expecting 'family:key=value,...' but got {text!r}")
    params: Dict[str, str] = {}
    last = None
    for token in filter(None, (tok.strip() for tok in body.split(","))):
        if "=" in token:
            key, value = (part.strip() for part in token.split("=", 1))
            if key in params:
                raise ParseError(f"Parameter '{key}' given twice in {text!r}")
            params[key] = value
            last = key
        elif last is not None:
            params[last] += "," + token
        else:
            raise ParseError(f"Dangling value {token!r} in {text!r}")
    return family.strip(), params


def parse_family_params(
    text: str, families: Dict[str, Dict[str, Any]]
) -> Tuple[str, Dict[str, Any]]:
    """Validate ``family:key=value`` text against a registry such as ``SIGNATURE_FAMILIES``."""
    family, raw = split_family_text(text)
    if family not in families:
        raise ParseError(f"Unknown family {family!r}; expecting one of {sorted(families)}")
    spec = families[family]
    missing = set(spec["required"]) - set(raw)
    if missing:
        raise ParseError(f"Missing parameter(s) {sorted(missing)} for family {family!r}")
    unknown = set(raw) - set(spec["required"]) - set(spec["optional"])
    if unknown:
        raise ParseError(f"Unknown parameter(s) {sorted(unknown)} for family {family!r}")
    validators = {**spec["required"], **spec["optional"]}
    return family, {key: validators[key](value) for key, value in raw.items()}
