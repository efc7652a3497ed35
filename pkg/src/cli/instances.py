"""
Reading JSON instance files and building families from command-line flags.
"""
import json
from contextlib import contextmanager
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Mapping, Optional

from bialgebra import Bialgebra, Element, element_from_json, make_bialgebra, parse_element
from global_variables import INSTANCE_DIR, BadParameter, CoalgebraError, ParseError
from scalars import RingSpec, Scalar, parse_ring, parse_scalar


@contextmanager
def schema_errors(what: str):
    """Turns lookups and conversions that fail on malformed input into ParseError."""
    try:
        yield
    except CoalgebraError:
        raise
    except (ValueError, KeyError, TypeError, AttributeError) as error:
        raise ParseError(f"malformed {what}: {type(error).__name__}: {error}") from error


@dataclass
class Instance:
    ring: RingSpec
    bialgebra: Bialgebra
    elements: Dict[str, Element] = field(default_factory=dict)
    raw: Dict = field(default_factory=dict)

    def element(self, text: str) -> Element:
        """A named element of the file, or an expression over the family."""
        if text in self.elements:
            return self.elements[text]
        return parse_element(self.bialgebra, text)

    def element_list(self, key: str) -> List[Element]:
        values = self.raw.get(key)
        if not isinstance(values, list):
            raise ParseError(f"instance has no list {key!r}")
        with schema_errors(f"list {key!r}"):
            return [self.element(v) if isinstance(v, str) else element_from_json(self.bialgebra, v) for v in values]

    def scalar_list(self, key: str) -> List[Scalar]:
        values = self.raw.get(key)
        if not isinstance(values, list):
            raise ParseError(f"instance has no list {key!r}")
        with schema_errors(f"list {key!r}"):
            return [parse_scalar(str(v), self.ring) for v in values]


def resolve_path(path) -> Path:
    """Paths that do not exist are looked up in the shipped instance directory."""
    path = Path(path)
    if not path.exists() and (INSTANCE_DIR / path).exists():
        return INSTANCE_DIR / path
    return path


def instance_from_dict(data: Mapping) -> Instance:
    """
    Schema: {"ring": "ZZ/4", "bialgebra": {"family": ..., "params": {...},
    "truncation": D}, "elements": {"name": "1 + 2*x" or [{"basis", "coeff"}, ...]}}
    """
    if not isinstance(data, Mapping) or "ring" not in data or "bialgebra" not in data:
        raise ParseError("an instance needs 'ring' and 'bialgebra' entries")
    with schema_errors("instance"):
        ring = parse_ring(data["ring"])
        spec = data["bialgebra"]
        if not isinstance(spec, Mapping) or "family" not in spec:
            raise ParseError("the bialgebra entry needs a 'family'")
        B = make_bialgebra(spec["family"], ring, spec.get("params"), spec.get("truncation"))
        elements = {name: element_from_json(B, value) for name, value in data.get("elements", {}).items()}
    return Instance(ring, B, elements, dict(data))


def load_instance(path) -> Instance:
    path = resolve_path(path)
    try:
        with open(path, "r") as instance_file:
            data = json.load(instance_file)
    except json.JSONDecodeError as error:
        raise ParseError(f"{path} is not valid JSON: {error}") from error
    return instance_from_dict(data)


def family_from_flags(
    ring: RingSpec,
    family: Optional[str] = None,
    q: Optional[str] = None,
    p: Optional[int] = None,
    alphabet: Optional[str] = None,
    truncation: Optional[int] = None,
) -> Bialgebra:
    """
    Without an explicit family: --p selects FrobeniusQuotient, --alphabet
    TensorConc, --q InfiltrationQ, and k[x] with x primitive otherwise.
    """
    if family is None:
        if p is not None:
            family = "FrobeniusQuotient"
        elif alphabet is not None:
            family = "TensorConc"
        elif q is not None:
            family = "InfiltrationQ"
        else:
            family = "PolynomialPrimitive"
    params = {}
    if q is not None:
        params["q"] = q
    if p is not None:
        params["p"] = p
    if alphabet is not None:
        params["alphabet"] = alphabet
    if family == "MonoidDiag":
        raise BadParameter("MonoidDiag families are read from instance files")
    with schema_errors("flags"):
        return make_bialgebra(family, ring, params, truncation)
