"""JSON documents for instances and results, with exact rationals as strings."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .geometry import Arrangement, Instance, InvalidInstance
from .verify import Violation

MODES = ("restricted", "unrestricted", "bound-restricted", "bound-unrestricted",
         "genlower-restricted", "genlower-unrestricted", "dual", "verify", "elect")

_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")
_DECIMAL = re.compile(r"^-?\d*\.\d*([eE][-+]?\d+)?$|^-?\d+[eE][-+]?\d+$")


class DocumentError(ValueError):
    """Malformed or invalid input document."""


def parse_rational(value, what: str = "value") -> Fraction:
    if isinstance(value, bool):
        raise DocumentError(f"{what}: expected a rational string, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise DocumentError(f"{what}: decimal literal {value!r} rejected; write it as \"p/q\"")
    if not isinstance(value, str):
        raise DocumentError(f"{what}: expected a rational string, got {value!r}")
    s = value.strip()
    if _DECIMAL.match(s):
        raise DocumentError(f"{what}: decimal literal {value!r} rejected; write it as \"p/q\"")
    if not _RATIONAL.match(s):
        raise DocumentError(f"{what}: malformed rational {value!r}")
    if s.endswith("/0"):
        raise DocumentError(f"{what}: zero denominator in {value!r}")
    return Fraction(s)


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


def _load(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    return doc


def _rational_list(doc: dict, key: str) -> list[Fraction]:
    if key not in doc:
        raise DocumentError(f"missing field {key!r}")
    items = doc[key]
    if not isinstance(items, list):
        raise DocumentError(f"{key} must be a list")
    return [parse_rational(v, f"{key}[{n}]") for n, v in enumerate(items)]


def parse_instance_doc(text: str) -> tuple[Instance, Optional[str]]:
    doc = _load(text)
    cands = _rational_list(doc, "candidates")
    if "theta" not in doc:
        raise DocumentError("missing field 'theta'")
    theta = parse_rational(doc["theta"], "theta")
    try:
        inst = Instance(cands, theta)
    except InvalidInstance as exc:
        raise DocumentError(str(exc)) from None
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise DocumentError("name must be a string")
    return inst, name


def parse_instance(text: str) -> Instance:
    return parse_instance_doc(text)[0]


def emit_instance(inst: Instance, name: Optional[str] = None) -> str:
    doc = {"candidates": [format_rational(c) for c in inst.candidates],
           "theta": format_rational(inst.theta)}
    if name is not None:
        doc["name"] = name
    return json.dumps(doc, indent=2) + "\n"


def parse_arrangement(text: str) -> Arrangement:
    """A bare JSON list of positions, or an object with a ``proxies`` list."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from None
    if isinstance(doc, list):
        doc = {"proxies": doc}
    if not isinstance(doc, dict):
        raise DocumentError("arrangement must be a list or an object")
    ps = _rational_list(doc, "proxies")
    try:
        return Arrangement(ps)
    except ValueError as exc:
        raise DocumentError(str(exc)) from None


def parse_profile(text: str) -> list[Fraction]:
    """A bare JSON list of voter positions, or an object with a ``voters`` list."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from None
    if isinstance(doc, list):
        doc = {"voters": doc}
    if not isinstance(doc, dict):
        raise DocumentError("profile must be a list or an object")
    return _rational_list(doc, "voters")


@dataclass
class ResultDocument:
    mode: str
    theta: Fraction
    proxies: tuple[Fraction, ...] = ()
    count: Optional[int] = None
    status: str = "ok"
    violation: Optional[Violation] = None
    bounds: dict[str, Fraction] = field(default_factory=dict)
    name: Optional[str] = None
    distance: Optional[Fraction] = None

    def __post_init__(self):
        if self.mode not in MODES:
            raise DocumentError(f"unknown mode {self.mode!r}")
        self.proxies = tuple(Fraction(p) for p in self.proxies)
        if any(b <= a for a, b in zip(self.proxies, self.proxies[1:])):
            raise DocumentError("proxies must be strictly increasing")
        if self.count is None:
            self.count = len(self.proxies)


def _violation_doc(v: Violation) -> dict:
    return {"voter": format_rational(v.voter), "voter_top": v.voter_top,
            "proxy": format_rational(v.proxy), "proxy_top": v.proxy_top}


def emit_result(res: ResultDocument) -> str:
    doc = {"mode": res.mode, "count": res.count,
           "proxies": [format_rational(p) for p in res.proxies],
           "theta": format_rational(res.theta), "status": res.status}
    if res.name is not None:
        doc["name"] = res.name
    if res.violation is not None:
        doc["violation"] = _violation_doc(res.violation)
    if res.bounds:
        doc["bounds"] = {k: format_rational(v) for k, v in res.bounds.items()}
    if res.distance is not None:
        doc["distance"] = format_rational(res.distance)
    return json.dumps(doc, indent=2) + "\n"


def parse_result(text: str) -> ResultDocument:
    doc = _load(text)
    for key in ("mode", "count", "proxies", "theta", "status"):
        if key not in doc:
            raise DocumentError(f"missing field {key!r}")
    violation = None
    if doc.get("violation") is not None:
        v = doc["violation"]
        violation = Violation(parse_rational(v["voter"], "violation.voter"), int(v["voter_top"]),
                              parse_rational(v["proxy"], "violation.proxy"), int(v["proxy_top"]))
    bounds = {k: parse_rational(v, f"bounds.{k}") for k, v in doc.get("bounds", {}).items()}
    distance = doc.get("distance")
    return ResultDocument(
        mode=doc["mode"], theta=parse_rational(doc["theta"], "theta"),
        proxies=tuple(_rational_list(doc, "proxies")), count=int(doc["count"]),
        status=doc["status"], violation=violation, bounds=bounds, name=doc.get("name"),
        distance=None if distance is None else parse_rational(distance, "distance"))
