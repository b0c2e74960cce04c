"""JSON documents for reversal certificates.

Schema version "1"::

    {
      "schema_version": "1",
      "ring": "rat" | "gauss" | "quat",
      "n": <int>,
      "group": "unipotent" | "signed_unipotent",
      "level": "algebra" | "group",
      "input": "<matrix text>",
      "g": "<matrix text>",
      "involution": <bool>,
      "produced_by": "induction" | "parity" | "oracle" | "closed_form",
      "verified": <bool>,
      "seed": <int or null>
    }

Matrix text uses the ``a,b;c,d`` format of :mod:`nilrev.nilmat`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .certificate import GroupTag, Level, Method, ReversalCertificate, check_certificate
from .errors import ParseError
from .nilmat import format_matrix, parse_matrix
from .scalar import ScalarRing

SCHEMA_VERSION = "1"
_KEYS = (
    "schema_version",
    "ring",
    "n",
    "group",
    "level",
    "input",
    "g",
    "involution",
    "produced_by",
    "verified",
    "seed",
)


@dataclass(frozen=True)
class CertificateDocument:
    certificate: ReversalCertificate
    verified: bool
    seed: int | None = None

    @classmethod
    def emit(cls, certificate, seed=None):
        """Wrap a certificate, stamping ``verified`` by re-checking it now."""
        return cls(certificate, check_certificate(certificate), seed)

    def to_dict(self):
        c = self.certificate
        return {
            "schema_version": SCHEMA_VERSION,
            "ring": c.ring.value,
            "n": c.n,
            "group": c.group_tag.value,
            "level": c.level.value,
            "input": format_matrix(c.matrix),
            "g": format_matrix(c.g),
            "involution": c.involution,
            "produced_by": c.produced_by.value,
            "verified": self.verified,
            "seed": self.seed,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_dict(cls, data):
        if not isinstance(data, dict):
            raise ParseError("certificate document must be a JSON object")
        missing = [k for k in _KEYS if k not in data]
        if missing:
            raise ParseError(f"certificate document is missing {', '.join(missing)}")
        if data["schema_version"] != SCHEMA_VERSION:
            raise ParseError(f"unsupported schema_version {data['schema_version']!r}")
        try:
            ring = ScalarRing(data["ring"])
            group = GroupTag(data["group"])
            level = Level(data["level"])
            method = Method(data["produced_by"])
        except ValueError as exc:
            raise ParseError(str(exc)) from None
        for key in ("involution", "verified"):
            if not isinstance(data[key], bool):
                raise ParseError(f"{key} must be true or false")
        n = data["n"]
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise ParseError("n must be a positive integer")
        seed = data["seed"]
        if seed is not None and (not isinstance(seed, int) or isinstance(seed, bool)):
            raise ParseError("seed must be an integer or null")
        for key in ("input", "g"):
            if not isinstance(data[key], str):
                raise ParseError(f"{key} must be a matrix string")
        try:
            matrix = parse_matrix(data["input"], ring, n)
            g = parse_matrix(data["g"], ring, n)
        except ParseError as exc:
            raise ParseError(f"bad matrix in certificate: {exc.message}") from None
        cert = ReversalCertificate(ring, n, group, level, matrix, g, data["involution"], method)
        return cls(cert, data["verified"], seed)

    @classmethod
    def from_json(cls, text):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, exc.lineno, exc.colno) from None
        return cls.from_dict(data)
