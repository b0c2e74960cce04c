import json
import random

import pytest

from nilrev.campaign import random_star
from nilrev.certdoc import CertificateDocument
from nilrev.errors import ParseError
from nilrev.nilmat import parse_matrix
from nilrev.reverser import reverse_group_star, reverse_star


def test_roundtrip(ring):
    rng = random.Random(f"doc:{ring.value}")
    for _ in range(10):
        X = random_star(rng.randint(1, 6), ring, rng)
        doc = CertificateDocument.emit(reverse_star(X), seed=rng.randint(0, 99))
        assert doc.verified
        back = CertificateDocument.from_json(doc.to_json())
        assert back == doc
        assert back.to_json() == doc.to_json()


def test_group_level_roundtrip():
    doc = CertificateDocument.emit(reverse_group_star(parse_matrix("1,2;0,1")))
    data = json.loads(doc.to_json())
    assert data["level"] == "group" and data["g"] == "1,0;0,-1" and data["seed"] is None
    assert CertificateDocument.from_dict(data) == doc


def test_schema_keys():
    doc = CertificateDocument.emit(reverse_star(parse_matrix("0,1;0,0")))
    assert sorted(doc.to_dict()) == sorted(
        ["schema_version", "ring", "n", "group", "level", "input", "g", "involution", "produced_by", "verified", "seed"]
    )
    assert doc.to_dict()["schema_version"] == "1"


@pytest.mark.parametrize(
    "mutate",
    [
        lambda d: d.pop("g"),
        lambda d: d.update(schema_version="2"),
        lambda d: d.update(ring="oct"),
        lambda d: d.update(n=0),
        lambda d: d.update(n=True),
        lambda d: d.update(involution="yes"),
        lambda d: d.update(g="1,0;0"),
        lambda d: d.update(seed="7"),
        lambda d: d.update(produced_by="magic"),
    ],
)
def test_invalid_documents(mutate):
    data = CertificateDocument.emit(reverse_star(parse_matrix("0,1;0,0"))).to_dict()
    mutate(data)
    with pytest.raises(ParseError):
        CertificateDocument.from_dict(data)


def test_truncated_json():
    text = CertificateDocument.emit(reverse_star(parse_matrix("0,1;0,0"))).to_json()
    with pytest.raises(ParseError) as info:
        CertificateDocument.from_json(text[: len(text) // 2])
    assert info.value.line is not None
    with pytest.raises(ParseError):
        CertificateDocument.from_json("[]")
