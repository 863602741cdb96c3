"""Embedded reference Schur expansions of the interval polynomials."""
from __future__ import annotations

import hashlib
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Iterable

from .partition import Partition, parse_partition
from .schur import SchurExpansion

DATA_FILE = "reference_expansions.txt"
# sha256 of the data file; update together with the file
DATA_SHA256 = "041e22df5ed0b9dfed4765d70934417205a1f0ede838178c1a6dcd3dda3558de"


@dataclass(frozen=True)
class ReferenceEntry:
    shape: Partition
    expansion: SchurExpansion
    uncertain: bool = False


def read_reference_text() -> str:
    return resources.files("tridyck.data").joinpath(DATA_FILE).read_text(encoding="utf-8")


def checksum(text: str | None = None) -> str:
    if text is None:
        text = read_reference_text()
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def parse_reference_text(text: str) -> dict[Partition, ReferenceEntry]:
    out: dict[Partition, ReferenceEntry] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        uncertain = line.startswith("?")
        if uncertain:
            line = line[1:]
        try:
            head, body = line.split(":", 1)
        except ValueError as exc:
            raise ValueError(f"line {lineno}: missing ':'") from exc
        shape = parse_partition(head)
        coeffs: dict[Partition, int] = {}
        for tok in body.split("|"):
            tok = tok.strip()
            mult = 1
            if "*" in tok:
                tok, k = tok.split("*")
                mult = int(k)
            nu = parse_partition(tok)
            coeffs[nu] = coeffs.get(nu, 0) + mult
        if shape in out:
            raise ValueError(f"line {lineno}: duplicate shape {shape}")
        out[shape] = ReferenceEntry(shape, SchurExpansion(coeffs), uncertain)
    return out


@lru_cache(maxsize=1)
def reference_table() -> dict[Partition, ReferenceEntry]:
    return parse_reference_text(read_reference_text())


def reference_expansion(shape: Iterable[int]) -> ReferenceEntry | None:
    return reference_table().get(Partition(shape))


def format_reference_line(entry: ReferenceEntry) -> str:
    terms = []
    for nu, c in entry.expansion.coefficients.items():
        tok = ",".join(str(x) for x in nu)
        terms.append(tok if c == 1 else f"{tok}*{c}")
    head = ("?" if entry.uncertain else "") + ",".join(str(x) for x in entry.shape)
    return f"{head} : " + " | ".join(terms)
