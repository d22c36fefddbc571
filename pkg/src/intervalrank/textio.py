"""Matrix text format and JSON-ready encodings of results.

Grammar: rows are separated by newlines or ``;``; cells by whitespace or
commas. A cell is a rational (``3``, ``-7/2``, ``0.25``) or an interval
``[a,b]``, ``[a,inf)``, ``(-inf,b]``, ``(-inf,inf)``. ``#`` starts a comment and
a line ``name: ...`` names the matrix. Bounded ends must use square brackets;
the bracket next to an infinite end is not checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .core import GIMatrix, GInterval, RMatrix
from .detc import PgDiagonal
from .genfull import (
    AllConditionsHold,
    Condition1Violation,
    Condition2Violation,
    Condition3Violation,
    HalfBoundedTuple,
    SingularWitness,
    Verdict,
)

__all__ = [
    "ParseError",
    "MatrixDocument",
    "parse_document",
    "parse_matrix",
    "format_matrix",
    "encode",
    "encode_verdict",
    "decode_verdict",
]


class ParseError(ValueError):
    def __init__(self, msg: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line = line
        self.col = col


@dataclass(frozen=True)
class MatrixDocument:
    matrix: GIMatrix
    name: str | None = None


_POS_INF = {"inf", "+inf", "infinity", "+infinity", "∞", "+∞"}
_NEG_INF = {"-inf", "-infinity", "-∞"}


def _number(tok: str, line: int, col: int) -> Fraction:
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"malformed number {tok!r}", line, col) from None


def _cell(tok: str, line: int, col: int) -> GInterval:
    if tok[0] not in "[(":
        return GInterval.constant(_number(tok, line, col))
    if tok[-1] not in "])":
        raise ParseError(f"unterminated interval {tok!r}", line, col)
    parts = tok[1:-1].split(",")
    if len(parts) != 2:
        raise ParseError(f"interval needs two ends: {tok!r}", line, col)
    a, b = (s.strip().lower() for s in parts)
    lo_inf, hi_inf = a in _NEG_INF, b in _POS_INF
    if a in _POS_INF or b in _NEG_INF:
        raise ParseError(f"empty interval {tok!r}", line, col)
    if not lo_inf and tok[0] != "[":
        raise ParseError(f"open end at {a} is not supported", line, col)
    if not hi_inf and tok[-1] != "]":
        raise ParseError(f"open end at {b} is not supported", line, col)
    if lo_inf and hi_inf:
        return GInterval.unbounded()
    if lo_inf:
        return GInterval.right_bounded(_number(b, line, col))
    if hi_inf:
        return GInterval.left_bounded(_number(a, line, col))
    lo, hi = _number(a, line, col), _number(b, line, col)
    if lo > hi:
        raise ParseError(f"empty interval [{lo},{hi}]", line, col)
    return GInterval.bounded(lo, hi)


def parse_document(text: str) -> MatrixDocument:
    rows: list[list[GInterval]] = []
    row_pos: list[tuple[int, int]] = []
    name = None
    cur: list[GInterval] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if line.strip().lower().startswith("name:"):
            name = line.split(":", 1)[1].strip() or None
            continue
        k, n = 0, len(line)
        while k < n:
            ch = line[k]
            if ch in " \t,\r":
                k += 1
                continue
            if ch == ";":
                if cur:
                    rows.append(cur)
                    row_pos.append((lineno, k + 1))
                cur = []
                k += 1
                continue
            start = k
            if ch in "[(":
                end = min((x for x in (line.find("]", k), line.find(")", k)) if x >= 0), default=-1)
                if end < 0:
                    raise ParseError("unterminated interval", lineno, k + 1)
                k = end + 1
            else:
                while k < n and line[k] not in " \t,;\r[(":
                    k += 1
            cur.append(_cell(line[start:k].replace(" ", ""), lineno, start + 1))
        if cur:
            rows.append(cur)
            row_pos.append((lineno, 1))
            cur = []
    if not rows:
        raise ParseError("no matrix rows found", 1, 1)
    width = len(rows[0])
    for r, (ln, col) in zip(rows, row_pos):
        if len(r) != width:
            raise ParseError(f"row has {len(r)} cells, expected {width}", ln, col)
    return MatrixDocument(GIMatrix.of(rows), name)


def parse_matrix(text: str) -> GIMatrix:
    return parse_document(text).matrix


def format_matrix(mu: GIMatrix, name: str | None = None) -> str:
    head = f"name: {name}\n" if name else ""
    return head + str(mu) + "\n"


# JSON-ready encodings; rationals are strings "n/d"


def encode(obj: Any) -> Any:
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, RMatrix):
        return [[str(x) for x in r] for r in obj.rows]
    if isinstance(obj, GIMatrix):
        return [[str(e) for e in r] for r in obj.entries]
    if isinstance(obj, PgDiagonal):
        return [list(c) for c in obj.cells]
    if isinstance(obj, HalfBoundedTuple):
        return {"cells": [list(c) for c in obj.cells], "right": list(obj.right)}
    if isinstance(obj, (list, tuple)):
        return [encode(x) for x in obj]
    return obj


def _encode_certificate(cert) -> dict:
    out: dict[str, Any] = {"kind": cert.kind}
    if isinstance(cert, Condition1Violation):
        out.update(cell=list(cert.cell), diagonal=encode(cert.diagonal), detc=encode(cert.detc_value))
    elif isinstance(cert, Condition2Violation):
        out.update(
            left=encode(cert.left), vertex=encode(cert.vertex),
            det_left=encode(cert.det_left), det_vertex=encode(cert.det_vertex),
        )
    elif isinstance(cert, Condition3Violation):
        out.update(vertex=encode(cert.vertex), tuple=encode(cert.tuple), value=encode(cert.value))
    elif isinstance(cert, SingularWitness):
        out.update(matrix=encode(cert.matrix))
    return out


def encode_verdict(v: Verdict) -> dict:
    return {
        "decision": v.decision,
        "certificate": _encode_certificate(v.certificate),
        "witness": encode(v.witness) if v.witness is not None else None,
    }


def _rmatrix(rows) -> RMatrix:
    return RMatrix.of([[Fraction(x) for x in r] for r in rows])


def _gimatrix(rows) -> GIMatrix:
    return GIMatrix.of([[_cell(str(x).replace(" ", ""), 0, 0) for x in r] for r in rows])


def decode_verdict(data: dict) -> Verdict:
    """Inverse of :func:`encode_verdict`; raises ``ValueError`` on malformed input."""
    try:
        cert_d = data["certificate"]
        kind = cert_d["kind"]
        if kind == "Condition1Violation":
            d = cert_d["detc"]
            cert = Condition1Violation(
                tuple(cert_d["cell"]),
                PgDiagonal(tuple(tuple(c) for c in cert_d["diagonal"])),
                None if d is None else Fraction(d),
            )
        elif kind == "Condition2Violation":
            cert = Condition2Violation(
                _rmatrix(cert_d["left"]), _rmatrix(cert_d["vertex"]),
                Fraction(cert_d["det_left"]), Fraction(cert_d["det_vertex"]),
            )
        elif kind == "Condition3Violation":
            t = cert_d["tuple"]
            cert = Condition3Violation(
                _gimatrix(cert_d["vertex"]),
                HalfBoundedTuple(tuple(tuple(c) for c in t["cells"]), tuple(bool(r) for r in t["right"])),
                Fraction(cert_d["value"]),
            )
        elif kind == "SingularWitness":
            cert = SingularWitness(_rmatrix(cert_d["matrix"]))
        elif kind == "AllConditionsHold":
            cert = AllConditionsHold()
        else:
            raise ValueError(f"unknown certificate kind {kind!r}")
        w = data.get("witness")
        return Verdict(data["decision"] == "FullRank", cert, _rmatrix(w) if w is not None else None)
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed verdict: {exc}") from None
