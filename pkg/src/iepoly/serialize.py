"""Reading and writing coefficient vectors.

Every format carries the same versioned header: the triple, the degree,
the engine that produced the vector, and whether only the lower half is
stored.  CSV and text are line-oriented; the binary form is the header
followed by little-endian signed 64-bit coefficients.
"""

from __future__ import annotations

import json
import struct
from typing import IO

import numpy as np

from .engine import CoefficientVector
from .errors import PersistenceError
from .represent import Triple

FORMAT_NAME = "iepoly-coeffs"
FORMAT_VERSION = 1

_MAGIC = b"IEPC"
_BIN_HEADER = struct.Struct("<4sH6q8s")  # magic, version, p,q,r,degree,count,half, engine


def _expected_length(degree: int, half: bool) -> int:
    return degree // 2 + 1 if half else degree + 1


def _check_length(vec_len: int, degree: int, half: bool) -> None:
    if vec_len != _expected_length(degree, half):
        raise PersistenceError(
            f"coefficient count {vec_len} does not match degree {degree} (half={half})"
        )


def header_dict(vec: CoefficientVector) -> dict:
    return {
        "format": FORMAT_NAME,
        "version": FORMAT_VERSION,
        "p": vec.triple.p,
        "q": vec.triple.q,
        "r": vec.triple.r,
        "degree": vec.degree,
        "engine": vec.engine,
        "half": vec.half,
    }


def write_json(vec: CoefficientVector, fp: IO[str]) -> None:
    obj = header_dict(vec)
    obj["coeffs"] = [int(v) for v in vec.coeffs]
    json.dump(obj, fp, separators=(",", ":"))
    fp.write("\n")


def read_json(fp: IO[str]) -> CoefficientVector:
    try:
        obj = json.load(fp)
    except json.JSONDecodeError as exc:
        raise PersistenceError(f"not a coefficient record: {exc}") from exc
    try:
        if obj["format"] != FORMAT_NAME or obj["version"] != FORMAT_VERSION:
            raise PersistenceError(f"unsupported record {obj.get('format')!r}")
        t = Triple(obj["p"], obj["q"], obj["r"])
        coeffs = np.asarray(obj["coeffs"], dtype=np.int64)
        vec = CoefficientVector(
            triple=t,
            degree=obj["degree"],
            coeffs=coeffs,
            engine=obj["engine"],
            half=bool(obj["half"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise PersistenceError(f"malformed JSON coefficient record: {exc}") from exc
    _check_length(len(coeffs), vec.degree, vec.half)
    return vec


def _header_line(vec: CoefficientVector) -> str:
    h = header_dict(vec)
    parts = " ".join(f"{k}={h[k]}" for k in ("p", "q", "r", "degree", "engine", "half"))
    return f"# {FORMAT_NAME} v{FORMAT_VERSION} {parts}"


def _parse_header_line(line: str) -> dict:
    tokens = line.lstrip("# ").split()
    if len(tokens) < 2 or tokens[0] != FORMAT_NAME or tokens[1] != f"v{FORMAT_VERSION}":
        raise PersistenceError(f"unrecognized header line {line!r}")
    fields = dict(tok.split("=", 1) for tok in tokens[2:])
    try:
        return {
            "p": int(fields["p"]),
            "q": int(fields["q"]),
            "r": int(fields["r"]),
            "degree": int(fields["degree"]),
            "engine": fields["engine"],
            "half": fields["half"] == "True",
        }
    except KeyError as exc:
        raise PersistenceError(f"header misses field {exc}") from exc


def write_csv(vec: CoefficientVector, fp: IO[str]) -> None:
    fp.write(_header_line(vec) + "\n")
    fp.write("index,coefficient\n")
    for m, v in enumerate(vec.coeffs):
        fp.write(f"{m},{int(v)}\n")


def read_csv(fp: IO[str]) -> CoefficientVector:
    header = _parse_header_line(fp.readline().rstrip("\n"))
    column_line = fp.readline().rstrip("\n")
    if column_line != "index,coefficient":
        raise PersistenceError(f"unexpected CSV column header {column_line!r}")
    values = []
    for lineno, line in enumerate(fp):
        line = line.strip()
        if not line:
            continue
        idx_s, _, val_s = line.partition(",")
        try:
            idx, val = int(idx_s), int(val_s)
        except ValueError as exc:
            raise PersistenceError(f"bad CSV row {line!r}") from exc
        if idx != lineno:
            raise PersistenceError(f"CSV rows out of order at index {idx}")
        values.append(val)
    coeffs = np.asarray(values, dtype=np.int64)
    _check_length(len(coeffs), header["degree"], header["half"])
    return CoefficientVector(
        triple=Triple(header["p"], header["q"], header["r"]),
        degree=header["degree"],
        coeffs=coeffs,
        engine=header["engine"],
        half=header["half"],
    )


def write_text(vec: CoefficientVector, fp: IO[str]) -> None:
    """Human-oriented listing: header line, then 'index coefficient' rows."""
    fp.write(_header_line(vec) + "\n")
    for m, v in enumerate(vec.coeffs):
        fp.write(f"{m} {int(v)}\n")


def write_binary(vec: CoefficientVector, fp: IO[bytes]) -> None:
    engine = vec.engine.encode("ascii")[:8].ljust(8, b"\0")
    fp.write(
        _BIN_HEADER.pack(
            _MAGIC,
            FORMAT_VERSION,
            vec.triple.p,
            vec.triple.q,
            vec.triple.r,
            vec.degree,
            len(vec.coeffs),
            int(vec.half),
            engine,
        )
    )
    fp.write(np.ascontiguousarray(vec.coeffs, dtype="<i8").tobytes())


def read_binary(fp: IO[bytes]) -> CoefficientVector:
    raw = fp.read(_BIN_HEADER.size)
    if len(raw) != _BIN_HEADER.size:
        raise PersistenceError("truncated binary header")
    magic, version, p, q, r, deg, count, half, engine = _BIN_HEADER.unpack(raw)
    if magic != _MAGIC or version != FORMAT_VERSION:
        raise PersistenceError(f"unrecognized binary record (magic={magic!r})")
    payload = fp.read(8 * count)
    if len(payload) != 8 * count:
        raise PersistenceError("truncated coefficient payload")
    coeffs = np.frombuffer(payload, dtype="<i8").astype(np.int64)
    _check_length(count, deg, bool(half))
    return CoefficientVector(
        triple=Triple(p, q, r),
        degree=deg,
        coeffs=coeffs,
        engine=engine.rstrip(b"\0").decode("ascii"),
        half=bool(half),
    )
