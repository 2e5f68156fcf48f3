"""Reading and writing single real vectors as CSV or raw binary.

CSV holds one value per line (shortest round-trip repr, LF endings). The raw
binary layout is the 8-byte magic ``FLEGVEC1``, a little-endian uint64 count,
then ``count`` little-endian binary64 values.
"""
from __future__ import annotations

import io
import struct
import sys

import numpy as np

from .errors import VectorFileError

__all__ = ["MAGIC", "encode_binary", "decode_binary", "encode_csv", "decode_csv",
           "read_vector", "write_vector"]

MAGIC = b"FLEGVEC1"
_HEADER = struct.Struct("<8sQ")


def encode_binary(values) -> bytes:
    values = np.ascontiguousarray(values, dtype="<f8").ravel()
    return _HEADER.pack(MAGIC, values.size) + values.tobytes()


def decode_binary(data: bytes) -> np.ndarray:
    if len(data) < _HEADER.size:
        raise VectorFileError("binary vector file is truncated before the header ends")
    magic, count = _HEADER.unpack_from(data)
    if magic != MAGIC:
        raise VectorFileError(f"bad magic {magic!r}, expected {MAGIC!r}")
    expected = _HEADER.size + 8 * count
    if len(data) != expected:
        raise VectorFileError(f"header declares {count} values, payload holds {(len(data) - _HEADER.size) / 8:g}")
    return np.frombuffer(data, dtype="<f8", offset=_HEADER.size).astype(float)


def encode_csv(values) -> bytes:
    return "".join(f"{float(v)!r}\n" for v in np.asarray(values, dtype=float).ravel()).encode("ascii")


def decode_csv(data: bytes) -> np.ndarray:
    try:
        text = data.decode("ascii")
    except UnicodeDecodeError as exc:
        raise VectorFileError("CSV vector file is not ASCII text") from exc
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        try:
            out.append(float(line))
        except ValueError:
            raise VectorFileError(f"line {lineno}: cannot parse {line!r} as a number") from None
    return np.array(out, dtype=float)


def _read_bytes(source) -> bytes:
    if source in (None, "-"):
        return sys.stdin.buffer.read()
    if isinstance(source, (bytes, bytearray)):
        return bytes(source)
    if isinstance(source, io.IOBase):
        data = source.read()
        return data.encode() if isinstance(data, str) else data
    with open(source, "rb") as fh:
        return fh.read()


def read_vector(source, fmt: str | None = None) -> np.ndarray:
    """Read a vector from a path, ``'-'`` (stdin) or file object.

    With ``fmt=None`` the format is sniffed from the binary magic.
    """
    data = _read_bytes(source)
    if fmt is None:
        fmt = "bin" if data.startswith(MAGIC) else "csv"
    if fmt == "bin":
        return decode_binary(data)
    if fmt == "csv":
        return decode_csv(data)
    raise VectorFileError(f"unknown vector format {fmt!r}")


def write_vector(target, values, fmt: str = "csv") -> None:
    """Write ``values`` to a path, ``'-'`` (stdout) or binary file object."""
    if fmt == "bin":
        data = encode_binary(values)
    elif fmt == "csv":
        data = encode_csv(values)
    else:
        raise VectorFileError(f"unknown vector format {fmt!r}")
    if target in (None, "-"):
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    elif hasattr(target, "write"):
        target.write(data)
    else:
        with open(target, "wb") as fh:
            fh.write(data)
