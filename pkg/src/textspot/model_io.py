"""On-disk formats: dense tensors, alphabets and word annotations.

Tensor files (``.e2et``) have a 17-byte fixed header::

    0-3   magic b"E2ET"
    4     version (1)
    5     dtype (1 = float32 little-endian)
    6     ndim (1..8)
    7-16  reserved, zero

followed by ``ndim`` little-endian uint32 dims and the row-major payload.
"""
from __future__ import annotations

import math
import struct
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    BadMagic,
    DuplicateSymbol,
    EmptyAlphabet,
    FormatError,
    IoFailure,
    MalformedLine,
    TruncatedPayload,
    UnknownScript,
    UnsupportedVersion,
    ValidationError,
)
from .script_id import ScriptClass

MAGIC = b"E2ET"
VERSION = 1
DTYPE_F32 = 1
HEADER_SIZE = 17
MAX_NDIM = 8

MAX_SYMBOLS = 7500
DONT_CARE = "###"

Quad = tuple[tuple[float, float], ...]


# -- tensors ----------------------------------------------------------------

def _tensor_header(dims: Sequence[int]) -> bytes:
    return MAGIC + bytes([VERSION, DTYPE_F32, len(dims)]) + bytes(10)


def write_tensor(t, path) -> None:
    """Write an array as a float32 ``.e2et`` file."""
    arr = np.asarray(t, dtype=np.float64)
    dims = arr.shape
    if len(dims) == 0 or len(dims) > MAX_NDIM:
        raise ValidationError(f"tensor must have 1..{MAX_NDIM} dims, got {dims}")
    if any(d < 1 for d in dims):
        raise ValidationError(f"every dim must be >= 1, got {dims}")
    blob = (
        _tensor_header(dims)
        + struct.pack(f"<{len(dims)}I", *dims)
        + np.ascontiguousarray(arr, dtype="<f4").tobytes()
    )
    try:
        Path(path).write_bytes(blob)
    except OSError as exc:
        raise IoFailure(f"{path}: {exc}") from exc


def read_tensor(path) -> np.ndarray:
    """Read a ``.e2et`` file into a float64 array with the stored shape."""
    try:
        blob = Path(path).read_bytes()
    except OSError as exc:
        raise IoFailure(f"{path}: {exc}") from exc
    if len(blob) < HEADER_SIZE or blob[:4] != MAGIC:
        raise BadMagic(f"{path}: not a tensor file")
    version, dtype, ndim = blob[4], blob[5], blob[6]
    if version != VERSION:
        raise UnsupportedVersion(f"{path}: version {version}")
    if dtype != DTYPE_F32:
        raise UnsupportedVersion(f"{path}: dtype code {dtype}")
    if not 1 <= ndim <= MAX_NDIM:
        raise FormatError(f"{path}: ndim {ndim} out of range")
    offset = HEADER_SIZE + 4 * ndim
    if len(blob) < offset:
        raise TruncatedPayload(f"{path}: header ends early")
    dims = struct.unpack_from(f"<{ndim}I", blob, HEADER_SIZE)
    if any(d < 1 for d in dims):
        raise FormatError(f"{path}: zero dim in {dims}")
    count = math.prod(dims)
    need = offset + 4 * count
    if len(blob) < need:
        raise TruncatedPayload(f"{path}: payload has {(len(blob) - offset) // 4} of {count} values")
    if len(blob) > need:
        raise FormatError(f"{path}: {len(blob) - need} trailing bytes")
    data = np.frombuffer(blob, dtype="<f4", count=count, offset=offset)
    return data.astype(np.float64).reshape(dims)


# -- alphabets --------------------------------------------------------------

@dataclass(frozen=True)
class Alphabet:
    """Symbol table for CTC logits. ``symbols[0]`` is the blank placeholder."""

    symbols: tuple[str, ...]
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.symbols) < 2:
            raise EmptyAlphabet("alphabet needs a blank and at least one symbol")
        if len(self.symbols) > MAX_SYMBOLS + 1:
            raise ValidationError(
                f"alphabet has {len(self.symbols) - 1} symbols, maximum is {MAX_SYMBOLS}"
            )
        index = {}
        for i, s in enumerate(self.symbols[1:], start=1):
            if s in index:
                raise DuplicateSymbol(f"symbol {s!r} at indices {index[s]} and {i}")
            index[s] = i
        object.__setattr__(self, "_index", index)

    @classmethod
    def from_symbols(cls, symbols: Iterable[str]) -> "Alphabet":
        return cls(("",) + tuple(symbols))

    def __len__(self) -> int:
        return len(self.symbols)

    def __contains__(self, ch: str) -> bool:
        return ch in self._index

    def index(self, ch: str) -> int:
        return self._index[ch]

    def encode(self, s: str) -> list[int]:
        return [self._index[c] for c in s]

    def decode(self, indices: Iterable[int]) -> str:
        return "".join(self.symbols[i] for i in indices)


def read_alphabet(path) -> Alphabet:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise IoFailure(f"{path}: {exc}") from exc
    except UnicodeDecodeError as exc:
        raise FormatError(f"{path}: {exc}") from exc
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    symbols = [ln[:-1] if ln.endswith("\r") else ln for ln in lines[1:]]
    for n, s in enumerate(symbols, start=2):
        if len(s) != 1:
            raise MalformedLine(path, n, f"expected one codepoint, got {s!r}")
    return Alphabet(("",) + tuple(symbols))


def write_alphabet(alphabet: Alphabet, path) -> None:
    body = "<blank>\n" + "".join(s + "\n" for s in alphabet.symbols[1:])
    try:
        Path(path).write_text(body, encoding="utf-8", newline="\n")
    except OSError as exc:
        raise IoFailure(f"{path}: {exc}") from exc


# -- annotations ------------------------------------------------------------

SCRIPT_ALIASES: dict[str, ScriptClass | None] = {
    "Arabic": ScriptClass.ARABIC,
    "Latin": ScriptClass.LATIN,
    "Chinese": ScriptClass.CJK,
    "Japanese": ScriptClass.CJK,
    "Korean": ScriptClass.HANGUL,
    "Bangla": ScriptClass.BENGALI,
    "Symbols": ScriptClass.SYMBOL,
    "Mixed": None,
    "None": None,
    "Unknown": None,
}
SCRIPT_ALIASES.update({c.name: c for c in ScriptClass})


@dataclass(frozen=True)
class WordAnnotation:
    """One word region: quad listed clockwise from the reading origin."""

    quad: Quad
    transcription: str
    script: ScriptClass | None = None
    dont_care: bool = False
    chars: tuple[Quad, ...] = ()

    @classmethod
    def make(cls, quad, transcription, script=None, chars=()):
        q = tuple((float(x), float(y)) for x, y in np.asarray(quad, dtype=float).reshape(4, 2))
        return cls(q, transcription, script, transcription == DONT_CARE, tuple(chars))


def signed_area(quad) -> float:
    """Shoelace area; positive when clockwise on screen (y axis down)."""
    q = np.asarray(quad, dtype=float)
    x, y = q[:, 0], q[:, 1]
    return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(np.roll(x, -1), y))


def _is_convex(quad) -> bool:
    q = np.asarray(quad, dtype=float)
    e = np.roll(q, -1, axis=0) - q
    cross = e[:, 0] * np.roll(e[:, 1], -1) - e[:, 1] * np.roll(e[:, 0], -1)
    return bool(np.all(cross > 0) or np.all(cross < 0))


def _fmt(v: float) -> str:
    return str(int(v)) if float(v).is_integer() else repr(float(v))


def format_annotation(a: WordAnnotation) -> str:
    coords = ",".join(_fmt(v) for pt in a.quad for v in pt)
    script = a.script.name if a.script is not None else "Unknown"
    return f"{coords},{script},{a.transcription}"


def parse_annotation(line: str, path="<string>", lineno: int = 1, strict: bool = True) -> WordAnnotation:
    parts = line.split(",", 9)
    if len(parts) < 10:
        raise MalformedLine(path, lineno, f"expected 10 fields, got {len(parts)}")
    try:
        coords = [float(v) for v in parts[:8]]
    except ValueError:
        raise MalformedLine(path, lineno, "non-numeric coordinate") from None
    if not all(math.isfinite(v) for v in coords):
        raise MalformedLine(path, lineno, "non-finite coordinate")
    token = parts[8].strip()
    if token not in SCRIPT_ALIASES:
        raise UnknownScript(path, lineno, f"unknown script {token!r}")
    text = parts[9]
    pts = [(coords[i], coords[i + 1]) for i in range(0, 8, 2)]
    if signed_area(pts) < 0:
        pts = [pts[0], pts[3], pts[2], pts[1]]
    ann = WordAnnotation.make(pts, text, SCRIPT_ALIASES[token])
    if strict and not ann.dont_care and not _is_convex(ann.quad):
        raise MalformedLine(path, lineno, "quad is not convex with positive area")
    return ann


def read_annotations(path, strict: bool = True) -> list[WordAnnotation]:
    try:
        text = Path(path).read_text(encoding="utf-8-sig")
    except OSError as exc:
        raise IoFailure(f"{path}: {exc}") from exc
    except UnicodeDecodeError as exc:
        raise FormatError(f"{path}: {exc}") from exc
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    out = []
    for n, line in enumerate(lines, start=1):
        if line.endswith("\r"):
            line = line[:-1]
        out.append(parse_annotation(line, path, n, strict))
    return out


def write_annotations(annotations: Iterable[WordAnnotation], path) -> None:
    body = "".join(format_annotation(a) + "\n" for a in annotations)
    try:
        Path(path).write_text(body, encoding="utf-8", newline="\n")
    except OSError as exc:
        raise IoFailure(f"{path}: {exc}") from exc
