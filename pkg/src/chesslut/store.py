"""Versioned binary persistence for the attack tables.

Building the tables is a startup cost that can be skipped entirely by
saving them once and loading the file afterwards.  The format is fixed
width, little endian:

    offset 0   magic, 8 bytes (``SLIDELUT``)
    offset 8   format version, u32
    offset 12  four tables in order rank, file, diag ne, diag nw; each is
               a u64 triple count followed by count * 24 bytes of
               (piece key, occupancy key, attack value) u64 triples
    ...        masks: rank, file, diag ne, diag nw, 64 u64 words each
    trailer    crc32 of everything before it, u32

Loads are verified against magic, version and checksum and fail with an
error naming the byte offset of the problem.
"""

from __future__ import annotations

import struct
import zlib
from pathlib import Path
from typing import BinaryIO

from .tables import AttackTable, AttackTables, MaskTables

MAGIC = b"SLIDELUT"
VERSION = 1

_TABLE_FIELDS = ("rank_attacks", "file_attacks", "diag_attacks_ne", "diag_attacks_nw")
_MASK_FIELDS = ("rank", "file", "diag_ne", "diag_nw")


class TableLoadError(ValueError):
    """Raised when a saved table stream cannot be decoded."""


def _pack_table(table: AttackTable) -> bytes:
    chunks = [struct.pack("<Q", sum(len(entries) for entries in table.values()))]
    for piece_key, entries in table.items():
        for occ_key, value in entries.items():
            chunks.append(struct.pack("<QQQ", piece_key, occ_key, value))
    return b"".join(chunks)


def save_tables(tables: AttackTables, sink: BinaryIO | str | Path) -> None:
    """Write *tables* to a binary stream or path."""
    if isinstance(sink, (str, Path)):
        with open(sink, "wb") as handle:
            save_tables(tables, handle)
        return

    payload = [MAGIC, struct.pack("<I", VERSION)]
    for field in _TABLE_FIELDS:
        payload.append(_pack_table(getattr(tables, field)))
    for field in _MASK_FIELDS:
        masks = getattr(tables.masks, field)
        payload.append(struct.pack("<64Q", *masks))
    body = b"".join(payload)
    sink.write(body)
    sink.write(struct.pack("<I", zlib.crc32(body)))


class _Reader:
    def __init__(self, stream: BinaryIO) -> None:
        self.stream = stream
        self.offset = 0
        self.crc = 0

    def take(self, count: int) -> bytes:
        data = self.stream.read(count)
        if len(data) < count:
            raise TableLoadError(f"truncated stream at offset {self.offset + len(data)}")
        self.crc = zlib.crc32(data, self.crc)
        self.offset += count
        return data

    def u32(self) -> int:
        return struct.unpack("<I", self.take(4))[0]

    def u64(self) -> int:
        return struct.unpack("<Q", self.take(8))[0]


def load_tables(source: BinaryIO | str | Path) -> AttackTables:
    """Read tables produced by save_tables; bit-exact round trip."""
    if isinstance(source, (str, Path)):
        with open(source, "rb") as handle:
            return load_tables(handle)

    reader = _Reader(source)
    magic = reader.take(8)
    if magic != MAGIC:
        raise TableLoadError(f"version mismatch at offset 0: unrecognized magic {magic!r}")
    version = reader.u32()
    if version != VERSION:
        raise TableLoadError(f"version mismatch at offset 8: got {version}, expected {VERSION}")

    loaded: dict[str, AttackTable] = {}
    for field in _TABLE_FIELDS:
        count = reader.u64()
        table: AttackTable = {}
        for _ in range(count):
            piece_key, occ_key, value = struct.unpack("<QQQ", reader.take(24))
            table.setdefault(piece_key, {})[occ_key] = value
        loaded[field] = table

    mask_arrays = {
        field: struct.unpack("<64Q", reader.take(64 * 8)) for field in _MASK_FIELDS
    }

    expected_crc = reader.crc
    checksum_offset = reader.offset
    stored = struct.unpack("<I", reader.take(4))[0]
    if stored != expected_crc:
        raise TableLoadError(
            f"checksum failure at offset {checksum_offset}: "
            f"stored {stored:#010x}, computed {expected_crc:#010x}"
        )

    return AttackTables(
        rank_attacks=loaded["rank_attacks"],
        file_attacks=loaded["file_attacks"],
        diag_attacks_ne=loaded["diag_attacks_ne"],
        diag_attacks_nw=loaded["diag_attacks_nw"],
        masks=MaskTables(**mask_arrays),
    )
