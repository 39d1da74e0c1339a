"""Cayley-table cache: a small versioned binary container per group.

Layout: magic, version, then a header carrying the family id, parameter
tuple, m and order, followed by the row-major table as fixed-width
little-endian integers.  Files are keyed by a hash of the presentation's
canonical form, so stale parameter edits can never alias a cached table.
"""

from __future__ import annotations

import hashlib
import os
import struct
from pathlib import Path

import numpy as np

from .engine import GroupInstance, PcPresentation, materialize

MAGIC = b"SCGC"
VERSION = 1

ENV_VAR = "STRINGC_CACHE_DIR"


class CacheError(Exception):
    pass


def cache_key(pres: PcPresentation) -> str:
    return hashlib.sha256(pres.canonical_key().encode()).hexdigest()


def default_dir() -> Path | None:
    path = os.environ.get(ENV_VAR)
    return Path(path) if path else None


def _cell_width(order: int) -> int:
    return 2 if order <= 0xFFFF else 4


def save_instance(path, g: GroupInstance, family: str = "", n: int = 0,
                  params=()) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    m = g.presentation.m if g.presentation else 0
    width = _cell_width(g.order)
    fam = family.encode()
    header = struct.pack("<4sHH", MAGIC, VERSION, len(fam)) + fam
    header += struct.pack("<H", len(params))
    header += b"".join(struct.pack("<i", int(v)) for v in params)
    header += struct.pack("<HIB", m, g.order, width)
    dtype = "<u2" if width == 2 else "<u4"
    body = np.ascontiguousarray(g.table, dtype=dtype).tobytes()
    tmp = path.with_suffix(".tmp")
    tmp.write_bytes(header + body)
    tmp.replace(path)


def load_table(path):
    """(family, params, m, order, table) from a cache file."""
    data = Path(path).read_bytes()
    magic, version, fam_len = struct.unpack_from("<4sHH", data, 0)
    if magic != MAGIC:
        raise CacheError("bad magic in %s" % path)
    if version != VERSION:
        raise CacheError("unsupported cache version %d" % version)
    off = struct.calcsize("<4sHH")
    family = data[off:off + fam_len].decode()
    off += fam_len
    (nparams,) = struct.unpack_from("<H", data, off)
    off += 2
    params = struct.unpack_from("<%di" % nparams, data, off)
    off += 4 * nparams
    m, order, width = struct.unpack_from("<HIB", data, off)
    off += struct.calcsize("<HIB")
    dtype = "<u2" if width == 2 else "<u4"
    table = np.frombuffer(data, dtype=dtype, offset=off).astype(np.int32)
    if table.size != order * order:
        raise CacheError("truncated table in %s" % path)
    return family, params, m, order, table.reshape(order, order)


def materialize_cached(pres: PcPresentation, cache_dir=None, family: str = "",
                       n: int = 0, params=()) -> GroupInstance:
    """Materialize through the cache: hit loads the table, miss builds and
    stores it.  Results are identical either way (tested), only cheaper."""
    cache_dir = Path(cache_dir) if cache_dir else default_dir()
    if cache_dir is None:
        return materialize(pres)
    path = cache_dir / ("%s.scgc" % cache_key(pres))
    if path.exists():
        _, _, _, order, table = load_table(path)
        gens = {}
        mult = 1
        for gname, rel in zip(pres.generators, pres.relative_orders):
            gens[gname] = mult % order
            mult *= rel
        return GroupInstance(pres.label, table, gens, presentation=pres,
                             radices=pres.relative_orders)
    g = materialize(pres)
    save_instance(path, g, family=family, n=n, params=params)
    return g
