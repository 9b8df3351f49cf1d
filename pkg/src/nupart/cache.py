"""Plain-text sequence cache.

Format::

    nupart-cache v1 n_max=<N>
    0,1,1,0
    1,1,0,0
    ...

one ``n,p,nu,gamma`` row per n in decimal.  Files are written to a temporary
sibling and renamed into place.
"""
from __future__ import annotations

import os
import re
import tempfile
from pathlib import Path
from typing import Optional, Union

from nupart.seqcore import SeqTable, TableError

VERSION = "v1"
HEADER_RE = re.compile(r"^nupart-cache (\S+) n_max=(\d+)$")
ENV_VAR = "NUPART_CACHE"

PathLike = Union[str, os.PathLike]


class CacheError(Exception):
    """Cache file is unreadable or has the wrong format/version."""


class CacheIntegrityError(CacheError):
    """Cache parses but its rows break the table invariants."""

    def __init__(self, message: str, n: int):
        super().__init__(message)
        self.n = n


def default_cache_path() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or Path.home() / ".cache"
    return Path(base) / "nupart" / "table-v1.txt"


def header(n_max: int) -> str:
    return f"nupart-cache {VERSION} n_max={n_max}"


def dumps(table: SeqTable) -> str:
    lines = [header(table.n_max)]
    lines += [f"{n},{table.p[n]},{table.nu[n]},{table.gamma[n]}" for n in range(table.n_max + 1)]
    return "\n".join(lines) + "\n"


def loads(text: str, check: bool = True) -> SeqTable:
    lines = text.splitlines()
    if not lines:
        raise CacheError("empty cache file")
    m = HEADER_RE.match(lines[0].strip())
    if not m:
        raise CacheError(f"unrecognised cache header {lines[0]!r}; rebuild the cache")
    if m.group(1) != VERSION:
        raise CacheError(
            f"cache version {m.group(1)} is not {VERSION}; rebuild with `nupart cache --rebuild`"
        )
    n_max = int(m.group(2))
    rows = [ln for ln in lines[1:] if ln.strip()]
    if len(rows) != n_max + 1:
        raise CacheError(f"header says n_max={n_max} but file has {len(rows)} rows")
    p, nu, gamma = [], [], []
    for expected, line in enumerate(rows):
        try:
            n, a, b, c = (int(x) for x in line.split(","))
        except ValueError:
            raise CacheIntegrityError(f"malformed row {line!r}", expected) from None
        if n != expected:
            raise CacheIntegrityError(f"row for n={n} where n={expected} expected", expected)
        p.append(a)
        nu.append(b)
        gamma.append(c)
    try:
        return SeqTable.from_columns(p, nu, gamma, check=check)
    except TableError as exc:
        raise CacheIntegrityError(str(exc), exc.n if exc.n is not None else 0) from None


def read_cache(path: PathLike, check: bool = True) -> SeqTable:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CacheError(f"cannot read cache {path}: {exc}") from exc
    return loads(text, check=check)


def write_cache(table: SeqTable, path: PathLike) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=".nupart-", dir=path.parent)
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(dumps(table))
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path


def ensure_cache(path: PathLike, n_max: int, rebuild: bool = False) -> SeqTable:
    """Build or extend the cache at ``path`` to cover ``n_max``.

    An existing file is revalidated before its prefix is reused.
    """
    path = Path(path)
    if path.exists() and not rebuild:
        table = read_cache(path)
        if table.n_max >= n_max:
            return table
        table = table.extend(n_max)
    else:
        table = SeqTable.build(n_max)
    write_cache(table, path)
    return table


def load_table(n_max: int, path: Optional[PathLike] = None, write: bool = True) -> SeqTable:
    """Table to ``n_max`` from the cache when it covers it, else freshly built.

    A fresh build is written back when ``write`` is set.  Cached rows are
    validated, so a corrupted file raises :class:`CacheIntegrityError`.
    """
    if path is not None and Path(path).exists():
        table = read_cache(path)
        if table.n_max >= n_max:
            return table.truncate(n_max)
        table = table.extend(n_max)
    else:
        table = SeqTable.build(n_max)
    if path is not None and write:
        write_cache(table, path)
    return table
