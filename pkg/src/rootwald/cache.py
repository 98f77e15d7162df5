"""On-disk cache for the group closure and the invariant chain.

Plain text files keyed by name: a group file holds one canonical matrix row
per line, a polynomial file holds canonical term lines.  A version header
guards both; anything unreadable (missing, corrupt, stale version) is
rebuilt from scratch with a logged warning, never trusted.
"""

from __future__ import annotations

import logging
import os
from pathlib import Path
from typing import Optional

from . import invariants as _inv
from .groups import Matrix4, MatrixGroup, build_group
from .poly import Polynomial, parse_polynomial

log = logging.getLogger("rootwald.cache")

FORMAT_VERSION = "1"
_GROUP_MAGIC = "rootwald-group"
_POLY_MAGIC = "rootwald-poly"


def default_cache_dir() -> Path:
    env = os.environ.get("ROOTWALD_CACHE_DIR")
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME", os.path.join(os.path.expanduser("~"), ".cache"))
    return Path(base) / "rootwald"


def _group_path(cache_dir: Path, name: str) -> Path:
    return cache_dir / f"group-{name}.txt"


def _poly_path(cache_dir: Path, name: str) -> Path:
    return cache_dir / f"poly-{name}.txt"


def save_group(group: MatrixGroup, cache_dir: Path, key: Optional[str] = None) -> Path:
    """Write the group under `key` (defaults to its display name)."""
    cache_dir.mkdir(parents=True, exist_ok=True)
    path = _group_path(cache_dir, key or group.name)
    tmp = path.with_suffix(".tmp")
    with open(tmp, "w") as fh:
        fh.write(f"{_GROUP_MAGIC}\t{FORMAT_VERSION}\t{group.name}\t"
                 f"{len(group.generators)}\t{group.order}\n")
        for g in group.generators:
            fh.write(g.canonical_row() + "\n")
        for m in group.elements:
            fh.write(m.canonical_row() + "\n")
    os.replace(tmp, path)
    return path


def load_group(key: str, cache_dir: Path) -> Optional[MatrixGroup]:
    path = _group_path(cache_dir, key)
    if not path.exists():
        return None
    try:
        with open(path) as fh:
            header = fh.readline().rstrip("\n").split("\t")
            if header[:2] != [_GROUP_MAGIC, FORMAT_VERSION] or len(header) != 5:
                raise ValueError(f"stale or foreign header {header[:3]}")
            name = header[2]
            ngens, order = int(header[3]), int(header[4])
            gens = [Matrix4.from_canonical_row(fh.readline()) for _ in range(ngens)]
            elements = [Matrix4.from_canonical_row(fh.readline()) for _ in range(order)]
            if fh.readline() != "":
                raise ValueError("trailing data")
        return MatrixGroup(name, gens, elements=elements)
    except Exception as exc:
        log.warning("discarding unreadable group cache %s (%s); rebuilding", path, exc)
        return None


def save_polynomial(name: str, poly: Polynomial, cache_dir: Path) -> Path:
    cache_dir.mkdir(parents=True, exist_ok=True)
    path = _poly_path(cache_dir, name)
    tmp = path.with_suffix(".tmp")
    with open(tmp, "w") as fh:
        lines = poly.canonical_lines()
        fh.write(f"{_POLY_MAGIC}\t{FORMAT_VERSION}\t{name}\t"
                 f"{','.join(poly.vars)}\t{len(lines)}\n")
        for line in lines:
            fh.write(line + "\n")
    os.replace(tmp, path)
    return path


def load_polynomial(name: str, cache_dir: Path) -> Optional[Polynomial]:
    path = _poly_path(cache_dir, name)
    if not path.exists():
        return None
    try:
        with open(path) as fh:
            header = fh.readline().rstrip("\n").split("\t")
            if header[:3] != [_POLY_MAGIC, FORMAT_VERSION, name]:
                raise ValueError(f"stale or foreign header {header[:3]}")
            vars = tuple(header[3].split(","))
            count = int(header[4])
            lines = [fh.readline() for _ in range(count)]
            if fh.readline() != "":
                raise ValueError("trailing data")
        return parse_polynomial(lines, vars=vars)
    except Exception as exc:
        log.warning("discarding unreadable polynomial cache %s (%s); rebuilding", path, exc)
        return None


class InvariantStore:
    """Build-or-load pipeline: group closure, fundamental chain, derived
    combinations, stabilizer leads.  Loads skip the construction but the
    cheap structural checks still run on freshly built objects."""

    def __init__(self, cache_dir: Optional[Path] = None):
        self.cache_dir = Path(cache_dir) if cache_dir else default_cache_dir()

    def group(self, name: str) -> MatrixGroup:
        got = load_group(name, self.cache_dir)
        if got is not None:
            return got
        built = build_group(name)
        save_group(built, self.cache_dir, key=name)
        return built

    def _poly_set(self, names) -> Optional[dict]:
        out = {}
        for n in names:
            p = load_polynomial(n, self.cache_dir)
            if p is None:
                return None
            out[n] = p
        return out

    def fundamentals(self, group: MatrixGroup) -> _inv.FundamentalInvariants:
        names = ("f2", "f12", "f20", "f30", "g12", "g20", "g30")
        got = self._poly_set(names)
        if got is not None:
            return _inv.FundamentalInvariants(**got)
        inv = _inv.build_fundamentals(group)
        for n in names:
            save_polynomial(n, getattr(inv, n), self.cache_dir)
        return inv

    def derived(self, inv: _inv.FundamentalInvariants) -> _inv.DerivedInvariants:
        names = ("f24", "f32", "f36", "f42", "f44", "f54", "f60", "f66")
        got = self._poly_set(names)
        if got is not None:
            return _inv.DerivedInvariants(**got)
        der = _inv.build_derived(inv)
        for n in names:
            save_polynomial(n, getattr(der, n), self.cache_dir)
        return der

    def stabilizer_invariants(self, inv, der) -> _inv.StabilizerInvariants:
        names = ("s2", "s6", "s10")
        got = self._poly_set(names)
        if got is not None:
            return _inv.StabilizerInvariants(**got)
        stab = _inv.build_stabilizer_invariants(inv, der)
        for n in names:
            save_polynomial(n, getattr(stab, n), self.cache_dir)
        return stab
