"""JSON documents for built representations, written atomically."""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

from .combinatorics import SHIFTED, STRAIGHT, Partition, residue
from .sergeev import SergeevRep
from .symrep import SymRep


def rep_document(rep) -> dict:
    field = rep.field
    if isinstance(rep, SymRep):
        return {
            "p": field.p,
            "delta": field.delta,
            "algebra": "sym",
            "lambda": list(rep.lam),
            "dim": rep.dim,
            "basis": [T.to_json() for T in rep.basis],
            "generators": {name: M.to_json() for name, M in rep.generators().items()},
        }
    if isinstance(rep, SergeevRep):
        return {
            "p": field.p,
            "delta": field.delta,
            "algebra": "sergeev",
            "xi": list(rep.xi),
            "dim": rep.dim,
            "type": rep.module_type,
            "block_dim": rep.block_dim,
            "blocks": [T.to_json() for T in rep.blocks],
            "generators": {name: M.to_json() for name, M in rep.generators().items()},
        }
    raise TypeError(f"cannot export {type(rep).__name__}")


def dumps(doc) -> str:
    """Canonical serialisation: fixed key order, no whitespace variation."""
    return json.dumps(doc, separators=(",", ":")) + "\n"


def write_atomic(path: str | os.PathLike, text: str) -> None:
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def residue_diagram(lam: Partition, p: int, kind: str = STRAIGHT) -> str:
    """Rows of residues; shifted rows are indented one cell per row."""
    width = len(str(p - 1))
    lines = []
    for i, length in enumerate(lam, start=1):
        offset = i - 1 if kind == SHIFTED else 0
        cells = [str(residue((i, offset + j), p, kind)).rjust(width) for j in range(1, length + 1)]
        lines.append(" " * ((width + 1) * offset) + " ".join(cells))
    return "\n".join(lines)

