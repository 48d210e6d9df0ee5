"""Group files, manifests and the default verification corpus.

All files are UTF-8 JSON with an explicit "format" tag.  Group files carry
either a Cayley table ("cayley") or permutation generators ("perm-group");
unknown fields are rejected so typos fail loudly.  Manifest entries name a
group, a source expression, and an optional expected decision.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from .errors import ParseError
from .families import parse_group_spec
from .groups import DEFAULT_ORDER_CAP, Group, group_from_cayley_table, group_from_permutations

GROUP_FORMATS = ("cayley", "perm-group")
DECISIONS = ("Minimal", "NotMinimal", "Undecided")


def _load_json(path: str | Path) -> dict:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"cannot read: {e}", path=str(path)) from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON at line {e.lineno}: {e.msg}", path=str(path)) from None
    if not isinstance(data, dict):
        raise ParseError("top level must be an object", path=str(path))
    return data


def _check_fields(data: dict, required: dict, optional: dict, path: str) -> None:
    unknown = set(data) - set(required) - set(optional)
    if unknown:
        raise ParseError(f"unknown fields {sorted(unknown)}", path=path)
    for field, kind in required.items():
        if field not in data:
            raise ParseError(f"missing field {field!r}", path=path)
        if not isinstance(data[field], kind):
            raise ParseError(f"field {field!r} must be {kind.__name__}", path=path)
    for field, kind in optional.items():
        if field in data and not isinstance(data[field], kind):
            raise ParseError(f"field {field!r} must be {kind.__name__}", path=path)


def _int_matrix(rows: list, path: str, field: str) -> list[list[int]]:
    out = []
    for i, row in enumerate(rows):
        if not isinstance(row, list) or not all(
            isinstance(v, int) and not isinstance(v, bool) for v in row
        ):
            raise ParseError(f"{field}[{i}] must be a list of integers", path=path)
        out.append(row)
    return out


def read_group_file(
    path: str | Path, cap: int = DEFAULT_ORDER_CAP
) -> tuple[Optional[str], Group]:
    """Parse a group file; returns (embedded name or None, validated Group)."""
    spath = str(path)
    data = _load_json(path)
    fmt = data.get("format")
    if fmt == "cayley":
        _check_fields(
            data,
            {"format": str, "order": int, "table": list},
            {"name": str},
            spath,
        )
        order = data["order"]
        table = _int_matrix(data["table"], spath, "table")
        if len(table) != order or any(len(r) != order for r in table):
            raise ParseError(f"table is not {order}x{order}", spath)
        if order > cap:
            raise ParseError(f"order {order} exceeds cap {cap}", spath)
        return data.get("name"), group_from_cayley_table(table)
    if fmt == "perm-group":
        _check_fields(
            data,
            {"format": str, "degree": int, "generators": list},
            {"name": str},
            spath,
        )
        gens = _int_matrix(data["generators"], spath, "generators")
        return data.get("name"), group_from_permutations(data["degree"], gens, cap=cap)
    raise ParseError(
        f"format must be one of {list(GROUP_FORMATS)}, got {fmt!r}", spath
    )


def read_group(path: str | Path, cap: int = DEFAULT_ORDER_CAP) -> Group:
    return read_group_file(path, cap=cap)[1]


def write_group(G: Group, path: str | Path, name: Optional[str] = None) -> None:
    """Write the Cayley-table form (canonical on disk)."""
    data: dict = {"format": "cayley", "order": G.order, "table": G.table.tolist()}
    if name is not None:
        data["name"] = name
    Path(path).write_text(
        json.dumps(data, sort_keys=True, indent=2) + "\n", encoding="utf-8"
    )


@dataclass(frozen=True)
class ManifestEntry:
    name: str
    source: str
    expected: Optional[str] = None  # one of DECISIONS

    def __post_init__(self):
        if self.expected is not None and self.expected not in DECISIONS:
            raise ParseError(
                f"entry {self.name!r}: expected must be one of {list(DECISIONS)}"
            )


@dataclass(frozen=True)
class Manifest:
    entries: tuple[ManifestEntry, ...]

    def __post_init__(self):
        seen = set()
        for e in self.entries:
            if e.name in seen:
                raise ParseError(f"duplicate entry name {e.name!r}")
            seen.add(e.name)

    def __len__(self) -> int:
        return len(self.entries)


def read_manifest(path: str | Path) -> Manifest:
    spath = str(path)
    data = _load_json(path)
    _check_fields(data, {"format": str, "entries": list}, {}, spath)
    if data["format"] != "manifest":
        raise ParseError(f"format must be 'manifest', got {data['format']!r}", spath)
    entries = []
    for i, raw in enumerate(data["entries"]):
        if not isinstance(raw, dict):
            raise ParseError(f"entries[{i}] must be an object", spath)
        _check_fields(raw, {"name": str, "source": str}, {"expected": str}, spath)
        entries.append(
            ManifestEntry(raw["name"], raw["source"], raw.get("expected"))
        )
    return Manifest(tuple(entries))


def write_manifest(manifest: Manifest, path: str | Path) -> None:
    entries = []
    for e in manifest.entries:
        d: dict = {"name": e.name, "source": e.source}
        if e.expected is not None:
            d["expected"] = e.expected
        entries.append(d)
    data = {"format": "manifest", "entries": entries}
    Path(path).write_text(
        json.dumps(data, sort_keys=True, indent=2) + "\n", encoding="utf-8"
    )


def resolve_source(source: str, cap: int = DEFAULT_ORDER_CAP) -> Group:
    """Build a group from "builtin:<expr>" or a group file path."""
    if source.startswith("builtin:"):
        return parse_group_spec(source[len("builtin:") :], cap=cap)
    return read_group(source, cap=cap)


# Default corpus: nonabelian p-groups for p in {2, 3, 5} spanning classes
# 2..5 and coclasses 1..4, all with brute-force-enumerable candidate maps.
# Expected decisions are regression pins confirmed by the enumeration.
_CORPUS: tuple[tuple[str, str, str], ...] = (
    ("q8", "quaternion(8)", "Minimal"),
    ("d8", "dihedral(8)", "Minimal"),
    ("heis2", "heisenberg(2,1)", "Minimal"),
    ("es8+", "extraspecial(2,8,+)", "Minimal"),
    ("es8-", "extraspecial(2,8,-)", "Minimal"),
    ("d16", "dihedral(16)", "NotMinimal"),
    ("q16", "quaternion(16)", "NotMinimal"),
    ("sd16", "semidihedral(16)", "NotMinimal"),
    ("m16", "modular(2,16)", "NotMinimal"),
    ("d32", "dihedral(32)", "NotMinimal"),
    ("q32", "quaternion(32)", "NotMinimal"),
    ("sd32", "semidihedral(32)", "NotMinimal"),
    ("m32", "modular(2,32)", "NotMinimal"),
    ("d64", "dihedral(64)", "NotMinimal"),
    ("q64", "quaternion(64)", "NotMinimal"),
    ("sd64", "semidihedral(64)", "NotMinimal"),
    ("d128", "dihedral(128)", "NotMinimal"),
    ("q128", "quaternion(128)", "NotMinimal"),
    ("sd128", "semidihedral(128)", "NotMinimal"),
    ("es32+", "extraspecial(2,32,+)", "Minimal"),
    ("es32-", "extraspecial(2,32,-)", "Minimal"),
    ("heis4", "heisenberg(2,2)", "Minimal"),
    ("ut4_2", "unitriangular4(2)", "NotMinimal"),
    ("wr2", "wreath(2)", "Minimal"),
    ("cwr2_4", "cwreath(2,4)", "NotMinimal"),
    ("mc16_4", "metacyclic(16,4,3)", "Minimal"),
    ("mc32_4", "metacyclic(32,4,7)", "Minimal"),
    ("mc64_4", "metacyclic(64,4,15)", "Minimal"),
    ("mc32_8a", "metacyclic(32,8,3)", "Minimal"),
    ("mc32_8b", "metacyclic(32,8,5)", "Minimal"),
    ("d128xc2", "dihedral(128) x cyclic(2)", "NotMinimal"),
    ("d64xe4", "dihedral(64) x elementary(2,2)", "NotMinimal"),
    ("mc16_4xe4", "metacyclic(16,4,3) x elementary(2,2)", "NotMinimal"),
    ("d16xc2", "dihedral(16) x cyclic(2)", "NotMinimal"),
    ("d16xc4", "dihedral(16) x cyclic(4)", "NotMinimal"),
    ("d32xc2", "dihedral(32) x cyclic(2)", "NotMinimal"),
    ("d64xc2", "dihedral(64) x cyclic(2)", "NotMinimal"),
    ("q16xc2", "quaternion(16) x cyclic(2)", "NotMinimal"),
    ("ut4_2xc2", "unitriangular4(2) x cyclic(2)", "NotMinimal"),
    ("es32+xc2", "extraspecial(2,32,+) x cyclic(2)", "NotMinimal"),
    ("heis3", "heisenberg(3,1)", "Minimal"),
    ("m27", "modular(3,27)", "Minimal"),
    ("m81", "modular(3,81)", "NotMinimal"),
    ("es243+", "extraspecial(3,243,+)", "Minimal"),
    ("es243-", "extraspecial(3,243,-)", "Minimal"),
    ("heis9", "heisenberg(3,2)", "Minimal"),
    ("ut4_3", "unitriangular4(3)", "NotMinimal"),
    ("wr3", "wreath(3)", "NotMinimal"),
    ("mc27_9", "metacyclic(27,9,4)", "Minimal"),
    ("heis3xc3", "heisenberg(3,1) x cyclic(3)", "NotMinimal"),
    ("es125+", "extraspecial(5,125,+)", "Minimal"),
    ("es125-", "extraspecial(5,125,-)", "Minimal"),
    ("m625", "modular(5,625)", "NotMinimal"),
    ("heis5xc5", "heisenberg(5,1) x cyclic(5)", "NotMinimal"),
)


def default_corpus() -> Manifest:
    """The built-in verification corpus, generated in process."""
    return Manifest(
        tuple(
            ManifestEntry(name, f"builtin:{src}", expected)
            for name, src, expected in _CORPUS
        )
    )
