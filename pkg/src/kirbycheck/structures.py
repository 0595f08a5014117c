"""The handle-structure data model and its derived exact-integer data.

A 4-manifold handle decomposition is recorded combinatorially: dotted
circles (1-handles) carry only names; framed 2-handles carry a framing,
a cyclic passage word through the dotted circles, and pairwise linking
numbers; 3-handles are a bare count; marked boundary curves carry the
same passage/linking data as 2-handles plus an optional framing
annotation (a longitude choice used when gluing along the curve).

Sign convention: a letter's sign is the algebraic intersection of the
attaching circle with the oriented spanning disk of the dotted circle.
Linking between two 2-handles is not derivable from words and must be
declared; undeclared pairs read as 0 and are reported as warnings.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .linalg import IntegerMatrix
from .words import Word


def _pair_key(a: str, b: str) -> tuple[str, str]:
    return (a, b) if a <= b else (b, a)


class LinkingTable:
    """Symmetric integer pairing on 2-handle and marked-curve names.

    Diagonal entries of 2-handles are their framings and live on the
    handles themselves, not in the table.  Equality compares the
    effective pairing (declared zeros count the same as undeclared).
    """

    __slots__ = ("_entries",)

    def __init__(self, entries: Mapping[tuple[str, str], int] | None = None):
        table: dict[tuple[str, str], int] = {}
        if entries:
            for (a, b), v in entries.items():
                key = _pair_key(a, b)
                if key in table and table[key] != v:
                    raise ValueError(f"conflicting linking numbers for {a}, {b}")
                table[key] = int(v)
        object.__setattr__(self, "_entries", table)

    def __setattr__(self, name, value):
        raise AttributeError("LinkingTable is immutable")

    def get(self, a: str, b: str) -> int:
        return self._entries.get(_pair_key(a, b), 0)

    def declared(self, a: str, b: str) -> bool:
        return _pair_key(a, b) in self._entries

    def items(self):
        return self._entries.items()

    def nonzero_items(self):
        return {k: v for k, v in self._entries.items() if v != 0}

    def updated(self, changes: Mapping[tuple[str, str], int]) -> "LinkingTable":
        table = dict(self._entries)
        for (a, b), v in changes.items():
            table[_pair_key(a, b)] = int(v)
        return LinkingTable(table)

    def without_names(self, names: Iterable[str]) -> "LinkingTable":
        drop = set(names)
        return LinkingTable(
            {k: v for k, v in self._entries.items() if k[0] not in drop and k[1] not in drop}
        )

    def renamed(self, mapping: Mapping[str, str]) -> "LinkingTable":
        return LinkingTable(
            {
                _pair_key(mapping.get(a, a), mapping.get(b, b)): v
                for (a, b), v in self._entries.items()
            }
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinkingTable):
            return NotImplemented
        return self.nonzero_items() == other.nonzero_items()

    def __hash__(self) -> int:
        return hash(frozenset(self.nonzero_items().items()))

    def __repr__(self) -> str:
        return f"LinkingTable({self._entries!r})"


@dataclass(frozen=True)
class OneHandle:
    id: str


@dataclass(frozen=True)
class TwoHandle:
    id: str
    framing: int
    word: Word = field(default_factory=Word)
    gauss: tuple[int, ...] | None = None


@dataclass(frozen=True)
class MarkedCurve:
    name: str
    word: Word = field(default_factory=Word)
    framing: int | None = None
    gauss: tuple[int, ...] | None = None


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[str, ...] = ()
    warnings: tuple[str, ...] = ()

    @property
    def is_valid(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        lines = [f"violation: {v}" for v in self.violations]
        lines += [f"warning: {w}" for w in self.warnings]
        return "\n".join(lines) if lines else "ok"


class HandleStructure:
    """An immutable handle decomposition with marked boundary curves."""

    __slots__ = ("one_handles", "two_handles", "three_handle_count", "linking", "curves")

    def __init__(
        self,
        one_handles: Iterable[OneHandle] = (),
        two_handles: Iterable[TwoHandle] = (),
        three_handle_count: int = 0,
        linking: LinkingTable | None = None,
        curves: Iterable[MarkedCurve] = (),
    ):
        if three_handle_count < 0:
            raise ValueError("three_handle_count must be nonnegative")
        object.__setattr__(self, "one_handles", tuple(one_handles))
        object.__setattr__(self, "two_handles", tuple(two_handles))
        object.__setattr__(self, "three_handle_count", int(three_handle_count))
        object.__setattr__(self, "linking", linking or LinkingTable())
        object.__setattr__(self, "curves", tuple(curves))

    def __setattr__(self, name, value):
        raise AttributeError("HandleStructure is immutable")

    # -- lookups ---------------------------------------------------------

    @property
    def one_ids(self) -> tuple[str, ...]:
        return tuple(h.id for h in self.one_handles)

    @property
    def two_ids(self) -> tuple[str, ...]:
        return tuple(h.id for h in self.two_handles)

    @property
    def curve_names(self) -> tuple[str, ...]:
        return tuple(c.name for c in self.curves)

    def two_handle(self, hid: str) -> TwoHandle:
        for h in self.two_handles:
            if h.id == hid:
                return h
        raise KeyError(f"unknown 2-handle {hid!r}")

    def curve(self, name: str) -> MarkedCurve:
        for c in self.curves:
            if c.name == name:
                return c
        raise KeyError(f"unknown curve {name!r}")

    def word_of(self, name: str) -> Word:
        """Word of a 2-handle or marked curve by name."""
        for h in self.two_handles:
            if h.id == name:
                return h.word
        for c in self.curves:
            if c.name == name:
                return c.word
        raise KeyError(f"no 2-handle or curve named {name!r}")

    def lk(self, a: str, b: str) -> int:
        """Effective linking number; diagonal entries are framings."""
        if a == b:
            for h in self.two_handles:
                if h.id == a:
                    return h.framing
            for c in self.curves:
                if c.name == a:
                    if c.framing is None:
                        raise KeyError(f"curve {a!r} has no framing annotation")
                    return c.framing
            raise KeyError(f"unknown name {a!r}")
        return self.linking.get(a, b)

    # -- functional updates ------------------------------------------------

    def replace(self, **kwargs) -> "HandleStructure":
        fields = {
            "one_handles": self.one_handles,
            "two_handles": self.two_handles,
            "three_handle_count": self.three_handle_count,
            "linking": self.linking,
            "curves": self.curves,
        }
        fields.update(kwargs)
        return HandleStructure(**fields)

    def with_two_handle_word(self, hid: str, word: Word) -> "HandleStructure":
        self.two_handle(hid)
        return self.replace(
            two_handles=tuple(
                TwoHandle(h.id, h.framing, word, h.gauss) if h.id == hid else h
                for h in self.two_handles
            )
        )

    def with_curve_word(self, name: str, word: Word) -> "HandleStructure":
        self.curve(name)
        return self.replace(
            curves=tuple(
                MarkedCurve(c.name, word, c.framing, c.gauss) if c.name == name else c
                for c in self.curves
            )
        )

    # -- structural equality -------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, HandleStructure):
            return NotImplemented
        return (
            self.one_handles == other.one_handles
            and self.two_handles == other.two_handles
            and self.three_handle_count == other.three_handle_count
            and self.linking == other.linking
            and self.curves == other.curves
        )

    def __hash__(self) -> int:
        return hash(
            (
                self.one_handles,
                self.two_handles,
                self.three_handle_count,
                self.linking,
                self.curves,
            )
        )

    def __repr__(self) -> str:
        return (
            f"HandleStructure(1h={list(self.one_ids)}, 2h={list(self.two_ids)}, "
            f"3h={self.three_handle_count}, curves={list(self.curve_names)})"
        )


def validate(hs: HandleStructure) -> ValidationReport:
    """Referential and consistency checks; empty violations iff well-formed."""
    violations: list[str] = []
    warnings: list[str] = []

    one_ids = list(hs.one_ids)
    if len(set(one_ids)) != len(one_ids):
        violations.append("duplicate 1-handle ids")
    two_ids = list(hs.two_ids)
    if len(set(two_ids)) != len(two_ids):
        violations.append("duplicate 2-handle ids")
    names = list(hs.curve_names)
    if len(set(names)) != len(names):
        violations.append("duplicate curve names")
    if set(one_ids) & set(two_ids):
        violations.append("1-handle and 2-handle ids overlap")
    if (set(one_ids) | set(two_ids)) & set(names):
        violations.append("curve names collide with handle ids")

    known = set(one_ids)
    for h in hs.two_handles:
        for gen in sorted(h.word.generators()):
            if gen not in known:
                violations.append(f"unresolved generator {gen!r} in word of {h.id!r}")
    for c in hs.curves:
        for gen in sorted(c.word.generators()):
            if gen not in known:
                violations.append(f"unresolved generator {gen!r} in word of curve {c.name!r}")

    linkable = set(two_ids) | set(names)
    for (a, b), _ in hs.linking.items():
        for name in (a, b):
            if name not in linkable:
                violations.append(f"linking entry references unknown name {name!r}")
        if a == b:
            try:
                framing = hs.lk(a, a)
            except KeyError:
                violations.append(f"diagonal linking declared for {a!r}, which has no framing")
                continue
            if hs.linking.get(a, a) != framing:
                violations.append(f"diagonal linking of {a!r} disagrees with its framing")

    for i, a in enumerate(two_ids):
        for b in two_ids[i + 1 :]:
            if not hs.linking.declared(a, b):
                warnings.append(f"undeclared 2-handle linking lk({a},{b}) defaults to 0")

    return ValidationReport(tuple(violations), tuple(warnings))


def require_valid(hs: HandleStructure) -> None:
    report = validate(hs)
    if not report.is_valid:
        raise ValueError("invalid handle structure: " + "; ".join(report.violations))


def passage_matrix(hs: HandleStructure) -> IntegerMatrix:
    """Boundary map of the induced chain complex.

    Rows are 2-handles, columns are 1-handles; entry (i, j) is the signed
    letter count of 1-handle j in the word of 2-handle i.
    """
    require_valid(hs)
    order = hs.one_ids
    return IntegerMatrix(
        [list(h.word.abelianized(order)) for h in hs.two_handles], cols=len(order)
    )


def geometric_passage_count(hs: HandleStructure, two_handle_id: str, one_handle_id: str) -> int:
    """Unsigned letter count, before any free reduction."""
    if one_handle_id not in hs.one_ids:
        raise KeyError(f"unknown 1-handle {one_handle_id!r}")
    return hs.two_handle(two_handle_id).word.unsigned_count(one_handle_id)


def boundary_surgery_form(hs: HandleStructure) -> IntegerMatrix:
    """Framed linking matrix of the boundary surgery description.

    Every dot is traded for a 0-framed component (which leaves the
    boundary 3-manifold unchanged), so the form has one row per 1-handle
    followed by one row per 2-handle, with diagonal (0, ..., 0, framings).
    A dot-replacing component links a 2-handle by the algebraic passage
    count; linking between two 2-handles must be declared in the table.
    """
    require_valid(hs)
    ones = hs.one_ids
    twos = hs.two_handles
    for i, a in enumerate(twos):
        for b in twos[i + 1 :]:
            if not hs.linking.declared(a.id, b.id):
                raise ValueError(
                    f"missing linking data between 2-handles {a.id!r} and {b.id!r}"
                )
    n = len(ones) + len(twos)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i < len(ones) and j < len(ones):
                row.append(0)
            elif i < len(ones):
                row.append(twos[j - len(ones)].word.signed_count(ones[i]))
            elif j < len(ones):
                row.append(twos[i - len(ones)].word.signed_count(ones[j]))
            elif i == j:
                row.append(twos[i - len(ones)].framing)
            else:
                row.append(hs.linking.get(twos[i - len(ones)].id, twos[j - len(ones)].id))
        rows.append(row)
    return IntegerMatrix(rows, cols=n)


def curve_class(hs: HandleStructure, curve_name: str) -> tuple[int, ...]:
    """Abelianized word of a marked curve over the 1-handle generators."""
    return hs.curve(curve_name).word.abelianized(hs.one_ids)


def attach_two_handle_along_curve(
    hs: HandleStructure, curve_name: str, new_id: str, framing: int = 0
) -> HandleStructure:
    """Attach a new 2-handle along a marked curve (surgery on the boundary).

    The new handle inherits the curve's passage word and its linking row;
    the curve itself stays marked.
    """
    c = hs.curve(curve_name)
    if new_id in hs.one_ids or new_id in hs.two_ids or new_id in hs.curve_names:
        raise ValueError(f"id {new_id!r} already in use")
    changes = {}
    for other in list(hs.two_ids) + [n for n in hs.curve_names]:
        if other == curve_name:
            continue
        v = hs.linking.get(curve_name, other)
        if v or hs.linking.declared(curve_name, other):
            changes[(new_id, other)] = v
    for other in hs.two_ids:
        changes.setdefault((new_id, other), 0)
    return hs.replace(
        two_handles=hs.two_handles + (TwoHandle(new_id, framing, c.word, c.gauss),),
        linking=hs.linking.updated(changes),
    )
