"""The Kirby-move engine: slides, cancellations, dot-zero exchanges.

Moves are specified algebraically (a slide carries a sign and a
conjugator word for the band's path), never geometrically.  Every move
returns a fresh structure; scripts replay deterministically and carry
an audit trail of invariant snapshots.

Slides and cancellations act on the boundary surgery form by unimodular
congruences, so boundary H1 is preserved by construction; the linking
updates below are exactly those congruences spelled out entrywise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .homology import boundary_h1, homology
from .linalg import AbelianGroup
from .presentation import TietzeStep, abelianization, pi1_presentation
from .structures import (
    HandleStructure,
    LinkingTable,
    MarkedCurve,
    OneHandle,
    TwoHandle,
    geometric_passage_count,
    require_valid,
    validate,
)
from .words import Word


class MoveError(ValueError):
    """A move's precondition failed; the message names the violation."""


# -- move vocabulary ---------------------------------------------------------


@dataclass(frozen=True)
class Slide:
    slider: str
    over: str
    sign: int
    conjugator: Word = field(default_factory=Word)

    def describe(self) -> str:
        c = f" conj {self.conjugator.to_text()}" if self.conjugator else ""
        return f"slide {self.slider} over {self.over} sign {self.sign:+d}{c}"


@dataclass(frozen=True)
class Cancel12:
    one_handle: str
    two_handle: str

    def describe(self) -> str:
        return f"cancel12 {self.one_handle} {self.two_handle}"


@dataclass(frozen=True)
class Cancel23:
    two_handle: str

    def describe(self) -> str:
        return f"cancel23 {self.two_handle}"


@dataclass(frozen=True)
class DotToZero:
    one_handle: str
    new_id: str

    def describe(self) -> str:
        return f"dottozero {self.one_handle} -> {self.new_id}"


@dataclass(frozen=True)
class ZeroToDot:
    two_handle: str
    new_id: str
    passage_words: tuple[tuple[str, Word], ...] = ()
    certificate_note: str = ""

    def describe(self) -> str:
        return f"zerotodot {self.two_handle} -> {self.new_id} ({self.certificate_note})"


@dataclass(frozen=True)
class ReduceWord:
    """Bookkeeping: cyclically reduce a stored word (a certified isotopy)."""

    target: str

    def describe(self) -> str:
        return f"reduce {self.target}"


@dataclass(frozen=True)
class RenameCurve:
    old: str
    new: str

    def describe(self) -> str:
        return f"renamecurve {self.old} -> {self.new}"


Move = Slide | Cancel12 | Cancel23 | DotToZero | ZeroToDot | ReduceWord | RenameCurve


@dataclass(frozen=True)
class MoveScript:
    name: str
    moves: tuple[Move, ...]
    provenance: str = ""


# -- individual moves --------------------------------------------------------


def apply_slide(
    hs: HandleStructure, slider: str, over: str, sign: int, conjugator: Word = Word()
) -> HandleStructure:
    """Slide one 2-handle over another.

    word(slider) gains c * word(over)^sign * c^-1; the framing gains
    framing(over) + 2*sign*lk(slider, over); linking rows add as in the
    corresponding congruence of the surgery form, in particular
    lk(slider, over) gains sign*framing(over).
    """
    if slider == over:
        raise MoveError("cannot slide a handle over itself")
    if sign not in (1, -1):
        raise MoveError("slide sign must be +1 or -1")
    h_slider = hs.two_handle(slider)
    h_over = hs.two_handle(over)
    for gen in sorted(conjugator.generators()):
        if gen not in hs.one_ids:
            raise MoveError(f"conjugator letter {gen!r} does not resolve")
    factor = h_over.word if sign > 0 else h_over.word.inverse()
    new_word = h_slider.word * conjugator * factor * conjugator.inverse()
    new_framing = h_slider.framing + h_over.framing + 2 * sign * hs.lk(slider, over)
    changes: dict[tuple[str, str], int] = {}
    for other in list(hs.two_ids) + list(hs.curve_names):
        if other in (slider, over):
            continue
        changes[(slider, other)] = hs.lk(slider, other) + sign * hs.lk(over, other)
    changes[(slider, over)] = hs.lk(slider, over) + sign * h_over.framing
    new_two = tuple(
        TwoHandle(h.id, new_framing, new_word, h.gauss) if h.id == slider else h
        for h in hs.two_handles
    )
    return hs.replace(two_handles=new_two, linking=hs.linking.updated(changes))


def _cancel12_data(hs: HandleStructure, x: str, h: str) -> tuple[int, Word]:
    word = hs.two_handle(h).word
    if geometric_passage_count(hs, h, x) != 1:
        raise MoveError(
            f"not geometrically cancelling: {h!r} passes {x!r} "
            f"{geometric_passage_count(hs, h, x)} times"
        )
    k = next(i for i, (g, _) in enumerate(word.letters) if g == x)
    rotated = word.rotated(k)
    sign = rotated.letters[0][1]
    tail = Word(rotated.letters[1:])
    replacement = (tail.inverse() if sign > 0 else tail).free_reduced()
    return sign, replacement


def cancel_pair_12(hs: HandleStructure, x: str, h: str) -> HandleStructure:
    """Cancel a 1-handle against a 2-handle passing through it once.

    The single passage is solved for the generator and substituted into
    every other word; linking data picks up the induced congruence
    (pivoting on the unimodular 2x2 block of the cancelled pair), which
    keeps the boundary surgery form's class unchanged.
    """
    if x not in hs.one_ids:
        raise MoveError(f"unknown 1-handle {x!r}")
    handle = hs.two_handle(h)
    e, replacement = _cancel12_data(hs, x, h)
    f_h = handle.framing

    others = [t.id for t in hs.two_handles if t.id != h] + list(hs.curve_names)
    a = {name: hs.word_of(name).signed_count(x) for name in others}
    b = {name: hs.lk(name, h) for name in others}

    changes: dict[tuple[str, str], int] = {}
    for i, k in enumerate(others):
        for l in others[i + 1 :]:
            new = hs.lk(k, l) + f_h * a[k] * a[l] - e * (a[k] * b[l] + b[k] * a[l])
            if new or hs.linking.declared(k, l):
                changes[(k, l)] = new

    def new_framing(name: str, old: int) -> int:
        return old + f_h * a[name] ** 2 - 2 * e * a[name] * b[name]

    new_two = tuple(
        TwoHandle(
            t.id,
            new_framing(t.id, t.framing),
            t.word.substitute(x, replacement),
            t.gauss,
        )
        for t in hs.two_handles
        if t.id != h
    )
    new_curves = tuple(
        MarkedCurve(
            c.name,
            c.word.substitute(x, replacement),
            None if c.framing is None else new_framing(c.name, c.framing),
            c.gauss,
        )
        for c in hs.curves
    )
    return hs.replace(
        one_handles=tuple(o for o in hs.one_handles if o.id != x),
        two_handles=new_two,
        curves=new_curves,
        linking=hs.linking.without_names([h]).updated(changes),
    )


def cancel12_tietze_trace(hs: HandleStructure, x: str, h: str) -> tuple[TietzeStep, ...]:
    """The one-step Tietze trace relating pi1 before and after cancel_pair_12."""
    index = [t.id for t in hs.two_handles].index(h)
    return (("kill", index, x),)


def cancel_pair_23(hs: HandleStructure, h: str) -> HandleStructure:
    """Cancel a trivially attached 0-framed 2-handle against a 3-handle."""
    handle = hs.two_handle(h)
    if hs.three_handle_count < 1:
        raise MoveError("no 3-handle available to cancel")
    if not handle.word.is_cyclically_trivial():
        raise MoveError(f"word of {h!r} is not freely trivial")
    if handle.framing != 0:
        raise MoveError(f"nonzero framing {handle.framing} on {h!r}")
    for other in list(hs.two_ids) + list(hs.curve_names):
        if other != h and hs.lk(h, other) != 0:
            raise MoveError(f"{h!r} still links {other!r}")
    return hs.replace(
        two_handles=tuple(t for t in hs.two_handles if t.id != h),
        three_handle_count=hs.three_handle_count - 1,
        linking=hs.linking.without_names([h]),
    )


def dot_to_zero(hs: HandleStructure, x: str, new_id: str) -> HandleStructure:
    """Trade a dotted circle for a 0-framed 2-handle on the same unknot.

    Passages through the dot become linking numbers with the new handle;
    the boundary 3-manifold is unchanged (the surgery form is literally
    the same matrix up to reordering).
    """
    if x not in hs.one_ids:
        raise MoveError(f"unknown 1-handle {x!r}")
    if new_id in hs.one_ids or new_id in hs.two_ids or new_id in hs.curve_names:
        raise MoveError(f"id {new_id!r} already in use")
    changes: dict[tuple[str, str], int] = {}
    for name in list(hs.two_ids) + list(hs.curve_names):
        changes[(new_id, name)] = hs.word_of(name).signed_count(x)
    new_two = tuple(
        TwoHandle(t.id, t.framing, t.word.delete_generator(x), t.gauss)
        for t in hs.two_handles
    ) + (TwoHandle(new_id, 0, Word()),)
    new_curves = tuple(
        MarkedCurve(c.name, c.word.delete_generator(x), c.framing, c.gauss)
        for c in hs.curves
    )
    return hs.replace(
        one_handles=tuple(o for o in hs.one_handles if o.id != x),
        two_handles=new_two,
        curves=new_curves,
        linking=hs.linking.updated(changes),
    )


def zero_to_dot(
    hs: HandleStructure,
    h: str,
    new_id: str,
    passage_words: Mapping[str, Word] | tuple[tuple[str, Word], ...] = (),
    certificate_note: str = "",
) -> HandleStructure:
    """Trade a trivially-worded 0-framed 2-handle for a dotted circle.

    Geometric unknottedness/sliceness of the exchanged handle is certified
    by the script author (the note is recorded, not checked); what *is*
    checked: the handle's word must be freely trivial, its framing zero,
    and each supplied rethreading word must erase back to the current word
    with algebraic new-letter count equal to the former linking number.
    """
    handle = hs.two_handle(h)
    if handle.framing != 0:
        raise MoveError(f"nonzero framing {handle.framing} on {h!r}")
    if not handle.word.is_cyclically_trivial():
        raise MoveError(f"word of {h!r} is not freely trivial")
    if new_id in hs.one_ids or new_id in hs.two_ids or new_id in hs.curve_names:
        raise MoveError(f"id {new_id!r} already in use")
    supplied = dict(passage_words.items() if isinstance(passage_words, Mapping) else passage_words)

    def rethread(name: str, current: Word) -> Word:
        expected_link = hs.lk(name, h)
        if name in supplied:
            word = supplied.pop(name)
            if word.delete_generator(new_id) != current:
                raise MoveError(
                    f"rethreading of {name!r} does not erase back to its current word"
                )
            if word.signed_count(new_id) != expected_link:
                raise MoveError(
                    f"abelianized inconsistency: {name!r} threads {new_id!r} "
                    f"{word.signed_count(new_id)} times but linked {h!r} {expected_link}"
                )
            return word
        if expected_link != 0:
            raise MoveError(
                f"missing rethreading word for {name!r} (lk with {h!r} is {expected_link})"
            )
        return current

    new_two = tuple(
        TwoHandle(t.id, t.framing, rethread(t.id, t.word), t.gauss)
        for t in hs.two_handles
        if t.id != h
    )
    new_curves = tuple(
        MarkedCurve(c.name, rethread(c.name, c.word), c.framing, c.gauss) for c in hs.curves
    )
    if supplied:
        raise MoveError(f"rethreading words for unknown names {sorted(supplied)}")
    return hs.replace(
        one_handles=hs.one_handles + (OneHandle(new_id),),
        two_handles=new_two,
        curves=new_curves,
        linking=hs.linking.without_names([h]),
    )


def reduce_word(hs: HandleStructure, target: str) -> HandleStructure:
    word = hs.word_of(target).cyclic_reduced()
    if target in hs.two_ids:
        return hs.with_two_handle_word(target, word)
    return hs.with_curve_word(target, word)


def rename_curve(hs: HandleStructure, old: str, new: str) -> HandleStructure:
    c = hs.curve(old)
    if new in hs.curve_names or new in hs.one_ids or new in hs.two_ids:
        raise MoveError(f"name {new!r} already in use")
    curves = tuple(
        MarkedCurve(new, cc.word, cc.framing, cc.gauss) if cc.name == old else cc
        for cc in hs.curves
    )
    return hs.replace(curves=curves, linking=hs.linking.renamed({old: new}))


def apply_move(hs: HandleStructure, move: Move) -> HandleStructure:
    if isinstance(move, Slide):
        return apply_slide(hs, move.slider, move.over, move.sign, move.conjugator)
    if isinstance(move, Cancel12):
        return cancel_pair_12(hs, move.one_handle, move.two_handle)
    if isinstance(move, Cancel23):
        return cancel_pair_23(hs, move.two_handle)
    if isinstance(move, DotToZero):
        return dot_to_zero(hs, move.one_handle, move.new_id)
    if isinstance(move, ZeroToDot):
        return zero_to_dot(hs, move.two_handle, move.new_id, move.passage_words, move.certificate_note)
    if isinstance(move, ReduceWord):
        return reduce_word(hs, move.target)
    if isinstance(move, RenameCurve):
        return rename_curve(hs, move.old, move.new)
    raise MoveError(f"unknown move {move!r}")


# -- script replay with audit -------------------------------------------------


@dataclass(frozen=True)
class Snapshot:
    """Invariants of a structure at one point of a replay."""

    h1: AbelianGroup | None
    h2: AbelianGroup | None
    boundary_h1: AbelianGroup | None
    abelianized_pi1: AbelianGroup
    notes: tuple[str, ...] = ()

    @classmethod
    def of(cls, hs: HandleStructure) -> "Snapshot":
        notes = []
        h1 = h2 = bdry = None
        try:
            h1, h2 = homology(hs)[1:]
        except ValueError as exc:
            notes.append(f"homology skipped: {exc}")
        try:
            bdry = boundary_h1(hs)
        except ValueError as exc:
            notes.append(f"boundary skipped: {exc}")
        ab = abelianization(pi1_presentation(hs))
        return cls(h1, h2, bdry, ab, tuple(notes))

    def __str__(self) -> str:
        fmt = lambda g: "?" if g is None else str(g)
        return (
            f"H1={fmt(self.h1)} H2={fmt(self.h2)} "
            f"bdryH1={fmt(self.boundary_h1)} pi1ab={self.abelianized_pi1}"
        )


@dataclass(frozen=True)
class MoveRecord:
    index: int
    description: str
    ok: bool
    error: str | None
    before: Snapshot
    after: Snapshot | None


@dataclass(frozen=True)
class AuditReport:
    records: tuple[MoveRecord, ...]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.records)

    @property
    def first_error(self) -> str | None:
        for r in self.records:
            if not r.ok:
                return f"move {r.index} ({r.description}): {r.error}"
        return None

    def __str__(self) -> str:
        lines = []
        for r in self.records:
            status = "ok" if r.ok else f"FAILED: {r.error}"
            lines.append(f"[{r.index}] {r.description}: {status}")
            lines.append(f"      before {r.before}")
            if r.after is not None:
                lines.append(f"      after  {r.after}")
        return "\n".join(lines)


def replay_script(hs: HandleStructure, script: MoveScript) -> tuple[HandleStructure, AuditReport]:
    """Apply moves in order; the first failing move aborts with a partial audit."""
    require_valid(hs)
    records: list[MoveRecord] = []
    current = hs
    for i, move in enumerate(script.moves):
        before = Snapshot.of(current)
        try:
            nxt = apply_move(current, move)
            report = validate(nxt)
            if not report.is_valid:
                raise MoveError("result invalid: " + "; ".join(report.violations))
        except (MoveError, KeyError, ValueError) as exc:
            records.append(MoveRecord(i, move.describe(), False, str(exc), before, None))
            return current, AuditReport(tuple(records))
        records.append(MoveRecord(i, move.describe(), True, None, before, Snapshot.of(nxt)))
        current = nxt
    return current, AuditReport(tuple(records))


# -- canonical form ----------------------------------------------------------


def _dense(signatures: dict[str, tuple]) -> dict[str, int]:
    ranking = {sig: i for i, sig in enumerate(sorted(set(signatures.values())))}
    return {name: ranking[sig] for name, sig in signatures.items()}


def _refine_colors(hs: HandleStructure) -> tuple[dict[str, int], dict[str, int]]:
    """Stable color classes for 1- and 2-handles under iterated refinement.

    Colors are dense integers derived from sorted signature tuples, so the
    refinement is deterministic across processes (no use of hash()).
    """
    ones = list(hs.one_ids)
    twos = list(hs.two_ids)
    curves = list(hs.curves)
    c1 = {x: 0 for x in ones}
    c2 = _dense({h.id: (h.framing, len(h.word)) for h in hs.two_handles})

    for _ in range(len(ones) + len(twos) + 2):
        sig1 = {}
        for x in ones:
            handle_part = sorted(
                (c2[hid], hs.word_of(hid).signed_count(x), hs.word_of(hid).unsigned_count(x))
                for hid in twos
            )
            curve_part = sorted(
                (c.name, c.word.signed_count(x), c.word.unsigned_count(x)) for c in curves
            )
            sig1[x] = (c1[x], tuple(handle_part), tuple(curve_part))
        new1 = _dense(sig1)
        sig2 = {}
        for h in hs.two_handles:
            letters = tuple((new1[g], s) for g, s in h.word.letters)
            rot = min(
                (letters[k:] + letters[:k] for k in range(len(letters))), default=()
            )
            handle_links = sorted(
                (c2[other], hs.lk(h.id, other)) for other in twos if other != h.id
            )
            curve_links = sorted((c.name, hs.lk(h.id, c.name)) for c in curves)
            sig2[h.id] = (c2[h.id], h.framing, rot, tuple(handle_links), tuple(curve_links))
        new2 = _dense(sig2)
        if new1 == c1 and new2 == c2:
            break
        c1, c2 = new1, new2
    return c1, c2


def _candidate_orders(ids: list[str], colors: dict[str, int]) -> list[list[str]]:
    """All orderings compatible with the color classes (small groups only)."""
    from itertools import permutations

    groups: dict[int, list[str]] = {}
    for x in ids:
        groups.setdefault(colors[x], []).append(x)
    keys = sorted(groups, key=lambda c: (len(groups[c]), c))
    total = 1
    for g in groups.values():
        f = 1
        for k in range(2, len(g) + 1):
            f *= k
        total *= f
    if total > 40320:
        raise ValueError("structure too symmetric for canonical ordering")
    orders: list[list[str]] = [[]]
    for key in keys:
        group = sorted(groups[key])
        orders = [o + list(p) for o in orders for p in permutations(group)]
    return orders


def _opt(value) -> tuple:
    return (0,) if value is None else (1, value)


def _signature_key(hs: HandleStructure) -> tuple:
    return (
        tuple(h.id for h in hs.one_handles),
        tuple(
            (h.id, h.framing, h.word.min_rotation().letters, _opt(h.gauss))
            for h in hs.two_handles
        ),
        hs.three_handle_count,
        tuple(sorted(hs.linking.nonzero_items().items())),
        tuple(
            (c.name, c.word.min_rotation().letters, _opt(c.framing), _opt(c.gauss))
            for c in hs.curves
        ),
    )


def canonical_form(hs: HandleStructure) -> HandleStructure:
    """Deterministic relabeling invariant under renaming and word rotation.

    1-handles become x1..xm and 2-handles h1..hk, ordered by a structural
    signature (ties resolved by trying each consistent ordering and
    keeping the least resulting encoding); words are rotated to their
    lexicographic minimum and curves are sorted by name.  Equality of
    canonical forms is the repo's notion of "same encoding".
    """
    require_valid(hs)
    c1, c2 = _refine_colors(hs)
    best = None
    best_key = None
    for order1 in _candidate_orders(list(hs.one_ids), c1):
        for order2 in _candidate_orders(list(hs.two_ids), c2):
            mapping = {x: f"x{i+1}" for i, x in enumerate(order1)}
            mapping.update({h: f"h{i+1}" for i, h in enumerate(order2)})
            two_map = {h.id: h for h in hs.two_handles}
            new_two = tuple(
                TwoHandle(
                    mapping[h],
                    two_map[h].framing,
                    Word(
                        (mapping[g], s) for g, s in two_map[h].word.letters
                    ).min_rotation(),
                    two_map[h].gauss,
                )
                for h in order2
            )
            new_curves = tuple(
                MarkedCurve(
                    c.name,
                    Word((mapping[g], s) for g, s in c.word.letters).min_rotation(),
                    c.framing,
                    c.gauss,
                )
                for c in sorted(hs.curves, key=lambda c: c.name)
            )
            links = {
                (mapping.get(a, a), mapping.get(b, b)): v
                for (a, b), v in hs.linking.nonzero_items().items()
            }
            for i, a in enumerate(order2):
                for b in order2[i + 1 :]:
                    links.setdefault(
                        tuple(sorted((mapping[a], mapping[b]))), hs.lk(a, b)
                    )
            candidate = HandleStructure(
                one_handles=tuple(OneHandle(mapping[x]) for x in order1),
                two_handles=new_two,
                three_handle_count=hs.three_handle_count,
                linking=LinkingTable(links),
                curves=new_curves,
            )
            key = _signature_key(candidate)
            if best_key is None or key < best_key:
                best, best_key = candidate, key
    assert best is not None
    return best


def same_encoding(a: HandleStructure, b: HandleStructure) -> bool:
    return canonical_form(a) == canonical_form(b)
