"""Legendrian fronts: validation, classical invariants, moves, Stein check.

A front is swept left to right as a list of events acting on a stack of
strands (slot 0 is the topmost).  Left cusps insert two adjacent
strands, right cusps merge two, crossings swap neighbours, and
1-handle passes record a strand threading a dotted circle in standard
form (entry and exit at the same matched slot, so a pass never changes
the strand count).

Conventions: at a crossing the strand of lesser slope is in front, so
the sign of a crossing between strands with sweep directions d_upper,
d_lower is their product.  tb = writhe - (number of right cusps);
rotation number = half the signed cusp imbalance.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .structures import HandleStructure
from .words import Word


@dataclass(frozen=True)
class LeftCusp:
    slot: int


@dataclass(frozen=True)
class RightCusp:
    slot: int


@dataclass(frozen=True)
class Crossing:
    slot: int


@dataclass(frozen=True)
class HandlePass:
    handle: str
    slot: int
    sign: int


FrontEvent = LeftCusp | RightCusp | Crossing | HandlePass


@dataclass(frozen=True)
class FrontDiagram:
    name: str
    events: tuple[FrontEvent, ...]
    orientations: tuple[int, ...] | None = None


@dataclass(frozen=True)
class FrontReport:
    violations: tuple[str, ...] = ()

    @property
    def is_valid(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        return "\n".join(self.violations) if self.violations else "ok"


class _Trace:
    """Resolved combinatorics of a front: segments, joins, components."""

    def __init__(self, front: FrontDiagram):
        self.front = front
        self.left_joins: list[tuple[int, int]] = []  # (upper, lower) newborn pair
        self.right_joins: list[tuple[int, int]] = []  # (upper, lower) dying pair
        self.crossings: list[tuple[int, int]] = []  # (upper, lower) pre-swap
        self.passes: list[tuple[int, str, int]] = []  # (segment, handle, declared sign)
        strands: list[int] = []
        next_id = 0
        for k, e in enumerate(front.events):
            if isinstance(e, LeftCusp):
                if not 0 <= e.slot <= len(strands):
                    raise ValueError(f"event {k}: left cusp slot {e.slot} out of range")
                strands[e.slot:e.slot] = [next_id, next_id + 1]
                self.left_joins.append((next_id, next_id + 1))
                next_id += 2
            elif isinstance(e, RightCusp):
                if not 0 <= e.slot < len(strands) - 1:
                    raise ValueError(
                        f"event {k}: right cusp slot {e.slot} strand underflow"
                    )
                self.right_joins.append((strands[e.slot], strands[e.slot + 1]))
                del strands[e.slot : e.slot + 2]
            elif isinstance(e, Crossing):
                if not 0 <= e.slot < len(strands) - 1:
                    raise ValueError(f"event {k}: crossing slot {e.slot} out of range")
                self.crossings.append((strands[e.slot], strands[e.slot + 1]))
                strands[e.slot], strands[e.slot + 1] = strands[e.slot + 1], strands[e.slot]
            elif isinstance(e, HandlePass):
                if not 0 <= e.slot < len(strands):
                    raise ValueError(f"event {k}: pass slot {e.slot} out of range")
                if e.sign not in (1, -1):
                    raise ValueError(f"event {k}: pass sign must be +1 or -1")
                self.passes.append((strands[e.slot], e.handle, e.sign))
            else:
                raise ValueError(f"event {k}: unknown event {e!r}")
        if strands:
            raise ValueError(f"front does not close up: {len(strands)} strands remain")
        self.segment_count = next_id
        self._resolve_components()
        self._orient()

    def _resolve_components(self) -> None:
        neighbour: dict[int, list[int]] = {s: [] for s in range(self.segment_count)}
        for a, b in self.left_joins + self.right_joins:
            neighbour[a].append(b)
            neighbour[b].append(a)
        component_of: dict[int, int] = {}
        components: list[list[int]] = []
        for seed in range(self.segment_count):
            if seed in component_of:
                continue
            index = len(components)
            stack, members = [seed], []
            component_of[seed] = index
            while stack:
                s = stack.pop()
                members.append(s)
                for t in neighbour[s]:
                    if t not in component_of:
                        component_of[t] = index
                        stack.append(t)
            components.append(sorted(members))
        self.component_of = component_of
        self.components = components

    def _orient(self) -> None:
        orientations = self.front.orientations or (1,) * len(self.components)
        if len(orientations) != len(self.components):
            raise ValueError(
                f"front has {len(self.components)} components but "
                f"{len(orientations)} orientations"
            )
        direction: dict[int, int] = {}
        right_partner = {}
        for a, b in self.right_joins:
            right_partner[a] = b
            right_partner[b] = a
        left_partner = {}
        for a, b in self.left_joins:
            left_partner[a] = b
            left_partner[b] = a
        for comp, members in enumerate(self.components):
            base = members[0]
            direction[base] = orientations[comp]
            frontier = [base]
            while frontier:
                s = frontier.pop()
                for partner in (right_partner[s], left_partner[s]):
                    if partner not in direction:
                        direction[partner] = -direction[s]
                        frontier.append(partner)
                    elif direction[partner] != -direction[s]:
                        raise ValueError("inconsistent orientation around a component")
        self.direction = direction

    # -- invariants --------------------------------------------------------

    def crossing_sign(self, upper: int, lower: int) -> int:
        return self.direction[upper] * self.direction[lower]

    def writhe(self, component: int | None = None) -> int:
        total = 0
        for upper, lower in self.crossings:
            if component is not None and (
                self.component_of[upper] != component
                or self.component_of[lower] != component
            ):
                continue
            total += self.crossing_sign(upper, lower)
        return total

    def right_cusp_count(self, component: int | None = None) -> int:
        return sum(
            1
            for a, _ in self.right_joins
            if component is None or self.component_of[a] == component
        )

    def cusp_imbalance(self, component: int | None = None) -> int:
        """(down cusps) - (up cusps); the arriving branch decides."""
        total = 0
        for upper, lower in self.right_joins:
            if component is not None and self.component_of[upper] != component:
                continue
            total += 1 if self.direction[upper] == 1 else -1
        for upper, lower in self.left_joins:
            if component is not None and self.component_of[upper] != component:
                continue
            total += 1 if self.direction[upper] == -1 else -1
        return total

    def passage_counts(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for segment, handle, sign in self.passes:
            counts[handle] = counts.get(handle, 0) + sign * self.direction[segment]
        return counts


def trace_front(front: FrontDiagram) -> _Trace:
    return _Trace(front)


def validate_front(front: FrontDiagram) -> FrontReport:
    """Structural violations; empty iff the front is well-formed."""
    try:
        trace_front(front)
    except ValueError as exc:
        return FrontReport((str(exc),))
    return FrontReport()


def component_count(front: FrontDiagram) -> int:
    return len(trace_front(front).components)


def _require_component(front: FrontDiagram, component: int | None) -> tuple[_Trace, int]:
    trace = trace_front(front)
    n = len(trace.components)
    if component is None:
        if n != 1:
            raise ValueError(
                f"front has {n} components; pass component=<index> to choose one"
            )
        return trace, 0
    if not 0 <= component < n:
        raise ValueError(f"component {component} out of range (front has {n})")
    return trace, component


def writhe(front: FrontDiagram) -> int:
    """Signed crossing count of the whole front."""
    return trace_front(front).writhe()


def thurston_bennequin(front: FrontDiagram, component: int | None = None) -> int:
    trace, comp = _require_component(front, component)
    return trace.writhe(comp) - trace.right_cusp_count(comp)


def rotation_number(front: FrontDiagram, component: int | None = None) -> int:
    trace, comp = _require_component(front, component)
    imbalance = trace.cusp_imbalance(comp)
    assert imbalance % 2 == 0
    return imbalance // 2


def front_passage_counts(front: FrontDiagram) -> dict[str, int]:
    """Net signed 1-handle passes, per handle id."""
    return trace_front(front).passage_counts()


# -- front moves ---------------------------------------------------------------


@dataclass(frozen=True)
class R3:
    """Triple-point move on three consecutive crossings."""

    pos: int


@dataclass(frozen=True)
class CuspSlide:
    """Slide a cusp past an adjacent strand (the Legendrian R2), creating
    or absorbing the two opposite crossings with the cusp's branches."""

    pos: int
    direction: str = "down"  # "up" | "down", used when expanding
    expand: bool = True


@dataclass(frozen=True)
class Swallowtail:
    """Create a zigzag with its crossing (the Legendrian R1); tb and r safe."""

    pos: int
    slot: int
    above: bool = False


@dataclass(frozen=True)
class SwallowtailRemove:
    pos: int


@dataclass(frozen=True)
class Stabilize:
    """Insert a plain zigzag: tb drops by one, r moves by one."""

    pos: int
    slot: int
    up: bool = False


FrontMove = R3 | CuspSlide | Swallowtail | SwallowtailRemove | Stabilize


def _strand_count_before(front: FrontDiagram, pos: int) -> int:
    count = 0
    for e in front.events[:pos]:
        if isinstance(e, LeftCusp):
            count += 2
        elif isinstance(e, RightCusp):
            count -= 2
    return count


def _rewrite(front: FrontDiagram, pos: int, old: int, new: list[FrontEvent]) -> FrontDiagram:
    events = front.events[:pos] + tuple(new) + front.events[pos + old :]
    out = FrontDiagram(front.name, events, front.orientations)
    report = validate_front(out)
    if not report.is_valid:
        raise ValueError(f"move produces an invalid front: {report}")
    return out


def apply_front_move(front: FrontDiagram, move: FrontMove) -> FrontDiagram:
    events = front.events
    if isinstance(move, R3):
        if move.pos + 3 > len(events):
            raise ValueError("triple-point move needs three events")
        window = events[move.pos : move.pos + 3]
        if not all(isinstance(e, Crossing) for e in window):
            raise ValueError("triple-point move needs three crossings")
        a, b, c = (e.slot for e in window)
        if a == c and b == a + 1:
            new = [Crossing(b), Crossing(a), Crossing(b)]
        elif a == c and b == a - 1:
            new = [Crossing(b), Crossing(a), Crossing(b)]
        else:
            raise ValueError("crossings do not form a triple point")
        return _rewrite(front, move.pos, 3, new)

    if isinstance(move, CuspSlide):
        if move.expand:
            if move.pos >= len(events):
                raise ValueError("no event at position")
            e = events[move.pos]
            s = getattr(e, "slot", None)
            if isinstance(e, LeftCusp):
                if move.direction == "up":
                    new = [LeftCusp(s - 1), Crossing(s), Crossing(s - 1)]
                else:
                    new = [LeftCusp(s + 1), Crossing(s), Crossing(s + 1)]
            elif isinstance(e, RightCusp):
                if move.direction == "up":
                    new = [Crossing(s - 1), Crossing(s), RightCusp(s - 1)]
                else:
                    new = [Crossing(s + 1), Crossing(s), RightCusp(s + 1)]
            else:
                raise ValueError("cusp slide must start on a cusp event")
            return _rewrite(front, move.pos, 1, new)
        if move.pos + 3 > len(events):
            raise ValueError("cusp-slide contraction needs three events")
        w = events[move.pos : move.pos + 3]
        if (
            isinstance(w[0], LeftCusp)
            and isinstance(w[1], Crossing)
            and isinstance(w[2], Crossing)
        ):
            a = w[0].slot
            if (w[1].slot, w[2].slot) == (a + 1, a):
                return _rewrite(front, move.pos, 3, [LeftCusp(a + 1)])
            if (w[1].slot, w[2].slot) == (a - 1, a):
                return _rewrite(front, move.pos, 3, [LeftCusp(a - 1)])
        if (
            isinstance(w[0], Crossing)
            and isinstance(w[1], Crossing)
            and isinstance(w[2], RightCusp)
        ):
            c = w[2].slot
            if (w[0].slot, w[1].slot) == (c, c + 1):
                return _rewrite(front, move.pos, 3, [RightCusp(c + 1)])
            if (w[0].slot, w[1].slot) == (c, c - 1):
                return _rewrite(front, move.pos, 3, [RightCusp(c - 1)])
        raise ValueError("events do not match a cusp-slide pattern")

    if isinstance(move, Swallowtail):
        s = move.slot
        if move.above:
            new = [LeftCusp(s + 1), Crossing(s), RightCusp(s + 1)]
        else:
            new = [LeftCusp(s), Crossing(s + 1), RightCusp(s)]
        return _rewrite(front, move.pos, 0, new)

    if isinstance(move, SwallowtailRemove):
        if move.pos + 3 > len(events):
            raise ValueError("swallowtail removal needs three events")
        w = events[move.pos : move.pos + 3]
        if (
            isinstance(w[0], LeftCusp)
            and isinstance(w[1], Crossing)
            and isinstance(w[2], RightCusp)
        ):
            s = w[0].slot
            if w[1].slot == s + 1 and w[2].slot == s:
                return _rewrite(front, move.pos, 3, [])
            if w[1].slot == s - 1 and w[2].slot == s:
                return _rewrite(front, move.pos, 3, [])
        raise ValueError("events do not match a swallowtail")

    if isinstance(move, Stabilize):
        s = move.slot
        if move.up:
            new = [LeftCusp(s), RightCusp(s + 1)]
        else:
            new = [LeftCusp(s + 1), RightCusp(s)]
        return _rewrite(front, move.pos, 0, new)

    raise ValueError(f"unknown front move {move!r}")


# -- Stein criterion -----------------------------------------------------------


@dataclass(frozen=True)
class SteinVerdict:
    handle: str
    framing: int
    tb: int
    ok: bool


@dataclass(frozen=True)
class SteinReport:
    verdicts: tuple[SteinVerdict, ...]
    standard_form: bool

    @property
    def passed(self) -> bool:
        return self.standard_form and all(v.ok for v in self.verdicts)

    def __str__(self) -> str:
        lines = [
            f"{v.handle}: framing {v.framing} vs tb-1 = {v.tb - 1}: "
            + ("ok" if v.ok else "FAIL")
            for v in self.verdicts
        ]
        lines.append(f"standard form: {'ok' if self.standard_form else 'FAIL'}")
        lines.append("stein: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines)


def stein_check(hs: HandleStructure, fronts: Mapping[str, FrontDiagram]) -> SteinReport:
    """Combinatorial Stein criterion: every 2-handle framed at tb - 1.

    Every 2-handle needs a front whose net 1-handle passes agree with its
    passage word abelianized; the diagram is in standard form when all
    passes reference declared 1-handles (matched entry/exit slots hold by
    construction of the pass events).
    """
    verdicts = []
    standard = True
    for h in hs.two_handles:
        if h.id not in fronts:
            raise ValueError(f"missing front for 2-handle {h.id!r}")
        front = fronts[h.id]
        counts = front_passage_counts(front)
        for handle in counts:
            if handle not in hs.one_ids:
                standard = False
        for x in hs.one_ids:
            want = h.word.signed_count(x)
            got = counts.get(x, 0)
            if want != got:
                raise ValueError(
                    f"passage mismatch for {h.id!r} through {x!r}: "
                    f"front {got}, word {want}"
                )
        tb = thurston_bennequin(front)
        verdicts.append(SteinVerdict(h.id, h.framing, tb, h.framing == tb - 1))
    return SteinReport(tuple(verdicts), standard)
