"""Line-oriented text formats for structures, movies, fronts, and scripts,
plus Dowker-Thistlethwaite export of crossing-level encodings.

All formats share the same lexical rules: UTF-8, one statement per line,
'#' starts a comment, tokens are whitespace separated, and passage
letters are written ``id+`` / ``id-``.  Parse errors carry line numbers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .front import Crossing, FrontDiagram, FrontEvent, HandlePass, LeftCusp, RightCusp
from .movie import Band, Birth, Death, Isotopy, Movie, MovieEvent
from .moves import (
    Cancel12,
    Cancel23,
    DotToZero,
    Move,
    MoveScript,
    ReduceWord,
    RenameCurve,
    Slide,
    ZeroToDot,
)
from .structures import (
    HandleStructure,
    LinkingTable,
    MarkedCurve,
    OneHandle,
    TwoHandle,
)
from .words import Word


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


@dataclass
class _Lines:
    items: list[tuple[int, list[str], str]]

    @classmethod
    def split(cls, text: str) -> "_Lines":
        items = []
        for number, raw in enumerate(text.splitlines(), start=1):
            body = raw.split("#", 1)[0].strip()
            if body:
                items.append((number, body.split(), raw))
        return cls(items)


def _parse_int(token: str, line: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(line, f"{what} must be an integer, got {token!r}") from None


def _parse_framing(token: str, line: int) -> int:
    if not token.startswith("framing="):
        raise ParseError(line, f"expected framing=<int>, got {token!r}")
    return _parse_int(token[len("framing=") :], line, "framing")


def _parse_word(tokens: list[str], line: int) -> Word:
    letters = []
    for tok in tokens:
        if len(tok) < 2 or tok[-1] not in "+-":
            raise ParseError(line, f"bad letter {tok!r} (want e.g. 'x0+')")
        letters.append((tok[:-1], 1 if tok[-1] == "+" else -1))
    return Word(letters)


def _parse_gauss(tokens: list[str], line: int) -> tuple[int, ...]:
    values = tuple(_parse_int(t, line, "gauss entry") for t in tokens)
    for v in values:
        if v == 0:
            raise ParseError(line, "gauss entries must be nonzero signed labels")
    return values


def _quoted_tail(tokens: list[str]) -> str:
    text = " ".join(tokens)
    if text.startswith('"') and text.endswith('"') and len(text) >= 2:
        return text[1:-1]
    return text


# -- handle structures ---------------------------------------------------------


def parse_handle_text(text: str) -> tuple[str, HandleStructure]:
    """Parse a handle file; returns (name, structure).

    Referential problems are parse-time errors so that diagnostics carry
    line numbers.
    """
    name = ""
    ones: list[OneHandle] = []
    twos: dict[str, TwoHandle] = {}
    curves: dict[str, MarkedCurve] = {}
    order_two: list[str] = []
    order_curves: list[str] = []
    three = 0
    linking: dict[tuple[str, str], int] = {}
    for line, tokens, _ in _Lines.split(text).items:
        head, rest = tokens[0], tokens[1:]
        if head == "structure":
            if len(rest) != 1:
                raise ParseError(line, "structure takes exactly one name")
            name = rest[0]
        elif head == "onehandle":
            if len(rest) != 1:
                raise ParseError(line, "onehandle takes exactly one id")
            if any(o.id == rest[0] for o in ones):
                raise ParseError(line, f"duplicate 1-handle {rest[0]!r}")
            ones.append(OneHandle(rest[0]))
        elif head == "twohandle":
            if len(rest) != 2:
                raise ParseError(line, "twohandle takes <id> framing=<int>")
            hid = rest[0]
            if hid in twos:
                raise ParseError(line, f"duplicate 2-handle {hid!r}")
            twos[hid] = TwoHandle(hid, _parse_framing(rest[1], line))
            order_two.append(hid)
        elif head == "curve":
            if not rest:
                raise ParseError(line, "curve takes <name> [framing=<int>]")
            cname = rest[0]
            if cname in curves:
                raise ParseError(line, f"duplicate curve {cname!r}")
            framing = None
            if len(rest) == 2:
                framing = _parse_framing(rest[1], line)
            elif len(rest) > 2:
                raise ParseError(line, "curve takes <name> [framing=<int>]")
            curves[cname] = MarkedCurve(cname, Word(), framing)
            order_curves.append(cname)
        elif head == "word":
            if not rest:
                raise ParseError(line, "word takes <id> <letters...>")
            target, letters = rest[0], _parse_word(rest[1:], line)
            known = {o.id for o in ones}
            for gen in letters.generators():
                if gen not in known:
                    raise ParseError(line, f"unresolved generator {gen!r}")
            if target in twos:
                h = twos[target]
                twos[target] = TwoHandle(h.id, h.framing, letters, h.gauss)
            elif target in curves:
                c = curves[target]
                curves[target] = MarkedCurve(c.name, letters, c.framing, c.gauss)
            else:
                raise ParseError(line, f"word for unknown 2-handle or curve {target!r}")
        elif head == "gauss":
            if not rest:
                raise ParseError(line, "gauss takes <id> <signed labels...>")
            target, seq = rest[0], _parse_gauss(rest[1:], line)
            if target in twos:
                h = twos[target]
                twos[target] = TwoHandle(h.id, h.framing, h.word, seq)
            elif target in curves:
                c = curves[target]
                curves[target] = MarkedCurve(c.name, c.word, c.framing, seq)
            else:
                raise ParseError(line, f"gauss for unknown 2-handle or curve {target!r}")
        elif head == "threehandles":
            if len(rest) != 1:
                raise ParseError(line, "threehandles takes one count")
            three = _parse_int(rest[0], line, "3-handle count")
            if three < 0:
                raise ParseError(line, "3-handle count must be nonnegative")
        elif head == "lk":
            if len(rest) != 3:
                raise ParseError(line, "lk takes <id> <id> <int>")
            a, b, v = rest[0], rest[1], _parse_int(rest[2], line, "linking number")
            known = set(twos) | set(curves)
            for n in (a, b):
                if n not in known:
                    raise ParseError(line, f"lk references unknown name {n!r}")
            key = (a, b) if a <= b else (b, a)
            if key in linking and linking[key] != v:
                raise ParseError(line, f"asymmetric linking for {a!r}, {b!r}")
            linking[key] = v
        else:
            raise ParseError(line, f"unknown directive {head!r}")
    hs = HandleStructure(
        tuple(ones),
        tuple(twos[h] for h in order_two),
        three,
        LinkingTable(linking),
        tuple(curves[c] for c in order_curves),
    )
    return name, hs


def serialize_handle(hs: HandleStructure, name: str = "") -> str:
    lines = []
    if name:
        lines.append(f"structure {name}")
    for o in hs.one_handles:
        lines.append(f"onehandle {o.id}")
    for h in hs.two_handles:
        lines.append(f"twohandle {h.id} framing={h.framing}")
        if h.word:
            lines.append(f"word {h.id} {h.word.to_text()}")
        if h.gauss:
            lines.append(f"gauss {h.id} " + " ".join(str(v) for v in h.gauss))
    if hs.three_handle_count:
        lines.append(f"threehandles {hs.three_handle_count}")
    for c in hs.curves:
        if c.framing is None:
            lines.append(f"curve {c.name}")
        else:
            lines.append(f"curve {c.name} framing={c.framing}")
        if c.word:
            lines.append(f"word {c.name} {c.word.to_text()}")
        if c.gauss:
            lines.append(f"gauss {c.name} " + " ".join(str(v) for v in c.gauss))
    for (a, b), v in sorted(hs.linking.items()):
        lines.append(f"lk {a} {b} {v}")
    return "\n".join(lines) + "\n"


# -- movies --------------------------------------------------------------------


def parse_movie_text(text: str) -> Movie:
    name = ""
    core: str | None = None
    events: list[MovieEvent] = []
    final_name: str | None = None
    final_word = Word()
    final_framing: int | None = None
    final_gauss: tuple[int, ...] | None = None
    band_words: dict[str, Word] = {}
    links: list[tuple[int, str, str, int]] = []
    band_order: list[str] = []
    bands: dict[str, tuple[int, tuple[str, str], int]] = {}

    for line, tokens, _ in _Lines.split(text).items:
        head, rest = tokens[0], tokens[1:]
        if head == "movie":
            if len(rest) != 1:
                raise ParseError(line, "movie takes exactly one name")
            name = rest[0]
        elif head == "core":
            if len(rest) != 1:
                raise ParseError(line, "core takes exactly one generator id")
            core = rest[0]
        elif head == "birth":
            if len(rest) != 1:
                raise ParseError(line, "birth takes exactly one id")
            events.append(Birth(rest[0]))
        elif head == "band":
            if len(rest) != 4:
                raise ParseError(line, "band takes <id> <end> <end> framing=<int>")
            bid = rest[0]
            if bid in bands:
                raise ParseError(line, f"duplicate band {bid!r}")
            bands[bid] = (len(events), (rest[1], rest[2]), _parse_framing(rest[3], line))
            band_order.append(bid)
            events.append(None)  # placeholder, filled below
        elif head == "death":
            if len(rest) != 1:
                raise ParseError(line, "death takes exactly one id")
            events.append(Death(rest[0]))
        elif head == "isotopy":
            events.append(Isotopy(_quoted_tail(rest)))
        elif head == "word":
            if not rest:
                raise ParseError(line, "word takes <id> <letters...>")
            target, word = rest[0], _parse_word(rest[1:], line)
            if target in bands:
                band_words[target] = word
            elif final_name is not None and target == final_name:
                final_word = word
            else:
                raise ParseError(line, f"word for unknown band or final frame {target!r}")
        elif head == "lk":
            if len(rest) != 3:
                raise ParseError(line, "lk takes <a> <b> <int>")
            links.append((line, rest[0], rest[1], _parse_int(rest[2], line, "linking")))
        elif head == "final":
            if not rest:
                raise ParseError(line, "final takes <name> [framing=<int>]")
            final_name = rest[0]
            if len(rest) == 2:
                final_framing = _parse_framing(rest[1], line)
            elif len(rest) > 2:
                raise ParseError(line, "final takes <name> [framing=<int>]")
        elif head == "gauss":
            if len(rest) < 2 or final_name is None or rest[0] != final_name:
                raise ParseError(line, "gauss applies to the final frame")
            final_gauss = _parse_gauss(rest[1:], line)
        else:
            raise ParseError(line, f"unknown directive {head!r}")

    if core is None:
        raise ParseError(1, "movie needs a 'core <id>' line")
    if final_name is None:
        raise ParseError(1, "movie needs a 'final <name>' line")

    band_links: dict[str, list[tuple[str, int]]] = {b: [] for b in bands}
    final_links: list[tuple[str, int]] = []
    for line, a, b, v in links:
        if a in bands:
            band_links[a].append((b, v))
        elif b in bands:
            band_links[b].append((a, v))
        else:
            raise ParseError(line, f"lk must involve a band: {a!r}, {b!r}")
        if final_name in (a, b):
            final_links.append((a if b == final_name else b, v))
    for bid in band_order:
        pos, ends, framing = bands[bid]
        per_band = [
            (other, v) for other, v in band_links[bid] if other != final_name
        ]
        events[pos] = Band(bid, ends, band_words.get(bid, Word()), framing, tuple(per_band))

    return Movie(
        name,
        core,
        tuple(events),
        final_name,
        final_word,
        tuple(final_links),
        final_framing,
        final_gauss,
    )


def serialize_movie(movie: Movie) -> str:
    lines = [f"movie {movie.name}", f"core {movie.core}"]
    for e in movie.events:
        if isinstance(e, Birth):
            lines.append(f"birth {e.id}")
        elif isinstance(e, Band):
            lines.append(f"band {e.id} {e.ends[0]} {e.ends[1]} framing={e.framing}")
            if e.word:
                lines.append(f"word {e.id} {e.word.to_text()}")
            for other, v in e.links:
                lines.append(f"lk {e.id} {other} {v}")
        elif isinstance(e, Death):
            lines.append(f"death {e.id}")
        elif isinstance(e, Isotopy):
            lines.append(f'isotopy "{e.note}"')
    if movie.final_framing is None:
        lines.append(f"final {movie.final_name}")
    else:
        lines.append(f"final {movie.final_name} framing={movie.final_framing}")
    if movie.final_word:
        lines.append(f"word {movie.final_name} {movie.final_word.to_text()}")
    for other, v in movie.final_links:
        lines.append(f"lk {movie.final_name} {other} {v}")
    if movie.final_gauss:
        lines.append(
            f"gauss {movie.final_name} " + " ".join(str(v) for v in movie.final_gauss)
        )
    return "\n".join(lines) + "\n"


# -- fronts ---------------------------------------------------------------------


def parse_front_text(text: str) -> list[FrontDiagram]:
    """Parse one or more front blocks, each opened by ``front <name>``."""
    fronts: list[FrontDiagram] = []
    name: str | None = None
    events: list[FrontEvent] = []
    orientations: tuple[int, ...] | None = None

    def flush(line: int):
        nonlocal name, events, orientations
        if name is None:
            if events:
                raise ParseError(line, "events before any 'front <name>' header")
            return
        fronts.append(FrontDiagram(name, tuple(events), orientations))
        name, events, orientations = None, [], None

    last = 1
    for line, tokens, _ in _Lines.split(text).items:
        last = line
        head, rest = tokens[0], tokens[1:]
        if head == "front":
            flush(line)
            if len(rest) != 1:
                raise ParseError(line, "front takes exactly one name")
            name = rest[0]
        elif head == "orient":
            if not rest or any(t not in "+-" for t in rest):
                raise ParseError(line, "orient takes + or - per component")
            orientations = tuple(1 if t == "+" else -1 for t in rest)
        elif head in ("lcusp", "rcusp", "cross"):
            if len(rest) != 1:
                raise ParseError(line, f"{head} takes exactly one slot")
            slot = _parse_int(rest[0], line, "slot")
            if slot < 0:
                raise ParseError(line, f"negative slot {slot}")
            events.append(
                {"lcusp": LeftCusp, "rcusp": RightCusp, "cross": Crossing}[head](slot)
            )
        elif head == "pass":
            if len(rest) != 3 or rest[2] not in "+-":
                raise ParseError(line, "pass takes <1-handle> <slot> <+|->")
            slot = _parse_int(rest[1], line, "slot")
            if slot < 0:
                raise ParseError(line, f"negative slot {slot}")
            events.append(HandlePass(rest[0], slot, 1 if rest[2] == "+" else -1))
        else:
            raise ParseError(line, f"unknown directive {head!r}")
    flush(last)
    return fronts


def serialize_front(front: FrontDiagram) -> str:
    lines = [f"front {front.name}"]
    if front.orientations:
        lines.append("orient " + " ".join("+" if o > 0 else "-" for o in front.orientations))
    for e in front.events:
        if isinstance(e, LeftCusp):
            lines.append(f"lcusp {e.slot}")
        elif isinstance(e, RightCusp):
            lines.append(f"rcusp {e.slot}")
        elif isinstance(e, Crossing):
            lines.append(f"cross {e.slot}")
        elif isinstance(e, HandlePass):
            lines.append(f"pass {e.handle} {e.slot} {'+' if e.sign > 0 else '-'}")
    return "\n".join(lines) + "\n"


# -- move scripts -----------------------------------------------------------------


def parse_script_text(text: str) -> MoveScript:
    name = ""
    provenance = ""
    moves: list[Move] = []
    pending_rethreads: dict[str, Word] | None = None

    def close_zerotodot():
        nonlocal pending_rethreads
        if pending_rethreads is not None and moves:
            last = moves[-1]
            assert isinstance(last, ZeroToDot)
            moves[-1] = ZeroToDot(
                last.two_handle,
                last.new_id,
                tuple(pending_rethreads.items()),
                last.certificate_note,
            )
        pending_rethreads = None

    for line, tokens, _ in _Lines.split(text).items:
        head, rest = tokens[0], tokens[1:]
        if head == "rethread":
            if pending_rethreads is None:
                raise ParseError(line, "rethread outside a zerotodot block")
            if not rest:
                raise ParseError(line, "rethread takes <id> <letters...>")
            pending_rethreads[rest[0]] = _parse_word(rest[1:], line)
            continue
        close_zerotodot()
        if head == "script":
            if len(rest) != 1:
                raise ParseError(line, "script takes exactly one name")
            name = rest[0]
        elif head == "provenance":
            provenance = _quoted_tail(rest)
        elif head == "slide":
            if len(rest) < 3:
                raise ParseError(line, "slide takes <slider> <over> <+1|-1> [conj <letters...>]")
            sign = _parse_int(rest[2], line, "slide sign")
            conj = Word()
            if len(rest) > 3:
                if rest[3] != "conj":
                    raise ParseError(line, "expected 'conj' before conjugator letters")
                conj = _parse_word(rest[4:], line)
            moves.append(Slide(rest[0], rest[1], sign, conj))
        elif head == "cancel12":
            if len(rest) != 2:
                raise ParseError(line, "cancel12 takes <1-handle> <2-handle>")
            moves.append(Cancel12(rest[0], rest[1]))
        elif head == "cancel23":
            if len(rest) != 1:
                raise ParseError(line, "cancel23 takes <2-handle>")
            moves.append(Cancel23(rest[0]))
        elif head == "dottozero":
            if len(rest) != 2:
                raise ParseError(line, "dottozero takes <1-handle> <new 2-handle id>")
            moves.append(DotToZero(rest[0], rest[1]))
        elif head == "zerotodot":
            if len(rest) < 2:
                raise ParseError(line, "zerotodot takes <2-handle> <new 1-handle id> [note ...]")
            note = ""
            if len(rest) > 2:
                if rest[2] != "note":
                    raise ParseError(line, "expected 'note' after the new id")
                note = _quoted_tail(rest[3:])
            moves.append(ZeroToDot(rest[0], rest[1], (), note))
            pending_rethreads = {}
        elif head == "reduce":
            if len(rest) != 1:
                raise ParseError(line, "reduce takes <id>")
            moves.append(ReduceWord(rest[0]))
        elif head == "renamecurve":
            if len(rest) != 2:
                raise ParseError(line, "renamecurve takes <old> <new>")
            moves.append(RenameCurve(rest[0], rest[1]))
        else:
            raise ParseError(line, f"unknown directive {head!r}")
    close_zerotodot()
    return MoveScript(name, tuple(moves), provenance)


def serialize_script(script: MoveScript) -> str:
    lines = [f"script {script.name}"]
    if script.provenance:
        lines.append(f'provenance "{script.provenance}"')
    for m in script.moves:
        if isinstance(m, Slide):
            base = f"slide {m.slider} {m.over} {m.sign:+d}"
            if m.conjugator:
                base += f" conj {m.conjugator.to_text()}"
            lines.append(base)
        elif isinstance(m, Cancel12):
            lines.append(f"cancel12 {m.one_handle} {m.two_handle}")
        elif isinstance(m, Cancel23):
            lines.append(f"cancel23 {m.two_handle}")
        elif isinstance(m, DotToZero):
            lines.append(f"dottozero {m.one_handle} {m.new_id}")
        elif isinstance(m, ZeroToDot):
            note = f' note "{m.certificate_note}"' if m.certificate_note else ""
            lines.append(f"zerotodot {m.two_handle} {m.new_id}{note}")
            for target, word in m.passage_words:
                lines.append(f"rethread {target} {word.to_text()}")
        elif isinstance(m, ReduceWord):
            lines.append(f"reduce {m.target}")
        elif isinstance(m, RenameCurve):
            lines.append(f"renamecurve {m.old} {m.new}")
    return "\n".join(lines) + "\n"


# -- Dowker-Thistlethwaite export ------------------------------------------------


def _gauss_of(hs: HandleStructure, name: str) -> tuple[int, ...]:
    for h in hs.two_handles:
        if h.id == name:
            if h.gauss is None:
                raise ValueError(f"export requires crossing-level encoding on {name!r}")
            return h.gauss
    for c in hs.curves:
        if c.name == name:
            if c.gauss is None:
                raise ValueError(f"export requires crossing-level encoding on {name!r}")
            return c.gauss
    raise KeyError(f"no 2-handle or curve named {name!r}")


def _check_gauss_link(components: list[tuple[int, ...]]) -> None:
    seen: dict[int, list[int]] = {}
    for seq in components:
        for entry in seq:
            seen.setdefault(abs(entry), []).append(entry)
    for label, entries in sorted(seen.items()):
        if len(entries) != 2:
            raise ValueError(f"crossing {label} appears {len(entries)} times, want 2")
        if entries[0] * entries[1] >= 0:
            raise ValueError(f"crossing {label} needs one over and one under passage")


def export_dt(hs: HandleStructure, names: list[str]) -> str:
    """DT text of the link formed by the named components' Gauss data.

    One header line names the components; the code line lists, for the
    odd passage numbers in order, the partner even label, negated when
    the odd passage runs under.  Components are separated by ' / '.
    Starting points and directions are searched so that every crossing
    receives one odd and one even number.
    """
    components = [_gauss_of(hs, n) for n in names]
    _check_gauss_link(components)
    total = sum(len(seq) for seq in components)

    def assignments(index: int, chosen: list[tuple[int, int]]):
        if index == len(components):
            yield list(chosen)
            return
        n = len(components[index])
        for start in range(max(n, 1)):
            for direction in (1, -1):
                chosen.append((start, direction))
                yield from assignments(index + 1, chosen)
                chosen.pop()
                if n == 0:
                    break
            if n == 0:
                break

    for choice in assignments(0, []):
        numbering: dict[int, list[tuple[int, int]]] = {}
        position = 1
        ok = True
        for seq, (start, direction) in zip(components, choice):
            n = len(seq)
            for k in range(n):
                entry = seq[(start + direction * k) % n]
                numbering.setdefault(abs(entry), []).append((position, entry))
                position += 1
        for label, passages in numbering.items():
            if (passages[0][0] + passages[1][0]) % 2 == 0:
                ok = False
                break
        if not ok:
            continue
        partner: dict[int, int] = {}
        sign_at: dict[int, int] = {}
        for label, passages in numbering.items():
            (p1, e1), (p2, e2) = passages
            partner[p1], partner[p2] = p2, p1
            sign_at[p1] = 1 if e1 > 0 else -1
            sign_at[p2] = 1 if e2 > 0 else -1
        segments = []
        position = 1
        for seq in components:
            odds = [p for p in range(position, position + len(seq)) if p % 2 == 1]
            entries = [partner[p] * sign_at[p] for p in odds]
            segments.append(" ".join(str(v) for v in entries))
            position += len(seq)
        header = "dt " + " ".join(names)
        return header + "\n" + " / ".join(segments) + "\n"
    raise ValueError("no valid odd/even numbering exists for this component order")


def parse_dt(text: str) -> tuple[list[str], list[list[int]]]:
    lines = [l for l in text.splitlines() if l.strip()]
    if not lines or not lines[0].startswith("dt "):
        raise ParseError(1, "DT text must start with a 'dt <names...>' header")
    names = lines[0].split()[1:]
    if len(lines) < 2:
        body = ""
    else:
        body = lines[1]
    segments = [seg.strip() for seg in body.split("/")]
    codes = [[int(t) for t in seg.split()] if seg else [] for seg in segments]
    return names, codes


def dt_to_gauss(codes: list[list[int]]) -> list[tuple[int, ...]]:
    """Reconstruct over/under Gauss sequences (labels by first appearance)."""
    sizes = [2 * len(c) for c in codes]
    over: dict[int, bool] = {}
    partner: dict[int, int] = {}
    position = 1
    for code in codes:
        odds = [p for p in range(position, position + 2 * len(code)) if p % 2 == 1]
        for p, entry in zip(odds, code):
            q = abs(entry)
            partner[p], partner[q] = q, p
            over[p] = entry > 0
            over[q] = entry < 0
        position += 2 * len(code)
    label_of: dict[int, int] = {}
    next_label = 1
    sequences = []
    position = 1
    for size in sizes:
        seq = []
        for p in range(position, position + size):
            key = min(p, partner[p])
            if key not in label_of:
                label_of[key] = next_label
                next_label += 1
            seq.append(label_of[key] if over[p] else -label_of[key])
        sequences.append(tuple(seq))
        position += size
    return sequences


def normalize_gauss(components: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Renumber crossing labels by first appearance, keeping over/under marks."""
    label_of: dict[int, int] = {}
    next_label = 1
    out = []
    for seq in components:
        renamed = []
        for entry in seq:
            if abs(entry) not in label_of:
                label_of[abs(entry)] = next_label
                next_label += 1
            renamed.append(label_of[abs(entry)] * (1 if entry > 0 else -1))
        out.append(tuple(renamed))
    return out


def gauss_equivalent(a: list[tuple[int, ...]], b: list[tuple[int, ...]]) -> bool:
    """Same Gauss data up to crossing relabeling and per-component rotation.

    DT numbering is free to pick each component's starting point, so a
    round trip through DT text reproduces the sequences only up to
    rotation; this is the matching comparison.
    """
    if [len(s) for s in a] != [len(s) for s in b]:
        return False

    def keys(components):
        def rotations(index, acc):
            if index == len(components):
                yield normalize_gauss(list(acc))
                return
            seq = components[index]
            for k in range(max(len(seq), 1)):
                acc.append(seq[k:] + seq[:k])
                yield from rotations(index + 1, acc)
                acc.pop()

        return {tuple(map(tuple, v)) for v in rotations(0, [])}

    return bool(keys(a) & keys(b))
