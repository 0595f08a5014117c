"""Movies of concordances, their complements, doubling, and gluing.

A movie is a certified sequence of link frames between the core circle
and a knot: births introduce unknots, bands merge them into the moving
knot, and each band declares the passage word and linking data of its
dual 2-handle in the complement (that data is read off a figure by the
transcriber, then every derivable consequence is checked here).

Building the complement bottom-up: carving the core gives one dotted
circle, each birth carves another, and each band contributes a 2-handle
with the declared word.  Doubling attaches a 0-framed meridian circle
for every 2-handle plus one 3-handle per band; a product certificate
then asks a replayed cancellation script to empty the structure down to
a single dotted circle with both endpoint cores still generating.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .homology import boundary_h1, curve_generates_h1, euler_characteristic, homology
from .linalg import Z, ZERO_GROUP, cokernel, generates_cokernel
from .moves import AuditReport, MoveScript, replay_script
from .structures import (
    HandleStructure,
    LinkingTable,
    MarkedCurve,
    OneHandle,
    TwoHandle,
    curve_class,
    passage_matrix,
    require_valid,
    validate,
)
from .words import Word

CORE = "core"
CORE_TOP = "core_top"
MERIDIAN = "meridian"


@dataclass(frozen=True)
class Birth:
    id: str

    def describe(self) -> str:
        return f"birth {self.id}"


@dataclass(frozen=True)
class Band:
    """A band joining two frame components, with its dual-handle data."""

    id: str
    ends: tuple[str, str]
    word: Word = field(default_factory=Word)
    framing: int = 0
    links: tuple[tuple[str, int], ...] = ()

    def describe(self) -> str:
        return f"band {self.id} joining {self.ends[0]},{self.ends[1]}"


@dataclass(frozen=True)
class Death:
    id: str

    def describe(self) -> str:
        return f"death {self.id}"


@dataclass(frozen=True)
class Isotopy:
    note: str = ""

    def describe(self) -> str:
        return f"isotopy ({self.note})"


MovieEvent = Birth | Band | Death | Isotopy


@dataclass(frozen=True)
class Movie:
    """Frames run from the core circle (initial) to the knot (final)."""

    name: str
    core: str
    events: tuple[MovieEvent, ...]
    final_name: str
    final_word: Word = field(default_factory=Word)
    final_links: tuple[tuple[str, int], ...] = ()
    final_framing: int | None = None
    final_gauss: tuple[int, ...] | None = None

    @property
    def births(self) -> tuple[Birth, ...]:
        return tuple(e for e in self.events if isinstance(e, Birth))

    @property
    def bands(self) -> tuple[Band, ...]:
        return tuple(e for e in self.events if isinstance(e, Band))


@dataclass(frozen=True)
class MovieReport:
    violations: tuple[str, ...] = ()

    @property
    def is_valid(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        return "\n".join(self.violations) if self.violations else "ok"


def validate_movie(movie: Movie) -> MovieReport:
    """Event ordering, component bookkeeping, and band complement data."""
    violations: list[str] = []
    components = {movie.core}
    born: set[str] = set()
    for e in movie.events:
        if isinstance(e, Birth):
            if e.id in components or e.id in born:
                violations.append(f"birth reuses id {e.id!r}")
            else:
                components.add(e.id)
                born.add(e.id)
        elif isinstance(e, Band):
            a, b = e.ends
            for end in (a, b):
                if end not in components:
                    violations.append(f"band {e.id!r} references unborn component {end!r}")
            if a == b:
                violations.append(f"band {e.id!r} would split {a!r}; splits are not supported")
            elif a in components and b in components:
                components.discard(b)
            for gen in sorted(e.word.generators()):
                if gen != movie.core and gen not in born:
                    violations.append(
                        f"band {e.id!r} complement word uses unborn generator {gen!r}"
                    )
        elif isinstance(e, Death):
            if e.id not in components:
                violations.append(f"death of missing component {e.id!r}")
            else:
                components.discard(e.id)
    if len(components) != 1:
        violations.append(
            f"final frame must be a single component, got {sorted(components)}"
        )
    band_ids = [e.id for e in movie.bands]
    if len(set(band_ids)) != len(band_ids):
        violations.append("duplicate band ids")
    for gen in sorted(movie.final_word.generators()):
        if gen != movie.core and gen not in born:
            violations.append(f"final frame word uses unknown generator {gen!r}")
    return MovieReport(tuple(violations))


def complement_structure(movie: Movie) -> HandleStructure:
    """Handle decomposition of the movie's complement in the product.

    One dotted circle for the core plus one per birth; one declared
    2-handle per band; marked curves: the final knot (with the movie's
    declared word/links), a meridian (empty word, nullhomologous), and
    the core itself.
    """
    report = validate_movie(movie)
    if not report.is_valid:
        raise ValueError("invalid movie: " + "; ".join(report.violations))
    births = movie.births
    bands = movie.bands
    deaths = [e for e in movie.events if isinstance(e, Death)]
    if deaths:
        raise ValueError("complement construction needs a genus-zero movie (no deaths)")
    if len(births) != len(bands):
        raise ValueError(
            f"complement construction needs equal births and bands, got "
            f"{len(births)} births, {len(bands)} bands"
        )
    if {b.id for b in bands} & ({movie.core} | {b.id for b in births}):
        raise ValueError("band ids must not collide with birth or core ids")
    ones = [OneHandle(movie.core)] + [OneHandle(b.id) for b in births]
    twos = [TwoHandle(b.id, b.framing, b.word) for b in bands]

    linking: dict[tuple[str, str], int] = {}
    band_ids = {b.id for b in bands}
    curve_names = {movie.final_name, CORE, MERIDIAN}
    for b in bands:
        for other, v in b.links:
            if other in band_ids or other in curve_names:
                linking[tuple(sorted((b.id, other)))] = v
            else:
                raise ValueError(f"band {b.id!r} declares linking with unknown {other!r}")
    for i, a in enumerate(bands):
        for b in bands[i + 1 :]:
            linking.setdefault(tuple(sorted((a.id, b.id))), 0)
    for name, v in movie.final_links:
        if name not in band_ids:
            raise ValueError(f"final frame declares linking with unknown band {name!r}")
        linking[tuple(sorted((movie.final_name, name)))] = v

    curves = [
        MarkedCurve(
            movie.final_name, movie.final_word, movie.final_framing, movie.final_gauss
        ),
        MarkedCurve(MERIDIAN, Word()),
        MarkedCurve(CORE, Word([(movie.core, 1)])),
    ]
    hs = HandleStructure(ones, twos, 0, LinkingTable(linking), curves)
    require_valid(hs)
    return hs


def complement_shape(hs: HandleStructure) -> str | None:
    """Core generator id when hs looks like a complement structure."""
    try:
        core = hs.curve(CORE)
    except KeyError:
        return None
    if len(core.word) != 1 or core.word.letters[0][1] != 1:
        return None
    gen = core.word.letters[0][0]
    if gen not in hs.one_ids:
        return None
    if len(hs.one_handles) != len(hs.two_handles) + 1:
        return None
    return gen


def double(hs: HandleStructure) -> HandleStructure:
    """Stack the complement with its mirror.

    Adds one 0-framed meridian 2-handle per original 2-handle (empty
    word, unit linking with its partner, zero elsewhere) and one
    3-handle per band, plus the top endpoint core curve.
    """
    gen = complement_shape(hs)
    if gen is None:
        raise ValueError("structure does not have the complement shape")
    m = len(hs.two_handles)
    duals = []
    changes: dict[tuple[str, str], int] = {}
    for h in hs.two_handles:
        dual_id = h.id + "*"
        if dual_id in hs.two_ids or dual_id in hs.curve_names:
            raise ValueError(f"dual id {dual_id!r} already in use")
        duals.append(TwoHandle(dual_id, 0, Word()))
        changes[(dual_id, h.id)] = 1
        for other in hs.two_ids:
            if other != h.id:
                changes.setdefault(tuple(sorted((dual_id, other))), 0)
    for i, a in enumerate(duals):
        for b in duals[i + 1 :]:
            changes[(a.id, b.id)] = 0
    if CORE_TOP in hs.curve_names:
        raise ValueError("structure already has a top core curve")
    top = MarkedCurve(CORE_TOP, Word([(gen, 1)]))
    return hs.replace(
        two_handles=hs.two_handles + tuple(duals),
        three_handle_count=hs.three_handle_count + m,
        curves=hs.curves + (top,),
        linking=hs.linking.updated(changes),
    )


@dataclass(frozen=True)
class ProductCertificate:
    """Verdict of a doubled complement cancelling to a product."""

    passed: bool
    script_name: str
    final_summary: str
    failures: tuple[str, ...]
    audit: AuditReport
    final_structure: HandleStructure

    def __str__(self) -> str:
        head = "PASS" if self.passed else "FAIL"
        lines = [f"{head}: {self.final_summary}"]
        lines.extend(f"  - {f}" for f in self.failures)
        return "\n".join(lines)


def verify_product(hs_doubled: HandleStructure, script: MoveScript) -> ProductCertificate:
    """Replay the cancellation script and certify the product criterion.

    The certificate passes iff every move applies, the final structure is
    a single 1-handle with no 2- or 3-handles, and both endpoint core
    curves still have generating classes.
    """
    final, audit = replay_script(hs_doubled, script)
    failures: list[str] = []
    if not audit.ok:
        failures.append(audit.first_error or "script failed")
    if len(final.one_handles) != 1:
        failures.append(f"expected one 1-handle, found {len(final.one_handles)}")
    if final.two_handles:
        failures.append(f"{len(final.two_handles)} 2-handles remain")
    if final.three_handle_count:
        failures.append(f"{final.three_handle_count} 3-handles remain")
    for name in (CORE, CORE_TOP):
        if name not in final.curve_names:
            failures.append(f"endpoint curve {name!r} missing")
            continue
        try:
            vec = curve_class(final, name)
        except (KeyError, ValueError) as exc:
            failures.append(f"endpoint curve {name!r}: {exc}")
            continue
        if not generates_cokernel(passage_matrix(final), vec):
            failures.append(f"endpoint curve {name!r} does not generate H1")
    summary = (
        f"{len(final.one_handles)} one-handle(s), {len(final.two_handles)} two-handle(s), "
        f"{final.three_handle_count} three-handle(s) after script {script.name!r}"
    )
    return ProductCertificate(not failures, script.name, summary, tuple(failures), audit, final)


def glue_along_curve(
    base: HandleStructure,
    curve_name: str,
    comp: HandleStructure,
    notes: list[str] | None = None,
) -> HandleStructure:
    """Glue a concordance complement onto a framed marked curve of the base.

    The complement's core generator is identified with the curve: every
    passage through the core becomes the curve's passage word, linking
    against base handles is mediated by the curve's linking row, and the
    curve's framing annotation contributes self-linking between parallel
    strands.  The complement's knot (and its meridian) become marked
    curves of the result; base handles are untouched.
    """
    gamma = base.curve(curve_name)
    if gamma.framing is None:
        raise ValueError(f"curve {curve_name!r} has no framing annotation")
    gen = complement_shape(comp)
    if gen is None:
        raise ValueError("complement lacks the core marker")
    require_valid(base)
    require_valid(comp)

    rename: dict[str, str] = {}
    taken = set(base.one_ids) | set(base.two_ids) | set(base.curve_names)
    for name in list(comp.one_ids) + list(comp.two_ids) + list(comp.curve_names):
        new = name
        while new in taken:
            new = new + "'"
        rename[name] = new
        taken.add(new)

    gamma_word = gamma.word
    fr = gamma.framing
    counts: dict[str, int] = {}
    for name in list(comp.two_ids) + list(comp.curve_names):
        counts[name] = comp.word_of(name).signed_count(gen)

    def spliced(word: Word) -> Word:
        out = []
        for g, s in word.letters:
            if g == gen:
                out.extend(gamma_word.letters if s > 0 else gamma_word.inverse().letters)
            else:
                out.append((rename[g], s))
        return Word(out)

    new_ones = base.one_handles + tuple(
        OneHandle(rename[o.id]) for o in comp.one_handles if o.id != gen
    )
    new_twos = list(base.two_handles)
    changes: dict[tuple[str, str], int] = dict()

    def record(a: str, b: str, value: int, declare: bool) -> None:
        if value or declare:
            changes[(a, b)] = value

    for h in comp.two_handles:
        n = counts[h.id]
        framing = h.framing + n * n * fr
        new_twos.append(TwoHandle(rename[h.id], framing, spliced(h.word), h.gauss))
        if notes is not None and n:
            notes.append(
                f"{h.id} -> {rename[h.id]}: framing {h.framing} + {n}^2*{fr} = {framing}"
            )
        for k in base.two_ids:
            record(rename[h.id], k, n * base.lk(curve_name, k), declare=True)
        for k in base.curve_names:
            if k != curve_name:
                record(rename[h.id], k, n * base.lk(curve_name, k), declare=False)
        record(rename[h.id], curve_name, n * fr, declare=False)
    for i, a in enumerate(comp.two_handles):
        for b in list(comp.two_handles)[i + 1 :]:
            record(
                rename[a.id],
                rename[b.id],
                comp.lk(a.id, b.id) + counts[a.id] * counts[b.id] * fr,
                declare=True,
            )

    new_curves = list(base.curves)
    for c in comp.curves:
        if c.name == CORE:
            continue
        n = counts[c.name]
        framing = None if c.framing is None else c.framing + n * n * fr
        new_curves.append(MarkedCurve(rename[c.name], spliced(c.word), framing, c.gauss))
        for k in base.two_ids:
            record(rename[c.name], k, n * base.lk(curve_name, k), declare=False)
        for k in base.curve_names:
            if k != curve_name:
                record(rename[c.name], k, n * base.lk(curve_name, k), declare=False)
        record(rename[c.name], curve_name, n * fr, declare=False)
        for h in comp.two_handles:
            record(
                rename[c.name],
                rename[h.id],
                comp.lk(c.name, h.id) + n * counts[h.id] * fr,
                declare=False,
            )

    glued = HandleStructure(
        new_ones,
        tuple(new_twos),
        base.three_handle_count + comp.three_handle_count,
        base.linking.updated(changes),
        tuple(new_curves),
    )
    require_valid(glued)
    return glued


@dataclass(frozen=True)
class CobordismReport:
    passed: bool
    details: tuple[str, ...]

    def __str__(self) -> str:
        head = "PASS" if self.passed else "FAIL"
        return "\n".join([head] + [f"  - {d}" for d in self.details])


def homology_cobordism_check(
    hs: HandleStructure, endpoints: tuple[Iterable[str], Iterable[str]]
) -> CobordismReport:
    """Do both endpoint inclusions hit all of H1?

    Each endpoint is a set of marked curves; the check is that their
    classes together generate H1 of the glued structure.
    """
    details: list[str] = []
    passed = True
    pm = passage_matrix(hs)
    for side, names in zip(("first", "second"), endpoints):
        names = list(names)
        try:
            vectors = [curve_class(hs, n) for n in names]
        except KeyError as exc:
            details.append(f"{side} endpoint: {exc}")
            passed = False
            continue
        quotient = cokernel(pm.stack_rows(vectors))
        if quotient.is_trivial:
            details.append(f"{side} endpoint {names} generates H1")
        else:
            details.append(
                f"{side} endpoint {names} misses H1 (quotient {quotient})"
            )
            passed = False
    return CobordismReport(passed, tuple(details))


def check_complement_invariants(hs: HandleStructure) -> list[str]:
    """Violations of the facts every concordance complement must satisfy.

    H* must match the solid-torus product (Z, Z, 0), H1 must be generated
    by the core, and the Euler characteristic must vanish.
    """
    problems = []
    h0, h1, h2 = homology(hs)
    if h1 != Z:
        problems.append(f"H1 = {h1}, want Z")
    if h2 != ZERO_GROUP:
        problems.append(f"H2 = {h2}, want 0")
    if not curve_generates_h1(hs, CORE):
        problems.append("core class does not generate H1")
    if euler_characteristic(hs) != 0:
        problems.append(f"Euler characteristic {euler_characteristic(hs)}, want 0")
    try:
        bdry = boundary_h1(hs)
    except ValueError as exc:
        problems.append(str(exc))
    else:
        if bdry != Z:
            problems.append(f"boundary H1 = {bdry}, want Z")
    return problems
