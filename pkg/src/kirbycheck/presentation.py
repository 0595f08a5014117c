"""Fundamental-group presentations and Tietze simplification.

Generators come from 1-handles, relators from 2-handle words.  The
simplifier is a deterministic greedy reducer; triviality is certified
one-sidedly by a replayable trace of elementary moves (never by
claiming nontriviality, which is undecidable in general).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal

from .linalg import AbelianGroup, IntegerMatrix, cokernel
from .structures import HandleStructure, require_valid
from .words import Word


def free_reduce(word: Word) -> Word:
    """Freely and cyclically reduce; the result is the unique reduced form."""
    return word.cyclic_reduced()


@dataclass(frozen=True)
class Presentation:
    """Finite presentation with cyclically reduced relators."""

    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def __post_init__(self):
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("duplicate generators")
        gens = set(self.generators)
        for r in self.relators:
            missing = r.generators() - gens
            if missing:
                raise ValueError(f"relator uses unknown generators {sorted(missing)}")
            if r != free_reduce(r):
                raise ValueError(f"relator {r.to_text()!r} is not cyclically reduced")

    @classmethod
    def reduced(cls, generators: Iterable[str], relators: Iterable[Word]) -> "Presentation":
        return cls(tuple(generators), tuple(free_reduce(r) for r in relators))

    @property
    def total_length(self) -> int:
        return sum(len(r) for r in self.relators)

    def is_empty(self) -> bool:
        return not self.generators and not self.relators

    def __str__(self) -> str:
        gens = ", ".join(self.generators)
        rels = ", ".join(r.to_text() or "1" for r in self.relators)
        return f"< {gens} | {rels} >"


def pi1_presentation(hs: HandleStructure) -> Presentation:
    """One generator per 1-handle, one relator per 2-handle; 3-handles add nothing."""
    require_valid(hs)
    return Presentation.reduced(hs.one_ids, (h.word for h in hs.two_handles))


def abelianization(p: Presentation) -> AbelianGroup:
    exponent_matrix = IntegerMatrix(
        [list(r.abelianized(p.generators)) for r in p.relators],
        cols=len(p.generators),
    )
    return cokernel(exponent_matrix)


# -- Tietze moves ------------------------------------------------------------
#
# A trace is a sequence of steps, each independently replayable:
#   ("drop", i)                    remove the empty relator at index i
#   ("kill", i, g)                 relator i contains generator g exactly once;
#                                  solve for g, substitute everywhere, drop both
#   ("fold", i, j, s, rot)         relator i *= rotated(relator j, rot)^s, reduced
# Indices always refer to the relator list at the time the step applies.

TietzeStep = tuple


def solve_for_generator(relator: Word, gen: str) -> Word:
    """The reduced word equal to ``gen`` when the relator has one gen-letter."""
    if relator.unsigned_count(gen) != 1:
        raise ValueError(f"relator does not contain {gen!r} exactly once")
    k = next(i for i, (g, _) in enumerate(relator.letters) if g == gen)
    rotated = relator.rotated(k)
    sign = rotated.letters[0][1]
    tail = Word(rotated.letters[1:])
    solved = tail.inverse() if sign > 0 else tail
    return solved.free_reduced()


def apply_step(p: Presentation, step: TietzeStep) -> Presentation:
    kind = step[0]
    relators = list(p.relators)
    if kind == "drop":
        _, i = step
        if relators[i]:
            raise ValueError(f"relator {i} is not empty")
        del relators[i]
        return Presentation(p.generators, tuple(relators))
    if kind == "kill":
        _, i, gen = step
        replacement = solve_for_generator(relators[i], gen)
        del relators[i]
        new_relators = tuple(free_reduce(r.substitute(gen, replacement)) for r in relators)
        gens = tuple(g for g in p.generators if g != gen)
        return Presentation(gens, new_relators)
    if kind == "fold":
        _, i, j, s, rot = step
        if i == j:
            raise ValueError("fold needs two distinct relators")
        factor = relators[j].rotated(rot)
        if s < 0:
            factor = factor.inverse()
        relators[i] = free_reduce(relators[i] * factor)
        return Presentation(p.generators, tuple(relators))
    raise ValueError(f"unknown Tietze step {kind!r}")


def replay_trace(p: Presentation, trace: Iterable[TietzeStep]) -> Presentation:
    for step in trace:
        p = apply_step(p, step)
    return p


def _best_kill(p: Presentation) -> tuple[TietzeStep, int] | None:
    """Cheapest generator-killing substitution, with its total-length delta."""
    best = None
    for i, r in enumerate(p.relators):
        for gen in sorted(r.generators()):
            if r.unsigned_count(gen) != 1:
                continue
            t = len(solve_for_generator(r, gen))
            occurrences = sum(
                rr.unsigned_count(gen) for k, rr in enumerate(p.relators) if k != i
            )
            delta = occurrences * (t - 1) - len(r)
            key = (delta, i, gen)
            if best is None or key < best[0]:
                best = (key, ("kill", i, gen), delta)
    if best is None:
        return None
    return best[1], best[2]


def _best_fold(p: Presentation) -> tuple[TietzeStep, int] | None:
    """Most length-reducing relator-by-relator multiplication, if any."""
    best = None
    for i, ri in enumerate(p.relators):
        if not ri:
            continue
        for j, rj in enumerate(p.relators):
            if i == j or not rj:
                continue
            for s in (1, -1):
                for rot in range(len(rj)):
                    factor = rj.rotated(rot)
                    if s < 0:
                        factor = factor.inverse()
                    new_len = len(free_reduce(ri * factor))
                    delta = new_len - len(ri)
                    if delta < 0:
                        key = (delta, i, j, s, rot)
                        if best is None or key < best[0]:
                            best = (key, ("fold", i, j, s, rot), delta)
    if best is None:
        return None
    return best[1], best[2]


def tietze_simplify(
    p: Presentation, budget: int = 10_000
) -> tuple[Presentation, list[TietzeStep]]:
    """Greedy deterministic simplification within a move budget.

    Empty relators are dropped first, then generator-killing
    substitutions (length-1 relators are the free case), then
    length-reducing relator folds.  Budget exhaustion returns the best
    presentation reached so far together with the full trace.
    """
    if budget < 0:
        raise ValueError("budget must be nonnegative")
    trace: list[TietzeStep] = []
    steps = 0
    while steps < budget:
        step = None
        for i, r in enumerate(p.relators):
            if not r:
                step = ("drop", i)
                break
        if step is None:
            kill = _best_kill(p)
            if kill is not None and kill[1] <= 0:
                step = kill[0]
        if step is None:
            fold = _best_fold(p)
            if fold is not None:
                step = fold[0]
        if step is None:
            kill = _best_kill(p)
            if kill is not None:
                step = kill[0]
        if step is None:
            break
        p = apply_step(p, step)
        trace.append(step)
        steps += 1
    return p, trace


@dataclass(frozen=True)
class TrivialityCertificate:
    status: Literal["trivial", "inconclusive"]
    trace: tuple[TietzeStep, ...]
    final: Presentation

    @property
    def is_trivial(self) -> bool:
        return self.status == "trivial"


def certify_trivial(p: Presentation, budget: int = 10_000) -> TrivialityCertificate:
    """One-sided triviality certificate: trivial only with a complete trace."""
    final, trace = tietze_simplify(p, budget)
    status = "trivial" if final.is_empty() else "inconclusive"
    return TrivialityCertificate(status, tuple(trace), final)
