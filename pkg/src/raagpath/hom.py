"""The homomorphism a graph map induces between graph groups, pulling each
generator back to the ordered product of its preimages, plus the bounded
searches built on it: survival violations and kernel elements.

The induced homomorphism runs against the direction of the graph map: a map
into a graph turns words over the target graph into words over the source.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BadParameter, GraphMismatch
from .graph import Graph, make_order
from .morphism import GraphMap
from .paths import PathSeq
from .words import (
    Letter,
    Word,
    _append_ok,
    canonical_word,
    enumerate_reduced_words,
    is_reduced,
    is_trivial,
    length_elem,
    letter_key,
    support_elem,
)


@dataclass(frozen=True)
class OrderedMap:
    """A graph map together with a total order on its domain vertices; the
    order fixes how each fiber is written out as a product (the preimages of
    one vertex are pairwise non-adjacent, so any order gives the same
    element, but words need a convention)."""

    map: GraphMap
    domain_order: tuple[str, ...]


def make_ordered_map(f: GraphMap, domain_order: Sequence[str] | None = None) -> OrderedMap:
    return OrderedMap(f, make_order(f.domain, domain_order))


def phi_star_generator(om: OrderedMap, v: str) -> Word:
    """Image of a generator: the product of its preimages in domain order
    (the empty word when the fiber is empty)."""
    om.map.codomain.index(v)
    rank = {u: i for i, u in enumerate(om.domain_order)}
    fiber = sorted(om.map.preimage(v), key=rank.__getitem__)
    return Word(om.map.domain, tuple(Letter(u, 1) for u in fiber))


def phi_star_word(om: OrderedMap, w: Word) -> Word:
    """Letterwise substitution; an inverse letter inverts and reverses its
    generator block."""
    if w.graph != om.map.codomain:
        raise GraphMismatch("word must be over the map's codomain")
    out: list[Letter] = []
    blocks = {v: phi_star_generator(om, v).letters for v in {l.gen for l in w.letters}}
    for gen, sign in w.letters:
        block = blocks[gen]
        if sign == 1:
            out.extend(block)
        else:
            out.extend(Letter(u, -1) for u, _ in reversed(block))
    return Word(om.map.domain, tuple(out))


# ---------------------------------------------------------------------------
# survival


@dataclass(frozen=True)
class SurvivingWitness:
    """A reduced word whose image loses the given vertex: the flagged span
    v^e .. v^-e has no v inside and the image of its interior has element
    support disjoint from the vertex's link."""

    word: Word
    span: tuple[int, int]
    vertex: str


def innermost_spans(w: Word, v: str) -> list[tuple[int, int]]:
    """Opposite-sign pairs of v-occurrences with no v strictly between."""
    spans = []
    last = None
    for j, (gen, sign) in enumerate(w.letters):
        if gen != v:
            continue
        if last is not None and w.letters[last].sign == -sign:
            spans.append((last, j))
        last = j
    return spans


def _span_violates(om: OrderedMap, w: Word, span: tuple[int, int], vprime: str) -> bool:
    i, j = span
    interior = Word(w.graph, w.letters[i + 1 : j])
    image_support = support_elem(phi_star_word(om, interior))
    return not (image_support & om.map.domain.link(vprime))


def surviving_violation_search(om: OrderedMap, vprime: str, bound: int) -> SurvivingWitness | None:
    """Scan reduced words up to the bound for one whose image admits an
    innermost cancellation of `vprime`.  Absence proves nothing beyond the
    bound; a hit is a concrete refutation."""
    om.map.domain.index(vprime)
    v = om.map(vprime)
    for w in enumerate_reduced_words(om.map.codomain, bound):
        if all(l.gen != v for l in w.letters):
            continue
        for span in innermost_spans(w, v):
            if _span_violates(om, w, span, vprime):
                return SurvivingWitness(w, span, vprime)
    return None


def surviving_scan(
    om: OrderedMap, starts: Iterable[str], bound: int
) -> dict[str, SurvivingWitness | None]:
    """Violation search for several domain vertices sharing one enumeration
    pass over the words."""
    targets: dict[str, list[str]] = {}
    for vprime in starts:
        om.map.domain.index(vprime)
        targets.setdefault(om.map(vprime), []).append(vprime)
    found: dict[str, SurvivingWitness | None] = {
        vp: None for vps in targets.values() for vp in vps
    }
    pending = {vp for vp in found}
    for w in enumerate_reduced_words(om.map.codomain, bound):
        if not pending:
            break
        present = {l.gen for l in w.letters}
        for v, vprimes in targets.items():
            if v not in present:
                continue
            spans = innermost_spans(w, v)
            if not spans:
                continue
            for vprime in vprimes:
                if vprime not in pending:
                    continue
                for span in spans:
                    if _span_violates(om, w, span, vprime):
                        found[vprime] = SurvivingWitness(w, span, vprime)
                        pending.discard(vprime)
                        break
    return found


# ---------------------------------------------------------------------------
# kernel search


def kernel_search(om: OrderedMap, bound: int) -> Word | None:
    """First nontrivial reduced word (shortest, then lexicographically least
    canonical form) whose image reduces to the identity, within the bound.

    The enumeration walks canonical reduced words only; canonical forms are
    prefix-closed, so non-canonical branches prune away whole orbits of the
    commutation relation.  A word in the kernel must have exponent sum zero
    on every generator with a nonempty fiber (its image's abelianisation
    vanishes coordinatewise), which prunes unbalanced branches early.
    """
    if bound < 0:
        raise BadParameter("bound must be >= 0")
    gamma = om.map.codomain
    alphabet = sorted(
        (Letter(v, s) for v in gamma.vertices for s in (1, -1)),
        key=lambda l: letter_key(gamma, l),
    )
    balanced = {v for v in gamma.vertices if om.map.preimage(v)}

    def dfs(prefix: list[Letter], sums: dict[str, int], imbalance: int, target: int):
        depth = len(prefix)
        if depth == target:
            w = Word(gamma, tuple(prefix))
            if is_trivial(phi_star_word(om, w)):
                return w
            return None
        for letter in alphabet:
            if not _append_ok(gamma, prefix, letter.gen, letter.sign):
                continue
            delta = 0
            old = sums.get(letter.gen, 0)
            if letter.gen in balanced:
                delta = abs(old + letter.sign) - abs(old)
            if imbalance + delta > target - depth - 1:
                continue
            prefix.append(letter)
            candidate = Word(gamma, tuple(prefix))
            if canonical_word(candidate).letters == candidate.letters:
                sums[letter.gen] = old + letter.sign
                hit = dfs(prefix, sums, imbalance + delta, target)
                sums[letter.gen] = old
                if hit is not None:
                    return hit
            prefix.pop()
        return None

    for target in range(1, bound + 1):
        hit = dfs([], {}, 0, target)
        if hit is not None:
            return hit
    return None


# ---------------------------------------------------------------------------
# length distortion


@dataclass(frozen=True)
class DistortionStats:
    samples: int
    min_ratio: float
    max_ratio: float
    fiber_bound: int  # letterwise expansion cap: the largest fiber size


def length_distortion_sample(om: OrderedMap, words: Sequence[Word]) -> DistortionStats:
    """Ratio of image element length to input length over reduced samples."""
    ratios = []
    for w in words:
        if w.graph != om.map.codomain:
            raise GraphMismatch("sample words must be over the map's codomain")
        if not w.letters:
            raise BadParameter("distortion is undefined for the empty word")
        if not is_reduced(w):
            raise BadParameter(f"sample word {w} is not reduced")
        ratios.append(length_elem(phi_star_word(om, w)) / len(w.letters))
    if not ratios:
        raise BadParameter("need at least one sample word")
    fiber_bound = max(len(om.map.preimage(v)) for v in om.map.codomain.vertices)
    return DistortionStats(len(ratios), min(ratios), max(ratios), fiber_bound)


# ---------------------------------------------------------------------------
# witness words from lift failures


def ipl_witness_word(path: PathSeq) -> Word:
    """The conjugate-shaped word read off a path: walk out along the path and
    back.  When the path's lift from a vertex leaves the subgraph at the last
    step, the image of this word loses that vertex from its support."""
    letters = [Letter(v, 1) for v in path.vertices]
    letters += [Letter(v, -1) for v in path.vertices[-2::-1]]
    return Word(path.graph, tuple(letters))
