"""Words over a graph group: generators are vertices, and two generators
commute exactly when their vertices are NOT adjacent.

A subword v^e .. v^-e whose interior letters all commute with v can be
deleted without changing the group element; a word is reduced when no such
pair exists.  Two reduction paths are provided:

* ``reduce_word`` deletes the leftmost innermost pair repeatedly, keeping the
  interior letters in place.  Deterministic, and the one used for displayed
  output.
* ``canonical_word`` runs a one-pass stack ("pile") reduction and then reads
  the piles back in least-generator-first order, giving the lexicographically
  least reduced word of the element in linear-ish time.  Length, support and
  element-equality queries go through the piles and never materialise a word.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .errors import BadParameter, GraphMismatch
from .graph import Graph


class Letter(NamedTuple):
    gen: str
    sign: int

    def inverse(self) -> "Letter":
        return Letter(self.gen, -self.sign)


@dataclass(frozen=True)
class Word:
    graph: Graph
    letters: tuple[Letter, ...]

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return word_to_text(self)


def make_word(g: Graph, letters: Iterable) -> Word:
    out = []
    for item in letters:
        gen, sign = item
        g.index(gen)
        if sign not in (1, -1):
            raise BadParameter(f"letter sign must be +1 or -1, got {sign!r}")
        out.append(Letter(gen, sign))
    return Word(g, tuple(out))


def empty_word(g: Graph) -> Word:
    return Word(g, ())


def parse_word(g: Graph, text: str) -> Word:
    """Parse whitespace-separated tokens ``name`` / ``name^-1``."""
    letters = []
    for tok in text.split():
        if tok.endswith("^-1"):
            letters.append((tok[:-3], -1))
        else:
            letters.append((tok, 1))
    return make_word(g, letters)


def word_to_text(w: Word) -> str:
    return " ".join(l.gen if l.sign == 1 else f"{l.gen}^-1" for l in w.letters)


def letter_key(g: Graph, letter: Letter) -> tuple[int, int]:
    """Sort key: vertex order first, positive sign before negative."""
    return (g.index(letter.gen), 0 if letter.sign == 1 else 1)


def concat(w1: Word, w2: Word) -> Word:
    if w1.graph != w2.graph:
        raise GraphMismatch("words over different graphs")
    return Word(w1.graph, w1.letters + w2.letters)


def inverse_word(w: Word) -> Word:
    return Word(w.graph, tuple(l.inverse() for l in reversed(w.letters)))


def commutes(g: Graph, u: str, v: str) -> bool:
    """True iff u and v are distinct, non-adjacent vertices."""
    g.index(u), g.index(v)
    return u != v and not g.has_edge(u, v)


# ---------------------------------------------------------------------------
# cancellation scanning


def find_cancellation(w: Word) -> tuple[int, int] | None:
    """Leftmost pair (i, j) of opposite-sign occurrences of one generator with
    every interior letter commuting with it, or None if the word is reduced.

    Scanning each position against the nearest previous occurrence of the
    same generator suffices: a deletable pair with another occurrence inside
    always contains a nearer deletable pair.
    """
    letters = w.letters
    g = w.graph
    last: dict[str, int] = {}
    for j, (gen, sign) in enumerate(letters):
        i = last.get(gen)
        if i is not None and letters[i].sign == -sign:
            lk = g.link(gen)
            if all(letters[t].gen not in lk for t in range(i + 1, j)):
                return (i, j)
        last[gen] = j
    return None


def find_innermost_cancellation(w: Word, v: str) -> tuple[int, int] | None:
    """First deletable pair of v-occurrences with no v between them."""
    w.graph.index(v)
    letters = w.letters
    lk = w.graph.link(v)
    last = None
    for j, (gen, sign) in enumerate(letters):
        if gen != v:
            continue
        if last is not None and letters[last].sign == -sign:
            if all(letters[t].gen not in lk for t in range(last + 1, j)):
                return (last, j)
        last = j
    return None


def all_innermost_cancellations(w: Word) -> list[tuple[int, int]]:
    letters = w.letters
    g = w.graph
    found = []
    last: dict[str, int] = {}
    for j, (gen, sign) in enumerate(letters):
        i = last.get(gen)
        if i is not None and letters[i].sign == -sign:
            lk = g.link(gen)
            if all(letters[t].gen not in lk for t in range(i + 1, j)):
                found.append((i, j))
        last[gen] = j
    return found


def is_reduced(w: Word) -> bool:
    return find_cancellation(w) is None


def reduce_word(w: Word, rng: random.Random | None = None) -> Word:
    """Delete deletable pairs until none remain; interior letters stay put.

    With no rng the leftmost innermost pair goes first, making the result
    deterministic; an rng picks uniformly among the current pairs (any choice
    yields the same length, support and element).
    """
    letters = list(w.letters)
    while True:
        current = Word(w.graph, tuple(letters))
        if rng is None:
            pair = find_cancellation(current)
        else:
            options = all_innermost_cancellations(current)
            pair = rng.choice(options) if options else None
        if pair is None:
            return current
        i, j = pair
        del letters[j]
        del letters[i]


# ---------------------------------------------------------------------------
# pile reduction: linear-time length / support / triviality / canonical form


def _pile(g: Graph, letters: Iterable[Letter]):
    """One-pass reduction onto per-generator stacks.

    Pushing x appends its sign to pile[x] and a 0 marker to the pile of every
    neighbor; when pile[x] tops with the opposite sign the previous x has had
    nothing non-commuting after it, so the pair cancels and its markers pop.
    Piles materialise only for generators that get touched, so the cost
    scales with the word, not the graph.  Returns (piles, survivor count).
    """
    piles: dict[str, list[int]] = {}
    count = 0
    for gen, sign in letters:
        pile = piles.get(gen)
        if pile is None:
            pile = piles[gen] = []
        if pile and pile[-1] == -sign:
            pile.pop()
            count -= 1
            for u in g.neighbors(gen):  # marked on the matching push
                piles[u].pop()
        else:
            pile.append(sign)
            count += 1
            for u in g.neighbors(gen):
                marks = piles.get(u)
                if marks is None:
                    marks = piles[u] = []
                marks.append(0)
    return piles, count


def _depile(g: Graph, piles: dict[str, list[int]], count: int) -> tuple[Letter, ...]:
    """Read the piles back, always emitting the least generator whose pile
    front is a real sign; this is the lexicographically least reduced word."""
    active = sorted(piles, key=g.index)
    fronts = {v: 0 for v in active}  # next unread index per pile
    out = []
    for _ in range(count):
        for v in active:
            i = fronts[v]
            pile = piles[v]
            if i < len(pile) and pile[i] != 0:
                out.append(Letter(v, pile[i]))
                fronts[v] += 1
                for u in g.neighbors(v):
                    if u in fronts:
                        fronts[u] += 1
                break
        else:  # pragma: no cover - piles and count always agree
            raise AssertionError("pile bookkeeping out of sync")
    return tuple(out)


def canonical_word(w: Word) -> Word:
    """The lexicographically least reduced word representing w's element."""
    piles, count = _pile(w.graph, w.letters)
    return Word(w.graph, _depile(w.graph, piles, count))


def is_trivial(w: Word) -> bool:
    """True iff w represents the identity element."""
    _, count = _pile(w.graph, w.letters)
    return count == 0


def length_elem(w: Word) -> int:
    """Word length of the element w represents."""
    _, count = _pile(w.graph, w.letters)
    return count


def support_letters(w: Word) -> frozenset[str]:
    """Generators appearing in w as written."""
    return frozenset(l.gen for l in w.letters)


def support_elem(w: Word) -> frozenset[str]:
    """Generators appearing in any (equivalently, every) reduced form of w."""
    piles, _ = _pile(w.graph, w.letters)
    return frozenset(v for v, pile in piles.items() if any(s != 0 for s in pile))


def equal_elements(w1: Word, w2: Word) -> bool:
    """True iff the two words represent the same group element."""
    if w1.graph != w2.graph:
        raise GraphMismatch("words over different graphs")
    return is_trivial(concat(w1, inverse_word(w2)))


# ---------------------------------------------------------------------------
# enumeration


def _append_ok(g: Graph, letters: list[Letter], gen: str, sign: int) -> bool:
    """Whether appending keeps a reduced word reduced.

    Walk backwards: the first same-generator occurrence decides (opposite
    sign with a commuting corridor would cancel); a neighbor blocks every
    farther pair.
    """
    lk = g.link(gen)
    for prev in reversed(letters):
        if prev.gen == gen:
            return prev.sign == sign
        if prev.gen in lk:
            return True
    return True


def enumerate_reduced_words(g: Graph, max_len: int) -> Iterator[Word]:
    """All reduced words of length <= max_len, shortest first, then
    lexicographic by (vertex order, sign).  No element-level deduplication."""
    if max_len < 0:
        raise BadParameter("max_len must be >= 0")
    alphabet = [Letter(v, s) for v in g.vertices for s in (1, -1)]
    alphabet.sort(key=lambda l: letter_key(g, l))

    def grow(prefix: list[Letter], remaining: int) -> Iterator[Word]:
        if remaining == 0:
            yield Word(g, tuple(prefix))
            return
        for letter in alphabet:
            if _append_ok(g, prefix, letter.gen, letter.sign):
                prefix.append(letter)
                yield from grow(prefix, remaining - 1)
                prefix.pop()

    for k in range(max_len + 1):
        yield from grow([], k)


def random_reduced_word(g: Graph, length: int, rng: random.Random) -> Word:
    """A uniformly-grown reduced word of exactly the given length (the graph
    must admit one, i.e. have at least one vertex)."""
    if not g.vertices:
        raise BadParameter("graph has no vertices")
    alphabet = [Letter(v, s) for v in g.vertices for s in (1, -1)]
    letters: list[Letter] = []
    while len(letters) < length:
        options = [l for l in alphabet if _append_ok(g, letters, l.gen, l.sign)]
        letters.append(rng.choice(options))
    return Word(g, tuple(letters))
