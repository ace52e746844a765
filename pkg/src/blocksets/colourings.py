"""Colourings of [m]^n and the substitution machinery behind them.

Colour values are dense integer ids.  Colourings whose natural colours are
vectors or tuples expose both forms, with a fixed mixed-radix bijection
(coordinate 0 least significant) between the two.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

import numpy as np

from .words import InvalidSymbol, Word, all_words, profile


class DomainError(KeyError):
    """Word outside a table colouring's domain."""


class SubstitutionMismatch(ValueError):
    """Slot word and insert word are incompatible."""


class NotSlotWord(ValueError):
    """Word is not in the induced colouring's domain (2s marking slots, rest 3s)."""


class IndexOutOfRange(ValueError):
    """Block index outside [1, k+1]."""


def vector_to_id(vector: Sequence[int], modulus: int) -> int:
    """Mixed-radix encoding of a Z_modulus vector, coordinate 0 least significant."""
    idx = 0
    for v in reversed(vector):
        idx = idx * modulus + v
    return idx


def id_to_vector(idx: int, modulus: int, length: int) -> tuple[int, ...]:
    out = []
    for _ in range(length):
        out.append(idx % modulus)
        idx //= modulus
    return tuple(out)


class Colouring:
    """Pure evaluable map Word -> colour id, with a declared colour bound.

    Evaluation must be deterministic and side-effect free; instances are safe
    to share across workers.
    """

    name: str = "colouring"
    colour_count: int = 1

    def colour_id(self, w: Word) -> int:
        raise NotImplementedError

    def dense_table(self, n: int, m: int) -> Optional[np.ndarray]:
        """Colour ids for all of [m]^n indexed by packed word index, or None.

        Subclasses may override with a faster construction; the generic path
        walks every word.
        """
        if self.colour_count > 2**62 or m**n > 4_000_000:
            return None
        table = np.empty(m**n, dtype=np.int64)
        for w in all_words(n, m):
            table[w.index] = self.colour_id(w)
        return table


@dataclass(frozen=True)
class ConstantColouring(Colouring):
    """Every word gets the same colour."""

    value: int = 0
    colours: int = 1

    @property
    def colour_count(self) -> int:  # type: ignore[override]
        return self.colours

    @property
    def name(self) -> str:  # type: ignore[override]
        return f"constant:{self.value}"

    def colour_id(self, w: Word) -> int:
        return self.value

    def dense_table(self, n: int, m: int) -> np.ndarray:
        return np.full(m**n, self.value, dtype=np.int64)


@dataclass(frozen=True)
class ModularCountColouring(Colouring):
    """Colour by the number of occurrences of one symbol, modulo k."""

    symbol: int
    modulus: int

    @property
    def colour_count(self) -> int:  # type: ignore[override]
        return self.modulus

    @property
    def name(self) -> str:  # type: ignore[override]
        return f"countmod:s={self.symbol},k={self.modulus}"

    def colour_id(self, w: Word) -> int:
        return sum(1 for s in w.symbols if s == self.symbol) % self.modulus


def contribution_colour(x: Word, modulus: int, length: int) -> tuple[int, ...]:
    """Layered colouring of words over [3]: each 1 adds a basis vector.

    The 1 at coordinate i contributes e_a where a counts the 1s and 2s strictly
    before i, modulo `length`; contributions add modulo `modulus`.  Coordinates
    holding 2 or 3 contribute nothing.
    """
    if x.m != 3:
        raise InvalidSymbol(f"contribution colouring needs alphabet [3], got [{x.m}]")
    vec = [0] * length
    seen_12 = 0
    for s in x.symbols:
        if s == 1:
            a = seen_12 % length
            vec[a] = (vec[a] + 1) % modulus
        if s in (1, 2):
            seen_12 += 1
    return tuple(vec)


@dataclass(frozen=True)
class ContributionColouring(Colouring):
    """Adversarial colouring with colours in Z_modulus^length.

    Built so that moving a single 1 between blocks shifts exactly one basis
    contribution; the colour depends only on the subsequence of 1s and 2s.
    """

    modulus: int
    length: int

    def __post_init__(self) -> None:
        if self.modulus < 2 or self.length < 1:
            raise ValueError(f"need modulus >= 2 and length >= 1, got {self}")

    @property
    def colour_count(self) -> int:  # type: ignore[override]
        return self.modulus**self.length

    @property
    def name(self) -> str:  # type: ignore[override]
        return f"contribution:m={self.modulus},l={self.length}"

    def vector(self, w: Word) -> tuple[int, ...]:
        return contribution_colour(w, self.modulus, self.length)

    def colour_id(self, w: Word) -> int:
        return vector_to_id(self.vector(w), self.modulus)

    def dense_table(self, n: int, m: int) -> Optional[np.ndarray]:
        """Incremental table over packed indices.

        Appending a symbol at the next (most significant) coordinate updates
        the colour from the prefix colour and the prefix's count of 1s-and-2s;
        the three symbol choices become three contiguous index blocks.
        """
        if m != 3 or 3**n > 50_000_000 or self.colour_count > 2**62:
            return None
        mod, length = self.modulus, self.length
        table = np.zeros(1, dtype=np.int64)
        count12 = np.zeros(1, dtype=np.int64)
        for _ in range(n):
            a = count12 % length
            power = np.int64(mod) ** a
            digit = (table // power) % mod
            with_one = table - digit * power + ((digit + 1) % mod) * power
            table = np.concatenate([with_one, table, table])
            bumped = count12 + 1
            count12 = np.concatenate([bumped, bumped, count12])
        return table


@dataclass
class TableColouring(Colouring):
    """Explicit word -> colour id lookup table."""

    entries: dict[Word, int]
    colours: Optional[int] = None
    label: str = "table"

    def __post_init__(self) -> None:
        if self.colours is None:
            self.colours = max(self.entries.values(), default=0) + 1

    @property
    def colour_count(self) -> int:  # type: ignore[override]
        return self.colours or 1

    @property
    def name(self) -> str:  # type: ignore[override]
        return self.label

    def colour_id(self, w: Word) -> int:
        try:
            return self.entries[w]
        except KeyError:
            raise DomainError(f"word {w} outside table domain") from None

    def dense_table(self, n: int, m: int) -> Optional[np.ndarray]:
        if len(self.entries) != m**n:
            return None
        table = np.empty(m**n, dtype=np.int64)
        for w, c in self.entries.items():
            if w.n != n or w.m != m:
                return None
            table[w.index] = c
        return table


def table_colouring(entries: Mapping[Word, int], colours: Optional[int] = None) -> TableColouring:
    return TableColouring(dict(entries), colours)


def tabulate_colouring(c: Colouring, n: int, m: int) -> TableColouring:
    """Freeze a colouring into an explicit table over all of [m]^n."""
    return TableColouring({w: c.colour_id(w) for w in all_words(n, m)}, c.colour_count, c.name)


def random_table_colouring(n: int, m: int, k: int, seed: int) -> TableColouring:
    """Seeded uniform random k-colouring of [m]^n (reproducible across runs)."""
    rng = np.random.default_rng(seed)
    ids = rng.integers(0, k, size=m**n)
    entries = {w: int(ids[w.index]) for w in all_words(n, m)}
    return TableColouring(entries, k, f"random:k={k},seed={seed}")


@dataclass(frozen=True)
class ProductColouring(Colouring):
    """Tuple of component colours, encoded mixed-radix (component 0 least significant)."""

    components: tuple[Colouring, ...]

    @property
    def colour_count(self) -> int:  # type: ignore[override]
        return math.prod(c.colour_count for c in self.components)

    @property
    def name(self) -> str:  # type: ignore[override]
        return "product(" + ",".join(c.name for c in self.components) + ")"

    def colour_tuple(self, w: Word) -> tuple[int, ...]:
        return tuple(c.colour_id(w) for c in self.components)

    def colour_id(self, w: Word) -> int:
        idx = 0
        for comp in reversed(self.components):
            idx = idx * comp.colour_count + comp.colour_id(w)
        return idx


def product_colouring(components: Sequence[Colouring]) -> ProductColouring:
    return ProductColouring(tuple(components))


def substitute(x: Word, w: Word) -> Word:
    """Insert the letters of w, in order, at the positions of the 2s in x.

    x must contain no 1s and exactly len(w) 2s; elsewhere x is unchanged.
    """
    slots = [i for i, s in enumerate(x.symbols) if s == 2]
    if any(s == 1 for s in x.symbols):
        raise SubstitutionMismatch(f"slot word {x} contains a 1")
    if len(slots) != w.n:
        raise SubstitutionMismatch(f"{len(slots)} slots in {x} but {w.n} letters in {w}")
    syms = list(x.symbols)
    for pos, letter in zip(slots, w.symbols):
        syms[pos] = letter
    return Word(tuple(syms), x.m)


@dataclass(frozen=True)
class BalancedFamily:
    """All length-(2k+2) words over [2] with exactly k+1 1s, lexicographically."""

    k: int
    members: tuple[Word, ...]

    @property
    def size(self) -> int:
        return len(self.members)


def balanced_words(k: int) -> BalancedFamily:
    """The balanced binary family of parameter k; its size is C(2k+2, k+1)."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    length = 2 * k + 2
    members = []
    for ones in itertools.combinations(range(length), k + 1):
        syms = [2] * length
        for pos in ones:
            syms[pos] = 1
        members.append(Word(tuple(syms), 2))
    members.sort(key=lambda w: w.symbols)
    return BalancedFamily(k, tuple(members))


def flipped_block_word(i: int, k: int) -> Word:
    """k+1 copies of "12" with the i-th copy flipped to "21"."""
    if not 1 <= i <= k + 1:
        raise IndexOutOfRange(f"block index {i} outside [1, {k + 1}]")
    syms: list[int] = []
    for block in range(1, k + 2):
        syms.extend((2, 1) if block == i else (1, 2))
    return Word(tuple(syms), 2)


def is_slot_word(x: Word, k: int) -> bool:
    """True when x has exactly 2k+2 2s and no 1s."""
    p = profile(x)
    return p.counts[0] == 0 and p.counts[1] == 2 * k + 2


def slot_word_for(positions: Sequence[int], n: int) -> Word:
    """Word over [3] with 2s at the given 1-based positions and 3s elsewhere."""
    syms = [3] * n
    for pos in positions:
        syms[pos - 1] = 2
    return Word(tuple(syms), 3)


@dataclass(frozen=True)
class InducedColouring:
    """Colour a slot word by the tuple of base colours of all substitutions.

    Defined on words with exactly 2k+2 2s and no 1s; the colour is the tuple
    (base(sub(x, w)) for w in the balanced family), in family order.
    """

    base: Colouring
    k: int
    family: BalancedFamily = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "family", balanced_words(self.k))

    @property
    def colour_count(self) -> int:
        return self.base.colour_count ** self.family.size

    @property
    def name(self) -> str:
        return f"induced:base={self.base.name},k={self.k}"

    def colour_tuple(self, x: Word) -> tuple[int, ...]:
        if not is_slot_word(x, self.k):
            raise NotSlotWord(f"{x} does not have exactly {2 * self.k + 2} 2s and no 1s")
        return tuple(self.base.colour_id(substitute(x, w)) for w in self.family.members)

    def colour_id(self, x: Word) -> int:
        idx = 0
        for c in reversed(self.colour_tuple(x)):
            idx = idx * self.base.colour_count + c
        return idx


def induced_colour(ind: InducedColouring, x: Word) -> tuple[int, ...]:
    """The induced colour tuple of a slot word."""
    return ind.colour_tuple(x)


def coordinate_sum_colour(x: Sequence[int], d: int) -> int:
    """2-colouring of integer vectors: 0 iff the coordinate sum mod 2d lies in [0, d-1].

    Negative sums reduce to the canonical representative in [0, 2d).
    """
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    return 0 if sum(x) % (2 * d) < d else 1
