"""Simulation engine for Post-style tag systems.

The default system appends 00 for a leading 0 and 1101 for a leading 1, then
deletes three symbols.  Words are plain strings over {0,1}; all public
operations are pure.  Long runs go through a mutable buffer that keeps a
moving read offset and compacts periodically, so front deletion costs
amortized O(1) regardless of word size.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Mapping, Optional


class WordTooShort(Exception):
    """The configuration has fewer symbols than one deletion needs."""


class NotTokenizable(Exception):
    """The word is not a concatenation of 00 and 1101 segments."""


_BINARY = frozenset("01")


def check_word(word: str) -> str:
    """Validate that ``word`` is a string over {0,1} and return it."""
    if not _BINARY.issuperset(word):
        bad = sorted(set(word) - _BINARY)
        raise ValueError(f"not a binary word, unexpected symbols {bad}")
    return word


@dataclass(frozen=True)
class TagRules:
    """A deletion count plus the production appended for each leading symbol."""

    deletion_number: int = 3
    production: Mapping[str, str] = None  # type: ignore[assignment]

    def __post_init__(self):
        if self.production is None:
            object.__setattr__(self, "production", {"0": "00", "1": "1101"})
        if self.deletion_number < 1:
            raise ValueError("deletion number must be at least 1")
        for sym in "01":
            if sym not in self.production:
                raise ValueError(f"production rule missing for {sym!r}")
            check_word(self.production[sym])


DEFAULT_RULES = TagRules()


class OutcomeKind(enum.Enum):
    HALTED = "Halted"
    CYCLED = "Cycled"
    BUDGET_EXHAUSTED = "BudgetExhausted"
    TARGET_REACHED = "TargetReached"


@dataclass(frozen=True)
class RunOutcome:
    kind: OutcomeKind
    steps_taken: int
    final: str
    cycle_length: Optional[int] = None

    def __post_init__(self):
        if (self.cycle_length is not None) != (self.kind is OutcomeKind.CYCLED):
            raise ValueError("cycle_length is present exactly when the run cycled")


def step(word: str, rules: TagRules = DEFAULT_RULES) -> str:
    """One tag transformation: append the first symbol's production, delete the front."""
    check_word(word)
    if len(word) < rules.deletion_number:
        raise WordTooShort(f"length {len(word)} < deletion number {rules.deletion_number}")
    return word[rules.deletion_number:] + rules.production[word[0]]


class Simulator:
    """Mutable run state: byte-per-symbol buffer with a moving head.

    The head advances on deletion; the tail grows in place on append.  When
    the dead prefix dominates the buffer it is dropped in one move, which
    amortizes to O(1) per step.
    """

    __slots__ = ("deletion", "_prod", "_buf", "_head")

    _COMPACT_AT = 8192

    def __init__(self, word: str, rules: TagRules = DEFAULT_RULES):
        check_word(word)
        self.deletion = rules.deletion_number
        self._prod = {ord(s): p.encode("ascii") for s, p in rules.production.items()}
        self._buf = bytearray(word, "ascii")
        self._head = 0

    @property
    def length(self) -> int:
        return len(self._buf) - self._head

    def word(self) -> str:
        return self._buf[self._head:].decode("ascii")

    def snapshot(self) -> bytes:
        return bytes(self._buf[self._head:])

    def matches(self, other: bytes) -> bool:
        if self.length != len(other):
            return False
        return memoryview(self._buf)[self._head:] == other

    def step_once(self) -> None:
        if self.length < self.deletion:
            raise WordTooShort(f"length {self.length} < deletion number {self.deletion}")
        self._buf += self._prod[self._buf[self._head]]
        self._head += self.deletion
        if self._head >= self._COMPACT_AT and self._head * 2 >= len(self._buf):
            del self._buf[: self._head]
            self._head = 0

    def run_steps(self, count: int) -> None:
        for _ in range(count):
            self.step_once()


def run(
    word: str,
    rules: TagRules = DEFAULT_RULES,
    *,
    budget: int,
    target: Optional[str] = None,
) -> RunOutcome:
    """Iterate the tag step until halt, repeat, target, or budget exhaustion.

    Repeats are found with constant extra memory: the live configuration is
    raced against a snapshot that is refreshed at exponentially growing
    intervals, so the first match after a refresh yields the exact period.
    """
    if budget < 1:
        raise ValueError("budget must be at least 1")
    sim = Simulator(word, rules)
    target_bytes = check_word(target).encode("ascii") if target is not None else None
    saved = sim.snapshot()
    saved_step = 0
    window = 1
    steps = 0
    while True:
        if target_bytes is not None and sim.matches(target_bytes):
            return RunOutcome(OutcomeKind.TARGET_REACHED, steps, sim.word())
        if sim.length < rules.deletion_number:
            return RunOutcome(OutcomeKind.HALTED, steps, sim.word())
        if steps == budget:
            return RunOutcome(OutcomeKind.BUDGET_EXHAUSTED, steps, sim.word())
        sim.step_once()
        steps += 1
        if sim.matches(saved):
            return RunOutcome(OutcomeKind.CYCLED, steps, sim.word(),
                              cycle_length=steps - saved_step)
        if steps - saved_step == window:
            saved = sim.snapshot()
            saved_step = steps
            window *= 2


_TOKEN_EXPANSION = {"Z": "00", "O": "1101"}


def encode_tokens(word: str) -> str:
    """Greedily parse a binary word into Z (00) and O (1101) tokens."""
    check_word(word)
    out = []
    i = 0
    n = len(word)
    while i < n:
        if word.startswith("1101", i):
            out.append("O")
            i += 4
        elif word.startswith("00", i):
            out.append("Z")
            i += 2
        else:
            raise NotTokenizable(f"no token starts at position {i}: {word[i:i + 4]!r}…")
    return "".join(out)


def decode_tokens(tokens: str) -> str:
    """Expand a token word back into its binary form."""
    if not set(tokens) <= {"Z", "O"}:
        bad = sorted(set(tokens) - {"Z", "O"})
        raise ValueError(f"not a token word, unexpected symbols {bad}")
    return "".join(_TOKEN_EXPANSION[t] for t in tokens)
