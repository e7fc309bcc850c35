"""Length-residue algebra over binary words for the 3-deletion tag system.

Because every step deletes exactly three symbols, word lengths matter only
modulo 3 and whole sweeps of the system can be written in closed form: one
full pass over a word equals the production-sampled word cut by the length
residue.  Words of fewer than four symbols are rejected by the pass
operations to keep concatenation identities corner-case free.
"""

from __future__ import annotations

from taglab.core import DEFAULT_RULES, Simulator, WordTooShort, check_word

_SAMPLE_PRODUCTION = str.maketrans({"0": "00", "1": "1101"})

MIN_PASS_LENGTH = 4


def length_residue(word: str) -> int:
    """Word length mod 3."""
    return len(word) % 3


def cut(word: str, offset: int) -> str:
    """Remove the first ``offset`` symbols; ``offset`` must be a reduced residue."""
    if offset not in (0, 1, 2):
        raise ValueError(f"cut offset must be 0, 1 or 2, got {offset!r}")
    if len(word) < offset:
        raise WordTooShort(f"cannot cut {offset} symbols from length {len(word)}")
    return word[offset:]


def pass_output(word: str) -> str:
    """The symbols one full pass appends: every third symbol, production-expanded.

    Sampling starts at position 0; a sampled 1 contributes 1101 and a
    sampled 0 contributes 00.
    """
    check_word(word)
    return word[::3].translate(_SAMPLE_PRODUCTION)


def _require_pass_length(word: str) -> None:
    if len(word) < MIN_PASS_LENGTH:
        raise WordTooShort(
            f"full-pass operations need at least {MIN_PASS_LENGTH} symbols, got {len(word)}"
        )


def full_pass_simulated(word: str) -> str:
    """Run the tag step until every symbol of the input has been deleted."""
    _require_pass_length(word)
    sim = Simulator(word, DEFAULT_RULES)
    sim.run_steps(-(-len(word) // 3))
    return sim.word()


def full_pass_algebraic(word: str) -> str:
    """Closed form of a full pass: the pass output cut by the length residue."""
    _require_pass_length(word)
    check_word(word)
    return pass_output(word)[(-len(word)) % 3:]
