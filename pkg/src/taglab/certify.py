"""Machine-checked certification that the family A^n B C^m grows forever.

The family is tracked through quadruplets (left, mid, right, offset) standing
for the truncated words (left^n mid right^m) with the first ``offset`` symbols
removed, uniformly in n and m.  One derivation step maps a quadruplet to its
image under a full pass; a chain of 13 steps that closes back onto
(left, left mid right, right, offset) certifies that every family member
eventually reproduces itself with one extra left and right factor, hence
grows without bound.

Each step records six recomputable side conditions.  Certificates serialize
to a line-oriented key/value document so they can be re-checked without this
code.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from taglab import words
from taglab.algebra import cut, length_residue, pass_output
from taglab.core import DEFAULT_RULES, RunOutcome, check_word, decode_tokens, run

DOCUMENT_VERSION = "1"

CHECK_NAMES = ("l_a", "l_c", "y_eq", "d_ok", "e_ok", "f_ok")


class InvariantViolated(Exception):
    """The quadruplet cannot participate in a derivation step."""


@dataclass(frozen=True)
class Quadruplet:
    """Three words plus a cut offset describing (left^n mid right^m) truncated."""

    left: str
    mid: str
    right: str
    offset: int

    def __post_init__(self):
        for word in (self.left, self.mid, self.right):
            check_word(word)
            if len(word) < 4:
                raise ValueError("quadruplet words need at least four symbols")
        if self.offset not in (0, 1, 2):
            raise ValueError(f"cut offset must be 0, 1 or 2, got {self.offset!r}")


@dataclass(frozen=True)
class StepChecks:
    """Pass/fail record of the side conditions of one derivation step."""

    l_a: bool
    l_c: bool
    y_eq: bool
    d_ok: bool
    e_ok: bool
    f_ok: bool

    @property
    def all_pass(self) -> bool:
        return all(getattr(self, name) for name in CHECK_NAMES)

    def items(self):
        return [(name, getattr(self, name)) for name in CHECK_NAMES]


@dataclass(frozen=True)
class StepCertificate:
    source: Quadruplet
    derived: Quadruplet
    y: int
    checks: StepChecks

    @property
    def valid(self) -> bool:
        return self.checks.all_pass and self.y == self.derived.offset


@dataclass(frozen=True)
class ChainCertificate:
    quadruplets: tuple[Quadruplet, ...]
    step_certificates: tuple[StepCertificate, ...]
    closure_ok: bool

    @property
    def valid(self) -> bool:
        return self.closure_ok and all(c.valid for c in self.step_certificates)


def seed_quadruplet() -> Quadruplet:
    return Quadruplet(words.A, words.B, words.C, 0)


def recompute_checks(source: Quadruplet, derived: Quadruplet) -> StepChecks:
    """Re-derive every side condition from the two quadruplets alone."""
    y = derived.offset
    return StepChecks(
        l_a=length_residue(source.left) == 0,
        l_c=length_residue(source.right) == 0,
        y_eq=(source.offset - length_residue(source.mid)) % 3 == y,
        d_ok=derived.left == pass_output(cut(source.left, source.offset)),
        e_ok=derived.mid == pass_output(cut(source.mid, source.offset)),
        f_ok=derived.right == pass_output(cut(source.right, y)),
    )


def derive_next(source: Quadruplet) -> StepCertificate:
    """Map a quadruplet through one full pass, recording the side conditions.

    The outer words must have length residue 0; otherwise the powers of the
    derived quadruplet would not track the powers of the source one.
    """
    if length_residue(source.left) != 0 or length_residue(source.right) != 0:
        raise InvariantViolated(
            "outer words must have length divisible by 3 "
            f"(residues {length_residue(source.left)}, {length_residue(source.right)})"
        )
    y = (source.offset - length_residue(source.mid)) % 3
    derived = Quadruplet(
        pass_output(cut(source.left, source.offset)),
        pass_output(cut(source.mid, source.offset)),
        pass_output(cut(source.right, y)),
        y,
    )
    return StepCertificate(source, derived, y, recompute_checks(source, derived))


def closure_target(seed: Quadruplet) -> Quadruplet:
    return Quadruplet(seed.left, seed.left + seed.mid + seed.right, seed.right, seed.offset)


def verify_chain(seed: Quadruplet, steps: int = 13) -> ChainCertificate:
    """Derive ``steps`` times from ``seed`` and test closure onto the grown seed."""
    if steps < 0:
        raise ValueError("steps must be non-negative")
    quadruplets = [seed]
    certificates = []
    for _ in range(steps):
        certificate = derive_next(quadruplets[-1])
        certificates.append(certificate)
        quadruplets.append(certificate.derived)
    closure_ok = quadruplets[-1] == closure_target(seed)
    return ChainCertificate(tuple(quadruplets), tuple(certificates), closure_ok)


def instantiate(q: Quadruplet, n: int, m: int) -> str:
    """The concrete family member (left^n mid right^m) cut by the offset."""
    if n < 0 or m < 0:
        raise ValueError("powers must be non-negative")
    return cut(q.left * n + q.mid + q.right * m, q.offset)


def total_pass_iterations(chain: ChainCertificate, n: int = 0, m: int = 0) -> int:
    """Tag iterations one simulation spends tracing the whole chain at (n, m)."""
    return sum(
        -(-len(instantiate(cert.source, n, m)) // 3)
        for cert in chain.step_certificates
    )


def direct_growth_check(n: int, m: int, budget: int = 200_000) -> RunOutcome:
    """Simulate A^n B C^m until it literally becomes A^(n+1) B C^(m+1)."""
    start = words.A * n + words.B + words.C * m
    target = words.A * (n + 1) + words.B + words.C * (m + 1)
    return run(start, DEFAULT_RULES, budget=budget, target=target)


@cache
def reference_vectors() -> tuple[tuple[str, str, int], ...]:
    """The embedded expected (left, right, offset) for all 14 chain stages."""
    return tuple(
        (decode_tokens(left), decode_tokens(right), offset)
        for left, right, offset in words.REFERENCE_CHAIN
    )


def reference_mismatches(chain: ChainCertificate) -> list[str]:
    """Stages of the chain that disagree with the embedded reference table."""
    refs = reference_vectors()
    if len(chain.quadruplets) != len(refs):
        return [f"reference: expected {len(refs)} stages, got {len(chain.quadruplets)}"]
    problems = []
    for i, (q, (left, right, offset)) in enumerate(zip(chain.quadruplets, refs), start=1):
        if (q.left, q.right, q.offset) != (left, right, offset):
            problems.append(f"reference.{i}: stage disagrees with the embedded table")
    return problems


def certificate_problems(chain: ChainCertificate, require_reference: bool = True) -> list[str]:
    """Every failed or inconsistent condition in the certificate, empty if sound."""
    problems = []
    for i, cert in enumerate(chain.step_certificates, start=1):
        expected = recompute_checks(cert.source, cert.derived)
        for name in CHECK_NAMES:
            stored = getattr(cert.checks, name)
            actual = getattr(expected, name)
            if stored != actual:
                problems.append(
                    f"step.{i}.checks.{name}: stored flag disagrees with recomputation"
                )
            elif not actual:
                problems.append(f"step.{i}.checks.{name}: fail")
        if cert.y != cert.derived.offset:
            problems.append(f"step.{i}.y: does not match the derived cut offset")
    seed = chain.quadruplets[0]
    closure_actual = chain.quadruplets[-1] == closure_target(seed)
    if chain.closure_ok != closure_actual:
        problems.append("closure_ok: stored flag disagrees with recomputation")
    elif not closure_actual:
        problems.append("closure_ok: fail")
    if require_reference:
        problems.extend(reference_mismatches(chain))
    return problems


def render_certificate(chain: ChainCertificate) -> str:
    """Serialize a chain certificate to the line-oriented document format."""
    seed = chain.quadruplets[0]
    lines = [
        f"version: {DOCUMENT_VERSION}",
        f"seed.a: {seed.left}",
        f"seed.b: {seed.mid}",
        f"seed.c: {seed.right}",
        f"seed.x: {seed.offset}",
        f"steps: {len(chain.step_certificates)}",
    ]
    for i, cert in enumerate(chain.step_certificates, start=1):
        lines.append(f"step.{i}.y: {cert.y}")
        for name, value in cert.checks.items():
            lines.append(f"step.{i}.checks.{name}: {'pass' if value else 'fail'}")
        d = cert.derived
        lines.append(f"step.{i}.derived.a: {d.left}")
        lines.append(f"step.{i}.derived.b: {d.mid}")
        lines.append(f"step.{i}.derived.c: {d.right}")
        lines.append(f"step.{i}.derived.x: {d.offset}")
    lines.append(f"closure_ok: {'true' if chain.closure_ok else 'false'}")
    return "\n".join(lines) + "\n"


def _entry(data: dict, key: str) -> str:
    try:
        return data[key]
    except KeyError:
        raise ValueError(f"certificate document is missing {key!r}") from None


def _flag(data: dict, key: str) -> bool:
    value = _entry(data, key)
    if value not in ("pass", "fail"):
        raise ValueError(f"{key!r} must be pass or fail, got {value!r}")
    return value == "pass"


def parse_certificate(text: str) -> ChainCertificate:
    """Rebuild a chain certificate from its document form.

    Structural defects raise ValueError; whether the certificate is sound is
    a separate question answered by ``certificate_problems``.
    """
    data = {}
    for number, line in enumerate(text.splitlines(), start=1):
        key, sep, value = line.partition(": ")
        if not sep:
            raise ValueError(f"line {number}: expected 'key: value'")
        if key in data:
            raise ValueError(f"line {number}: duplicate key {key!r}")
        data[key] = value
    if _entry(data, "version") != DOCUMENT_VERSION:
        raise ValueError(f"unsupported certificate version {data['version']!r}")
    seed = Quadruplet(
        _entry(data, "seed.a"),
        _entry(data, "seed.b"),
        _entry(data, "seed.c"),
        int(_entry(data, "seed.x")),
    )
    steps = int(_entry(data, "steps"))
    quadruplets = [seed]
    certificates = []
    for i in range(1, steps + 1):
        y = int(_entry(data, f"step.{i}.y"))
        checks = StepChecks(
            **{name: _flag(data, f"step.{i}.checks.{name}") for name in CHECK_NAMES}
        )
        derived = Quadruplet(
            _entry(data, f"step.{i}.derived.a"),
            _entry(data, f"step.{i}.derived.b"),
            _entry(data, f"step.{i}.derived.c"),
            int(_entry(data, f"step.{i}.derived.x")),
        )
        certificates.append(StepCertificate(quadruplets[-1], derived, y, checks))
        quadruplets.append(derived)
    closure_value = _entry(data, "closure_ok")
    if closure_value not in ("true", "false"):
        raise ValueError(f"closure_ok must be true or false, got {closure_value!r}")
    expected_keys = 7 + 11 * steps
    if len(data) != expected_keys:
        raise ValueError(f"certificate has {len(data)} entries, expected {expected_keys}")
    return ChainCertificate(tuple(quadruplets), tuple(certificates), closure_value == "true")
