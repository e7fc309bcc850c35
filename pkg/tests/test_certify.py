"""Growth-chain certification: derivations, closure, reference agreement, documents."""

import pytest

from taglab import words
from taglab.algebra import cut, full_pass_algebraic, full_pass_simulated
from taglab.certify import (
    InvariantViolated,
    Quadruplet,
    certificate_problems,
    derive_next,
    direct_growth_check,
    instantiate,
    parse_certificate,
    recompute_checks,
    reference_mismatches,
    reference_vectors,
    render_certificate,
    seed_quadruplet,
    total_pass_iterations,
    verify_chain,
)
from taglab.core import OutcomeKind

EXPECTED_OFFSETS = (0, 1, 0, 2, 1, 0, 1, 0, 1, 2, 0, 0, 1, 0)


@pytest.fixture(scope="module")
def chain():
    return verify_chain(seed_quadruplet())


def test_quadruplet_validation():
    with pytest.raises(ValueError):
        Quadruplet("000", "0000", "0000", 0)
    with pytest.raises(ValueError):
        Quadruplet("0000", "0000", "0000", 3)
    with pytest.raises(ValueError):
        Quadruplet("000a", "0000", "0000", 0)


def test_first_derivation_offset(chain):
    first = derive_next(seed_quadruplet())
    assert first.derived.offset == 1
    assert first.y == 1


def test_first_derivation_left_word():
    first = derive_next(seed_quadruplet())
    assert first.derived.left == "000000110111011101"


def test_chain_certifies(chain):
    assert len(chain.step_certificates) == 13
    assert all(cert.valid for cert in chain.step_certificates)
    assert chain.closure_ok
    assert chain.valid


def test_chain_closure_is_exact_word_equality(chain):
    seed = chain.quadruplets[0]
    last = chain.quadruplets[-1]
    assert last.left == seed.left
    assert last.mid == seed.left + seed.mid + seed.right
    assert last.right == seed.right
    assert last.offset == seed.offset


def test_chain_matches_reference_table(chain):
    assert reference_mismatches(chain) == []
    refs = reference_vectors()
    assert len(refs) == 14
    assert tuple(q.offset for q in chain.quadruplets) == EXPECTED_OFFSETS
    for q, (left, right, offset) in zip(chain.quadruplets, refs):
        assert q.left == left
        assert q.right == right
        assert q.offset == offset


def test_reference_endpoints():
    refs = reference_vectors()
    assert refs[0] == (words.A, words.C, 0)
    assert refs[13] == (words.A, words.C, 0)
    assert tuple(offset for _, _, offset in refs) == EXPECTED_OFFSETS


def test_step_soundness_against_simulation(chain):
    # every certificate commutes with direct simulation for small powers
    for cert in chain.step_certificates:
        for n in range(4):
            for m in range(4):
                start = instantiate(cert.source, n, m)
                expected = instantiate(cert.derived, n, m)
                assert full_pass_simulated(start) == expected


def test_full_pass_of_b_is_second_stage_instance(chain):
    second = chain.quadruplets[1]
    image = full_pass_simulated(words.B)
    assert image == instantiate(second, 0, 0)
    assert image == cut(second.mid, second.offset)
    assert image == full_pass_algebraic(words.B)
    # the derived mid word obeys the pass-output length law
    assert len(second.mid) == sum(4 if s == "1" else 2 for s in words.B[::3])


def test_wrong_seed_offset_does_not_certify():
    bad_seed = Quadruplet(words.A, words.B, words.C, 1)
    try:
        bad_chain = verify_chain(bad_seed)
    except InvariantViolated:
        return
    assert certificate_problems(bad_chain) != []


def test_zero_step_chain_fails_closure():
    chain = verify_chain(seed_quadruplet(), steps=0)
    assert not chain.closure_ok
    assert chain.quadruplets == (seed_quadruplet(),)


def test_instantiate_with_zero_powers_is_mid_word():
    assert instantiate(seed_quadruplet(), 0, 0) == words.B


def test_instantiate_single_powers():
    word = instantiate(seed_quadruplet(), 1, 1)
    assert word == words.A + words.B + words.C
    assert len(word) == 2474


def test_instantiate_applies_cut():
    offset_seed = Quadruplet(words.A, words.B, words.C, 2)
    assert instantiate(offset_seed, 0, 0) == words.B[2:]


def test_instantiate_rejects_negative_powers():
    with pytest.raises(ValueError):
        instantiate(seed_quadruplet(), -1, 0)


def test_direct_growth_at_origin():
    outcome = direct_growth_check(0, 0, 20000)
    assert outcome.kind is OutcomeKind.TARGET_REACHED
    assert outcome.steps_taken == 10444


def test_direct_growth_needs_budget():
    outcome = direct_growth_check(1, 0, 1)
    assert outcome.kind is OutcomeKind.BUDGET_EXHAUSTED


def test_chain_iteration_total(chain):
    total = total_pass_iterations(chain)
    assert total == 10444
    assert total <= 20000


def test_chain_iterations_match_direct_replay(chain):
    # the chain's predicted step count is exact, not just a bound
    for n in range(6):
        for m in range(6):
            predicted = total_pass_iterations(chain, n, m)
            outcome = direct_growth_check(n, m, budget=predicted)
            assert outcome.kind is OutcomeKind.TARGET_REACHED, (n, m)
            assert outcome.steps_taken == predicted


def test_recompute_checks_flags_tampering(chain):
    cert = chain.step_certificates[0]
    tampered = Quadruplet(
        cert.derived.left,
        cert.derived.mid[:-1] + ("0" if cert.derived.mid[-1] == "1" else "1"),
        cert.derived.right,
        cert.derived.offset,
    )
    checks = recompute_checks(cert.source, tampered)
    assert not checks.e_ok
    assert checks.d_ok and checks.f_ok


def test_certificate_document_round_trip(chain):
    text = render_certificate(chain)
    parsed = parse_certificate(text)
    assert parsed == chain
    assert render_certificate(parsed) == text
    assert certificate_problems(parsed) == []


def test_certificate_parse_rejects_malformed_documents(chain):
    text = render_certificate(chain)
    with pytest.raises(ValueError):
        parse_certificate(text.replace("version: 1", "version: 9", 1))
    with pytest.raises(ValueError):
        parse_certificate("not a document\n")
    truncated = "".join(text.splitlines(keepends=True)[:-2])
    with pytest.raises(ValueError):
        parse_certificate(truncated + "closure_ok: true\n")
    with pytest.raises(ValueError):
        parse_certificate(text.replace("step.1.checks.l_a: pass", "step.1.checks.l_a: yes", 1))


def test_certificate_problems_catch_word_tampering(chain):
    text = render_certificate(chain)
    lines = text.splitlines(keepends=True)
    target = next(i for i, line in enumerate(lines) if line.startswith("step.3.derived.a: "))
    word = lines[target].split(": ")[1].strip()
    flipped = ("1" if word[0] == "0" else "0") + word[1:]
    lines[target] = f"step.3.derived.a: {flipped}\n"
    tampered = parse_certificate("".join(lines))
    problems = certificate_problems(tampered)
    assert any("step.3" in p or "reference" in p for p in problems)
    assert problems != []


def test_certificate_problems_catch_flag_tampering(chain):
    text = render_certificate(chain)
    tampered = parse_certificate(
        text.replace("step.5.checks.y_eq: pass", "step.5.checks.y_eq: fail", 1)
    )
    problems = certificate_problems(tampered)
    assert any("step.5.checks.y_eq" in p for p in problems)
