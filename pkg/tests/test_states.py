"""The hard-coded moment tables must match the symbolic ladder evaluation."""

import math

import pytest

from ptcoupler.oracle import apply_ladder, fock_expectation
from ptcoupler.states import (
    FOCK_AMPLITUDES,
    FOURTH_MOMENTS,
    SECOND_MOMENTS,
    InputState,
)


@pytest.mark.parametrize("state", list(InputState))
def test_amplitudes_normalized(state):
    norm = sum(abs(a) ** 2 for a in FOCK_AMPLITUDES[state].values())
    assert norm == pytest.approx(1.0, abs=1e-15)


def test_ladder_evaluator_basics():
    two_zero = {(2, 0): 1.0}
    assert fock_expectation(two_zero, [("a", True), ("a", False)]) == pytest.approx(2.0)
    assert fock_expectation(two_zero, [("b", True), ("b", False)]) == 0
    # annihilating an empty mode kills the ket
    assert apply_ladder(two_zero, [("b", False)]) == {}
    # a+ a+ |0,0> = sqrt(2) |2,0>
    raised = apply_ladder({(0, 0): 1.0}, [("a", True), ("a", True)])
    assert raised == {(2, 0): pytest.approx(math.sqrt(2.0))}
    # odd operator strings have no diagonal expectation
    assert fock_expectation(two_zero, [("a", False)]) == 0


@pytest.mark.parametrize("state", list(InputState))
def test_second_moment_table(state):
    amps = FOCK_AMPLITUDES[state]
    n_a, n_b, m = SECOND_MOMENTS[state]
    assert fock_expectation(amps, [("a", True), ("a", False)]) == pytest.approx(n_a)
    assert fock_expectation(amps, [("b", True), ("b", False)]) == pytest.approx(n_b)
    assert fock_expectation(amps, [("a", True), ("b", False)]) == pytest.approx(m)


@pytest.mark.parametrize("state", list(InputState))
def test_fourth_moment_table(state):
    amps = FOCK_AMPLITUDES[state]
    fm = FOURTH_MOMENTS[state]
    cases = {
        "a2a2": [("a", True), ("a", True), ("a", False), ("a", False)],
        "b2b2": [("b", True), ("b", True), ("b", False), ("b", False)],
        "abab": [("a", True), ("b", True), ("a", False), ("b", False)],
        "a2b2": [("a", True), ("a", True), ("b", False), ("b", False)],
        "b2a2": [("b", True), ("b", True), ("a", False), ("a", False)],
    }
    for name, ops in cases.items():
        assert fock_expectation(amps, ops) == pytest.approx(getattr(fm, name)), name


def test_noon_pair_exchange_coherence_value():
    # the superposition halves each component's weight: <a+ a+ a a> = 1, not 2
    amps = FOCK_AMPLITUDES[InputState.NOON2]
    assert fock_expectation(amps, [("a", True), ("a", True), ("a", False), ("a", False)]) \
        == pytest.approx(1.0)
    assert fock_expectation(amps, [("a", True), ("a", True), ("b", False), ("b", False)]) \
        == pytest.approx(1.0)
