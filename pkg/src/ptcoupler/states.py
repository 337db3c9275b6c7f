"""Input states at the waveguide pair entrance and their photon moments.

The moment tables below are what the observable formulas consume: second
moments (n_a, n_b, <a^dag b>) and the normally ordered fourth moments that
survive for each state.  They are plain Fock algebra; the test suite
re-derives every entry with the symbolic ladder evaluator in `oracle` so a
transcription slip cannot survive.
"""

from dataclasses import dataclass
from enum import Enum

_SQRT_HALF = 0.5 ** 0.5


class InputState(Enum):
    VACUUM = "vacuum"
    PHOTON_A = "a"  # |1, 0>
    PHOTON_B = "b"  # |0, 1>
    NOON2 = "noon"  # (|2, 0> + |0, 2>) / sqrt(2)


@dataclass(frozen=True)
class FourthMoments:
    """Normally ordered fourth moments: <a+a+aa>, <b+b+bb>, <a+b+ab>, <a+a+bb>, <b+b+aa>."""

    a2a2: float
    b2b2: float
    abab: float
    a2b2: complex
    b2a2: complex


SECOND_MOMENTS: dict[InputState, tuple[float, float, complex]] = {
    InputState.VACUUM: (0.0, 0.0, 0j),
    InputState.PHOTON_A: (1.0, 0.0, 0j),
    InputState.PHOTON_B: (0.0, 1.0, 0j),
    InputState.NOON2: (1.0, 1.0, 0j),
}

# For the two-photon NOON superposition each |2_x> component contributes with
# weight 1/2: <a+a+aa> = (2 + 0)/2 = 1, and the pair-exchange coherence
# <a+a+bb> = <2,0|a+a+bb|0,2>/2 = 1.  The mixed <a+b+ab> needs one photon in
# each arm and vanishes on both components.
FOURTH_MOMENTS: dict[InputState, FourthMoments] = {
    InputState.VACUUM: FourthMoments(0.0, 0.0, 0.0, 0j, 0j),
    InputState.PHOTON_A: FourthMoments(0.0, 0.0, 0.0, 0j, 0j),
    InputState.PHOTON_B: FourthMoments(0.0, 0.0, 0.0, 0j, 0j),
    InputState.NOON2: FourthMoments(1.0, 1.0, 0.0, 1.0 + 0j, 1.0 + 0j),
}

#: Fock-basis amplitudes {(n_a, n_b): amplitude} for each input state.
FOCK_AMPLITUDES: dict[InputState, dict[tuple[int, int], complex]] = {
    InputState.VACUUM: {(0, 0): 1.0},
    InputState.PHOTON_A: {(1, 0): 1.0},
    InputState.PHOTON_B: {(0, 1): 1.0},
    InputState.NOON2: {(2, 0): _SQRT_HALF, (0, 2): _SQRT_HALF},
}
