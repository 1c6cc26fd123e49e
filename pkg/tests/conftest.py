"""Shared fixtures: the exhaustive small-diagram sweep, computed once."""

from __future__ import annotations

from dataclasses import dataclass

import pytest

from jonesweight import (
    ChordDiagram,
    IntPoly,
    build_lid,
    deg4_signed_sums,
    enumerate_diagrams,
    parse_cdp,
    wj_via_permanent,
    wj_via_recursion,
    wjj_via_permanent,
)
from jonesweight.statesum import assemble_state_sum

GOLDEN_CDP = "CDP[5,7,6,8,1,3,2,4]"
GOLDEN_WJ = IntPoly((0, -40, -4, 16, 4))
CROSS_CDP = "CDP[3,4,1,2]"
CROSS_WJ = IntPoly((0, -2, -1))


@dataclass
class DiagramData:
    diagram: ChordDiagram
    permanent: IntPoly
    statesum: IntPoly
    recursion: IntPoly
    census_sums: list[int]
    im_permanent: int


@pytest.fixture(scope="session")
def exhaustive_data() -> dict[int, list[DiagramData]]:
    """All diagrams with up to 4 chords, evaluated by every method."""
    data: dict[int, list[DiagramData]] = {}
    for n in range(5):
        entries = []
        for d in enumerate_diagrams(n):
            sums = deg4_signed_sums(build_lid(d))
            entries.append(
                DiagramData(
                    diagram=d,
                    permanent=wj_via_permanent(d),
                    statesum=assemble_state_sum(sums),
                    recursion=wj_via_recursion(d),
                    census_sums=sums,
                    im_permanent=wjj_via_permanent(d),
                )
            )
        data[n] = entries
    return data


@pytest.fixture(scope="session")
def golden_diagram() -> ChordDiagram:
    return parse_cdp(GOLDEN_CDP)


@pytest.fixture(scope="session")
def cross_diagram() -> ChordDiagram:
    return parse_cdp(CROSS_CDP)
