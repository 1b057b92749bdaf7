import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from f1hall.formats import load_quiver  # noqa: E402
from f1hall.hall import HallAlgebra  # noqa: E402
from f1hall.hallmod import HallModule  # noqa: E402

QUIVER_DIR = Path(__file__).resolve().parent.parent / "quivers"


@pytest.fixture(scope="session")
def point():
    return load_quiver("point")


@pytest.fixture(scope="session")
def a2():
    return load_quiver("a2")


@pytest.fixture(scope="session")
def loop():
    return load_quiver("loop")


@pytest.fixture(scope="session")
def quivers(point, a2, loop):
    return {"point": point, "a2": a2, "loop": loop}


@pytest.fixture(scope="session")
def algebras(quivers):
    return {k: HallAlgebra(q) for k, q in quivers.items()}


@pytest.fixture(scope="session")
def modules(algebras):
    return {k: HallModule(a) for k, a in algebras.items()}
