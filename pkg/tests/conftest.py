import itertools

import pytest

from levifusion import LabeledDiagram, build_diagram


def full_labelings(diagram):
    """Every assignment of +/- to all vertices."""
    n = diagram.rank
    for signs in itertools.product("+-", repeat=n):
        yield LabeledDiagram(
            diagram,
            frozenset(i + 1 for i, s in enumerate(signs) if s == "+"),
            frozenset(i + 1 for i, s in enumerate(signs) if s == "-"))


@pytest.fixture(autouse=True)
def _cache_dir(tmp_path_factory, monkeypatch):
    """Keep signature-table caches inside the test tree."""
    monkeypatch.setenv("FUSION_CACHE_DIR",
                       str(tmp_path_factory.getbasetemp() / "fusion-cache"))


__all__ = ["full_labelings", "build_diagram"]
