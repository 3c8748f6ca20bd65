from collections.abc import Callable

import pytest
from hypothesis import settings

from classes.document.graph_document import GraphDocument
from classes.graph.fuzzy_graph import GraphValidator, IVFuzzyGraph
from constants import DATA_DIR

settings.register_profile('ivfg', deadline=None)
settings.load_profile('ivfg')


@pytest.fixture
def load() -> Callable[[str], IVFuzzyGraph]:
    def _load(name: str) -> IVFuzzyGraph:
        return GraphValidator.validate(GraphDocument.load(DATA_DIR / f'{name}.json'))

    return _load


@pytest.fixture
def triangle(load) -> IVFuzzyGraph:
    return load('triangle')


@pytest.fixture
def complete_triangle(load) -> IVFuzzyGraph:
    return load('complete_triangle')


@pytest.fixture
def path_abc(load) -> IVFuzzyGraph:
    return load('path_abc')


@pytest.fixture
def constant_path4(load) -> IVFuzzyGraph:
    return load('constant_path4')
