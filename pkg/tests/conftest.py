import os
import shutil

import pytest

from overfix.config import AnalysisConfig
from overfix.frontend import parse, resolve_types
from overfix.symex import Analyzer

CORPUS = os.path.join(os.path.dirname(__file__), os.pardir,
                      "src", "overfix", "corpus")


def typed_unit(src: str, path: str = "test.c"):
    return resolve_types(parse(path, src))


def analyze(src: str, path: str = "test.c", config: AnalysisConfig | None = None,
            **kwargs):
    unit = typed_unit(src, path)
    analyzer = Analyzer(unit, config or AnalysisConfig(), **kwargs)
    return analyzer.run()


@pytest.fixture(scope="session")
def corpus_dir() -> str:
    return os.path.abspath(CORPUS)


@pytest.fixture()
def corpus_copy(tmp_path, corpus_dir) -> str:
    for name in sorted(os.listdir(corpus_dir)):
        if name.endswith(".c"):
            shutil.copy(os.path.join(corpus_dir, name), tmp_path)
    return str(tmp_path)
