import random

import pytest

from core.composition import tensor
from core.domain import Domain
from core.fishburn import fishburn_domain
from core.models import AppSettings
from services.corpus import DomainCorpus


def pytest_addoption(parser):
    parser.addoption(
        "--seed",
        action="store",
        type=int,
        default=AppSettings().seed,
        help="ランダムコーパスのシード",
    )


@pytest.fixture
def seed(request) -> int:
    return request.config.getoption("--seed")


@pytest.fixture
def rng(seed) -> random.Random:
    return random.Random(seed)


@pytest.fixture
def corpus(rng) -> DomainCorpus:
    return DomainCorpus(rng=rng)


# 3選択肢の極大領域（bN1 / aN2 / bN3 のみを満たす）
@pytest.fixture
def cd3_top() -> Domain:
    return Domain.from_texts("abc", ["abc", "acb", "cab", "cba"])


@pytest.fixture
def cd3_middle() -> Domain:
    return Domain.from_texts("abc", ["abc", "acb", "bca", "cba"])


@pytest.fixture
def cd3_bottom() -> Domain:
    return Domain.from_texts("abc", ["abc", "bac", "bca", "cba"])


@pytest.fixture
def f4() -> Domain:
    return fishburn_domain(4)


@pytest.fixture
def tensor_e() -> Domain:
    """F_3(1,2,3) ⊗ F_2(4,5) で継ぎ目 321, 54"""
    f3 = fishburn_domain(3)
    f2 = fishburn_domain(2).with_labels(["4", "5"])
    return tensor(f3, f2, f3.parse("3 2 1"), f2.parse("5 4")).domain


@pytest.fixture
def pair_left() -> Domain:
    return Domain.from_texts("ab", ["ab", "ba"])


@pytest.fixture
def pair_right() -> Domain:
    return Domain.from_texts("cde", ["cde", "dec", "dce", "edc"])
