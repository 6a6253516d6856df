import random
import sys
from itertools import combinations
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from wlpkit.graphs import make_graph  # noqa: E402


def all_labeled_graphs(max_n):
    for n in range(1, max_n + 1):
        pairs = list(combinations(range(n), 2))
        for bits in range(1 << len(pairs)):
            yield make_graph(n, [e for k, e in enumerate(pairs) if bits >> k & 1])


def random_graphs(count, sizes=(5, 6), seed=20240601):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.choice(sizes)
        q = rng.uniform(0.15, 0.85)
        out.append(make_graph(n, [e for e in combinations(range(n), 2) if rng.random() < q]))
    return out


def corpus(n_random=200):
    return list(all_labeled_graphs(4)) + random_graphs(n_random)


@pytest.fixture(scope="session")
def small_corpus():
    return list(all_labeled_graphs(4)) + random_graphs(40, seed=7)
