"""Shared builders and hypothesis strategies for the test suite."""

from __future__ import annotations

import numpy as np
from hypothesis import strategies as st

from monocert import (
    MonotoneFunction,
    make_dnf,
    make_truth_table,
    make_weighted_real,
    random_monotone_dnf,
)


def monotone_bool_table(n: int, rng: np.random.Generator) -> np.ndarray:
    """Random monotone 0/1 table of length 2**n via upward max closure."""
    t = rng.integers(0, 2, size=1 << n, dtype=np.uint8)
    for i in range(n):
        t3 = t.reshape(-1, 2, 1 << i)
        np.maximum(t3[:, 1, :], t3[:, 0, :], out=t3[:, 1, :])
    return t


def monotone_real_table(n: int, rng: np.random.Generator) -> np.ndarray:
    t = rng.integers(0, 8, size=1 << n).astype(np.float64)
    for i in range(n):
        t3 = t.reshape(-1, 2, 1 << i)
        np.maximum(t3[:, 1, :], t3[:, 0, :], out=t3[:, 1, :])
    return t


def real_table_function(table: np.ndarray) -> MonotoneFunction:
    """Wrap a dense real-valued table as a function over its bitmasks."""
    arr = np.asarray(table, dtype=np.float64).copy()
    n = (arr.size - 1).bit_length()
    assert arr.size == 1 << n
    arr.setflags(write=False)
    return MonotoneFunction(n, "real", "truth_table",
                            lambda m, _t=arr: float(_t[m]), {"table": arr})


def custom_function(n: int, kind: str, eval_mask) -> MonotoneFunction:
    """A function with no dense payload, exercising the generic table path."""
    return MonotoneFunction(n, kind, "custom", eval_mask)


@st.composite
def bool_table_functions(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    table = monotone_bool_table(n, np.random.default_rng(seed))
    return make_truth_table(n, table)


@st.composite
def real_table_functions(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    return real_table_function(monotone_real_table(n, np.random.default_rng(seed)))


@st.composite
def dnf_functions(draw, min_n=2, max_n=12):
    n = draw(st.integers(min_n, max_n))
    num = draw(st.integers(1, 6))
    width = draw(st.integers(1, min(5, n)))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_monotone_dnf(n, num, width, seed)


@st.composite
def weighted_real_functions(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    weights = draw(st.lists(st.integers(0, 7), min_size=n, max_size=n))
    return make_weighted_real(n, weights)


@st.composite
def functions_with_mask(draw, functions):
    f = draw(functions)
    mask = draw(st.integers(0, (1 << f.n) - 1))
    return f, mask


def or_function(n: int) -> MonotoneFunction:
    return make_dnf(n, [[i] for i in range(1, n + 1)])


def and_function(n: int, members=None) -> MonotoneFunction:
    return make_dnf(n, [list(members) if members is not None
                        else list(range(1, n + 1))])
