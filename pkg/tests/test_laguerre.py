import itertools
import json
import math
from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from coxdrops import perm_core as pc
from coxdrops.involutions import fixed_points, involution_a
from coxdrops.laguerre import (LaguerreHistory, area, cyclic_classify,
                               even_subset_to_path, fz_history, heights,
                               laguerre_histories, max_height, motzkin_paths,
                               motzkin_shape, nest, nest_at,
                               path_to_even_subset, path_weight,
                               two_motzkin_paths)


# ---------------------------------------------------------------------------
# cyclic classes and nesting
# ---------------------------------------------------------------------------

def test_cyclic_classify_examples():
    for i in (1, 2, 3):
        assert cyclic_classify((1, 2, 3), i) == "Fix"
    assert cyclic_classify((2, 1), 1) == "CVal"
    assert cyclic_classify((2, 1), 2) == "CPk"
    assert [cyclic_classify((4, 3, 2, 1), i) for i in range(1, 5)] == \
        ["CVal", "CVal", "CPk", "CPk"]
    with pytest.raises(ValueError):
        cyclic_classify((2, 1), 3)


def test_cyclic_classes_partition(groups):
    for w in groups["S"](5):
        for i in range(1, 6):
            assert cyclic_classify(w, i) in ("CPk", "CVal", "Cda", "Cdd", "Fix")


def test_nest_examples():
    assert all(nest_at((1, 2, 3), i) == 0 for i in (1, 2, 3))
    assert nest_at((4, 3, 2, 1), 2) == 1
    assert nest_at((4, 3, 2, 1), 3) == 1
    assert nest((4, 3, 2, 1)) == 2
    assert nest((3, 1, 2)) == 0


# ---------------------------------------------------------------------------
# histories
# ---------------------------------------------------------------------------

def test_fz_history_examples():
    assert fz_history((1, 2, 3)) == LaguerreHistory("EEE", (0, 0, 0))
    assert fz_history((2, 1)) == LaguerreHistory("NS", (0, 0))
    assert fz_history((4, 3, 2, 1)) == LaguerreHistory("NNSS", (0, 1, 1, 0))


def test_history_json():
    doc = json.loads(fz_history((4, 3, 2, 1)).to_json())
    assert doc == {"steps": "NNSS", "labels": [0, 1, 1, 0]}


def test_history_validity_bounds():
    assert LaguerreHistory("NS", (0, 0)).is_valid()
    assert not LaguerreHistory("NS", (1, 0)).is_valid()   # N label above height
    assert not LaguerreHistory("NS", (0, 1)).is_valid()   # S label needs < h
    assert not LaguerreHistory("SN", (0, 0)).is_valid()   # dips below zero
    assert not LaguerreHistory("NE", (0, 0)).is_valid()   # ends at height 1


def test_fz_steps_follow_cyclic_classes(groups):
    step_of = {"CVal": "N", "CPk": "S", "Cda": "E", "Fix": "E", "Cdd": "D"}
    for w in groups["S"](5):
        h = fz_history(w)
        for i, step in enumerate(h.steps, start=1):
            assert step == step_of[cyclic_classify(w, i)]
            assert h.labels[i - 1] == nest_at(w, i)


def test_fz_suite_small(groups):
    for n in range(1, 7):
        seen = set()
        for w in groups["S"](n):
            h = fz_history(w)
            assert h.is_valid()
            ar = area(h.steps)
            assert pc.depth(w) == ar
            assert pc.inv(w) == ar + sum(h.labels)
            assert pc.iexc(w) == h.steps.count("N") + h.steps.count("D")
            seen.add((h.steps, h.labels))
        assert len(seen) == math.factorial(n)


def test_history_enumeration_matches_image(groups):
    for n in range(1, 6):
        image = {(h.steps, h.labels) for h in map(fz_history, groups["S"](n))}
        domain = {(h.steps, h.labels) for h in laguerre_histories(n)}
        assert image == domain
        assert len(domain) == math.factorial(n)


# ---------------------------------------------------------------------------
# paths
# ---------------------------------------------------------------------------

def test_area_examples():
    assert area("EEE") == 0
    assert area("NS") == 1
    assert area("NNSS") == 4


def test_max_height_examples():
    assert max_height("EEE") == 0
    assert max_height("NS") == 1
    assert max_height("NNSS") == 2


def test_heights_are_prestep():
    assert heights("NEDS") == (0, 1, 1, 1)


def test_invalid_paths_rejected():
    with pytest.raises(ValueError):
        area("SN")
    with pytest.raises(ValueError):
        area("NQ")
    with pytest.raises(ValueError):
        path_weight("NEDS")                    # D is not a Motzkin step


def test_motzkin_counts():
    want = [1, 1, 2, 4, 9, 21, 51, 127, 323]
    for n, m in enumerate(want):
        if n == 0:
            continue
        assert sum(1 for _ in motzkin_paths(n)) == m
    # 2-Motzkin paths of length n are counted by the Catalan number C_{n+1}
    catalan = [1, 2, 5, 14, 42]
    for n in range(1, 5):
        assert sum(1 for _ in two_motzkin_paths(n)) == catalan[n]


def test_motzkin_shape_examples():
    assert motzkin_shape((1, 2, 3)) == "EEE"
    assert motzkin_shape((2, 1)) == "NS"
    assert motzkin_shape((3, 1, 2)) == "NES"
    assert motzkin_shape((2, 3, 1)) == "NES"


def test_path_weight_examples():
    assert path_weight("EEEE") == 1
    assert path_weight("NES") == 3
    assert sum(path_weight(p) for p in motzkin_paths(4)) == 24


def test_weight_counts_preimages(groups):
    for n in range(1, 7):
        pre = Counter(motzkin_shape(w) for w in groups["S"](n))
        paths = list(motzkin_paths(n))
        assert set(pre) == set(paths)
        for steps in paths:
            assert path_weight(steps) == pre[steps]
            # odd weight exactly at height <= 1
            assert (path_weight(steps) % 2 == 1) == (max_height(steps) <= 1)


def test_weight_parity_matches_height_up_to_8():
    for n in range(1, 9):
        for steps in motzkin_paths(n):
            assert (path_weight(steps) % 2 == 1) == (max_height(steps) <= 1)


def test_shape_preserved_by_involution_small(groups):
    for n in range(1, 7):
        for w in groups["S"](n):
            assert motzkin_shape(w) == motzkin_shape(involution_a(w).output)


def test_fixed_points_cover_low_paths(groups):
    for n in range(1, 7):
        shapes = {motzkin_shape(w) for w in fixed_points("S", n)}
        low = {p for p in motzkin_paths(n) if max_height(p) <= 1}
        assert shapes == low
        assert len(shapes) == 2 ** (n - 1)


# ---------------------------------------------------------------------------
# even subsets <-> height <= 1 paths
# ---------------------------------------------------------------------------

def test_even_subset_examples():
    assert even_subset_to_path((), 3) == "EEE"
    assert even_subset_to_path((1, 3), 3) == "NES"
    with pytest.raises(ValueError):
        even_subset_to_path((1,), 3)
    with pytest.raises(ValueError):
        even_subset_to_path((1, 7), 3)


def test_even_subsets_biject_onto_low_paths():
    for n in range(1, 6):
        images = set()
        for r in range(0, n + 1, 2):
            for subset in itertools.combinations(range(1, n + 1), r):
                steps = even_subset_to_path(subset, n)
                assert max_height(steps) <= 1
                assert path_to_even_subset(steps) == subset
                images.add(steps)
        assert images == {p for p in motzkin_paths(n) if max_height(p) <= 1}
        assert len(images) == 2 ** (n - 1)


def test_path_to_even_subset_rejects_tall_paths():
    with pytest.raises(ValueError):
        path_to_even_subset("NNSS")


@given(st.integers(1, 8), st.data())
def test_subset_path_roundtrip(n, data):
    size = data.draw(st.sampled_from(range(0, n + 1, 2)))
    subset = tuple(sorted(data.draw(
        st.sets(st.integers(1, n), min_size=size, max_size=size))))
    assert path_to_even_subset(even_subset_to_path(subset, n)) == subset
