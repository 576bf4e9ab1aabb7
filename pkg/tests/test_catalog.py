import json

import pytest

from qtensor import builtin, group_to_json, load_group
from qtensor.catalog import DEFAULT_CORPUS, ORDER_16, PRODUCT_INSTANCES, SMALL_P_GROUPS
from qtensor.errors import InvalidGroup, OrderLimit
from qtensor.groups import are_isomorphic, center

EXPECTED_ORDERS = {
    "1": 1, "C2": 2, "C3": 3, "C4": 4, "C2xC2": 4, "C6": 6, "S3": 6, "D4": 8, "Q8": 8,
    "C2xC4": 8, "E2^3": 8, "D6": 12, "S4": 24, "A4": 12, "A5": 60, "S5": 120,
    "Q8oC6": 24, "D4xC3": 24, "S3xC5": 30,
}


@pytest.mark.parametrize("name", sorted(EXPECTED_ORDERS))
def test_orders(name):
    assert builtin(name).order == EXPECTED_ORDERS[name]


@pytest.mark.parametrize("name", ORDER_16)
def test_order_16_distinct(name):
    G = builtin(name)
    assert G.order == 16
    others = [builtin(n) for n in ORDER_16 if n != name]
    assert not any(are_isomorphic(G, H) for H in others)


def test_prefixes_and_file(tmp_path):
    G = load_group("builtin:Q8")
    path = tmp_path / "g.json"
    path.write_text(json.dumps(group_to_json(G)))
    H = load_group(f"file:{path}")
    assert are_isomorphic(G, H)


def test_perm_spec():
    G = load_group({"kind": "perm", "degree": 3, "generators": [[1, 0, 2], [1, 2, 0]]})
    assert G.order == 6 and not G.is_abelian


def test_errors():
    with pytest.raises(InvalidGroup):
        load_group("builtin:X9")
    with pytest.raises(OrderLimit):
        load_group("S5", max_order=16)
    with pytest.raises(InvalidGroup):
        load_group({"kind": "cayley", "table": [[0, 1], [1, 2]]})


def test_q8oc6_is_central_product():
    G = builtin("Q8oC6")
    assert center(G).order == 6 and G.exponent == 12


def test_corpora_load():
    for n in DEFAULT_CORPUS + SMALL_P_GROUPS + PRODUCT_INSTANCES:
        builtin(n)
