import json

from hypothesis import given, strategies as st

from fuzzbetween.report import Report, flatten, parse_table

json_leaves = st.one_of(st.none(), st.booleans(), st.integers(), st.floats(allow_nan=False, allow_infinity=False),
                        st.text())
json_values = st.recursive(json_leaves, lambda inner: st.one_of(
    st.lists(inner, max_size=4), st.dictionaries(st.text(max_size=5), inner, max_size=4)), max_leaves=20)


@given(st.dictionaries(st.text(max_size=5), json_values, max_size=4), json_values)
def test_table_and_json_carry_identical_values(results, extra):
    r = Report(command={"name": "x", "argv": []}, results={"r": results}, inputs={"extra": extra})
    from_json = flatten(json.loads(r.to_json()))
    assert parse_table(r.to_table()) == from_json


def test_json_is_canonical():
    a = Report(command={"name": "x"}, results={"b": 1, "a": 0.1})
    b = Report(command={"name": "x"}, results={"a": 0.1, "b": 1})
    assert a.to_json() == b.to_json()
    assert a.to_json().index('"a"') < a.to_json().index('"b"')


def test_dotted_keys_stay_unambiguous():
    rows = flatten({"a.b": 1, "a": {"b": 2}})
    assert len({p for p, _ in rows}) == 2
