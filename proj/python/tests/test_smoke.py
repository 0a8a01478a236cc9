import pytest

import bordercert


def test_order_ideal_counts():
    oid = bordercert.OrderIdeal("5,2,3,3,0")
    assert oid.mu == 18
    assert oid.hilbert == [1, 5, 5, 7]
    assert oid.dim_u == 86
    assert len(oid.basis) == oid.mu
    assert len(oid.border) == oid.nu


def test_shape_conversion():
    assert bordercert.shape_to_signature(5, 2, 2, 3) == "5,2,3,3,1"


def test_inspect_matches_order_ideal():
    info = bordercert.inspect((4, 3, 4, 2, 1))
    assert info["hilbert"] == [1, 4, 10, 7, 9]
    assert info["principalDim"] == 4 * info["mu"]
    assert list(info)[:3] == ["signature", "mu", "nu"]


def test_modify_dump():
    dump = bordercert.modify("3,4,6,2,1")
    assert "Upsilon(b[12]) = (theta[1])*x2^2*x3^2" in dump
    assert "(theta[2] - theta[1]^2)*x2^2*x3^2" in dump


def test_tangent_dimension_agrees_across_fields():
    exact = bordercert.tangent_dimension("5,2,3,3,1", seed=4, field="exact")
    prime = bordercert.tangent_dimension("5,2,3,3,1", seed=4, field="prime")
    assert exact == prime == 59


def test_certify_is_deterministic():
    a = bordercert.certify("5,2,3,3,1", trials=2, seed=7, timings=False)
    b = bordercert.certify("5,2,3,3,1", trials=2, seed=7, timings=False)
    assert a == b
    assert a["verdict"] == "ELEMENTARY_CERTIFIED"
    assert "timings" not in a


def test_bad_signature_raises_value_error():
    with pytest.raises(ValueError):
        bordercert.OrderIdeal("5,2,3")
    with pytest.raises(ValueError):
        bordercert.certify("5,2,3,3,0", field="complex")
