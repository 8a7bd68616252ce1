import pytest

import wittfil


def test_level_example():
    assert wittfil.level("W(t^-3; 0)", n=2) == {"naive": 6, "filF": 6, "flat_min": 7}


def test_modulus_example():
    assert wittfil.modulus("1/x") == {"divisor": [{"place": "x", "mult": 2}], "degree": 2}


def test_swan_and_symbol():
    assert wittfil.swan("t^-3") == {"swan": 3, "rsw": {"dlogt": "t^-3 * 1"}}
    out = wittfil.symbol("W(0; t^-1)", "{1 + t}", n=2)
    assert out["value"] == ["0", "1"] and out["group"] == "W2"


def test_verify_small_suite():
    assert "prop6.4" in wittfil.suite_names()
    assert wittfil.verify("prop6.4", seed=1, trials=20) == {"passed": True, "instances": 20}


def test_errors_map_to_exit_codes():
    with pytest.raises(wittfil.WittfilError) as e:
        wittfil.level("W(t^-3 +")
    assert e.value.exit_code == 2
    with pytest.raises(wittfil.WittfilError) as e:
        wittfil.level("t^-4 + O(t^-2)")
    assert e.value.exit_code == 3
