"""Smoke test for the pyhamsym extension module."""

import json

import pyhamsym


def main():
    act = pyhamsym.CircleAction(1, 1, 2, "2")
    assert act.manifold == "S2xS2"
    assert act.homotopy_type() == "OmegaS3xT3"
    assert sorted(act.strata()) == [0, 2]
    assert act.codim(2) == 1

    report = json.loads(act.classify())
    assert report["homotopy_type"] == "OmegaS3xT3"

    a = pyhamsym.CircleAction(-1, 0, 2, "2")
    b = pyhamsym.CircleAction(1, 0, 2, "2")
    assert a.equivalent(b)
    assert a.graph(canonical=True) == b.graph(canonical=True)
    assert "A=1" in b.graph("dot")

    try:
        pyhamsym.CircleAction(2, 4, 2, "2")
    except ValueError as e:
        assert "non-effective" in str(e)
    else:
        raise AssertionError("gcd 2 accepted")

    assert pyhamsym.homology_ranks("OmegaS3xT3", 4) == [1, 3, 4, 4, 4]
    assert pyhamsym.homology_ranks("S1xSO3", 4, 2) == [1, 2, 2, 2, 1]
    pres = json.loads(pyhamsym.presentation(2))
    assert len(pres["generators"]) == 4
    prod = json.loads(pyhamsym.pontryagin_multiply('{"y": "1"}', '{"x": "1"}'))
    assert prod == {"x y": "-1", "w": "1"}
    print("pyhamsym smoke test passed")


if __name__ == "__main__":
    main()
