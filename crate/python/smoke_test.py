"""Smoke test for the hpart Python extension.

Build and install with `pip install ./crates/py --no-build-isolation`, then
run `python python/smoke_test.py`.
"""

import hpart


def main():
    c5 = hpart.Graph.cycle(5)
    assert c5.n == 5 and c5.max_degree() == 2
    assert hpart.parse_dimacs(c5.to_dimacs()) == c5

    problem = hpart.Problem(c5, [2, 0], ["regular", "zero"])
    assert problem.main_bound() == 2

    stats = problem.solve_stats(initial=[[0, 1, 2, 3, 4], []])
    assert stats["parts"] == [[0, 1, 2, 3], [4]], stats
    assert stats["isolations"] == 1
    assert problem.is_valid(stats["parts"])
    assert problem.brute_force() == [[0, 1, 2, 3], [4]]

    bad = problem.verify([[0, 1, 2, 3, 4], []])
    assert [v["kind"] for v in bad] == ["height"] and bad[0]["part"] == 0
    assert problem.potential([[0, 1, 2, 3, 4], []]) == (-5, 1, 1)

    assert hpart.height(c5, "regular", 2, [0, 1, 2, 3, 4]) == 1
    assert hpart.critical_vertices(c5, "regular", 2) == [0, 1, 2, 3, 4]

    petersen = hpart.Problem(hpart.Graph.petersen(), [1, 1, 1])
    parts = petersen.partition_main()
    assert petersen.is_valid(parts)
    assert petersen.is_valid(petersen.partition_lovasz())

    try:
        hpart.Problem(c5, [0, 0]).partition_main()
    except hpart.HypothesisError:
        pass
    else:
        raise AssertionError("expected HypothesisError")

    checked, failures = hpart.check_height_properties("regular", 2, n_max=5)
    assert checked == 772 and failures == []

    print("hpart smoke test passed")


if __name__ == "__main__":
    main()
