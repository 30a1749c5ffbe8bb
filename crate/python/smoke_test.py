"""Smoke test for the twgr extension module.

Build and install first, e.g. `pip install maturin && maturin develop -m crates/python/Cargo.toml`,
then run `python python/smoke_test.py`.
"""

import json
import math

import twgr


def main():
    assert len(twgr.partitions(10)) == 42
    assert sum(twgr.class_size(p) for p in twgr.partitions(8)) == math.factorial(8)

    table = twgr.braiding_character("koszul", 2, 3)
    for parts, cycles, size, value, degree in table.rows:
        assert value == (-2) ** cycles and degree == 3
        assert value == twgr.oracle_trace(parts, 2, "koszul")
    assert json.loads(table.to_json())["twist"] == "koszul"

    for d in range(5):
        holds, _ = twgr.verify_sym_ext_identity(d, 10)
        assert holds
    assert twgr.ext_dim("koszul", 3, 2) == 3
    assert twgr.projector_dim([1, 1, 1], 2, "koszul") == 3

    assert twgr.chromatic_decision(2, 2, [1], [8]) == (-1, "ΣE_n")
    assert twgr.loop_bz2_integral(20) == -(2 ** 20) + 1
    assert twgr.count_twists([2]) == 2

    code, out, _ = twgr.cli(["extseries", "--twist", "koszul", "--dim", "2", "--order", "10", "--check-identity"])
    assert code == 0 and "identity holds" in out
    print("twgr smoke test: ok")


if __name__ == "__main__":
    main()
