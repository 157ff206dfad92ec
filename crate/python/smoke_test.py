"""Smoke test for the bimeasure_py extension module.

Build and place the module next to this file first:

    cargo build -p bimeasure-py --release
    cp target/release/libbimeasure_py.so python/bimeasure_py.so

then run `python3 python/smoke_test.py`.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

import bimeasure_py as bm


def main() -> None:
    kc3 = bm.carrier("kC3", "Fp:5")
    assert kc3.dim() == 3
    assert kc3.validate()
    assert kc3.is_commutative() and kc3.is_cocommutative()
    assert kc3.field() == "F5"

    h4 = bm.carrier("H4", "Q")
    assert h4.dim() == 4
    assert not h4.is_commutative()
    assert h4.abelianization().dim() == 2
    assert h4.cocommutative_part_dim() == 2
    assert h4.dual().validate()

    # carriers round-trip through the JSON definition format
    again = bm.carrier_from_json(kc3.to_json())
    assert again.dim() == 3 and again.validate()

    # enumeration counts with known closed forms
    kc2_f3 = bm.carrier("kC2", "Fp:3")
    assert bm.bimeasuring_count(kc2_f3, kc2_f3) == 2
    kc2_f7 = bm.carrier("kC2", "Fp:7")
    kc3_f7 = bm.carrier("kC3", "Fp:7")
    assert bm.bimeasuring_count(kc2_f7, kc3_f7) == 1

    # the symmetric-group matched pair
    assert bm.s3_bismash("Fp:7").dim() == 6
    assert bm.s3_skew_group_order("Fp:7") == 3
    assert bm.s3_skew_group_order("Fp:5") == 1

    # the fundamental isomorphism pins regular coinvariants to one dimension
    assert kc3.regular_coinvariant_dim() == 1

    print("smoke test: ok")


if __name__ == "__main__":
    main()
