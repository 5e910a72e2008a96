#!/usr/bin/env python3
"""Smoke test for the stacklab_py extension module.

Builds nothing itself: run `cargo build -p stacklab-py --release` first.
The compiled cdylib is staged under an importable name in a temporary
directory, imported, and probed against known values.
"""

import cmath
import math
import shutil
import sys
import tempfile
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent


def stage_module(tmp: Path) -> None:
    candidates = [
        REPO / "target" / "release" / "libstacklab_py.so",
        REPO / "target" / "debug" / "libstacklab_py.so",
    ]
    for built in candidates:
        if built.exists():
            shutil.copy(built, tmp / "stacklab_py.so")
            return
    sys.exit(
        "no built extension found; run `cargo build -p stacklab-py --release`"
    )


def approx(a: float, b: float, tol: float) -> bool:
    return abs(a - b) <= tol


def main() -> None:
    with tempfile.TemporaryDirectory() as tmp:
        stage_module(Path(tmp))
        sys.path.insert(0, tmp)
        import stacklab_py as sl

        assert sl.count("ss", 4) == 12
        assert sl.count("p", 100) == 190569292
        assert sl.series("gs", 10) == sl.series("p", 10)
        assert sl.series("dm", 5) == [0, 1, 1, 3, 5, 9]
        assert sl.oracle_count("hs", 4) == 6
        assert len(sl.enumerate_stacks("g", 6)) == sl.count("g", 6)

        assert set(sl.variants()) >= {"s", "ss", "gs", "dm", "l"}
        for tag in sl.identity_tags():
            passed, report = sl.verify_identity(tag, 80)
            assert passed, report

        assert sl.frobenius([4, 4, 3, 3, 1]) == ([3, 2, 0], [4, 2, 1])
        parts, mark, rendering = sl.receding_summit([4, 4, 3, 3, 1])
        assert parts == [1, 1, 2, 3, 3, 2, 2, 1]
        assert rendering == "1123(3)221"

        phi = sl.golden_ratio()
        assert approx(
            sl.dilog(phi ** -2),
            math.pi ** 2 / 15 - math.log(phi) ** 2,
            1e-12,
        )

        dm = sl.main_term("dm")
        assert dm == {"c": 0.0625, "alpha": 1.0, "beta": 1.0}
        e = sl.eps_asym("dm")
        transferred = sl.ingham_transfer(e["lambda"], e["alpha"], e["a"])
        assert approx(transferred["c"], dm["c"], 1e-12 * dm["c"])
        assert approx(transferred["beta"], dm["beta"], 1e-12)

        assert 0.8 < sl.coeff_ratio("gs", 500) < 1.2

        value = sl.eval_genfun("p", 0.5)
        assert value["sign"] == 1
        partial = sum(
            float(c) * math.exp(-0.5 * n)
            for n, c in enumerate(sl.series("p", 250))
        )
        assert approx(math.exp(value["ln"]), partial, 1e-9 * partial)

        sd = sl.saddle_data()
        assert approx(sd["f_v"], math.pi ** 2 / 30, 1e-12)
        assert approx(sd["v"].imag, sd["contour_height"], 1e-15)
        assert abs(cmath.exp(2j * math.pi * sd["v"]) - 1 / phi) < 1e-12

        ratio = sl.contour_a(0.05) / sl.a_from_h(0.05)
        assert 0.98 < ratio < 1.02
        assert abs(sl.hs_over_h(0.02) - phi) < 0.08 * phi

        print("smoke test passed")


if __name__ == "__main__":
    main()
