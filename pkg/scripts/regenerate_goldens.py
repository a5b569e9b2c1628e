"""Rewrite tests/golden/genus{3,4}.json from the current build (timing stripped)."""

from pathlib import Path

from adlv.verify import run_suite

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"

if __name__ == "__main__":
    GOLDEN.mkdir(parents=True, exist_ok=True)
    for name in ("genus3", "genus4"):
        report = run_suite(name, timing=False)
        (GOLDEN / f"{name}.json").write_text(report.to_json())
        n = report.counts()
        print(f"{name}: {n['pass']} pass, {n['fail']} fail, {n['warn']} warn")
