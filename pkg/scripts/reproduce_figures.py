"""Write the curve data of figures 1-3 as CSV and print the endpoint values."""
import argparse
from pathlib import Path

from lorentzspin.figures import emit_csv, run_figure
from lorentzspin.scenario import load_scenario

ROOT = Path(__file__).resolve().parents[1]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--scenarios", type=Path, default=ROOT / "scenarios")
    parser.add_argument("--out", type=Path, default=ROOT / "results")
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for which in (1, 2, 3):
        table = run_figure(which, load_scenario(args.scenarios / f"fig{which}.scn"))
        target = args.out / f"fig{which}.csv"
        with target.open("wb") as fh:
            emit_csv(table, fh)
        first, last = table.rows[0], table.rows[-1]
        cols = table.columns[1:] if which == 3 else ("magnitude",)
        summary = ", ".join(
            f"{c}: {first[table.columns.index(c)]:.4f} -> {last[table.columns.index(c)]:.4f}" for c in cols
        )
        print(f"fig{which} -> {target} ({len(table.rows)} rows; v {first[0]:.3f} -> {last[0]:.3f}; {summary})")


if __name__ == "__main__":
    main()
