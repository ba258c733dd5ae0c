"""Simple linear regression end to end.

Run with:
    python demos/regression_demo.py

Fits y on x with the explicit textbook formulas, prints the derivation,
the coefficient table, the diagnostics data, and writes the standalone
HTML report next to this script.
"""

from pathlib import Path

import statsteps as st
from statsteps.narrative import tex_to_text


def main():
    inp = st.RegressionInput(
        x=(1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0),
        y=(2.3, 2.9, 4.2, 4.4, 5.6, 6.2, 6.6, 8.1),
        x_label="study hours",
        y_label="exam score",
    )
    fit = st.fit(inp)

    print("Step-by-step derivation")
    print("-----------------------")
    for i, step in enumerate(st.derivation(inp, fit).sections[0].steps, 1):
        print(f"  {i}. {tex_to_text(step.display)}")
    print()

    table = st.summary_table(fit)
    print(f"{'term':<10} {'estimate':>10} {'se':>10} {'t':>8} {'p':>8}")
    for row in table["rows"]:
        print(f"{row['term']:<10} {row['estimate']:>10.4f} {row['std_error']:>10.4f} "
              f"{row['t']:>8.4f} {row['p']:>8.4f}")
    print(f"sigma_hat = {table['sigma_hat']:.4f} on {table['df_resid']} df;  "
          f"R^2 = {table['r_squared']:.4f}, adjusted = {table['adj_r_squared']:.4f}")
    print()

    band = st.confidence_band(inp, fit)
    mid = len(band.grid) // 2
    print(f"95% mean-response band at x = {band.grid[mid]:.2f}: "
          f"[{band.lower[mid]:.4f}, {band.upper[mid]:.4f}]")

    diag = st.diagnostics(inp, fit)
    print(f"leverage sums to {sum(diag.leverage):.6f} (always 2 for a line fit)")
    flagged = [i for i, d in enumerate(diag.cooks_distance) if d is not None and d > 0.5]
    print(f"influential points (Cook's D > 0.5): {flagged or 'none'}")
    print()

    print(st.interpret_fit(fit, inp.x_label, inp.y_label))
    print()

    out = Path(__file__).parent / "regression_report.html"
    out.write_text(st.regression_report(st.ReportRequest(regression=inp)), encoding="utf-8")
    print(f"HTML report written to {out}")


if __name__ == "__main__":
    main()
