"""Probability computations over the 18 distributions.

Run with:
    python demos/distributions_demo.py

Walks through the three query types (lower tail, upper tail, interval) on
a few families and prints the full derivation the engine attaches to every
result.
"""

import statsteps as st
from statsteps.narrative import tex_to_text


def show(tag, params, query, title):
    print(f"--- {title} " + "-" * max(0, 56 - len(title)))
    spec = st.make_distribution(tag, params)
    result = st.probability(spec, query)
    m = st.moments(spec)
    print(f"  probability = {result.display_value}   (full precision {result.value!r})")
    mean = "undefined" if m.mean is None else f"{m.mean:.4f}"
    sd = "undefined" if m.sd is None else f"{m.sd:.4f}"
    print(f"  E(X) = {mean}, SD(X) = {sd}")
    for section in result.derivation.sections:
        print(f"  [{section.title}]")
        for step in section.steps:
            print(f"    {tex_to_text(step.display)}")
    grid = result.plot.grid
    print(f"  plot: {len(grid)} points on [{grid[0]:.4f}, {grid[-1]:.4f}], "
          f"shaded {result.plot.shaded}")
    print()


def main():
    # the classic opening example: standard normal, lower tail at 1
    show("normal", {"mu": 0, "var": 1}, st.ProbabilityQuery.lower_tail(1.0),
         "Normal(0, 1): P(X <= 1)")

    # discrete interval keeps both endpoints: P(3 <= X <= 3) = P(X = 3)
    show("binomial", {"n": 10, "p": 0.5}, st.ProbabilityQuery.interval(3, 3),
         "Binomial(10, 0.5): P(X = 3)")

    show("poisson", {"lambda": 2}, st.ProbabilityQuery.upper_tail(3),
         "Poisson(2): P(X > 3)")

    show("student_t", {"df": 7}, st.ProbabilityQuery.interval(-1.5, 1.5),
         "Student t(7): P(-1.5 <= X <= 1.5)")

    # a distribution without finite moments
    show("cauchy", {"location": 0, "scale": 1}, st.ProbabilityQuery.upper_tail(2),
         "Cauchy(0, 1): P(X > 2)")

    print("catalog:", ", ".join(e["tag"] for e in st.catalog()))


if __name__ == "__main__":
    main()
