"""Confidence intervals and hypothesis tests across the seven settings.

Run with:
    python demos/inference_demo.py

Each request produces the four-section narrative (Data, Confidence
interval, Hypothesis test, Interpretation) plus the rejection-region plot
data; this script prints the narratives in plain math text.
"""

import statsteps as st
from statsteps.narrative import tex_to_text


def show(title, request):
    print(f"=== {title} " + "=" * max(0, 56 - len(title)))
    result = st.run_test(request)
    for section in result.narrative.sections:
        print(f"[{section.title}]")
        for i, step in enumerate(section.steps, 1):
            text = step.display if step.kind == "text" else tex_to_text(step.display)
            print(f"  {i}. {text}")
    for w in result.warnings:
        print(f"  warning: {w}")
    print(f"-> decision: {result.decision}  "
          f"(statistic {result.statistic:.4f}, p {result.p_value:.4f})")
    print()


def main():
    show(
        "One-sample t-test (raw data)",
        st.InferenceRequest(
            setting="one_mean",
            samples=(st.RawSample((5.1, 4.2, 6.3, 5.8, 4.9, 5.5)),),
            config=st.TestConfig(alpha=0.05, h0_value=5.0),
        ),
    )
    show(
        "One-sample t-test (summary statistics)",
        st.InferenceRequest(
            setting="one_mean",
            samples=(st.MeanSummary(n=5, mean=3.0, variance=2.5),),
            config=st.TestConfig(alpha=0.05, h0_value=0.0),
        ),
    )
    show(
        "Welch two-sample t-test",
        st.InferenceRequest(
            setting="two_means_independent",
            samples=(
                st.MeanSummary(n=12, mean=5.2, variance=1.4),
                st.MeanSummary(n=15, mean=4.6, variance=2.1),
            ),
            config=st.TestConfig(alpha=0.05),
        ),
    )
    show(
        "Paired t-test, one-sided",
        st.InferenceRequest(
            setting="two_means_paired",
            samples=(
                st.RawSample((3.1, 2.8, 3.6, 3.3, 2.9)),
                st.RawSample((2.7, 2.9, 3.1, 2.8, 2.6)),
            ),
            config=st.TestConfig(alpha=0.1, alternative="greater"),
        ),
    )
    show(
        "One-proportion z-test",
        st.InferenceRequest(
            setting="one_proportion",
            samples=(st.ProportionSummary(n=100, successes=62),),
            config=st.TestConfig(alpha=0.05, h0_value=0.5),
        ),
    )
    show(
        "Two proportions with pooled standard error",
        st.InferenceRequest(
            setting="two_proportions",
            samples=(
                st.ProportionSummary(n=80, successes=48),
                st.ProportionSummary(n=90, successes=42),
            ),
            config=st.TestConfig(alpha=0.05, pooled_se=True),
        ),
    )
    show(
        "Chi-square test for one variance",
        st.InferenceRequest(
            setting="one_variance",
            samples=(st.VarianceSummary(n=20, variance=6.2),),
            config=st.TestConfig(alpha=0.05, h0_value=4.0),
        ),
    )
    show(
        "F-test for two variances",
        st.InferenceRequest(
            setting="two_variances",
            samples=(
                st.VarianceSummary(n=10, variance=5.0),
                st.VarianceSummary(n=13, variance=2.2),
            ),
            config=st.TestConfig(alpha=0.05),
        ),
    )


if __name__ == "__main__":
    main()
