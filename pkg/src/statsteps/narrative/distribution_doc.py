"""Solution / Details document for a probability computation."""

from __future__ import annotations

from .document import DerivationDocument, Section, Step

_QUERY_TEMPLATES = {
    "lower_tail": r"P(X \leq {{x}}) = {{value}}",
    "upper_tail": r"P(X > {{x}}) = {{value}}",
    "interval": r"P({{a}} \leq X \leq {{b}}) = {{value}}",
}


def _bound_format(v: float) -> str:
    return "int" if float(v) == int(v) else "4dp"


def distribution_document(spec, query, value: float, moments) -> DerivationDocument:
    """Assemble the Solution and Details sections for one query.

    Solution states the model and the computed probability; Details shows
    the density/mass formula at the current parameter values followed by
    E(X), SD(X) and Var(X) (undefined moments render as such).
    """
    param_formats = {name: "int" for name in spec.int_params()}
    notation = Step(
        template=spec.notation_tex(),
        values=dict(spec.params()),
        formats=param_formats,
    )

    statement_values: dict = {"value": value}
    statement_formats: dict = {}
    if query.kind == "interval":
        statement_values.update({"a": query.a, "b": query.b})
        statement_formats = {"a": _bound_format(query.a), "b": _bound_format(query.b)}
    else:
        statement_values["x"] = query.x
        statement_formats = {"x": _bound_format(query.x)}
    statement = Step(
        template=_QUERY_TEMPLATES[query.kind],
        values=statement_values,
        formats=statement_formats,
    )

    density = Step(
        template=spec.density_tex(),
        values=dict(spec.density_values()),
        formats={k: "int" for k in spec.int_params()},
    )
    details = [
        density,
        Step(template=r"E(X) = {{mean}}", values={"mean": moments.mean}),
        Step(template=r"SD(X) = {{sd}}", values={"sd": moments.sd}),
        Step(template=r"\mathrm{Var}(X) = {{variance}}", values={"variance": moments.variance}),
    ]
    return DerivationDocument(
        sections=[
            Section(title="Solution", steps=[notation, statement]),
            Section(title="Details", steps=details),
        ]
    )
