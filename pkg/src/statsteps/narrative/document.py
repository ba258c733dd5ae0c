"""Derivation documents: TeX templates paired with the numbers they show.

A Step never hard-codes a number.  Its template holds ``{{name}}``
placeholders; the values map carries every quantity at full precision and
the rendered ``display`` string substitutes the 4-decimal forms.  This is
what lets formulas and their numeric evaluation sit side by side in every
surface (API, CLI, HTML report).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from ..display import fmt, fmt_int, fmt_p

_PLACEHOLDER = re.compile(r"\{\{(\w+)\}\}")

Value = float | None | list[float]


@dataclass
class Step:
    """One derivation step: a template plus the values substituted into it.

    ``kind`` is "math" (TeX math mode) or "text" (plain prose).  ``formats``
    overrides the default 4-decimal display per placeholder: "int" for
    counts, "p" for p-values (with the "< 0.0001" floor), "list" values
    render comma-separated.
    """

    template: str
    values: dict[str, Value]
    kind: str = "math"
    formats: dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        names = set(_PLACEHOLDER.findall(self.template))
        missing = names - set(self.values)
        if missing:
            raise ValueError(f"template placeholders without values: {sorted(missing)}")

    def _render_value(self, name: str) -> str:
        value = self.values[name]
        if value is None:
            return r"\text{undefined}" if self.kind == "math" else "undefined"
        if isinstance(value, (list, tuple)):
            return ",\\ ".join(fmt(v) for v in value) if self.kind == "math" else ", ".join(
                fmt(v) for v in value
            )
        style = self.formats.get(name, "4dp")
        if style == "int":
            return fmt_int(value)
        if style == "p":
            return fmt_p(value)
        return fmt(value)

    @property
    def display(self) -> str:
        return _PLACEHOLDER.sub(lambda m: self._render_value(m.group(1)), self.template)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "template": self.template,
            "values": {k: v for k, v in self.values.items()},
            "display": self.display,
        }


@dataclass
class Section:
    title: str
    steps: list[Step]

    def to_dict(self) -> dict:
        return {"title": self.title, "steps": [s.to_dict() for s in self.steps]}


@dataclass
class DerivationDocument:
    sections: list[Section]

    def to_dict(self) -> dict:
        return {"sections": [s.to_dict() for s in self.sections]}

    def section(self, title: str) -> Section:
        for s in self.sections:
            if s.title == title:
                return s
        raise KeyError(title)


# TeX -> readable plain text, for the CLI's default output mode.
_TEX_REPLACEMENTS = [
    (re.compile(r"\\left|\\right|\\!|\\,|\\;"), ""),
    (re.compile(r"\\quad|\\qquad"), "  "),
    (re.compile(r"\\sum_\{[^}]*\}\^\{[^}]*\}"), "sum"),
    (re.compile(r"\\sum"), "sum"),
    (re.compile(r"\\binom\{ *([^{}]*?) *\}\{ *([^{}]*?) *\}"), r"C(\1, \2)"),
    (re.compile(r"\\notin"), "not in"),
    (re.compile(r"\\in(?![a-zA-Z])"), "in"),
    (re.compile(r"\\cdot"), "*"),
    (re.compile(r"\\times"), "x"),
    (re.compile(r"\\pm"), "+/-"),
    (re.compile(r"\\mp"), "-/+"),
    (re.compile(r"\\leq?"), "<="),
    (re.compile(r"\\geq?"), ">="),
    (re.compile(r"\\neq"), "!="),
    (re.compile(r"\\sim"), "~"),
    (re.compile(r"\\infty"), "inf"),
    (re.compile(r"\\pi"), "pi"),
    (re.compile(r"\\alpha"), "alpha"),
    (re.compile(r"\\beta"), "beta"),
    (re.compile(r"\\gamma"), "gamma"),
    (re.compile(r"\\lambda"), "lambda"),
    (re.compile(r"\\sigma"), "sigma"),
    (re.compile(r"\\mu"), "mu"),
    (re.compile(r"\\nu"), "nu"),
    (re.compile(r"\\chi"), "chi"),
    (re.compile(r"\\ell"), "l"),
    (re.compile(r"\\Gamma"), "Gamma"),
    (re.compile(r"\\Delta"), "Delta"),
    (re.compile(r"\\bar\{([^}]*)\}"), r"\1bar"),
    (re.compile(r"\\hat\{([^}]*)\}"), r"\1hat"),
    (re.compile(r"\\sqrt\{([^}]*)\}"), r"sqrt(\1)"),
    (re.compile(r"\\frac\{([^{}]*)\}\{([^{}]*)\}"), r"(\1)/(\2)"),
    (re.compile(r"\\dfrac\{([^{}]*)\}\{([^{}]*)\}"), r"(\1)/(\2)"),
    (re.compile(r"\\binom\{([^{}]*)\}\{([^{}]*)\}"), r"C(\1, \2)"),
    (re.compile(r"\\text\{([^}]*)\}"), r"\1"),
    (re.compile(r"\\mathrm\{([^}]*)\}"), r"\1"),
    (re.compile(r"\\mathcal\{([^}]*)\}"), r"\1"),
    (re.compile(r"\\operatorname\{([^}]*)\}"), r"\1"),
]


def tex_to_text(tex: str) -> str:
    """Best-effort readable rendering of the engine's own TeX templates."""
    out = tex
    for _ in range(4):  # nested macros (frac inside frac) need repeats
        prev = out
        for pattern, repl in _TEX_REPLACEMENTS:
            out = pattern.sub(repl, out)
        if out == prev:
            break
    out = out.replace("{", "").replace("}", "").replace("\\", "")
    return re.sub(r"\s+", " ", out).strip()
