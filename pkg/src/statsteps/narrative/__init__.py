from .document import DerivationDocument, Section, Step, tex_to_text
from .distribution_doc import distribution_document
from .test_doc import test_document
from .report import regression_report

__all__ = [
    "DerivationDocument",
    "Section",
    "Step",
    "tex_to_text",
    "distribution_document",
    "test_document",
    "regression_report",
]
