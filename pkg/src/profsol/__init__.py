"""Split simple groups over number fields: Cartan data, Brauer kernels, real
forms, local quadratic form invariants and profinite solitude verdicts."""

__version__ = "0.1.0"
