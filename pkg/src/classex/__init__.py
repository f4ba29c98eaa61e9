"""Classical proofs to constructive content: double-negation translations, a
natural-deduction kernel, primitive recursive functionals, realizability and
Dialectica extraction, and semantic oracles."""

__version__ = "0.1.0"
