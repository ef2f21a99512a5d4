"""Decision-support toolkit: prototype-based fuzzy classes, 2-additive
Choquet aggregation, diachronic projection, team assembly and device fit."""

__version__ = "0.1.0"
