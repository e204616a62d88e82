"""Relations between minors of a generic matrix: decompositions, explicit
relations, symbolic verification and degree bounds."""

__version__ = "0.1.0"
