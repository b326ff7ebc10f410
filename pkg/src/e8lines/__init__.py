"""Lines on del Pezzo surfaces: Weyl-group orbit counting on the 240 lines
of the degree-1 surface, and explicit checks over finite fields."""

__version__ = "0.1.0"
