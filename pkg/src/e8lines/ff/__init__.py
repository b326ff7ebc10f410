"""Finite-field geometry of plane curves through 8 points."""
