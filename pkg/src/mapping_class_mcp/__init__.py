"""Mapping classes of the torus as SL(2, Z) acting on slopes and homology."""
