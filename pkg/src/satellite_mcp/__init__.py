"""Seminorms, unit balls and genus bounds for braid tori and their satellites."""
