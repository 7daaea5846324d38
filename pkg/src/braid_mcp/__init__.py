"""Braid words and classical-knot invariants of their closures."""
