"""Certificates about the (stable) extendable subgroups of braid satellites."""
