"""Free-group words and a bounded commutator-length oracle."""
