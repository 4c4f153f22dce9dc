"""Cluster monomials, Cambrian fans and generalized minors, computed exactly."""
