"""Frobenius action on the cohomology of projective varieties over F_p."""
