"""Subset sums, MDS/NMDS classification, weight tables and Schur-square certificates."""
