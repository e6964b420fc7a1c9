"""Generic linear codes: duals, puncturing, Schur products, weights, orthogonality."""
