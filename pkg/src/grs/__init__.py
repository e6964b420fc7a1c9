"""Generalized Reed-Solomon codes and their closed-form duals."""
