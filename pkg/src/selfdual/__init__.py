"""Self-orthogonal, self-dual and almost self-dual (+)-TGRS/(+)-ETGRS codes."""
