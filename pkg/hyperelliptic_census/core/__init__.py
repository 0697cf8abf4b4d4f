"""Core census: models, errors, the enumerator and its runner."""
