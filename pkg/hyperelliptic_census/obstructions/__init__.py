"""Residue-pattern obstructions."""
