"""Matroid zoo tests."""
