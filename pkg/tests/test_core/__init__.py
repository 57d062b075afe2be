"""Core abstraction tests."""
