"""Oracle tests."""
