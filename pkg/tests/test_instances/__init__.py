"""Instance format and generator tests."""
