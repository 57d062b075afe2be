"""Exchange graph tests."""
