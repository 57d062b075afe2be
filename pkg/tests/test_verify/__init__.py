"""Verification tests."""
