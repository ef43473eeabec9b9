"""Tests for the knotcs.cli package."""
