"""Tests for the knotcs.scripting package."""
