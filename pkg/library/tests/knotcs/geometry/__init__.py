"""Tests for the knotcs.geometry package."""
