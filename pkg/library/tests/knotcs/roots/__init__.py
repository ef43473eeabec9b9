"""Tests for the knotcs.roots package."""
