"""Tests for the knotcs.rmpoly package."""
