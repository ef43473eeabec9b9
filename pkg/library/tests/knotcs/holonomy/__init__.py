"""Tests for the knotcs.holonomy package."""
