"""Tests for the knotcs library modules."""
