"""Tests for the knotcs library."""
