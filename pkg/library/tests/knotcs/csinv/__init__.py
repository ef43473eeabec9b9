"""Tests for the knotcs.csinv package."""
