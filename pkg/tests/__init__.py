"""Tests for twisted-codes."""
