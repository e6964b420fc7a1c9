"""Twisted polynomial spaces and (+)-twisted GRS codes."""
