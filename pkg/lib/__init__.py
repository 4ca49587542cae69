"""Shared infrastructure for the simulator (file output)."""
