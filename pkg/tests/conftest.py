"""Keeps pytest rooted here so tests can import the local ``oracles`` module."""
