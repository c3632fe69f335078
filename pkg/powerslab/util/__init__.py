""" Utilities for configuration, logging and testing.
"""
