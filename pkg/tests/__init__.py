"""Unit test package for poincaredeg."""
