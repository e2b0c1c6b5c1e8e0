"""Test suite for the entwined operads toolkit."""

