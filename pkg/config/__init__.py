"""Configuration module for the entwined operads toolkit."""
