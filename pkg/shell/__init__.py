"""Built-in examples, spec-file loading and the command-line interface."""
