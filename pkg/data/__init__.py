"""Report schemas, spec-file schema and fixtures."""

