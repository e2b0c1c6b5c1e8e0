"""Run the entwined operads command-line interface."""

import sys

from dotenv import load_dotenv

if __name__ == "__main__":
    # Load environment variables from .env file first
    load_dotenv()

    from shell.cli import main

    sys.exit(main())
