"""Entry point for running the slope-calc batch front end."""

from .cli import main

if __name__ == "__main__":
    main()
