"""
Command-line entry point
"""
from app.interfaces.cli.commands import cli

if __name__ == "__main__":
    cli(prog_name="digraph-ham")
