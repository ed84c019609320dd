"""
Main entry point for the Koszul Check package.
"""

from koszul_check.cli import main

if __name__ == "__main__":
    main()
