"""Formatting helpers shared across the command line and the suites."""

from colorama import Fore, Style


def highlight(text: str, color: str = Fore.YELLOW) -> str:
    """Wrap the message in a predictable color sequence."""
    return f"{color}{text}{Style.RESET_ALL}"


def format_verdict(passed: bool) -> str:
    return highlight("PASS", Fore.GREEN) if passed else highlight("FAIL", Fore.RED)
