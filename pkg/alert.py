import sys

from colorama import Fore, Style

from configuration import reportAlert


def alert(subject, message, isError=False, code=1):
    if reportAlert != "console":
        # console is the only channel, anything else is a configuration slip
        print(f"{Fore.YELLOW}Unknown reportAlert '{reportAlert}', using console{Style.RESET_ALL}")

    if subject:
        print(f"Algebra: {subject}")

    if isError:
        print(f"{Fore.RED}{message}{Style.RESET_ALL}", file=sys.stderr)
        sys.exit(code)

    print(message)


def botFailed(subject, message):
    return alert(subject, message, True, 1)


def usageFailed(subject, message):
    return alert(subject, message, True, 2)
