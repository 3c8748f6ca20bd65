import sys

from classes.cli import Cli


def main() -> int:
    """
    実行
    """
    return Cli().run()


if __name__ == '__main__':
    sys.exit(main())
