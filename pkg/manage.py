#!/usr/bin/env python
"""Command-line entry point: `python manage.py <command> [options]`.

Topology commands live in each app's management/commands package, e.g.
`info`, `homology`, `sigma`, `mu`, `tight`, `move`, `stellated`, `class`,
`verify` and `corpus-check`.
"""
import os
import sys


def main():
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'core.settings')
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "Couldn't import Django. Install the project dependencies with "
            "`poetry install` or `pip install -r requirements.txt`."
        ) from exc
    execute_from_command_line(sys.argv)


if __name__ == '__main__':
    main()
