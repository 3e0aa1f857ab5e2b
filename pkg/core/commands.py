import json
from fractions import Fraction

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from core.exceptions import TopologyError

EXIT_VIOLATED = 1
EXIT_INPUT = 2
EXIT_UNKNOWN = 3


def to_jsonable(value):
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else value.numerator
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        return [to_jsonable(v) for v in value]
    if hasattr(value, "as_dict"):
        return to_jsonable(value.as_dict())
    return value


def render_text(value):
    value = to_jsonable(value)
    if isinstance(value, list):
        return "(" + ", ".join(render_text(v) for v in value) + ")"
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}: {render_text(v)}" for k, v in value.items()) + "}"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


class TopologyCommand(BaseCommand):
    """Shared flags and report rendering for every topology subcommand.

    Subclasses implement `run(**options)` and return an ordered dict; the dict
    is printed either as `key: value` lines or as one JSON document, so both
    renderings carry the same content.
    """

    uses_field = False

    def add_arguments(self, parser):
        parser.add_argument("--json", action="store_true", help="emit the report as JSON")
        parser.add_argument("--threads", type=int, default=None, help="worker processes (0 = all cores)")
        if self.uses_field:
            parser.add_argument("--field", default="q", help="q, f2 or fP for a prime P")
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def handle(self, *args, **options):
        from homology.fields import parse_field

        if self.uses_field:
            try:
                options["field"] = parse_field(options["field"])
            except TopologyError as exc:
                raise CommandError(str(exc), returncode=EXIT_INPUT)
        options["workers"] = options.pop("threads")
        if options["workers"] is None:
            options["workers"] = settings.TOPOLOGY_WORKERS
        try:
            report = self.run(**options)
        except TopologyError as exc:
            raise CommandError(str(exc), returncode=EXIT_INPUT)
        self.emit(report, options["json"])
        status = self.exit_status(report)
        if status == EXIT_VIOLATED:
            raise CommandError("property violated", returncode=EXIT_VIOLATED)
        if status == EXIT_UNKNOWN:
            raise CommandError("search budget exhausted", returncode=EXIT_UNKNOWN)

    def run(self, **options):
        raise NotImplementedError

    def exit_status(self, report):
        return 0

    def emit(self, report, as_json):
        report = {"schema": settings.REPORT_SCHEMA_VERSION, "command": self.command_name(), **report}
        if as_json:
            self.stdout.write(json.dumps(to_jsonable(report), indent=2))
            return
        for key, value in report.items():
            if key in ("schema", "command"):
                continue
            self.stdout.write(f"{key}: {render_text(value)}")

    def command_name(self):
        return self.__module__.rsplit(".", 1)[-1]

    def load(self, path):
        from corpus.files import parse

        return parse(path)
