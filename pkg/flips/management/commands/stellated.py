import json
from pathlib import Path

from core.commands import EXIT_UNKNOWN, TopologyCommand
from flips.search import UNKNOWN, stellated_reduction


class Command(TopologyCommand):
    help = "Search for a reduction certifying that a sphere is k-stellated."

    def add_command_arguments(self, parser):
        parser.add_argument("file")
        parser.add_argument("-k", type=int, required=True)
        parser.add_argument("--budget", type=int, default=None, help="visited-state budget")
        parser.add_argument("--seed", type=int, default=0)
        parser.add_argument("--certificate", help="write the generating certificate here (JSON)")

    def run(self, **options):
        X = self.load(options["file"])
        result = stellated_reduction(X, options["k"], options["budget"], options["seed"])
        report = {"k": options["k"], **result.as_dict()}
        if result.certificate is not None and options["certificate"]:
            path = Path(options["certificate"])
            path.write_text(json.dumps(result.certificate.reversed().as_dict(), indent=2) + "\n", encoding="utf-8")
            report["certificate"] = str(path)
        return report

    def exit_status(self, report):
        return EXIT_UNKNOWN if report["verdict"] == UNKNOWN else 0
