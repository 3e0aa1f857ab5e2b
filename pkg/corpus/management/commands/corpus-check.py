from core.commands import EXIT_VIOLATED, TopologyCommand
from corpus.service import CorpusCheckService


class Command(TopologyCommand):
    help = "Recompute every expected value of the bundled corpus."

    def add_command_arguments(self, parser):
        parser.add_argument("--filter", dest="name_filter", help="only members whose name contains this")
        parser.add_argument("--cap", type=int, default=None)

    def run(self, **options):
        reports = CorpusCheckService(options["name_filter"], options["workers"], options["cap"]).call()
        for entry in reports:
            style = self.style.SUCCESS if entry.ok else self.style.ERROR
            if not options["json"]:
                self.stdout.write(style(f"{entry.name}: {'ok' if entry.ok else 'FAILED'}"))
        return {
            "members": len(reports),
            "failed": [entry.name for entry in reports if not entry.ok],
            "entries": reports,
        }

    def exit_status(self, report):
        return EXIT_VIOLATED if report["failed"] else 0
