import json
from pathlib import Path

from complexes.complex import Complex
from core.commands import EXIT_UNKNOWN, TopologyCommand
from corpus.exceptions import ComplexFileError
from theorems.membership import CLASS_K, CLASS_W, UNKNOWN, class_membership


def read_witnesses(path):
    """{vertex label: facet list of a stacked ball bounded by that vertex link}."""
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ComplexFileError(exc.msg, exc.lineno, exc.colno) from None
    return {str(label): Complex.from_facets(facets) for label, facets in data.items()}


class Command(TopologyCommand):
    help = "Decide membership of a closed manifold in W_k(d) or K_k(d) from its vertex links."

    def add_command_arguments(self, parser):
        parser.add_argument("file")
        parser.add_argument("-k", type=int, required=True)
        parser.add_argument("--class", dest="klass", choices=(CLASS_W, CLASS_K), default=CLASS_W)
        parser.add_argument("--budget", type=int, default=None, help="visited-state budget per link")
        parser.add_argument("--witnesses", help="JSON file of stacked balls keyed by vertex label")

    def run(self, **options):
        M = self.load(options["file"])
        witnesses = read_witnesses(options["witnesses"]) if options["witnesses"] else None
        verdict = class_membership(
            M, options["k"], options["klass"], options["budget"], witnesses, workers=options["workers"]
        )
        return verdict.as_dict()

    def exit_status(self, report):
        return EXIT_UNKNOWN if report["verdict"] == UNKNOWN else 0
