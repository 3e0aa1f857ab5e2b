import json
from pathlib import Path

from core.commands import EXIT_VIOLATED, TopologyCommand
from flips.certificates import FlipCertificate
from theorems.checks import THEOREMS, verify
from theorems.exceptions import HypothesisError


def claim(text):
    if "=" not in text:
        raise HypothesisError(f"claim {text!r} is not KEY=VALUE")
    key, value = text.split("=", 1)
    return key.strip(), value.strip()


class Command(TopologyCommand):
    help = "Check the hypotheses and every claim of a named result on a complex."
    uses_field = True

    def add_command_arguments(self, parser):
        parser.add_argument("file", nargs="?", help="complex file; optional for arithmetic-only checks")
        parser.add_argument("--theorem", required=True, help=", ".join(sorted(THEOREMS)))
        parser.add_argument("-k", type=int, default=None)
        parser.add_argument("-l", type=int, default=None, help="neighbourliness parameter for L9")
        parser.add_argument("--dim", type=int, default=None)
        parser.add_argument("--vertices", type=int, default=None)
        parser.add_argument("--grid", type=int, default=12)
        parser.add_argument("--certificate", help="flip certificate (JSON)")
        parser.add_argument("--budget", type=int, default=None)
        parser.add_argument("--cap", type=int, default=None)
        parser.add_argument("--claim", action="append", default=[], help="caller-asserted fact KEY=VALUE")

    def run(self, **options):
        M = self.load(options["file"]) if options["file"] else None
        params = {
            "k": options["k"],
            "l": options["l"],
            "dim": options["dim"],
            "vertices": options["vertices"],
            "grid": options["grid"],
            "budget": options["budget"],
            "cap": options["cap"],
            "workers": options["workers"],
            "claims": dict(claim(c) for c in options["claim"]),
        }
        if options["certificate"]:
            data = json.loads(Path(options["certificate"]).read_text(encoding="utf-8"))
            params["certificate"] = FlipCertificate.from_dict(data)
        check = verify(M, options["theorem"], options["field"], params)
        if not check.hypotheses_satisfied:
            status = "hypotheses not satisfied"
        else:
            status = "violated" if check.violated else "holds"
        return {"status": status, **check.as_dict()}

    def exit_status(self, report):
        return EXIT_VIOLATED if report["status"] == "violated" else 0
