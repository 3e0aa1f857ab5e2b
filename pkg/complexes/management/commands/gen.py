import json
from pathlib import Path

from complexes.complex import cycle, standard_ball, standard_sphere
from complexes.vectors import f_vector
from core.commands import TopologyCommand
from corpus.files import JSON, serialize, write_complex_file
from flips.search import random_stellated_sphere


class Command(TopologyCommand):
    help = "Generate a standard sphere, ball, cycle or a random k-stellated sphere."

    def add_command_arguments(self, parser):
        kind = parser.add_mutually_exclusive_group(required=True)
        kind.add_argument("--sphere", type=int, metavar="D", help="boundary of the (D+1)-simplex")
        kind.add_argument("--ball", type=int, metavar="N", help="full simplex on N vertices")
        kind.add_argument("--cycle", type=int, metavar="N", help="N-cycle")
        kind.add_argument(
            "--random-stellated", type=int, nargs=4, metavar=("D", "K", "MOVES", "SEED"),
            help="S^D_{D+2} after MOVES random moves of index < K",
        )
        parser.add_argument("-o", "--output", help="write the complex here (.json or text)")
        parser.add_argument("--certificate", help="write the generating flip certificate here (JSON)")

    def run(self, **options):
        certificate = None
        if options["sphere"] is not None:
            X, name = standard_sphere(options["sphere"]), f"sphere_{options['sphere']}"
        elif options["ball"] is not None:
            X, name = standard_ball(options["ball"]), f"ball_{options['ball']}"
        elif options["cycle"] is not None:
            X, name = cycle(options["cycle"]), f"cycle_{options['cycle']}"
        else:
            d, k, moves, seed = options["random_stellated"]
            X, certificate = random_stellated_sphere(d, k, moves, seed)
            name = f"stellated_d{d}_k{k}_n{moves}_s{seed}"

        report = {"name": name, "vertices": X.num_vertices, "dim": X.dim, "f": f_vector(X)}
        if options["output"]:
            report["output"] = str(write_complex_file(X, options["output"], name=name))
        else:
            report["complex"] = json.loads(serialize(X, JSON, name=name))
        if certificate is not None:
            report["moves"] = len(certificate)
            report["max_index"] = certificate.max_index
            if options["certificate"]:
                path = Path(options["certificate"])
                path.write_text(json.dumps(certificate.as_dict(), indent=2) + "\n", encoding="utf-8")
                report["certificate"] = str(path)
        return report
