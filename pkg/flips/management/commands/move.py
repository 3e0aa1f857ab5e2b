from complexes.vectors import f_vector, g_vector
from core.commands import TopologyCommand
from corpus.files import write_complex_file
from flips.moves import BistellarMove, apply_move


def labels(text):
    return [v for v in text.replace(" ", "").split(",") if v]


class Command(TopologyCommand):
    help = "Apply one bistellar move alpha -> beta."

    def add_command_arguments(self, parser):
        parser.add_argument("file")
        parser.add_argument("--alpha", required=True, help="comma-separated labels of alpha")
        parser.add_argument("--beta", required=True, help="comma-separated labels of beta")
        parser.add_argument("-o", "--output", help="write the resulting complex here")

    def run(self, **options):
        X = self.load(options["file"])
        move = BistellarMove.of(labels(options["alpha"]), labels(options["beta"]))
        Y = apply_move(X, move)
        before, after = g_vector(X), g_vector(Y)
        report = {
            "move": move,
            "f_before": f_vector(X),
            "f_after": f_vector(Y),
            "g_change": [after[j] - before[j] for j in range(X.dim + 2)],
        }
        if options["output"]:
            report["output"] = str(write_complex_file(Y, options["output"]))
        return report
