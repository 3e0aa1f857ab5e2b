from core.commands import TopologyCommand
from sigmamu.mu import mu_via_relative, mu_vector


class Command(TopologyCommand):
    help = "Exact mu-vector, from vertex links or from relative Betti numbers."
    uses_field = True

    def add_command_arguments(self, parser):
        parser.add_argument("file")
        parser.add_argument("--method", choices=("def", "relative"), default="def")
        parser.add_argument("--cap", type=int, default=None, help="raise the exhaustive vertex cap")

    def run(self, **options):
        X = self.load(options["file"])
        compute = mu_vector if options["method"] == "def" else mu_via_relative
        mu = compute(X, options["field"], options["cap"], options["workers"])
        return {"field": str(options["field"]), "method": options["method"], "mu": mu}
