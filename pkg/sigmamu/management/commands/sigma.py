from core.commands import TopologyCommand
from sigmamu.sigma import sigma_vector


class Command(TopologyCommand):
    help = "Exact sigma-vector over all induced subcomplexes."
    uses_field = True

    def add_command_arguments(self, parser):
        parser.add_argument("file")
        parser.add_argument("--cap", type=int, default=None, help="raise the exhaustive vertex cap")

    def run(self, **options):
        X = self.load(options["file"])
        sigma = sigma_vector(X, options["field"], options["cap"], options["workers"])
        return {"field": str(options["field"]), "sigma": sigma}
