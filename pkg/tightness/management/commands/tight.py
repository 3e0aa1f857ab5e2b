from core.commands import TopologyCommand
from tightness.service import TightnessService


class Command(TopologyCommand):
    help = "Decide F-tightness, by the mu criterion or by checking every induced inclusion."
    uses_field = True

    def add_command_arguments(self, parser):
        parser.add_argument("file")
        parser.add_argument("--method", choices=("mu", "direct"), default="mu")
        parser.add_argument("--cap", type=int, default=None, help="raise the exhaustive vertex cap")

    def run(self, **options):
        X = self.load(options["file"])
        service = TightnessService(X, options["field"], options["workers"], options["cap"])
        result = service.call(options["method"])
        return {"field": str(options["field"]), "method": options["method"], **result.as_dict()}
