from complexes.structure import structure_report
from core.commands import TopologyCommand
from homology.betti import betti, orientable


class Command(TopologyCommand):
    help = "Betti numbers of a complex over Q or F_p."
    uses_field = True

    def add_command_arguments(self, parser):
        parser.add_argument("file")

    def run(self, **options):
        X = self.load(options["file"])
        field = options["field"]
        table = betti(X, field)
        report = {"field": str(field), "betti": table.betti, "reduced": table.reduced}
        structure = structure_report(X)
        report["euler_characteristic"] = structure.euler_characteristic
        if structure.closed and structure.connected:
            report["orientable"] = orientable(X, field)
        return report
