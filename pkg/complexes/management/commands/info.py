from complexes.structure import structure_report
from complexes.vectors import f_vector, g_vector
from core.commands import TopologyCommand


class Command(TopologyCommand):
    help = "Summarise a complex: size, structure flags and face vectors."

    def add_command_arguments(self, parser):
        parser.add_argument("file", help="complex file (.json or whitespace text)")

    def run(self, **options):
        X = self.load(options["file"])
        return {
            "vertices": X.num_vertices,
            "dim": X.dim,
            "facets": len(X.facets),
            "f": f_vector(X),
            "g": g_vector(X),
            **structure_report(X).as_dict(),
        }
