from core.commands import TopologyCommand
from flips.moves import enumerate_moves


class Command(TopologyCommand):
    help = "List every valid bistellar move, 0-moves included."

    def add_command_arguments(self, parser):
        parser.add_argument("file")

    def run(self, **options):
        X = self.load(options["file"])
        moves = enumerate_moves(X)
        by_index = {t: 0 for t in range(X.dim + 1)}
        for move in moves:
            by_index[move.index] += 1
        return {"count": len(moves), "by_index": by_index, "moves": [str(m) for m in moves]}
