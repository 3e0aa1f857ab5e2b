from dataclasses import dataclass, field

from complexes.complex import Complex, is_standard_sphere

from .exceptions import MoveError
from .moves import BistellarMove, apply_move, is_valid_move


@dataclass(frozen=True)
class FlipCertificate:
    start: Complex
    moves: tuple = field(default_factory=tuple)
    end: Complex = None

    @property
    def max_index(self):
        return max((m.index for m in self.moves), default=-1)

    def __len__(self):
        return len(self.moves)

    def replay(self):
        """Re-derive the end complex, validating every step."""
        current = self.start
        for step, move in enumerate(self.moves):
            if not is_valid_move(current, move.alpha, move.beta):
                raise MoveError(f"step {step}: {move} is not valid")
            current = apply_move(current, move)
        return current

    def verify(self):
        try:
            return self.replay() == self.end
        except MoveError:
            return False

    def reversed(self):
        return FlipCertificate(
            start=self.end,
            moves=tuple(m.reverse() for m in reversed(self.moves)),
            end=self.start,
        )

    def witnesses_stellated(self, k):
        """A generating certificate: starts at a standard sphere, every move of index < k."""
        return is_standard_sphere(self.start) and self.max_index < k and self.verify()

    def as_dict(self):
        return {
            "start": [list(f) for f in self.start.facet_labels()],
            "moves": [m.as_dict() for m in self.moves],
            "end": [list(f) for f in self.end.facet_labels()],
            "max_index": self.max_index,
        }

    @classmethod
    def from_dict(cls, data):
        try:
            start = Complex.from_facets(data["start"])
            moves = tuple(BistellarMove.of(m["alpha"], m["beta"]) for m in data["moves"])
        except (KeyError, TypeError) as exc:
            raise MoveError(f"malformed certificate: {exc}") from exc
        end = Complex.from_facets(data["end"]) if data.get("end") else None
        certificate = cls(start, moves, end)
        if end is None:
            certificate = cls(start, moves, certificate.replay())
        return certificate


def stacked_ball_from_certificate(certificate):
    """Ball built by attaching alpha + beta for every generating move.

    The start must be a standard sphere S^d_{d+2}; the ball starts as the full
    simplex it bounds. Facets come back in attachment order, which shells the ball.
    """
    start = certificate.start
    if not is_standard_sphere(start):
        raise MoveError("stacked balls are grown from a standard sphere")
    order = [list(start.vertices)]
    for move in certificate.moves:
        order.append(list(move.alpha) + list(move.beta))
    return Complex.from_facets(order), order
