import hashlib
import json
import logging
from dataclasses import dataclass, field
from math import comb
from pathlib import Path

from django.conf import settings

from complexes.complex import standard_sphere
from complexes.structure import neighbourliness
from complexes.vectors import f_vector, g_vector
from core.commands import to_jsonable
from homology.betti import betti
from homology.fields import parse_field
from sigmamu.mu import mu_vector
from sigmamu.sigma import sigma_vector
from theorems.checks import verify
from tightness.service import tight_direct, tight_mu

from .exceptions import CorpusIntegrityError
from .files import ComplexFile, read_complex_file

logger = logging.getLogger(__name__)

MANIFEST = "manifest.json"
SPHERE_DIMENSIONS = range(0, 7)
EQUIVALENCE_CAP = 12


@dataclass(frozen=True)
class CorpusEntry:
    file: ComplexFile
    generated: bool = False

    @property
    def name(self):
        return self.file.name

    @property
    def complex(self):
        return self.file.complex


def sha256(path):
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def load_manifest(directory):
    path = Path(directory) / MANIFEST
    if not path.is_file():
        raise CorpusIntegrityError(f"corpus manifest {path} is missing")
    return json.loads(path.read_text(encoding="utf-8"))["assets"]


def sphere_entry(d):
    """S^d_{d+2} with the values every standard sphere must reproduce."""
    top = [1] + [0] * (d - 1) + [1] if d >= 1 else [2]
    expected = {
        "f": [comb(d + 2, i + 1) for i in range(d + 1)],
        "g": [1] + [0] * (d + 1),
        "betti": {"q": top, "f2": top},
        "tight": {"q": d >= 1, "f2": d >= 1},
    }
    if d >= 1:
        expected["sigma"] = {"q": [-1] + [0] * (d - 1) + [1]}
        expected["mu"] = {"q": [1] + [0] * (d - 1) + [1]}
    provenance = {"tight": "the boundary of a simplex is tight in every dimension >= 1; S^0_2 is disconnected"}
    file = ComplexFile(
        name=f"sphere_{d}", complex=standard_sphere(d),
        description=f"boundary of the {d + 1}-simplex", expected=expected, provenance=provenance,
    )
    return CorpusEntry(file, generated=True)


def corpus(directory=None):
    """Bundled assets (hash-checked against the manifest) plus generated standard spheres."""
    directory = Path(directory or settings.CORPUS_DIR)
    manifest = load_manifest(directory)
    entries = [sphere_entry(d) for d in SPHERE_DIMENSIONS]
    for name in sorted(manifest):
        path = directory / name
        if not path.is_file():
            raise CorpusIntegrityError(f"asset {name} listed in the manifest is missing")
        digest = sha256(path)
        if digest != manifest[name]:
            raise CorpusIntegrityError(f"asset {name} does not match its manifest hash")
        entries.append(CorpusEntry(read_complex_file(path)))
    for path in sorted(directory.glob("*.json")):
        if path.name != MANIFEST and path.name not in manifest:
            logger.warning("asset %s is not listed in the manifest and was skipped", path.name)
    return entries


@dataclass(frozen=True)
class CheckRow:
    label: str
    expected: object
    actual: object

    @property
    def ok(self):
        return to_jsonable(self.expected) == to_jsonable(self.actual)

    def as_dict(self):
        return {"check": self.label, "expected": self.expected, "actual": self.actual, "ok": self.ok}


@dataclass(frozen=True)
class EntryReport:
    name: str
    rows: tuple = field(default_factory=tuple)

    @property
    def ok(self):
        return all(row.ok for row in self.rows)

    def as_dict(self):
        return {"name": self.name, "ok": self.ok, "checks": [row.as_dict() for row in self.rows]}


class CorpusCheckService:
    """Recomputes every expected value of every corpus member."""

    def __init__(self, name_filter=None, workers=1, cap=None, directory=None):
        self.name_filter = name_filter
        self.workers = workers
        self.cap = cap
        self.directory = directory

    def call(self):
        entries = [e for e in corpus(self.directory) if not self.name_filter or self.name_filter in e.name]
        reports = []
        for entry in entries:
            logger.info("checking corpus member %s", entry.name)
            reports.append(EntryReport(entry.name, tuple(self.check(entry))))
        return reports

    def check(self, entry):
        X, expected = entry.complex, entry.file.expected
        if "f" in expected:
            yield CheckRow("f", expected["f"], list(f_vector(X)))
        if "g" in expected:
            yield CheckRow("g", expected["g"], list(g_vector(X)))
        if "neighbourliness" in expected:
            yield CheckRow("neighbourliness", expected["neighbourliness"], neighbourliness(X))
        for name, values in expected.get("betti", {}).items():
            yield CheckRow(f"betti[{name}]", values, list(betti(X, parse_field(name)).betti))
        for name, values in expected.get("sigma", {}).items():
            yield CheckRow(f"sigma[{name}]", values, list(sigma_vector(X, parse_field(name), self.cap, self.workers)))
        for name, values in expected.get("mu", {}).items():
            yield CheckRow(f"mu[{name}]", values, list(mu_vector(X, parse_field(name), self.cap, self.workers)))
        for name, value in expected.get("tight", {}).items():
            report = tight_mu(X, parse_field(name), self.cap, self.workers, cross_check=False)
            yield CheckRow(f"tight[{name}]", value, report.tight)
            if X.num_vertices <= EQUIVALENCE_CAP:
                direct = tight_direct(X, parse_field(name), self.cap, self.workers)
                yield CheckRow(f"direct = mu [{name}]", report.tight, direct.tight)
        for listed in expected.get("theorems", []):
            params = {k: v for k, v in listed.items() if k not in ("id", "field")}
            params.update(claims=entry.file.claims, workers=self.workers, cap=self.cap)
            result = verify(X, listed["id"], parse_field(listed.get("field", "q")), params)
            yield CheckRow(f"theorem {listed['id']}", True, result.holds)
