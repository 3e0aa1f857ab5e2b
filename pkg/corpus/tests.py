import json
import shutil
import tempfile
from io import StringIO
from pathlib import Path

from django.conf import settings
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, override_settings

from complexes.complex import standard_sphere
from complexes.exceptions import MalformedFaceError
from complexes.structure import is_neighbourly
from complexes.vectors import f_vector
from homology.betti import betti
from homology.fields import F2, F3, Q
from theorems.checks import verify
from theorems.membership import CLASS_W, YES, class_membership
from tightness.service import tight_mu

from .exceptions import ComplexFileError, CorpusIntegrityError
from .files import JSON, TEXT, parse, read_complex_file, serialize
from .service import CorpusCheckService, corpus, sha256


def asset(name):
    return Path(settings.CORPUS_DIR) / name


class ParseTests(SimpleTestCase):
    def test_plain_text(self):
        self.assertEqual(parse("1 2 3\n1 2 4\n1 3 4\n2 3 4"), standard_sphere(2))

    def test_comments_and_blank_lines(self):
        text = "# the boundary of a triangle\n\n1 2  # first edge\n2 3\n1 3\n"
        self.assertEqual(tuple(f_vector(parse(text))), (3, 3))

    def test_repeated_label(self):
        with self.assertRaises(MalformedFaceError):
            parse("1 2 3\n1 1 2")
        with self.assertRaises(MalformedFaceError):
            parse('{"facets": [["1", "1", "2"]]}')

    def test_malformed_json_reports_position(self):
        with self.assertRaises(ComplexFileError) as caught:
            parse('{"facets": [["1", "2"],\n  ]}')
        self.assertEqual(caught.exception.line, 2)
        self.assertIsNotNone(caught.exception.column)

    def test_duplicate_facets_are_dropped_with_a_warning(self):
        with self.assertLogs("corpus.files", level="WARNING"):
            X = parse("1 2\n2 1\n2 3")
        self.assertEqual(len(X.facets), 2)

    def test_roundtrip(self):
        torus = parse(asset("torus_7.json"))
        self.assertEqual(parse(serialize(torus, JSON)), torus)
        self.assertEqual(parse(serialize(torus, TEXT)), torus)

    def test_serialisation_is_deterministic(self):
        reordered = parse("3 2 1\n4 1 2\n4 3 1\n2 3 4")
        self.assertEqual(serialize(reordered, JSON), serialize(standard_sphere(2), JSON))

    def test_missing_file_is_an_error(self):
        for source in ("no_such_file.json", "missing.txt", "nowhere", Path("absent.json")):
            with self.assertRaises(ComplexFileError):
                parse(source)

    def test_single_line_inline_input(self):
        self.assertEqual(tuple(f_vector(parse("1 2 3"))), (3, 3, 1))
        self.assertEqual(tuple(f_vector(parse('{"facets": [["1", "2"]]}'))), (2, 1))

    def test_asset_metadata(self):
        file = read_complex_file(asset("k4_11.json"))
        self.assertEqual(file.name, "k4_11")
        self.assertEqual(file.claims, {"manifold": "S3xS1"})
        self.assertIn("f", file.provenance)


class CorpusTests(SimpleTestCase):
    def test_members(self):
        names = [entry.name for entry in corpus()]
        self.assertEqual(names[:7], [f"sphere_{d}" for d in range(7)])
        for name in ("cp2_9", "k3_9", "k4_11", "rp2_6", "torus_7"):
            self.assertIn(name, names)

    def test_every_asset_carries_provenance(self):
        for entry in corpus():
            if not entry.generated:
                self.assertTrue(entry.file.provenance, entry.name)

    def test_tampered_asset_is_refused(self):
        with tempfile.TemporaryDirectory() as directory:
            for path in Path(settings.CORPUS_DIR).glob("*.json"):
                shutil.copy(path, directory)
            target = Path(directory) / "torus_7.json"
            target.write_text(target.read_text().replace('"T2"', '"K2"'))
            with override_settings(CORPUS_DIR=Path(directory)):
                with self.assertRaises(CorpusIntegrityError):
                    corpus()

    def test_manifest_matches_the_files(self):
        manifest = json.loads(asset("manifest.json").read_text())["assets"]
        for name, digest in manifest.items():
            self.assertEqual(sha256(asset(name)), digest)


@override_settings(TIGHTNESS_CROSS_CHECK=False)
class AssetTests(SimpleTestCase):
    def test_projective_plane_values(self):
        cp2 = parse(asset("cp2_9.json"))
        self.assertEqual(tuple(f_vector(cp2)), (9, 36, 84, 90, 36))
        self.assertTrue(is_neighbourly(cp2, 3))
        for field in (Q, F2, F3):
            self.assertEqual(betti(cp2, field).betti, (1, 0, 1, 0, 1))

    def test_odd_kuhnel_member(self):
        k3 = parse(asset("k3_9.json"))
        self.assertEqual(tuple(f_vector(k3)), (9, 36, 54, 27))
        self.assertEqual(betti(k3, F2).betti, (1, 1, 1, 1))
        self.assertEqual(betti(k3, Q).betti, (1, 1, 0, 0))
        self.assertTrue(verify(k3, "P25", F2, {"k": 1}).holds)

    def test_even_kuhnel_member_attains_the_lower_bounds(self):
        k4 = parse(asset("k4_11.json"))
        self.assertEqual(tuple(f_vector(k4)), (11, 55, 110, 110, 44))
        check = verify(k4, "P23")
        self.assertTrue(check.holds)
        self.assertTrue(all(claim.equality for claim in check.claims))
        self.assertTrue(verify(k4, "GLBC", Q).holds)
        self.assertTrue(verify(k4, "VERTEX-BOUND", Q).holds)

    def test_even_kuhnel_member_is_stacked_and_tight(self):
        k4 = parse(asset("k4_11.json"))
        self.assertEqual(class_membership(k4, 1, CLASS_W).verdict, YES)
        self.assertTrue(tight_mu(k4, Q, cross_check=False).tight)
        self.assertTrue(tight_mu(k4, F2, cross_check=False).tight)

    def test_link_g_identity_on_every_member(self):
        for entry in corpus():
            self.assertTrue(verify(entry.complex, "L4").holds, entry.name)


@override_settings(TIGHTNESS_CROSS_CHECK=False)
class CorpusCheckTests(SimpleTestCase):
    def test_small_members(self):
        for name in ("sphere_", "torus_7", "rp2_6"):
            reports = CorpusCheckService(name).call()
            self.assertTrue(reports)
            for report in reports:
                self.assertTrue(report.ok, report.as_dict())

    def test_larger_members(self):
        for name in ("k3_9", "k4_11", "cp2_9"):
            reports = CorpusCheckService(name).call()
            self.assertEqual([r.name for r in reports], [name])
            self.assertTrue(reports[0].ok, reports[0].as_dict())

    def test_command_exit_status(self):
        out = StringIO()
        call_command("corpus-check", "--filter", "torus", "--threads", "1", stdout=out)
        self.assertIn("torus_7: ok", out.getvalue())

    def test_check_is_idempotent(self):
        first = [r.as_dict() for r in CorpusCheckService("rp2").call()]
        second = [r.as_dict() for r in CorpusCheckService("rp2").call()]
        self.assertEqual(first, second)


@override_settings(TIGHTNESS_CROSS_CHECK=False)
class CommandTests(SimpleTestCase):
    def setUp(self):
        self.workdir = tempfile.TemporaryDirectory()
        self.addCleanup(self.workdir.cleanup)

    def run_command(self, *args):
        out = StringIO()
        call_command(*args, "--threads", "1", stdout=out)
        return out.getvalue()

    def run_json(self, *args):
        return json.loads(self.run_command(*args, "--json"))

    def test_info(self):
        report = self.run_json("info", str(asset("torus_7.json")))
        self.assertEqual(report["schema"], 1)
        self.assertEqual(report["command"], "info")
        self.assertEqual(report["f"], [7, 21, 14])
        self.assertTrue(report["closed"])

    def test_mu_text_and_json_agree(self):
        path = str(asset("torus_7.json"))
        self.assertIn("mu: (1, 2, 1)", self.run_command("mu", path, "--field", "q"))
        self.assertEqual(self.run_json("mu", path, "--method", "relative")["mu"], [1, 2, 1])

    def test_tight_direct_over_f2(self):
        rp2 = Path(self.workdir.name) / "rp2_6.txt"
        rp2.write_text(serialize(parse(asset("rp2_6.json")), TEXT))
        self.assertIn("tight: true", self.run_command("tight", str(rp2), "--field", "f2", "--method", "direct"))

    def test_homology_and_sigma(self):
        path = str(asset("rp2_6.json"))
        self.assertEqual(self.run_json("homology", path, "--field", "f2")["betti"], [1, 1, 1])
        sphere = Path(self.workdir.name) / "s2.json"
        self.run_command("gen", "--sphere", "2", "-o", str(sphere))
        self.assertEqual(self.run_json("sigma", str(sphere))["sigma"], [-1, 0, 1])

    def test_gen_move_and_flips(self):
        sphere = Path(self.workdir.name) / "s2.json"
        stacked = Path(self.workdir.name) / "stacked.json"
        self.run_command("gen", "--sphere", "2", "-o", str(sphere))
        report = self.run_json("move", str(sphere), "--alpha", "1,2,3", "--beta", "5", "-o", str(stacked))
        self.assertEqual(report["f_after"], [5, 9, 6])
        self.assertEqual(report["g_change"], [0, 1, 0, -1])
        flips = self.run_json("flips", str(stacked))
        self.assertEqual(flips["by_index"]["2"], 2)

    def test_random_stellated_and_reduction(self):
        sphere = Path(self.workdir.name) / "random.json"
        certificate = Path(self.workdir.name) / "certificate.json"
        report = self.run_json(
            "gen", "--random-stellated", "2", "1", "3", "7", "-o", str(sphere), "--certificate", str(certificate)
        )
        self.assertEqual(report["f"], [7, 15, 10])
        self.assertEqual(report["max_index"], 0)
        self.assertEqual(self.run_json("stellated", str(sphere), "-k", "1")["verdict"], "certificate")
        check = self.run_json("verify", str(sphere), "--theorem", "P19", "-k", "1", "--certificate", str(certificate))
        self.assertEqual(check["status"], "holds")

    def test_class_membership(self):
        report = self.run_json("class", str(asset("torus_7.json")), "-k", "1", "--class", "k")
        self.assertEqual(report["verdict"], "yes")

    def test_verify_lemma_on_cp2(self):
        report = self.run_json("verify", str(asset("cp2_9.json")), "--theorem", "L10", "--field", "q")
        self.assertTrue(report["holds"])

    def test_verify_arithmetic_without_a_file(self):
        report = self.run_json("verify", "--theorem", "P24", "-k", "2", "--dim", "6", "--vertices", "14")
        self.assertEqual(report["status"], "holds")
        with self.assertRaises(CommandError) as caught:
            self.run_command("verify", "--theorem", "P24", "-k", "2", "--dim", "6", "--vertices", "13")
        self.assertEqual(caught.exception.returncode, 1)

    def test_input_errors_exit_with_two(self):
        bad = Path(self.workdir.name) / "bad.txt"
        bad.write_text("1 1 2\n")
        missing = str(Path(self.workdir.name) / "missing.json")
        for args in (("info", str(bad)), ("info", missing), ("homology", str(asset("torus_7.json")), "--field", "f4")):
            with self.assertRaises(CommandError) as caught:
                self.run_command(*args)
            self.assertEqual(caught.exception.returncode, 2)

    def test_unknown_reduction_exits_with_three(self):
        X = Path(self.workdir.name) / "cycle.json"
        self.run_command("gen", "--cycle", "9", "-o", str(X))
        with self.assertRaises(CommandError) as caught:
            self.run_command("stellated", str(X), "-k", "2", "--budget", "1")
        self.assertEqual(caught.exception.returncode, 3)
