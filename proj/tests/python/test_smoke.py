import json
import os
import subprocess

import _occert as oc


def test_field_and_words():
    u = oc.parse_field_elem("u", ["u"])
    v = oc.parse_field_elem("1-u", ["u"])
    assert (u + v) == oc.parse_field_elem("1", ["u"])
    w = oc.parse_word("[x(+1,u), x(+1,1-u)]", ["u"])
    assert len(w) == 4
    assert (w * w.inverse()).is_identity()
    assert oc.pi_eval(w, ["u"]).is_identity()


def test_relator_soundness():
    r = oc.expand_relator("r2", 1, ["u", "1-u"], ["u"])
    assert oc.pi_eval(r, ["u"]).is_identity()


def test_ghys():
    rep = oc.verify_ghys(1)
    assert rep.pi_equal
    assert rep.free_equal
    assert rep.relator_count == 12


def test_ghys_refined():
    rep = oc.ghys_refined(1, True)
    assert rep.ledger_total_before_fold == 24
    assert rep.ocl_bound == 25
    assert rep.genus_bound == 26
    assert rep.certificate_ok


def test_torus_knot():
    d = oc.torus_knot(2, 3)
    assert d.ls_cost == 2
    assert d.clr_cost == 1
    assert d.genus_bound == 2
    verified = oc.verify_certificate(d.certificate_json())
    assert verified["ok"]
    assert verified["cost"] == 1


def test_stevedore():
    rep = oc.stevedore_report("2")
    assert rep["m_member"] and rep["l_member"]
    assert not rep["cyclic"]
    assert rep["dim_at_u"] == 1
    assert rep["dim_at_u_inverse"] == 2
    assert rep["delta_at_u_inverse"] == "0"


def test_affine_units():
    rep = oc.affine_unit_argument([2, 3])
    assert rep["gcd"] == 1 and rep["overcommutes"]


def test_steinberg_check_sampling():
    rep = oc.steinberg_check(samples=10, seed=5)
    assert rep["all_passed"]
    assert rep["id4_resolution"] == "w_alpha(-u^2 v)"


def test_shipped_certificate():
    from pathlib import Path
    data = Path(__file__).resolve().parents[2] / "data" / "torus_knot_2_3.cert.json"
    verified = oc.verify_certificate(data.read_text())
    assert verified["ok"] and verified["cost"] == 1


def test_cli_roundtrip(tmp_path):
    cli = os.environ.get("OCCERT_CLI")
    if not cli:
        return
    cert = tmp_path / "tk.json"
    out = subprocess.run([cli, "torus-knot", "-p", "2", "-q", "3", "--cert", str(cert)],
                         capture_output=True, text=True)
    assert out.returncode == 0
    verify = subprocess.run([cli, "verify", str(cert)], capture_output=True, text=True)
    assert verify.returncode == 0
    # tampering must flip the exit code to 1, malformed input to 2
    tampered = json.loads(cert.read_text())
    tampered["certificate"]["factors"][0]["sign"] = 1
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(tampered))
    assert subprocess.run([cli, "verify", str(bad)], capture_output=True).returncode == 1
    garbled = tmp_path / "garbled.json"
    garbled.write_text("{")
    assert subprocess.run([cli, "verify", str(garbled)], capture_output=True).returncode == 2
    # emitted psi certificates re-verify as well
    psi_cert = tmp_path / "psi_r1.json"
    emitted = subprocess.run(
        [cli, "psi", "--schema", "r1", "--alpha", "1", "--params", "s,t", "--a", "2",
         "--axiom", "--cert", str(psi_cert)],
        capture_output=True, text=True)
    assert emitted.returncode == 0
    assert subprocess.run([cli, "verify", str(psi_cert)], capture_output=True).returncode == 0
