import dataclasses

import pytest

from dikroma import (ASYMMETRIC, Budget, Coloring, build,
                     certificate_from_json, certificate_to_json, certify,
                     complete_symmetric, conjecture_probe,
                     diachromatic_number, dichromatic_number,
                     full_circulant_tournament, realize_asymmetric,
                     realize_nonsymmetric, transitive_tournament,
                     verify_certificate)


def _induced_arcs(d, verts):
    verts = set(verts)
    return {(u, v) for u, v in d.arcs() if u in verts and v in verts}


def test_realize_nonsymmetric_smallest_pairs():
    cert = realize_nonsymmetric(1, 1)
    assert cert.digraph.n == 2 and set(cert.digraph.arcs()) == {(0, 1)}
    assert cert.symmetry == ASYMMETRIC

    cert = realize_nonsymmetric(3, 3)
    assert cert.digraph.n == 4
    assert _induced_arcs(cert.digraph, range(3)) == set(complete_symmetric(3).arcs())
    assert cert.claimed_r == cert.claimed_t == 3


def test_realize_nonsymmetric_end_to_end():
    cert = realize_nonsymmetric(2, 3)
    assert cert.dc_verified == "proved" and cert.dac_verified == "proved"
    assert dichromatic_number(cert.digraph).value == 2
    assert diachromatic_number(cert.digraph).value == 3
    assert verify_certificate(cert).ok
    # (3, 5) rides a length-4 path on the symmetric triple: 7 vertices
    assert realize_nonsymmetric(3, 5).digraph.n == 7


def test_realize_nonsymmetric_rejects_bad_pairs():
    with pytest.raises(ValueError):
        realize_nonsymmetric(0, 1)
    with pytest.raises(ValueError):
        realize_nonsymmetric(3, 2)


def test_realize_asymmetric_pairs():
    cert = realize_asymmetric(2, 4)
    assert cert.digraph.n == 7  # full circulant tournament on 2t-1 vertices
    assert cert.symmetry == ASYMMETRIC

    cert = realize_asymmetric(3, 4)
    assert cert.digraph.n == 7  # the critical tournament itself, no path
    assert verify_certificate(cert).ok

    cert = realize_asymmetric(3, 6)
    assert cert.digraph.n == 11
    assert _induced_arcs(cert.digraph, range(7)) == set(
        realize_asymmetric(3, 4).digraph.arcs())


def test_realize_asymmetric_threshold_errors():
    with pytest.raises(ValueError, match="r must be >= 2"):
        realize_asymmetric(1, 5)
    with pytest.raises(ValueError, match="t >= 7"):
        realize_asymmetric(4, 5)
    # known to exist but not constructible here: says so explicitly
    with pytest.raises(ValueError, match="explicit form"):
        realize_asymmetric(4, 6)
    with pytest.raises(ValueError, match="explicit form"):
        realize_asymmetric(5, 10)
    with pytest.raises(ValueError, match="t >= 4"):
        realize_asymmetric(3, 3)


def test_certificate_json_round_trip(tmp_path):
    cert = realize_nonsymmetric(2, 2)
    obj = certificate_to_json(cert)
    again = certificate_from_json(obj)
    assert again == cert
    assert obj["digraph"]["n"] == cert.digraph.n
    assert obj["dc_witness"]["k"] == 2


def test_verify_rejects_tampered_witness():
    cert = realize_nonsymmetric(2, 3)
    # n=4: classes {0}, {1, v1}, {v2} are acyclic but miss the ordered pair
    # ({0}, {v2}) since the only arc into v2 leaves v1
    bogus = Coloring((1, 2, 2, 3), 3)
    tampered = dataclasses.replace(cert, dac_witness=bogus)
    check = verify_certificate(tampered)
    assert not check.ok
    assert any("dac witness" in v for v in check.violations)
    # wrong color count is caught before anything else
    short = dataclasses.replace(cert, dac_witness=cert.dc_witness)
    assert any("claimed 3" in v for v in verify_certificate(short).violations)


def test_verify_rejects_wrong_proved_claim():
    triangle = build(3, [(0, 1), (1, 2), (2, 0)])
    honest = certify(triangle, 2, 2, "triangle")
    assert verify_certificate(honest).ok
    # claim dc=1 on a digraph with a cycle, with a fabricated witness
    lying = dataclasses.replace(
        honest,
        claimed_r=1,
        dc_witness=Coloring((1, 1, 1), 1),
        dc_verified="proved",
        claimed_t=2,
    )
    check = verify_certificate(lying)
    assert not check.ok
    assert any("not acyclic" in v for v in check.violations)


def test_verify_rechecks_negative_side():
    k3 = complete_symmetric(3)
    honest = certify(k3, 3, 3, "complete symmetric on 3")
    # pretend dac is only 2 while claiming it proved; the re-run finds the
    # 3-coloring and flags it even though the 2-witness itself is valid
    two = Coloring((1, 1, 2), 2)
    lying = dataclasses.replace(honest, claimed_t=2, dac_witness=two,
                                claimed_r=2, dc_witness=two)
    check = verify_certificate(lying)
    assert not check.ok
    assert any("dac claim is wrong" in v for v in check.violations)


def test_certify_statuses_degrade_to_witness_only_under_budget():
    d = full_circulant_tournament(7)
    generous = certify(d, 2, 4, "c7")
    assert generous.dc_verified == "proved" and generous.dac_verified == "proved"
    # 130 nodes cover both witnesses and the dc negative (~124) but not the
    # k=5 sweep on the dac side (~193)
    cert = certify(d, 2, 4, "c7", Budget(max_nodes=130))
    assert cert.dc_verified == "proved"
    assert cert.dac_verified == "witness-only"
    assert verify_certificate(cert).ok  # witness-only certs stay consistent


def test_certify_refuses_wrong_claims():
    triangle = build(3, [(0, 1), (1, 2), (2, 0)])
    with pytest.raises(RuntimeError, match="no witness"):
        certify(triangle, 1, 2, "triangle")
    with pytest.raises(RuntimeError, match="dc=2 falsified"):
        certify(transitive_tournament(3), 2, 2, "tt3")  # dc is really 1
    with pytest.raises(RuntimeError, match="dac=3 falsified"):
        certify(full_circulant_tournament(7), 2, 3, "c7")  # dac is really 4


def test_probe_finds_nothing_small():
    report = conjecture_probe(3, 5, samples_per_n=0)
    assert report.none_found
    assert report.examined == {1: 1, 2: 2, 3: 8, 4: 64, 5: 1024}
    assert not report.budget_exhausted


def test_probe_empty_census():
    report = conjecture_probe(3, 0)
    assert report.none_found and report.examined == {}


def test_probe_rejects_small_r():
    with pytest.raises(ValueError):
        conjecture_probe(2, 4)


def test_probe_census_reproducible_and_seed_sensitive():
    a = conjecture_probe(3, 7, samples_per_n=25, seed=11)
    b = conjecture_probe(3, 7, samples_per_n=25, seed=11)
    assert a.to_json() == b.to_json()
    assert a.examined[6] == 25 and a.examined[7] == 25


def test_probe_budget_exhaustion_flag():
    report = conjecture_probe(3, 6, samples_per_n=50, budget=Budget(max_nodes=500))
    assert report.budget_exhausted
    assert report.none_found
    assert sum(report.examined.values()) < 1099 + 50
