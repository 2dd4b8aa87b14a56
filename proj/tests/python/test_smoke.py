"""Smoke tests for the python bindings; the heavy coverage lives in the C++
suites."""

import twosphere as ts

TETRA = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]


def test_classify_tetrahedron():
    c = ts.classify_surface(TETRA)
    assert c["kind"] == "Sphere"
    assert c["euler_characteristic"] == 2


def test_euler_and_canonical():
    assert ts.euler_characteristic(TETRA) == 2
    tris = ts.canonical_triangles([(3, 2, 1), (1, 2, 3)])
    assert len(tris) == 1


def test_find_sphere():
    found, witness = ts.find_sphere(TETRA, 4)
    assert found and len(witness) == 4
    found, witness = ts.find_sphere(TETRA, 3)
    assert not found and witness is None


def test_delete_to_sphere():
    flap = TETRA + [(0, 1, 9)]
    ok, deleted = ts.delete_to_sphere(flap, 1)
    assert ok and deleted == [(0, 1, 9)]
    ok, _ = ts.delete_to_sphere(flap, 0)
    assert not ok


def test_brute_force_matches_engine():
    host = TETRA + [(1, 2, 7), (2, 7, 8)]
    assert ts.find_sphere(host, 4)[0] == ts.brute_force_sphere(host, 4)[0]


def test_kernelize_and_compress():
    r = ts.kernelize(TETRA, 0)
    assert r["kind"] == "decided" and r["answer"] is True
    flap = TETRA + [(0, 1, 9)]
    c = ts.compress(flap, 1)
    assert c["kind"] in ("decided", "reduced-weighted")


def test_grid_tiling_reduction_counts():
    sets = {(1, 1): [(1, 1)]}
    r = ts.generate_reduction(1, 1, sets)
    assert r["k_prime"] == 24
    assert len(r["triangles"]) == 24
    sel = ts.solve_grid_tiling(1, 1, sets)
    assert sel == {(1, 1): (1, 1)}
    sol = ts.assemble_solution(1, 1, sets, sel)
    assert ts.classify_surface(sol)["kind"] == "Sphere"


def test_2sc_roundtrip():
    text = ts.write_2sc(TETRA)
    parsed = ts.parse_2sc(text)
    assert len(parsed["triangles"]) == 4


def test_subdivision():
    sd = ts.barycentric_subdivision(TETRA)
    assert len(sd) == 24
    assert ts.classify_surface(sd)["kind"] == "Sphere"


def test_random_complex_deterministic():
    a = ts.random_complex(7, triangles=10)
    b = ts.random_complex(7, triangles=10)
    assert a == b
