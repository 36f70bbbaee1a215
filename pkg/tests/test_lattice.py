import pytest

from qhpp.lattice import (
    BlowupStep,
    ChainShapeError,
    CurveClass,
    DualGraph,
    SurfaceModel,
)


def blow(model, incidences, name=None):
    return model.blow_up(BlowupStep(tuple(incidences), name=name))


def two_lines():
    return SurfaceModel.plane({"L1": 1, "L2": 1})


def test_plane_basics():
    m = two_lines()
    assert m.blowup_count == 0
    assert m.intersect("L1", "L2") == 1
    assert m.self_int("L1") == 1
    assert m.k_dot("L1") == -3
    assert m.genus_term("L1") == -2


def test_plane_validation():
    with pytest.raises(ValueError):
        SurfaceModel.plane({"C": 3})  # degree-3 curve cannot be smooth rational
    with pytest.raises(ValueError):
        SurfaceModel.plane({"L": 0})
    with pytest.raises(ValueError):
        SurfaceModel.plane({"L": 1}, singular=("X",))
    SurfaceModel.plane({"C": 3}, singular=("C",))


def test_blow_up_point_on_line():
    m = blow(SurfaceModel.plane({"L": 1}), [("L", 1)], "E1")
    assert m.blowup_count == 1
    assert m.self_int("L") == 0
    assert m.self_int("E1") == -1
    assert m.intersect("L", "E1") == 1
    assert m.k_dot("E1") == -1


def test_blow_up_separates_two_lines():
    m = blow(two_lines(), [("L1", 1), ("L2", 1)])
    assert m.intersect("L1", "L2") == 0
    assert m.intersect("L1", "E1") == 1
    assert m.intersect("L2", "E1") == 1


def test_nodal_cubic_resolution():
    m = SurfaceModel.plane({"C": 3}, singular=("C",))
    assert m.genus_term("C") == 0
    m = blow(m, [("C", 2)], "N")
    assert m.self_int("C") == 5
    assert m.genus_term("C") == -2
    assert m.intersect("C", "N") == 2
    m = m.declare_smooth("C")
    assert "C" in m.smooth


def test_declare_smooth_rejects_wrong_genus():
    m = SurfaceModel.plane({"C": 3}, singular=("C",))
    with pytest.raises(ValueError):
        m.declare_smooth("C")


def test_over_assignment_rejected():
    m = blow(two_lines(), [("L1", 1), ("L2", 1)])
    # the lines are already separated; a second shared point is impossible
    with pytest.raises(ValueError):
        blow(m, [("L1", 1), ("L2", 1)])


def test_multiplicity_two_on_smooth_curve_rejected():
    with pytest.raises(ValueError):
        blow(SurfaceModel.plane({"L": 1}), [("L", 2)])


def test_step_validation():
    m = two_lines()
    with pytest.raises(ValueError):
        BlowupStep((("L1", 0),))
    with pytest.raises(ValueError):
        BlowupStep((("L1", 1), ("L1", 1)))
    with pytest.raises(KeyError):
        blow(m, [("nope", 1)])
    m2 = blow(m, [("L1", 1)], "X")
    with pytest.raises(ValueError):
        blow(m2, [("L2", 1)], "X")  # name collision


def test_default_exceptional_names():
    m = blow(blow(two_lines(), [("L1", 1)]), [("L2", 1)])
    assert set(m.tracked) == {"L1", "L2", "E1", "E2"}


def test_rank_bookkeeping_and_exceptional_shape():
    m = two_lines()
    for k in range(4):
        before = m
        m = blow(m, [] if k % 2 else [("L1", 1)])
        assert m.blowup_count == before.blowup_count + 1
        new = f"E{m.blowup_count}"
        assert m.self_int(new) == -1
        assert m.genus_term(new) == -2


def test_intersection_form_symmetric():
    m = blow(blow(two_lines(), [("L1", 1), ("L2", 1)]), [("L1", 1), ("E1", 1)])
    names = sorted(m.tracked)
    for a in names:
        for b in names:
            assert m.intersect(a, b) == m.intersect(b, a)


def test_dot_length_mismatch_rejected():
    with pytest.raises(ValueError):
        CurveClass(1, (1,)).dot(CurveClass(1, ()))


def chain_model():
    # a line with a tower of three infinitely near points on it
    m = SurfaceModel.plane({"L": 1})
    m = blow(m, [("L", 1)], "A1")
    m = blow(m, [("A1", 1), ("L", 1)], "A2")
    m = blow(m, [("A2", 1), ("L", 1)], "A3")
    return m


def test_extract_chain_basics():
    m = chain_model()
    assert m.extract_chain(["A1", "A2"]).entries == (2, 2)
    single = blow(blow(two_lines(), [("L1", 1)], "A"), [("A", 1)], "B")
    assert single.extract_chain(["A"]).entries == (2,)


def test_extract_chain_shape_errors():
    m = chain_model()
    with pytest.raises(ChainShapeError):
        m.extract_chain(["A1", "A3"])  # gap: A1 and A3 do not meet
    with pytest.raises(ChainShapeError):
        m.extract_chain(["A3", "A1"])
    with pytest.raises(ChainShapeError):
        m.extract_chain(["A1", "A2", "A3"])  # A3 is a (-1)-curve
    with pytest.raises(ChainShapeError):
        m.extract_chain([])
    with pytest.raises(ChainShapeError):
        m.extract_chain(["A1", "A1"])
    # L is a (-2)-curve here but meets only A3, so (L, A1) is disconnected
    with pytest.raises(ChainShapeError):
        m.extract_chain(["L", "A1"])


def test_dual_graph_single_vertex():
    m = two_lines()
    g = m.dual_graph(["L1"])
    assert g.vertices == (("L1", 1),)
    assert g.edges == ()


def test_dual_graph_text_and_dot():
    m = chain_model()
    g = m.dual_graph(["A1", "A2", "A3", "L"])
    text = g.to_text()
    assert "A1 -2" in text.splitlines()
    assert "A1 A2 1" in text.splitlines()
    dot = g.to_dot()
    assert dot.startswith("graph dual {")
    assert '"A1" -- "A2";' in dot
    # weighted edges carry a label
    m2 = blow(SurfaceModel.plane({"C": 3}, singular=("C",)), [("C", 2)], "N")
    dot2 = m2.dual_graph().to_dot()
    assert '"C" -- "N" [label="2"];' in dot2


def test_dual_graph_isomorphism():
    m = chain_model()
    g = m.dual_graph(["A1", "A2", "A3"])
    relabeled = DualGraph(
        (("x", -2), ("y", -1), ("z", -2)),
        (("z", "y", 1), ("x", "z", 1)),
    )
    assert g.is_isomorphic_to(relabeled)
    assert relabeled.is_isomorphic_to(g)
    wrong_label = DualGraph(
        (("x", -2), ("y", -2), ("z", -2)),
        (("x", "z", 1), ("z", "y", 1)),
    )
    assert not g.is_isomorphic_to(wrong_label)
    # path (-2, -2, -1, -2) versus a star with the same labels and size
    path = m.dual_graph(["A1", "A2", "A3", "L"])
    star = DualGraph(
        (("x", -2), ("y", -2), ("z", -2), ("c", -1)),
        (("c", "x", 1), ("c", "y", 1), ("c", "z", 1)),
    )
    assert not path.is_isomorphic_to(star)
    assert not star.is_isomorphic_to(path)


def test_unknown_names_raise():
    m = two_lines()
    with pytest.raises(KeyError):
        m.intersect("L1", "nope")
    with pytest.raises(KeyError):
        m.dual_graph(["nope"])
