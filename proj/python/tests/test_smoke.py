"""Smoke tests for the python module against the shared fixtures."""

import pytest

import graphoid as g

CHAIN = "node a\nnode b\nnode c\nedge a b\nedge b c\n"
COLLIDER = "node a\nnode b\nnode c\nedge a c\nedge b c\n"
DETFORK = "node w\nnode d det\nnode x\nnode y\nedge w d\nedge d x\nedge d y\n"
FORK_MODEL = "var x z y w\nindep x | z | y,w\n"


def test_universe_and_triplets():
    u = g.Universe(["a", "b", "c"])
    assert len(u) == 3
    assert u.index("b") == 1
    assert "c" in u

    t = g.Triplet(u, ["b"], ["a"], ["c"])
    assert t.literal() == "b | a | c"
    assert t.canonical().x == ["b"]
    assert g.parse_triplet("b | a | c", u) == t


def test_dsep_on_chain_and_collider():
    chain = g.parse_dag(CHAIN)
    assert g.dsep(chain, "a | b | c")
    assert not g.dsep(chain, "a | - | c")
    assert g.dsep_naive(chain, "a | b | c")

    collider = g.parse_dag(COLLIDER)
    assert g.dsep(collider, "a | - | b")
    assert not g.dsep(collider, "a | c | b")


def test_graph_accessors():
    chain = g.parse_dag(CHAIN)
    assert chain.topological_order() == ["a", "b", "c"]
    assert chain.parents("b") == ["a"]
    assert chain.descendants("a") == ["b", "c"]
    assert "a -> b;" in chain.dot()
    assert g.parse_dag(chain.text()) == chain


def test_closure_and_derivation():
    m = g.parse_model(FORK_MODEL)
    closed = g.closure(m, "semigraphoid")
    assert len(closed) == 5
    assert "x | z,y | w" in closed
    assert g.is_closed(closed, "semigraphoid")

    trace = g.derive(m, "x | z,y | w")
    assert trace is not None
    assert [s.axiom for s in trace.steps] == ["weak-union"]

    assert g.derive(m, "x | - | y") is None


def test_apply_axiom():
    u = g.Universe(["x", "z", "y", "w"])
    out = g.apply_axiom("decomposition", g.parse_triplet("x | z | y,w", u))
    assert sorted(t.literal() for t in out) == ["x | z | w", "x | z | y"]


def test_protocol_pipeline():
    chain = g.parse_dag(CHAIN)
    p = g.extract(chain)
    assert p.order == ["a", "b", "c"]
    assert g.compile(p).same_edges(chain)
    assert g.validate(p) == []

    triplets = g.protocol_triplets(p)
    assert [t.literal() for t in triplets] == ["c | b | a"]


def test_minimal_boundary_and_witness():
    chain = g.parse_dag(CHAIN)
    oracle = g.dsep_oracle(chain)
    assert g.minimal_boundary(oracle, ["a", "b"], "c") == ["b"]

    witness = g.witness_protocol(oracle, "a | b | c")
    assert witness is not None
    assert g.dsep(g.compile(witness), "a | b | c")

    assert g.witness_protocol(oracle, "a | - | c") is None


def test_idsep_on_deterministic_fork():
    fork = g.parse_dag(DETFORK)
    assert fork.deterministic == ["d"]
    assert g.idsep(fork, "x | w | y")
    assert not g.dsep(fork, "x | w | y")
    assert g.determination_closure(fork, ["w"]) == ["w", "d"]


def test_minimal_imap_and_is_imap():
    chain = g.parse_dag(CHAIN)
    imap = g.undirected_minimal_imap(g.dsep_oracle(chain))
    assert imap.edges() == [("a", "b"), ("b", "c")]
    assert g.usep(imap, "a | b | c")

    counterexample = g.is_imap(g.dsep_model(chain), g.dsep_oracle(chain))
    assert counterexample is None


def test_python_predicate_oracle():
    u = g.Universe(["a", "b", "c"])
    oracle = g.IndependenceOracle(u, lambda t: len(t.z) > 0)
    assert oracle.affirms(g.parse_triplet("a | b | c", u))
    assert not oracle.affirms(g.parse_triplet("a | - | c", u))


def test_error_mapping():
    with pytest.raises(g.ParseError):
        g.parse_dag("node a\nedge a b\n")
    with pytest.raises(g.ValidationError):
        u = g.Universe(["a", "b"])
        g.Triplet(u, ["a"], ["a"], ["b"])
    with pytest.raises(g.LimitError):
        g.closure(g.DependencyModel(g.Universe(list("abcdefgh"))))
    with pytest.raises(g.CycleError):
        g.parse_dag("node a\nnode b\nedge a b\nedge b a\n")
    with pytest.raises(g.Error):
        g.parse_model("var a b\nindep a | b\n")
    with pytest.raises(g.VariableLookupError):
        g.parse_dag(CHAIN).parents("zz")


def test_run_check():
    outcome = g.run_check("corollary1", n=4, trials=10, seed=3)
    assert outcome.passed()
    assert outcome.trials == 10
