"""Smoke tests for the Python bindings."""

import lexigraph as lx


def test_ordinals():
    w = lx.Ordinal.omega()
    assert lx.Ordinal("1") + w == w
    assert w + lx.Ordinal("1") > w
    assert w.is_even()
    assert not (w + lx.Ordinal("3")).is_even()
    assert str(lx.Ordinal("w^2*3+w+1")) == "w^2*3+w+1"


def test_membership():
    assert not lx.member("MaxParity(3)", "| 1 2")["accepted"]
    assert lx.member("MaxParity(3)", "| 1 2")["witness_index"] == "2"
    assert lx.member("minlex{0:TW@0,1:TL@1}", "| 0")["accepted"]
    assert lx.expand("Parity(2)") == "maxlex{0:TW@0,1:TL@1,2:TW@2}"


def test_graphs():
    loop = lx.loop_graph("0")
    chain = lx.chain_graph("1", 3)
    product = lx.lex_product(loop, chain)
    assert lx.morphism_exists(loop, product)
    sig = lx.signature_graph(2, 2)
    report = lx.satisfies(sig, "MaxParity(2)")
    assert report["satisfied"]
    assert not lx.satisfies(loop, "MinParity(2)", bound=2)["satisfied"] is None


def test_universality():
    report = lx.check_universality(lx.loop_graph("0"), "TW@0", "0", 2)
    assert report["pass"]
    assert report["checked"] > 0
    bad = lx.check_universality(lx.chain_graph("1", 1), "TL@1", "1", 2)
    assert not bad["pass"]
    assert bad["failures"]


def test_solver():
    game = "vertex v\nowner v eve\nedge v 0 v\nedge v 1 v\n"
    result = lx.solve(game, "MinParity(2)")
    assert result["winning"] == ["v"]
    assert lx.oracle_solve(game, "MinParity(2)") == ["v"]


def test_reductions():
    const1 = "colours 0,1\nstate q out=1\ninit q\ntrans q 0 q\ntrans q 1 q\n"
    const2 = const1.replace("out=1", "out=2")
    assert lx.cobuchi_sem(const1, "| 0")
    assert not lx.cobuchi_sem(const2, "| 0")
    assert lx.cobuchi_sem(lx.reduce_union(const2, const1), "| 0 1")
    assert not lx.cobuchi_sem(lx.reduce_max(const2, const1), "| 0 1")
    assert lx.double_map("3 | 0 5") == "6 | 0 10"
    assert lx.limit_collapse("w w | 1", "w", ["0", "2"]) == "0 2 | 1"


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for test in tests:
        test()
        print(f"{test.__name__}: ok")


if __name__ == "__main__":
    main()
