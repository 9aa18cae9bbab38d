import pytest

import nztcheck as nz


def test_parse_render_roundtrip():
    text = "-in:1.get ; +in:2.get ; out.set:1 ; !"
    x = nz.parse(text)
    assert str(x) == text
    assert len(x) == 4
    assert x.iregs() == {1, 2}


def test_syntax_error_is_typed():
    with pytest.raises(nz.ProgramSyntaxError):
        nz.parse("+in:1.get ;; !")
    with pytest.raises(nz.ProgramSemanticError):
        nz.parse("in:1.set:0 ; !")


def test_min_len_and_generators():
    assert [nz.min_len(n) for n in (1, 2, 3, 4, 64)] == [3, 4, 6, 7, 97]
    for n in range(1, 9):
        assert len(nz.gen_tstnz(n)) == 2 * n + 1
        assert len(nz.gen_tstnz_prime(n)) == nz.min_len(n)
        assert nz.brute_force_check(nz.gen_tstnz_prime(n), n)


def test_execute_reports_output():
    x = nz.gen_tstnz_prime(3)
    assert nz.execute(x, [False, False, False]) == {"kind": "terminated", "output": False, "steps": 4}
    assert nz.execute(x, [False, True, False])["output"] is True
    falls = nz.execute(nz.parse("+in:1.get ; out.set:1"), [True])
    assert falls["kind"] == "inaction" and falls["reason"] == "fell-off-end"


def test_decide_routes():
    assert nz.decide(nz.parse("!"), 3)["strategy_used"] == "length-bound"
    d = nz.decide(nz.gen_tstnz(4), 4)
    assert d["result"] and d["strategy_used"] == "brute"
    d = nz.decide(nz.gen_tstnz_prime(5), 5)
    assert d["result"] and d["strategy_used"] == "shortest"
    bad = nz.decide(nz.parse("+in:1.get ; +in:2.get ; out.set:1 ; !"), 2, strategy="brute")
    assert not bad["result"]
    assert bad["counterexample_input"] == [False, False]


def test_checkers_agree_with_brute_force():
    x = nz.parse("-in:1.get ; +in:2.get ; #3 ; -in:3.get ; +in:4.get ; #1 ; out.set:1 ; !")
    assert nz.classify(x)["good"]
    assert nz.check_good(x, 4) == nz.brute_force_check(x, 4)
    assert nz.check_shortest(nz.gen_tstnz_prime(7), 7)
    assert nz.always_one(nz.parse("-in:1.get ; #2 ; out.set:1 ; !")) is False


def test_transforms():
    x = nz.gen_tstnz_prime(4)
    y = nz.fix_register(x, 2, False)
    assert len(y) == len(x) and y.iregs() == {1, 2, 3}
    z = nz.parse("+aux:1.get ; aux:1.set:1 ; !")
    assert nz.chi(nz.chi(z, 1), 1) == z
    with pytest.raises(nz.PreconditionError):
        nz.eliminate(x, {1: True, 2: True, 3: True, 4: True})


def test_reduction_and_sat():
    inst = nz.build_psi("x1")
    assert inst["n"] == 12
    assert len(inst["program"]) == nz.min_len(12) + inst["phi_len"] + 5
    assert nz.satisfiable("x1 | x2") and not nz.satisfiable("x1 & !x1")
    assert nz.brute_force_check(inst["program"], inst["n"]) is False


def test_search_and_cap():
    r = nz.exhaustive_min_search(1, 3, jobs=1)
    assert r["min_found"] == 3
    assert all(nz.brute_force_check(w, 1) for w in r["witnesses"])
    with pytest.raises(nz.CapExceeded):
        nz.brute_force_check(nz.gen_tstnz(5), 5, cap=4)
