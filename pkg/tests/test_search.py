import itertools
import logging

import pytest

from maxclass.algebra import CentralizerSequence, check_consistency
from maxclass.constituents import (beta_identity_holds, check_constituent_bounds, max_zero_run,
                                   split_constituents)
from maxclass.constructions import exceptional_sequence
from maxclass.harness.reports import (allowed_first_lengths, verify_first_length,
                                      verify_length2q, witt_reduction_obstruction)
from maxclass.harness.search import SearchConfig, search_sequences


def naive(p, n, degree, normalize):
    count = degree - 2 * n
    out = []
    for vals in itertools.product(range(p), repeat=count):
        if normalize:
            first = next((v for v in vals if v), None)
            if first not in (None, 1):
                continue
        s = CentralizerSequence.from_values(p, n, vals)
        if check_consistency(s, degree).consistent:
            out.append(vals)
    return out


def rows(result):
    return [tuple(b.value for b in s.entries) for s in result.sequences]


@pytest.mark.parametrize("p,n,degree,normalize", [
    (2, 2, 14, False), (3, 2, 12, False), (3, 3, 14, True), (2, 1, 12, False), (5, 2, 9, False)])
def test_search_equals_brute_force(p, n, degree, normalize):
    res = search_sequences(SearchConfig(p, n, degree, normalize=normalize))
    assert res.complete
    assert rows(res) == naive(p, n, degree, normalize)


def test_small_search_contains_metabelian():
    got = rows(search_sequences(SearchConfig(3, 3, 12)))
    assert (0,) * 6 in got and (1,) * 6 in got
    assert got == sorted(got)


def test_pinned_ell_witness():
    res = search_sequences(SearchConfig(3, 3, 40, ell=10))
    assert res.sequences
    assert exceptional_sequence(3, 9, 1, 40) in [s.__class__(3, 3, s.entries) for s in res.sequences]
    assert all(split_constituents(s).ell == 10 for s in res.sequences)


def test_pinned_ell_excluded():
    assert search_sequences(SearchConfig(3, 3, 2 * 14 + 3, ell=14)).sequences == []


def test_odd_ell_warning(caplog):
    with caplog.at_level(logging.WARNING):
        cfg = SearchConfig(3, 3, 30, ell=11)
    assert "odd" in caplog.text
    assert search_sequences(cfg).sequences == []


def test_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(4, 3, 20)
    with pytest.raises(ValueError):
        SearchConfig(3, 3, 4)
    with pytest.raises(ValueError):
        SearchConfig(3, 3, 20, prefix=(0, 1), pinned=((5, 2),)).fixed_values()


def test_prefix_and_pins_respected():
    res = search_sequences(SearchConfig(3, 3, 24, prefix=(0, 0, 0, 0, 1), normalize=False))
    assert res.sequences and all(s.beta(8) == 1 and not s.beta(4) for s in res.sequences)
    res = search_sequences(SearchConfig(3, 3, 24, pinned=((9, 0),), normalize=False))
    assert all(s.beta(9) == 0 for s in res.sequences)


def test_threads_do_not_change_output():
    cfg = SearchConfig(3, 3, 28, normalize=False)
    assert rows(search_sequences(cfg)) == rows(search_sequences(cfg, threads=3))


def test_node_limit_is_reported_with_frontier():
    cfg = SearchConfig(3, 3, 30, node_limit=20, normalize=False)
    res = search_sequences(cfg)
    assert res.partial and res.limit == "node_limit" and res.frontier
    full = set(rows(search_sequences(SearchConfig(3, 3, 30, normalize=False))))
    recovered = set(rows(res))
    for pre in res.frontier:
        recovered |= set(rows(search_sequences(SearchConfig(3, 3, 30, prefix=pre, normalize=False))))
    assert recovered == full


def test_time_limit_marker():
    res = search_sequences(SearchConfig(5, 2, 60, normalize=False, time_limit=1e-9))
    assert res.partial and res.limit == "time_limit"


def test_emitted_sequences_are_sound():
    for cfg in (SearchConfig(3, 3, 40), SearchConfig(5, 5, 30), SearchConfig(3, 2, 30),
                SearchConfig(5, 2, 24)):
        for s in search_sequences(cfg).sequences:
            assert check_consistency(s, cfg.degree).consistent
            prof = split_constituents(s)
            assert check_constituent_bounds(prof).ok
            if prof.ell is not None:
                assert prof.ell % 2 == 0
                assert beta_identity_holds(s) in (True, None)
                assert max_zero_run(s) <= prof.ell - s.n


def test_allowed_first_lengths():
    assert allowed_first_lengths(3, 64) == {10, 12, 18, 28, 30, 54}


def test_verify_first_length_odd_skipped():
    rep = verify_first_length(3, 40)
    assert rep.status[13] == "excluded" and 13 not in rep.search_degree
    assert rep.witnessed == [18] and rep.ok


def test_verify_length2q_scope():
    e = exceptional_sequence(3, 9, 1, 54)
    rep = verify_length2q(3, 9, 54, extra=(e,))
    assert e not in rep.sequences
    assert rep.ok and rep.complete and rep.sequences
    with pytest.raises(ValueError):
        verify_length2q(3, 3, 30)


def test_witt_obstruction_other_primes():
    for p in (5, 7):
        rep = witt_reduction_obstruction(p, 40)
        assert rep.obstructed and rep.first_empty_degree <= 40
