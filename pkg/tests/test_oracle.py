import random
from itertools import permutations, product

import numpy as np
import pytest

from lmaxsched import (
    Assignment,
    Instance,
    ResourceLimitError,
    brute_force_all_orders_feasible,
    brute_force_feasible,
    brute_force_min_lmax,
    evaluate_schedule,
    generate_random,
    search_bounds,
)
from lmaxsched.oracle import all_orders_feasible_batch, edd_min_lmax_batch


def naive_min_lmax(instance):
    """Plain loop over every assignment; the reference for the vectorised oracle."""
    best = None
    for machine_of in product(range(1, instance.m + 1), repeat=instance.n):
        value = evaluate_schedule(instance, Assignment(machine_of)).lmax
        if best is None or value < best[0]:
            best = (value, machine_of)
    return best


def naive_all_orders(instance):
    for machine_of in product(range(instance.m), repeat=instance.n):
        for sequence in permutations(range(instance.n)):
            load = [0] * instance.m
            ok = True
            for i in sequence:
                j = machine_of[i]
                load[j] += instance.jobs[i].work
                if load[j] * instance.rates[j] > instance.jobs[i].deadline:
                    ok = False
                    break
            if ok:
                return True
    return False


def test_pigeonhole():
    result = brute_force_min_lmax(Instance.build([1, 1], [(1, 1)] * 3))
    assert result.lmax == 1
    assert result.assignment == Assignment((1, 1, 2))  # lexicographically first optimum


def test_single_machine_is_edd_chain():
    instance = Instance.build([2], [(3, 20), (1, 2), (2, 9)])
    # EDD: job1 ends 2, job2 ends 6, job0 ends 12
    assert brute_force_min_lmax(instance).lmax == max(2 - 2, 6 - 9, 12 - 20)


def test_related_machines_hand_enumeration():
    instance = Instance.build([1, 2], [(2, 2), (2, 2)])
    # (1,1): 2,4 -> 2   (1,2): 2,4 -> 2   (2,1): 4,2 -> 2   (2,2): 4,8 -> 6
    result = brute_force_min_lmax(instance)
    assert result.lmax == 2
    assert result.assignment == Assignment((1, 1))


def test_empty_instance():
    instance = Instance.build([1, 1], [])
    assert brute_force_min_lmax(instance).lmax is None
    assert brute_force_feasible(instance, -100)
    assert brute_force_all_orders_feasible(instance)


def test_feasible_single_long_job():
    assert not brute_force_feasible(Instance.build([1], [(5, 4)]), 0)


def test_all_orders_needs_reordering():
    assert brute_force_all_orders_feasible(Instance.build([1], [(2, 2), (1, 1)])) is False
    assert brute_force_all_orders_feasible(Instance.build([1], [(2, 3), (1, 1)])) is True


def test_caps():
    with pytest.raises(ResourceLimitError):
        brute_force_min_lmax(Instance.build([1, 1, 1], [(1, 1)] * 5), enum_cap=3**5 - 1)
    with pytest.raises(ResourceLimitError):
        brute_force_all_orders_feasible(Instance.build([1], [(1, 1)] * 7))


def test_chunked_enumeration_matches_naive():
    # 2**17 assignments spans two chunks
    instance = generate_random(17, 2, 5, 40, 2, seed=3)
    result = brute_force_min_lmax(instance)
    assert evaluate_schedule(instance, result.assignment).lmax == result.lmax
    assert result.lmax == edd_min_lmax_batch(
        np.array([[j.work for j in instance.jobs]]),
        np.array([[j.deadline for j in instance.jobs]]),
        instance.rates,
    )[0]


@pytest.mark.parametrize("seed", range(80))
def test_matches_naive_loop(seed):
    rnd = random.Random(seed)
    instance = generate_random(rnd.randint(1, 6), rnd.randint(1, 3), 5, 15, 3, seed)
    value, machine_of = naive_min_lmax(instance)
    result = brute_force_min_lmax(instance)
    assert result.lmax == value
    assert result.assignment.machine_of == machine_of


@pytest.mark.parametrize("seed", range(40))
def test_self_consistency(seed):
    rnd = random.Random(seed)
    instance = generate_random(rnd.randint(1, 6), rnd.randint(1, 3), 5, 15, 3, seed)
    lmax = brute_force_min_lmax(instance).lmax
    assert brute_force_feasible(instance, lmax)
    assert not brute_force_feasible(instance, lmax - 1)
    assert brute_force_feasible(instance, search_bounds(instance).hi)


@pytest.mark.parametrize("seed", range(60))
def test_all_orders_matches_naive(seed):
    rnd = random.Random(seed)
    instance = generate_random(rnd.randint(1, 4), rnd.randint(1, 2), 3, 8, 2, seed)
    assert brute_force_all_orders_feasible(instance) == naive_all_orders(instance)


def test_batches_match_scalar_forms():
    rng = np.random.default_rng(0)
    work = rng.integers(0, 4, (200, 4))
    deadline = rng.integers(-1, 9, (200, 4))
    rates = (1, 2)
    lmax = edd_min_lmax_batch(work, deadline, rates)
    orders = all_orders_feasible_batch(work, deadline, rates)
    for row in range(200):
        instance = Instance.build(rates, zip(work[row].tolist(), deadline[row].tolist()))
        assert lmax[row] == brute_force_min_lmax(instance).lmax
        assert orders[row] == naive_all_orders(instance)
