"""Layered search for consistent scheme keys.

The coordinates of a scheme key are grouped by the generator they multiply.
Once the presentation of rank t-1 is known, the tests of the rank t
presentation are affine in the a_t coordinates, so each layer is a linear
system over GF(p) and every solution extends to a consistent presentation.
"""
import logging
import time
from concurrent.futures import ProcessPoolExecutor, as_completed

from tqdm import tqdm

from ..errors import BudgetExceededError
from ..linalg import solve_affine
from ..pcgroup import layer_equations
from .scheme import RANK, MaximalClassScheme

logger = logging.getLogger(__name__)

FIRST_TARGET = 3


def extend(scheme, prefix, target):
    """Every consistent extension of ``prefix`` by the a_target coordinates."""
    quotient = scheme.presentation(prefix, rank=target - 1)
    rows, rhs = scheme.layer_system(layer_equations(quotient), target)
    width = len(scheme.unknowns[target])
    return [tuple(prefix) + tail for tail in solve_affine(rows, rhs, width, scheme.prime)]


def explore(prime, two_step, root, max_nodes, deadline):
    """Depth-first search below one layer-3 root.

    Runs in worker processes, so it reports instead of raising:
    ``(status, keys, nodes)`` with status ``"ok"``, ``"nodes"`` or ``"time"``.
    """
    scheme = MaximalClassScheme(prime, two_step)
    found = []
    nodes = 0
    stack = [(tuple(root), FIRST_TARGET + 1)]
    while stack:
        prefix, target = stack.pop()
        if target > RANK:
            found.append(prefix)
            continue
        nodes += 1
        if nodes > max_nodes:
            return "nodes", found, nodes
        if time.time() > deadline:
            return "time", found, nodes
        children = extend(scheme, prefix, target)
        stack.extend((child, target + 1) for child in reversed(children))
    return "ok", found, nodes


def search_scheme(scheme, jobs=1, max_nodes=50_000_000, budget_seconds=1800.0, progress=False, deadline=None):
    """All consistent scheme keys, sorted."""
    deadline = deadline or time.time() + budget_seconds
    roots = extend(scheme, (), FIRST_TARGET)
    logger.info("%r: %d roots at layer %d", scheme, len(roots), FIRST_TARGET)

    keys, nodes, done = [], len(roots), 0
    bar = tqdm(total=len(roots), desc=f"search p={scheme.prime}", unit="root", disable=not progress)

    def absorb(status, found, used):
        nonlocal nodes, done
        keys.extend(found)
        nodes += used
        done += 1
        bar.update(1)
        if status != "ok" or nodes > max_nodes:
            bar.close()
            reason = "node budget" if status == "nodes" or nodes > max_nodes else "time budget"
            raise BudgetExceededError(
                f"scheme search stopped: {reason} exhausted",
                progress={"roots_done": done, "roots_total": len(roots), "keys_found": len(keys), "nodes": nodes},
            )

    if jobs <= 1:
        for root in roots:
            absorb(*explore(scheme.prime, scheme.two_step, root, max_nodes - nodes, deadline))
    else:
        pool = ProcessPoolExecutor(max_workers=jobs)
        futures = [
            pool.submit(explore, scheme.prime, scheme.two_step, root, max_nodes, deadline)
            for root in roots
        ]
        try:
            for future in as_completed(futures):
                absorb(*future.result())
        except BaseException:
            # running workers stop at their own deadline; do not wait for them
            pool.shutdown(wait=False, cancel_futures=True)
            raise
        pool.shutdown()
    bar.close()
    keys.sort()
    logger.info("%r: %d consistent keys after %d nodes", scheme, len(keys), nodes)
    return keys
