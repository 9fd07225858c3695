"""
Application service behind ``check``: parses check names and runs them
against one digraph
"""
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import structlog

from ...domain.exceptions import CheckSpecError
from ...domain.models.digraph import Digraph
from ...domain.models.reports import ConditionVerdict
from ...domain.services import connectivity, degree_conditions, ham_solver
from ..schemas.documents import CheckOutcome

logger = structlog.get_logger(__name__)

Handler = Callable[[Digraph, List[int]], Tuple[bool, str]]


def _join(vertices: Iterable[int]) -> str:
    return " ".join(str(v) for v in vertices)


def _verdict(verdict: ConditionVerdict) -> Tuple[bool, str]:
    return verdict.holds, "" if verdict.holds else verdict.describe()


def _strong(d: Digraph, args: List[int]) -> Tuple[bool, str]:
    report = connectivity.strong_components(d)
    if report.is_strong:
        return True, ""
    return False, "components " + " | ".join(_join(c) for c in report.components)


def _unilateral(d: Digraph, args: List[int]) -> Tuple[bool, str]:
    report = connectivity.strong_components(d)
    if report.is_unilateral:
        return True, ""
    return False, "components " + " | ".join(_join(c) for c in report.components)


def _connectivity(d: Digraph, args: List[int]) -> Tuple[bool, str]:
    kappa = connectivity.vertex_connectivity(d)
    return kappa >= 1, f"kappa {kappa}"


def _k_strong(d: Digraph, args: List[int]) -> Tuple[bool, str]:
    k = args[0]
    if connectivity.is_k_strong(d, k):
        return True, ""
    if d.n < k + 1:
        return False, f"order {d.n} < {k + 1}"
    separator = connectivity.minimum_separator(d, max_size=k - 1)
    if separator is None:
        return False, f"kappa {connectivity.vertex_connectivity(d)}"
    if not separator:
        return False, "not strong"
    return False, f"separator {_join(separator)}"


def _hamiltonian(d: Digraph, args: List[int]) -> Tuple[bool, str]:
    answer = ham_solver.hamiltonian_cycle(d)
    return answer.found, f"cycle {_join(answer.witness.vertices)}" if answer.found else ""


def _ham_path(d: Digraph, args: List[int]) -> Tuple[bool, str]:
    answer = ham_solver.hamiltonian_path_between(d, args[0], args[1])
    return answer.found, f"path {_join(answer.witness.vertices)}" if answer.found else ""


def _ham_connected(d: Digraph, args: List[int]) -> Tuple[bool, str]:
    holds, pair = ham_solver.strongly_hamiltonian_connected(d)
    return holds, "" if holds else f"pair {_join(pair)}"


def _weakly_ham_connected(d: Digraph, args: List[int]) -> Tuple[bool, str]:
    holds, pair = ham_solver.weakly_hamiltonian_connected(d)
    return holds, "" if holds else f"pair {_join(pair)}"


def _longest_cycle(d: Digraph, args: List[int]) -> Tuple[bool, str]:
    cycle = ham_solver.longest_cycle(d)
    if cycle is None:
        return False, "acyclic"
    return True, f"length {cycle.length} cycle {_join(cycle.vertices)}"


def _cycle_through(d: Digraph, args: List[int]) -> Tuple[bool, str]:
    cycle = ham_solver.cycle_through(d, args)
    return cycle is not None, f"cycle {_join(cycle.vertices)}" if cycle is not None else ""


def _m_strong(d: Digraph, args: List[int]) -> Tuple[bool, str]:
    return degree_conditions.is_M_strongly_connected(d, args), ""


# name -> (argument count, None for one or more, handler)
CHECKS: Dict[str, Tuple[Optional[int], Handler]] = {
    "strong": (0, _strong),
    "unilateral": (0, _unilateral),
    "connectivity": (0, _connectivity),
    "k-strong": (1, _k_strong),
    "hamiltonian": (0, _hamiltonian),
    "ham-path": (2, _ham_path),
    "ham-connected": (0, _ham_connected),
    "weakly-ham-connected": (0, _weakly_ham_connected),
    "longest-cycle": (0, _longest_cycle),
    "nash-williams": (0, lambda d, a: _verdict(degree_conditions.check_nash_williams(d))),
    "ghouila-houri": (0, lambda d, a: _verdict(degree_conditions.check_ghouila_houri(d))),
    "woodall": (0, lambda d, a: _verdict(degree_conditions.check_woodall(d))),
    "overbeck-larisch": (0, lambda d, a: _verdict(degree_conditions.check_overbeck_larisch(d))),
    "meyniel": (0, lambda d, a: _verdict(degree_conditions.check_meyniel(d))),
    "condition-M": (1, lambda d, a: _verdict(degree_conditions.condition_M(d, a[0]))),
    "condition-N": (0, lambda d, a: _verdict(degree_conditions.condition_N(d))),
    "meyniel-set": (None, lambda d, a: _verdict(degree_conditions.is_meyniel_set(d, a))),
    "m-strong": (None, _m_strong),
    "cycle-through": (None, _cycle_through),
}


def parse_check(text: str) -> Tuple[str, List[int]]:
    """'ham-path 0 2', 'ham-path:0:2' and 'meyniel-set 0,1,2' are all accepted"""
    tokens = text.replace(":", " ").replace(",", " ").split()
    if not tokens:
        raise CheckSpecError("empty check")
    name, raw_args = tokens[0], tokens[1:]
    if name not in CHECKS:
        raise CheckSpecError(f"unknown check {name!r}; known: {sorted(CHECKS)}")
    try:
        args = [int(token) for token in raw_args]
    except ValueError:
        raise CheckSpecError(f"check {text!r} takes integer arguments") from None
    arity = CHECKS[name][0]
    if arity is None and not args:
        raise CheckSpecError(f"check {name!r} needs at least one vertex")
    if arity is not None and len(args) != arity:
        raise CheckSpecError(f"check {name!r} takes {arity} argument(s), got {len(args)}")
    return name, args


class DigraphCheckService:
    def run_check(self, digraph: Digraph, text: str) -> CheckOutcome:
        name, args = parse_check(text)
        holds, witness = CHECKS[name][1](digraph, args)
        logger.debug("check", name=name, args=args, holds=holds)
        label = " ".join([name, *map(str, args)])
        return CheckOutcome(name=label, holds=holds, witness=witness)

    def run_checks(self, digraph: Digraph, checks: Sequence[str]) -> List[CheckOutcome]:
        # parse everything first so a typo fails before any solver runs
        for text in checks:
            parse_check(text)
        return [self.run_check(digraph, text) for text in checks]
