import pytest

from app.application.services.check_service import CHECKS, DigraphCheckService, parse_check
from app.domain.exceptions import CheckSpecError
from app.domain.services.constructions import darbinyan_counterexample
from app.domain.services.digraph_ops import complete_digraph, directed_cycle, directed_path


@pytest.fixture
def service():
    return DigraphCheckService()


@pytest.mark.parametrize(
    "text, expected",
    [
        ("hamiltonian", ("hamiltonian", [])),
        ("ham-path 0 2", ("ham-path", [0, 2])),
        ("ham-path:0:2", ("ham-path", [0, 2])),
        ("meyniel-set 0,1,2", ("meyniel-set", [0, 1, 2])),
        ("k-strong:2", ("k-strong", [2])),
    ],
)
def test_parse_check(text, expected):
    assert parse_check(text) == expected


@pytest.mark.parametrize("text", ["", "bogus", "k-strong", "ham-path 0", "ham-path 0 x", "cycle-through"])
def test_parse_check_rejects(text):
    with pytest.raises(CheckSpecError):
        parse_check(text)


def test_hamiltonian_witness(service, triangle):
    outcome = service.run_check(triangle, "hamiltonian")
    assert outcome.render() == "hamiltonian: yes cycle 0 1 2"


def test_counterexample_report(service):
    d = darbinyan_counterexample(8)
    outcomes = service.run_checks(d, ["strong", "k-strong 2", "k-strong 3", "hamiltonian", "meyniel"])
    assert [o.holds for o in outcomes] == [True, True, False, False, False]
    assert outcomes[2].witness.startswith("separator ")
    assert outcomes[4].witness.startswith("meyniel: fails at (0,")


def test_k_strong_witnesses(service):
    assert service.run_check(directed_path(3), "k-strong 1").witness == "not strong"
    assert service.run_check(complete_digraph(3), "k-strong 3").witness == "order 3 < 4"


def test_connectivity_and_components(service):
    assert service.run_check(directed_cycle(4), "connectivity").render() == "connectivity: yes kappa 1"
    assert service.run_check(directed_path(3), "strong").witness == "components 0 | 1 | 2"
    assert service.run_check(directed_path(3), "unilateral").holds


def test_path_and_pair_checks(service):
    assert service.run_check(directed_path(3), "ham-path 0 2").render() == "ham-path 0 2: yes path 0 1 2"
    assert service.run_check(directed_cycle(3), "ham-connected").render() == "ham-connected: no pair 0 1"
    assert service.run_check(directed_cycle(3), "weakly-ham-connected").holds


def test_set_checks(service):
    d = complete_digraph(4)
    assert service.run_check(d, "meyniel-set 0,1").holds
    assert service.run_check(d, "cycle-through 1 3").holds
    assert not service.run_check(directed_path(3), "m-strong 0 2").holds
    assert service.run_check(directed_path(3), "longest-cycle").witness == "acyclic"


def test_typo_fails_before_solving(service, triangle):
    with pytest.raises(CheckSpecError):
        service.run_checks(triangle, ["hamiltonian", "hamiltonain"])


def test_every_check_has_a_handler():
    assert all(callable(handler) for _, handler in CHECKS.values())
