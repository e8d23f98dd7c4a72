import os


class MtasepError(Exception):
    pass


class BudgetExceeded(MtasepError):
    """MLQ enumeration would visit more objects than the configured budget."""


class StateCapExceeded(MtasepError):
    """A chain's state space is larger than the configured cap."""


class SolverError(MtasepError):
    """The stationary system did not have a unique solution."""


DEFAULT_BUDGET = 10**8
DEFAULT_CAP = 5040


def default_budget() -> int:
    return int(os.environ.get("MTASEP_BUDGET", DEFAULT_BUDGET))
