class SpecError(ValueError):
    """A code, codec or parameter description violates its invariants."""


class DecodingError(Exception):
    pass


class InfeasibleRadius(DecodingError, ValueError):
    """No multiplicity up to the cap supports the requested radius."""

    def __init__(self, n: int, k: int, tau: int, max_tau: int | None, reason: str = ""):
        self.n, self.k, self.tau, self.max_tau = n, k, tau, max_tau
        bound = "none" if max_tau is None else str(max_tau)
        msg = f"radius tau={tau} is infeasible for n={n}, k={k}; largest feasible tau is {bound}"
        if reason:
            msg += f" ({reason})"
        super().__init__(msg)


class NotMdsEvidence(DecodingError):
    """Several codewords inside the unique-decoding ball: the code is not MDS."""

    def __init__(self, candidates):
        self.candidates = candidates
        super().__init__(
            f"{len(candidates)} codewords within the unique-decoding radius; "
            "the code cannot be MDS"
        )
