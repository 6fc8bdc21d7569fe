"""Stabilizer-group simulation of graph states and Pauli measurements.

A graph state on n qubits is the joint +1 eigenstate of the n correlation
operators K_a = X_a * prod_{b ~ a} Z_b, one per vertex. The simulator keeps
n generators of the stabilizer group as X/Z bitmasks with signs, so single
Pauli measurements cost polynomial work regardless of n.

Sign bookkeeping uses an internal phase exponent t modulo 4: a generator
with bitmasks (x, z) and phase t denotes i^t X^x Z^z, where X^x is the
tensor product of X on the set bits of x. Hermitian Pauli operators are
exactly those with t == popcount(x & z) (mod 2), i.e. one factor of i per
Y; the public sign is then +1 or -1.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from ._kernels import gf2_rank_rows
from .errors import SizeLimitError
from .graphs import Graph

__all__ = [
    "PauliOperator",
    "StabilizerTableau",
    "paulis_commute",
    "multiply_paulis",
    "graph_state_tableau",
    "expectation_pauli",
    "measure_pauli",
    "simulate_pattern",
]

_BASES = ("X", "Y", "Z")


def _phase_t(x_bits: int, z_bits: int, sign: int) -> int:
    # internal exponent of i for sign * (i^|Y|) X^x Z^z written as i^t X^x Z^z
    t = (x_bits & z_bits).bit_count() % 4
    if sign == -1:
        t = (t + 2) % 4
    return t


@dataclass(frozen=True)
class PauliOperator:
    """A signed n-qubit Pauli operator: sign times a tensor of I/X/Y/Z.

    Qubit a carries X when bit a of x_bits is set, Z when bit a of z_bits
    is set, Y when both are set, identity otherwise.
    """

    n: int
    x_bits: int
    z_bits: int
    sign: int = 1

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("qubit count must be nonnegative")
        full = (1 << self.n) - 1
        if not 0 <= self.x_bits <= full or not 0 <= self.z_bits <= full:
            raise ValueError("bitmask out of range for the qubit count")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    @classmethod
    def identity(cls, n: int) -> "PauliOperator":
        return cls(n, 0, 0, 1)

    @classmethod
    def single(cls, n: int, qubit: int, basis: str) -> "PauliOperator":
        """X, Y or Z acting on one qubit of an n-qubit register."""
        if not 0 <= qubit < n:
            raise ValueError(f"qubit {qubit} out of range for n={n}")
        if basis not in _BASES:
            raise ValueError(f"basis must be one of X, Y, Z, got {basis!r}")
        bit = 1 << qubit
        x = bit if basis in ("X", "Y") else 0
        z = bit if basis in ("Z", "Y") else 0
        return cls(n, x, z, 1)

    @property
    def is_identity(self) -> bool:
        return self.x_bits == 0 and self.z_bits == 0 and self.sign == 1

    @property
    def weight(self) -> int:
        return (self.x_bits | self.z_bits).bit_count()

    def basis_at(self, qubit: int) -> str:
        x = (self.x_bits >> qubit) & 1
        z = (self.z_bits >> qubit) & 1
        return ("I", "X", "Z", "Y")[x + 2 * z]

    def label(self) -> str:
        """Readable form like '-XIZ' with qubit 0 leftmost."""
        letters = "".join(self.basis_at(q) for q in range(self.n))
        return ("+" if self.sign == 1 else "-") + letters

    def __mul__(self, other: "PauliOperator") -> "PauliOperator":
        return multiply_paulis(self, other)


def paulis_commute(p: PauliOperator, q: PauliOperator) -> bool:
    """Two Paulis commute iff their symplectic product is even."""
    if p.n != q.n:
        raise ValueError("operators act on different register sizes")
    parity = ((p.x_bits & q.z_bits).bit_count() + (p.z_bits & q.x_bits).bit_count()) % 2
    return parity == 0


def multiply_paulis(p: PauliOperator, q: PauliOperator) -> PauliOperator:
    """Product p*q; defined only when the factors commute, because the
    product of anticommuting Hermitian Paulis carries a factor of i."""
    if p.n != q.n:
        raise ValueError("operators act on different register sizes")
    t = (
        _phase_t(p.x_bits, p.z_bits, p.sign)
        + _phase_t(q.x_bits, q.z_bits, q.sign)
        + 2 * (p.z_bits & q.x_bits).bit_count()
    ) % 4
    x = p.x_bits ^ q.x_bits
    z = p.z_bits ^ q.z_bits
    rel = (t - (x & z).bit_count()) % 4
    if rel == 0:
        return PauliOperator(p.n, x, z, 1)
    if rel == 2:
        return PauliOperator(p.n, x, z, -1)
    raise ValueError("product of anticommuting Paulis is not a signed Pauli")


class StabilizerTableau:
    """n independent, pairwise commuting stabilizer generators of an
    n-qubit state, stored as parallel bitmask lists with mod-4 phases."""

    def __init__(self, generators: list[PauliOperator], validate: bool = True):
        n = generators[0].n if generators else 0
        self.n = n
        self.xs = [g.x_bits for g in generators]
        self.zs = [g.z_bits for g in generators]
        self.ts = [_phase_t(g.x_bits, g.z_bits, g.sign) for g in generators]
        if validate:
            if len(generators) != n:
                raise ValueError(
                    f"need exactly n={n} generators, got {len(generators)}"
                )
            if any(g.n != n for g in generators):
                raise ValueError("generators act on different register sizes")
            self.check_invariants()

    def copy(self) -> "StabilizerTableau":
        dup = StabilizerTableau.__new__(StabilizerTableau)
        dup.n = self.n
        dup.xs = list(self.xs)
        dup.zs = list(self.zs)
        dup.ts = list(self.ts)
        return dup

    def _sign_of(self, k: int) -> int:
        rel = (self.ts[k] - (self.xs[k] & self.zs[k]).bit_count()) % 4
        if rel == 0:
            return 1
        if rel == 2:
            return -1
        raise ValueError(f"generator {k} is not Hermitian")

    def generators(self) -> list[PauliOperator]:
        return [
            PauliOperator(self.n, self.xs[k], self.zs[k], self._sign_of(k))
            for k in range(self.n)
        ]

    def check_invariants(self) -> None:
        """Raise ValueError unless the generators are Hermitian, pairwise
        commuting, and independent over GF(2)."""
        n = self.n
        for k in range(n):
            self._sign_of(k)
        for i in range(n):
            for j in range(i + 1, n):
                parity = (
                    (self.xs[i] & self.zs[j]).bit_count()
                    + (self.zs[i] & self.xs[j]).bit_count()
                ) % 2
                if parity:
                    raise ValueError(f"generators {i} and {j} anticommute")
        rows = [self.xs[k] | (self.zs[k] << n) for k in range(n)]
        if gf2_rank_rows(rows, 2 * n) != n:
            raise ValueError("generators are linearly dependent")

    # -------------------------------------------------- expectation values

    def _anticommuting(self, p: PauliOperator) -> list[int]:
        out = []
        for k in range(self.n):
            parity = (
                (self.xs[k] & p.z_bits).bit_count()
                + (self.zs[k] & p.x_bits).bit_count()
            ) % 2
            if parity:
                out.append(k)
        return out

    def _combo_for(self, p: PauliOperator) -> int:
        """Bitmask over generators whose product has the bitmasks of p.
        Raises ValueError when p is outside the span."""
        n = self.n
        pivots: dict[int, tuple[int, int]] = {}
        for k in range(n):
            vec = self.xs[k] | (self.zs[k] << n)
            combo = 1 << k
            while vec:
                low = vec & -vec
                if low in pivots:
                    pv, pc = pivots[low]
                    vec ^= pv
                    combo ^= pc
                else:
                    pivots[low] = (vec, combo)
                    break
        vec = p.x_bits | (p.z_bits << n)
        combo = 0
        while vec:
            low = vec & -vec
            if low not in pivots:
                raise ValueError("operator is outside the stabilizer span")
            pv, pc = pivots[low]
            vec ^= pv
            combo ^= pc
        return combo

    def _product_phase(self, combo: int) -> tuple[int, int, int]:
        """Accumulated (x, z, t) of the ordered product of the generators
        selected by combo, lowest index first."""
        x = z = t = 0
        rest = combo
        while rest:
            k = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            t = (t + self.ts[k] + 2 * (z & self.xs[k]).bit_count()) % 4
            x ^= self.xs[k]
            z ^= self.zs[k]
        return x, z, t

    def expectation(self, p: PauliOperator) -> int:
        """<psi| p |psi> for the stabilized state: always -1, 0, or +1."""
        if p.n != self.n:
            raise ValueError("operator size does not match the register")
        if self._anticommuting(p):
            return 0
        combo = self._combo_for(p)
        x, z, t = self._product_phase(combo)
        if x != p.x_bits or z != p.z_bits:
            raise ValueError("operator is outside the stabilizer span")
        diff = (t - _phase_t(p.x_bits, p.z_bits, p.sign)) % 4
        if diff == 0:
            return 1
        if diff == 2:
            return -1
        raise ValueError("inconsistent phase; tableau is corrupt")

    # -------------------------------------------------------- measurement

    def measure(
        self,
        p: PauliOperator,
        forced_outcome: int | None = None,
        rng: random.Random | None = None,
    ) -> tuple[int, float]:
        """Measure the observable p, updating the tableau in place.

        Returns (outcome, probability) with outcome in {+1, -1}. When the
        observable commutes with every generator the outcome is determined
        and has probability 1.0; forcing the other value raises ValueError.
        Otherwise both outcomes have probability 0.5 and one is drawn from
        rng (or the module RNG) unless forced_outcome picks it.
        """
        if p.n != self.n:
            raise ValueError("operator size does not match the register")
        if forced_outcome is not None and forced_outcome not in (1, -1):
            raise ValueError("forced outcome must be +1 or -1")
        anti = self._anticommuting(p)
        if not anti:
            outcome = self.expectation(p)
            if forced_outcome is not None and forced_outcome != outcome:
                raise ValueError(
                    f"outcome {forced_outcome:+d} has probability 0 "
                    f"(the observable is determined to be {outcome:+d})"
                )
            return outcome, 1.0
        if forced_outcome is not None:
            outcome = forced_outcome
        else:
            if rng is None:
                rng = random
            outcome = 1 if rng.random() < 0.5 else -1
        # wipe the anticommuting generators except the first by multiplying
        # it in, then replace the first with (outcome * p)
        k0 = anti[0]
        for k in anti[1:]:
            t = (
                self.ts[k0]
                + self.ts[k]
                + 2 * (self.zs[k0] & self.xs[k]).bit_count()
            ) % 4
            self.xs[k] = self.xs[k0] ^ self.xs[k]
            self.zs[k] = self.zs[k0] ^ self.zs[k]
            self.ts[k] = t
        self.xs[k0] = p.x_bits
        self.zs[k0] = p.z_bits
        t_new = _phase_t(p.x_bits, p.z_bits, p.sign)
        if outcome == -1:
            t_new = (t_new + 2) % 4
        self.ts[k0] = t_new
        return outcome, 0.5


def graph_state_tableau(g: Graph) -> StabilizerTableau:
    """Tableau of the graph state: generator a is X on a and Z on each
    neighbor of a, all with sign +1."""
    if g.n > 4096:
        raise SizeLimitError("refusing a tableau with more than 4096 qubits")
    gens = [PauliOperator(g.n, 1 << a, g.adj[a], 1) for a in range(g.n)]
    return StabilizerTableau(gens, validate=False)


def expectation_pauli(tableau: StabilizerTableau, p: PauliOperator) -> int:
    return tableau.expectation(p)


def measure_pauli(
    tableau: StabilizerTableau,
    p: PauliOperator,
    forced_outcome: int | None = None,
    rng_seed: int | None = None,
) -> tuple[int, float, StabilizerTableau]:
    """Non-mutating measurement: returns (outcome, probability, new tableau)."""
    out = tableau.copy()
    rng = random.Random(rng_seed) if rng_seed is not None else None
    outcome, prob = out.measure(p, forced_outcome=forced_outcome, rng=rng)
    return outcome, prob, out


def simulate_pattern(
    g: Graph,
    pattern: list[tuple[int, str]],
    rng_seed: int | None = None,
) -> list[dict]:
    """Sequentially measure single-qubit Paulis on a fresh graph state.

    pattern is a list of (qubit, basis) pairs with distinct qubits and
    basis in {X, Y, Z}. Returns one record per measurement:
    {"qubit", "basis", "outcome", "probability"}.
    """
    tableau = graph_state_tableau(g)
    rng = random.Random(rng_seed)
    seen: set[int] = set()
    transcript = []
    for qubit, basis in pattern:
        if qubit in seen:
            raise ValueError(f"qubit {qubit} measured twice")
        seen.add(qubit)
        p = PauliOperator.single(g.n, qubit, basis)
        outcome, prob = tableau.measure(p, rng=rng)
        transcript.append(
            {"qubit": qubit, "basis": basis, "outcome": outcome, "probability": prob}
        )
    return transcript
