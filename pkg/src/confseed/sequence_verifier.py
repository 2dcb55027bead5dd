"""Named mutation sequences, staged application, and equivalence checks.

A sequence runs in stages; the vertices inside one stage must commute, which
is enforced by replaying every stage in reverse order and demanding the same
seed.  The checks compare the outcome against slot-permuted, flipped, or
Langlands-dual targets, always exactly.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import golden
from . import root_data as rd
from .seed_core import (
    Seed,
    langlands_dual,
    matches_under,
    mutate,
    permute_slots,
    quiver_isomorphic,
)
from .surface_glue import build_conf_m_seed, fan_triangulation, flip_diagonal


@dataclass(frozen=True)
class MutationSequence:
    name: str
    stages: tuple[tuple[str, ...], ...]
    note: str = ""

    def reversed(self) -> "MutationSequence":
        return MutationSequence(
            self.name + "_rev", tuple(reversed(self.stages)), self.note
        )

    def conjugated(self, mapping: dict, name: str = "") -> "MutationSequence":
        return MutationSequence(
            name or self.name + "_conj",
            tuple(tuple(mapping[v] for v in stage) for stage in self.stages),
            self.note,
        )


_S13 = (("x_a2",), ("x_a1", "x_b1"), ("x_a2",))
_S23 = (("x_b1",), ("x_b2", "x_a2"), ("x_b1",))


def builtin_sequences() -> dict[str, MutationSequence]:
    return {
        "g2_swap13": MutationSequence(
            "g2_swap13", _S13,
            "exchanges corners 1 and 3 of the two-parameter triangle seed",
        ),
        "g2_swap23": MutationSequence(
            "g2_swap23", _S23,
            "exchanges corners 2 and 3 of the two-parameter triangle seed",
        ),
        "g2_swap12": MutationSequence(
            "g2_swap12", _S13 + _S23 + _S13,
            "exchanges corners 1 and 2, composed from the other two swaps",
        ),
        "g2_flip": MutationSequence(
            "g2_flip",
            (
                ("x_0a",),
                ("x_-1a", "x_0b", "x_1a"),
                ("x_-2a", "x_-1b", "x_0a", "x_1b", "x_2a"),
                ("x_-2b", "x_-1a", "x_0b", "x_1a", "x_2b"),
                ("x_-1b", "x_0a", "x_1b"),
                ("x_0b",),
            ),
            "moves the four-point seed across the diagonal flip",
        ),
        "a2_flip": MutationSequence(
            "a2_flip",
            (("x_01", "x_02"), ("x_11", "x_-11")),
            "diagonal flip for the rank-two special linear group",
        ),
        "a3_flip": MutationSequence(
            "a3_flip",
            (
                ("x_01",), ("x_02",), ("x_03",), ("x_11",), ("x_12",),
                ("x_-11",), ("x_21",), ("x_-12",), ("x_02",), ("x_-21",),
            ),
            "diagonal flip for the rank-three special linear group",
        ),
    }


class StageOrderError(ValueError):
    pass


@dataclass
class ApplyResult:
    final: Seed
    stage_weights: tuple[dict, ...]


def apply_sequence(seed: Seed, seq: MutationSequence, *, check_stage_orders: bool = True) -> ApplyResult:
    """Run the stages; each stage is replayed backwards to confirm commuting."""
    cur = seed
    tables = []
    for s, stage in enumerate(seq.stages):
        if len(set(stage)) != len(stage):
            raise ValueError(f"stage {s + 1} of {seq.name} repeats a vertex")
        nxt = cur
        for v in stage:
            nxt = mutate(nxt, v)
        if check_stage_orders and len(stage) > 1:
            alt = cur
            for v in reversed(stage):
                alt = mutate(alt, v)
            if alt != nxt:
                raise StageOrderError(
                    f"stage {s + 1} of {seq.name} depends on its order"
                )
        cur = nxt
        if cur.weights is not None:
            tables.append({nm: cur.weight(nm) for nm in cur.names})
    return ApplyResult(cur, tuple(tables))


@dataclass
class CheckReport:
    name: str
    passed: bool
    lines: tuple[str, ...] = ()

    def __bool__(self):
        return self.passed


def _compare_stage_tables(result: ApplyResult, seq_name: str, start: dict) -> list[str]:
    problems = []
    if seq_name not in golden.STAGE_DELTAS:
        return problems
    want = golden.stage_tables(seq_name, start)
    if len(want) != len(result.stage_weights):
        return [f"{seq_name}: expected {len(want)} stages, ran {len(result.stage_weights)}"]
    for s, (got, exp) in enumerate(zip(result.stage_weights, want)):
        for nm, w in exp.items():
            if got[nm] != w:
                problems.append(
                    f"{seq_name} stage {s + 1}: {nm} reads {got[nm]}, table says {w}"
                )
    return problems


def verify_s3(
    seed: Seed,
    seq: MutationSequence,
    slot_perm: tuple[int, int, int],
    *,
    expect_reversed: bool,
) -> CheckReport:
    """Does the sequence land on the slot-permuted seed (up to arrow flip)?"""
    res = apply_sequence(seed, seq)
    start = {nm: seed.weight(nm) for nm in seed.names}
    problems = _compare_stage_tables(res, seq.name, start)
    target = permute_slots(seed, slot_perm)
    mapping = quiver_isomorphic(res.final, target, reverse_arrows=expect_reversed)
    if mapping is None:
        problems.append(f"{seq.name}: final seed does not match the permuted start")
        return CheckReport(f"s3:{seq.name}", False, tuple(problems))
    moved = {k: v for k, v in mapping.items() if k != v}
    note = f"{seq.name}: matched, relabeling {moved or 'identity'}"
    return CheckReport(f"s3:{seq.name}", not problems, tuple(problems) + (note,))


FLIP_CORNER_ORDERS = ((1, 2, 4), (3, 4, 2))


def flip_target(datum: rd.RootDatum) -> Seed:
    """The four-point seed rebuilt on the flipped triangulation."""
    tri = flip_diagonal(fan_triangulation(4), (1, 3))
    return build_conf_m_seed(datum, 4, tri, FLIP_CORNER_ORDERS)


def verify_flip(datum: rd.RootDatum, seed: Seed, seq: MutationSequence) -> CheckReport:
    res = apply_sequence(seed, seq)
    start = {nm: seed.weight(nm) for nm in seed.names}
    problems = _compare_stage_tables(res, seq.name, start)
    target = flip_target(datum)
    mapping = quiver_isomorphic(res.final, target)
    if mapping is None:
        problems.append(f"{seq.name}: final seed does not match the flipped build")
        return CheckReport(f"flip:{seq.name}", False, tuple(problems))
    note = f"{seq.name}: final seed matches the flipped build"
    return CheckReport(f"flip:{seq.name}", not problems, tuple(problems) + (note,))


def verify_langlands_pairing(
    seed: Seed,
    seq_a: MutationSequence,
    seq_b: MutationSequence,
    pairing: dict,
    *,
    weight_map=None,
    relabel: dict | None = None,
    slot_perm: tuple[int, ...] | None = None,
    stage_reversal: bool = False,
) -> CheckReport:
    """Check that seq_b is the Langlands shadow of seq_a on this seed.

    Three parts: (1) conjugating seq_a's stages by the vertex pairing --
    and reversing stage order when ``stage_reversal`` is set -- gives seq_b;
    (2) dualizing commutes with running either sequence; (3) when the
    seed is self-dual -- witnessed by ``relabel`` and ``slot_perm`` -- the two
    runs agree after relabeling and slot permutation.
    """
    lines = []
    ok = True

    conj = tuple(
        tuple(sorted(pairing[v] for v in stage)) for stage in seq_a.stages
    )
    if stage_reversal:
        conj = conj[::-1]
    want = tuple(tuple(sorted(stage)) for stage in seq_b.stages)
    if conj != want:
        ok = False
        lines.append("stage conjugation does not yield the paired sequence")
    else:
        lines.append("paired sequence is the conjugate of the first")

    dual = langlands_dual(seed, weight_map)
    for seq in (seq_a, seq_b):
        left = langlands_dual(apply_sequence(seed, seq).final, weight_map)
        right = apply_sequence(dual, seq).final
        if left != right:
            ok = False
            lines.append(f"dualizing does not commute with {seq.name}")
        else:
            lines.append(f"dualizing commutes with {seq.name}")

    if relabel is not None:
        if slot_perm is None:
            raise ValueError("relabel needs slot_perm")
        base = matches_under(
            langlands_dual(seed, weight_map),
            permute_slots(seed, slot_perm),
            relabel,
        )
        fin = matches_under(
            langlands_dual(apply_sequence(seed, seq_a).final, weight_map),
            permute_slots(apply_sequence(seed, seq_b).final, slot_perm),
            relabel,
        )
        if base and fin:
            lines.append("self-duality relabeling holds before and after")
        else:
            ok = False
            lines.append(f"self-duality relabeling fails (start {base}, end {fin})")
    return CheckReport(f"langlands:{seq_a.name}~{seq_b.name}", ok, tuple(lines))


def verify_dynkin_automorphism_d4(seed: Seed, sigma: dict) -> CheckReport:
    """Outer-node permutation acting on the completed triangle seed."""
    datum = rd.root_datum("d4")
    full = {**sigma, "b": "b"}
    from .seed_builder import vertex_node_occ

    mapping = {}
    for nm in seed.names:
        node, occ = vertex_node_occ(datum, nm)
        mapping[nm] = f"x_{full[node]}" if occ is None else f"x_{full[node]}{occ}"

    def wmap(w):
        out = [None] * datum.rank
        for node in datum.nodes:
            out[datum.index(full[node])] = w[datum.index(node)]
        return tuple(out)

    ok = matches_under(seed, seed, mapping, weight_map=wmap)
    return CheckReport(
        f"triality:{'-'.join(sorted(sigma))}",
        ok,
        (f"permutation {sigma} {'preserves' if ok else 'breaks'} the seed",),
    )
