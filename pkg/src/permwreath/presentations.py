"""Presentations of wreath products and the finite generation / presentation criteria.

Only relator *soundness* is checked here (each relator is the identity in a
concrete model), together with a generation check: the concrete generators
produce a group of the expected order. Completeness of a presentation would
need coset enumeration, which this package does not attempt.
"""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

from .actions import GroupAction
from .errors import MissingRepresentatives, NotFullyEnumerable, PreconditionNotFP
from .finite import FiniteGroup, closure
from .groups import Cyclic, GroupElement, Perm, ZInt, evaluate_word
from .thompson import X0, X1
from .words import Word, commutator, conjugate

# relator family tags
TAG_G = "G"
TAG_W = "W"
TAG_HW = "HW"
TAG_WGW = "WgW"      # [W_i, g W_i g^-1], g outside H_i
TAG_WGW_IJ = "WgWij"  # [W_i, g W_j g^-1], i != j


@dataclass
class GroupPresentation:
    generators: tuple[str, ...]
    relators: list[Word] = field(default_factory=list)
    tags: list[str] = field(default_factory=list)
    name: str = ""

    def __post_init__(self):
        self.generators = tuple(self.generators)
        self.relators = [r if isinstance(r, Word) else Word.parse(r) for r in self.relators]
        if not self.tags:
            self.tags = [""] * len(self.relators)
        if len(self.tags) != len(self.relators):
            raise ValueError("one tag per relator")
        known = set(self.generators)
        for r in self.relators:
            extra = r.symbols() - known
            if extra:
                raise ValueError(f"relator {r} uses unknown symbols {sorted(extra)}")

    def __len__(self):
        return len(self.relators)

    def families(self) -> dict[str, int]:
        return dict(Counter(self.tags))

    def pretty(self) -> str:
        rels = ", ".join(str(r) for r in self.relators)
        return f"< {', '.join(self.generators)} | {rels} >"

    def to_json(self) -> dict:
        doc = {"generators": list(self.generators), "relators": [r.to_json() for r in self.relators]}
        if any(self.tags):
            doc["tags"] = list(self.tags)
        return doc

    @classmethod
    def from_json(cls, doc: Mapping) -> "GroupPresentation":
        return cls(tuple(doc["generators"]), [Word.from_json(r) for r in doc["relators"]],
                   list(doc.get("tags", [])))

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    @classmethod
    def loads(cls, text: str) -> "GroupPresentation":
        return cls.from_json(json.loads(text))


def presentation(gens: str, *relators: str, name: str = "") -> GroupPresentation:
    """``presentation("a b", "a^2", "b^3", "(a b)^2")``-style shorthand (no parentheses: use repetition)."""
    return GroupPresentation(tuple(gens.split()), [Word.parse(r) for r in relators], [], name)


# concrete groups with matching presentations: (presentation, assignment)
def _perm(n, *cycles):
    return Perm.from_cycles(n, *cycles)


G_MODELS = {
    "Sym3": (presentation("a b", "a^2", "b^3", "a b a b", name="Sym3"),
             {"a": _perm(3, (0, 1)), "b": _perm(3, (0, 1, 2))}),
    "Sym4": (presentation("a b", "a^2", "b^4", "a b a b a b", name="Sym4"),
             {"a": _perm(4, (0, 1)), "b": _perm(4, (0, 1, 2, 3))}),
    "D4": (presentation("a b", "a^2", "b^4", "a b a b", name="D4"),
           {"a": Perm(tuple((-i) % 4 for i in range(4))), "b": _perm(4, (0, 1, 2, 3))}),
    "F": (GroupPresentation(("x0", "x1"), [
        commutator(Word.parse("x0 x1^-1"), Word.parse("x0^-1 x1 x0")),
        commutator(Word.parse("x0 x1^-1"), Word.parse("x0^-2 x1 x0^2"))], [], "F"),
        {"x0": X0, "x1": X1}),
    "Z": (GroupPresentation(("z",), [], [], "Z"), {"z": ZInt(1)}),
}

W_MODELS = {
    "C2": (presentation("t", "t^2", name="C2"), {"t": Cyclic(1, 2)}),
    "C3": (presentation("t", "t^3", name="C3"), {"t": Cyclic(1, 3)}),
    "Sym3": (presentation("u v", "u^2", "v^3", "u v u v", name="Sym3"),
             {"u": _perm(3, (0, 1)), "v": _perm(3, (0, 1, 2))}),
}


# ---------------------------------------------------------------------------
# criteria

@dataclass
class Verdict:
    status: str
    clause: str | None = None
    note: str | None = None

    def to_json(self) -> dict:
        return {"status": self.status, "clause": self.clause, "note": self.note}


@dataclass
class FpCriteriaInput:
    """Everything the criteria and the synthesis need.

    Flags are ``True``/``False``/``None`` (unknown). Flags left ``None`` are
    filled from the structural data when that data settles them: a given
    presentation makes its group finitely presented, given stabiliser lists
    are finitely generated, given representative lists are finite.
    ``orbit_count`` may be ``math.inf``.
    """

    g: GroupPresentation | None = None
    w: GroupPresentation | None = None
    stabilizers: list[list[Word]] | None = None
    representatives: dict | None = None  # (i, j) -> list[Word]
    orbit_count: int | float | None = None
    g_fg: Optional[bool] = None
    w_fg: Optional[bool] = None
    g_fp: Optional[bool] = None
    w_fp: Optional[bool] = None
    stabilizers_fg: Optional[bool] = None
    pair_orbits_finite: Optional[bool] = None
    simply_transitive: Optional[bool] = None
    x_finite: Optional[bool] = None
    w_trivial: bool = False
    # concrete models, when available
    action: GroupAction | None = None
    g_assignment: dict | None = None
    w_assignment: dict | None = None

    def __post_init__(self):
        if self.stabilizers is not None:
            if self.orbit_count is None:
                self.orbit_count = len(self.stabilizers)
            elif self.orbit_count != len(self.stabilizers):
                raise ValueError("orbit count differs from the number of stabiliser lists")
            if self.stabilizers_fg is None:
                self.stabilizers_fg = True
        if self.g is not None:
            self.g_fp = True if self.g_fp is None else self.g_fp
            self.g_fg = True if self.g_fg is None else self.g_fg
        if self.w is not None:
            self.w_fp = True if self.w_fp is None else self.w_fp
            self.w_fg = True if self.w_fg is None else self.w_fg
        if self.representatives is not None and self.pair_orbits_finite is None:
            self.pair_orbits_finite = True

    @property
    def orbits_finite(self) -> Optional[bool]:
        if self.orbit_count is None:
            return None
        return not math.isinf(self.orbit_count)


def check_fg_criteria(inp: FpCriteriaInput) -> Verdict:
    """Finitely generated iff G and W are and G has finitely many orbits on X."""
    clauses = [("G finitely generated", inp.g_fg), ("W finitely generated", inp.w_fg),
               ("finitely many orbits on X", inp.orbits_finite)]
    if inp.w_trivial:
        clauses = clauses[:1]
    for name, flag in clauses:
        if flag is False:
            return Verdict("NotFG", name)
    for name, flag in clauses:
        if flag is None:
            return Verdict("Unknown", name)
    return Verdict("FG")


def check_fp_criteria(inp: FpCriteriaInput) -> Verdict:
    """For W != 1: finitely presented iff (i) G, W finitely presented, (ii) finitely
    generated stabilisers, (iii) finitely many orbits on X^2."""
    if inp.w_trivial:
        g = inp.g_fp
        return Verdict({True: "FP", False: "NotFP", None: "Unknown"}[g], "G finitely presented",
                       "W trivial: the product is G")
    iii = inp.pair_orbits_finite
    note = None
    if inp.orbits_finite is False:
        iii = False
    if iii is None and inp.simply_transitive and inp.x_finite is False:
        iii = False
    if iii is False and inp.simply_transitive:
        note = "simply transitive action: finitely many orbits on X^2 would force X finite"
    i = None
    if inp.g_fp is False or inp.w_fp is False:
        i = False
    elif inp.g_fp and inp.w_fp:
        i = True
    clauses = [("(i) G and W finitely presented", i), ("(ii) stabilisers finitely generated", inp.stabilizers_fg),
               ("(iii) finitely many orbits on X^2", iii)]
    for name, flag in clauses:
        if flag is False:
            return Verdict("NotFP", name, note if name.startswith("(iii)") else None)
    for name, flag in clauses:
        if flag is None:
            return Verdict("Unknown", name)
    return Verdict("FP")


# ---------------------------------------------------------------------------
# synthesis

def _w_symbol(sym: str, i: int, k: int) -> str:
    return sym if k == 1 else f"{sym}_{i + 1}"


def _copy_relator(r: Word, i: int, k: int) -> Word:
    return Word(tuple((_w_symbol(s, i, k), e) for s, e in r.letters))


def synthesize_wreath_presentation(inp: FpCriteriaInput) -> GroupPresentation:
    """Finite presentation of W wr_X G from presentations of G and W, stabiliser
    generators H_i and double-coset representatives R_ij (words in G).

    Families: relators of G; relators of each copy W_i; [h, w] for h in H_i and
    w in gens(W_i); [w, g w' g^-1] for g in R_ij, w in gens(W_i), w' in gens(W_j).
    For i = j the representative of the trivial double coset is skipped
    (any representative that reduces to the empty word).
    """
    verdict = check_fp_criteria(inp)
    if verdict.status != "FP":
        raise PreconditionNotFP(f"criteria verdict {verdict.status} at {verdict.clause}")
    if inp.g is None or inp.w is None or inp.stabilizers is None:
        raise MissingRepresentatives("need presentations of G and W and stabiliser generators")
    k = len(inp.stabilizers)
    reps = inp.representatives or {}
    missing = [(i, j) for i in range(k) for j in range(k) if (i, j) not in reps]
    if missing:
        raise MissingRepresentatives(f"no representatives for orbit pairs {missing}")
    gens = list(inp.g.generators)
    w_gens = [[_w_symbol(s, i, k) for s in inp.w.generators] for i in range(k)]
    for ws in w_gens:
        gens.extend(ws)
    relators: list[Word] = []
    tags: list[str] = []

    def add(r: Word, tag: str):
        if len(r) and r not in relators:
            relators.append(r)
            tags.append(tag)

    for r in inp.g.relators:
        add(r, TAG_G)
    for i in range(k):
        for r in inp.w.relators:
            add(_copy_relator(r, i, k), TAG_W)
    for i in range(k):
        for h in inp.stabilizers[i]:
            for t in w_gens[i]:
                add(commutator(h, Word.gen(t)), TAG_HW)
    for i in range(k):
        for j in range(k):
            for g in reps[(i, j)]:
                if i == j and len(g) == 0:
                    continue
                for t in w_gens[i]:
                    for u in w_gens[j]:
                        add(commutator(Word.gen(t), conjugate(g, Word.gen(u))),
                            TAG_WGW if i == j else TAG_WGW_IJ)
    return GroupPresentation(tuple(gens), relators, tags, f"{inp.w.name} wr {inp.g.name}")


def _g_ball(inp: FpCriteriaInput, n: int) -> list[tuple[Word, GroupElement]]:
    """Shortest words for the elements of the radius-n ball of G (deterministic order)."""
    assign = inp.g_assignment
    letters = []
    for s in inp.g.generators:
        letters.append((s, 1))
        if assign[s].inverse() != assign[s]:
            letters.append((s, -1))
    ident = next(iter(assign.values())).identity()
    seen = {ident: Word()}
    order = [ident]
    frontier = [ident]
    for _ in range(n):
        nxt = []
        for x in frontier:
            for s, e in letters:
                g = assign[s] if e > 0 else assign[s].inverse()
                y = x * g
                if y not in seen:
                    seen[y] = Word(seen[x].letters + ((s, e),))
                    order.append(y)
                    nxt.append(y)
        frontier = nxt
    return [(seen[g], g) for g in order]


def truncated_pres1(inp: FpCriteriaInput, n: int) -> GroupPresentation:
    """The transitive presentation <G, W | [H, W], [W, g W g^-1] for g in G - H>
    with g restricted to the radius-n ball of G; relators of G and W are included
    and tagged separately."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if inp.action is None or inp.g_assignment is None or inp.g is None or inp.w is None:
        raise MissingRepresentatives("truncated_pres1 needs the concrete action and presentations")
    x0 = inp.action.base_point
    gens = list(inp.g.generators) + list(inp.w.generators)
    relators, tags = [], []
    for r in inp.g.relators:
        relators.append(r); tags.append(TAG_G)
    for r in inp.w.relators:
        relators.append(r); tags.append(TAG_W)
    for h in (inp.stabilizers or [[]])[0]:
        for t in inp.w.generators:
            relators.append(commutator(h, Word.gen(t))); tags.append(TAG_HW)
    for word, g in _g_ball(inp, n):
        if inp.action.act(g, x0) == x0:
            continue
        for t in inp.w.generators:
            for u in inp.w.generators:
                relators.append(commutator(Word.gen(t), conjugate(word, Word.gen(u))))
                tags.append(TAG_WGW)
    return GroupPresentation(tuple(gens), relators, tags, f"pres1 radius {n}")


# ---------------------------------------------------------------------------
# building inputs from finite actions

def _reduce_generators(G: FiniteGroup, elems: Iterable[GroupElement]) -> list[GroupElement]:
    """Greedy: keep an element only if it enlarges the span (order of trial is deterministic)."""
    out: list = []
    span = frozenset([G.identity])
    for g in sorted(set(elems), key=lambda x: (len(G.word_of(x)), G.index[x])):
        if g not in span:
            out.append(g)
            span = G.subgroup(out)
    return out


def schreier_generators(G: FiniteGroup, action: GroupAction, x) -> list[GroupElement]:
    """Schreier generators u_{s.y}^-1 s u_y of the stabiliser of x, reduced to a small generating list."""
    gens = list(G.generators.values())
    transversal = {x: G.identity}
    queue = [x]
    for y in queue:
        for s in gens:
            z = action.act(s, y)
            if z not in transversal:
                transversal[z] = s * transversal[y]
                queue.append(z)
    sch = []
    for y, u in transversal.items():
        for s in gens:
            h = transversal[action.act(s, y)].inverse() * s * u
            if h != G.identity:
                sch.append(h)
    return _reduce_generators(G, sch)


def finite_fp_input(g_name, w_name, action: GroupAction,
                    base_points: Sequence | None = None) -> FpCriteriaInput:
    """Criteria input for a finite action whose generators match ``G_MODELS[g_name]``.

    Either name may instead be a ``(presentation, assignment)`` pair, e.g. to
    present Sym3 by permutations of a larger set.
    """
    gp, g_assign = G_MODELS[g_name] if isinstance(g_name, str) else g_name
    wp, w_assign = W_MODELS[w_name] if isinstance(w_name, str) else w_name
    G = action.group
    if G is None:
        raise NotFullyEnumerable("finite_fp_input needs a finite group")
    if set(G.generators) != set(gp.generators) or any(G.generators[s] != g_assign[s] for s in gp.generators):
        raise ValueError("action generators must match the chosen presentation of G")
    base = tuple(action.base_points if base_points is None else base_points)
    stabs = [frozenset(g for g in G.elements if action.act(g, x) == x) for x in base]
    stab_words = [[G.word_of(h) for h in schreier_generators(G, action, x)] for x in base]
    reps = {}
    for i, Hi in enumerate(stabs):
        for j, Hj in enumerate(stabs):
            cosets = G.double_cosets(Hi, Hj)
            reps[(i, j)] = [G.word_of(min(c, key=G.index.__getitem__)) for c in cosets]
    act = GroupAction(action.name, action.generators, action.domain, base, action.act_fn,
                      action.group, action.identity, dict(action.meta))
    return FpCriteriaInput(g=gp, w=wp, stabilizers=stab_words, representatives=reps,
                           x_finite=True, action=act, g_assignment=dict(g_assign),
                           w_assignment=dict(w_assign))


# ---------------------------------------------------------------------------
# concrete verification

def wreath_assignment(inp: FpCriteriaInput):
    """Concrete images of the synthesized generators in W wr_X G, plus the product object."""
    from .wreath import WreathProduct, delta

    act = inp.action
    k = len(act.base_points)
    W = WreathProduct(act, inp.w_assignment, radius=0)
    assign = {}
    for s, g in inp.g_assignment.items():
        assign[s] = W.bind(W.element((), g))
    for i, x in enumerate(act.base_points):
        for s, w in inp.w_assignment.items():
            assign[_w_symbol(s, i, k)] = W.bind(delta(x, w, act.identity))
    return assign, W


@dataclass
class RelatorReport:
    results: list[dict]

    @property
    def ok(self) -> bool:
        return all(r["ok"] for r in self.results)

    @property
    def failures(self) -> list[dict]:
        return [r for r in self.results if not r["ok"]]

    def to_json(self) -> dict:
        return {"relators": len(self.results), "failed": len(self.failures), "ok": self.ok,
                "failures": [{"relator": r["relator"], "tag": r["tag"], "value": r["value"]}
                             for r in self.failures]}


def verify_relators(p: GroupPresentation, assignment: Mapping[str, GroupElement]) -> RelatorReport:
    """Evaluate each relator; a non-identity value is reported as the witness."""
    out = []
    for r, tag in zip(p.relators, p.tags):
        v = evaluate_word(r, assignment)
        ok = v.is_identity()
        out.append({"relator": str(r), "tag": tag, "ok": ok, "value": None if ok else str(v)})
    return RelatorReport(out)


def generated_order(assignment: Mapping[str, GroupElement], limit: int = 200_000) -> int:
    elems = list(assignment.values())
    return len(closure(elems, elems[0].identity(), limit))


def expected_wreath_order(w_order: int, x_size: int, g_order: int) -> int:
    return w_order ** x_size * g_order
