"""Depth-first search for high-utility interval rules.

Rules grow from 1x1 seeds.  A left extension appends an interval to the
antecedent (after its current last interval, before the consequent starts);
a right extension appends an interval after the last rule interval.  Right
extensions never go back to the left, so each rule has exactly one
construction path.

Every node keeps, per sequence, all of its occurrences as position tuples
together with their utility.  Left-extensible nodes also keep all
antecedent occurrences so the antecedent support of their children can be
counted.

Pruning:

* labels whose SEU is below ``minutil`` are removed up front, repeatedly;
* the utility-list bound of a node (occurrence utility plus everything
  still insertable on the left and appendable on the right) gates its left
  subtree; the right-only bound gates its right subtree;
* for each extension label the bound is split by the relation digit the
  new interval forms with the last antecedent (left) or last rule (right)
  interval.  Digits whose share is below ``minutil`` are skipped, and once
  the share still attributable to the untried digits drops below
  ``minutil`` the label is abandoned;
* right extensions only shrink confidence, so a node below ``minconf``
  stops extending right.
"""

from __future__ import annotations

import math
import multiprocessing
import time
from bisect import bisect_left, bisect_right
from collections import defaultdict
from dataclasses import asdict, dataclass
from fractions import Fraction
from functools import lru_cache

from .model import (
    ESequence,
    IntervalDatabase,
    IntervalRule,
    MinedRule,
    antecedent_occurs,
    as_fraction,
    find_occurrences,
    sort_rules,
)
from .preprocess import ESequenceArray, _prune_rounds, build_array
from .relations import encode_digits

# occurrence: (positions, utility)
Occ = tuple[tuple[int, ...], int]

_code = lru_cache(maxsize=1 << 16)(encode_digits)


@dataclass
class MiningConfig:
    """Thresholds and strategy switches.

    ``minutil_pct`` (percent of the database's total utility) is used when
    ``minutil`` is None; the absolute threshold is its ceiling.
    """

    minutil: int | None = None
    minconf: Fraction | float | str = Fraction(0)
    minutil_pct: Fraction | float | str | None = None
    enable_complement_pruning: bool = True
    enable_encoded_relations: bool = True
    max_rule_size: int | None = None
    threads: int = 1
    check_invariants: bool = False

    def __post_init__(self):
        self.minconf = as_fraction(self.minconf)
        if not 0 <= self.minconf <= 1:
            raise ValueError(f"minconf must lie in [0, 1], got {self.minconf}")
        if self.minutil is None and self.minutil_pct is None:
            raise ValueError("either minutil or minutil_pct is required")
        if self.minutil is not None and self.minutil < 0:
            raise ValueError("minutil must be non-negative")
        if self.minutil_pct is not None:
            self.minutil_pct = as_fraction(self.minutil_pct)
            if not 0 <= self.minutil_pct <= 100:
                raise ValueError(f"minutil percentage out of range: {self.minutil_pct}")
        if self.max_rule_size is not None and self.max_rule_size < 2:
            raise ValueError("max_rule_size must be at least 2")
        if self.threads < 1:
            raise ValueError("threads must be >= 1")

    def resolve_minutil(self, total_utility: int) -> int:
        if self.minutil is not None:
            return self.minutil
        return math.ceil(self.minutil_pct * total_utility / 100)


@dataclass
class MiningStats:
    candidates_generated: int = 0
    rules_output: int = 0
    pruned_by_seu: int = 0
    pruned_by_lerspeu: int = 0
    pruned_by_rerspeu: int = 0
    pruned_by_complement: int = 0
    pruned_by_confidence: int = 0
    wall_time: float = 0.0

    def merge(self, other: "MiningStats") -> None:
        for k, v in asdict(other).items():
            if k != "wall_time":
                setattr(self, k, getattr(self, k) + v)

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class AULEntry:
    esid: int
    iro: bool
    ub: int


@dataclass(frozen=True)
class CULEntry:
    esid: int
    ub: int


class InvariantError(AssertionError):
    pass


# ---------------------------------------------------------------------------
# per-sequence helpers on explicit occurrences


def extendable_intervals(
    arr: ESequenceArray, positions: tuple[int, ...], split: int, is_left: bool
) -> range:
    """Positions that may join the occurrence ``positions`` of a rule with ``split`` antecedent intervals.

    Left: after the last antecedent interval and strictly earlier in start
    time than the first consequent interval (``sstp`` excludes intervals
    sharing its start).  Right: after the last rule interval; those start
    no earlier than the consequent, hence strictly after every antecedent.
    """
    if is_left:
        return range(positions[split - 1] + 1, arr.sstp[positions[split]])
    return range(positions[-1] + 1, len(arr))


def _occurrence_bound(arr: ESequenceArray, pos: tuple[int, ...], util: int, split: int) -> int:
    left = extendable_intervals(arr, pos, split, True)
    return util + arr.window_sum(left.start, left.stop) + arr.ru[pos[-1]]


def _label_bound(arr, pos, util, split, label, is_left, with_right) -> int | None:
    window = extendable_intervals(arr, pos, split, is_left)
    for p in window:
        if arr.labels[p] == label:
            bound = util + arr.window_sum(p, window.stop)
            if is_left and with_right:
                bound += arr.ru[pos[-1]]
            return bound
    return None


def compute_lerspeu(rule: IntervalRule, seq: ESequence, label: str, with_right: bool = False) -> int:
    """Bound on u(r', S) for r' = ``rule`` left-extended with ``label``.

    Occurrence utility plus the utility of the left-extendable intervals from
    the first ``label`` onward; maximised over occurrences, 0 if none
    qualifies.  ``with_right`` adds the right window, which makes the value
    bound whole left subtrees including their later right extensions.
    """
    arr = build_array(seq)
    k = len(rule.antecedent)
    best = 0
    for occ in find_occurrences(rule, seq):
        b = _label_bound(arr, occ.positions, occ.utility, k, label, True, with_right)
        if b is not None:
            best = max(best, b)
    return best


def compute_rerspeu(rule: IntervalRule, seq: ESequence, label: str) -> int:
    """Right-extension counterpart of :func:`compute_lerspeu`."""
    arr = build_array(seq)
    k = len(rule.antecedent)
    best = 0
    for occ in find_occurrences(rule, seq):
        b = _label_bound(arr, occ.positions, occ.utility, k, label, False, False)
        if b is not None:
            best = max(best, b)
    return best


def build_aul(rule: IntervalRule, db: IntervalDatabase) -> list[AULEntry]:
    """One entry per sequence containing the antecedent."""
    k = len(rule.antecedent)
    out = []
    for seq in db.sequences:
        if not antecedent_occurs(rule, seq):
            continue
        occs = find_occurrences(rule, seq)
        if not occs:
            out.append(AULEntry(seq.sid, False, 0))
            continue
        arr = build_array(seq)
        ub = max(_occurrence_bound(arr, o.positions, o.utility, k) for o in occs)
        out.append(AULEntry(seq.sid, True, ub))
    return out


def build_cul(rule: IntervalRule, db: IntervalDatabase) -> list[CULEntry]:
    """One entry per sequence containing the rule; ub = occurrence utility plus right window."""
    out = []
    for seq in db.sequences:
        occs = find_occurrences(rule, seq)
        if occs:
            arr = build_array(seq)
            out.append(CULEntry(seq.sid, max(o.utility + arr.ru[o.positions[-1]] for o in occs)))
    return out


def rule_utility(rule: IntervalRule, db: IntervalDatabase) -> int:
    total = 0
    for seq in db.sequences:
        occs = find_occurrences(rule, seq)
        if occs:
            total += max(o.utility for o in occs)
    return total


def rule_confidence(rule: IntervalRule, db: IntervalDatabase) -> Fraction | None:
    """|seq(r)| / |ant(r)|, or None when the antecedent never occurs."""
    ant = sum(1 for s in db.sequences if antecedent_occurs(rule, s))
    if not ant:
        return None
    hits = sum(1 for s in db.sequences if find_occurrences(rule, s))
    return Fraction(hits, ant)


def rule_support(rule: IntervalRule, db: IntervalDatabase) -> Fraction:
    if not db.sequences:
        return Fraction(0)
    hits = sum(1 for s in db.sequences if find_occurrences(rule, s))
    return Fraction(hits, len(db.sequences))


@dataclass(frozen=True)
class DigitStep:
    digit: int
    rub: int
    expanded: bool
    # bound still attributable to the digits after this one
    remaining: int


def complement_plan(rows, minutil: int) -> list[DigitStep]:
    """Walk relation digits 0..6 for one extension label.

    ``rows`` holds one 7-vector per sequence: the best bound of an extension
    forming each digit with the anchor interval (0 when none does).  A digit
    is expanded when its summed bound reaches ``minutil``; the walk stops
    once the digits not yet tried cannot reach it any more.
    """
    rows = [list(r) for r in rows]
    steps = []
    for d in range(7):
        rub = sum(r[d] for r in rows)
        if not rub:
            continue
        rest = sum(max(r[d + 1:]) for r in rows) if d < 6 else 0
        steps.append(DigitStep(d, rub, rub >= minutil, rest))
        if rest < minutil:
            break
    return steps


def extension_digit_rows(
    rule: IntervalRule, db: IntervalDatabase, label: str, is_left: bool
) -> dict[int, list[int]]:
    """Per-sequence digit bound rows for extending ``rule`` with ``label``.

    The digit is the relation of the new interval to the last antecedent
    interval (left) or the last rule interval (right).  The bound of one
    candidate position is the occurrence utility plus the extendable
    utility from that position on; left extensions also count the right
    window.
    """
    k = len(rule.antecedent)
    out = {}
    for seq in db.sequences:
        occs = find_occurrences(rule, seq)
        if not occs:
            continue
        arr = build_array(seq)
        row = [0] * 7
        for occ in occs:
            pos = occ.positions
            window = extendable_intervals(arr, pos, k, is_left)
            anchor = pos[k - 1] if is_left else pos[-1]
            for p in window:
                if arr.labels[p] != label:
                    continue
                d = _rel(arr.st[anchor], arr.ft[anchor], arr.st[p], arr.ft[p])
                b = occ.utility + arr.window_sum(p, window.stop)
                if is_left:
                    b += arr.ru[pos[-1]]
                row[d] = max(row[d], b)
        if any(row):
            out[seq.sid] = row
    return out


# ---------------------------------------------------------------------------
# search


def _rel(s1: int, f1: int, s2: int, f2: int) -> int:
    # inlined classify_times; callers guarantee canonical order
    if f1 < s2:
        return 0
    if f1 == s2:
        return 1
    if s1 == s2:
        return 6 if f1 == f2 else 3
    if f2 < f1:
        return 4
    if f2 == f1:
        return 5
    return 2


class _Node:
    __slots__ = ("labels", "k", "digits", "occ", "ant_occ", "nant", "bound")

    def __init__(self, labels, k, digits, occ, ant_occ, nant, bound=None):
        self.labels = labels
        self.k = k
        # digits[j - 1]: relations of rule interval j to intervals 0..j-1
        self.digits = digits
        self.occ = occ
        self.ant_occ = ant_occ
        self.nant = nant
        self.bound = bound


class _Search:
    def __init__(self, arrays: list[ESequenceArray], n_sequences: int, minutil: int, cfg: MiningConfig):
        self.arrays = arrays
        self.n_sequences = n_sequences
        self.minutil = minutil
        self.cfg = cfg
        self.num = cfg.minconf.numerator
        self.den = cfg.minconf.denominator
        self.max_size = cfg.max_rule_size
        self.encoded = cfg.enable_encoded_relations
        self.complement = cfg.enable_complement_pruning
        self.check = cfg.check_invariants
        self.stats = MiningStats()
        self.rules: list[MinedRule] = []
        # suffix[i][p]: utility of positions p.. of sequence i
        self.suffix = [[u + r for u, r in zip(arr.utility, arr.ru)] for arr in arrays]
        self.positions: dict[str, dict[int, list[int]]] = defaultdict(dict)
        for i, arr in enumerate(arrays):
            for p, label in enumerate(arr.labels):
                self.positions[label].setdefault(i, []).append(p)

    def conf_ok(self, nseq: int, nant: int) -> bool:
        return nseq * self.den >= self.num * nant

    # -- seeds ---------------------------------------------------------------

    def seed_nodes(self, label: str) -> list[_Node]:
        """All 1x1 rules whose antecedent is ``label``, sorted by (consequent, digit)."""
        arrays = self.arrays
        ant_occ = {i: [(p,) for p in ps] for i, ps in self.positions[label].items()}
        groups: dict[tuple[str, int], dict[int, list[Occ]]] = defaultdict(dict)
        for i, ps in self.positions[label].items():
            arr = arrays[i]
            lab, st, ft, ut, nst = arr.labels, arr.st, arr.ft, arr.utility, arr.nst
            n = len(lab)
            for p in ps:
                sp, fp, up = st[p], ft[p], ut[p]
                for q in range(nst[p], n):
                    sq = st[q]
                    if fp < sq:
                        if self.encoded:
                            # every later interval starts later still: all before
                            for r in range(q, n):
                                g = groups[(lab[r], 0)]
                                g.setdefault(i, []).append(((p, r), up + ut[r]))
                            break
                        d = 0
                    else:
                        d = _rel(sp, fp, sq, ft[q])
                    g = groups[(lab[q], d)]
                    g.setdefault(i, []).append(((p, q), up + ut[q]))
        nant = len(ant_occ)
        return [
            _Node((label, c), 1, ((d,),), groups[(c, d)], ant_occ, nant)
            for c, d in sorted(groups)
        ]

    def run_label(self, label: str) -> None:
        for node in self.seed_nodes(label):
            self.stats.candidates_generated += 1
            self.visit(node, True)

    # -- node processing -----------------------------------------------------

    def visit(self, node: _Node, left_ok: bool) -> None:
        arrays = self.arrays
        k = node.k
        util = 0
        aul_ub = 0
        cul_ub = 0
        for i, occs in node.occ.items():
            arr = arrays[i]
            ru = arr.ru
            best_u = best_a = best_c = 0
            for pos, u in occs:
                if u > best_u:
                    best_u = u
                r = u + ru[pos[-1]]
                if r > best_c:
                    best_c = r
                if left_ok:
                    a = r + arr.window_sum(pos[k - 1] + 1, arr.sstp[pos[k]])
                    if a > best_a:
                        best_a = a
            util += best_u
            aul_ub += best_a
            cul_ub += best_c
        nseq = len(node.occ)
        if self.check and node.bound is not None and util > node.bound:
            raise InvariantError(f"utility {util} exceeds licensing bound {node.bound}")

        conf_ok = self.conf_ok(nseq, node.nant)
        if util >= self.minutil and conf_ok:
            self.emit(node, util, nseq)

        if self.max_size is not None and len(node.labels) >= self.max_size:
            return
        cap = node.bound
        if left_ok:
            if aul_ub >= self.minutil:
                self.extend_left(node, aul_ub if cap is None else min(cap, aul_ub))
            else:
                self.stats.pruned_by_lerspeu += 1
        if not conf_ok:
            self.stats.pruned_by_confidence += 1
        elif cul_ub >= self.minutil:
            self.extend_right(node, cul_ub if cap is None else min(cap, cul_ub))
        else:
            self.stats.pruned_by_rerspeu += 1

    def emit(self, node: _Node, util: int, nseq: int) -> None:
        k = node.k
        rule = IntervalRule._trusted(
            node.labels[:k], node.labels[k:], tuple(_code(row) for row in node.digits)
        )
        self.rules.append(
            MinedRule(
                rule=rule,
                utility=util,
                confidence=Fraction(nseq, node.nant),
                support=Fraction(nseq, self.n_sequences),
                seq_count=nseq,
            )
        )
        self.stats.rules_output += 1

    def _label_totals(self, node: _Node, is_left: bool) -> dict[str, int]:
        """Per extension label, the sum over sequences of the best occurrence bound.

        Labels below ``minutil`` are counted as pruned and left out.
        """
        arrays = self.arrays
        k = node.k
        totals: dict[str, int] = {}
        get = totals.get
        for i, occs in node.occ.items():
            arr = arrays[i]
            lab, suf = arr.labels, self.suffix[i]
            best: dict[str, int] | None = None
            for pos, u in occs:
                if is_left:
                    lo = pos[k - 1] + 1
                    hi = arr.sstp[pos[k]]
                    if hi <= lo:
                        continue
                    base = u + arr.ru[pos[-1]] - arr.ru[hi - 1]
                else:
                    lo = pos[-1] + 1
                    hi = len(lab)
                    base = u
                # suffix utility falls with position, so the first of each label wins
                first = {lab[p]: suf[p] for p in range(hi - 1, lo - 1, -1)}
                if len(occs) == 1:
                    for label, v in first.items():
                        totals[label] = get(label, 0) + base + v
                    break
                if best is None:
                    best = {label: base + v for label, v in first.items()}
                else:
                    for label, v in first.items():
                        if base + v > best.get(label, 0):
                            best[label] = base + v
            if best:
                for label, b in best.items():
                    totals[label] = get(label, 0) + b
        out = {}
        for label, total in totals.items():
            if total >= self.minutil:
                out[label] = total
            elif is_left:
                self.stats.pruned_by_lerspeu += 1
            else:
                self.stats.pruned_by_rerspeu += 1
        return out

    def _digit_plan(self, by_digit: dict, rows: dict, total: int) -> list[int]:
        """Digits to expand for one extension label, in order 0..6.

        ``by_digit`` maps each realised digit to its candidate entries,
        ``rows`` holds the per-sequence digit bounds and ``total`` the
        label's bound, already known to reach ``minutil``.  Updates stats.
        """
        present = sorted(by_digit)
        if not self.complement:
            return present
        if self.check and total != sum(max(row) for row in rows.values()):
            raise InvariantError("label bound disagrees with its digit split")

        steps = complement_plan(rows.values(), self.minutil)
        if self.check:
            remaining = total
            for step in steps:
                if step.remaining > remaining or step.rub > total:
                    raise InvariantError("complement accounting exceeded the label bound")
                remaining = step.remaining
        plan = [st.digit for st in steps if st.expanded]
        self.stats.pruned_by_complement += len(present) - len(plan)
        return plan

    def extend_left(self, node: _Node, cap: int) -> None:
        arrays = self.arrays
        k = node.k
        encoded = self.encoded
        # relations of the last antecedent interval to the earlier ones
        last_rel = node.digits[k - 2] if k >= 2 else ()
        totals = self._label_totals(node, True)
        for label in sorted(totals):
            by_digit: dict[int, list] = defaultdict(list)
            rows: dict[int, list[int]] = {}
            where = self.positions[label]
            for i, occs in node.occ.items():
                ps = where.get(i)
                if not ps:
                    continue
                arr = arrays[i]
                st, ft, suf, ru = arr.st, arr.ft, self.suffix[i], arr.ru
                row = None
                for pos, u in occs:
                    a = pos[k - 1]
                    hi = arr.sstp[pos[k]]
                    if a + 1 >= hi:
                        continue
                    base = u + ru[pos[-1]] - ru[hi - 1]
                    sa, fa = st[a], ft[a]
                    for p in ps[bisect_right(ps, a):bisect_left(ps, hi)]:
                        d = _rel(sa, fa, st[p], ft[p])
                        b = base + suf[p]
                        by_digit[d].append((i, pos, u, p, b))
                        if row is None:
                            row = rows[i] = [0] * 7
                        if b > row[d]:
                            row[d] = b
            plan = self._digit_plan(by_digit, rows, totals[label])
            if not plan:
                continue
            ant_groups = self._extend_antecedents(node, label, last_rel)
            for d in plan:
                groups: dict[tuple, dict[int, list[Occ]]] = defaultdict(dict)
                bounds: dict[tuple, dict[int, int]] = defaultdict(dict)
                for i, pos, u, p, b in by_digit[d]:
                    arr = arrays[i]
                    st, ft = arr.st, arr.ft
                    sp, fp = st[p], ft[p]
                    ant = []
                    for idx in range(k - 1):
                        if encoded and last_rel[idx] == 0:
                            ant.append(0)
                        else:
                            q = pos[idx]
                            ant.append(_rel(st[q], ft[q], sp, fp))
                    ant.append(d)
                    cons = []
                    zero = False
                    for q in pos[k:]:
                        if zero:
                            cons.append(0)
                        else:
                            r = _rel(sp, fp, st[q], ft[q])
                            cons.append(r)
                            zero = encoded and r == 0
                    key = (tuple(ant), tuple(cons))
                    g = groups[key]
                    g.setdefault(i, []).append(
                        (pos[:k] + (p,) + pos[k:], u + arr.utility[p])
                    )
                    if self.check and b > bounds[key].get(i, -1):
                        bounds[key][i] = b
                for key in sorted(groups):
                    ant, cons = key
                    ant_occ = ant_groups[ant]
                    digits = (
                        node.digits[: k - 1]
                        + (ant,)
                        + tuple(
                            old[:k] + (c,) + old[k:]
                            for old, c in zip(node.digits[k - 1:], cons)
                        )
                    )
                    child = _Node(
                        node.labels[:k] + (label,) + node.labels[k:],
                        k + 1,
                        digits,
                        groups[key],
                        ant_occ,
                        len(ant_occ),
                        min(cap, sum(bounds[key].values())) if self.check else None,
                    )
                    self.stats.candidates_generated += 1
                    self.visit(child, True)

    def _extend_antecedents(self, node: _Node, label: str, last_rel) -> dict:
        """Antecedent occurrences of ``node`` extended by ``label``, grouped by digit vector."""
        arrays = self.arrays
        k = node.k
        encoded = self.encoded
        out: dict[tuple, dict[int, list]] = defaultdict(dict)
        for i, aoccs in node.ant_occ.items():
            ps = self.positions[label].get(i)
            if not ps:
                continue
            arr = arrays[i]
            st, ft = arr.st, arr.ft
            for a in aoccs:
                last = a[-1]
                for p in ps:
                    if p <= last:
                        continue
                    sp, fp = st[p], ft[p]
                    dig = []
                    for idx in range(k - 1):
                        if encoded and last_rel[idx] == 0:
                            dig.append(0)
                        else:
                            q = a[idx]
                            dig.append(_rel(st[q], ft[q], sp, fp))
                    dig.append(_rel(st[last], ft[last], sp, fp))
                    out[tuple(dig)].setdefault(i, []).append(a + (p,))
        return out

    def extend_right(self, node: _Node, cap: int) -> None:
        arrays = self.arrays
        n = len(node.labels)
        encoded = self.encoded
        last_rel = node.digits[-1]
        totals = self._label_totals(node, False)
        parent_conf = Fraction(len(node.occ), node.nant) if self.check else None
        for label in sorted(totals):
            by_digit: dict[int, list] = defaultdict(list)
            rows: dict[int, list[int]] = {}
            where = self.positions[label]
            for i, occs in node.occ.items():
                ps = where.get(i)
                if not ps:
                    continue
                arr = arrays[i]
                st, ft, suf = arr.st, arr.ft, self.suffix[i]
                row = None
                for pos, u in occs:
                    last = pos[-1]
                    sl, fl = st[last], ft[last]
                    for p in ps[bisect_right(ps, last):]:
                        d = _rel(sl, fl, st[p], ft[p])
                        b = u + suf[p]
                        by_digit[d].append((i, pos, u, p, b))
                        if row is None:
                            row = rows[i] = [0] * 7
                        if b > row[d]:
                            row[d] = b
            plan = self._digit_plan(by_digit, rows, totals[label])
            for d in plan:
                groups: dict[tuple, dict[int, list[Occ]]] = defaultdict(dict)
                bounds: dict[tuple, dict[int, int]] = defaultdict(dict)
                for i, pos, u, p, b in by_digit[d]:
                    arr = arrays[i]
                    st, ft = arr.st, arr.ft
                    sp, fp = st[p], ft[p]
                    rel = []
                    for idx in range(n - 1):
                        if encoded and last_rel[idx] == 0:
                            rel.append(0)
                        else:
                            q = pos[idx]
                            rel.append(_rel(st[q], ft[q], sp, fp))
                    rel.append(d)
                    key = tuple(rel)
                    groups[key].setdefault(i, []).append((pos + (p,), u + arr.utility[p]))
                    if self.check and b > bounds[key].get(i, -1):
                        bounds[key][i] = b
                for key in sorted(groups):
                    child = _Node(
                        node.labels + (label,),
                        node.k,
                        node.digits + (key,),
                        groups[key],
                        None,
                        node.nant,
                        min(cap, sum(bounds[key].values())) if self.check else None,
                    )
                    if self.check and Fraction(len(child.occ), child.nant) > parent_conf:
                        raise InvariantError("confidence grew along a right extension")
                    self.stats.candidates_generated += 1
                    self.visit(child, False)


# ---------------------------------------------------------------------------
# driver


def _prepare(db: IntervalDatabase, minutil: int) -> tuple[list[ESequenceArray], int]:
    raw = [list(s.events) for s in db.sequences]
    kept, removed = _prune_rounds(raw, minutil)
    arrays = [
        build_array(ESequence(s.sid, tuple(evs)))
        for s, evs in zip(db.sequences, kept)
        if evs
    ]
    return arrays, removed


_WORKER_STATE: dict = {}


def _worker(labels: list[str]) -> tuple[list[MinedRule], MiningStats]:
    search = _Search(**_WORKER_STATE)
    for label in labels:
        search.run_label(label)
    return search.rules, search.stats


def mine(db: IntervalDatabase, cfg: MiningConfig) -> tuple[list[MinedRule], MiningStats]:
    """All rules with utility >= minutil and confidence >= minconf, canonically sorted."""
    t0 = time.perf_counter()
    minutil = cfg.resolve_minutil(db.total_utility)
    arrays, removed = _prepare(db, minutil)
    state = dict(arrays=arrays, n_sequences=len(db.sequences), minutil=minutil, cfg=cfg)
    labels = sorted({lab for arr in arrays for lab in arr.labels})

    stats = MiningStats(pruned_by_seu=removed)
    rules: list[MinedRule] = []
    threads = min(cfg.threads, max(1, len(labels)))
    if threads > 1 and "fork" in multiprocessing.get_all_start_methods():
        chunks = [labels[w::threads] for w in range(threads)]
        _WORKER_STATE.clear()
        _WORKER_STATE.update(state)
        try:
            ctx = multiprocessing.get_context("fork")
            with ctx.Pool(threads) as pool:
                parts = pool.map(_worker, chunks)
        finally:
            _WORKER_STATE.clear()
        for part_rules, part_stats in parts:
            rules.extend(part_rules)
            stats.merge(part_stats)
    else:
        search = _Search(**state)
        for label in labels:
            search.run_label(label)
        rules = search.rules
        stats.merge(search.stats)

    stats.wall_time = time.perf_counter() - t0
    return sort_rules(rules), stats


def seed_rules(db: IntervalDatabase, cfg: MiningConfig) -> list[tuple[IntervalRule, list[AULEntry], list[CULEntry]]]:
    """The 1x1 candidate rules of ``db`` with their utility lists.

    ``db`` is used as given (SEU pruning is the caller's business).
    """
    minutil = cfg.resolve_minutil(db.total_utility)
    arrays = [build_array(s) for s in db.sequences if len(s)]
    search = _Search(arrays, len(db.sequences), minutil, cfg)
    out = []
    for label in sorted(search.positions):
        for node in search.seed_nodes(label):
            rule = IntervalRule.from_digits(node.labels[:1], node.labels[1:], node.digits)
            aul = []
            cul = []
            for i in sorted(node.ant_occ):
                arr = arrays[i]
                occs = node.occ.get(i)
                if not occs:
                    aul.append(AULEntry(arr.sid, False, 0))
                    continue
                aul.append(AULEntry(arr.sid, True, max(_occurrence_bound(arr, p, u, 1) for p, u in occs)))
                cul.append(CULEntry(arr.sid, max(u + arr.ru[p[-1]] for p, u in occs)))
            out.append((rule, aul, cul))
    return out
