"""Rewriting and truncated Buchberger completion for shuffle operads.

Rules are monic: a lead monomial strictly greater than every tail
monomial.  Completion processes critical pairs arity by arity; a basis
"completed through N" certifies normal-form counts only for arities up
to N, and every report records that bound.  The reduction strategy is
pinned for reproducible outputs: greatest reducible monomial first,
first matching rule in the canonically sorted rule list, leftmost-
innermost occurrence.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .trees import (BudgetExceeded, ShuffleError, TreeElement, TreeMonomial,
                    common_multiples, count_monomials, enumerate_monomials,
                    find_divisors, first_divisor, node_key, replace_at, sort_key)

ZERO = Fraction(0)
ONE = Fraction(1)

DEFAULT_MAX_ARITY = 7
DEFAULT_BUDGET = 2_000_000


@dataclass(frozen=True)
class RewriteRule:
    lead: TreeMonomial
    tail: TreeElement

    def as_element(self):
        return TreeElement({self.lead: ONE}, self.lead.arity) - self.tail


@dataclass(frozen=True)
class GroebnerBasis:
    signature: object
    rules: tuple
    completed_through: int
    interreduced: bool = True

    def rules_of_arity(self, n):
        return [r for r in self.rules if r.lead.arity == n]


@dataclass
class CompletionReport:
    completed_through: int
    rules_by_arity: dict = field(default_factory=dict)
    s_elements: int = 0
    dims: dict = field(default_factory=dict)
    weight_dims: dict = field(default_factory=dict)

    def to_jsonable(self):
        out = {
            "completed_through": self.completed_through,
            "rules_by_arity": {str(k): v for k, v in sorted(self.rules_by_arity.items())},
            "s_elements": self.s_elements,
            "dims": {str(k): v for k, v in sorted(self.dims.items())},
        }
        if self.weight_dims:
            out["weight_dims"] = {
                str(n): {str(w): c for w, c in sorted(table.items())}
                for n, table in sorted(self.weight_dims.items())}
        return out


def _rule_order_key(sig):
    return lambda rule: (rule.lead.arity, sort_key(sig, rule.lead.node))


def make_rule(elem, sig):
    """Monic rewrite rule lead -> tail from a nonzero element."""
    lead, coeff = elem.leading(sig)
    monic = elem.scale(ONE / coeff)
    tail_terms = {m: -c for m, c in monic.terms.items() if m != lead}
    return RewriteRule(lead, TreeElement(tail_terms, elem.arity))


def _find_reduction(mono, rules):
    for rule in rules:
        if rule.lead.arity > mono.arity:
            continue
        emb = first_divisor(mono, rule.lead)
        if emb is not None:
            return rule, emb
    return None


def normal_form(elem, basis):
    """Fully reduce an element by the basis rules.

    Unique within the completed arity range; deterministic everywhere
    by the pinned strategy.
    """
    sig = basis.signature
    rules = basis.rules
    work = dict(elem.terms)
    out = {}
    while work:
        mono = max(work, key=lambda m: sort_key(sig, m.node))
        coeff = work.pop(mono)
        if coeff == 0:
            continue
        hit = _find_reduction(mono, rules)
        if hit is None:
            out[mono] = out.get(mono, ZERO) + coeff
            continue
        rule, emb = hit
        for tmono, tcoeff in rule.tail.terms.items():
            new = replace_at(mono, emb, tmono)
            val = work.get(new, ZERO) + coeff * tcoeff
            if val == 0:
                work.pop(new, None)
            else:
                work[new] = val
    return TreeElement(out, elem.arity)


_CM_CACHE = {}


def _cached_multiples(lead1, lead2):
    key = (lead1.node, lead2.node)
    hit = _CM_CACHE.get(key)
    if hit is None:
        hit = common_multiples(lead1, lead2)
        _CM_CACHE[key] = hit
    return hit


def _element_key(sig, elem):
    return tuple(sorted((sort_key(sig, m.node), c) for m, c in elem.terms.items()))


def critical_pairs(basis, arity):
    """S-elements at the given arity from all overlapping lead pairs."""
    sig = basis.signature
    rules = sorted(basis.rules, key=_rule_order_key(sig))
    out = []
    for i, ri in enumerate(rules):
        for j in range(i, len(rules)):
            rj = rules[j]
            for mono, e1, e2 in _cached_multiples(ri.lead, rj.lead):
                if mono.arity != arity:
                    continue
                if i == j and e1 == e2:
                    continue
                a = TreeElement({replace_at(mono, e1, t): c
                                 for t, c in ri.tail.terms.items()}, arity)
                b = TreeElement({replace_at(mono, e2, t): c
                                 for t, c in rj.tail.terms.items()}, arity)
                out.append((mono, a - b))
    out.sort(key=lambda pair: (sort_key(sig, pair[0].node),
                               _element_key(sig, pair[1])))
    return [s for _, s in out]


def _interreduce(rules, sig, bound):
    """Reduce every tail by the other rules until stable."""
    rules = sorted(rules, key=_rule_order_key(sig))
    changed = True
    while changed:
        changed = False
        for i, rule in enumerate(rules):
            others = GroebnerBasis(sig, tuple(r for j, r in enumerate(rules) if j != i),
                                   bound, False)
            new_tail = normal_form(rule.tail, others)
            if new_tail != rule.tail:
                rules[i] = RewriteRule(rule.lead, new_tail)
                changed = True
    return tuple(sorted(rules, key=_rule_order_key(sig)))


def complete(sig, relations, max_arity=None, budget=DEFAULT_BUDGET, with_dims=True):
    """Truncated Buchberger completion.

    relations: arity-homogeneous TreeElements of arity >= 3.  Returns a
    basis complete through max_arity together with a report; the output
    does not depend on the input ordering.
    """
    if max_arity is None:
        max_arity = DEFAULT_MAX_ARITY
    by_arity = {}
    for rel in relations:
        if rel.is_zero():
            continue
        if rel.arity < 3:
            raise ShuffleError("relations must have arity at least 3")
        if rel.arity > max_arity:
            raise ShuffleError(
                f"relation arity {rel.arity} beyond completion bound {max_arity}")
        by_arity.setdefault(rel.arity, []).append(rel)

    report = CompletionReport(completed_through=max_arity)
    rules = []
    for n in range(3, max_arity + 1):
        if count_monomials(sig, n) > budget:
            raise BudgetExceeded(
                f"arity {n} needs {count_monomials(sig, n)} monomials, budget {budget}")
        basis = GroebnerBasis(sig, tuple(rules), max_arity, False)
        pending = list(by_arity.get(n, []))
        pending.extend(critical_pairs(basis, n))
        report.s_elements += len(pending)
        pending.sort(key=lambda e: _element_key(sig, e))
        added = 0
        for elem in pending:
            basis = GroebnerBasis(sig, tuple(rules), max_arity, False)
            nf = normal_form(elem, basis)
            if nf.is_zero():
                continue
            rules.append(make_rule(nf, sig))
            added += 1
        if added:
            rules = list(_interreduce(rules, sig, max_arity))
        report.rules_by_arity[n] = added
    final = GroebnerBasis(sig, tuple(sorted(rules, key=_rule_order_key(sig))),
                          max_arity, True)
    if with_dims:
        for n in range(1, max_arity + 1):
            report.dims[n] = _count_normal(final, n, budget)
        if sig.is_graded():
            for n in range(1, max_arity + 1):
                report.weight_dims[n] = _count_normal(final, n, budget, per_weight=True)
    return final, report


def _gen_counts(node, ids):
    counts = dict.fromkeys(ids, 0)
    stack = [node]
    while stack:
        cur = stack.pop()
        if isinstance(cur, int):
            continue
        counts[cur[0]] += 1
        stack.append(cur[1])
        stack.append(cur[2])
    return counts


def _count_normal(basis, n, budget=DEFAULT_BUDGET, per_weight=False):
    sig = basis.signature
    ids = sig.ids
    leads = [(r.lead, _gen_counts(r.lead.node, ids)) for r in basis.rules
             if r.lead.arity <= n]
    table = {}
    count = 0
    for mono in enumerate_monomials(sig, n, budget=budget):
        counts = _gen_counts(mono.node, ids)
        reducible = False
        for lead, lcounts in leads:
            if any(lcounts[g] > counts[g] for g in ids):
                continue
            if first_divisor(mono, lead) is not None:
                reducible = True
                break
        if reducible:
            continue
        if per_weight:
            w = mono.weight(sig)
            table[w] = table.get(w, 0) + 1
        else:
            count += 1
    return table if per_weight else count


def component_dims(basis, up_to, per_weight=False, budget=DEFAULT_BUDGET):
    """Normal-monomial counts through up_to (per weight if requested)."""
    if up_to > basis.completed_through:
        raise ShuffleError(
            f"basis completed through {basis.completed_through}, cannot count at {up_to}")
    if per_weight:
        return {n: _count_normal(basis, n, budget, per_weight=True)
                for n in range(1, up_to + 1)}
    return [_count_normal(basis, n, budget) for n in range(1, up_to + 1)]


def quadratic_gb_certificate(sig, relations, budget=DEFAULT_BUDGET):
    """Certify that the interreduced quadratic rules form a Groebner basis.

    True iff every arity-4 critical pair of the echelonized arity-3
    rules reduces to zero; otherwise returns the first surviving
    S-element as a witness.
    """
    for rel in relations:
        if not rel.is_zero() and rel.arity != 3:
            raise ShuffleError("quadratic certificate needs arity-3 relations only")
    rules = []
    pending = sorted((r for r in relations if not r.is_zero()),
                     key=lambda e: _element_key(sig, e))
    for elem in pending:
        basis = GroebnerBasis(sig, tuple(rules), 3, False)
        nf = normal_form(elem, basis)
        if not nf.is_zero():
            rules.append(make_rule(nf, sig))
    rules = _interreduce(list(rules), sig, 3)
    basis = GroebnerBasis(sig, tuple(rules), 4, True)
    for s in critical_pairs(basis, 4):
        nf = normal_form(s, basis)
        if not nf.is_zero():
            return False, nf
    return True, None


def brute_force_dims(sig, relations, up_to, budget=DEFAULT_BUDGET):
    """Component dimensions by linear algebra on relation consequences.

    Independent oracle for the completion path: the ideal component at
    arity n is spanned by the elements "monomial with one embedded
    divisor occurrence replaced by a relation", over all monomials and
    all occurrences of a fixed representative monomial of each
    relation.  Only structural substitution is used; no reduction, no
    critical pairs.
    """
    relations = [r for r in relations if not r.is_zero()]
    dims = []
    for n in range(1, up_to + 1):
        monos = enumerate_monomials(sig, n, budget=budget)
        index = {m.node: i for i, m in enumerate(monos)}
        rows = []
        for rel in relations:
            if rel.arity > n:
                continue
            rep = min(rel.terms, key=lambda m: node_key(m.node))
            for parent in monos:
                for emb in find_divisors(parent, rep):
                    row = [ZERO] * len(monos)
                    for mono, coeff in rel.terms.items():
                        replaced = replace_at(parent, emb, mono)
                        row[index[replaced.node]] += coeff
                    rows.append(row)
        dims.append(len(monos) - linalg.rank(rows))
    return dims
