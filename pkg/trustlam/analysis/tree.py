"""
Reduction trees and exact output distributions.

The subtree rooted at a node only depends on the node's term, so sizes and
output distributions are folded over the DAG of distinct terms instead of the
materialised tree.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction

from trustlam.errors import NodeLimitError
from trustlam.syntax.ops import is_value, alpha_normal
from trustlam.syntax.printer import print_term
from trustlam.utils import frac2str
from trustlam.machine.reduce import alternatives

logger = logging.getLogger(__name__)

DEFAULT_NODE_LIMIT = 200000


@dataclass
class RTree:
    """
    Node of a reduction tree.

    Args:
        term (Term): Term at this node.
        children (list[tuple[Fraction, RTree]]): One edge per reduction
            alternative, in branch order. Empty at leaves (values).
    """
    term: object
    children: list = field(default_factory=list)

    def nodes(self):
        """All nodes in preorder."""
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(child for _, child in reversed(node.children))

    def size(self):
        return sum(1 for _ in self.nodes())

    def leaves(self):
        """``(leaf, probability)`` pairs, probability being the product of edge labels."""
        stack = [(self, Fraction(1))]
        while stack:
            node, prob = stack.pop()
            if not node.children:
                yield node, prob
            for p, child in reversed(node.children):
                stack.append((child, prob * p))

    def to_dict(self):
        return tree_to_dict(self)

    def to_dot(self):
        return tree_to_dot(self)


@dataclass
class OutputDist:
    """
    Exact distribution of the values a term reduces to.

    Args:
        entries (list[tuple[Term, Fraction]]): Pairwise non alpha-equivalent
            values with positive probabilities summing to 1.
    """
    entries: list

    def prob(self, value):
        """Probability of reaching a value alpha-equivalent to ``value``."""
        key = alpha_normal(value)
        return sum((p for v, p in self.entries if alpha_normal(v) == key), Fraction(0))

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def to_dict(self, decimal=False):
        return {"outputs": [{"value": print_term(v), "prob": frac2str(p, decimal)}
                            for v, p in self.entries]}


def fold_dag(t, leaf, node, env=None, ctx=None, limit=None):
    """
    Post-order fold over the distinct terms reachable from t.

    Args:
        t (Term): Root term.
        leaf (callable): ``leaf(value)`` result for values.
        node (callable): ``node(term, [(prob, child_result), ...])`` for non-values.
        limit (int): Max number of distinct non-value terms expanded.

    Returns:
        Result of the fold at t.

    Raises:
        NodeLimitError: more than ``limit`` distinct terms (``needed`` unknown).
    """
    memo, expanded = {}, {}
    stack = [t]
    while stack:
        u = stack[-1]
        if u in memo:
            stack.pop()
            continue
        if is_value(u):
            memo[u] = leaf(u)
            stack.pop()
            continue
        if u not in expanded:
            expanded[u] = alternatives(u, env, ctx)
            if limit is not None and len(expanded) > limit:
                raise NodeLimitError(limit, None)
            pending = [o.reduct for o in expanded[u] if o.reduct not in memo]
            if pending:
                stack.extend(reversed(pending))
                continue
        memo[u] = node(u, [(o.probability, memo[o.reduct]) for o in expanded[u]])
        stack.pop()
    logger.debug("folded %d distinct terms", len(memo))
    return memo[t]


def tree_size(t, env=None, ctx=None, limit=None):
    """
    Exact number of nodes of the reduction tree of t, without building it.

    Args:
        limit (int): Max number of distinct terms visited.
    """
    return fold_dag(t, lambda v: 1, lambda u, kids: 1 + sum(k for _, k in kids),
                    env, ctx, limit)


def build_tree(t, env=None, ctx=None, node_limit=DEFAULT_NODE_LIMIT):
    """
    Materialise the reduction tree of t: every node has one child per
    alternative of its call-by-name redex, leaves are values.

    Args:
        t (Term): Closed, well-typed term.
        env (SubtypeEnv): Subtype environment.
        ctx (dict): Variable context.
        node_limit (int): Max number of nodes.

    Returns:
        RTree

    Raises:
        NodeLimitError: the tree has more than ``node_limit`` nodes; ``needed``
            holds its exact size, counted over the shared subterms.
    """
    root = RTree(t)
    count = 1
    stack = [root]
    while stack:
        parent = stack.pop()
        if is_value(parent.term):
            continue
        for outcome in alternatives(parent.term, env, ctx):
            count += 1
            if count > node_limit:
                raise NodeLimitError(node_limit, tree_size(t, env, ctx))
            child = RTree(outcome.reduct)
            parent.children.append((outcome.probability, child))
            stack.append(child)
    logger.debug("reduction tree of %d nodes", count)
    return root


def output_distribution(t, env=None, ctx=None, limit=DEFAULT_NODE_LIMIT):
    """
    Exact output probabilities of t: each leaf weighs the product of the edge
    labels above it, and alpha-equivalent leaves are merged.

    Args:
        t (Term): Closed, well-typed term.
        env (SubtypeEnv): Subtype environment.
        ctx (dict): Variable context.
        limit (int): Max number of distinct terms expanded.

    Returns:
        OutputDist: values in order of first appearance (leftmost leaf first).
    """
    representatives = {}

    def leaf(v):
        key = alpha_normal(v)
        representatives.setdefault(key, v)
        return {key: Fraction(1)}

    def node(u, kids):
        out = {}
        for p, dist in kids:
            for key, q in dist.items():
                out[key] = out.get(key, Fraction(0)) + p * q
        return out

    dist = fold_dag(t, leaf, node, env, ctx, limit)
    return OutputDist([(representatives[k], p) for k, p in dist.items() if p > 0])


def _escape(text):
    return text.replace("\\", "\\\\").replace('"', '\\"')


def tree_to_dot(tree):
    """
    Graphviz rendering of a reduction tree. Node ids are preorder indices,
    node labels the printed terms and edge labels the exact probabilities.

    For example::

        trustlam tree coin_tree.tl --format dot > tree.gv
        dot -Tpng -O tree.gv
    """
    lines = ["digraph reduction_tree {", '\tnode [shape=box, fontname="monospace"];']
    ids = {}
    for i, node in enumerate(tree.nodes()):
        ids[id(node)] = i
        lines.append(f'\t{i} [label="{_escape(print_term(node.term))}"];')
    for node in tree.nodes():
        for p, child in node.children:
            lines.append(f'\t{ids[id(node)]} -> {ids[id(child)]} [label="{frac2str(p)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def tree_to_dict(tree, decimal=False):
    """
    Nested dict ``{"term": str, "children": [{"prob": "a/b", "tree": {...}}]}``.
    """
    out = {"term": print_term(tree.term), "children": []}
    stack = [(tree, out)]
    while stack:
        node, rendered = stack.pop()
        for p, child in node.children:
            sub = {"term": print_term(child.term), "children": []}
            rendered["children"].append({"prob": frac2str(p, decimal), "tree": sub})
            stack.append((child, sub))
    return out
