"""
Exact analysis: reduction trees, output distributions, confidence values and
conditional probabilities.
"""
from trustlam.analysis.tree import (
        RTree, OutputDist, DEFAULT_NODE_LIMIT,
        build_tree, tree_size, output_distribution, tree_to_dot, tree_to_dict, fold_dag,
        )
from trustlam.analysis.confidence import (
        ConfidenceCurve, Verdict, DEFAULT_EPSILON, DEFAULT_ENUMERATION_LIMIT,
        bucket_probs, confidence, confidence_via_tree, confidence_curve,
        compare_confidence, trust_target,
        )
from trustlam.analysis.conditional import (
        make_conditional, conditional_prob, first_prob, joint_prob, disjunction_prob,
        make_dependent_conditional, dependent_prob,
        )
