"""Symmetry parameters of generalized Mycielskian graphs and a harness that checks known results about them."""
from .graph import Graph, parse_edge_list, parse_graph6
from .mycielskian import MycGraph, generalized_mycielskian, mycielskian
from .params import cost_2_distinguishing, determining_number, distinguishing_index, distinguishing_number

__all__ = [
    'Graph', 'MycGraph', 'parse_edge_list', 'parse_graph6', 'generalized_mycielskian', 'mycielskian',
    'determining_number', 'distinguishing_number', 'cost_2_distinguishing', 'distinguishing_index',
]
