"""Efficient domination and related problems on (dually) chordal graphs and hypergraphs."""
from .certificates import (INFEASIBLE, LIMITED, SOLUTION, EdCertificate, EedCertificate,
                           MimCertificate, MwisCertificate, XcCertificate)
from .ed import ed_dually_chordal, ed_via_square, solve_ed, verify_ed
from .eed import eed_structural_screen, solve_eed, solve_mim, verify_eed, verify_mim
from .errors import (EffdomError, GateExceeded, InputError, MethodNotApplicable,
                     NotAlphaAcyclic, NotChordal)
from .gadgets import split_square_gadget, universal_vertex_gadget, xc_gadget
from .generators import (gen_alpha_acyclic, gen_chordal, gen_dually_chordal, gen_hypertree,
                         gen_random_graph, gen_random_hypergraph)
from .graph import (Graph, LabeledLineGraph, build_graph, is_independent_set, line_graph,
                    neighborhood_weights, square)
from .hyper import (solve_exact_cover, solve_hyper_ed, solve_hyper_eed, solve_hyper_mim,
                    verify_exact_cover)
from .hypergraph import (Hypergraph, JoinTree, build_hypergraph, clique_hypergraph,
                         closed_neighborhood_hypergraph, dual, hyper_line_graph,
                         is_alpha_acyclic, is_conformal, is_helly, is_hypertree, join_tree,
                         two_section)
from .io import format_instance, parse_graph, parse_hypergraph, parse_instance
from .mwis import mwis_chordal
from .oracles import (OracleGate, brute_ed, brute_eed, brute_exact_cover, brute_mim,
                      brute_mwis)
from .orderings import compute_mno, is_chordal, is_dually_chordal, is_peo, mcs, verify_mno
from .report import ClassReport
from .rng import SeededRng

__version__ = "0.1.0"
